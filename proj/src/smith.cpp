#include "knotcord/smith.hpp"

#include <cstdlib>

namespace knotcord {

std::vector<mpz_class> SNFResult::diagonal() const {
    const std::size_t n = std::min(D.rows(), D.cols());
    std::vector<mpz_class> d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = D.at(i, i);
    return d;
}

namespace {

// Smallest nonzero |entry| of D[k.., k..]; first hit in row-major order wins.
bool locate_pivot(const IntMatrix& d, std::size_t k, std::size_t& pr, std::size_t& pc) {
    bool found = false;
    mpz_class best;
    for (std::size_t i = k; i < d.rows(); ++i)
        for (std::size_t j = k; j < d.cols(); ++j) {
            if (d.at(i, j) == 0) continue;
            mpz_class a = abs(d.at(i, j));
            if (!found || a < best) {
                found = true;
                best = a;
                pr = i;
                pc = j;
            }
        }
    return found;
}

bool cross_clear(const IntMatrix& d, std::size_t k) {
    for (std::size_t i = k + 1; i < d.rows(); ++i)
        if (d.at(i, k) != 0) return false;
    for (std::size_t j = k + 1; j < d.cols(); ++j)
        if (d.at(k, j) != 0) return false;
    return true;
}

} // namespace

SNFResult smith_normal_form(const IntMatrix& m) {
    SNFResult r;
    r.D = m;
    r.U = IntMatrix::identity(m.rows());
    r.Uinv = IntMatrix::identity(m.rows());
    r.W = IntMatrix::identity(m.cols());
    IntMatrix& d = r.D;

    const std::size_t nmin = std::min(m.rows(), m.cols());
    for (std::size_t k = 0; k < nmin; ++k) {
        std::size_t pr = k, pc = k;
        if (!locate_pivot(d, k, pr, pc)) break; // remaining block is zero

        while (true) {
            d.swap_rows(k, pr);
            r.U.swap_rows(k, pr);
            r.Uinv.swap_cols(k, pr);
            d.swap_cols(k, pc);
            r.W.swap_cols(k, pc);

            for (std::size_t i = k + 1; i < d.rows(); ++i) {
                if (d.at(i, k) == 0) continue;
                const mpz_class q = d.at(i, k) / d.at(k, k); // truncated
                d.add_row_multiple(i, k, -q);
                r.U.add_row_multiple(i, k, -q);
                r.Uinv.add_col_multiple(k, i, q);
            }
            for (std::size_t j = k + 1; j < d.cols(); ++j) {
                if (d.at(k, j) == 0) continue;
                const mpz_class q = d.at(k, j) / d.at(k, k);
                d.add_col_multiple(j, k, -q);
                r.W.add_col_multiple(j, k, -q);
            }

            if (!cross_clear(d, k)) {
                locate_pivot(d, k, pr, pc);
                continue;
            }

            // Pivot divides everything below-right, or pull an offender in.
            bool fixed = true;
            for (std::size_t i = k + 1; i < d.rows() && fixed; ++i)
                for (std::size_t j = k + 1; j < d.cols() && fixed; ++j)
                    if (d.at(i, j) % d.at(k, k) != 0) {
                        d.add_row_multiple(k, i, 1);
                        r.U.add_row_multiple(k, i, 1);
                        r.Uinv.add_col_multiple(i, k, -1);
                        fixed = false;
                    }
            if (fixed) break;
            locate_pivot(d, k, pr, pc);
        }

        if (d.at(k, k) < 0) {
            d.negate_row(k);
            r.U.negate_row(k);
            for (std::size_t i = 0; i < r.Uinv.rows(); ++i) r.Uinv.at(i, k) = -r.Uinv.at(i, k);
        }
    }
    return r;
}

FiniteAbelianGroup cokernel(const IntMatrix& m) {
    if (!m.is_square()) throw InputError("cokernel expects a square presentation matrix");
    const SNFResult snf = smith_normal_form(m);
    std::vector<mpz_class> factors;
    for (const mpz_class& di : snf.diagonal()) {
        if (di == 0)
            throw SingularPresentation("presentation matrix has determinant zero");
        if (di > 1) factors.push_back(di);
    }
    return FiniteAbelianGroup::from_invariant_factors(std::move(factors));
}

} // namespace knotcord
