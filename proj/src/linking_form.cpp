#include "knotcord/linking_form.hpp"

#include "knotcord/number_theory.hpp"
#include "knotcord/smith.hpp"

namespace knotcord {

mpq_class mod_one(const mpq_class& q) {
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return q - mpq_class(fl);
}

LinkingForm::LinkingForm(FiniteAbelianGroup carrier,
                         std::vector<std::vector<mpz_class>> generators,
                         std::vector<std::vector<mpq_class>> gram)
    : carrier_(std::move(carrier)), generators_(std::move(generators)), gram_(std::move(gram)) {
    const std::size_t r = carrier_.invariant_factors().size();
    if (generators_.size() != r || gram_.size() != r)
        throw InternalError("linking form shape mismatch");
    for (const auto& row : gram_)
        if (row.size() != r) throw InternalError("linking form Gram matrix not square");
}

mpq_class LinkingForm::evaluate(const std::vector<mpz_class>& x,
                                const std::vector<mpz_class>& y) const {
    if (x.size() != gram_.size() || y.size() != gram_.size())
        throw InputError("element coefficient count does not match generator count");
    mpq_class acc(0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < y.size(); ++j)
            acc += mpq_class(x[i] * y[j]) * gram_[i][j];
    }
    return mod_one(acc);
}

bool LinkingForm::is_symmetric() const {
    for (std::size_t i = 0; i < gram_.size(); ++i)
        for (std::size_t j = i + 1; j < gram_.size(); ++j)
            if (mod_one(gram_[i][j]) != mod_one(gram_[j][i])) return false;
    return true;
}

bool LinkingForm::is_nonsingular(std::uint64_t budget) const {
    const auto& factors = carrier_.invariant_factors();
    const std::size_t r = factors.size();
    for (const auto& [p, exps] : carrier_.primary_decomposition()) {
        // p-part generators: h_i = (d_i / p^{e_i}) g_i for factors with p | d_i.
        std::vector<std::size_t> idx;
        std::vector<mpz_class> cofactor, order;
        std::uint64_t part_size = 1;
        for (std::size_t i = 0; i < r; ++i) {
            mpz_class d = factors[i], pe(1);
            while (d % p == 0) {
                d /= p;
                pe *= p;
            }
            if (pe == 1) continue;
            idx.push_back(i);
            cofactor.push_back(d);
            order.push_back(pe);
            if (!pe.fits_ulong_p() || part_size > budget / pe.get_ui())
                throw BudgetExceeded("primary part too large for the nonsingularity sweep",
                                     "elements > " + std::to_string(budget));
            part_size *= pe.get_ui();
        }
        // x = sum c_k h_k over all coefficient tuples; singular iff some
        // nonzero x pairs integrally with every p-part generator.
        std::vector<mpz_class> c(idx.size(), 0);
        for (std::uint64_t count = 1; count < part_size; ++count) {
            std::size_t k = 0;
            while (true) {
                c[k] += 1;
                if (c[k] < order[k]) break;
                c[k] = 0;
                ++k;
            }
            std::vector<mpz_class> x(r, 0);
            for (std::size_t k2 = 0; k2 < idx.size(); ++k2) x[idx[k2]] = c[k2] * cofactor[k2];
            bool all_integral = true;
            for (std::size_t j = 0; j < idx.size() && all_integral; ++j) {
                std::vector<mpz_class> h(r, 0);
                h[idx[j]] = cofactor[j];
                if (evaluate(x, h) != 0) all_integral = false;
            }
            if (all_integral) return false;
        }
    }
    return true;
}

LinkingForm linking_form(const SeifertMatrix& v) {
    const std::size_t n = v.size();
    if (n == 0) return LinkingForm(FiniteAbelianGroup{}, {}, {});

    const IntMatrix a = v.symmetrized();
    const SNFResult snf = smith_normal_form(a);
    const auto ainv = a.inverse_rational();

    std::vector<mpz_class> factors;
    std::vector<std::vector<mpz_class>> gens;
    const auto diag = snf.diagonal();
    for (std::size_t i = 0; i < diag.size(); ++i) {
        if (diag[i] <= 1) continue;
        factors.push_back(diag[i]);
        std::vector<mpz_class> g(n);
        for (std::size_t r = 0; r < n; ++r) g[r] = snf.Uinv.at(r, i);
        gens.push_back(std::move(g));
    }

    const std::size_t rank = gens.size();
    std::vector<std::vector<mpq_class>> gram(rank, std::vector<mpq_class>(rank));
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < rank; ++j) {
            mpq_class acc(0);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c)
                    acc += mpq_class(gens[i][r] * gens[j][c]) * ainv[r][c];
            gram[i][j] = mod_one(-acc);
        }

    return LinkingForm(FiniteAbelianGroup::from_invariant_factors(std::move(factors)),
                       std::move(gens), std::move(gram));
}

Character character_of(const std::vector<mpz_class>& x, const LinkingForm& form) {
    const auto& factors = form.carrier().invariant_factors();
    const std::size_t r = factors.size();
    if (x.size() != r) throw InputError("element coefficient count does not match carrier rank");

    std::vector<mpq_class> raw(r);
    mpz_class modulus(1);
    for (std::size_t j = 0; j < r; ++j) {
        std::vector<mpz_class> e(r, 0);
        e[j] = 1;
        raw[j] = form.evaluate(x, e);
        mpz_lcm(modulus.get_mpz_t(), modulus.get_mpz_t(), raw[j].get_den_mpz_t());
    }

    Character chi;
    chi.modulus = modulus;
    chi.values.resize(r);
    for (std::size_t j = 0; j < r; ++j) {
        chi.values[j] = raw[j].get_num() * (modulus / raw[j].get_den());
        // the generator's order must annihilate the value
        if ((chi.values[j] * factors[j]) % modulus != 0)
            throw InternalError("character is not well defined on the carrier");
    }
    chi.self_linking = form.evaluate(x, x);
    return chi;
}

} // namespace knotcord
