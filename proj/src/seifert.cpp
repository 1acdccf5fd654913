#include "knotcord/seifert.hpp"

#include "knotcord/smith.hpp"

namespace knotcord {

SeifertMatrix::SeifertMatrix(IntMatrix v) : v_(std::move(v)) {
    if (!v_.is_square()) throw SeifertFormError("Seifert matrix must be square");
    if (v_.rows() % 2 != 0) throw SeifertFormError("Seifert matrix must have even size");
    const mpz_class skew_det = (v_ - v_.transpose()).determinant();
    if (skew_det != 1)
        throw SeifertFormError("det(V - V^T) = 1 violated (det = " + skew_det.get_str() + ")");
}

IntPolynomial alexander_polynomial(const SeifertMatrix& v) {
    const std::size_t n = v.size();
    if (n == 0) return IntPolynomial{1};

    const IntMatrix& a = v.matrix();
    const IntMatrix at = a.transpose();

    // det(V - tV^T) has degree <= n; evaluate at n+1 points and interpolate.
    std::vector<mpz_class> xs(n + 1);
    for (std::size_t j = 0; j < xs.size(); ++j) {
        const long step = static_cast<long>((j + 1) / 2);
        xs[j] = (j % 2 == 1) ? mpz_class(step) : mpz_class(-step);
    }
    std::vector<mpz_class> ys(xs.size());
    for (std::size_t j = 0; j < xs.size(); ++j) {
        IntMatrix e(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) e.at(r, c) = a.at(r, c) - xs[j] * at.at(r, c);
        ys[j] = e.determinant();
    }

    std::vector<mpq_class> acc(xs.size(), mpq_class(0));
    for (std::size_t j = 0; j < xs.size(); ++j) {
        // y_j * prod_{i != j} (t - x_i) / (x_j - x_i)
        std::vector<mpq_class> basis{mpq_class(1)};
        mpq_class denom(1);
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (i == j) continue;
            basis.push_back(0);
            for (std::size_t k = basis.size() - 1; k > 0; --k)
                basis[k] = basis[k - 1] - mpq_class(xs[i]) * basis[k];
            basis[0] = -mpq_class(xs[i]) * basis[0];
            denom *= mpq_class(xs[j] - xs[i]);
        }
        const mpq_class scale = mpq_class(ys[j]) / denom;
        for (std::size_t k = 0; k < basis.size(); ++k) acc[k] += scale * basis[k];
    }

    std::vector<mpz_class> coeffs(acc.size());
    for (std::size_t k = 0; k < acc.size(); ++k) {
        if (acc[k].get_den() != 1)
            throw InternalError("Alexander polynomial interpolation produced a non-integer");
        coeffs[k] = acc[k].get_num();
    }
    IntPolynomial delta = IntPolynomial(std::move(coeffs)).sign_normalized();
    const mpz_class at_one = delta.eval(1);
    if (at_one != 1 && at_one != -1)
        throw InternalError("Alexander polynomial violates Delta(1) = +-1");
    return delta;
}

SeifertMatrix twisted_double_seifert(const mpz_class& a) {
    IntMatrix v(2, 2);
    v.at(0, 0) = a;
    v.at(0, 1) = 1;
    v.at(1, 0) = 0;
    v.at(1, 1) = -1;
    return SeifertMatrix(std::move(v));
}

FiniteAbelianGroup double_cover_homology(const SeifertMatrix& v) {
    // V + V^T is nonsingular for a valid Seifert matrix since |det| = |Delta(-1)| is odd.
    return cokernel(v.symmetrized());
}

TwoBridgeKnot two_bridge(const mpz_class& p, const mpz_class& q) {
    if (p < 3 || p % 2 == 0)
        throw InvalidBridgeParams("two-bridge parameter p must be an odd integer >= 3");
    if (q <= 0 || q >= p)
        throw InvalidBridgeParams("two-bridge parameter q must satisfy 0 < q < p");
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    if (g != 1) throw InvalidBridgeParams("two-bridge parameters must be coprime");
    TwoBridgeKnot k;
    k.p = p;
    k.q = q;
    k.homology = FiniteAbelianGroup::from_invariant_factors({p});
    k.linking_value = mpq_class(q, p);
    k.linking_value.canonicalize();
    return k;
}

} // namespace knotcord
