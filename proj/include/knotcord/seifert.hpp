#pragma once

#include "knotcord/abelian_group.hpp"
#include "knotcord/int_matrix.hpp"
#include "knotcord/polynomial.hpp"

namespace knotcord {

/// Square integer matrix V of even size 2g with det(V - V^T) = 1.
/// The 0x0 matrix is the unknot.
class SeifertMatrix {
public:
    SeifertMatrix() = default;
    /// Throws SeifertFormError naming the violated invariant.
    explicit SeifertMatrix(IntMatrix v);

    const IntMatrix& matrix() const { return v_; }
    std::size_t size() const { return v_.rows(); }
    std::size_t genus() const { return v_.rows() / 2; }
    IntMatrix symmetrized() const { return v_ + v_.transpose(); }

private:
    IntMatrix v_;
};

/// det(V - t V^T), sign-normalized to a positive leading coefficient.
IntPolynomial alexander_polynomial(const SeifertMatrix& v);

/// Seifert matrix [[a, 1], [0, -1]] of the a-twisted double of a knot.
SeifertMatrix twisted_double_seifert(const mpz_class& a);

/// Cokernel of V + V^T; the order equals |Delta(-1)| and is always odd.
FiniteAbelianGroup double_cover_homology(const SeifertMatrix& v);

/// Two-bridge knot K(p, q): cyclic double-cover homology Z_p with linking
/// value q/p on the generator.
struct TwoBridgeKnot {
    mpz_class p;
    mpz_class q;
    FiniteAbelianGroup homology;
    mpq_class linking_value;
};

/// Requires p odd >= 3, 0 < q < p, gcd(p, q) = 1; else InvalidBridgeParams.
TwoBridgeKnot two_bridge(const mpz_class& p, const mpz_class& q);

} // namespace knotcord
