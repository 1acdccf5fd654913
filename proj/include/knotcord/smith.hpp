#pragma once

#include "knotcord/abelian_group.hpp"
#include "knotcord/int_matrix.hpp"

namespace knotcord {

/// U * M * W = D with U, W unimodular and D diagonal, entries nonnegative,
/// each dividing the next.
struct SNFResult {
    IntMatrix D;
    IntMatrix U;
    IntMatrix W;
    /// U^-1; its columns restricted to nontrivial diagonal entries generate
    /// the cokernel summands.
    IntMatrix Uinv;

    /// Diagonal of D.
    std::vector<mpz_class> diagonal() const;
};

/// Deterministic Smith normal form: pivots are chosen by smallest nonzero
/// absolute value, ties broken by lowest (row, col) index.
SNFResult smith_normal_form(const IntMatrix& m);

/// Z^n / im(M) for square nonsingular M; invariant factors are the diagonal
/// entries of the SNF that exceed 1. Throws SingularPresentation if det = 0.
FiniteAbelianGroup cokernel(const IntMatrix& m);

} // namespace knotcord
