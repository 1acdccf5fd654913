#pragma once

#include <cstdint>
#include <vector>

#include "knotcord/abelian_group.hpp"
#include "knotcord/int_matrix.hpp"
#include "knotcord/seifert.hpp"

namespace knotcord {

/// Rational reduced into [0, 1).
mpq_class mod_one(const mpq_class& q);

/// Symmetric Q/Z-valued pairing on a finite abelian group, recorded as an
/// exact-rational Gram matrix on a fixed generator list.
class LinkingForm {
public:
    LinkingForm() = default;
    LinkingForm(FiniteAbelianGroup carrier, std::vector<std::vector<mpz_class>> generators,
                std::vector<std::vector<mpq_class>> gram);

    const FiniteAbelianGroup& carrier() const { return carrier_; }
    /// Generators as integer vectors in the presentation lattice; one per
    /// invariant factor.
    const std::vector<std::vector<mpz_class>>& generators() const { return generators_; }
    const std::vector<std::vector<mpq_class>>& gram() const { return gram_; }

    /// Pairing of two elements given by generator coefficients, mod 1.
    mpq_class evaluate(const std::vector<mpz_class>& x, const std::vector<mpz_class>& y) const;

    bool is_symmetric() const;
    /// Brute-force adjoint-injectivity check on every primary part.
    /// Throws BudgetExceeded if some primary part exceeds `budget` elements.
    bool is_nonsingular(std::uint64_t budget = 1000000) const;

private:
    FiniteAbelianGroup carrier_;
    std::vector<std::vector<mpz_class>> generators_;
    std::vector<std::vector<mpq_class>> gram_;
};

/// Linking form of the double branched cover: Gram matrix -(V + V^T)^{-1}
/// expressed on the Smith-basis generators of the cokernel, entries mod 1.
LinkingForm linking_form(const SeifertMatrix& v);

/// Character on the carrier obtained by linking with a fixed element.
struct Character {
    /// Order of the character's image in Q/Z; 1 for the trivial character.
    mpz_class modulus = 1;
    /// chi(g_j) as elements of Z_modulus.
    std::vector<mpz_class> values;
    /// beta(x, x) mod 1, the self-linking of the defining element.
    mpq_class self_linking;

    bool trivial() const { return modulus == 1; }
};

/// chi_x(y) = beta(x, y); x given by generator coefficients.
Character character_of(const std::vector<mpz_class>& x, const LinkingForm& form);

} // namespace knotcord
