#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "knotcord/metabolizer.hpp"
#include "knotcord/polynomial.hpp"

namespace knotcord {

/// Element of the group ring Z[Z_q]: integer coefficients on the symbols
/// t^0 .. t^{q-1}, with exponent arithmetic mod q. The sign identification
/// t^j = t^{j + q} of the character construction is already applied by
/// reducing exponents mod q at insertion.
class GroupRingElement {
public:
    explicit GroupRingElement(std::uint64_t q);
    static GroupRingElement from_coefficients(std::uint64_t q, std::vector<mpz_class> coeffs);

    std::uint64_t order() const { return q_; }
    const std::vector<mpz_class>& coefficients() const { return coeffs_; }
    void add_term(std::uint64_t exponent, const mpz_class& coeff);
    bool is_zero() const;

    GroupRingElement operator*(const GroupRingElement& rhs) const;
    /// Multiplication by t^alpha.
    GroupRingElement shifted(std::uint64_t alpha) const;
    bool operator==(const GroupRingElement&) const = default;

    IntPolynomial to_polynomial() const;
    std::string to_string() const;

private:
    std::uint64_t q_;
    std::vector<mpz_class> coeffs_;
};

/// Res(f, t^q - 1): a nonzero integer contained in the ideal generated by f
/// in Z[Z_q], or 0 when f vanishes at some q-th root of unity (failure).
/// Throws ZeroPolynomial on zero input.
mpz_class coprime_certificate(const GroupRingElement& f);

/// Combination of the first S_level staircase generators, scaled per row
/// class and cleared, whose first S_level entries all equal p^level and whose
/// remaining entries are divisible by p^level. Staircase coordinates; the
/// vector lies in the span of L.
std::vector<std::uint64_t> level_vector(const MetabolizerNF& L, unsigned level);

/// Relation in Z[Z_q], q = p^{n-level-1}(p-1)/2, read off a level vector:
/// every entry of valuation `level` contributes t^alpha with
/// alpha = dlog_g(entry / p^level) mod q; entries of strictly higher
/// valuation are ignored only if their level is in `resolved_levels`
/// (else UnresolvedDependency). g generates the units of Z_{p^{n-level}}.
GroupRingElement relation_of(const std::vector<std::uint64_t>& vec, unsigned level,
                             std::uint64_t p, unsigned n, std::uint64_t g,
                             const std::set<unsigned>& resolved_levels);

struct LevelRecord {
    unsigned level = 0;
    std::vector<std::uint64_t> vector_entries; // staircase coordinates
    std::uint64_t q = 1;
    std::uint64_t generator = 0; // primitive root used for the exponent map
    std::vector<mpz_class> relation;
    mpz_class resultant;
    unsigned symbol_count = 0; // unresolved symbols beyond the constant term
};

/// Contradiction certificate for one metabolizer: every level relation from
/// n-1 down to (n-1)/2 carries a nonzero integer resultant, so the formal
/// symbol at level (n-1)/2 is forced to zero even though its character maps
/// onto Z_{p^{(n+1)/2}} with (n+1)/2 > n/2.
struct Certificate {
    std::uint64_t p = 0;
    unsigned n = 0;
    unsigned k = 0; // d = 4k
    std::size_t metabolizer_index = 0;
    std::string metabolizer_id;
    std::vector<LevelRecord> levels; // level n-1 first
    unsigned final_level = 0;
    unsigned final_character_onto = 0; // exponent (n+1)/2
    std::string conclusion;
};

/// Requires p = 3 mod 4, n odd, d = 4k, and L a verified metabolizer of
/// `form`. Throws ReplayFailure if any level resultant vanishes.
Certificate replay(const PrimaryForm& form, const MetabolizerNF& L,
                   std::size_t metabolizer_index = 0);

} // namespace knotcord
