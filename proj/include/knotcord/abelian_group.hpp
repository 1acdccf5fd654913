#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "knotcord/errors.hpp"

namespace knotcord {

/// Finite abelian group recorded by its invariant factors: an ascending list
/// of integers >= 2 with each dividing the next. The empty list is the
/// trivial group.
class FiniteAbelianGroup {
public:
    FiniteAbelianGroup() = default;

    /// Validates the divisibility chain.
    static FiniteAbelianGroup from_invariant_factors(std::vector<mpz_class> factors);

    /// Any list of cyclic orders (>= 1); recomputed into invariant factors,
    /// so e.g. {3, 9, 7, 49} and {21, 441} describe the same group.
    static FiniteAbelianGroup from_cyclic_orders(const std::vector<mpz_class>& orders);

    const std::vector<mpz_class>& invariant_factors() const { return factors_; }
    mpz_class order() const;
    bool trivial() const { return factors_.empty(); }
    bool is_cyclic() const { return factors_.size() <= 1; }

    /// prime -> ascending list of exponents e with a Z_{p^e} summand.
    std::map<std::uint64_t, std::vector<unsigned>> primary_decomposition() const;

    bool operator==(const FiniteAbelianGroup&) const = default;

    /// "trivial" or e.g. "Z_3 + Z_9 + Z_7 + Z_49" (primary form).
    std::string to_string() const;

private:
    std::vector<mpz_class> factors_;
};

/// p-power summands of G.
FiniteAbelianGroup primary_part(const FiniteAbelianGroup& g, std::uint64_t p);

} // namespace knotcord
