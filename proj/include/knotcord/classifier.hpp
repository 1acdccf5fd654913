#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "knotcord/abelian_group.hpp"
#include "knotcord/polynomial.hpp"
#include "knotcord/seifert.hpp"

namespace knotcord {

/// Order of a class in the algebraic concordance group, as far as a
/// quadratic Alexander polynomial determines it.
enum class AlgebraicOrder { Slice, Order2, Order4, Infinite, Indeterminate };

std::string to_string(AlgebraicOrder o);

/// Prime p = 3 mod 4 dividing |Delta(1)Delta(-1)| to an odd power.
struct Order4Witness {
    std::uint64_t p;
    unsigned exponent;
    bool operator==(const Order4Witness&) const = default;
};

struct AlgebraicClassification {
    AlgebraicOrder order = AlgebraicOrder::Indeterminate;
    std::vector<Order4Witness> witnesses; // nonempty iff order == Order4
    mpz_class delta_product;              // Delta(1) * Delta(-1)
    bool operator==(const AlgebraicClassification&) const = default;
};

/// Infinite-order witness: the p-primary part of the double-cover homology
/// is cyclic Z_{p^n} with p = 3 mod 4 and n odd.
struct GateWitness {
    std::uint64_t p;
    unsigned n;
    bool operator==(const GateWitness&) const = default;
};

/// All (p, n) for which the hypothesis holds on G. An empty list means the
/// gate is silent, never "finite order".
std::vector<GateWitness> theorem_1_2_gate(const FiniteAbelianGroup& g);

/// Classifies a quadratic knot polynomial:
///   Infinite if Delta(1)Delta(-1) > 0; otherwise Slice if the discriminant
///   is a perfect square, Order4 if some prime = 3 mod 4 divides
///   |Delta(1)Delta(-1)| to an odd power, else Order2.
/// Throws NotQuadratic / NotAKnotPolynomial.
AlgebraicClassification classify_quadratic(const IntPolynomial& delta);

/// Four-way classification of the a-twisted double; a = 0 is the unknot
/// (Slice). Cross-checked against classify_quadratic on
/// a t^2 - (2a+1) t + a.
AlgebraicClassification classify_twisted_double(const mpz_class& a);

/// Infinite-order witness for an unknotting-number-one knot: prime = 3 mod 4
/// with odd exponent in |Delta(-1)|. The flag records the caller's knowledge
/// that u(K) = 1; it is not computed here.
std::optional<Order4Witness> corollary_4_1(const mpz_class& delta_at_minus1,
                                           bool unknotting_number_one);

/// Same factorization test applied to the two-bridge determinant p.
std::optional<Order4Witness> corollary_4_2(const mpz_class& p);

/// One rule of the combined verdict, with a human-readable witness.
struct FiredRule {
    std::string label;
    std::string witness;
};

struct ConcordanceVerdict {
    FiniteAbelianGroup homology;
    IntPolynomial alexander;
    std::optional<AlgebraicClassification> algebraic; // set when Delta is quadratic or trivial
    std::vector<GateWitness> gate_witnesses;
    bool infinite_order = false;
    std::vector<FiredRule> rules;
    /// "infinite-order", "slice", or "unresolved". The toolkit never asserts
    /// finite concordance order.
    std::string status;
};

/// Runs homology -> gate, plus the quadratic classification when it applies.
ConcordanceVerdict full_verdict(const SeifertMatrix& v);

} // namespace knotcord
