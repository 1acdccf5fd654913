#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "knotcord/errors.hpp"

namespace knotcord {

/// Diagonal nonsingular Q/Z linking form beta(x, y) = sum_i eps_i x_i y_i / p^n
/// on (Z_{p^n})^d, with every eps_i a unit mod p^n.
struct PrimaryForm {
    std::uint64_t p;
    unsigned n;
    unsigned d;
    std::vector<std::uint64_t> eps;

    PrimaryForm(std::uint64_t p, unsigned n, unsigned d, const std::vector<long>& eps_in);
    /// eps = (1, -1, 1, -1, ...), the form carried by sums of a knot and its mirrors.
    static PrimaryForm alternating(std::uint64_t p, unsigned n, unsigned d);

    std::uint64_t modulus() const; // p^n
    mpz_class group_order() const; // p^{nd}

    /// p^n * beta(x, y) mod p^n; zero iff the pair links integrally.
    std::uint64_t pairing_raw(const std::vector<std::uint64_t>& x,
                              const std::vector<std::uint64_t>& y) const;
};

/// Staircase normal form of a subgroup of (Z_{p^n})^d: after the recorded
/// coordinate permutation, row v_{i,j} (the j-th generator at level i) is
/// zero in its first S_i entries except for entry S_{i-1}+j, which is p^i,
/// and every remaining entry is divisible by p^i.
struct MetabolizerNF {
    std::uint64_t p = 0;
    unsigned n = 0;
    unsigned d = 0;
    std::vector<unsigned> profile;                  // k_0 .. k_{n-1}
    std::vector<unsigned> perm;                     // staircase position -> original column
    std::vector<std::vector<std::uint64_t>> rows;   // staircase coordinates

    std::size_t rank() const { return rows.size(); }
    /// S_i = k_0 + ... + k_i.
    std::vector<unsigned> partial_sums() const;
    unsigned level_of_row(std::size_t t) const;
    /// Generators with the coordinate permutation undone.
    std::vector<std::vector<std::uint64_t>> original_rows() const;
    mpz_class span_order() const;
    /// All span elements in original coordinates, lexicographically sorted.
    std::vector<std::vector<std::uint64_t>> span_elements() const;
    bool staircase_ok() const;
    /// Dedup/sort key: rows (row-major), then the permutation. The key
    /// determines the subgroup.
    std::vector<std::uint64_t> canonical_key() const;
    std::string id() const;

    bool operator==(const MetabolizerNF&) const = default;
};

struct EnumerationOptions {
    bool budget_override = false;
    /// Ceiling on both the element space p^{nd} and the candidate-matrix count.
    std::uint64_t budget = 100000000;
    /// 0 = all available threads.
    int threads = 0;
    /// Optional wall-clock cap; when it trips the scan stops early and the
    /// result covers a deterministic prefix of the candidate space.
    double time_limit_seconds = 0;
};

struct EnumerationStats {
    mpz_class element_space;
    mpz_class candidates_total;
    std::uint64_t candidates_scanned = 0;
    std::uint64_t survivors = 0;
    bool complete = true;
};

/// Complete, duplicate-free, canonically ordered list of metabolizers:
/// subgroups L with |L|^2 = |H| and beta(L, L) = 0. Candidates are staircase
/// generator matrices (profile, pivot columns, then divisible free entries),
/// scanned with OpenMP. Throws BudgetExceeded without the override flag.
std::vector<MetabolizerNF> enumerate_metabolizers(const PrimaryForm& form,
                                                  const EnumerationOptions& opts = {},
                                                  EnumerationStats* stats = nullptr);

/// Single-threaded reference scan of the same candidate space; kept for
/// testing and benchmarking against the OpenMP path.
std::vector<MetabolizerNF> enumerate_metabolizers_serial(const PrimaryForm& form,
                                                         const EnumerationOptions& opts = {},
                                                         EnumerationStats* stats = nullptr);

/// Independent oracle: breadth-first closure over every subgroup of order
/// at most p^{nd/2}, with no staircase assumptions. Exponential; only for
/// tiny instances (p^{nd} <= 10^6).
std::vector<MetabolizerNF> enumerate_metabolizers_raw(const PrimaryForm& form);

/// Canonical staircase form of the subgroup generated by `generators`
/// (original coordinates, entries mod p^n). Depends only on the span.
MetabolizerNF normal_form(std::uint64_t p, unsigned n, unsigned d,
                          const std::vector<std::vector<std::uint64_t>>& generators);

/// Structure checks for a metabolizer of a primary form.
struct StructureReport {
    bool order_condition = false;   // |L|^2 = |H|
    bool isotropic = false;         // beta(L, L) = 0
    bool profile_symmetric = false; // k_i = k_{n-i} for i >= 1
    bool mid_sum_applicable = false;
    bool mid_sum = false;           // S_{(n-1)/2} = d/2 (n odd, d = 4k)
    bool quotient_self_dual = false; // H/L and L have identical invariant factors
    std::vector<mpz_class> quotient_factors;
    std::vector<mpz_class> span_factors;

    bool all_pass() const {
        return order_condition && isotropic && profile_symmetric &&
               (!mid_sum_applicable || mid_sum) && quotient_self_dual;
    }
};

/// Throws NotAMetabolizer if |L|^2 != |H| or beta(L, L) != 0.
StructureReport verify_structure(const MetabolizerNF& L, const PrimaryForm& form);

} // namespace knotcord
