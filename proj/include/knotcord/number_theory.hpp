#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "knotcord/errors.hpp"

namespace knotcord {

/// Prime-power factorization, primes ascending. Every prime is certified by
/// a deterministic Miller-Rabin test (valid for all inputs below 2^64).
struct Factorization {
    struct Entry {
        std::uint64_t prime;
        unsigned exponent;
        bool operator==(const Entry&) const = default;
    };
    std::vector<Entry> entries;

    mpz_class product() const;
    bool operator==(const Factorization&) const = default;
};

/// Deterministic primality test for n < 2^64.
bool is_prime(std::uint64_t n);

/// Trial-division factorization of n >= 1 (desk scale; n must fit in 64 bits).
Factorization factorize(const mpz_class& n);
Factorization factorize(std::uint64_t n);

/// true iff floor(sqrt(n))^2 = n.
bool is_perfect_square(const mpz_class& n);

/// Order p^(m-1)(p-1) of the unit group of Z_{p^m}, p an odd prime.
mpz_class unit_group_order(std::uint64_t p, unsigned m);

/// Smallest positive generator of the units of Z_{p^m}, p an odd prime.
/// The generator is certified by checking its order against every maximal
/// proper divisor of the group order.
std::uint64_t primitive_root(std::uint64_t p, unsigned m);

/// Least alpha >= 0 with g^alpha = u mod p^m, by linear scan.
/// Throws NotAUnit if p divides u.
std::uint64_t discrete_log(std::uint64_t g, std::uint64_t u, std::uint64_t p, unsigned m);

/// p^e as uint64; throws InternalError on overflow.
std::uint64_t pow_u64(std::uint64_t p, unsigned e);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m);

} // namespace knotcord
