#include "knotcord/number_theory.hpp"

#include <algorithm>
#include <limits>

namespace knotcord {

mpz_class Factorization::product() const {
    mpz_class r(1);
    for (const auto& e : entries) {
        mpz_class pe;
        mpz_ui_pow_ui(pe.get_mpz_t(), e.prime, e.exponent);
        r *= pe;
    }
    return r;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    if (m == 1) return 0;
    std::uint64_t r = 1;
    b %= m;
    while (e > 0) {
        if (e & 1) r = mul_mod(r, b, m);
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    return r;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These twelve bases decide primality for every n < 2^64.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

Factorization factorize(std::uint64_t n) {
    if (n == 0) throw InputError("factorize requires n >= 1");
    Factorization f;
    auto strip = [&](std::uint64_t p) {
        if (n % p != 0) return;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        f.entries.push_back({p, e});
    };
    strip(2);
    strip(3);
    std::uint64_t d = 5;
    while (n > 1 && !is_prime(n)) {
        while (d * d <= n && n % d != 0 && n % (d + 2) != 0) d += 6;
        if (d * d > n) break;
        strip(d);
        strip(d + 2);
    }
    if (n > 1) f.entries.push_back({n, 1});
    std::sort(f.entries.begin(), f.entries.end(),
              [](const auto& a, const auto& b) { return a.prime < b.prime; });
    return f;
}

Factorization factorize(const mpz_class& n) {
    if (n < 1) throw InputError("factorize requires n >= 1");
    if (!n.fits_ulong_p())
        throw InputError("factorize supports desk-scale inputs below 2^64 only");
    return factorize(static_cast<std::uint64_t>(n.get_ui()));
}

bool is_perfect_square(const mpz_class& n) {
    if (n < 0) throw InputError("is_perfect_square requires n >= 0");
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r * r == n;
}

static void require_odd_prime(std::uint64_t p) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw InputError("expected an odd prime, got " + std::to_string(p));
}

mpz_class unit_group_order(std::uint64_t p, unsigned m) {
    require_odd_prime(p);
    if (m == 0) throw InputError("unit_group_order requires m >= 1");
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), p, m - 1);
    return r * (p - 1);
}

std::uint64_t pow_u64(std::uint64_t p, unsigned e) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (r > std::numeric_limits<std::uint64_t>::max() / p)
            throw InternalError("power overflows 64 bits");
        r *= p;
    }
    return r;
}

std::uint64_t primitive_root(std::uint64_t p, unsigned m) {
    require_odd_prime(p);
    if (m == 0) throw InputError("primitive_root requires m >= 1");
    const std::uint64_t modulus = pow_u64(p, m);
    const mpz_class order_z = unit_group_order(p, m);
    if (!order_z.fits_ulong_p()) throw InputError("unit group too large for desk scale");
    const std::uint64_t order = order_z.get_ui();
    const Factorization of = factorize(order);
    for (std::uint64_t g = 2; g < modulus; ++g) {
        if (g % p == 0) continue;
        bool generates = true;
        for (const auto& e : of.entries) {
            if (pow_mod(g, order / e.prime, modulus) == 1) {
                generates = false;
                break;
            }
        }
        if (generates) return g;
    }
    throw InternalError("no primitive root found; unit group of an odd prime power is cyclic");
}

std::uint64_t discrete_log(std::uint64_t g, std::uint64_t u, std::uint64_t p, unsigned m) {
    require_odd_prime(p);
    const std::uint64_t modulus = pow_u64(p, m);
    u %= modulus;
    if (u % p == 0) throw NotAUnit("discrete_log argument is divisible by " + std::to_string(p));
    const mpz_class order_z = unit_group_order(p, m);
    const std::uint64_t order = order_z.get_ui();
    std::uint64_t x = 1;
    for (std::uint64_t alpha = 0; alpha < order; ++alpha) {
        if (x == u) return alpha;
        x = mul_mod(x, g % modulus, modulus);
    }
    throw InputError("discrete_log: base does not generate the target");
}

} // namespace knotcord
