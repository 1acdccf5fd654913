#include "knotcord/abelian_group.hpp"

#include <algorithm>
#include <sstream>

#include "knotcord/number_theory.hpp"

namespace knotcord {

FiniteAbelianGroup FiniteAbelianGroup::from_invariant_factors(std::vector<mpz_class> factors) {
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i] < 2) throw InputError("invariant factors must be >= 2");
        if (i + 1 < factors.size() && factors[i + 1] % factors[i] != 0)
            throw InputError("invariant factors must form a divisibility chain");
    }
    FiniteAbelianGroup g;
    g.factors_ = std::move(factors);
    return g;
}

FiniteAbelianGroup FiniteAbelianGroup::from_cyclic_orders(const std::vector<mpz_class>& orders) {
    // prime -> descending multiset of exponents
    std::map<std::uint64_t, std::vector<unsigned>> primary;
    for (const mpz_class& n : orders) {
        if (n < 1) throw InputError("cyclic orders must be >= 1");
        for (const auto& e : factorize(n).entries) primary[e.prime].push_back(e.exponent);
    }
    std::size_t slots = 0;
    for (auto& [p, exps] : primary) {
        std::sort(exps.rbegin(), exps.rend());
        slots = std::max(slots, exps.size());
    }
    // The j-th largest exponent of every prime lands in the j-th last factor.
    std::vector<mpz_class> factors(slots, mpz_class(1));
    for (const auto& [p, exps] : primary)
        for (std::size_t j = 0; j < exps.size(); ++j) {
            mpz_class pe;
            mpz_ui_pow_ui(pe.get_mpz_t(), p, exps[j]);
            factors[slots - 1 - j] *= pe;
        }
    std::erase(factors, mpz_class(1));
    return from_invariant_factors(std::move(factors));
}

mpz_class FiniteAbelianGroup::order() const {
    mpz_class r(1);
    for (const auto& d : factors_) r *= d;
    return r;
}

std::map<std::uint64_t, std::vector<unsigned>> FiniteAbelianGroup::primary_decomposition() const {
    std::map<std::uint64_t, std::vector<unsigned>> out;
    for (const auto& d : factors_)
        for (const auto& e : factorize(d).entries) out[e.prime].push_back(e.exponent);
    for (auto& [p, exps] : out) std::sort(exps.begin(), exps.end());
    return out;
}

std::string FiniteAbelianGroup::to_string() const {
    if (trivial()) return "trivial";
    std::ostringstream out;
    bool first = true;
    for (const auto& [p, exps] : primary_decomposition())
        for (unsigned e : exps) {
            if (!first) out << " + ";
            first = false;
            mpz_class pe;
            mpz_ui_pow_ui(pe.get_mpz_t(), p, e);
            out << "Z_" << pe.get_str();
        }
    return out.str();
}

FiniteAbelianGroup primary_part(const FiniteAbelianGroup& g, std::uint64_t p) {
    auto primary = g.primary_decomposition();
    auto it = primary.find(p);
    if (it == primary.end()) return {};
    std::vector<mpz_class> orders;
    for (unsigned e : it->second) {
        mpz_class pe;
        mpz_ui_pow_ui(pe.get_mpz_t(), p, e);
        orders.push_back(pe);
    }
    return FiniteAbelianGroup::from_cyclic_orders(orders);
}

} // namespace knotcord
