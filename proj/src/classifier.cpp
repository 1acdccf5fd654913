#include "knotcord/classifier.hpp"

#include <sstream>

#include "knotcord/number_theory.hpp"
#include "knotcord/smith.hpp"

namespace knotcord {

std::string to_string(AlgebraicOrder o) {
    switch (o) {
        case AlgebraicOrder::Slice: return "slice";
        case AlgebraicOrder::Order2: return "order-2";
        case AlgebraicOrder::Order4: return "order-4";
        case AlgebraicOrder::Infinite: return "infinite";
        case AlgebraicOrder::Indeterminate: return "indeterminate";
    }
    return "indeterminate";
}

std::vector<GateWitness> theorem_1_2_gate(const FiniteAbelianGroup& g) {
    std::vector<GateWitness> out;
    for (const auto& [p, exps] : g.primary_decomposition()) {
        if (p % 4 != 3) continue;
        if (exps.size() != 1) continue; // primary part must be cyclic
        if (exps[0] % 2 == 0) continue; // and of odd exponent
        out.push_back({p, exps[0]});
    }
    return out;
}

static std::vector<Order4Witness> odd_exponent_witnesses(const mpz_class& n) {
    std::vector<Order4Witness> out;
    for (const auto& e : factorize(abs(n)).entries)
        if (e.prime % 4 == 3 && e.exponent % 2 == 1) out.push_back({e.prime, e.exponent});
    return out;
}

AlgebraicClassification classify_quadratic(const IntPolynomial& delta) {
    if (delta.is_zero() || delta.degree() != 2)
        throw NotQuadratic("classify_quadratic expects a quadratic polynomial");
    const mpz_class at_one = delta.eval(1);
    if (at_one != 1 && at_one != -1)
        throw NotAKnotPolynomial("Delta(1) = +-1 violated (Delta(1) = " + at_one.get_str() + ")");

    AlgebraicClassification r;
    r.delta_product = at_one * delta.eval(-1);
    if (r.delta_product > 0) {
        r.order = AlgebraicOrder::Infinite;
        return r;
    }
    // Finite-order branch: reducibility first, then the odd-exponent test.
    const mpz_class a = delta.coeff(2), b = delta.coeff(1), c = delta.coeff(0);
    if (is_perfect_square(b * b - 4 * a * c)) {
        r.order = AlgebraicOrder::Slice;
        return r;
    }
    r.witnesses = odd_exponent_witnesses(r.delta_product);
    r.order = r.witnesses.empty() ? AlgebraicOrder::Order2 : AlgebraicOrder::Order4;
    return r;
}

AlgebraicClassification classify_twisted_double(const mpz_class& a) {
    AlgebraicClassification r;
    if (a == 0) { // unknot
        r.order = AlgebraicOrder::Slice;
        r.delta_product = -1;
        return r;
    }
    const mpz_class det = 4 * a + 1;
    r.delta_product = -det;
    if (a < 0) {
        r.order = AlgebraicOrder::Infinite;
    } else if (is_perfect_square(det)) {
        r.order = AlgebraicOrder::Slice;
    } else {
        r.witnesses = odd_exponent_witnesses(det);
        r.order = r.witnesses.empty() ? AlgebraicOrder::Order2 : AlgebraicOrder::Order4;
    }

    // Must agree with the quadratic classification of a t^2 - (2a+1) t + a.
    const IntPolynomial companion(std::vector<mpz_class>{a, -(2 * a + 1), a});
    if (classify_quadratic(companion.sign_normalized()) != r)
        throw InternalError("twisted-double classification disagrees with the quadratic rule");
    return r;
}

std::optional<Order4Witness> corollary_4_1(const mpz_class& delta_at_minus1,
                                           bool unknotting_number_one) {
    if (!unknotting_number_one) return std::nullopt;
    auto ws = odd_exponent_witnesses(delta_at_minus1);
    if (ws.empty()) return std::nullopt;
    return ws.front();
}

std::optional<Order4Witness> corollary_4_2(const mpz_class& p) {
    if (p < 3 || p % 2 == 0) throw InputError("two-bridge determinant must be odd and >= 3");
    auto ws = odd_exponent_witnesses(p);
    if (ws.empty()) return std::nullopt;
    return ws.front();
}

ConcordanceVerdict full_verdict(const SeifertMatrix& v) {
    ConcordanceVerdict verdict;
    verdict.alexander = alexander_polynomial(v);
    verdict.homology = double_cover_homology(v);
    verdict.gate_witnesses = theorem_1_2_gate(verdict.homology);

    if (v.size() == 0) {
        verdict.algebraic = AlgebraicClassification{AlgebraicOrder::Slice, {}, mpz_class(-1)};
        verdict.status = "slice";
        verdict.rules.push_back({"unknot", "empty Seifert matrix"});
        return verdict;
    }

    if (verdict.alexander.degree() == 2)
        verdict.algebraic = classify_quadratic(verdict.alexander);

    if (!verdict.gate_witnesses.empty()) {
        verdict.infinite_order = true;
        std::ostringstream w;
        for (std::size_t i = 0; i < verdict.gate_witnesses.size(); ++i) {
            if (i) w << ", ";
            w << "(p=" << verdict.gate_witnesses[i].p << ", n=" << verdict.gate_witnesses[i].n
              << ")";
        }
        verdict.rules.push_back({"theorem-1.2", w.str()});
    }
    if (verdict.algebraic && verdict.algebraic->order == AlgebraicOrder::Infinite) {
        // Infinite order already in the algebraic concordance group.
        verdict.infinite_order = true;
        verdict.rules.push_back(
            {"theorem-4.3(a)", "Delta(1)Delta(-1) = " + verdict.algebraic->delta_product.get_str() +
                               " > 0"});
    }

    verdict.status = verdict.infinite_order ? "infinite-order" : "unresolved";
    return verdict;
}

} // namespace knotcord
