#include "knotcord/replay.hpp"

#include <algorithm>
#include <sstream>

#include "knotcord/number_theory.hpp"

namespace knotcord {

GroupRingElement::GroupRingElement(std::uint64_t q) : q_(q), coeffs_(q, mpz_class(0)) {
    if (q == 0) throw InputError("group ring Z[Z_q] requires q >= 1");
}

GroupRingElement GroupRingElement::from_coefficients(std::uint64_t q,
                                                     std::vector<mpz_class> coeffs) {
    GroupRingElement e(q);
    if (coeffs.size() != q) throw InputError("coefficient vector must have length q");
    e.coeffs_ = std::move(coeffs);
    return e;
}

void GroupRingElement::add_term(std::uint64_t exponent, const mpz_class& coeff) {
    coeffs_[exponent % q_] += coeff;
}

bool GroupRingElement::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const mpz_class& c) { return c == 0; });
}

GroupRingElement GroupRingElement::operator*(const GroupRingElement& rhs) const {
    if (q_ != rhs.q_) throw InputError("group ring orders differ");
    GroupRingElement out(q_);
    for (std::uint64_t i = 0; i < q_; ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::uint64_t j = 0; j < q_; ++j)
            out.coeffs_[(i + j) % q_] += coeffs_[i] * rhs.coeffs_[j];
    }
    return out;
}

GroupRingElement GroupRingElement::shifted(std::uint64_t alpha) const {
    GroupRingElement out(q_);
    for (std::uint64_t i = 0; i < q_; ++i) out.coeffs_[(i + alpha) % q_] = coeffs_[i];
    return out;
}

IntPolynomial GroupRingElement::to_polynomial() const { return IntPolynomial(coeffs_); }

std::string GroupRingElement::to_string() const {
    std::ostringstream out;
    out << "[q=" << q_ << "] " << to_polynomial().to_string();
    return out.str();
}

mpz_class coprime_certificate(const GroupRingElement& f) {
    if (f.is_zero()) throw ZeroPolynomial("coprime certificate of the zero relation");
    return poly_resultant(f.to_polynomial(), IntPolynomial::power_minus_one(f.order()));
}

namespace {

unsigned valuation_u64(std::uint64_t x, std::uint64_t p, unsigned n) {
    if (x == 0) return n;
    unsigned v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

} // namespace

std::vector<std::uint64_t> level_vector(const MetabolizerNF& L, unsigned level) {
    if (level >= L.n) throw InputError("level must satisfy 0 <= level <= n-1");
    const auto sums = L.partial_sums();
    const unsigned s_l = sums[level];
    if (s_l == 0) throw InternalError("no staircase rows at or below the requested level");

    const std::uint64_t m = pow_u64(L.p, L.n);
    const std::uint64_t pl = pow_u64(L.p, level);

    // scale row class i by p^{level-i}: diagonal of the top block becomes p^level
    std::vector<std::vector<std::uint64_t>> work(s_l);
    for (unsigned t = 0; t < s_l; ++t) {
        const std::uint64_t scale = pow_u64(L.p, level - L.level_of_row(t));
        work[t].resize(L.d);
        for (unsigned j = 0; j < L.d; ++j) work[t][j] = mul_mod(scale, L.rows[t][j], m);
    }
    // clear off-diagonal entries in the top s_l x s_l block
    for (unsigned u = 0; u < s_l; ++u)
        for (unsigned t = 0; t < s_l; ++t) {
            if (t == u || work[t][u] == 0) continue;
            const std::uint64_t q = work[t][u] / pl;
            for (unsigned j = 0; j < L.d; ++j) {
                const std::uint64_t sub = mul_mod(q, work[u][j], m);
                work[t][j] = (work[t][j] + m - sub) % m;
            }
        }
    // sum the cleared rows
    std::vector<std::uint64_t> w(L.d, 0);
    for (unsigned t = 0; t < s_l; ++t)
        for (unsigned j = 0; j < L.d; ++j) w[j] = (w[j] + work[t][j]) % m;

    for (unsigned j = 0; j < s_l; ++j)
        if (w[j] != pl) throw InternalError("level vector head is not p^level");
    for (unsigned j = s_l; j < L.d; ++j)
        if (w[j] % pl != 0) throw InternalError("level vector tail is not divisible by p^level");
    return w;
}

GroupRingElement relation_of(const std::vector<std::uint64_t>& vec, unsigned level,
                             std::uint64_t p, unsigned n, std::uint64_t g,
                             const std::set<unsigned>& resolved_levels) {
    if (level >= n) throw InputError("level must satisfy 0 <= level <= n-1");
    const unsigned m_level = n - level;
    const std::uint64_t modulus = pow_u64(p, m_level);
    const mpz_class group = unit_group_order(p, m_level);
    if (!group.fits_ulong_p()) throw InputError("unit group too large for desk scale");
    const std::uint64_t q = group.get_ui() / 2;

    GroupRingElement f(q);
    const std::uint64_t pl = pow_u64(p, level);
    for (std::uint64_t e : vec) {
        const unsigned v = valuation_u64(e, p, n);
        if (v < level) throw InternalError("vector entry has valuation below the level");
        if (v >= n) continue; // the zero class
        if (v > level) {
            if (!resolved_levels.count(v))
                throw UnresolvedDependency("entry at level " + std::to_string(v) +
                                           " is not yet resolved");
            continue;
        }
        const std::uint64_t c = (e / pl) % modulus;
        const std::uint64_t alpha = discrete_log(g, c, p, m_level);
        f.add_term(alpha % q, 1);
    }
    return f;
}

Certificate replay(const PrimaryForm& form, const MetabolizerNF& L,
                   std::size_t metabolizer_index) {
    if (form.p % 4 != 3) throw InputError("replay requires p = 3 mod 4");
    if (form.n % 2 == 0) throw InputError("replay requires n odd");
    if (form.d % 4 != 0) throw InputError("replay requires d = 4k");
    verify_structure(L, form); // throws NotAMetabolizer when the hypotheses fail

    Certificate cert;
    cert.p = form.p;
    cert.n = form.n;
    cert.k = form.d / 4;
    cert.metabolizer_index = metabolizer_index;
    cert.metabolizer_id = L.id();
    cert.final_level = (form.n - 1) / 2;
    cert.final_character_onto = (form.n + 1) / 2;

    std::set<unsigned> resolved;
    for (unsigned level = form.n - 1;; --level) {
        const auto w = level_vector(L, level);
        const unsigned m_level = form.n - level;
        const std::uint64_t g = primitive_root(form.p, m_level);
        GroupRingElement f = relation_of(w, level, form.p, form.n, g, resolved);

        // q = |units of Z_{p^{n-level}}| / 2, odd because p = 3 mod 4
        const mpz_class expect_q = unit_group_order(form.p, m_level) / 2;
        if (mpz_class(static_cast<unsigned long>(f.order())) != expect_q)
            throw InternalError("group ring order disagrees with the unit group");
        if (f.order() % 2 == 0)
            throw InternalError("q must be odd for p = 3 mod 4");

        LevelRecord rec;
        rec.level = level;
        rec.vector_entries = w;
        rec.q = f.order();
        rec.generator = g;
        rec.relation = f.coefficients();
        rec.resultant = coprime_certificate(f);
        const auto sums = L.partial_sums();
        rec.symbol_count = 0;
        for (unsigned j = sums[level]; j < form.d; ++j)
            if (w[j] != 0 && w[j] % pow_u64(form.p, level + 1) != 0) ++rec.symbol_count;
        cert.levels.push_back(rec);

        if (rec.resultant == 0)
            throw ReplayFailure("relation is not coprime to t^q - 1 at level " +
                                    std::to_string(level),
                                level, f.to_string());
        resolved.insert(level);
        if (level == cert.final_level) break;
    }

    std::ostringstream conclusion;
    conclusion << "symbol at level " << cert.final_level
               << " forced to zero by a nonzero integer multiple, but its character maps onto "
               << "Z_" << form.p << "^" << cert.final_character_onto << " and "
               << cert.final_character_onto << " > " << form.n
               << "/2, contradicting the nonvanishing bound (corollary-2.6); "
               << "no finite concordance order is consistent with this metabolizer";
    cert.conclusion = conclusion.str();
    return cert;
}

} // namespace knotcord
