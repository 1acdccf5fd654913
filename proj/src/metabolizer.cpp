#include "knotcord/metabolizer.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include <omp.h>

#include "knotcord/int_matrix.hpp"
#include "knotcord/number_theory.hpp"
#include "knotcord/smith.hpp"

namespace knotcord {

namespace {

unsigned valuation(std::uint64_t x, std::uint64_t p, unsigned n) {
    if (x == 0) return n;
    unsigned v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

std::uint64_t inv_mod_u64(std::uint64_t a, std::uint64_t m) {
    // extended Euclid; a must be a unit mod m
    std::int64_t t = 0, newt = 1;
    std::int64_t r = static_cast<std::int64_t>(m), newr = static_cast<std::int64_t>(a % m);
    while (newr != 0) {
        const std::int64_t q = r / newr;
        t = std::exchange(newt, t - q * newt);
        r = std::exchange(newr, r - q * newr);
    }
    if (r != 1) throw InternalError("inverse of a non-unit requested");
    if (t < 0) t += static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(t);
}

} // namespace

// ---------------------------------------------------------------------------
// PrimaryForm

PrimaryForm::PrimaryForm(std::uint64_t p_in, unsigned n_in, unsigned d_in,
                         const std::vector<long>& eps_in)
    : p(p_in), n(n_in), d(d_in) {
    if (!is_prime(p)) throw InputError("PrimaryForm requires a prime p");
    if (n == 0 || d == 0) throw InputError("PrimaryForm requires n >= 1 and d >= 1");
    std::uint64_t m = 1;
    for (unsigned i = 0; i < n; ++i) {
        if (m > std::numeric_limits<std::uint64_t>::max() / p)
            throw InputError("p^n does not fit in 64 bits");
        m *= p;
    }
    if (eps_in.size() != d) throw InputError("PrimaryForm needs one diagonal unit per coordinate");
    eps.resize(d);
    for (unsigned i = 0; i < d; ++i) {
        const long e = eps_in[i];
        std::uint64_t r = e >= 0 ? static_cast<std::uint64_t>(e) % m
                                 : m - (static_cast<std::uint64_t>(-(e + 1)) + 1) % m;
        if (r == m) r = 0;
        if (r % p == 0) throw InputError("PrimaryForm diagonal entries must be units mod p^n");
        eps[i] = r;
    }
}

PrimaryForm PrimaryForm::alternating(std::uint64_t p, unsigned n, unsigned d) {
    std::vector<long> e(d);
    for (unsigned i = 0; i < d; ++i) e[i] = (i % 2 == 0) ? 1 : -1;
    return PrimaryForm(p, n, d, e);
}

std::uint64_t PrimaryForm::modulus() const { return pow_u64(p, n); }

mpz_class PrimaryForm::group_order() const {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), p, static_cast<unsigned long>(n) * d);
    return r;
}

std::uint64_t PrimaryForm::pairing_raw(const std::vector<std::uint64_t>& x,
                                       const std::vector<std::uint64_t>& y) const {
    const std::uint64_t m = modulus();
    std::uint64_t acc = 0;
    for (unsigned i = 0; i < d; ++i) {
        const std::uint64_t t = mul_mod(x[i] % m, y[i] % m, m);
        acc = (acc + mul_mod(eps[i], t, m)) % m;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// MetabolizerNF

std::vector<unsigned> MetabolizerNF::partial_sums() const {
    std::vector<unsigned> s(profile.size());
    unsigned acc = 0;
    for (std::size_t i = 0; i < profile.size(); ++i) {
        acc += profile[i];
        s[i] = acc;
    }
    return s;
}

unsigned MetabolizerNF::level_of_row(std::size_t t) const {
    unsigned acc = 0;
    for (std::size_t i = 0; i < profile.size(); ++i) {
        acc += profile[i];
        if (t < acc) return static_cast<unsigned>(i);
    }
    throw InternalError("row index beyond the staircase profile");
}

std::vector<std::vector<std::uint64_t>> MetabolizerNF::original_rows() const {
    std::vector<std::vector<std::uint64_t>> out(rows.size(), std::vector<std::uint64_t>(d, 0));
    for (std::size_t t = 0; t < rows.size(); ++t)
        for (unsigned s = 0; s < d; ++s) out[t][perm[s]] = rows[t][s];
    return out;
}

mpz_class MetabolizerNF::span_order() const {
    unsigned long e = 0;
    for (std::size_t i = 0; i < profile.size(); ++i)
        e += static_cast<unsigned long>(n - i) * profile[i];
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), p, e);
    return r;
}

std::vector<std::vector<std::uint64_t>> MetabolizerNF::span_elements() const {
    const mpz_class order = span_order();
    if (!order.fits_ulong_p() || order.get_ui() > 50000000)
        throw BudgetExceeded("span too large to enumerate", "span order " + order.get_str());
    const std::uint64_t size = order.get_ui();
    const std::uint64_t m = pow_u64(p, n);

    const auto gens = original_rows();
    std::vector<std::uint64_t> coeff_orders(gens.size());
    for (std::size_t t = 0; t < gens.size(); ++t) coeff_orders[t] = pow_u64(p, n - level_of_row(t));

    std::vector<std::vector<std::uint64_t>> out;
    out.reserve(size);
    std::vector<std::uint64_t> c(gens.size(), 0);
    std::vector<std::uint64_t> x(d, 0);
    for (std::uint64_t count = 0;; ++count) {
        out.push_back(x);
        if (count + 1 == size) break;
        std::size_t t = 0;
        while (true) {
            c[t] += 1;
            for (unsigned j = 0; j < d; ++j) x[j] = (x[j] + gens[t][j]) % m;
            if (c[t] < coeff_orders[t]) break;
            // rolled over: subtract order(t) copies, i.e. x already wrapped since
            // coeff_orders[t] * gens[t] = 0 mod p^n
            c[t] = 0;
            ++t;
        }
    }
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end())
        throw InternalError("staircase generators are not independent");
    return out;
}

bool MetabolizerNF::staircase_ok() const {
    if (profile.size() != n || perm.size() != d) return false;
    const auto s = partial_sums();
    if (rows.size() != (s.empty() ? 0 : s.back())) return false;
    std::vector<unsigned> sorted_perm = perm;
    std::sort(sorted_perm.begin(), sorted_perm.end());
    for (unsigned i = 0; i < d; ++i)
        if (sorted_perm[i] != i) return false;

    for (std::size_t t = 0; t < rows.size(); ++t) {
        if (rows[t].size() != d) return false;
        const unsigned lv = level_of_row(t);
        const std::uint64_t pivot = pow_u64(p, lv);
        for (unsigned pos = 0; pos < s[lv]; ++pos) {
            const std::uint64_t want = (pos == t) ? pivot : 0;
            if (rows[t][pos] != want) return false;
        }
        for (unsigned pos = s[lv]; pos < d; ++pos)
            if (rows[t][pos] % pivot != 0) return false;
    }
    return true;
}

std::vector<std::uint64_t> MetabolizerNF::canonical_key() const {
    std::vector<std::uint64_t> key;
    key.reserve(rows.size() * d + d + 2);
    key.push_back(rows.size());
    for (const auto& r : rows) key.insert(key.end(), r.begin(), r.end());
    for (unsigned c : perm) key.push_back(c);
    return key;
}

std::string MetabolizerNF::id() const {
    std::ostringstream out;
    out << "p" << p << "n" << n << ":";
    for (std::size_t t = 0; t < rows.size(); ++t) {
        out << (t ? ";" : "") << "(";
        const auto orig = original_rows();
        for (unsigned j = 0; j < d; ++j) out << (j ? "," : "") << orig[t][j];
        out << ")";
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// normal form

MetabolizerNF normal_form(std::uint64_t p, unsigned n, unsigned d,
                          const std::vector<std::vector<std::uint64_t>>& generators) {
    const std::uint64_t m = pow_u64(p, n);

    // span as a sorted element set; the normal form is a function of it alone
    std::set<std::vector<std::uint64_t>> span;
    span.insert(std::vector<std::uint64_t>(d, 0));
    for (const auto& g_in : generators) {
        if (g_in.size() != d) throw InputError("generator has wrong length");
        std::vector<std::uint64_t> g(d);
        for (unsigned j = 0; j < d; ++j) g[j] = g_in[j] % m;
        unsigned minval = n;
        for (unsigned j = 0; j < d; ++j) minval = std::min(minval, valuation(g[j], p, n));
        const std::uint64_t ord = pow_u64(p, n - minval);
        if (span.size() * ord > 50000000)
            throw BudgetExceeded("subgroup too large for normal form", "span bound");
        std::set<std::vector<std::uint64_t>> bigger;
        std::vector<std::uint64_t> shift(d, 0);
        for (std::uint64_t k = 0; k < ord; ++k) {
            for (const auto& s : span) {
                std::vector<std::uint64_t> e(d);
                for (unsigned j = 0; j < d; ++j) e[j] = (s[j] + shift[j]) % m;
                bigger.insert(std::move(e));
            }
            for (unsigned j = 0; j < d; ++j) shift[j] = (shift[j] + g[j]) % m;
        }
        span = std::move(bigger);
    }

    // greedy staircase extraction, lowest column first, lex-least pivot row
    std::vector<unsigned> pivot_cols;
    std::vector<unsigned> pivot_levels;
    std::vector<std::vector<std::uint64_t>> basis;
    auto vanishes_on_pivots = [&](const std::vector<std::uint64_t>& x) {
        for (unsigned c : pivot_cols)
            if (x[c] != 0) return false;
        return true;
    };
    for (unsigned level = 0; level < n; ++level) {
        const std::uint64_t pivot_value = pow_u64(p, level);
        while (true) {
            bool found = false;
            for (unsigned c = 0; c < d && !found; ++c) {
                if (std::find(pivot_cols.begin(), pivot_cols.end(), c) != pivot_cols.end())
                    continue;
                std::vector<std::uint64_t> best;
                for (const auto& x : span) {
                    if (valuation(x[c], p, n) != level || !vanishes_on_pivots(x)) continue;
                    const std::uint64_t u = inv_mod_u64(x[c] / pivot_value, m);
                    std::vector<std::uint64_t> scaled(d);
                    for (unsigned j = 0; j < d; ++j) scaled[j] = mul_mod(x[j], u, m);
                    if (best.empty() || scaled < best) best = std::move(scaled);
                }
                if (!best.empty()) {
                    basis.push_back(std::move(best));
                    pivot_cols.push_back(c);
                    pivot_levels.push_back(level);
                    found = true;
                }
            }
            if (!found) break;
        }
    }

    // Gauss-Jordan: reduce earlier rows modulo each pivot
    for (std::size_t t = 0; t < basis.size(); ++t) {
        const std::uint64_t pv = pow_u64(p, pivot_levels[t]);
        for (std::size_t e = 0; e < t; ++e) {
            const std::uint64_t q = basis[e][pivot_cols[t]] / pv;
            if (q == 0) continue;
            for (unsigned j = 0; j < d; ++j) {
                const std::uint64_t s = mul_mod(q, basis[t][j], m);
                basis[e][j] = (basis[e][j] + m - s) % m;
            }
        }
    }

    MetabolizerNF nf;
    nf.p = p;
    nf.n = n;
    nf.d = d;
    nf.profile.assign(n, 0);
    for (unsigned lv : pivot_levels) nf.profile[lv] += 1;
    nf.perm = pivot_cols;
    for (unsigned c = 0; c < d; ++c)
        if (std::find(pivot_cols.begin(), pivot_cols.end(), c) == pivot_cols.end())
            nf.perm.push_back(c);
    nf.rows.assign(basis.size(), std::vector<std::uint64_t>(d, 0));
    for (std::size_t t = 0; t < basis.size(); ++t)
        for (unsigned s = 0; s < d; ++s) nf.rows[t][s] = basis[t][nf.perm[s]];

    if (!nf.staircase_ok()) throw InternalError("normal form violates the staircase invariants");
    if (nf.span_order() != mpz_class(static_cast<unsigned long>(span.size())))
        throw InternalError("normal form does not span the input subgroup");
    return nf;
}

// ---------------------------------------------------------------------------
// staircase candidate space

namespace {

struct Slot {
    unsigned row;
    unsigned pos;
    std::uint64_t base;  // p^level(row)
    std::uint64_t count; // choices at this slot
};

struct Block {
    std::vector<unsigned> profile;
    std::vector<unsigned> levels; // per staircase row
    std::vector<unsigned> perm;   // staircase position -> original column
    std::vector<std::uint64_t> eps_perm;
    std::vector<Slot> slots;
    mpz_class count;
    std::uint64_t count_u64 = 0;
};

// rows of a candidate, rebuilt in place from an index
struct CandidateDecoder {
    const Block* block;
    std::uint64_t p_pow[64];

    std::vector<std::vector<std::uint64_t>> decode(std::uint64_t idx, unsigned d) const {
        const auto& b = *block;
        std::vector<std::vector<std::uint64_t>> rows(b.levels.size(),
                                                     std::vector<std::uint64_t>(d, 0));
        for (std::size_t t = 0; t < b.levels.size(); ++t)
            rows[t][t] = p_pow[b.levels[t]];
        for (const Slot& s : b.slots) {
            const std::uint64_t digit = idx % s.count;
            idx /= s.count;
            rows[s.row][s.pos] = digit * s.base;
        }
        return rows;
    }
};

void profiles_rec(unsigned n, unsigned d, unsigned level, unsigned long remaining,
                  unsigned rows_used, std::vector<unsigned>& cur,
                  std::vector<std::vector<unsigned>>& out) {
    if (level + 1 == n) {
        // weight 1 per row at the last level
        if (remaining <= d - rows_used) {
            cur.push_back(static_cast<unsigned>(remaining));
            out.push_back(cur);
            cur.pop_back();
        }
        return;
    }
    const unsigned weight = n - level;
    for (unsigned k = 0; k <= d - rows_used && static_cast<unsigned long>(k) * weight <= remaining;
         ++k) {
        cur.push_back(k);
        profiles_rec(n, d, level + 1, remaining - static_cast<unsigned long>(k) * weight,
                     rows_used + k, cur, out);
        cur.pop_back();
    }
}

void pivot_choices_rec(const std::vector<unsigned>& profile, unsigned level,
                       std::vector<unsigned>& remaining, std::vector<unsigned>& chosen,
                       std::vector<std::vector<unsigned>>& out) {
    if (level == profile.size()) {
        out.push_back(chosen);
        return;
    }
    const unsigned k = profile[level];
    std::vector<unsigned> comb(k);
    // ascending k-subsets of `remaining`, lexicographic
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    if (k > remaining.size()) return;
    while (true) {
        for (unsigned i = 0; i < k; ++i) comb[i] = remaining[idx[i]];
        std::vector<unsigned> next_remaining;
        for (std::size_t i = 0, j = 0; i < remaining.size(); ++i) {
            if (j < k && idx[j] == i) {
                ++j;
                continue;
            }
            next_remaining.push_back(remaining[i]);
        }
        const std::size_t before = chosen.size();
        chosen.insert(chosen.end(), comb.begin(), comb.end());
        std::vector<unsigned> saved = remaining;
        remaining = next_remaining;
        pivot_choices_rec(profile, level + 1, remaining, chosen, out);
        remaining = saved;
        chosen.resize(before);

        if (k == 0) break;
        // next combination
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == remaining.size() - k + (i - 1)) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

std::vector<Block> build_blocks(const PrimaryForm& form) {
    const unsigned n = form.n, d = form.d;
    if ((static_cast<unsigned long>(n) * d) % 2 != 0)
        throw InputError("|L|^2 = |H| requires n*d even");
    const unsigned long half = static_cast<unsigned long>(n) * d / 2;

    std::vector<std::vector<unsigned>> profiles;
    std::vector<unsigned> cur;
    profiles_rec(n, d, 0, half, 0, cur, profiles);

    std::uint64_t p_pow[64];
    p_pow[0] = 1;
    for (unsigned i = 1; i <= n; ++i) p_pow[i] = p_pow[i - 1] * form.p;

    std::vector<Block> blocks;
    for (const auto& profile : profiles) {
        unsigned r = 0;
        for (unsigned k : profile) r += k;
        if (r > d) continue;

        std::vector<unsigned> all_cols(d);
        std::iota(all_cols.begin(), all_cols.end(), 0);
        std::vector<std::vector<unsigned>> pivots;
        std::vector<unsigned> chosen;
        pivot_choices_rec(profile, 0, all_cols, chosen, pivots);

        std::vector<unsigned> levels;
        std::vector<unsigned> sums(profile.size());
        unsigned acc = 0;
        for (std::size_t i = 0; i < profile.size(); ++i) {
            for (unsigned j = 0; j < profile[i]; ++j) levels.push_back(static_cast<unsigned>(i));
            acc += profile[i];
            sums[i] = acc;
        }

        for (const auto& pv : pivots) {
            Block b;
            b.profile = profile;
            b.levels = levels;
            b.perm = pv;
            for (unsigned c = 0; c < d; ++c)
                if (std::find(pv.begin(), pv.end(), c) == pv.end()) b.perm.push_back(c);
            b.eps_perm.resize(d);
            for (unsigned s = 0; s < d; ++s) b.eps_perm[s] = form.eps[b.perm[s]];

            b.count = 1;
            for (unsigned t = 0; t < r; ++t) {
                const unsigned lv = levels[t];
                for (unsigned pos = sums[lv]; pos < d; ++pos) {
                    const unsigned cap = pos < r ? levels[pos] : n;
                    Slot s{t, pos, p_pow[lv], p_pow[cap - lv]};
                    if (s.count > 1) b.slots.push_back(s);
                    b.count *= static_cast<unsigned long>(s.count);
                }
            }
            blocks.push_back(std::move(b));
        }
    }
    return blocks;
}

bool self_orthogonal(const Block& b, const std::vector<std::vector<std::uint64_t>>& rows,
                     std::uint64_t m) {
    for (std::size_t a = 0; a < rows.size(); ++a)
        for (std::size_t c = a; c < rows.size(); ++c) {
            std::uint64_t acc = 0;
            for (std::size_t j = 0; j < rows[a].size(); ++j) {
                const std::uint64_t t = mul_mod(rows[a][j], rows[c][j], m);
                acc = (acc + mul_mod(b.eps_perm[j], t, m)) % m;
            }
            if (acc != 0) return false;
        }
    return true;
}

struct Survivor {
    std::size_t block;
    std::uint64_t index;
};

std::vector<MetabolizerNF> finish(const PrimaryForm& form, const std::vector<Block>& blocks,
                                  std::vector<Survivor>& survivors, EnumerationStats* stats) {
    // canonicalize, dedupe, and order by the canonical key
    std::map<std::vector<std::uint64_t>, MetabolizerNF> canon;
    std::uint64_t p_pow[64];
    p_pow[0] = 1;
    for (unsigned i = 1; i <= form.n; ++i) p_pow[i] = p_pow[i - 1] * form.p;

    for (const Survivor& s : survivors) {
        const Block& b = blocks[s.block];
        CandidateDecoder dec{&b, {}};
        std::copy(p_pow, p_pow + form.n + 1, dec.p_pow);
        const auto rows = dec.decode(s.index, form.d);
        std::vector<std::vector<std::uint64_t>> orig(rows.size(),
                                                     std::vector<std::uint64_t>(form.d, 0));
        for (std::size_t t = 0; t < rows.size(); ++t)
            for (unsigned j = 0; j < form.d; ++j) orig[t][b.perm[j]] = rows[t][j];
        MetabolizerNF nf = normal_form(form.p, form.n, form.d, orig);
        canon.emplace(nf.canonical_key(), std::move(nf));
    }
    if (stats) stats->survivors = survivors.size();

    std::vector<MetabolizerNF> out;
    out.reserve(canon.size());
    for (auto& [key, nf] : canon) out.push_back(std::move(nf));
    return out;
}

std::vector<MetabolizerNF> enumerate_impl(const PrimaryForm& form, const EnumerationOptions& opts,
                                          EnumerationStats* stats, bool parallel) {
    const std::vector<Block> blocks = build_blocks(form);

    mpz_class total = 0;
    for (const Block& b : blocks) total += b.count;
    const mpz_class element_space = form.group_order();
    if (stats) {
        stats->element_space = element_space;
        stats->candidates_total = total;
        stats->candidates_scanned = 0;
        stats->survivors = 0;
        stats->complete = true;
    }
    if (!opts.budget_override) {
        if (element_space > opts.budget)
            throw BudgetExceeded("element space exceeds the enumeration budget",
                                 "p^(n*d) = " + element_space.get_str() + " > " +
                                     std::to_string(opts.budget));
        if (total > opts.budget)
            throw BudgetExceeded("candidate staircase matrices exceed the enumeration budget",
                                 "candidates = " + total.get_str() + " > " +
                                     std::to_string(opts.budget));
    }

    std::vector<Block> runnable = blocks;
    for (Block& b : runnable) {
        if (!b.count.fits_ulong_p())
            throw BudgetExceeded("a candidate block does not fit in 64 bits",
                                 "block candidates = " + b.count.get_str());
        b.count_u64 = b.count.get_ui();
    }

    const std::uint64_t m = form.modulus();
    std::uint64_t p_pow[64];
    p_pow[0] = 1;
    for (unsigned i = 1; i <= form.n; ++i) p_pow[i] = p_pow[i - 1] * form.p;

    // chunked scan over (block, index range)
    constexpr std::uint64_t kChunk = 8192;
    struct Chunk {
        std::size_t block;
        std::uint64_t begin, end;
    };
    std::vector<Chunk> chunks;
    for (std::size_t bi = 0; bi < runnable.size(); ++bi)
        for (std::uint64_t at = 0; at < runnable[bi].count_u64; at += kChunk)
            chunks.push_back({bi, at, std::min(runnable[bi].count_u64, at + kChunk)});

    const double deadline =
        opts.time_limit_seconds > 0 ? omp_get_wtime() + opts.time_limit_seconds : 0;
    std::atomic<bool> stop{false};
    std::atomic<std::uint64_t> scanned{0};

    std::vector<Survivor> survivors;
    const int nthreads = parallel ? (opts.threads > 0 ? opts.threads : omp_get_max_threads()) : 1;

#pragma omp parallel num_threads(nthreads)
    {
        std::vector<Survivor> local;
        std::uint64_t local_scanned = 0;
#pragma omp for schedule(dynamic)
        for (std::ptrdiff_t ci = 0; ci < static_cast<std::ptrdiff_t>(chunks.size()); ++ci) {
            if (stop.load(std::memory_order_relaxed)) continue;
            if (deadline > 0 && omp_get_wtime() > deadline) {
                stop.store(true, std::memory_order_relaxed);
                continue;
            }
            const Chunk& ch = chunks[static_cast<std::size_t>(ci)];
            const Block& b = runnable[ch.block];
            CandidateDecoder dec{&b, {}};
            std::copy(p_pow, p_pow + form.n + 1, dec.p_pow);
            for (std::uint64_t idx = ch.begin; idx < ch.end; ++idx) {
                const auto rows = dec.decode(idx, form.d);
                ++local_scanned;
                if (self_orthogonal(b, rows, m)) local.push_back({ch.block, idx});
            }
        }
        scanned += local_scanned;
#pragma omp critical
        survivors.insert(survivors.end(), local.begin(), local.end());
    }

    if (stats) {
        stats->candidates_scanned = scanned.load();
        stats->complete = !stop.load();
    }
    std::sort(survivors.begin(), survivors.end(), [](const Survivor& a, const Survivor& b) {
        return a.block != b.block ? a.block < b.block : a.index < b.index;
    });
    return finish(form, runnable, survivors, stats);
}

} // namespace

std::vector<MetabolizerNF> enumerate_metabolizers(const PrimaryForm& form,
                                                  const EnumerationOptions& opts,
                                                  EnumerationStats* stats) {
    return enumerate_impl(form, opts, stats, true);
}

std::vector<MetabolizerNF> enumerate_metabolizers_serial(const PrimaryForm& form,
                                                         const EnumerationOptions& opts,
                                                         EnumerationStats* stats) {
    return enumerate_impl(form, opts, stats, false);
}

// ---------------------------------------------------------------------------
// raw all-subgroups oracle

std::vector<MetabolizerNF> enumerate_metabolizers_raw(const PrimaryForm& form) {
    const mpz_class space = form.group_order();
    if (space > 1000000)
        throw BudgetExceeded("raw oracle is restricted to tiny instances",
                             "p^(n*d) = " + space.get_str() + " > 1000000");
    if ((static_cast<unsigned long>(form.n) * form.d) % 2 != 0)
        throw InputError("|L|^2 = |H| requires n*d even");

    const std::uint64_t m = form.modulus();
    const std::uint64_t total = space.get_ui();
    const std::uint64_t target = pow_u64(form.p, form.n * form.d / 2);

    auto decode = [&](std::uint64_t idx) {
        std::vector<std::uint64_t> x(form.d);
        for (unsigned j = 0; j < form.d; ++j) {
            x[j] = idx % m;
            idx /= m;
        }
        return x;
    };
    auto encode = [&](const std::vector<std::uint64_t>& x) {
        std::uint64_t idx = 0;
        for (unsigned j = form.d; j-- > 0;) idx = idx * m + (x[j] % m);
        return idx;
    };

    std::vector<std::vector<std::uint64_t>> elems(total);
    for (std::uint64_t i = 0; i < total; ++i) elems[i] = decode(i);

    auto add_idx = [&](std::uint64_t a, std::uint64_t b) {
        std::vector<std::uint64_t> x = elems[a];
        const auto& y = elems[b];
        for (unsigned j = 0; j < form.d; ++j) x[j] = (x[j] + y[j]) % m;
        return encode(x);
    };
    auto order_of = [&](std::uint64_t i) {
        unsigned minval = form.n;
        for (unsigned j = 0; j < form.d; ++j)
            minval = std::min(minval, valuation(elems[i][j], form.p, form.n));
        return pow_u64(form.p, form.n - minval);
    };

    std::set<std::vector<std::uint64_t>> seen;
    std::vector<std::vector<std::uint64_t>> queue;
    queue.push_back({0});
    seen.insert(queue.back());

    std::map<std::vector<std::uint64_t>, MetabolizerNF> found;
    while (!queue.empty()) {
        const std::vector<std::uint64_t> sub = std::move(queue.back());
        queue.pop_back();

        if (sub.size() == target) {
            bool iso = true;
            for (std::size_t a = 0; a < sub.size() && iso; ++a)
                for (std::size_t b = a; b < sub.size() && iso; ++b)
                    if (form.pairing_raw(elems[sub[a]], elems[sub[b]]) != 0) iso = false;
            if (iso) {
                std::vector<std::vector<std::uint64_t>> gens;
                for (std::uint64_t e : sub) gens.push_back(elems[e]);
                MetabolizerNF nf = normal_form(form.p, form.n, form.d, gens);
                found.emplace(nf.canonical_key(), std::move(nf));
            }
            continue;
        }

        for (std::uint64_t x = 1; x < total; ++x) {
            if (std::binary_search(sub.begin(), sub.end(), x)) continue;
            // predicted size |S| * ord(x) / |<x> meet S|
            const std::uint64_t ord = order_of(x);
            std::uint64_t meet = 0;
            std::uint64_t kx = 0; // k*x
            for (std::uint64_t k = 0; k < ord; ++k) {
                if (std::binary_search(sub.begin(), sub.end(), kx)) ++meet;
                kx = add_idx(kx, x);
            }
            if (sub.size() * (ord / meet) > target) continue;

            std::set<std::uint64_t> bigger(sub.begin(), sub.end());
            kx = x;
            for (std::uint64_t k = 1; k < ord; ++k) {
                for (std::uint64_t s : sub) bigger.insert(add_idx(s, kx));
                kx = add_idx(kx, x);
            }
            std::vector<std::uint64_t> next(bigger.begin(), bigger.end());
            if (next.size() > target) continue;
            if (seen.insert(next).second) queue.push_back(std::move(next));
        }
    }

    std::vector<MetabolizerNF> out;
    for (auto& [key, nf] : found) out.push_back(std::move(nf));
    return out;
}

// ---------------------------------------------------------------------------
// structure checks

StructureReport verify_structure(const MetabolizerNF& L, const PrimaryForm& form) {
    if (L.p != form.p || L.n != form.n || L.d != form.d)
        throw InputError("metabolizer and form shapes do not match");

    StructureReport rep;
    const mpz_class span = L.span_order();
    rep.order_condition = span * span == form.group_order();

    rep.isotropic = true;
    const auto orig = L.original_rows();
    for (std::size_t a = 0; a < orig.size() && rep.isotropic; ++a)
        for (std::size_t b = a; b < orig.size() && rep.isotropic; ++b)
            if (form.pairing_raw(orig[a], orig[b]) != 0) rep.isotropic = false;

    if (!rep.order_condition || !rep.isotropic)
        throw NotAMetabolizer("subgroup fails |L|^2 = |H| or beta(L, L) = 0");

    rep.profile_symmetric = true;
    for (unsigned i = 1; i < form.n; ++i)
        if (L.profile[i] != L.profile[form.n - i]) rep.profile_symmetric = false;

    rep.mid_sum_applicable = (form.n % 2 == 1) && (form.d % 4 == 0);
    if (rep.mid_sum_applicable) {
        const auto s = L.partial_sums();
        rep.mid_sum = s[(form.n - 1) / 2] == form.d / 2;
    }

    // invariant factors of H/L from the presentation [generators^T | p^n I]
    const std::size_t r = orig.size();
    IntMatrix pres(form.d, r + form.d);
    for (std::size_t t = 0; t < r; ++t)
        for (unsigned j = 0; j < form.d; ++j) pres.at(j, t) = mpz_class(orig[t][j]);
    const mpz_class pn = mpz_class(form.modulus());
    for (unsigned j = 0; j < form.d; ++j) pres.at(j, r + j) = pn;
    for (const mpz_class& di : smith_normal_form(pres).diagonal())
        if (di > 1) rep.quotient_factors.push_back(di);

    // L itself is a direct sum of Z_{p^{n-i}}, one per staircase row
    for (unsigned i = form.n; i-- > 0;)
        for (unsigned j = 0; j < L.profile[i]; ++j) {
            mpz_class pe;
            mpz_ui_pow_ui(pe.get_mpz_t(), form.p, form.n - i);
            rep.span_factors.push_back(pe);
        }
    rep.quotient_self_dual = rep.quotient_factors == rep.span_factors;
    return rep;
}

} // namespace knotcord
