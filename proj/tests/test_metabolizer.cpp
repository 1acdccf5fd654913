#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "knotcord/metabolizer.hpp"

using namespace knotcord;

namespace {

using Vec = std::vector<std::uint64_t>;
using Gens = std::vector<Vec>;

std::vector<std::vector<std::uint64_t>> keys_of(const std::vector<MetabolizerNF>& ms) {
    std::vector<std::vector<std::uint64_t>> out;
    for (const auto& m : ms) out.push_back(m.canonical_key());
    return out;
}

} // namespace

TEST_CASE("primary form validation") {
    CHECK_NOTHROW(PrimaryForm(3, 1, 2, {1, -1}));
    CHECK_THROWS_AS(PrimaryForm(4, 1, 2, {1, 1}), InputError);   // not prime
    CHECK_THROWS_AS(PrimaryForm(3, 1, 2, {1, 3}), InputError);   // 3 is not a unit mod 3
    CHECK_THROWS_AS(PrimaryForm(3, 1, 2, {1}), InputError);      // wrong eps count
    CHECK_THROWS_AS(PrimaryForm(3, 0, 2, {1, 1}), InputError);
    CHECK_THROWS_AS(PrimaryForm(3, 1, 0, {}), InputError);       // d = 0 rejected
    const PrimaryForm alt = PrimaryForm::alternating(3, 2, 4);
    CHECK(alt.eps == std::vector<std::uint64_t>{1, 8, 1, 8});
}

TEST_CASE("pairing of the alternating form") {
    const PrimaryForm f = PrimaryForm::alternating(3, 1, 2);
    CHECK(f.pairing_raw({1, 1}, {1, 1}) == 0); // 1 - 1
    CHECK(f.pairing_raw({1, 0}, {1, 0}) == 1);
    CHECK(f.pairing_raw({1, 2}, {1, 2}) == 0); // 1 - 4 = -3 = 0 mod 3
}

TEST_CASE("enumeration at (3,1,2): anisotropic vs split eps") {
    const auto none = enumerate_metabolizers(PrimaryForm(3, 1, 2, {1, 1}));
    CHECK(none.empty());

    const auto two = enumerate_metabolizers(PrimaryForm(3, 1, 2, {1, -1}));
    REQUIRE(two.size() == 2);
    CHECK(two[0].original_rows() == Gens{{1, 1}});
    CHECK(two[1].original_rows() == Gens{{1, 2}});
    for (const auto& m : two) {
        CHECK(m.profile == std::vector<unsigned>{1});
        CHECK(m.staircase_ok());
        CHECK(m.span_order() == 3);
    }
}

TEST_CASE("enumeration at (3,1,4) with eps all ones contains the spec generators") {
    const PrimaryForm f(3, 1, 4, {1, 1, 1, 1});
    const auto ms = enumerate_metabolizers(f);
    CHECK(!ms.empty());
    const MetabolizerNF probe = normal_form(3, 1, 4, {{1, 1, 1, 0}, {1, 2, 0, 1}});
    bool found = false;
    for (const auto& m : ms)
        if (m.canonical_key() == probe.canonical_key()) found = true;
    CHECK(found);
}

TEST_CASE("enumeration agrees with the raw all-subgroups oracle at p=3, n=1") {
    for (unsigned d : {2u, 4u}) {
        std::vector<std::vector<long>> eps_list;
        if (d == 2)
            eps_list = {{1, 1}, {1, -1}, {-1, -1}};
        else
            eps_list = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, 1, -1}};
        for (const auto& eps : eps_list) {
            const PrimaryForm f(3, 1, d, eps);
            CHECK(keys_of(enumerate_metabolizers(f)) == keys_of(enumerate_metabolizers_raw(f)));
        }
    }
}

TEST_CASE("enumeration agrees with the raw oracle on a two-level instance") {
    const PrimaryForm f(3, 3, 2, {1, -1});
    const auto fast = enumerate_metabolizers(f);
    const auto raw = enumerate_metabolizers_raw(f);
    CHECK(keys_of(fast) == keys_of(raw));
    CHECK(!fast.empty());
    bool saw_two_level = false;
    for (const auto& m : fast)
        if (m.profile == std::vector<unsigned>{0, 1, 1}) saw_two_level = true;
    CHECK(saw_two_level);
}

TEST_CASE("parallel and serial scans produce identical output") {
    for (const PrimaryForm& f :
         {PrimaryForm::alternating(3, 1, 4), PrimaryForm::alternating(7, 1, 4),
          PrimaryForm::alternating(3, 3, 2)}) {
        EnumerationStats par_stats, ser_stats;
        const auto par = enumerate_metabolizers(f, {}, &par_stats);
        const auto ser = enumerate_metabolizers_serial(f, {}, &ser_stats);
        CHECK(par == ser);
        CHECK(par_stats.candidates_total == ser_stats.candidates_total);
        CHECK(par_stats.candidates_scanned == ser_stats.candidates_scanned);
    }
}

TEST_CASE("enumeration is deterministic") {
    const PrimaryForm f = PrimaryForm::alternating(7, 1, 4);
    CHECK(enumerate_metabolizers(f) == enumerate_metabolizers(f));
}

TEST_CASE("budget rule") {
    // p^(n*d) = 3^40 blows the 10^8 ceiling
    const PrimaryForm f = PrimaryForm::alternating(3, 5, 8);
    CHECK_THROWS_AS(enumerate_metabolizers(f), BudgetExceeded);
}

TEST_CASE("normal form of a rescaled line") {
    const MetabolizerNF nf = normal_form(3, 1, 2, {{2, 2}});
    CHECK(nf.original_rows() == Gens{{1, 1}});
    CHECK(nf.perm == std::vector<unsigned>{0, 1});
}

TEST_CASE("normal form needs a coordinate permutation when the lead column is dead") {
    const MetabolizerNF nf = normal_form(3, 1, 2, {{0, 1}});
    CHECK(nf.perm == std::vector<unsigned>{1, 0});
    CHECK(nf.rows == Gens{{1, 0}});
    CHECK(nf.original_rows() == Gens{{0, 1}});
    CHECK(nf.staircase_ok());
}

TEST_CASE("normal form is idempotent and span preserving") {
    std::mt19937_64 rng(60622);
    for (int it = 0; it < 120; ++it) {
        const unsigned d = 2 + it % 2 * 2; // 2 or 4
        const unsigned n = (it % 3 == 0) ? 2 : 1;
        const std::uint64_t p = (it % 5 == 0) ? 5 : 3;
        const std::uint64_t m = 1 + (n == 1 ? p - 1 : p * p - 1);
        Gens gens(1 + it % 3, Vec(d));
        for (auto& g : gens)
            for (auto& x : g) x = rng() % m;
        const MetabolizerNF nf = normal_form(p, n, d, gens);
        CHECK(nf.staircase_ok());
        const MetabolizerNF again = normal_form(p, n, d, nf.original_rows());
        CHECK(nf == again);
        // same span from the original generators and from the normal form
        const MetabolizerNF regen = normal_form(p, n, d, nf.span_elements());
        CHECK(nf == regen);
    }
}

TEST_CASE("random subgroups of (Z_9)^2 stay in staircase form") {
    std::mt19937_64 rng(4711);
    for (int it = 0; it < 60; ++it) {
        Gens gens(1 + it % 2, Vec(2));
        for (auto& g : gens)
            for (auto& x : g) x = rng() % 9;
        const MetabolizerNF nf = normal_form(3, 2, 2, gens);
        CHECK(nf.staircase_ok());
        const auto sums = nf.partial_sums();
        for (std::size_t t = 0; t < nf.rank(); ++t) {
            const unsigned lv = nf.level_of_row(t);
            for (unsigned pos = sums[lv]; pos < 2; ++pos)
                CHECK(nf.rows[t][pos] % (lv == 0 ? 1 : 3) == 0);
        }
    }
}

TEST_CASE("structure checks pass for every enumerated metabolizer") {
    for (const PrimaryForm& f :
         {PrimaryForm(3, 1, 4, {1, -1, 1, -1}), PrimaryForm(3, 3, 2, {1, -1}),
          PrimaryForm(7, 1, 4, {1, -1, 1, -1})}) {
        const auto ms = enumerate_metabolizers(f);
        for (const auto& m : ms) {
            const StructureReport rep = verify_structure(m, f);
            CHECK(rep.all_pass());
            CHECK(rep.quotient_factors == rep.span_factors);
            // row count identity: sum k_i = d - k_0
            unsigned rows = 0;
            for (unsigned k : m.profile) rows += k;
            CHECK(rows == f.d - m.profile[0]);
        }
    }
}

TEST_CASE("isotropy and order hold on every enumerated metabolizer, elementwise") {
    const PrimaryForm f(3, 1, 4, {1, -1, 1, -1});
    const auto ms = enumerate_metabolizers(f);
    CHECK(!ms.empty());
    for (const auto& m : ms) {
        const auto elems = m.span_elements();
        CHECK(mpz_class(static_cast<unsigned long>(elems.size())) * elems.size() ==
              f.group_order());
        for (const auto& x : elems)
            for (const auto& y : elems) CHECK(f.pairing_raw(x, y) == 0);
    }
}

TEST_CASE("verify_structure rejects non-metabolizers") {
    const PrimaryForm f(3, 1, 2, {1, -1});
    const MetabolizerNF bad = normal_form(3, 1, 2, {{1, 0}}); // beta((1,0),(1,0)) = 1/3
    CHECK_THROWS_AS(verify_structure(bad, f), NotAMetabolizer);
    const MetabolizerNF small = normal_form(3, 1, 2, {{0, 0}}); // |L|^2 != |H|
    CHECK_THROWS_AS(verify_structure(small, f), NotAMetabolizer);
}

TEST_CASE("a metabolizer of (Z_27)^8 with the staircase profile (1,3,3)") {
    // pairs (0,1), (2,3), (4,5), (6,7) under eps (1,-1,...): u spans are isotropic
    const std::uint64_t P = 3, PP = 9;
    Gens gens;
    gens.push_back({1, 1, 0, 0, 0, 0, 0, 0});
    gens.push_back({0, 0, P, P, 0, 0, 0, 0});
    gens.push_back({0, 0, 0, 0, P, P, 0, 0});
    gens.push_back({0, 0, 0, 0, 0, 0, P, P});
    gens.push_back({0, 0, PP, 27 - PP, 0, 0, 0, 0});
    gens.push_back({0, 0, 0, 0, PP, 27 - PP, 0, 0});
    gens.push_back({0, 0, 0, 0, 0, 0, PP, 27 - PP});

    const PrimaryForm f = PrimaryForm::alternating(3, 3, 8);
    const MetabolizerNF nf = normal_form(3, 3, 8, gens);
    CHECK(nf.profile == std::vector<unsigned>{1, 3, 3});
    CHECK(nf.staircase_ok());
    // diagonal entries 1, p, p, p, p^2, p^2, p^2
    const auto sums = nf.partial_sums();
    CHECK(sums == std::vector<unsigned>{1, 4, 7});
    for (std::size_t t = 0; t < nf.rank(); ++t) {
        const unsigned lv = nf.level_of_row(t);
        CHECK(nf.rows[t][t] == (lv == 0 ? 1u : (lv == 1 ? P : PP)));
    }
    const StructureReport rep = verify_structure(nf, f);
    CHECK(rep.all_pass());
    CHECK(rep.profile_symmetric); // k_1 = k_2 = 3
    CHECK(rep.mid_sum_applicable);
    CHECK(rep.mid_sum); // S_1 = 4 = d/2
}
