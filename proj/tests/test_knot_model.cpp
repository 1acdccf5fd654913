#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "knotcord/linking_form.hpp"
#include "knotcord/seifert.hpp"
#include "knotcord/smith.hpp"
#include "oracles.hpp"

using namespace knotcord;
namespace oracle = knotcord::testing;

namespace {

SeifertMatrix seifert(const std::vector<std::vector<long>>& rows) {
    std::vector<std::vector<mpz_class>> r;
    for (const auto& row : rows) {
        std::vector<mpz_class> x;
        for (long v : row) x.emplace_back(v);
        r.push_back(std::move(x));
    }
    return SeifertMatrix(IntMatrix::from_rows(r));
}

const std::vector<std::vector<long>> kCounterexample{{21, 53}, {52, 21}};
const std::vector<std::vector<long>> kTrefoil{{-1, 1}, {0, -1}};
const std::vector<std::vector<long>> kFigureEight{{1, 1}, {0, -1}};

} // namespace

TEST_CASE("seifert matrix invariants") {
    CHECK_NOTHROW(seifert(kCounterexample));
    CHECK_NOTHROW(SeifertMatrix(IntMatrix()));
    CHECK_THROWS_AS(seifert({{1, 1}, {1, 1}}), SeifertFormError); // skew part singular
    CHECK_THROWS_AS(seifert({{1}}), SeifertFormError);            // odd size
    CHECK_THROWS_AS(SeifertMatrix(IntMatrix(2, 3)), SeifertFormError);
    CHECK_THROWS_AS(seifert({{0, 2}, {0, 1}}), SeifertFormError); // det(V - V^T) = 4
}

TEST_CASE("alexander polynomial of the counterexample") {
    CHECK(alexander_polynomial(seifert(kCounterexample)) == IntPolynomial{2315, -4631, 2315});
}

TEST_CASE("alexander polynomial examples") {
    CHECK(alexander_polynomial(twisted_double_seifert(5)) == IntPolynomial{5, -11, 5});
    CHECK(alexander_polynomial(SeifertMatrix(IntMatrix())) == IntPolynomial{1});
    CHECK(alexander_polynomial(seifert(kFigureEight)) == IntPolynomial{1, -3, 1});
    // a = 0 double: Delta = t, reducible, |Delta(-1)| = 1
    const IntPolynomial unknotted = alexander_polynomial(twisted_double_seifert(0));
    CHECK(unknotted == IntPolynomial{0, 1});
    CHECK(abs(unknotted.eval(-1)) == 1);
}

TEST_CASE("alexander polynomial matches the cofactor route") {
    std::mt19937_64 rng(808);
    for (int it = 0; it < 60; ++it) {
        const SeifertMatrix v = oracle::random_seifert(rng, 1 + it % 3, 3);
        CHECK(alexander_polynomial(v) == oracle::alexander_by_cofactors(v));
    }
}

TEST_CASE("twisted double seifert form") {
    const SeifertMatrix v = twisted_double_seifert(1);
    CHECK(v.matrix().at(0, 0) == 1);
    CHECK(v.matrix().at(0, 1) == 1);
    CHECK(v.matrix().at(1, 0) == 0);
    CHECK(v.matrix().at(1, 1) == -1);
    // raw det(V - tV^T) has Delta(-1) = -3; the positive-leading normalization flips it
    CHECK(alexander_polynomial(twisted_double_seifert(-1)).eval(-1) == 3);
    CHECK((twisted_double_seifert(-1).symmetrized()).determinant() == 3);
    CHECK(double_cover_homology(twisted_double_seifert(-1)).order() == 3);
}

TEST_CASE("twisted double identity over a range") {
    for (long a = -10; a <= 10; ++a) {
        const IntPolynomial companion(
            std::vector<mpz_class>{mpz_class(a), mpz_class(-(2 * a + 1)), mpz_class(a)});
        CHECK(alexander_polynomial(twisted_double_seifert(a)) == companion.sign_normalized());
        CHECK(double_cover_homology(twisted_double_seifert(a)).order() == abs(mpz_class(4 * a + 1)));
    }
}

TEST_CASE("double cover homology") {
    const auto g = double_cover_homology(seifert(kCounterexample));
    CHECK(g == FiniteAbelianGroup::from_cyclic_orders(
                   {mpz_class(3), mpz_class(9), mpz_class(7), mpz_class(49)}));
    CHECK(double_cover_homology(SeifertMatrix(IntMatrix())).trivial());
    CHECK(double_cover_homology(seifert(kTrefoil)).invariant_factors() ==
          std::vector<mpz_class>{mpz_class(3)});
}

TEST_CASE("homology order equals |Delta(-1)| on random forms") {
    std::mt19937_64 rng(1919);
    for (int it = 0; it < 60; ++it) {
        const SeifertMatrix v = oracle::random_seifert(rng, 1 + it % 3, 3);
        CHECK(double_cover_homology(v).order() == abs(alexander_polynomial(v).eval(-1)));
    }
}

TEST_CASE("two bridge descriptors") {
    CHECK(two_bridge(3, 1).homology.invariant_factors() == std::vector<mpz_class>{mpz_class(3)});
    CHECK(two_bridge(5, 3).homology.invariant_factors() == std::vector<mpz_class>{mpz_class(5)});
    // K(4a+1, 2a) at a = 3
    CHECK(two_bridge(13, 6).homology.invariant_factors() == std::vector<mpz_class>{mpz_class(13)});
    CHECK(two_bridge(13, 6).homology ==
          double_cover_homology(twisted_double_seifert(3)));
    CHECK(two_bridge(5, 3).linking_value == mpq_class(3, 5));
    CHECK_THROWS_AS(two_bridge(4, 1), InvalidBridgeParams);
    CHECK_THROWS_AS(two_bridge(9, 3), InvalidBridgeParams);
    CHECK_THROWS_AS(two_bridge(5, 5), InvalidBridgeParams);
    CHECK_THROWS_AS(two_bridge(5, 0), InvalidBridgeParams);
}

TEST_CASE("primary parts") {
    const auto g = FiniteAbelianGroup::from_cyclic_orders(
        {mpz_class(3), mpz_class(9), mpz_class(7), mpz_class(49)});
    CHECK(primary_part(g, 3) ==
          FiniteAbelianGroup::from_cyclic_orders({mpz_class(3), mpz_class(9)}));
    CHECK(primary_part(FiniteAbelianGroup::from_invariant_factors({mpz_class(21)}), 7) ==
          FiniteAbelianGroup::from_invariant_factors({mpz_class(7)}));
    CHECK(primary_part(FiniteAbelianGroup::from_invariant_factors({mpz_class(441)}), 5).trivial());
}

TEST_CASE("linking form of the trefoil") {
    const LinkingForm form = linking_form(seifert(kTrefoil));
    CHECK(form.carrier().invariant_factors() == std::vector<mpz_class>{mpz_class(3)});
    CHECK(form.gram()[0][0] == mpq_class(2, 3));
    CHECK(form.is_symmetric());
    CHECK(form.is_nonsingular());
}

TEST_CASE("linking form of the figure eight") {
    const LinkingForm form = linking_form(seifert(kFigureEight));
    CHECK(form.carrier().invariant_factors() == std::vector<mpz_class>{mpz_class(5)});
    const mpq_class b = form.gram()[0][0];
    CHECK((b == mpq_class(2, 5) || b == mpq_class(3, 5)));
}

TEST_CASE("linking form of the unknot is trivial") {
    const LinkingForm form = linking_form(SeifertMatrix(IntMatrix()));
    CHECK(form.carrier().trivial());
    CHECK(form.generators().empty());
}

TEST_CASE("linking form symmetry and nonsingularity on random forms") {
    std::mt19937_64 rng(3111);
    for (int it = 0; it < 40; ++it) {
        const SeifertMatrix v = oracle::random_seifert(rng, 1 + it % 3, 2);
        const LinkingForm form = linking_form(v);
        CHECK(form.is_symmetric());
        CHECK(form.is_nonsingular());
        CHECK(form.carrier() == double_cover_homology(v));
    }
}

TEST_CASE("characters from linking") {
    const LinkingForm form = linking_form(seifert(kTrefoil));
    const Character trivial = character_of({mpz_class(0)}, form);
    CHECK(trivial.trivial());
    CHECK(trivial.self_linking == 0);

    const Character chi = character_of({mpz_class(1)}, form);
    CHECK(chi.modulus == 3);
    CHECK(chi.self_linking == mpq_class(2, 3));

    const Character chi_neg = character_of({mpz_class(-1)}, form);
    CHECK(chi_neg.self_linking == chi.self_linking);
}

TEST_CASE("characters respect generator orders on random forms") {
    std::mt19937_64 rng(515);
    for (int it = 0; it < 25; ++it) {
        const SeifertMatrix v = oracle::random_seifert(rng, 1 + it % 2, 2);
        const LinkingForm form = linking_form(v);
        const std::size_t rank = form.carrier().invariant_factors().size();
        std::vector<mpz_class> x(rank);
        for (auto& c : x) c = static_cast<long>(rng() % 7) - 3;
        CHECK_NOTHROW(character_of(x, form)); // construction asserts well-definedness
        std::vector<mpz_class> neg(rank);
        for (std::size_t i = 0; i < rank; ++i) neg[i] = -x[i];
        CHECK(character_of(neg, form).self_linking == character_of(x, form).self_linking);
    }
}
