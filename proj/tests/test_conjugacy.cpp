#include <doctest.h>

#include <random>

#include "toraut/conjugacy.hpp"
#include "toraut/error.hpp"
#include "toraut/fixtures.hpp"

using namespace toraut;

namespace {

// Random word in the elementary matrices I + c E_ij, c in [-2, 2]: always
// unimodular, so conjugating by it preserves integral similarity.
IntMatrix random_unimodular(std::mt19937& rng, int n, int word_length) {
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::uniform_int_distribution<int> coef(-2, 2);
    auto m = IntMatrix::identity(n);
    for (int step = 0; step < word_length; ++step) {
        int i = pick(rng), j = pick(rng);
        if (i == j) continue;
        auto e = IntMatrix::identity(n);
        e.at(i, j) = coef(rng);
        m = m * e;
    }
    return m;
}

}  // namespace

TEST_CASE("similarity invariants are conjugation invariant") {
    std::mt19937 rng(7);
    const auto& a = find_fixture("companion-2re")->matrix;
    auto base = similarity_invariants(a);
    CHECK(base.characteristic == IntPoly{1, -2, -5, -3, -5, -2, 1});
    CHECK(base.power_traces.size() == 6);
    CHECK(base.power_traces[0] == trace(a));
    CHECK(base.power_traces[5] == trace(a.pow(6)));
    CHECK(base.shift_smith.size() == 5);
    CHECK(base.shift_smith[0].first == -2);
    CHECK(base.shift_smith[4].first == 2);

    for (int trial = 0; trial < 3; ++trial) {
        auto u = random_unimodular(rng, 6, 18);
        auto ui = inverse_unimodular(u);
        REQUIRE(ui.has_value());
        auto conjugated = *ui * a * u;
        CHECK(!first_invariant_difference(base, similarity_invariants(conjugated)).has_value());
    }
}

TEST_CASE("first_invariant_difference names the earliest mismatch") {
    auto inv_a = similarity_invariants(IntMatrix::from_rows({{2, 1}, {1, 1}}));
    auto inv_b = similarity_invariants(IntMatrix::from_rows({{4, 1}, {3, 1}}));
    auto diff = first_invariant_difference(inv_a, inv_b);
    REQUIRE(diff.has_value());
    CHECK(*diff == "char_poly");

    // Same characteristic polynomial, different lattice structure:
    // both have char (x - 1)^2, but f(A) has Smith diagonal (1, ...) vs (2, ...).
    auto unipotent = similarity_invariants(IntMatrix::from_rows({{1, 1}, {0, 1}}));
    auto doubled = similarity_invariants(IntMatrix::from_rows({{1, 2}, {0, 1}}));
    diff = first_invariant_difference(unipotent, doubled);
    REQUIRE(diff.has_value());
    CHECK(diff->rfind("factor_smith", 0) == 0);

    CHECK(!first_invariant_difference(inv_a, inv_a).has_value());
}

TEST_CASE("conjugator_lattice solves the intertwining equation") {
    auto a = IntMatrix::from_rows({{2, 1}, {1, 1}});
    std::mt19937 rng(11);
    auto u = random_unimodular(rng, 2, 10);
    auto b = *inverse_unimodular(u) * a * u;
    auto lattice = conjugator_lattice(a, b);
    CHECK(!lattice.empty());
    for (const auto& h : lattice) {
        CHECK(h * a == b * h);
    }

    // Commutant of the cat map: dimension 2 (polynomials in A).
    CHECK(conjugator_lattice(a, a).size() == 2);

    // No intertwiner between maps with coprime characteristic polynomials.
    CHECK(conjugator_lattice(a, IntMatrix::from_rows({{4, 1}, {3, 1}})).empty());
}

TEST_CASE("verify_conjugacy accepts only unimodular intertwiners") {
    auto a = IntMatrix::from_rows({{2, 1}, {1, 1}});
    CHECK(verify_conjugacy(a, a, IntMatrix::identity(2)));
    CHECK(verify_conjugacy(a, a, a));                      // A commutes with itself
    CHECK(!verify_conjugacy(a, a, IntMatrix::identity(2) * Int(2)));  // det 4
    auto b = IntMatrix::from_rows({{4, 1}, {3, 1}});
    CHECK(!verify_conjugacy(a, b, IntMatrix::identity(2)));  // HA != BH
}

TEST_CASE("decide_conjugacy on small explicit pairs") {
    auto a = IntMatrix::from_rows({{2, 1}, {1, 1}});
    auto verdict = decide_conjugacy(a, a);
    CHECK(verdict.status == ConjugacyStatus::Conjugate);
    REQUIRE(verdict.witness.has_value());
    CHECK(verify_conjugacy(a, a, *verdict.witness));

    // Conjugate by an explicit unimodular change of basis.
    auto u = IntMatrix::from_rows({{1, 1}, {0, 1}});
    auto b = *inverse_unimodular(u) * a * u;
    verdict = decide_conjugacy(a, b);
    CHECK(verdict.status == ConjugacyStatus::Conjugate);
    REQUIRE(verdict.witness.has_value());
    CHECK(verify_conjugacy(a, b, *verdict.witness));
    CHECK(!verdict.separating_invariant.has_value());

    // Different characteristic polynomials: distinct with a named invariant.
    verdict = decide_conjugacy(a, IntMatrix::from_rows({{4, 1}, {3, 1}}));
    CHECK(verdict.status == ConjugacyStatus::Distinct);
    REQUIRE(verdict.separating_invariant.has_value());
    CHECK(*verdict.separating_invariant == "char_poly");
    CHECK(!verdict.witness.has_value());

    // Equal invariants do not collapse the lattice test: the two unipotent
    // shears below are similar over Q but not over Z.
    verdict = decide_conjugacy(IntMatrix::from_rows({{1, 1}, {0, 1}}),
                               IntMatrix::from_rows({{1, 2}, {0, 1}}));
    CHECK(verdict.status == ConjugacyStatus::Distinct);

    CHECK_THROWS_AS(decide_conjugacy(a, IntMatrix::from_rows({{2, 0}, {0, 1}})), Error);
    CHECK_THROWS_AS(decide_conjugacy(IntMatrix::from_rows({{2, 0}, {0, 1}}), a), Error);
}

TEST_CASE("decide_conjugacy separates the worked fixtures") {
    const auto& c2re = find_fixture("companion-2re")->matrix;
    const auto& s3 = find_fixture("S3")->matrix;
    auto verdict = decide_conjugacy(c2re, s3);
    CHECK(verdict.status == ConjugacyStatus::Distinct);
    REQUIRE(verdict.separating_invariant.has_value());
    CHECK(*verdict.separating_invariant == "char_poly");

    // S1 vs S2-decomposable differ already in the characteristic polynomial.
    verdict = decide_conjugacy(find_fixture("S1")->matrix,
                               find_fixture("S2-decomposable")->matrix);
    CHECK(verdict.status == ConjugacyStatus::Distinct);
}

TEST_CASE("decide_conjugacy recovers random 6x6 conjugations") {
    std::mt19937 rng(23);
    const auto& a = find_fixture("S2-transitive")->matrix;
    for (int trial = 0; trial < 3; ++trial) {
        auto u = random_unimodular(rng, 6, 14);
        auto b = *inverse_unimodular(u) * a * u;
        auto verdict = decide_conjugacy(a, b);
        CHECK(verdict.status == ConjugacyStatus::Conjugate);
        REQUIRE(verdict.witness.has_value());
        CHECK(verify_conjugacy(a, b, *verdict.witness));
    }
}
