#include <doctest.h>

#include <vector>

#include "toraut/error.hpp"
#include "toraut/fixtures.hpp"
#include "toraut/foliation.hpp"
#include "toraut/lattice.hpp"

using namespace toraut;

namespace {

std::vector<Int> unit6(int i) {
    std::vector<Int> e(6, Int(0));
    e[i] = 1;
    return e;
}

const IntMatrix& fixture_matrix(const char* name) { return find_fixture(name)->matrix; }

// The hull must be carried into itself by A, vector by vector.
void check_invariant(const IntMatrix& a, const RationalHull& hull) {
    for (const auto& v : hull.basis) {
        CHECK(lattice_contains(hull.basis, a.apply(v)));
    }
}

bool near(const BigFloat& x, const BigFloat& y, const BigFloat& tol) {
    BigFloat d = x > y ? x - y : y - x;
    return d < tol;
}

}  // namespace

TEST_CASE("rational hulls of the block fixtures land on coordinate subtori") {
    const auto& s1 = fixture_matrix("S1");
    auto hull = rational_hull(s1, SpectrumPart::Unstable);
    CHECK(hull.dim == 4);
    REQUIRE(hull.basis.size() == 4);
    for (int i = 0; i < 4; ++i) CHECK(hull.basis[i] == unit6(i));
    check_invariant(s1, hull);

    hull = rational_hull(s1, SpectrumPart::Center);
    CHECK(hull.dim == 2);
    CHECK(hull.basis[0] == unit6(4));
    CHECK(hull.basis[1] == unit6(5));
    check_invariant(s1, hull);

    // Stable and unstable roots share the quartic factor, so the hulls agree.
    CHECK(rational_hull(s1, SpectrumPart::Stable).basis == rational_hull(s1, SpectrumPart::Unstable).basis);

    const auto& s3 = fixture_matrix("S3");
    hull = rational_hull(s3, SpectrumPart::Unstable);
    CHECK(hull.dim == 4);
    check_invariant(s3, hull);

    // For S2-transitive only the Salem quartic carries center spectrum.
    const auto& s2t = fixture_matrix("S2-transitive");
    hull = rational_hull(s2t, SpectrumPart::Center);
    CHECK(hull.dim == 4);
    for (int i = 0; i < 4; ++i) CHECK(hull.basis[i] == unit6(i));
    hull = rational_hull(s2t, SpectrumPart::Unstable);
    CHECK(hull.dim == 6);
    check_invariant(s2t, hull);
}

TEST_CASE("an irreducible characteristic polynomial forces full hulls") {
    for (const char* name : {"companion-2re", "companion-2com-1", "companion-2com-2"}) {
        CAPTURE(name);
        const auto& a = fixture_matrix(name);
        for (auto part : {SpectrumPart::Stable, SpectrumPart::Center, SpectrumPart::Unstable}) {
            auto hull = rational_hull(a, part);
            CHECK(hull.dim == 6);
            CHECK(resonance_relations(a, part).empty());
        }
    }
}

TEST_CASE("resonance relations annihilate the hull exactly") {
    const auto& s1 = fixture_matrix("S1");
    auto relations = resonance_relations(s1, SpectrumPart::Unstable);
    REQUIRE(relations.size() == 2);
    CHECK(relations[0] == unit6(4));
    CHECK(relations[1] == unit6(5));
    auto hull = rational_hull(s1, SpectrumPart::Unstable);
    for (const auto& r : relations) {
        for (const auto& v : hull.basis) {
            Int dot = 0;
            for (int i = 0; i < 6; ++i) dot += r[i] * v[i];
            CHECK(dot == 0);
        }
    }

    auto center_relations = resonance_relations(fixture_matrix("S2-transitive"), SpectrumPart::Center);
    REQUIRE(center_relations.size() == 2);
    CHECK(center_relations[0] == unit6(4));
    CHECK(center_relations[1] == unit6(5));
}

TEST_CASE("empty spectral parts are reported as errors") {
    auto cat = IntMatrix::from_rows({{2, 1}, {1, 1}});
    CHECK_THROWS_AS(rational_hull(cat, SpectrumPart::Center), Error);
    auto rot = IntMatrix::from_rows({{0, 1}, {-1, 1}});
    CHECK_THROWS_AS(rational_hull(rot, SpectrumPart::Unstable), Error);
    CHECK_THROWS_AS(resonance_relations(cat, SpectrumPart::Center), Error);
    CHECK_THROWS_AS(rational_hull(IntMatrix::identity(2), SpectrumPart::Stable), Error);  // repeated
}

TEST_CASE("foliation verdicts") {
    struct Row {
        const char* name;
        FoliationKind kind;
        int closure_dim;
    };
    const Row rows[] = {
        {"companion-2re", FoliationKind::Transitive, 6},
        {"companion-2com-1", FoliationKind::Transitive, 6},
        {"companion-2com-2", FoliationKind::Transitive, 6},
        {"S1", FoliationKind::Decomposable, 4},
        {"S2-transitive", FoliationKind::Transitive, 6},
        {"S2-decomposable", FoliationKind::Decomposable, 4},
        {"S3", FoliationKind::Decomposable, 4},
    };
    for (const auto& row : rows) {
        CAPTURE(row.name);
        auto verdict = classify_foliation(fixture_matrix(row.name));
        CHECK(verdict.kind == row.kind);
        CHECK(verdict.closure_dim == row.closure_dim);
        CHECK(int(verdict.hull_basis.size()) == row.closure_dim);
        CHECK(int(verdict.resonance_basis.size()) == 6 - row.closure_dim);
        CHECK(!verdict.outside_paper_class);
    }

    // dim W^u = 1 for the cat map: same computation, flagged as outside the
    // two-dimensional-unstable class.
    auto verdict = classify_foliation(IntMatrix::from_rows({{2, 1}, {1, 1}}));
    CHECK(verdict.kind == FoliationKind::Transitive);
    CHECK(verdict.closure_dim == 2);
    CHECK(verdict.outside_paper_class);

    // No expanding part at all.
    CHECK_THROWS_AS(classify_foliation(IntMatrix::from_rows({{0, 1}, {-1, 1}})), Error);
}

TEST_CASE("decomposition report roles and center orders") {
    auto report = decomposition_report(fixture_matrix("companion-2re"));
    REQUIRE(report.factors.size() == 1);
    CHECK(report.factors[0].role == FactorRole::Mixed);
    CHECK(int(report.factors[0].sublattice.size()) == 6);
    CHECK(!report.center_order.has_value());

    report = decomposition_report(fixture_matrix("S1"));
    REQUIRE(report.factors.size() == 2);
    CHECK(report.factors[0].poly == IntPoly{1, -1, 1});
    CHECK(report.factors[0].role == FactorRole::Center);
    CHECK(report.factors[1].poly == IntPoly{1, 4, -12, 4, 1});
    CHECK(report.factors[1].role == FactorRole::Anosov);
    REQUIRE(report.center_order.has_value());
    CHECK(*report.center_order == 6);

    report = decomposition_report(fixture_matrix("S2-transitive"));
    REQUIRE(report.factors.size() == 2);
    CHECK(report.factors[0].role == FactorRole::Anosov);  // x^2 - 3x + 1
    CHECK(report.factors[1].role == FactorRole::Mixed);   // Salem quartic
    CHECK(!report.center_order.has_value());

    report = decomposition_report(fixture_matrix("S3"));
    REQUIRE(report.factors.size() == 3);
    CHECK(report.factors[0].role == FactorRole::Anosov);
    CHECK(report.factors[1].role == FactorRole::Anosov);
    CHECK(report.factors[2].role == FactorRole::Center);
    CHECK(*report.center_order == 6);
    // Sublattices sit on the matching coordinate pairs.
    CHECK(report.factors[0].sublattice == std::vector<std::vector<Int>>{unit6(2), unit6(3)});
    CHECK(report.factors[1].sublattice == std::vector<std::vector<Int>>{unit6(0), unit6(1)});
    CHECK(report.factors[2].sublattice == std::vector<std::vector<Int>>{unit6(4), unit6(5)});

    report = decomposition_report(fixture_matrix("S2-decomposable"));
    REQUIRE(report.factors.size() == 2);
    CHECK(report.factors[0].role == FactorRole::Center);
    CHECK(report.factors[1].role == FactorRole::Anosov);
    CHECK(*report.center_order == 6);
}

TEST_CASE("polar parameters of a reduced complex root") {
    // u + iv = 3i: s^2 - 9s - 22 = 0 gives s = 11, and alpha = pi/2, so
    // rho - 1/rho = |v| = 3 and rho^2 + 1/rho^2 = 11 exactly.
    auto polar = polar_parameters(BigFloat(0), BigFloat(3));
    BigFloat tol("1e-40");
    CHECK(near(polar.rho - 1 / polar.rho, BigFloat(3), tol));
    CHECK(near(polar.rho * polar.rho + 1 / (polar.rho * polar.rho), BigFloat(11), tol));
    CHECK(near(polar.alpha, acos(BigFloat(0)), tol));
    CHECK(polar.rho > 1);

    // General identity: lambda + 1/lambda recovers u + i|v|.
    BigFloat u = BigFloat(1) / 3, v = BigFloat(7) / 5;
    polar = polar_parameters(u, v);
    CHECK(polar.rho > 1);
    CHECK(polar.alpha > 0);
    CHECK(near((polar.rho + 1 / polar.rho) * cos(polar.alpha), u, tol));
    CHECK(near((polar.rho - 1 / polar.rho) * sin(polar.alpha), v, tol));

    // The sign of v is immaterial.
    auto mirror = polar_parameters(u, -v);
    CHECK(near(mirror.rho, polar.rho, tol));
    CHECK(near(mirror.alpha, polar.alpha, tol));

    CHECK_THROWS_AS(polar_parameters(BigFloat(3), BigFloat(0)), Error);  // real root
}
