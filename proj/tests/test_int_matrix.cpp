#include <doctest.h>

#include "toraut/error.hpp"
#include "toraut/fixtures.hpp"
#include "toraut/int_matrix.hpp"

using namespace toraut;

TEST_CASE("construction, identity, and arithmetic") {
    auto a = IntMatrix::from_rows({{2, 1}, {1, 1}});
    CHECK(a.rows() == 2);
    CHECK(a.cols() == 2);
    CHECK(a.at(0, 1) == 1);
    CHECK(a == IntMatrix::from_rows({{2, 1}, {1, 1}}));
    CHECK(a != IntMatrix::identity(2));

    auto b = a * a;
    CHECK(b == IntMatrix::from_rows({{5, 3}, {3, 2}}));
    CHECK(a.pow(2) == b);
    CHECK(a.pow(0) == IntMatrix::identity(2));
    CHECK(a.pow(5) == a * a * a * a * a);

    CHECK(a + (-a) == IntMatrix(2, 2));
    CHECK((a - a).is_zero());
    CHECK(a * Int(3) == IntMatrix::from_rows({{6, 3}, {3, 3}}));
    CHECK(a.transposed() == a);  // symmetric
    CHECK(IntMatrix::from_rows({{0, 1}, {2, 3}}).transposed() ==
          IntMatrix::from_rows({{0, 2}, {1, 3}}));

    CHECK(a.row(0) == std::vector<Int>{2, 1});
    CHECK(a.apply({1, -1}) == std::vector<Int>{1, 0});
}

TEST_CASE("determinant and trace") {
    CHECK(det(IntMatrix::identity(4)) == 1);
    CHECK(det(IntMatrix::from_rows({{2, 1}, {1, 1}})) == 1);
    CHECK(det(IntMatrix::from_rows({{1, 2}, {3, 4}})) == -2);
    CHECK(det(IntMatrix::from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 0);
    // Vandermonde on 2, 3, 5: product of differences = 1*3*2 = 6.
    CHECK(det(IntMatrix::from_rows({{1, 2, 4}, {1, 3, 9}, {1, 5, 25}})) == 6);
    CHECK(trace(IntMatrix::from_rows({{1, 2}, {3, 4}})) == 5);
    CHECK(trace(IntMatrix::identity(6)) == 6);
}

TEST_CASE("char_poly and companion are inverse constructions") {
    IntPoly sextic{1, -2, -5, -3, -5, -2, 1};
    auto c = companion(sextic);
    CHECK(c.rows() == 6);
    CHECK(c.at(0, 1) == 1);  // superdiagonal
    CHECK(c.at(5, 0) == -1);  // bottom row = negated coefficients
    CHECK(c.at(5, 5) == 2);
    CHECK(char_poly(c) == sextic);

    auto cat = IntMatrix::from_rows({{2, 1}, {1, 1}});
    CHECK(char_poly(cat) == IntPoly{1, -3, 1});
    CHECK(char_poly(IntMatrix::identity(3)) == IntPoly{-1, 3, -3, 1});

    CHECK_THROWS_AS(companion(IntPoly{1, 0, 2}), Error);  // not monic
}

TEST_CASE("Cayley-Hamilton via poly_at_matrix") {
    auto fixtures_to_check = {"companion-2re", "S1", "S3", "S2-transitive"};
    for (const char* name : fixtures_to_check) {
        const auto& a = find_fixture(name)->matrix;
        CHECK(poly_at_matrix(char_poly(a), a).is_zero());
    }
    auto cat = IntMatrix::from_rows({{2, 1}, {1, 1}});
    CHECK(poly_at_matrix(IntPoly{1, -3, 1}, cat).is_zero());
    // Horner on a nontrivial polynomial: p(A) = A^2 + 2A + 3I.
    auto p = poly_at_matrix(IntPoly{3, 2, 1}, cat);
    CHECK(p == cat * cat + cat * Int(2) + IntMatrix::identity(2) * Int(3));
}

TEST_CASE("block_diag multiplies characteristic polynomials") {
    auto b1 = IntMatrix::from_rows({{2, 1}, {1, 1}});
    auto b2 = IntMatrix::from_rows({{4, 1}, {3, 1}});  // char x^2 - 5x + 1
    auto b3 = IntMatrix::from_rows({{1, 1}, {-1, 0}});  // char x^2 - x + 1
    auto m = block_diag({b1, b2, b3});
    CHECK(m.rows() == 6);
    CHECK(m.at(0, 0) == 2);
    CHECK(m.at(2, 2) == 4);
    CHECK(m.at(4, 5) == 1);
    CHECK(m.at(0, 2) == 0);
    CHECK(char_poly(m) == char_poly(b1) * char_poly(b2) * char_poly(b3));
    CHECK(det(m) == det(b1) * det(b2) * det(b3));
}

TEST_CASE("standard symplectic form") {
    auto j3 = standard_symplectic_form(3);
    CHECK(j3.rows() == 6);
    CHECK(j3.is_skew_symmetric());
    CHECK(det(j3) == 1);
    CHECK(j3.at(0, 3) == 1);
    CHECK(j3.at(3, 0) == -1);
    CHECK(j3.at(0, 1) == 0);
    CHECK(j3 * j3 == -IntMatrix::identity(6));
    CHECK(!j3.is_zero());
    CHECK(!IntMatrix::from_rows({{0, 1}, {1, 0}}).is_skew_symmetric());
}

TEST_CASE("nonstandard form J(a,b,c) and its degeneracy locus") {
    auto form = nonstandard_symplectic_form(-2, -5, -3);
    CHECK(!form.degenerate);
    CHECK(form.matrix.is_skew_symmetric());
    CHECK(det(form.matrix) == 36);  // (a + b - c - 2)^2 = (-6)^2
    auto c = companion(IntPoly{1, -2, -5, -3, -5, -2, 1});
    CHECK(is_symplectic(c, form.matrix));

    // a + b - c == 2 makes the form singular.
    auto bad = nonstandard_symplectic_form(1, 4, 3);
    CHECK(bad.degenerate);
    CHECK(det(bad.matrix) == 0);
}

TEST_CASE("is_symplectic") {
    auto j3 = standard_symplectic_form(3);
    CHECK(is_symplectic(IntMatrix::identity(6), j3));
    CHECK(!is_symplectic(IntMatrix::identity(6) * Int(2), j3));

    // S3 is three 2x2 determinant-one blocks, so it preserves diag(j, j, j)
    // with j the 2x2 unit form.
    auto j = IntMatrix::from_rows({{0, 1}, {-1, 0}});
    auto jjj = block_diag({j, j, j});
    CHECK(is_symplectic(find_fixture("S3")->matrix, jjj));
    auto cat = IntMatrix::from_rows({{2, 1}, {1, 1}});
    CHECK(is_symplectic(cat, j));
    CHECK(!is_symplectic(IntMatrix::from_rows({{1, 1}, {0, 2}}), j));

    CHECK_THROWS_AS(is_symplectic(cat, IntMatrix::identity(2)), Error);  // not skew
    CHECK_THROWS_AS(is_symplectic(cat, IntMatrix(2, 2)), Error);        // singular
}

TEST_CASE("inverse_unimodular") {
    auto cat = IntMatrix::from_rows({{2, 1}, {1, 1}});
    auto inv = inverse_unimodular(cat);
    REQUIRE(inv.has_value());
    CHECK(*inv == IntMatrix::from_rows({{1, -1}, {-1, 2}}));
    CHECK(*inv * cat == IntMatrix::identity(2));

    auto neg = inverse_unimodular(IntMatrix::from_rows({{0, 1}, {1, 0}}));  // det -1
    REQUIRE(neg.has_value());
    CHECK(*neg * IntMatrix::from_rows({{0, 1}, {1, 0}}) == IntMatrix::identity(2));

    CHECK(!inverse_unimodular(IntMatrix::from_rows({{2, 0}, {0, 1}})).has_value());

    for (const char* name : {"companion-2re", "S1", "S2-transitive", "S3"}) {
        const auto& a = find_fixture(name)->matrix;
        auto ai = inverse_unimodular(a);
        REQUIRE(ai.has_value());
        CHECK(a * *ai == IntMatrix::identity(6));
        CHECK(*ai * a == IntMatrix::identity(6));
    }
}
