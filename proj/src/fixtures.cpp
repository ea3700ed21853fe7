#include "toraut/fixtures.hpp"

#include "toraut/poly_roots.hpp"

namespace toraut {

namespace {

std::vector<Fixture> build_fixtures() {
    std::vector<Fixture> list;

    list.push_back({"companion-2re",
                    "Companion matrix of x^6-2x^5-5x^4-3x^3-5x^2-2x+1: two real expanding "
                    "eigenvalues, a complex contracting pair's mirror inside, and an "
                    "irrational rotation on the center; transitive unstable foliation.",
                    companion(lift_cubic(-2, -8, 1))});

    list.push_back({"companion-2com-1",
                    "Companion matrix of x^6-3x^5+9x^4-7x^3+9x^2-3x+1: complex expanding "
                    "pair rho e^{+-i alpha}; transitive unstable foliation.",
                    companion(lift_cubic(-3, 6, -1))});

    list.push_back({"companion-2com-2",
                    "Companion matrix of x^6+2x^4-x^3+2x^2+1: complex expanding pair; "
                    "transitive unstable foliation.",
                    companion(lift_cubic(0, -1, -1))});

    list.push_back({"S1",
                    "Block diagonal: 4x4 companion block with two real expanding and two "
                    "real contracting eigenvalues, plus a 2x2 rotation block of order 6; "
                    "decomposable (leaf closure is a 4-torus), not ergodic.",
                    IntMatrix::from_rows({{0, 1, 0, 0, 0, 0},
                                          {0, 0, 1, 0, 0, 0},
                                          {0, 0, 0, 1, 0, 0},
                                          {-1, -4, 12, -4, 0, 0},
                                          {0, 0, 0, 0, 0, 1},
                                          {0, 0, 0, 0, -1, 1}})});

    list.push_back({"S2-transitive",
                    "Block diagonal: 4x4 block whose quartic mixes on- and off-circle "
                    "spectrum, plus a 2x2 Anosov block; the unstable leaf is dense in the "
                    "whole 6-torus.",
                    IntMatrix::from_rows({{2, 1, 2, 1, 0, 0},
                                          {1, 1, 1, 1, 0, 0},
                                          {0, 2, 1, 1, 0, 0},
                                          {2, -2, 1, 0, 0, 0},
                                          {0, 0, 0, 0, 2, 1},
                                          {0, 0, 0, 0, 1, 1}})});

    list.push_back({"S2-decomposable",
                    "Block diagonal: 4x4 companion block with a complex expanding pair and "
                    "its contracting mirror, plus a 2x2 rotation block of order 6; "
                    "decomposable, not ergodic.",
                    IntMatrix::from_rows({{0, 1, 0, 0, 0, 0},
                                          {0, 0, 1, 0, 0, 0},
                                          {0, 0, 0, 1, 0, 0},
                                          {-1, 5, -9, 5, 0, 0},
                                          {0, 0, 0, 0, 0, 1},
                                          {0, 0, 0, 0, -1, 1}})});

    list.push_back({"S3",
                    "Three 2x2 blocks: two Anosov blocks and one rotation block of order "
                    "6; decomposable (the leaf closure is the product of the two Anosov "
                    "2-tori), not ergodic.",
                    IntMatrix::from_rows({{2, 1, 0, 0, 0, 0},
                                          {1, 1, 0, 0, 0, 0},
                                          {0, 0, 5, 3, 0, 0},
                                          {0, 0, 3, 2, 0, 0},
                                          {0, 0, 0, 0, 0, 1},
                                          {0, 0, 0, 0, -1, 1}})});

    list.push_back({"standard-J3",
                    "The standard skew form [[0, I], [-I, 0]] on Z^6 (a form fixture, not "
                    "an automorphism).",
                    standard_symplectic_form(3)});

    list.push_back({"nonstandard-J",
                    "The skew form J(-2,-5,-3) preserved by companion-2re; determinant 36 "
                    "(a form fixture, not an automorphism).",
                    nonstandard_symplectic_form(-2, -5, -3).matrix});

    return list;
}

}  // namespace

const std::vector<Fixture>& fixtures() {
    static const std::vector<Fixture> list = build_fixtures();
    return list;
}

const Fixture* find_fixture(const std::string& name) {
    for (const auto& fixture : fixtures()) {
        if (fixture.name == name) return &fixture;
    }
    return nullptr;
}

}  // namespace toraut
