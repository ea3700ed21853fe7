#pragma once

#include <string>
#include <vector>

#include "toraut/int_matrix.hpp"

namespace toraut {

/// Named matrices shipped with the tool: the worked 6x6 automorphisms
/// (companion and block-diagonal constructions) and the two reference skew
/// forms.
struct Fixture {
    std::string name;
    std::string description;
    IntMatrix matrix;
};

const std::vector<Fixture>& fixtures();

/// Fixture lookup by name; nullptr when absent.
const Fixture* find_fixture(const std::string& name);

}  // namespace toraut
