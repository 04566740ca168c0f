#pragma once

#include <string>
#include <vector>

#include "gdgap/base_triangle.hpp"

namespace gdgap {

/// One reference-value comparison of a built-in worked example.
struct ExampleCheck {
    std::string name;
    std::string expected;
    std::string actual;
    bool ok;
};

/// Built-in fixtures:
///   1 - Heronian configuration, everything rational
///   2 - equilateral base in Q(sqrt(3)), the equality case
///   3 - isosceles base in Q(sqrt(2)) with critical inradius 1/sqrt(2)
BaseConfig example_config(int n);

/// Recomputes every reference value of example n and diffs it exactly.
std::vector<ExampleCheck> run_example(int n);

}  // namespace gdgap
