#pragma once

#include <stdexcept>

namespace gdgap {

// Error taxonomy mirrors the CLI exit-code contract:
//   input_error      -> exit 2 (bad literals, violated preconditions)
//   degeneracy_error -> exit 3 (critical/supercritical radius, prism limit)
//   check_error      -> exit 1 (an exact internal identity failed; never expected)
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct degeneracy_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct check_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace gdgap
