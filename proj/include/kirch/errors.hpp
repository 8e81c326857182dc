#pragma once

#include <stdexcept>
#include <string>

namespace kirch {

struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// malformed input text
struct parse_error : error {
    explicit parse_error(const std::string& msg) : error("parse error: " + msg) {}
};

// structurally invalid graph data
struct validation_error : error {
    explicit validation_error(const std::string& msg) : error("validation error: " + msg) {}
};

// family parameters outside the family's constraint
struct infeasible_error : error {
    explicit infeasible_error(const std::string& msg) : error("infeasible: " + msg) {}
};

// numerical failure (non-convergence, wrong null space)
struct numeric_error : error {
    explicit numeric_error(const std::string& msg) : error("numeric error: " + msg) {}
};

} // namespace kirch
