#pragma once

#include <string>
#include <vector>

namespace dblcat {

struct Violation {
    std::string law;
    std::vector<std::string> witnesses;
    std::string detail;
};

// Empty iff valid; checks stop at the first violated law.
struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    explicit operator bool() const { return ok(); }
    std::string summary() const;
};

}  // namespace dblcat
