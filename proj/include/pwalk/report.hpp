#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pwalk {

struct Violation {
    std::string location;
    std::string expected;
    std::string actual;

    friend bool operator==(const Violation&, const Violation&) = default;
};

// Result of one verification pass. pass() is derived, never stored: a report
// passes exactly when it recorded no violations.
struct VerificationReport {
    std::string name;
    std::int64_t checked = 0;
    std::vector<Violation> violations;
    std::int64_t elapsed_ms = 0;

    bool pass() const { return violations.empty(); }

    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

// Equality that ignores wall-clock time; used when comparing serial vs
// parallel runs of the same kernel.
inline bool same_outcome(const VerificationReport& x, const VerificationReport& y) {
    return x.name == y.name && x.checked == y.checked && x.violations == y.violations;
}

std::string to_json_string(const VerificationReport& report, int indent = 2);
VerificationReport report_from_json(const std::string& text);

// Merge sub-reports into one: counts add, violations concatenate in order.
VerificationReport merge_reports(const std::string& name,
                                 const std::vector<VerificationReport>& parts);

}  // namespace pwalk
