#include "pwalk/report.hpp"

#include <stdexcept>

#include "json.hpp"

namespace pwalk {

std::string to_json_string(const VerificationReport& report, int indent) {
    nlohmann::json j;
    j["name"] = report.name;
    j["checked"] = report.checked;
    j["violations"] = nlohmann::json::array();
    for (const Violation& v : report.violations) {
        j["violations"].push_back(
            {{"location", v.location}, {"expected", v.expected}, {"actual", v.actual}});
    }
    j["elapsed_ms"] = report.elapsed_ms;
    j["pass"] = report.pass();
    return j.dump(indent);
}

VerificationReport report_from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    VerificationReport r;
    r.name = j.at("name").get<std::string>();
    r.checked = j.at("checked").get<std::int64_t>();
    for (const auto& v : j.at("violations")) {
        r.violations.push_back({v.at("location").get<std::string>(),
                                v.at("expected").get<std::string>(),
                                v.at("actual").get<std::string>()});
    }
    r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
    if (j.at("pass").get<bool>() != r.pass())
        throw std::invalid_argument("report json: pass flag inconsistent with violations");
    return r;
}

VerificationReport merge_reports(const std::string& name,
                                 const std::vector<VerificationReport>& parts) {
    VerificationReport out;
    out.name = name;
    for (const VerificationReport& p : parts) {
        out.checked += p.checked;
        out.violations.insert(out.violations.end(), p.violations.begin(), p.violations.end());
        out.elapsed_ms += p.elapsed_ms;
    }
    return out;
}

}  // namespace pwalk
