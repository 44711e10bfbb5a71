#ifndef HESSEPENCIL_REPORT_HPP
#define HESSEPENCIL_REPORT_HPP

// Check results and their JSON / markdown rendering.

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <tuple>
#include <string>
#include <vector>

namespace hesse {

inline constexpr const char* kReportVersion = "1.0.0";

enum class Status { pass, fail, assumed, flagged };

inline std::string to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::assumed: return "assumed";
        case Status::flagged: return "flagged";
    }
    return "?";
}

struct CheckResult {
    std::string suite;
    std::string id;
    Status status = Status::fail;
    std::string expected;
    std::string actual;
    std::string claim;  // the statement being checked
    std::optional<double> runtime_ms;
};

inline CheckResult check(std::string suite, std::string id, bool ok, std::string expected, std::string actual,
                         std::string claim) {
    return {std::move(suite), std::move(id), ok ? Status::pass : Status::fail, std::move(expected), std::move(actual),
            std::move(claim), std::nullopt};
}

struct Report {
    std::uint64_t seed = 0;
    std::string field = "q";
    std::vector<CheckResult> checks;

    std::size_t count(Status s) const {
        return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [&](const auto& c) { return c.status == s; }));
    }
    bool failed() const { return count(Status::fail) > 0; }

    /// Canonical order: suite name, then check id.
    void sort() {
        std::stable_sort(checks.begin(), checks.end(),
                         [](const auto& a, const auto& b) { return std::tie(a.suite, a.id) < std::tie(b.suite, b.id); });
    }
};

inline nlohmann::ordered_json to_json(const CheckResult& c, bool timings) {
    nlohmann::ordered_json j;
    j["suite"] = c.suite;
    j["id"] = c.id;
    j["status"] = to_string(c.status);
    j["expected"] = c.expected;
    j["actual"] = c.actual;
    j["claim"] = c.claim;
    if (timings && c.runtime_ms) j["runtime_ms"] = *c.runtime_ms;
    return j;
}

inline nlohmann::ordered_json to_json(const Report& r, bool timings = false) {
    nlohmann::ordered_json j;
    j["version"] = kReportVersion;
    j["seed"] = r.seed;
    j["field"] = r.field;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) j["checks"].push_back(to_json(c, timings));
    j["summary"] = {{"pass", r.count(Status::pass)},
                    {"fail", r.count(Status::fail)},
                    {"assumed", r.count(Status::assumed)},
                    {"flagged", r.count(Status::flagged)}};
    return j;
}

inline std::string md_escape(std::string s) {
    std::string out;
    for (char c : s) {
        if (c == '|') out += "\\|";
        else if (c == '\n') out += ' ';
        else out += c;
    }
    return out;
}

inline std::string to_markdown(const Report& r, bool timings = false) {
    std::string s = "# Verification report\n\n";
    s += "- version: " + std::string(kReportVersion) + "\n";
    s += "- seed: " + std::to_string(r.seed) + "\n";
    s += "- field: " + r.field + "\n";
    s += "- summary: " + std::to_string(r.count(Status::pass)) + " pass, " + std::to_string(r.count(Status::fail)) + " fail, " +
         std::to_string(r.count(Status::assumed)) + " assumed, " + std::to_string(r.count(Status::flagged)) + " flagged\n\n";
    s += timings ? "| suite | id | status | expected | actual | claim | ms |\n|---|---|---|---|---|---|---|\n"
                 : "| suite | id | status | expected | actual | claim |\n|---|---|---|---|---|---|\n";
    for (const auto& c : r.checks) {
        s += "| " + md_escape(c.suite) + " | " + md_escape(c.id) + " | " + to_string(c.status) + " | " + md_escape(c.expected) +
             " | " + md_escape(c.actual) + " | " + md_escape(c.claim) + " |";
        if (timings) s += " " + (c.runtime_ms ? std::to_string(*c.runtime_ms) : std::string("")) + " |";
        s += "\n";
    }
    return s;
}

/// Wall-clock milliseconds spent in fn.
template <class Fn>
double time_ms(Fn&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace hesse

#endif
