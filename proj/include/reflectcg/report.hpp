#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rcg {

enum class Status { pass, fail, inconclusive };

inline const char* status_str(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        default: return "inconclusive";
    }
}

struct CheckResult {
    std::string name;
    Status status = Status::pass;
    std::string detail;
    double millis = 0.0;
};

struct Report {
    std::string command;
    std::string mode;
    std::uint64_t seed = 0;
    std::uint64_t prime = 0;
    int reps = 0;
    std::vector<CheckResult> checks;

    void add(std::string name, bool ok, std::string detail = "") {
        checks.push_back({std::move(name), ok ? Status::pass : Status::fail, std::move(detail), 0.0});
    }
    void add(CheckResult c) { checks.push_back(std::move(c)); }
    void merge(const Report& other) {
        for (const auto& c : other.checks) checks.push_back(c);
    }

    bool all_pass() const {
        for (const auto& c : checks)
            if (c.status != Status::pass) return false;
        return true;
    }
    size_t failures() const {
        size_t n = 0;
        for (const auto& c : checks)
            if (c.status == Status::fail) ++n;
        return n;
    }
    size_t inconclusive() const {
        size_t n = 0;
        for (const auto& c : checks)
            if (c.status == Status::inconclusive) ++n;
        return n;
    }
    // 0 = verified, 1 = counterexample / inconclusive remains.
    int exit_code() const { return all_pass() ? 0 : 1; }
};

}  // namespace rcg
