// Structured pass/fail reporting. Each entry records one verified claim, the
// measured worst-case deviation, and the tolerance it was held to; reports
// serialize to JSON for diffing and CI consumption.
#pragma once

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rational.hpp"

namespace ringflow {

enum class CheckStatus { pass, fail, skip };

inline const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        default: return "skip";
    }
}

struct CheckEntry {
    std::string name;      // short stable identifier
    std::string claim;     // the property in mathematical terms
    double measured = 0;   // worst deviation found
    double tolerance = 0;  // bound the claim was held to
    CheckStatus status = CheckStatus::pass;
    std::string note;      // context: grid, step sizes, skips
};

class VerificationReport {
  public:
    void add(CheckEntry e) { entries_.push_back(std::move(e)); }

    // Convenience: pass iff measured <= tolerance.
    void check(std::string name, std::string claim, double measured, double tolerance,
               std::string note = {}) {
        add({std::move(name), std::move(claim), measured, tolerance,
             measured <= tolerance ? CheckStatus::pass : CheckStatus::fail, std::move(note)});
    }

    void check_flag(std::string name, std::string claim, bool ok, std::string note = {}) {
        add({std::move(name), std::move(claim), ok ? 0.0 : 1.0, 0.0,
             ok ? CheckStatus::pass : CheckStatus::fail, std::move(note)});
    }

    void skip(std::string name, std::string claim, std::string why) {
        add({std::move(name), std::move(claim), 0.0, 0.0, CheckStatus::skip, std::move(why)});
    }

    const std::vector<CheckEntry>& entries() const { return entries_; }

    bool all_passed() const {
        for (const auto& e : entries_)
            if (e.status == CheckStatus::fail) return false;
        return true;
    }

    int failures() const {
        int n = 0;
        for (const auto& e : entries_) n += e.status == CheckStatus::fail;
        return n;
    }

    const CheckEntry* find(const std::string& name) const {
        for (const auto& e : entries_)
            if (e.name == name) return &e;
        return nullptr;
    }

    nlohmann::json to_json() const {
        nlohmann::json out;
        out["passed"] = all_passed();
        out["failures"] = failures();
        auto arr = nlohmann::json::array();
        for (const auto& e : entries_) {
            nlohmann::json j;
            j["name"] = e.name;
            j["claim"] = e.claim;
            j["measured"] = e.measured;
            j["tolerance"] = e.tolerance;
            j["status"] = to_string(e.status);
            if (!e.note.empty()) j["note"] = e.note;
            arr.push_back(std::move(j));
        }
        out["entries"] = std::move(arr);
        return out;
    }

    void write_json(const std::string& path) const {
        std::ofstream f(path);
        if (!f) throw config_error("cannot open report path for writing: " + path);
        f << to_json().dump(2) << "\n";
    }

    // One line per entry, aligned for terminals.
    std::string to_text() const {
        std::string out;
        for (const auto& e : entries_) {
            char line[256];
            std::snprintf(line, sizeof line, "[%4s] %-28s measured %.3e  tol %.3e  %s\n",
                          to_string(e.status), e.name.c_str(), e.measured, e.tolerance,
                          e.note.c_str());
            out += line;
        }
        return out;
    }

  private:
    std::vector<CheckEntry> entries_;
};

}  // namespace ringflow
