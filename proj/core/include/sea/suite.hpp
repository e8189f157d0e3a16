#pragma once

#include <deque>
#include <string>

namespace sea {

/// One verdict line of a check suite.
struct CheckLine {
    std::string name;
    bool pass = true;
    double worst = 0;     // worst residual seen (numeric carriers)
    std::string detail;   // witness or note
};

struct SuiteReport {
    std::string suite;
    std::deque<CheckLine> lines;  // deque: add() hands out stable references

    bool pass() const {
        for (const auto& l : lines)
            if (!l.pass) return false;
        return true;
    }
    CheckLine& add(std::string name) {
        lines.push_back(CheckLine{std::move(name)});
        return lines.back();
    }
    const CheckLine* find(const std::string& name) const {
        for (const auto& l : lines)
            if (l.name == name) return &l;
        return nullptr;
    }
};

}  // namespace sea
