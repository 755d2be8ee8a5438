#pragma once

#include <string>
#include <vector>

namespace qplab {

// Outcome of a single symbolic or numeric verification.
struct CheckReport {
    std::string name;
    bool pass = true;
    std::vector<std::string> notes;

    explicit CheckReport(std::string n = "") : name(std::move(n)) {}

    void require(bool cond, const std::string& what) {
        if (!cond) {
            pass = false;
            notes.push_back("FAIL: " + what);
        }
    }
    void note(std::string msg) { notes.push_back(std::move(msg)); }
};

}  // namespace qplab
