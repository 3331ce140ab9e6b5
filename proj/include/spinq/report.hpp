#pragma once

#include <string>
#include <vector>

namespace spinq {

/// Collects failures from a batch of checks; empty means everything passed.
struct PropertyReport {
    bool ok = true;
    std::vector<std::string> failures;

    void fail(const std::string& what) {
        ok = false;
        failures.push_back(what);
    }
};

}  // namespace spinq
