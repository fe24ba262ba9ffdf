#pragma once

#include <string>
#include <vector>

namespace uqwb {

struct CheckItem {
    std::string name;
    bool pass = false;
    std::string witness;
};

/// Ordered list of named checks; fails iff some item fails.
struct Report {
    std::string title;
    std::vector<CheckItem> items;
    double seconds = 0.0;

    bool pass() const;
    void add(std::string name, bool ok, std::string witness = "");
    /// Appends another report's items, prefixing their names.
    void absorb(const Report& other, const std::string& prefix = "");
    std::string to_text() const;
};

}  // namespace uqwb
