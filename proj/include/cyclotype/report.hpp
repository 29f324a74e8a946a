#pragma once

#include <string>
#include <vector>

namespace cyclotype {

struct CheckItem {
    std::string id;
    bool pass = false;
    std::string detail;
};

/// Itemized outcome of a verification run.
struct Report {
    std::string name;
    std::vector<CheckItem> items;

    void add(std::string id, bool pass, std::string detail = {}) {
        items.push_back({std::move(id), pass, std::move(detail)});
    }
    int failures() const {
        int f = 0;
        for (const auto& i : items) f += !i.pass;
        return f;
    }
    bool ok() const { return failures() == 0; }
};

}  // namespace cyclotype
