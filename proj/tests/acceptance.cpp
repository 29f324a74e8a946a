// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.
#include <iostream>

#include "cyclotype/catalog.hpp"
#include "cyclotype/sweep.hpp"

using namespace cyclotype;

namespace {

int failed = 0;

void print(int k, const std::string& name, const Report& rep) {
    const bool pass = rep.ok() && !rep.items.empty();
    failed += !pass;
    std::cout << (pass ? "PASS" : "FAIL") << "  " << k << ". " << name << " (" << rep.items.size() << " items, "
              << rep.failures() << " failures)\n";
    for (const auto& i : rep.items)
        if (!i.pass) std::cout << "      " << i.id << ": " << i.detail << '\n';
}

Report merge(std::string name, std::initializer_list<Report> parts) {
    Report out;
    out.name = std::move(name);
    for (const auto& r : parts)
        for (const auto& i : r.items) out.items.push_back(i);
    return out;
}

}  // namespace

int main() {
    auto entries = run_sweep(sweep_partitions(8, 7, 10), 3);
    print(1, "oracle-classifier equivalence", check_equivalence(entries));
    print(2, "parity law", check_parity(entries));
    print(3, "nilpotent-type Jordan image", check_jordan_image(12, 3));
    print(4, "grading consistency", check_grading(entries));

    Catalog cat;
    try {
        cat = load();
    } catch (const std::exception& e) {
        std::cout << "FAIL  5-8. catalog failed to load: " << e.what() << '\n';
        return 1;
    }
    Report census;
    census.name = "census";
    const std::map<std::string, Census> published{{"E6", {20, 2, 13, 5}},
                                                  {"E7", {44, 3, 21, 5}},
                                                  {"E8", {69, 7, 27, 7}},
                                                  {"F4", {15, 2, 11, 4}},
                                                  {"G2", {4, 1, 3, 2}}};
    for (const auto& [name, expected] : published) {
        auto c = counts(cat, SimpleType::parse(name));
        census.add(name, c == expected,
                   std::to_string(c.nonzero) + "," + std::to_string(c.nilpotent) + "," + std::to_string(c.semisimple) +
                       "," + std::to_string(c.regular_semisimple));
    }
    print(5, "exceptional census", census);
    print(6, "catalog verification (ten checks)", verify(cat));
    print(7, "diagram tables", verify_table6(cat.table6));
    print(8, "bush coherence", merge("bush coherence", {check_bushes(10), verify_check(cat, 5)}));

    std::cout << (failed ? "FAILED " + std::to_string(failed) + " of 8" : std::string("ALL 8 PASSED")) << '\n';
    return failed ? 1 : 0;
}
