#include "cyclotype/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "cyclotype/error.hpp"

namespace cyclotype {

std::string to_string(Flavor f) {
    switch (f) {
        case Flavor::sl: return "sl";
        case Flavor::so: return "so";
        case Flavor::sp: return "sp";
    }
    return "?";
}

Flavor parse_flavor(const std::string& s) {
    if (s == "sl") return Flavor::sl;
    if (s == "so") return Flavor::so;
    if (s == "sp") return Flavor::sp;
    throw DomainError("unknown flavor '" + s + "' (expected sl, so or sp)");
}

bool admissible(Flavor f, const std::vector<int>& parts) {
    if (parts.empty()) return false;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) return false;
        if (i > 0 && parts[i] > parts[i - 1]) return false;
    }
    if (f == Flavor::sl) return true;
    int paired_parity = f == Flavor::so ? 0 : 1;
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        if (parts[i] % 2 == paired_parity && (j - i) % 2 != 0) return false;
        i = j;
    }
    int n = std::accumulate(parts.begin(), parts.end(), 0);
    return f != Flavor::sp || n % 2 == 0;
}

Partition Partition::make(Flavor f, std::vector<int> parts) {
    CYCLOTYPE_REQUIRE(!parts.empty(), "empty partition");
    for (std::size_t i = 0; i < parts.size(); ++i) {
        CYCLOTYPE_REQUIRE(parts[i] >= 1, "partition parts must be positive");
        CYCLOTYPE_REQUIRE(i == 0 || parts[i] <= parts[i - 1], "partition parts must be non-increasing");
    }
    Partition p{f, std::move(parts)};
    CYCLOTYPE_REQUIRE(admissible(f, p.parts), "partition " + p.to_string() + " is not admissible for " +
                                                  cyclotype::to_string(f));
    return p;
}

Partition Partition::parse(Flavor f, const std::string& csv) {
    std::vector<int> parts;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            parts.push_back(std::stoi(tok, &used));
            CYCLOTYPE_REQUIRE(used == tok.size(), "bad partition entry '" + tok + "'");
        } catch (const std::logic_error&) {
            throw DomainError("bad partition entry '" + tok + "'");
        }
    }
    return make(f, std::move(parts));
}

int Partition::n() const { return std::accumulate(parts.begin(), parts.end(), 0); }

int Partition::multiplicity(int k) const { return static_cast<int>(std::count(parts.begin(), parts.end(), k)); }

bool Partition::is_zero() const { return parts.front() == 1; }

std::string Partition::to_string() const {
    std::string s;
    for (int x : parts) s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
}

std::vector<Partition> all_partitions(Flavor f, int n, bool include_zero) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int maxpart) {
        if (remaining == 0) {
            if (admissible(f, cur) && (include_zero || cur.front() > 1)) out.push_back(Partition{f, cur});
            return;
        }
        for (int k = std::min(remaining, maxpart); k >= 1; --k) {
            cur.push_back(k);
            rec(remaining - k, k);
            cur.pop_back();
        }
    };
    if (n >= 1) rec(n, n);
    return out;
}

SimpleType classical_type(Flavor f, int n) {
    switch (f) {
        case Flavor::sl:
            CYCLOTYPE_REQUIRE(n >= 2, "sl_n needs n >= 2");
            return SimpleType::make(Family::A, n - 1);
        case Flavor::sp:
            CYCLOTYPE_REQUIRE(n >= 2 && n % 2 == 0, "sp_n needs even n >= 2");
            return n == 2 ? SimpleType::make(Family::A, 1) : SimpleType::make(Family::C, n / 2);
        case Flavor::so:
            CYCLOTYPE_REQUIRE(n >= 3 && n != 4, "so_n is simple only for n = 3 or n >= 5");
            if (n == 3) return SimpleType::make(Family::A, 1);
            if (n == 6) return SimpleType::make(Family::A, 3);
            return n % 2 ? SimpleType::make(Family::B, n / 2) : SimpleType::make(Family::D, n / 2);
    }
    throw DomainError("unknown flavor");
}

int classical_rank(Flavor f, int n) {
    switch (f) {
        case Flavor::sl: return n - 1;
        case Flavor::so: return n / 2;
        case Flavor::sp: return n / 2;
    }
    return 0;
}

int classical_dim(Flavor f, int n) {
    switch (f) {
        case Flavor::sl: return n * n - 1;
        case Flavor::so: return n * (n - 1) / 2;
        case Flavor::sp: return n * (n + 1) / 2;
    }
    return 0;
}

}  // namespace cyclotype
