#include "cyclotype/classical.hpp"

#include <algorithm>
#include <functional>

#include "cyclotype/error.hpp"
#include "cyclotype/oracle.hpp"

namespace cyclotype {

std::string to_string(Kind k) {
    switch (k) {
        case Kind::Nilpotent: return "nilpotent";
        case Kind::Semisimple: return "semisimple";
        case Kind::Mixed: return "mixed";
    }
    return "?";
}

std::string CyclicType::to_string() const {
    if (kind == Kind::Semisimple && regular) return "regular semisimple";
    return cyclotype::to_string(kind);
}

std::string ReducingFactor::name() const { return cyclotype::to_string(flavor) + "_" + std::to_string(dim); }

namespace {

void require_nonzero(const Partition& p) {
    CYCLOTYPE_REQUIRE(admissible(p.flavor, p.parts),
                      "inadmissible partition " + p.to_string() + " for " + to_string(p.flavor));
    CYCLOTYPE_REQUIRE(!p.is_zero(), "the zero element (all parts 1) has no cyclic elements");
}

// Shape (n1, ..., n1, 1, ..., 1)
bool head_and_ones(const Partition& p) {
    const int n1 = p.largest();
    return p.multiplicity(n1) + p.multiplicity(1) == p.p();
}

void require_even_depth(const Partition& p) {
    CYCLOTYPE_REQUIRE(depth(p) % 2 == 0, "partition " + p.to_string() + " has odd depth (nilpotent type)");
}

}  // namespace

int depth(const Partition& p) {
    require_nonzero(p);
    const int n1 = p.largest(), n2 = p.second();
    if (p.flavor == Flavor::so && n1 % 2 == 1) {
        if (n1 == n2) return 2 * n1 - 2;
        if (n1 - n2 == 1) return 2 * n1 - 3;
        return 2 * n1 - 4;  // n1 - n2 >= 2, or a single part
    }
    return 2 * n1 - 2;
}

bool is_even(const Partition& p) {
    return std::all_of(p.parts.begin(), p.parts.end(), [&](int k) { return k % 2 == p.parts[0] % 2; });
}

bool nilpotent_type(const Partition& p) {
    require_nonzero(p);
    return p.flavor == Flavor::so && p.n() >= 7 && p.largest() % 2 == 1 && p.largest() - p.second() == 1;
}

CyclicType closed_form_type(const Partition& p) {
    require_nonzero(p);
    if (nilpotent_type(p)) return {Kind::Nilpotent, false};
    const int n1 = p.largest(), ones = p.multiplicity(1), len = p.p();
    if (p.flavor != Flavor::so) {
        if (head_and_ones(p)) return {Kind::Semisimple, ones <= 1};
        return {Kind::Mixed, false};
    }
    // so (a): n1 with even multiplicity, the rest 1
    if (head_and_ones(p) && p.multiplicity(n1) % 2 == 0) return {Kind::Semisimple, n1 % 2 == 1 && ones <= 2};
    // so (b): (2m+1, 2m-1, 1, ..., 1)
    if (n1 % 2 == 1 && len >= 2 && p.parts[1] == n1 - 2 && p.multiplicity(n1) == 1 &&
        std::all_of(p.parts.begin() + 2, p.parts.end(), [](int k) { return k == 1; }))
        return {Kind::Semisimple, len <= 4};
    // so (c): n1 >= 5 (odd by admissibility), the rest 1
    if (n1 >= 5 && p.multiplicity(n1) == 1 && head_and_ones(p)) return {Kind::Semisimple, len <= 2};
    return {Kind::Mixed, false};
}

int rank(const Partition& p) {
    require_nonzero(p);
    if (depth(p) % 2 == 1) return 0;
    const int n1 = p.largest(), n2 = p.second(), mult = p.multiplicity(n1);
    switch (p.flavor) {
        case Flavor::sl: return mult;
        case Flavor::sp: return n1 % 2 == 0 ? mult : mult / 2;
        case Flavor::so:
            if (n1 % 2 == 0) return mult / 2;
            if (n1 == n2) return mult / 2;
            if (n1 - n2 == 2) return 2;
            return 1;
    }
    return 0;
}

std::vector<ReducingFactor> reducing_subalgebra(const Partition& p) {
    require_nonzero(p);
    require_even_depth(p);
    const int n1 = p.largest(), n2 = p.second(), mult = p.multiplicity(n1);
    auto repeat = [](Flavor f, int dim, int times) { return std::vector<ReducingFactor>(times, {f, dim}); };
    switch (p.flavor) {
        case Flavor::sl: return repeat(Flavor::sl, n1, mult);
        case Flavor::sp: return n1 % 2 == 0 ? repeat(Flavor::sp, n1, mult) : repeat(Flavor::sl, n1, mult / 2);
        case Flavor::so:
            if (n1 % 2 == 0 || n1 == n2) return repeat(Flavor::sl, n1, mult / 2);
            if (n1 - n2 == 2) return {{Flavor::so, n1 + n2}};
            return {{Flavor::so, n1}};
    }
    return {};
}

Projections projections(const Partition& p) {
    require_nonzero(p);
    require_even_depth(p);
    const int n1 = p.largest(), n2 = p.second(), mult = p.multiplicity(n1);
    int take_n1 = mult, take_n2 = 0;
    if (p.flavor == Flavor::so && n1 % 2 == 1) {
        if (mult % 2 == 1 && mult >= 3) take_n1 = mult - 1;
        if (mult == 1 && n1 - n2 == 2) take_n2 = 1;
    }
    Projections out;
    for (int k : p.parts) {
        if (k == n1 && take_n1 > 0) {
            out.es.push_back(k);
            --take_n1;
        } else if (k == n2 && take_n2 > 0) {
            out.es.push_back(k);
            --take_n2;
        } else {
            out.en.push_back(k);
        }
    }
    return out;
}

Partition bush_head(const Partition& p) {
    auto es = projections(p).es;
    const int n = p.n();
    int used = 0;
    for (int k : es) used += k;
    es.insert(es.end(), n - used, 1);
    return Partition{p.flavor, es};
}

ClassificationRecord classify(const Partition& p) {
    require_nonzero(p);
    ClassificationRecord rec;
    rec.partition = p;
    rec.depth = depth(p);
    rec.even = is_even(p);
    if (p.flavor == Flavor::so && p.n() < 7) {
        rec.type = oracle_type(p, 3, 0);
        rec.small_rank = true;
    } else {
        rec.type = closed_form_type(p);
    }
    rec.rank = rank(p);
    rec.very_even = p.flavor == Flavor::so && p.n() % 2 == 0 &&
                    std::all_of(p.parts.begin(), p.parts.end(), [](int k) { return k % 2 == 0; });
    if (rec.depth % 2 == 0) {
        rec.gs = reducing_subalgebra(p);
        rec.projections = projections(p);
        rec.bush_head = bush_head(p);
    } else {
        rec.cyclic_jordan_type = nilpotent_cyclic_jordan_type(p);
    }
    return rec;
}

std::vector<Partition> bush(const Partition& p) {
    auto head = classify(p);
    CYCLOTYPE_REQUIRE(head.type.kind == Kind::Semisimple,
                      "bush needs a semisimple-type head; " + p.to_string() + " is " + head.type.to_string());
    const int n1 = p.largest(), ones = p.multiplicity(1);
    std::vector<int> kept(p.parts.begin(), p.parts.end() - ones);
    // at most one replacing part may equal n1 (so, n1 odd, even multiplicity in the head)
    const bool allow_n1 = p.flavor == Flavor::so && n1 % 2 == 1 && p.multiplicity(n1) % 2 == 0;
    const auto head_es = head.projections->es;

    std::vector<Partition> out;
    std::vector<int> repl;
    std::function<void(int, int, bool)> rec = [&](int remaining, int maxpart, bool used_n1) {
        if (remaining == 0) {
            std::vector<int> parts = kept;
            parts.insert(parts.end(), repl.begin(), repl.end());
            std::sort(parts.begin(), parts.end(), std::greater<>());
            if (!admissible(p.flavor, parts)) return;
            Partition q{p.flavor, parts};
            if (depth(q) != head.depth) return;
            if (projections(q).es != head_es) return;
            out.push_back(std::move(q));
            return;
        }
        for (int k = std::min(remaining, maxpart); k >= 1; --k) {
            bool is_n1 = k == n1;
            if (is_n1 && (!allow_n1 || used_n1)) continue;
            repl.push_back(k);
            rec(remaining - k, is_n1 ? n1 - 1 : k, used_n1 || is_n1);
            repl.pop_back();
        }
    };
    rec(ones, allow_n1 ? n1 : n1 - 1, false);
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) { return a.parts > b.parts; });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Partition nilpotent_cyclic_jordan_type(const Partition& p) {
    CYCLOTYPE_REQUIRE(nilpotent_type(p), "partition " + p.to_string() + " is not of nilpotent type");
    const int n1 = p.largest(), n2 = p.second();
    std::vector<int> parts{3 * n1 - 2};
    bool dropped_n1 = false;
    int dropped_n2 = 0;
    for (int k : p.parts) {
        if (k == n1 && !dropped_n1) {
            dropped_n1 = true;
        } else if (k == n2 && dropped_n2 < 2) {
            ++dropped_n2;
        } else {
            parts.push_back(k);
        }
    }
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition::make(Flavor::so, parts);
}

}  // namespace cyclotype
