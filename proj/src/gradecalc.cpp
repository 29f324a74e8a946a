#include "cyclotype/gradecalc.hpp"

#include <algorithm>
#include <functional>

#include "cyclotype/error.hpp"

namespace cyclotype {

Characteristic Characteristic::make(SimpleType t, std::vector<int> labels) {
    CYCLOTYPE_REQUIRE(static_cast<int>(labels.size()) == t.rank,
                      t.name() + " characteristic needs " + std::to_string(t.rank) + " labels");
    CYCLOTYPE_REQUIRE(std::all_of(labels.begin(), labels.end(), [](int s) { return s >= 0 && s <= 2; }),
                      "characteristic labels must lie in {0,1,2}");
    CYCLOTYPE_REQUIRE(std::any_of(labels.begin(), labels.end(), [](int s) { return s != 0; }),
                      "the zero characteristic does not describe a non-zero nilpotent");
    return Characteristic{t, std::move(labels)};
}

bool Characteristic::even() const {
    return std::all_of(labels.begin(), labels.end(), [](int s) { return s % 2 == 0; });
}

int weight(const Root& alpha, const std::vector<int>& labels) {
    int w = 0;
    for (std::size_t i = 0; i < alpha.size(); ++i) w += alpha[i] * labels[i];
    return w;
}

namespace {

void check_match(const RootSystem& rs, const Characteristic& c) {
    CYCLOTYPE_REQUIRE(rs.simple_type == c.simple_type,
                      "characteristic of " + c.simple_type.name() + " used with " + rs.simple_type.name());
}

}  // namespace

int depth_from_characteristic(const RootSystem& rs, const Characteristic& c) {
    check_match(rs, c);
    return weight(rs.highest_root_coeffs, c.labels);
}

ZGrading z_grading(const RootSystem& rs, const Characteristic& c) {
    ZGrading g;
    g.depth = depth_from_characteristic(rs, c);
    for (int j = -g.depth; j <= g.depth; ++j) g.dims[j] = 0;
    g.dims[0] = rs.rank();
    for (const auto& a : rs.roots) ++g.dims[weight(a, c.labels)];
    return g;
}

SigmaData sigma_data(const RootSystem& rs, const Characteristic& c) {
    auto grading = z_grading(rs, c);
    SigmaData s;
    s.m = grading.depth + 2;
    s.order = c.even() ? s.m / 2 : s.m;
    for (const auto& [j, dim] : grading.dims) s.mod_dims[((j % s.m) + s.m) % s.m] += dim;
    std::vector<int> labels;
    if (c.even()) {
        labels.push_back(1);
        for (int x : c.labels) labels.push_back(x / 2);
    } else {
        labels.push_back(2);
        labels.insert(labels.end(), c.labels.begin(), c.labels.end());
    }
    s.kac = KacLabeling::make(extended_diagram(rs), std::move(labels));
    s.fixed_set = fixed_point_set(s.kac);
    return s;
}

namespace {

std::vector<int> dominant_h(const Partition& p) {
    std::vector<int> h;
    for (int k : p.parts)
        for (int i = 0; i < k; ++i) h.push_back(k - 1 - 2 * i);
    std::sort(h.begin(), h.end(), std::greater<>());
    return h;
}

}  // namespace

PartitionCharacteristic characteristic_from_partition(const Partition& p) {
    CYCLOTYPE_REQUIRE(admissible(p.flavor, p.parts), "inadmissible partition " + p.to_string());
    CYCLOTYPE_REQUIRE(!p.is_zero(), "the zero orbit has no characteristic");
    const int n = p.n();
    const SimpleType t = classical_type(p.flavor, n);
    const auto h = dominant_h(p);
    std::vector<int> labels;
    PartitionCharacteristic out;
    switch (p.flavor) {
        case Flavor::sl:
            for (int i = 0; i + 1 < n; ++i) labels.push_back(h[i] - h[i + 1]);
            break;
        case Flavor::sp: {
            const int l = n / 2;
            for (int i = 0; i + 1 < l; ++i) labels.push_back(h[i] - h[i + 1]);
            labels.push_back(2 * h[l - 1]);
            break;
        }
        case Flavor::so: {
            const int l = n / 2;
            if (n % 2 == 1) {
                for (int i = 0; i + 1 < l; ++i) labels.push_back(h[i] - h[i + 1]);
                labels.push_back(h[l - 1]);
                break;
            }
            // D_l: last two nodes are e_{l-1} -+ e_l; the larger pair goes first
            for (int i = 0; i + 2 < l; ++i) labels.push_back(h[i] - h[i + 1]);
            int lo = h[l - 2] - h[l - 1], hi = h[l - 2] + h[l - 1];
            std::vector<int> alt = labels;
            labels.push_back(hi);
            labels.push_back(lo);
            alt.push_back(lo);
            alt.push_back(hi);
            if (l == 3) {
                // D3 as A3: middle node is alpha_1
                labels = {labels[1], labels[0], labels[2]};
                alt = {alt[1], alt[0], alt[2]};
            }
            bool very_even = std::all_of(p.parts.begin(), p.parts.end(), [](int k) { return k % 2 == 0; });
            if (very_even && lo != hi) out.very_even_alt = Characteristic::make(t, alt);
            break;
        }
    }
    out.primary = Characteristic::make(t, labels);
    return out;
}

PartitionCharacteristic characteristic_from_partition(Flavor f, const Partition& p) {
    CYCLOTYPE_REQUIRE(f == p.flavor, "flavor mismatch");
    return characteristic_from_partition(p);
}

bool regular_order_check(const RootSystem& rs, const Characteristic& c) {
    CYCLOTYPE_REQUIRE(c.even(), "the order check applies to even characteristics only");
    auto s = sigma_data(rs, c);
    const int m = s.m / 2;
    return rs.root_count == m * s.fixed_set.dim();
}

}  // namespace cyclotype
