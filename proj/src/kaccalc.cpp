#include "cyclotype/kaccalc.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>

#include <json.hpp>

#include "cyclotype/error.hpp"

namespace cyclotype {

KacLabeling KacLabeling::make(AffineDiagram d, std::vector<int> labels) {
    CYCLOTYPE_REQUIRE(static_cast<int>(labels.size()) == d.nodes(),
                      d.name() + " needs " + std::to_string(d.nodes()) + " labels");
    CYCLOTYPE_REQUIRE(std::all_of(labels.begin(), labels.end(), [](int s) { return s >= 0; }),
                      "Kac labels must be non-negative");
    CYCLOTYPE_REQUIRE(std::any_of(labels.begin(), labels.end(), [](int s) { return s > 0; }),
                      "Kac labels must not all be zero");
    return KacLabeling{std::move(d), std::move(labels)};
}

int order(const KacLabeling& l) {
    int s = 0;
    for (std::size_t i = 0; i < l.labels.size(); ++i) s += l.diagram.affine_marks[i] * l.labels[i];
    CYCLOTYPE_REQUIRE(s > 0, "Kac labels must not all be zero");
    return l.diagram.twist * s;
}

FixedPointSet fixed_point_set(const KacLabeling& l) {
    std::vector<int> zero;
    for (int i = 0; i < static_cast<int>(l.labels.size()); ++i)
        if (l.labels[i] == 0) zero.push_back(i);
    FixedPointSet f;
    f.summands = classify_subdiagram(l.diagram.graph.induced(zero));
    f.torus = (l.diagram.nodes() - 1) - static_cast<int>(zero.size());
    return f;
}

int dim_fixed(const KacLabeling& l) { return fixed_point_set(l).dim(); }

int dim_hw(const KacLabeling& l, const RootSystem& rs) {
    const int m = order(l);
    CYCLOTYPE_REQUIRE(rs.root_count % m == 0, "|Delta| = " + std::to_string(rs.root_count) +
                                                  " is not divisible by the order " + std::to_string(m) +
                                                  "; the labeling is not quasiregular");
    int v = dim_fixed(l) - rs.root_count / m;
    CYCLOTYPE_REQUIRE(v >= 0, "negative dim h^w; the labeling is not quasiregular");
    return v;
}

AffineDiagram diagram_by_name(const std::string& raw, int twist) {
    std::string base = raw;
    int k = 1;
    if (auto pos = raw.find("^("); pos != std::string::npos) {
        base = raw.substr(0, pos);
        auto close = raw.find(')', pos);
        CYCLOTYPE_REQUIRE(close != std::string::npos, "bad diagram name " + raw);
        k = std::stoi(raw.substr(pos + 2, close - pos - 2));
    }
    if (twist > 0) k = twist;
    SimpleType t = SimpleType::parse(base);
    if (k == 1) return extended_diagram(build_root_system(t));
    return twisted_diagram(t, k);
}

std::vector<Table6Row> load_table6(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw DataError("cannot open " + file.string());
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw DataError(file.string() + ": " + e.what());
    }
    if (doc.value("schema_version", 0) != 1) throw DataError(file.string() + ": unsupported schema_version");
    std::vector<Table6Row> rows;
    try {
        for (const auto& r : doc.at("rows")) {
            Table6Row row;
            row.diagram = r.at("diagram").get<std::string>();
            row.base = SimpleType::parse(r.at("base").get<std::string>());
            row.twist = r.at("twist").get<int>();
            row.order = r.at("order").get<int>();
            row.printed = r.at("printed").get<std::string>();
            row.labels = r.at("labels").get<std::vector<int>>();
            row.fixed = r.at("fixed").get<std::string>();
            row.dim_hw = r.at("dim_hw").get<int>();
            rows.push_back(std::move(row));
        }
    } catch (const nlohmann::json::exception& e) {
        throw DataError(file.string() + ": " + e.what());
    } catch (const DomainError& e) {
        throw DataError(file.string() + ": " + e.what());
    }
    return rows;
}

Report verify_table6(const std::vector<Table6Row>& rows) {
    Report rep;
    rep.name = "regular-element diagram tables";
    std::map<SimpleType, RootSystem> systems;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        std::string id = row.diagram + " row " + std::to_string(i) + " [" + row.printed + "]";
        try {
            auto it = systems.find(row.base);
            if (it == systems.end()) it = systems.emplace(row.base, build_root_system(row.base)).first;
            auto lab = KacLabeling::make(diagram_by_name(row.base.name(), row.twist), row.labels);
            int m = order(lab);
            auto fixed = fixed_point_set(lab);
            auto expected = parse_type_sum(row.fixed);
            int hw = dim_hw(lab, it->second);
            std::string detail;
            if (m != row.order) detail += "order " + std::to_string(m) + " != " + std::to_string(row.order) + "; ";
            if (!(fixed == expected))
                detail += "fixed " + fixed.to_string() + " != " + expected.to_string() + "; ";
            if (hw != row.dim_hw)
                detail += "dim h^w " + std::to_string(hw) + " != " + std::to_string(row.dim_hw) + "; ";
            rep.add(id, detail.empty(), detail);
        } catch (const std::exception& e) {
            rep.add(id, false, e.what());
        }
    }
    return rep;
}

std::vector<int> regular_numbers(SimpleType t, const std::vector<Table6Row>& rows) {
    switch (t.family) {
        case Family::E6:
        case Family::E7:
        case Family::E8:
        case Family::F4:
        case Family::G2: break;
        default: throw DomainError("regular numbers are bundled only for exceptional types");
    }
    std::set<int> out;
    for (const auto& r : rows)
        if (r.base == t && r.twist == 1) out.insert(r.order);
    return {out.begin(), out.end()};
}

}  // namespace cyclotype
