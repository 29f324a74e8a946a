#include "cyclotype/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <set>

#include <json.hpp>

#include "cyclotype/error.hpp"

#ifndef CYCLOTYPE_DATA_DIR_DEFAULT
#define CYCLOTYPE_DATA_DIR_DEFAULT "data"
#endif

namespace cyclotype {

using nlohmann::json;

namespace {

std::string normalize_label(const std::string& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == ' ' || c == '_' || c == '[' || c == ']') continue;
        out += c;
    }
    // "~A" and "A~" spell the precomposed tilde
    for (const char* alt : {"~A", "A~"})
        for (std::size_t pos; (pos = out.find(alt)) != std::string::npos;) out.replace(pos, 2, "Ã");
    return out;
}

json read_json(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw DataError("cannot open " + file.string());
    try {
        json doc = json::parse(in);
        if (doc.value("schema_version", 0) != 1) throw DataError(file.string() + ": unsupported schema_version");
        return doc;
    } catch (const json::exception& e) {
        throw DataError(file.string() + ": " + e.what());
    }
}

std::optional<std::string> opt_string(const json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<std::string>();
}

CyclicType parse_kind(const std::string& kind, bool regular) {
    if (kind == "nilpotent") return {Kind::Nilpotent, false};
    if (kind == "semisimple") return {Kind::Semisimple, regular};
    if (kind == "mixed") return {Kind::Mixed, false};
    throw DataError("unknown kind " + kind);
}

const std::vector<SimpleType>& exceptional_types() {
    static const std::vector<SimpleType> t{SimpleType::make(Family::E6, 6), SimpleType::make(Family::E7, 7),
                                           SimpleType::make(Family::E8, 8), SimpleType::make(Family::F4, 4),
                                           SimpleType::make(Family::G2, 2)};
    return t;
}

const RootSystem& root_system(SimpleType t) {
    static std::map<SimpleType, RootSystem> cache;
    static std::mutex mu;
    std::lock_guard lock(mu);
    auto it = cache.find(t);
    if (it == cache.end()) it = cache.emplace(t, build_root_system(t)).first;
    return it->second;
}

}  // namespace

std::filesystem::path default_data_dir() {
    if (const char* env = std::getenv("CYCLOTYPE_DATA_DIR"); env && *env) return env;
    return CYCLOTYPE_DATA_DIR_DEFAULT;
}

const OrbitRecord& Catalog::query(SimpleType algebra, const std::string& label) const {
    const std::string key = normalize_label(label);
    for (const auto& r : records)
        if (r.algebra == algebra && normalize_label(r.label) == key) return r;
    throw DomainError("no orbit " + label + " in " + algebra.name());
}

std::vector<const OrbitRecord*> Catalog::bush_members(const std::string& bush_id) const {
    std::vector<const OrbitRecord*> out;
    for (const auto& r : records)
        if (r.bush_id && *r.bush_id == bush_id) out.push_back(&r);
    return out;
}

Catalog load(const std::filesystem::path& dir) {
    Catalog cat;
    cat.dir = dir;
    const json orbits = read_json(dir / "orbits_exceptional.json");
    try {
        for (const auto& [name, c] : orbits.at("census").items())
            cat.census[SimpleType::parse(name)] = Census{c.at("nonzero").get<int>(), c.at("nilpotent").get<int>(),
                                                         c.at("semisimple").get<int>(),
                                                         c.at("regular_semisimple").get<int>()};
        for (const auto& j : orbits.at("records")) {
            OrbitRecord r;
            r.algebra = SimpleType::parse(j.at("algebra").get<std::string>());
            r.label = j.at("label").get<std::string>();
            r.characteristic = Characteristic::make(r.algebra, j.at("characteristic").get<std::vector<int>>());
            r.d = j.at("d").get<int>();
            r.r = j.at("r").get<int>();
            r.a = opt_string(j, "a");
            r.gs = opt_string(j, "gs");
            r.es = opt_string(j, "es");
            r.gn = opt_string(j, "gn");
            r.en = opt_string(j, "en");
            r.zrep = opt_string(j, "zrep");
            if (j.contains("zrep_dim") && !j.at("zrep_dim").is_null()) r.zrep_dim = j.at("zrep_dim").get<int>();
            if (j.contains("zrep_trivial") && !j.at("zrep_trivial").is_null())
                r.zrep_trivial = j.at("zrep_trivial").get<bool>();
            r.zrep_note = opt_string(j, "zrep_note");
            r.kind = parse_kind(j.at("kind").get<std::string>(), j.at("regular").get<bool>());
            r.bush_id = opt_string(j, "bush_id");
            r.distinguished = j.at("distinguished").get<bool>();
            cat.records.push_back(std::move(r));
        }
        const json mixed_doc = read_json(dir / "tables55_56.json");
        for (const auto& j : mixed_doc.at("rows"))
            cat.mixed.push_back(MixedRecord{SimpleType::parse(j.at("algebra").get<std::string>()),
                                            j.at("group").get<int>(), j.at("label").get<std::string>(),
                                            j.at("dim_z").get<int>(), j.at("a").get<std::string>(),
                                            j.at("nilpart").get<std::string>()});
        const json table11_doc = read_json(dir / "table11.json");
        for (const auto& j : table11_doc.at("rows"))
            cat.table11.push_back(Table11Row{SimpleType::parse(j.at("algebra").get<std::string>()),
                                             j.at("label").get<std::string>(), j.at("d").get<int>(),
                                             j.at("cyclic_image").get<std::string>()});
    } catch (const json::exception& e) {
        throw DataError(std::string("schema violation: ") + e.what());
    } catch (const DomainError& e) {
        throw DataError(std::string("schema violation: ") + e.what());
    }
    cat.table6 = load_table6(dir / "tables6.json");

    std::set<std::pair<SimpleType, std::string>> seen;
    for (const auto& r : cat.records)
        if (!seen.insert({r.algebra, normalize_label(r.label)}).second)
            throw DataError("duplicate label " + r.label + " in " + r.algebra.name());
    for (const auto& r : cat.records) {
        if (!r.bush_id) {
            if (r.kind.kind != Kind::Nilpotent) throw DataError(r.label + ": missing bush_id");
            continue;
        }
        auto colon = r.bush_id->find(':');
        if (colon == std::string::npos || r.bush_id->substr(0, colon) != r.algebra.name() ||
            !seen.count({r.algebra, normalize_label(r.bush_id->substr(colon + 1))}))
            throw DataError(r.label + ": dangling bush reference " + *r.bush_id);
    }
    for (const auto& row : cat.table11) {
        if (!seen.count({row.algebra, normalize_label(row.label)}))
            throw DataError("nilpotent-type row references unknown orbit " + row.label);
        for (auto& r : cat.records)
            if (r.algebra == row.algebra && normalize_label(r.label) == normalize_label(row.label))
                r.cyclic_image = row.cyclic_image;
    }
    for (const auto& m : cat.mixed)
        if (!seen.count({m.algebra, normalize_label(m.label)}))
            throw DataError("mixed row references unknown orbit " + m.label);
    return cat;
}

Census counts(const Catalog& cat, SimpleType algebra) {
    Census c;
    for (const auto& r : cat.records) {
        if (!(r.algebra == algebra)) continue;
        ++c.nonzero;
        if (r.kind.kind == Kind::Nilpotent) ++c.nilpotent;
        if (r.kind.kind == Kind::Semisimple) ++c.semisimple;
        if (r.kind.kind == Kind::Semisimple && r.kind.regular) ++c.regular_semisimple;
    }
    return c;
}

namespace {

std::vector<std::string> split_direct_sum(const std::string& s) {
    static const std::string sep = "⊕";
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string::npos ? std::string::npos : pos - start));
        if (pos == std::string::npos) break;
        start = pos + sep.size();
    }
    return out;
}

bool all_digits(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

int zrep_dimension(const std::string& zrep) {
    int total = 0;
    for (const auto& tok : split_direct_sum(zrep)) {
        if (all_digits(tok)) total += std::stoi(tok);
        else if (tok.rfind("SO_", 0) == 0 && all_digits(tok.substr(3))) total += std::stoi(tok.substr(3));
        else if (tok == "G_2") total += 7;
        else if (tok == "F_4") total += 26;
        else if (tok == "Ad(SL_3)") total += 8;
        else if (tok == "T_1⊂SO_3") total += 3;   // a circle inside SO_3 acting on its 3-space
        else if (tok == "S^2SO_3/1") total += 5;  // traceless symmetric square of the SO_3 vector space
        else throw DataError("unknown zrep summand '" + tok + "'");
    }
    return total;
}

bool zrep_is_trivial(const std::string& zrep) { return all_digits(zrep); }

std::optional<int> derived_dim_z(const OrbitRecord& rec) {
    if (rec.kind.kind != Kind::Semisimple || !rec.a) return std::nullopt;
    TypeSum a = parse_type_sum(*rec.a);
    int dim_a = 0, rank_a = 0;
    for (const auto& t : a.summands) {
        dim_a += t.dim();
        rank_a += t.rank;
    }
    return dim_a + rec.algebra.rank - rank_a;
}

std::string verify_check_name(int k) {
    static const char* names[] = {"depth",           "parity",        "rank",   "zrep dimension",
                                  "bush coherence",  "regular order", "regular flag",
                                  "census",          "diagram tables", "mixed records"};
    CYCLOTYPE_REQUIRE(k >= 1 && k <= verify_check_count, "check number must be 1..10");
    return names[k - 1];
}

Report verify_check(const Catalog& cat, int k) {
    Report rep;
    rep.name = verify_check_name(k);
    auto id = [](const OrbitRecord& r) { return r.algebra.name() + " " + r.label; };
    switch (k) {
        case 1:
            for (const auto& r : cat.records) {
                int d = depth_from_characteristic(root_system(r.algebra), r.characteristic);
                rep.add(id(r), d == r.d, "computed " + std::to_string(d) + ", tabulated " + std::to_string(r.d));
            }
            break;
        case 2:
            for (const auto& r : cat.records) {
                bool nil = r.kind.kind == Kind::Nilpotent;
                bool ok = nil == (r.d % 2 == 1) && nil == (r.r == 0);
                rep.add(id(r), ok, "kind " + r.kind.to_string() + ", d " + std::to_string(r.d));
            }
            break;
        case 3:
            for (const auto& r : cat.records) {
                if (r.kind.kind == Kind::Nilpotent || !r.zrep) continue;
                if (!zrep_is_trivial(*r.zrep) && !r.distinguished) continue;
                int low = z_grading(root_system(r.algebra), r.characteristic).dim(-r.d);
                rep.add(id(r), low == r.r, "dim g_{-d} " + std::to_string(low) + ", r " + std::to_string(r.r));
            }
            break;
        case 4:
            for (const auto& r : cat.records) {
                if (r.kind.kind == Kind::Nilpotent) continue;
                if (!r.zrep) {
                    rep.add(id(r), false, "missing zrep");
                    continue;
                }
                int low = z_grading(root_system(r.algebra), r.characteristic).dim(-r.d);
                int named = zrep_dimension(*r.zrep);
                bool stored_ok = r.zrep_dim == named && r.zrep_trivial == zrep_is_trivial(*r.zrep);
                rep.add(id(r), named == low && stored_ok,
                        *r.zrep + " -> " + std::to_string(named) + ", dim g_{-d} " + std::to_string(low));
            }
            break;
        case 5: {
            std::vector<std::string> order;
            for (const auto& r : cat.records)
                if (r.bush_id && std::find(order.begin(), order.end(), *r.bush_id) == order.end())
                    order.push_back(*r.bush_id);
            for (const auto& b : order) {
                auto members = cat.bush_members(b);
                const auto& h = *members.front();
                int ss = 0;
                std::string detail;
                for (const auto* m : members) {
                    ss += m->kind.kind == Kind::Semisimple;
                    if (m->d != h.d || m->r != h.r || m->a != h.a || m->gs != h.gs || m->es != h.es)
                        detail += m->label + " differs from head; ";
                    if (m->kind.kind == Kind::Nilpotent) detail += m->label + " is nilpotent; ";
                }
                if (ss != 1) detail += std::to_string(ss) + " semisimple members; ";
                if (h.kind.kind != Kind::Semisimple) detail += "head " + h.label + " not listed first; ";
                if (h.algebra.name() + ":" + h.label != b) detail += "bush id does not name its head; ";
                rep.add(b, detail.empty(), detail.empty() ? std::to_string(members.size()) + " members" : detail);
            }
            break;
        }
        case 6:
            for (const auto& r : cat.records) {
                if (!r.distinguished || r.kind.kind != Kind::Semisimple) continue;
                const auto& rs = root_system(r.algebra);
                auto regular = regular_numbers(r.algebra, cat.table6);
                const int m = r.d / 2 + 1;
                bool in_list = std::find(regular.begin(), regular.end(), m) != regular.end();
                bool ratio = r.characteristic.even() && regular_order_check(rs, r.characteristic);
                rep.add(id(r), in_list && ratio,
                        "m " + std::to_string(m) + (in_list ? " regular" : " not regular") +
                            (ratio ? ", |Delta| = m dim g^sigma" : ", |Delta| != m dim g^sigma"));
            }
            break;
        case 7:
            for (const auto& r : cat.records) {
                if (r.kind.kind == Kind::Nilpotent) continue;
                bool a_zero = r.a && *r.a == "0";
                bool regular = r.kind.kind == Kind::Semisimple && r.kind.regular;
                rep.add(id(r), a_zero == regular, "a " + r.a.value_or("-") + ", " + r.kind.to_string());
            }
            break;
        case 8: {
            static const std::map<Family, int> distinguished_regular{
                {Family::E6, 3}, {Family::E7, 3}, {Family::E8, 7}, {Family::F4, 4}, {Family::G2, 2}};
            for (const auto& t : exceptional_types()) {
                Census c = counts(cat, t);
                auto it = cat.census.find(t);
                bool ok = it != cat.census.end() && it->second == c;
                rep.add(t.name() + " counts", ok,
                        std::to_string(c.nonzero) + "," + std::to_string(c.nilpotent) + "," +
                            std::to_string(c.semisimple) + "," + std::to_string(c.regular_semisimple));
                int dr = 0, dm = 0;
                for (const auto& r : cat.records) {
                    if (!(r.algebra == t) || !r.distinguished) continue;
                    dr += r.kind.kind == Kind::Semisimple && r.kind.regular;
                    dm += r.kind.kind == Kind::Mixed;
                }
                bool dr_ok = dr == distinguished_regular.at(t.family) && (t.family != Family::E8 || dm == 4);
                rep.add(t.name() + " distinguished", dr_ok,
                        std::to_string(dr) + " regular semisimple, " + std::to_string(dm) + " mixed");
            }
            for (const auto& r : cat.records) {
                auto g = z_grading(root_system(r.algebra), r.characteristic);
                bool distinguished = r.characteristic.even() && g.dim(0) == g.dim(2);
                if (distinguished != r.distinguished) rep.add(id(r), false, "distinguished flag inconsistent");
            }
            break;
        }
        case 9: {
            auto t = verify_table6(cat.table6);
            rep.items = std::move(t.items);
            break;
        }
        case 10: {
            std::map<std::pair<SimpleType, std::string>, int> seen;
            for (const auto& m : cat.mixed) ++seen[{m.algebra, normalize_label(m.label)}];
            for (const auto& r : cat.records) {
                int c = seen[{r.algebra, normalize_label(r.label)}];
                if (r.kind.kind == Kind::Mixed) rep.add(id(r), c == 1, std::to_string(c) + " mixed rows");
                else if (c != 0) rep.add(id(r), false, "mixed row for a " + r.kind.to_string() + " orbit");
            }
            break;
        }
        default: throw DomainError("check number must be 1..10");
    }
    return rep;
}

Report verify(const Catalog& cat) {
    Report rep;
    rep.name = "catalog";
    for (int k = 1; k <= verify_check_count; ++k) {
        Report sub = verify_check(cat, k);
        std::string detail = std::to_string(sub.items.size()) + " items";
        for (const auto& i : sub.items)
            if (!i.pass) detail += "; FAIL " + i.id + ": " + i.detail;
        rep.add("(" + std::to_string(k) + ") " + sub.name, sub.ok() && !sub.items.empty(), detail);
    }
    return rep;
}

}  // namespace cyclotype
