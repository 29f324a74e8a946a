#include "cyclotype/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyclotype/catalog.hpp"
#include "cyclotype/classical.hpp"
#include "cyclotype/error.hpp"
#include "cyclotype/gradecalc.hpp"
#include "cyclotype/kaccalc.hpp"
#include "cyclotype/oracle.hpp"
#include "cyclotype/sweep.hpp"

namespace cyclotype::cli {

using ojson = nlohmann::ordered_json;

namespace {

/// Raised for well-formed flags carrying malformed values (exit code 3).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when a verification command finds mismatches (exit code 2).
struct VerificationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<int> parse_ints(const std::string& csv, const char* what) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::logic_error&) {
            throw UsageError(std::string("bad ") + what + " entry '" + tok + "'");
        }
    }
    if (out.empty()) throw UsageError(std::string("empty ") + what);
    return out;
}

Partition read_partition(const std::string& flavor, const std::string& csv) {
    Flavor f;
    try {
        f = parse_flavor(flavor);
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
    auto parts = parse_ints(csv, "partition");
    for (std::size_t i = 1; i < parts.size(); ++i)
        if (parts[i] > parts[i - 1]) throw UsageError("partition must be non-increasing: " + csv);
    return Partition::make(f, parts);
}

std::string join(const std::vector<int>& v) {
    std::string s;
    for (int x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
}

std::string tsv_cell(const ojson& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
        std::string s;
        for (const auto& x : v) s += (s.empty() ? "" : ",") + tsv_cell(x);
        return s;
    }
    if (v.is_null()) return "";
    return v.dump();
}

void emit(std::ostream& out, const ojson& j, const std::string& format) {
    if (format == "tsv") {
        const auto rows = j.is_array() ? j : ojson::array({j});
        if (rows.empty()) return;
        std::string header;
        for (const auto& [k, v] : rows[0].items()) header += (header.empty() ? "" : "\t") + k;
        out << header << '\n';
        for (const auto& row : rows) {
            std::string line;
            bool first = true;
            for (const auto& [k, v] : row.items()) {
                line += (first ? "" : "\t") + tsv_cell(v);
                first = false;
            }
            out << line << '\n';
        }
        return;
    }
    out << j.dump() << '\n';
}

ojson classify_json(const ClassificationRecord& rec) {
    ojson j;
    j["depth"] = rec.depth;
    j["type"] = to_string(rec.type.kind);
    if (rec.type.kind == Kind::Nilpotent) {
        j["cyclic_jordan_type"] = rec.cyclic_jordan_type->parts;
        return j;
    }
    j["regular"] = rec.type.regular;
    j["rank"] = rec.rank;
    j["even"] = rec.even;
    ojson gs = ojson::array();
    for (const auto& f : rec.gs) gs.push_back(f.name());
    j["gs"] = gs;
    j["es"] = rec.projections->es;
    j["en"] = rec.projections->en;
    j["bush_head"] = rec.bush_head->parts;
    if (rec.small_rank) j["small_rank"] = true;
    if (rec.very_even) j["very_even"] = true;
    return j;
}

ojson report_json(const Report& rep) {
    ojson items = ojson::array();
    for (const auto& i : rep.items) items.push_back({{"id", i.id}, {"pass", i.pass}, {"detail", i.detail}});
    return {{"name", rep.name}, {"ok", rep.ok()}, {"failures", rep.failures()}, {"items", items}};
}

ojson record_json(const OrbitRecord& r) {
    auto opt = [](const std::optional<std::string>& s) { return s ? ojson(*s) : ojson(nullptr); };
    ojson j;
    j["algebra"] = r.algebra.name();
    j["label"] = r.label;
    j["characteristic"] = r.characteristic.labels;
    j["d"] = r.d;
    j["r"] = r.r;
    j["type"] = to_string(r.kind.kind);
    j["regular"] = r.kind.regular;
    j["a"] = opt(r.a);
    j["gs"] = opt(r.gs);
    j["es"] = opt(r.es);
    j["gn"] = opt(r.gn);
    j["en"] = opt(r.en);
    j["zrep"] = opt(r.zrep);
    j["bush_id"] = opt(r.bush_id);
    j["distinguished"] = r.distinguished;
    auto dz = derived_dim_z(r);
    j["dim_z"] = dz ? ojson(*dz) : ojson(nullptr);
    j["cyclic_image"] = opt(r.cyclic_image);
    return j;
}

void add_common_format(CLI::App* sub, std::string& format, std::vector<std::string> allowed) {
    sub->add_option("--format", format, "output format")->check(CLI::IsMember(allowed));
}

}  // namespace

std::string numbering_text() {
    return "Node numbering (Bourbaki), simple roots alpha_1..alpha_r:\n"
           "  A_n: chain 1-2-...-n\n"
           "  B_n: chain 1-2-...-(n-1)=>n, alpha_n short\n"
           "  C_n: chain 1-2-...-(n-1)<=n, alpha_n long\n"
           "  D_n: chain 1-2-...-(n-2), with n-1 and n both attached to n-2\n"
           "  E_6, E_7, E_8: 1-3-4-5-6(-7-8), with 2 attached to 4\n"
           "  F_4: 1-2=>3-4, alpha_1 and alpha_2 long\n"
           "  G_2: 1<=2 triple bond, alpha_1 short\n"
           "Extended diagrams prepend node 0 (the negative highest root); labels are s_0,s_1,...,s_r.\n"
           "Twisted: E6^(2) is 0-1-2<=3-4 (nodes 0,1,2 short), marks 1,2,3,2,1;\n"
           "         D4^(3) is 0-1<=2 triple bond (node 2 long), marks 1,2,1.\n"
           "Classical characteristics: sl_n -> A_{n-1}, so_{2l+1} -> B_l, sp_{2l} -> C_l, so_{2l} -> D_l;\n"
           "  so_3 and sp_2 -> A_1; so_6 -> A_3 read in the order (alpha_2, alpha_1, alpha_3) of D_3.\n";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cyclic elements of semisimple Lie algebras: classification and verification", "cyclotype"};
    bool print_numbering = false;
    app.add_flag("--print-numbering", print_numbering, "print the canonical node numbering and exit");

    std::string flavor, partition, format = "json", algebra, labels, diagram, which = "census";
    std::uint64_t seed = 0;
    int trials = 3, twist = 0;

    auto* c_classify = app.add_subcommand("classify", "type, depth, rank and projections of a classical orbit");
    c_classify->add_option("--flavor", flavor, "sl, so or sp")->required();
    c_classify->add_option("--partition", partition, "comma-separated, non-increasing")->required();
    add_common_format(c_classify, format, {"json", "tsv"});

    auto* c_bush = app.add_subcommand("bush", "members of the bush headed by a semisimple-type partition");
    c_bush->add_option("--flavor", flavor)->required();
    c_bush->add_option("--partition", partition)->required();
    add_common_format(c_bush, format, {"json", "tsv", "dot"});

    auto* c_oracle = app.add_subcommand("oracle", "decide the type of e+F by exact matrix computation");
    c_oracle->add_option("--flavor", flavor)->required();
    c_oracle->add_option("--partition", partition)->required();
    c_oracle->add_option("--seed", seed, "base seed (default 0)");
    c_oracle->add_option("--trials", trials, "samples per round (default 3)")->check(CLI::PositiveNumber);
    add_common_format(c_oracle, format, {"json", "tsv"});

    auto* c_grading = app.add_subcommand("grading", "Z-grading and sigma_e data from a characteristic");
    c_grading->add_option("--algebra", algebra, "simple type, e.g. E8");
    c_grading->add_option("--labels", labels, "characteristic s_1..s_r");
    c_grading->add_option("--flavor", flavor);
    c_grading->add_option("--partition", partition);
    add_common_format(c_grading, format, {"json", "tsv"});

    auto* c_kac = app.add_subcommand("kac", "order, fixed subalgebra and dim h^w of a Kac labeling");
    c_kac->add_option("--diagram", diagram, "E8, E6^(2), D4^(3), ...")->required();
    c_kac->add_option("--labels", labels, "s_0..s_n")->required();
    c_kac->add_option("--twist", twist, "1, 2 or 3")->check(CLI::Range(1, 3));
    add_common_format(c_kac, format, {"json", "tsv"});

    auto* c_tables = app.add_subcommand("tables", "bundled exceptional data");
    c_tables->add_option("--which", which, "census, orbits, nilpotent, mixed, diagrams, regular, verify")
        ->check(CLI::IsMember({"census", "orbits", "nilpotent", "mixed", "diagrams", "regular", "verify"}));
    c_tables->add_option("--algebra", algebra, "restrict to one algebra");
    add_common_format(c_tables, format, {"json", "tsv"});

    auto* c_verify = app.add_subcommand("verify-all", "catalog checks and the classical sweep against the oracle");
    add_common_format(c_verify, format, {"json", "tsv"});

    app.require_subcommand(0, 1);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return usage_error;
    }

    if (print_numbering) {
        out << numbering_text();
        return ok;
    }

    try {
        if (*c_classify) {
            auto rec = classify(read_partition(flavor, partition));
            emit(out, classify_json(rec), format);
            return ok;
        }
        if (*c_bush) {
            auto p = read_partition(flavor, partition);
            auto members = bush(p);
            auto rec = classify(p);
            if (format == "dot") {
                out << "digraph bush {\n  \"" << p.to_string() << "\" [shape=box];\n";
                for (const auto& q : members)
                    if (!(q == p)) out << "  \"" << p.to_string() << "\" -> \"" << q.to_string() << "\";\n";
                out << "}\n";
                return ok;
            }
            ojson mem = ojson::array();
            for (const auto& q : members) mem.push_back(q.parts);
            emit(out, ojson{{"head", p.parts}, {"depth", rec.depth}, {"rank", rec.rank}, {"members", mem}}, format);
            return ok;
        }
        if (*c_oracle) {
            auto v = oracle_verdict(read_partition(flavor, partition), trials, seed);
            ojson j;
            j["type"] = to_string(v.type.kind);
            j["regular"] = v.type.regular;
            j["depth"] = v.depth;
            j["lowest_dim"] = v.lowest_dim;
            if (v.jordan) j["jordan_type"] = *v.jordan;
            j["seeds"] = v.seeds;
            j["reseeds"] = v.reseeds;
            emit(out, j, format);
            return ok;
        }
        if (*c_grading) {
            Characteristic c;
            if (!algebra.empty() || !labels.empty()) {
                if (algebra.empty() || labels.empty() || !flavor.empty() || !partition.empty())
                    throw UsageError("grading takes either --algebra with --labels or --flavor with --partition");
                SimpleType t;
                try {
                    t = SimpleType::parse(algebra);
                } catch (const DomainError& e) {
                    throw UsageError(e.what());
                }
                c = Characteristic::make(t, parse_ints(labels, "labels"));
            } else {
                if (flavor.empty() || partition.empty())
                    throw UsageError("grading takes either --algebra with --labels or --flavor with --partition");
                c = characteristic_from_partition(read_partition(flavor, partition)).primary;
            }
            auto rs = build_root_system(c.simple_type);
            auto g = z_grading(rs, c);
            auto s = sigma_data(rs, c);
            ojson dims, mod;
            for (const auto& [k, v] : g.dims) dims[std::to_string(k)] = v;
            for (const auto& [k, v] : s.mod_dims) mod[std::to_string(k)] = v;
            ojson j;
            j["algebra"] = c.simple_type.name();
            j["labels"] = c.labels;
            j["depth"] = g.depth;
            j["dims"] = dims;
            j["m"] = s.m;
            j["order"] = s.order;
            j["mod_dims"] = mod;
            j["kac_labels"] = s.kac.labels;
            j["fixed"] = s.fixed_set.to_string();
            j["dim_fixed"] = s.fixed_set.dim();
            if (c.even()) j["regular_order_check"] = regular_order_check(rs, c);
            emit(out, j, format);
            return ok;
        }
        if (*c_kac) {
            AffineDiagram d;
            try {
                d = diagram_by_name(diagram, twist);
            } catch (const std::logic_error& e) {
                throw UsageError(e.what());
            }
            auto lab = KacLabeling::make(d, parse_ints(labels, "labels"));
            ojson j;
            j["order"] = order(lab);
            j["fixed"] = fixed_point_set(lab).to_string();
            try {
                j["dim_hw"] = dim_hw(lab, build_root_system(d.base));
            } catch (const DomainError& e) {
                j["dim_hw"] = nullptr;
                err << "note: " << e.what() << '\n';
            }
            emit(out, j, format);
            return ok;
        }
        if (*c_tables) {
            auto cat = load();
            std::optional<SimpleType> only;
            if (!algebra.empty()) {
                try {
                    only = SimpleType::parse(algebra);
                } catch (const DomainError& e) {
                    throw UsageError(e.what());
                }
            }
            auto wanted = [&](SimpleType t) { return !only || *only == t; };
            ojson rows = ojson::array();
            if (which == "census") {
                for (const auto& [t, published] : cat.census) {
                    if (!wanted(t)) continue;
                    Census c = counts(cat, t);
                    rows.push_back({{"algebra", t.name()},
                                    {"nonzero", c.nonzero},
                                    {"nilpotent", c.nilpotent},
                                    {"semisimple", c.semisimple},
                                    {"regular_semisimple", c.regular_semisimple},
                                    {"matches_published", c == published}});
                }
            } else if (which == "orbits" || which == "nilpotent") {
                for (const auto& r : cat.records)
                    if (wanted(r.algebra) && (which == "orbits" || r.kind.kind == Kind::Nilpotent))
                        rows.push_back(record_json(r));
            } else if (which == "mixed") {
                for (const auto& m : cat.mixed)
                    if (wanted(m.algebra))
                        rows.push_back({{"algebra", m.algebra.name()},
                                        {"group", m.group},
                                        {"label", m.label},
                                        {"dim_z", m.dim_z},
                                        {"a", m.a},
                                        {"nilpart", m.nilpart}});
            } else if (which == "diagrams") {
                for (const auto& r : cat.table6)
                    if (wanted(r.base))
                        rows.push_back({{"diagram", r.diagram},
                                        {"order", r.order},
                                        {"labels", r.labels},
                                        {"fixed", r.fixed},
                                        {"dim_hw", r.dim_hw}});
            } else if (which == "regular") {
                for (const auto& [t, published] : cat.census)
                    if (wanted(t)) rows.push_back({{"algebra", t.name()}, {"regular_numbers", regular_numbers(t, cat.table6)}});
            } else {
                auto rep = verify(cat);
                emit(out, report_json(rep), format == "tsv" ? "json" : format);
                if (!rep.ok()) throw VerificationFailure("catalog verification failed");
                return ok;
            }
            emit(out, rows, format);
            return ok;
        }
        if (*c_verify) {
            Report all;
            all.name = "verify-all";
            auto add = [&](const Report& r) {
                std::string detail = std::to_string(r.items.size()) + " items";
                for (const auto& i : r.items)
                    if (!i.pass) detail += "; FAIL " + i.id + ": " + i.detail;
                all.add(r.name, r.ok() && !r.items.empty(), detail);
            };
            auto cat = load();
            for (const auto& i : verify(cat).items) all.items.push_back(i);
            auto entries = run_sweep(sweep_partitions());
            add(check_equivalence(entries));
            add(check_parity(entries));
            add(check_grading(entries));
            add(check_jordan_image());
            add(check_bushes());
            if (format == "tsv") {
                ojson rows = ojson::array();
                for (const auto& i : all.items) rows.push_back({{"id", i.id}, {"pass", i.pass}, {"detail", i.detail}});
                emit(out, rows, format);
            } else {
                emit(out, report_json(all), format);
            }
            if (!all.ok()) throw VerificationFailure("verification failed");
            return ok;
        }
        err << app.help();
        return usage_error;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return usage_error;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return domain_error;
    } catch (const VerificationFailure& e) {
        err << "verification failure: " << e.what() << '\n';
        return verification_failure;
    } catch (const DataError& e) {
        err << "data error: " << e.what() << '\n';
        return verification_failure;
    } catch (const GenericityError& e) {
        err << "genericity failure: " << e.what() << '\n';
        return verification_failure;
    }
}

}  // namespace cyclotype::cli
