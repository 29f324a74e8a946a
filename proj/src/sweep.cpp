#include "cyclotype/sweep.hpp"

#include <map>

#include "cyclotype/gradecalc.hpp"

namespace cyclotype {

namespace {

std::string tag(const Partition& p) { return to_string(p.flavor) + " (" + p.to_string() + ")"; }

}  // namespace

std::vector<Partition> sweep_partitions(int max_slsp, int min_so, int max_so) {
    std::vector<Partition> out;
    for (int n = 2; n <= max_slsp; ++n)
        for (auto& p : all_partitions(Flavor::sl, n)) out.push_back(p);
    for (int n = 2; n <= max_slsp; n += 2)
        for (auto& p : all_partitions(Flavor::sp, n)) out.push_back(p);
    for (int n = min_so; n <= max_so; ++n)
        for (auto& p : all_partitions(Flavor::so, n)) out.push_back(p);
    return out;
}

std::vector<SweepEntry> run_sweep(const std::vector<Partition>& parts, int trials) {
    std::vector<SweepEntry> out;
    for (const auto& p : parts) {
        SweepEntry e;
        e.partition = p;
        e.record = classify(p);
        e.oracle = oracle_verdict(p, trials, 0);
        auto rs = build_root_system(classical_type(p.flavor, p.n()));
        auto c = characteristic_from_partition(p).primary;
        e.characteristic_depth = depth_from_characteristic(rs, c);
        e.grading_lowest_dim = z_grading(rs, c).dim(-e.characteristic_depth);
        out.push_back(std::move(e));
    }
    return out;
}

Report check_equivalence(const std::vector<SweepEntry>& entries) {
    Report rep;
    rep.name = "oracle-classifier equivalence";
    for (const auto& e : entries)
        rep.add(tag(e.partition), e.oracle.type == e.record.type,
                "classifier " + e.record.type.to_string() + ", oracle " + e.oracle.type.to_string());
    return rep;
}

Report check_parity(const std::vector<SweepEntry>& entries) {
    Report rep;
    rep.name = "parity law";
    for (const auto& e : entries) {
        bool odd = e.record.depth % 2 == 1;
        bool ok = (e.record.type.kind == Kind::Nilpotent) == odd && (e.oracle.type.kind == Kind::Nilpotent) == odd &&
                  (e.record.rank == 0) == odd;
        rep.add(tag(e.partition), ok, "depth " + std::to_string(e.record.depth) + ", " + e.record.type.to_string());
    }
    return rep;
}

Report check_grading(const std::vector<SweepEntry>& entries) {
    Report rep;
    rep.name = "grading consistency";
    for (const auto& e : entries) {
        bool ok = e.oracle.lowest_dim == e.grading_lowest_dim && e.characteristic_depth == e.record.depth &&
                  e.oracle.depth == e.record.depth;
        rep.add(tag(e.partition), ok,
                "depth " + std::to_string(e.record.depth) + "/" + std::to_string(e.characteristic_depth) + "/" +
                    std::to_string(e.oracle.depth) + ", dim g_{-d} " + std::to_string(e.oracle.lowest_dim) + "/" +
                    std::to_string(e.grading_lowest_dim));
    }
    return rep;
}

Report check_jordan_image(int max_n, int seeds) {
    Report rep;
    rep.name = "nilpotent-type Jordan image";
    for (int n = 7; n <= max_n; ++n)
        for (const auto& p : all_partitions(Flavor::so, n)) {
            if (!nilpotent_type(p)) continue;
            auto expected = nilpotent_cyclic_jordan_type(p).parts;
            auto r = realize(p);
            auto basis = lowest_space(r, oracle_depth(r));
            for (int s = 0; s < seeds; ++s) {
                QMatrix m = r.e + sample_cyclic(r, basis, static_cast<std::uint64_t>(s)).F;
                std::string id = tag(p) + " seed " + std::to_string(s);
                if (!is_nilpotent_matrix(m)) {
                    rep.add(id, false, "e+F is not nilpotent");
                    continue;
                }
                auto got = jordan_type(m);
                rep.add(id, got == expected, "oracle " + Partition{Flavor::so, got}.to_string() + ", rule " +
                                                 Partition{Flavor::so, expected}.to_string());
            }
        }
    return rep;
}

Report check_bushes(int max_n) {
    Report rep;
    rep.name = "bush coherence";
    std::vector<Partition> all;
    for (int n = 2; n <= max_n; ++n) {
        for (auto& p : all_partitions(Flavor::sl, n)) all.push_back(p);
        if (n % 2 == 0)
            for (auto& p : all_partitions(Flavor::sp, n)) all.push_back(p);
        if (n >= 3)
            for (auto& p : all_partitions(Flavor::so, n)) all.push_back(p);
    }
    std::map<Partition, ClassificationRecord> recs;
    for (const auto& p : all) recs.emplace(p, classify(p));
    std::map<Partition, int> membership;
    for (const auto& p : all) {
        const auto& head = recs.at(p);
        if (head.type.kind != Kind::Semisimple) continue;
        auto members = bush(p);
        int ss = 0;
        std::string detail;
        bool contains_head = false;
        for (const auto& q : members) {
            const auto& rq = recs.at(q);
            ++membership[q];
            contains_head |= q == p;
            ss += rq.type.kind == Kind::Semisimple;
            if (rq.depth != head.depth || rq.rank != head.rank) detail += q.to_string() + " differs; ";
        }
        if (ss != 1) detail += std::to_string(ss) + " semisimple members; ";
        if (!contains_head) detail += "head missing; ";
        rep.add("bush of " + tag(p), detail.empty(),
                detail.empty() ? std::to_string(members.size()) + " members" : detail);
    }
    for (const auto& p : all) {
        if (recs.at(p).type.kind != Kind::Mixed) continue;
        int c = membership[p];
        rep.add("mixed " + tag(p), c == 1, "in " + std::to_string(c) + " bushes");
    }
    return rep;
}

}  // namespace cyclotype
