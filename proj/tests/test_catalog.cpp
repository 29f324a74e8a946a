#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>

#include "cyclotype/catalog.hpp"
#include "cyclotype/error.hpp"

using namespace cyclotype;
namespace fs = std::filesystem;

namespace {

const Catalog& shipped() {
    static const Catalog cat = load();
    return cat;
}

SimpleType T(const char* s) { return SimpleType::parse(s); }

// Copies the shipped data into a scratch directory so one file can be corrupted.
fs::path scratch_copy(const std::string& name) {
    auto dir = fs::temp_directory_path() / ("cyclotype_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    for (const auto& f : fs::directory_iterator(default_data_dir())) fs::copy_file(f.path(), dir / f.path().filename());
    return dir;
}

void replace_in_file(const fs::path& file, const std::string& from, const std::string& to) {
    std::ifstream in(file);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    auto pos = text.find(from);
    ASSERT_NE(pos, std::string::npos) << from;
    text.replace(pos, from.size(), to);
    std::ofstream(file) << text;
}

}  // namespace

TEST(Catalog, QueryExamples) {
    const auto& a7 = shipped().query(T("E8"), "A_7");
    EXPECT_EQ(a7.kind.kind, Kind::Nilpotent);
    EXPECT_EQ(a7.d, 15);
    EXPECT_EQ(a7.cyclic_image, "E_8");

    const auto& e6a1 = shipped().query(T("E6"), "E_6(a_1)");
    EXPECT_EQ(e6a1.d, 16);
    EXPECT_EQ(e6a1.r, 1);
    EXPECT_EQ(e6a1.a, "0");

    const auto& f4 = shipped().query(T("F4"), "Ã_2");
    EXPECT_EQ(f4.a, "A_2");
    EXPECT_EQ(f4.zrep, "G_2");
    EXPECT_EQ(&shipped().query(T("F4"), "~A2"), &f4);
    EXPECT_THROW(shipped().query(T("E6"), "E_7"), DomainError);
}

TEST(Catalog, Census) {
    EXPECT_EQ(counts(shipped(), T("E6")), (Census{20, 2, 13, 5}));
    EXPECT_EQ(counts(shipped(), T("E7")), (Census{44, 3, 21, 5}));
    EXPECT_EQ(counts(shipped(), T("E8")), (Census{69, 7, 27, 7}));
    EXPECT_EQ(counts(shipped(), T("F4")), (Census{15, 2, 11, 4}));
    EXPECT_EQ(counts(shipped(), T("G2")), (Census{4, 1, 3, 2}));
}

TEST(Catalog, AllChecksPass) {
    for (int k = 1; k <= verify_check_count; ++k) {
        auto rep = verify_check(shipped(), k);
        EXPECT_FALSE(rep.items.empty()) << verify_check_name(k);
        for (const auto& i : rep.items) EXPECT_TRUE(i.pass) << verify_check_name(k) << " " << i.id << ": " << i.detail;
    }
    auto all = verify(shipped());
    EXPECT_EQ(static_cast<int>(all.items.size()), verify_check_count);
    EXPECT_TRUE(all.ok());
}

TEST(Catalog, E8PrincipalRegularOrder) {
    const auto& r = shipped().query(T("E8"), "E_8");
    EXPECT_EQ(r.d, 58);
    auto rs = build_root_system(T("E8"));
    auto s = sigma_data(rs, r.characteristic);
    EXPECT_EQ(s.order, 30);
    EXPECT_EQ(rs.root_count, 30 * s.fixed_set.dim());
    EXPECT_TRUE(regular_order_check(rs, r.characteristic));
}

TEST(Catalog, E8b5FailsRegularOrder) {
    const auto& r = shipped().query(T("E8"), "E_8(b_5)");
    auto rs = build_root_system(T("E8"));
    EXPECT_EQ(sigma_data(rs, r.characteristic).fixed_set.dim(), 22);
    EXPECT_FALSE(regular_order_check(rs, r.characteristic));
}

TEST(Catalog, E6BushOfA2) {
    auto members = shipped().bush_members("E6:A_2");
    std::set<std::string> labels;
    for (const auto* m : members) {
        labels.insert(m->label);
        EXPECT_EQ(m->d, 4);
        EXPECT_EQ(m->r, 1);
    }
    EXPECT_EQ(labels, (std::set<std::string>{"A_2", "A_2+A_1", "A_2+2A_1"}));
    EXPECT_EQ(members.front()->label, "A_2");
}

TEST(Catalog, ZrepDimensions) {
    EXPECT_EQ(zrep_dimension("SO_7⊕1"), 8);
    EXPECT_EQ(zrep_dimension("G_2"), 7);
    EXPECT_EQ(zrep_dimension("4"), 4);
    EXPECT_TRUE(zrep_is_trivial("2"));
    EXPECT_FALSE(zrep_is_trivial("SO_3"));
}

TEST(Catalog, DerivedDimZ) {
    const auto& r = shipped().query(T("E8"), "E_8");
    EXPECT_EQ(derived_dim_z(r), 8);
    EXPECT_FALSE(derived_dim_z(shipped().query(T("E8"), "A_7")).has_value());
}

TEST(Catalog, MissingDirectoryIsDataError) { EXPECT_THROW(load("/nonexistent/cyclotype"), DataError); }

TEST(Catalog, DuplicateLabelRejected) {
    auto dir = scratch_copy("dup");
    replace_in_file(dir / "orbits_exceptional.json", "\"label\": \"E_6(a_1)\"", "\"label\": \"E_6\"");
    EXPECT_THROW(load(dir), DataError);
}

TEST(Catalog, DanglingBushRejected) {
    auto dir = scratch_copy("dangling");
    replace_in_file(dir / "orbits_exceptional.json", "\"bush_id\": \"E6:E_6(a_1)\"", "\"bush_id\": \"E6:X_9\"");
    EXPECT_THROW(load(dir), DataError);
}

TEST(Catalog, SchemaVersionChecked) {
    auto dir = scratch_copy("schema");
    replace_in_file(dir / "tables6.json", "\"schema_version\": 1", "\"schema_version\": 2");
    EXPECT_THROW(load(dir), DataError);
}

TEST(Catalog, CorruptedDepthFailsCheckOne) {
    auto dir = scratch_copy("depth");
    replace_in_file(dir / "orbits_exceptional.json", "\"label\": \"E_6(a_1)\", \"characteristic\": [2, 2, 2, 0, 2, 2], \"d\": 16",
                    "\"label\": \"E_6(a_1)\", \"characteristic\": [2, 2, 2, 0, 2, 2], \"d\": 18");
    auto rep = verify_check(load(dir), 1);
    EXPECT_EQ(rep.failures(), 1);
}
