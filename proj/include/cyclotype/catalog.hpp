#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyclotype/classical.hpp"
#include "cyclotype/gradecalc.hpp"
#include "cyclotype/kaccalc.hpp"
#include "cyclotype/report.hpp"

namespace cyclotype {

/// One nilpotent orbit of an exceptional algebra. Descriptor strings are verbatim; absent for
/// nilpotent-type orbits.
struct OrbitRecord {
    SimpleType algebra;
    std::string label;
    Characteristic characteristic;
    int d = 0;
    int r = 0;
    std::optional<std::string> a, gs, es, gn, en, zrep;
    std::optional<int> zrep_dim;
    std::optional<bool> zrep_trivial;
    std::optional<std::string> zrep_note;
    CyclicType kind;
    std::optional<std::string> bush_id;
    bool distinguished = false;
    /// Image of e+F for nilpotent-type orbits.
    std::optional<std::string> cyclic_image;
};

struct MixedRecord {
    SimpleType algebra;
    int group = 0;
    std::string label;
    int dim_z = 0;
    std::string a;
    std::string nilpart;
};

struct Table11Row {
    SimpleType algebra;
    std::string label;
    int d = 0;
    std::string cyclic_image;
};

struct Census {
    int nonzero = 0, nilpotent = 0, semisimple = 0, regular_semisimple = 0;
    bool operator==(const Census&) const = default;
};

struct Catalog {
    std::filesystem::path dir;
    std::vector<OrbitRecord> records;
    std::vector<MixedRecord> mixed;
    std::vector<Table11Row> table11;
    std::vector<Table6Row> table6;
    /// Published class counts per algebra.
    std::map<SimpleType, Census> census;

    /// Label match ignores spaces, underscores and brackets; throws DomainError when absent.
    const OrbitRecord& query(SimpleType algebra, const std::string& label) const;
    std::vector<const OrbitRecord*> bush_members(const std::string& bush_id) const;
};

/// CYCLOTYPE_DATA_DIR if set, else the data directory of the source tree.
std::filesystem::path default_data_dir();

/// Throws DataError on missing files, schema violations, duplicate labels, dangling references.
Catalog load(const std::filesystem::path& dir = default_data_dir());

Census counts(const Catalog& cat, SimpleType algebra);

/// Dimension of the representation space named by a zrep descriptor ("SO_7⊕1" -> 8).
int zrep_dimension(const std::string& zrep);
/// Whether the descriptor names the trivial group (a bare dimension).
bool zrep_is_trivial(const std::string& zrep);

/// dim z(e+F) = dim a + rank g - rank a, for semisimple-type records.
std::optional<int> derived_dim_z(const OrbitRecord& rec);

inline constexpr int verify_check_count = 10;

/// One check, itemized per record/row. Checks are numbered 1..10:
/// depth, parity, rank, zrep dimension, bush coherence, regular order, regular flag,
/// census, diagram tables, mixed records.
Report verify_check(const Catalog& cat, int k);
std::string verify_check_name(int k);

/// All ten checks, one item each.
Report verify(const Catalog& cat);

}  // namespace cyclotype
