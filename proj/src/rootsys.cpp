#include "cyclotype/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "cyclotype/error.hpp"

namespace cyclotype {

SimpleType SimpleType::make(Family f, int rank) {
    switch (f) {
        case Family::A: CYCLOTYPE_REQUIRE(rank >= 1, "A_n needs n >= 1"); break;
        case Family::B: CYCLOTYPE_REQUIRE(rank >= 2, "B_n needs n >= 2"); break;
        case Family::C: CYCLOTYPE_REQUIRE(rank >= 2, "C_n needs n >= 2"); break;
        case Family::D: CYCLOTYPE_REQUIRE(rank >= 3, "D_n needs n >= 3"); break;
        case Family::E6: CYCLOTYPE_REQUIRE(rank == 6, "E6 has rank 6"); break;
        case Family::E7: CYCLOTYPE_REQUIRE(rank == 7, "E7 has rank 7"); break;
        case Family::E8: CYCLOTYPE_REQUIRE(rank == 8, "E8 has rank 8"); break;
        case Family::F4: CYCLOTYPE_REQUIRE(rank == 4, "F4 has rank 4"); break;
        case Family::G2: CYCLOTYPE_REQUIRE(rank == 2, "G2 has rank 2"); break;
    }
    return SimpleType{f, rank};
}

SimpleType SimpleType::parse(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (c != '_' && c != ' ') s += c;
    CYCLOTYPE_REQUIRE(s.size() >= 2, "bad simple type: " + raw);
    int rank = 0;
    try {
        std::size_t used = 0;
        rank = std::stoi(s.substr(1), &used);
        CYCLOTYPE_REQUIRE(used == s.size() - 1, "bad simple type: " + raw);
    } catch (const std::logic_error&) {
        throw DomainError("bad simple type: " + raw);
    }
    switch (s[0]) {
        case 'A': return make(Family::A, rank);
        case 'B': return make(Family::B, rank);
        case 'C': return make(Family::C, rank);
        case 'D': return make(Family::D, rank);
        case 'E':
            if (rank == 6) return make(Family::E6, 6);
            if (rank == 7) return make(Family::E7, 7);
            if (rank == 8) return make(Family::E8, 8);
            break;
        case 'F': return make(Family::F4, rank);
        case 'G': return make(Family::G2, rank);
    }
    throw DomainError("bad simple type: " + raw);
}

std::string SimpleType::name() const {
    static const char* letters = "ABCDEEEFG";
    return std::string(1, letters[static_cast<int>(family)]) + std::to_string(rank);
}

int SimpleType::dim() const {
    const int n = rank;
    switch (family) {
        case Family::A: return n * (n + 2);
        case Family::B:
        case Family::C: return n * (2 * n + 1);
        case Family::D: return n * (2 * n - 1);
        case Family::E6: return 78;
        case Family::E7: return 133;
        case Family::E8: return 248;
        case Family::F4: return 52;
        case Family::G2: return 14;
    }
    return 0;
}

IntMatrix cartan_matrix(SimpleType t) {
    const int n = t.rank;
    IntMatrix a(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
    switch (t.family) {
        case Family::A:
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
            break;
        case Family::B:
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
            a[n - 2][n - 1] = -2;
            break;
        case Family::C:
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
            a[n - 1][n - 2] = -2;
            break;
        case Family::D:
            for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
            link(n - 3, n - 1);
            break;
        case Family::E6:
        case Family::E7:
        case Family::E8:
            link(0, 2);
            link(1, 3);
            link(2, 3);
            for (int i = 3; i + 1 < n; ++i) link(i, i + 1);
            break;
        case Family::F4:
            link(0, 1);
            link(1, 2);
            link(2, 3);
            a[1][2] = -2;
            break;
        case Family::G2:
            link(0, 1);
            a[1][0] = -3;
            break;
    }
    return a;
}

std::vector<int> root_lengths(const IntMatrix& a) {
    const int n = static_cast<int>(a.size());
    // lengths scaled by 6 so every ratio stays integral
    std::vector<int> len(n, 0);
    for (int start = 0; start < n; ++start) {
        if (len[start]) continue;
        len[start] = 6;
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            for (int j = 0; j < n; ++j) {
                if (j == i || a[i][j] == 0 || len[j]) continue;
                // A_ij * l_j = A_ji * l_i
                len[j] = a[j][i] * len[i] / a[i][j];
                stack.push_back(j);
            }
        }
    }
    int m = *std::min_element(len.begin(), len.end());
    for (auto& l : len) l /= m;
    return len;
}

std::vector<Root> RootSystem::positive_roots() const {
    return std::vector<Root>(roots.begin(), roots.begin() + root_count / 2);
}

RootSystem build_root_system(SimpleType t) {
    t = SimpleType::make(t.family, t.rank);
    RootSystem rs;
    rs.simple_type = t;
    rs.cartan = cartan_matrix(t);
    const int n = t.rank;
    std::set<Root> pos;
    std::vector<Root> frontier;
    for (int i = 0; i < n; ++i) {
        Root r(n, 0);
        r[i] = 1;
        pos.insert(r);
        frontier.push_back(r);
    }
    while (!frontier.empty()) {
        std::vector<Root> next;
        for (const auto& b : frontier)
            for (int j = 0; j < n; ++j) {
                int p = 0;
                for (int i = 0; i < n; ++i) p += b[i] * rs.cartan[i][j];
                Root r = b;
                r[j] -= p;
                bool positive = std::all_of(r.begin(), r.end(), [](int x) { return x >= 0; }) &&
                                std::any_of(r.begin(), r.end(), [](int x) { return x != 0; });
                if (positive && pos.insert(r).second) next.push_back(r);
            }
        frontier = std::move(next);
    }
    std::vector<Root> sorted(pos.begin(), pos.end());
    auto height = [](const Root& r) { return std::accumulate(r.begin(), r.end(), 0); };
    std::stable_sort(sorted.begin(), sorted.end(),
                     [&](const Root& x, const Root& y) { return height(x) < height(y); });
    rs.highest_root_coeffs = sorted.back();
    rs.roots = sorted;
    for (const auto& r : sorted) {
        Root neg(r);
        for (auto& x : neg) x = -x;
        rs.roots.push_back(neg);
    }
    rs.root_count = static_cast<int>(rs.roots.size());
    return rs;
}

DynkinGraph DynkinGraph::from_cartan(IntMatrix a) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        CYCLOTYPE_REQUIRE(a[i].size() == a.size(), "Cartan matrix must be square");
        CYCLOTYPE_REQUIRE(a[i][i] == 2, "Cartan matrix diagonal must be 2");
        for (std::size_t j = 0; j < a.size(); ++j)
            CYCLOTYPE_REQUIRE((a[i][j] == 0) == (a[j][i] == 0), "asymmetric zero pattern");
    }
    return DynkinGraph{std::move(a)};
}

DynkinGraph DynkinGraph::from_edges(int n, const std::vector<Edge>& edges) {
    IntMatrix a(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    for (const auto& e : edges) {
        CYCLOTYPE_REQUIRE(e.u >= 0 && e.u < n && e.v >= 0 && e.v < n && e.u != e.v, "edge out of range");
        CYCLOTYPE_REQUIRE(e.bond >= 1 && e.bond <= 3, "bond multiplicity must be 1, 2 or 3");
        CYCLOTYPE_REQUIRE(a[e.u][e.v] == 0, "duplicate edge");
        if (e.bond == 1) {
            a[e.u][e.v] = a[e.v][e.u] = -1;
            continue;
        }
        CYCLOTYPE_REQUIRE(e.long_end == e.u || e.long_end == e.v, "multiple bond without arrow");
        int lng = e.long_end, shrt = e.long_end == e.u ? e.v : e.u;
        a[lng][shrt] = -e.bond;
        a[shrt][lng] = -1;
    }
    return DynkinGraph{std::move(a)};
}

DynkinGraph DynkinGraph::induced(const std::vector<int>& nodes) const {
    IntMatrix b(nodes.size(), std::vector<int>(nodes.size()));
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = 0; j < nodes.size(); ++j) b[i][j] = a[nodes[i]][nodes[j]];
    return DynkinGraph{std::move(b)};
}

namespace {

SimpleType classify_component(const DynkinGraph& g, const std::vector<int>& comp) {
    const int k = static_cast<int>(comp.size());
    if (k == 1) return SimpleType::make(Family::A, 1);
    std::vector<int> degree(k, 0);
    int edges = 0, multi = 0, multi_bond = 0;
    std::pair<int, int> multi_edge{-1, -1};
    for (int x = 0; x < k; ++x)
        for (int y = x + 1; y < k; ++y) {
            int aij = g.a[comp[x]][comp[y]], aji = g.a[comp[y]][comp[x]];
            if (aij == 0) continue;
            int prod = aij * aji;
            CYCLOTYPE_REQUIRE(aij < 0 && aji < 0 && prod <= 3, "component is not a finite Dynkin diagram");
            ++edges;
            ++degree[x];
            ++degree[y];
            if (prod > 1) {
                ++multi;
                multi_bond = prod;
                multi_edge = {x, y};
            }
        }
    CYCLOTYPE_REQUIRE(edges == k - 1, "component is not a tree");
    int maxdeg = *std::max_element(degree.begin(), degree.end());
    if (multi == 0) {
        if (maxdeg <= 2) return SimpleType::make(Family::A, k);
        CYCLOTYPE_REQUIRE(maxdeg == 3 && std::count(degree.begin(), degree.end(), 3) == 1,
                          "unsupported simply-laced component");
        int centre = static_cast<int>(std::find(degree.begin(), degree.end(), 3) - degree.begin());
        std::vector<int> arms;
        for (int y = 0; y < k; ++y) {
            if (g.a[comp[centre]][comp[y]] == 0 || y == centre) continue;
            int prev = centre, cur = y, len = 1;
            for (;;) {
                int nxt = -1;
                for (int z = 0; z < k; ++z)
                    if (z != cur && z != prev && g.a[comp[cur]][comp[z]] != 0) nxt = z;
                if (nxt < 0) break;
                prev = cur;
                cur = nxt;
                ++len;
            }
            arms.push_back(len);
        }
        std::sort(arms.begin(), arms.end());
        if (arms[0] == 1 && arms[1] == 1) return SimpleType::make(Family::D, k);
        if (arms[0] == 1 && arms[1] == 2) {
            if (arms[2] == 2) return SimpleType::make(Family::E6, 6);
            if (arms[2] == 3) return SimpleType::make(Family::E7, 7);
            if (arms[2] == 4) return SimpleType::make(Family::E8, 8);
        }
        throw DomainError("component is not a finite Dynkin diagram");
    }
    CYCLOTYPE_REQUIRE(multi == 1 && maxdeg <= 2, "component is not a finite Dynkin diagram");
    if (multi_bond == 3) {
        CYCLOTYPE_REQUIRE(k == 2, "triple bond only in G2");
        return SimpleType::make(Family::G2, 2);
    }
    if (k == 2) return SimpleType::make(Family::B, 2);
    auto [x, y] = multi_edge;
    // |A_xy| > 1 means x carries the long root
    bool x_long = g.a[comp[x]][comp[y]] < -1;
    if (degree[x] == 1 || degree[y] == 1) {
        int end = degree[x] == 1 ? x : y;
        bool end_long = (end == x) == x_long;
        return SimpleType::make(end_long ? Family::C : Family::B, k);
    }
    CYCLOTYPE_REQUIRE(k == 4, "double bond in the interior of a long chain");
    return SimpleType::make(Family::F4, 4);
}

}  // namespace

std::vector<SimpleType> classify_subdiagram(const DynkinGraph& g) {
    const int n = g.size();
    std::vector<bool> seen(n, false);
    std::vector<SimpleType> out;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp, stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            comp.push_back(i);
            for (int j = 0; j < n; ++j)
                if (!seen[j] && j != i && g.a[i][j] != 0) {
                    seen[j] = true;
                    stack.push_back(j);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(classify_component(g, comp));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string AffineDiagram::name() const { return base.name() + "^(" + std::to_string(twist) + ")"; }

AffineDiagram extended_diagram(const RootSystem& rs) {
    const int r = rs.rank();
    const auto& A = rs.cartan;
    const auto& theta = rs.highest_root_coeffs;
    auto len = root_lengths(A);
    int long_len = *std::max_element(len.begin(), len.end());
    IntMatrix a(r + 1, std::vector<int>(r + 1, 0));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) a[i + 1][j + 1] = A[i][j];
    a[0][0] = 2;
    for (int j = 0; j < r; ++j) {
        int x = 0, y = 0;
        for (int i = 0; i < r; ++i) {
            x += theta[i] * A[i][j];
            y += theta[i] * A[j][i] * len[i];
        }
        a[0][j + 1] = -x;
        a[j + 1][0] = -y / long_len;
    }
    AffineDiagram d;
    d.base = rs.simple_type;
    d.twist = 1;
    d.graph = DynkinGraph{std::move(a)};
    d.affine_marks.push_back(1);
    d.affine_marks.insert(d.affine_marks.end(), theta.begin(), theta.end());
    return d;
}

AffineDiagram twisted_diagram(SimpleType base, int k) {
    AffineDiagram d;
    d.base = base;
    d.twist = k;
    if (base.family == Family::E6 && k == 2) {
        // 0 - 1 - 2 <= 3 - 4, nodes 0..2 short
        d.graph = DynkinGraph::from_edges(5, {{0, 1, 1, -1}, {1, 2, 1, -1}, {2, 3, 2, 3}, {3, 4, 1, -1}});
        d.affine_marks = {1, 2, 3, 2, 1};
        return d;
    }
    if (base.family == Family::D && base.rank == 4 && k == 3) {
        // 0 - 1 <= 2 with a triple bond, node 2 long
        d.graph = DynkinGraph::from_edges(3, {{0, 1, 1, -1}, {1, 2, 3, 2}});
        d.affine_marks = {1, 2, 1};
        return d;
    }
    if (k == 1) throw DomainError("twist 1 diagrams come from extended_diagram");
    throw DomainError("no twisted diagram " + base.name() + "^(" + std::to_string(k) + ")");
}

int TypeSum::rank() const {
    int r = torus;
    for (const auto& t : summands) r += t.rank;
    return r;
}

int TypeSum::dim() const {
    int d = torus;
    for (const auto& t : summands) d += t.dim();
    return d;
}

std::string TypeSum::to_string() const {
    std::string s;
    for (const auto& t : summands) s += (s.empty() ? "" : "+") + t.name();
    if (torus > 0) s += (s.empty() ? "T" : "+T") + std::to_string(torus);
    return s.empty() ? "0" : s;
}

namespace {

std::string replace_all(std::string s, const std::string& from, const std::string& to) {
    for (std::size_t pos = 0; (pos = s.find(from, pos)) != std::string::npos; pos += to.size())
        s.replace(pos, from.size(), to);
    return s;
}

}  // namespace

TypeSum parse_type_sum(const std::string& raw) {
    std::string s = raw;
    s = replace_all(s, "⊕", "+");
    s = replace_all(s, "Ã", "A");   // precomposed A-tilde
    s = replace_all(s, "̃", "");    // combining tilde
    std::string clean;
    for (char c : s)
        if (c != ' ' && c != '[' && c != ']' && c != '\'' && c != '_' && c != '~') clean += c;
    TypeSum out;
    if (clean.empty() || clean == "0") return out;
    std::stringstream ss(clean);
    std::string tok;
    while (std::getline(ss, tok, '+')) {
        CYCLOTYPE_REQUIRE(!tok.empty(), "empty summand in " + raw);
        std::size_t i = 0;
        int mult = 1;
        if (std::isdigit(static_cast<unsigned char>(tok[0]))) {
            mult = 0;
            while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]))) mult = mult * 10 + (tok[i++] - '0');
        }
        std::string body = tok.substr(i);
        CYCLOTYPE_REQUIRE(!body.empty(), "bad summand in " + raw);
        if (body[0] == 'T') {
            out.torus += mult * std::stoi(body.substr(1));
            continue;
        }
        SimpleType t = SimpleType::parse(body);
        for (int k = 0; k < mult; ++k) out.summands.push_back(t);
    }
    std::sort(out.summands.begin(), out.summands.end());
    return out;
}

}  // namespace cyclotype
