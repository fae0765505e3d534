#include "mgraph/catalog.hpp"

#include <cmath>
#include <istream>

namespace mgraph {

namespace {

MultiGraph make_grid(int d, int n) {
    // d rows by n columns, vertex (r, c) = r*n + c
    std::vector<std::pair<int, int>> es;
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < n; ++c) {
            if (c + 1 < n) es.push_back({r * n + c, r * n + c + 1});
            if (r + 1 < d) es.push_back({r * n + c, (r + 1) * n + c});
        }
    return MultiGraph::simple(d * n, es);
}

MultiGraph make_complete_bipartite(int d, int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < n; ++j) es.push_back({i, d + j});
    return MultiGraph::simple(d + n, es);
}

MultiGraph make_complete(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.push_back({i, j});
    return MultiGraph::simple(n, es);
}

MultiGraph make_cycle(int n) {
    if (n == 1) return MultiGraph::simple(1, {{0, 0}});  // degenerate: one loop
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) es.push_back({i, (i + 1) % n});
    return MultiGraph::simple(n, es);
}

MultiGraph make_banana(int n) {
    std::vector<std::pair<int, int>> es(n, {0, 1});
    return MultiGraph::simple(2, es);
}

MultiGraph make_hypercube(int n) {
    std::vector<std::pair<int, int>> es;
    for (int v = 0; v < (1 << n); ++v)
        for (int b = 0; b < n; ++b)
            if (!(v & (1 << b))) es.push_back({v, v | (1 << b)});
    return MultiGraph::simple(1 << n, es);
}

// 14-vertex cubic graph whose mixing involution has a betti-2 quotient; it
// embeds in a genus-2 surface. Left/right columns are exchanged by the
// involution; the brute-force genus check is the regression assertion.
MultiGraph make_genus2_example() {
    enum { L, R, C, E, M, N, A, B, D, D2, F, F2, G, G2 };
    std::vector<std::pair<int, int>> es = {
        {A, B},  {A, G2}, {C, A},  {C, D},  {E, B},  {E, D2}, {D, D2},
        {D, F2}, {L, C},  {L, M},  {L, R},  {R, E},  {R, N},  {F, F2},
        {F, D2}, {M, F},  {M, G},  {N, F2}, {N, G2}, {G, G2}, {G, B},
    };
    return MultiGraph::simple(14, es);
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

}  // namespace

std::vector<std::string> catalog_names() {
    return {"grid",   "complete_bipartite",   "complete", "cycle",
            "banana", "hypercube", "paper-genus2-example"};
}

CatalogEntry catalog(const std::string& name, const std::vector<int>& params) {
    CatalogEntry entry;
    entry.name = name;
    entry.parameters = params;
    auto need = [&](size_t k) {
        if (params.size() != k)
            throw error("catalog " + name + " expects " + std::to_string(k) + " parameter(s)");
    };
    if (name == "grid") {
        need(2);
        int d = params[0], n = params[1];
        if (d < 1 || n < 1) throw error("grid parameters must be positive");
        entry.graph = make_grid(d, n);
        entry.family = {FamilyHint::Grid, d, n};
        entry.expected.push_back({"gonality", static_cast<double>(std::min(d, n)), "paper"});
        entry.expected.push_back({"treewidth", static_cast<double>(std::min(d, n)), "derived"});
    } else if (name == "complete_bipartite") {
        need(2);
        int d = params[0], n = params[1];
        if (d < 1 || n < 1) throw error("complete_bipartite parameters must be positive");
        entry.graph = make_complete_bipartite(d, n);
        entry.family = {FamilyHint::CompleteBipartite, d, n};
        if (d >= 3 && n >= 3)
            entry.expected.push_back(
                {"genus", static_cast<double>(ceil_div((d - 2) * (n - 2), 4)), "paper"});
        if (d <= n) {
            entry.expected.push_back({"treewidth", static_cast<double>(d), "paper"});
            entry.expected.push_back({"gonality", static_cast<double>(d), "paper"});
        }
    } else if (name == "complete") {
        need(1);
        int n = params[0];
        if (n < 1) throw error("complete parameter must be positive");
        entry.graph = make_complete(n);
        if (n == 5) entry.expected.push_back({"genus", 1, "paper"});
        if (n >= 2) entry.expected.push_back({"treewidth", static_cast<double>(n - 1), "derived"});
    } else if (name == "cycle") {
        need(1);
        int n = params[0];
        if (n < 1) throw error("cycle parameter must be positive");
        entry.graph = make_cycle(n);
        if (n >= 3) {
            entry.expected.push_back({"genus", 0, "derived"});
            entry.expected.push_back({"hyperelliptic", 1, "derived"});
            entry.expected.push_back({"treewidth", 2, "derived"});
        }
    } else if (name == "banana") {
        need(1);
        int n = params[0];
        if (n < 1) throw error("banana parameter must be positive");
        entry.graph = make_banana(n);
        entry.expected.push_back({"hyperelliptic", 1, "paper"});
        entry.expected.push_back({"genus", 0, "derived"});
    } else if (name == "hypercube") {
        need(1);
        int n = params[0];
        if (n < 1 || n > 10) throw error("hypercube parameter out of range");
        entry.graph = make_hypercube(n);
        entry.family = {FamilyHint::Hypercube, n, n};
    } else if (name == "paper-genus2-example") {
        need(0);
        entry.graph = make_genus2_example();
        entry.expected.push_back({"genus_upper", 2, "paper"});
        entry.expected.push_back({"quotient_betti", 2, "paper"});
    } else {
        throw error("unknown catalog name: " + name);
    }
    return entry;
}

void HeckePattern::validate() const {
    if (dimension <= 0) throw error("hecke pattern dimension must be positive");
    if (static_cast<int>(matrix.size()) != dimension) throw error("hecke pattern row count mismatch");
    for (const auto& row : matrix) {
        if (static_cast<int>(row.size()) != dimension) throw error("hecke pattern column count mismatch");
        for (long long x : row)
            if (x < 0) throw error("hecke pattern entries must be nonnegative");
    }
    for (int i = 0; i < dimension; ++i)
        for (int j = 0; j < dimension; ++j)
            if ((matrix[i][j] != 0) != (matrix[j][i] != 0))
                throw error("hecke pattern support is not symmetric at (" + std::to_string(i) +
                            "," + std::to_string(j) + ")");
}

HeckePattern read_hecke(std::istream& in) {
    std::string tag;
    if (!(in >> tag) || tag != "hecke") throw error("expected 'hecke <d> <D> <p> <q>' header");
    HeckePattern h;
    if (!(in >> h.dimension >> h.D >> h.p >> h.q)) throw error("bad hecke header");
    if (h.dimension <= 0 || h.dimension > 4096) throw error("hecke dimension out of range");
    h.matrix.assign(h.dimension, std::vector<long long>(h.dimension, 0));
    for (int i = 0; i < h.dimension; ++i)
        for (int j = 0; j < h.dimension; ++j)
            if (!(in >> h.matrix[i][j])) throw error("truncated hecke matrix");
    h.validate();
    return h;
}

MultiGraph reduced_dual_graph(const HeckePattern& h) {
    h.validate();
    int d = h.dimension;
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            if (h.matrix[i][j] != 0) es.push_back({i, d + j});
    return MultiGraph::simple(2 * d, es);
}

}  // namespace mgraph
