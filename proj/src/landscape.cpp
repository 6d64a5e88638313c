#include "isingnet/landscape.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "isingnet/hamiltonian.hpp"

namespace isingnet {
namespace {

struct UnionFind {
    std::vector<int> parent;
    std::vector<int> size;

    explicit UnionFind(int n) : parent(n), size(n, 1)
    {
        std::iota(parent.begin(), parent.end(), 0);
    }

    int find(int x)
    {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    void unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size[a] < size[b]) std::swap(a, b);
        parent[b] = a;
        size[a] += size[b];
    }
};

int component_count(const std::vector<Config>& vertices,
                    const std::vector<std::pair<Config, Config>>& edges)
{
    UnionFind uf(static_cast<int>(vertices.size()));
    auto index_of = [&](Config v) {
        const auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
        if (it == vertices.end() || *it != v)
            throw std::invalid_argument("edge references a vertex outside the vertex set");
        return static_cast<int>(it - vertices.begin());
    };
    for (const auto& [a, b] : edges) uf.unite(index_of(a), index_of(b));
    int components = 0;
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i)
        if (uf.find(i) == i) ++components;
    return components;
}

}  // namespace

EquienergySubgraph build_equienergy_subgraph(const CouplingMatrix& j, bool include_isolated)
{
    EquienergySubgraph g;
    g.n_spins = j.n;
    g.includes_isolated = include_isolated;

    const Config dim = basis_dimension(j.n);
    // Orient each undirected flip once: take s_i = +1 (bit clear), so the
    // partner s | bit is always the larger index.
    for (Config s = 0; s < dim; ++s)
        for (int i = 0; i < j.n; ++i) {
            if (s >> i & 1u) continue;
            if (local_field(j, s, i) == 0) g.edges.emplace_back(s, s | (Config{1} << i));
        }

    if (include_isolated) {
        g.vertices.resize(dim);
        std::iota(g.vertices.begin(), g.vertices.end(), Config{0});
    } else {
        for (const auto& [a, b] : g.edges) {
            g.vertices.push_back(a);
            g.vertices.push_back(b);
        }
        std::sort(g.vertices.begin(), g.vertices.end());
        g.vertices.erase(std::unique(g.vertices.begin(), g.vertices.end()), g.vertices.end());
    }

    g.components = g.vertices.empty() ? 0 : component_count(g.vertices, g.edges);
    g.rank = static_cast<long long>(g.edges.size()) -
             static_cast<long long>(g.vertices.size()) + g.components;
    return g;
}

long long circuit_rank(const EquienergySubgraph& g)
{
    if (g.vertices.empty() && !g.edges.empty())
        throw std::invalid_argument("edges present but vertex set is empty");
    if (g.vertices.empty()) return 0;
    if (!std::is_sorted(g.vertices.begin(), g.vertices.end()))
        throw std::invalid_argument("vertex set must be sorted");
    const int c = component_count(g.vertices, g.edges);
    return static_cast<long long>(g.edges.size()) - static_cast<long long>(g.vertices.size()) + c;
}

DegreeProfile degree_profile(const CouplingMatrix& j)
{
    DegreeProfile p;
    p.n = j.n;
    for (int i = 0; i < j.n; ++i) {
        int d = 0;
        for (int k = 0; k < j.n; ++k)
            if (k != i && j(i, k) != 0) ++d;
        p.degrees[i] = d;
        p.flip_freedoms[i] = (1 + d) % 2;
    }
    for (int i = 0; i < j.n; ++i)
        for (int k = i + 1; k < j.n; ++k)
            if (p.flip_freedoms[i] == 1 && p.flip_freedoms[k] == 1 && j(i, k) == 0)
                ++p.unconstrained_pairs;
    return p;
}

}  // namespace isingnet
