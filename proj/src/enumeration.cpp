#include "isingnet/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <charconv>
#include <cstring>
#include <mutex>
#include <set>
#include <thread>
#include <utility>

namespace isingnet {
namespace {

int resolve_workers(int workers)
{
    if (workers > 0) return workers;
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

std::uint8_t encode_entry(int v) { return v == 0 ? 0u : (v > 0 ? 1u : 2u); }
std::int8_t decode_entry(std::uint8_t b) { return b == 0 ? 0 : (b == 1 ? 1 : -1); }

void validate_matrix(const CouplingMatrix& m)
{
    if (m.n < 1 || m.n > kMaxSpins)
        throw unsupported_size_error("vertex count must be in [1, 7], got " + std::to_string(m.n));
    for (int i = 0; i < m.n; ++i) {
        if (m(i, i) != 0)
            throw std::invalid_argument("coupling matrix has a self-loop");
        for (int j = 0; j < m.n; ++j) {
            if (m(i, j) != m(j, i))
                throw std::invalid_argument("coupling matrix is not symmetric");
            if (m(i, j) < -1 || m(i, j) > 1)
                throw std::invalid_argument("coupling entries must be in {-1, 0, +1}");
        }
    }
}

// Iterated neighborhood refinement. Returns per-vertex colors, densely
// numbered by the rank of each vertex's invariant key (signed degrees, then
// multisets of (edge value, neighbor color) to a fixed point). Keys never
// involve vertex indices, so colors are stable under relabeling.
std::array<int, kMaxSpins> refine_colors(const CouplingMatrix& m)
{
    const int n = m.n;
    std::array<int, kMaxSpins> color{};
    {
        std::array<std::pair<int, int>, kMaxSpins> key{};
        for (int i = 0; i < n; ++i) {
            int dp = 0, dm = 0;
            for (int j = 0; j < n; ++j) {
                if (m(i, j) > 0) ++dp;
                else if (m(i, j) < 0) ++dm;
            }
            key[i] = {dp, dm};
        }
        std::vector<std::pair<int, int>> uniq(key.begin(), key.begin() + n);
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        for (int i = 0; i < n; ++i)
            color[i] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), key[i]) -
                                        uniq.begin());
    }

    using Signature = std::vector<int>;
    for (int round = 0; round < n; ++round) {
        std::array<Signature, kMaxSpins> sig;
        for (int i = 0; i < n; ++i) {
            std::vector<std::pair<int, int>> nb;
            for (int j = 0; j < n; ++j)
                if (j != i && m(i, j) != 0) nb.emplace_back(m(i, j), color[j]);
            std::sort(nb.begin(), nb.end());
            Signature s;
            s.reserve(1 + 2 * nb.size());
            s.push_back(color[i]);
            for (const auto& [value, c] : nb) {
                s.push_back(value);
                s.push_back(c);
            }
            sig[i] = std::move(s);
        }
        std::vector<Signature> uniq(sig.begin(), sig.begin() + n);
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        std::array<int, kMaxSpins> next{};
        for (int i = 0; i < n; ++i)
            next[i] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), sig[i]) -
                                       uniq.begin());
        if (std::equal(next.begin(), next.begin() + n, color.begin())) break;
        color = next;
    }
    return color;
}

// Vertices grouped by refined color, cells in ascending color order. Every
// isomorphism maps cells onto cells, so the canonical search only needs the
// within-cell arrangements.
std::vector<std::vector<int>> color_cells(const CouplingMatrix& m)
{
    const auto color = refine_colors(m);
    int max_color = 0;
    for (int i = 0; i < m.n; ++i) max_color = std::max(max_color, color[i]);
    std::vector<std::vector<int>> cells(max_color + 1);
    for (int i = 0; i < m.n; ++i) cells[color[i]].push_back(i);
    return cells;
}

// Calls fn(vertex_at) for every arrangement consistent with the cell
// partition, where vertex_at[p] is the vertex placed at position p.
template <typename Fn>
void for_each_candidate(std::vector<std::vector<int>> cells, Fn&& fn)
{
    std::array<int, kMaxSpins> vertex_at{};
    for (;;) {
        int p = 0;
        for (const auto& cell : cells)
            for (int v : cell) vertex_at[p++] = v;
        fn(vertex_at);
        int c = static_cast<int>(cells.size()) - 1;
        while (c >= 0 && !std::next_permutation(cells[c].begin(), cells[c].end())) --c;
        if (c < 0) return;
    }
}

void serialize_arrangement(const CouplingMatrix& m, const std::array<int, kMaxSpins>& vertex_at,
                           std::uint8_t* out)
{
    int k = 0;
    for (int p = 0; p < m.n; ++p)
        for (int q = p + 1; q < m.n; ++q)
            out[k++] = encode_entry(m(vertex_at[p], vertex_at[q]));
}

struct SlotTable {
    int count = 0;
    std::array<std::pair<int, int>, 21> pairs{};   // slot -> (i, j), i < j, lexicographic
    std::array<std::array<int, kMaxSpins>, kMaxSpins> index{};  // (i, j) -> slot
};

SlotTable slot_table(int n)
{
    SlotTable t;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            t.pairs[t.count] = {i, j};
            t.index[i][j] = t.count;
            t.index[j][i] = t.count;
            ++t.count;
        }
    return t;
}

CouplingMatrix matrix_from_mask(int n, const SlotTable& slots, std::uint32_t mask)
{
    CouplingMatrix m;
    m.n = n;
    for (int k = 0; k < slots.count; ++k)
        if (mask >> k & 1u) m.set(slots.pairs[k].first, slots.pairs[k].second, 1);
    return m;
}

bool mask_connected(int n, const SlotTable& slots, std::uint32_t mask)
{
    std::array<std::uint8_t, kMaxSpins> nb{};
    for (int k = 0; k < slots.count; ++k)
        if (mask >> k & 1u) {
            nb[slots.pairs[k].first] |= std::uint8_t(1u << slots.pairs[k].second);
            nb[slots.pairs[k].second] |= std::uint8_t(1u << slots.pairs[k].first);
        }
    std::uint8_t seen = 1, frontier = 1;
    while (frontier != 0) {
        std::uint8_t next = 0;
        std::uint8_t f = frontier;
        while (f != 0) {
            int v = std::countr_zero(f);
            f &= std::uint8_t(f - 1);
            next |= nb[v];
        }
        next &= std::uint8_t(~seen);
        seen |= next;
        frontier = next;
    }
    return seen == std::uint8_t((1u << n) - 1);
}

// Automorphisms of g expressed as permutations of its edge slots, identity
// omitted. A sign assignment (one bit per edge, 1 = antiferromagnetic) is a
// class representative iff no slot permutation maps it to a smaller mask.
std::vector<std::array<std::uint8_t, 21>> edge_slot_automorphisms(const UnsignedGraph& g)
{
    const auto slots = slot_table(g.n);
    const auto edges = edge_list(g.adjacency);
    std::array<int, 21> edge_slot_of{};  // edge index -> slot of (i, j) in the subgraph
    std::array<int, 21> slot_edge_of{};
    slot_edge_of.fill(-1);
    for (std::size_t k = 0; k < edges.size(); ++k) {
        edge_slot_of[k] = slots.index[edges[k].i][edges[k].j];
        slot_edge_of[edge_slot_of[k]] = static_cast<int>(k);
    }

    std::vector<std::array<std::uint8_t, 21>> result;
    for (const auto& vp : graph_automorphisms(g.adjacency)) {
        bool identity = true;
        for (int i = 0; i < g.n; ++i)
            if (vp[i] != i) { identity = false; break; }
        if (identity) continue;
        std::array<std::uint8_t, 21> ep{};
        for (std::size_t k = 0; k < edges.size(); ++k) {
            int a = vp[edges[k].i], b = vp[edges[k].j];
            int target = slot_edge_of[slots.index[a][b]];
            ep[k] = static_cast<std::uint8_t>(target);
        }
        result.push_back(ep);
    }
    return result;
}

std::uint32_t apply_edge_perm(const std::array<std::uint8_t, 21>& perm, int e, std::uint32_t mask)
{
    std::uint32_t out = 0;
    std::uint32_t bits = mask;
    while (bits != 0) {
        int k = std::countr_zero(bits);
        bits &= bits - 1;
        out |= std::uint32_t{1} << perm[k];
    }
    (void)e;
    return out;
}

bool is_class_representative(std::uint32_t mask,
                             const std::vector<std::array<std::uint8_t, 21>>& perms, int e)
{
    for (const auto& p : perms)
        if (apply_edge_perm(p, e, mask) < mask) return false;
    return true;
}

CouplingMatrix signed_matrix(const UnsignedGraph& g, const std::vector<Edge>& edges,
                             std::uint32_t mask)
{
    CouplingMatrix m;
    m.n = g.n;
    for (std::size_t k = 0; k < edges.size(); ++k)
        m.set(edges[k].i, edges[k].j, (mask >> k & 1u) ? std::int8_t{-1} : std::int8_t{1});
    return m;
}

// Chunked mask ranges so one fat graph (K6, K7) spreads across workers.
struct GraphTask {
    std::size_t graph = 0;
    std::uint32_t begin = 0;
    std::uint32_t end = 0;
};

std::vector<GraphTask> make_tasks(const std::vector<UnsignedGraph>& graphs)
{
    constexpr std::uint32_t chunk = 1u << 15;
    std::vector<GraphTask> tasks;
    for (std::size_t g = 0; g < graphs.size(); ++g) {
        const auto e = edge_list(graphs[g].adjacency).size();
        const std::uint32_t total = std::uint32_t{1} << e;
        for (std::uint32_t b = 0; b < total; b += chunk)
            tasks.push_back({g, b, std::min(total, b + chunk)});
    }
    return tasks;
}

template <typename PerTask>
void run_parallel(std::size_t task_count, int workers, PerTask&& per_task)
{
    const int w = std::min<int>(resolve_workers(workers),
                                static_cast<int>(std::max<std::size_t>(task_count, 1)));
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex error_mutex;
    auto body = [&](int worker) {
        try {
            for (;;) {
                std::size_t t = next.fetch_add(1);
                if (t >= task_count) return;
                per_task(worker, t);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!error) error = std::current_exception();
        }
    };
    pool.reserve(static_cast<std::size_t>(w));
    for (int i = 0; i < w; ++i) pool.emplace_back(body, i);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace

bool is_connected(const CouplingMatrix& m)
{
    if (m.n < 1) return false;
    std::array<std::uint8_t, kMaxSpins> nb{};
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j)
            if (j != i && m(i, j) != 0) nb[i] |= std::uint8_t(1u << j);
    std::uint8_t seen = 1, frontier = 1;
    while (frontier != 0) {
        std::uint8_t next = 0;
        std::uint8_t f = frontier;
        while (f != 0) {
            int v = std::countr_zero(f);
            f &= std::uint8_t(f - 1);
            next |= nb[v];
        }
        next &= std::uint8_t(~seen);
        seen |= next;
        frontier = next;
    }
    return seen == std::uint8_t((1u << m.n) - 1);
}

std::vector<Edge> edge_list(const CouplingMatrix& m)
{
    std::vector<Edge> edges;
    for (int i = 0; i < m.n; ++i)
        for (int j = i + 1; j < m.n; ++j)
            if (m(i, j) != 0) edges.push_back({i, j, m(i, j)});
    return edges;
}

CouplingMatrix matrix_from_edges(int n, const std::vector<Edge>& edges)
{
    CouplingMatrix m;
    m.n = n;
    for (const auto& e : edges) {
        if (e.i < 0 || e.j <= e.i || e.j >= n)
            throw std::invalid_argument("edge endpoints out of range");
        if (e.sign != 1 && e.sign != -1)
            throw std::invalid_argument("edge sign must be +1 or -1");
        m.set(e.i, e.j, static_cast<std::int8_t>(e.sign));
    }
    return m;
}

CouplingMatrix decode_canonical(const CanonicalForm& form)
{
    CouplingMatrix m;
    m.n = form.n;
    int k = 0;
    for (int i = 0; i < form.n; ++i)
        for (int j = i + 1; j < form.n; ++j)
            m.set(i, j, decode_entry(form.bytes[k++]));
    return m;
}

CanonicalForm canonical_signed_form(const CouplingMatrix& m)
{
    validate_matrix(m);
    CanonicalForm best;
    best.n = static_cast<std::uint8_t>(m.n);
    const int len = best.size();
    bool first = true;
    std::array<std::uint8_t, 21> buf{};
    for_each_candidate(color_cells(m), [&](const std::array<int, kMaxSpins>& vertex_at) {
        serialize_arrangement(m, vertex_at, buf.data());
        if (first || std::memcmp(buf.data(), best.bytes.data(), len) < 0) {
            std::memcpy(best.bytes.data(), buf.data(), len);
            first = false;
        }
    });
    return best;
}

std::vector<std::array<std::uint8_t, kMaxSpins>> graph_automorphisms(const CouplingMatrix& m)
{
    validate_matrix(m);
    std::vector<std::array<std::uint8_t, kMaxSpins>> result;
    for_each_candidate(color_cells(m), [&](const std::array<int, kMaxSpins>& vertex_at) {
        for (int i = 0; i < m.n; ++i)
            for (int j = i + 1; j < m.n; ++j)
                if (m(vertex_at[i], vertex_at[j]) != m(i, j)) return;
        std::array<std::uint8_t, kMaxSpins> perm{};
        for (int i = 0; i < m.n; ++i) perm[i] = static_cast<std::uint8_t>(vertex_at[i]);
        result.push_back(perm);
    });
    return result;
}

std::vector<UnsignedGraph> enumerate_connected_graphs(int n, int workers)
{
    if (n < 1 || n > kMaxSpins)
        throw unsupported_size_error("vertex count must be in [1, 7], got " + std::to_string(n));
    const auto slots = slot_table(n);
    const std::uint32_t total = std::uint32_t{1} << slots.count;
    const int w = resolve_workers(workers);

    std::vector<std::set<CanonicalForm>> found(w);
    const std::uint32_t per = (total + w - 1) / w;
    run_parallel(w, w, [&](int, std::size_t t) {
        const std::uint32_t begin = static_cast<std::uint32_t>(t) * per;
        const std::uint32_t end = std::min(total, begin + per);
        auto& local = found[t];
        for (std::uint32_t mask = begin; mask < end; ++mask) {
            if (!mask_connected(n, slots, mask)) continue;
            local.insert(canonical_signed_form(matrix_from_mask(n, slots, mask)));
        }
    });

    std::set<CanonicalForm> merged;
    for (auto& s : found) merged.merge(s);
    std::vector<UnsignedGraph> graphs;
    graphs.reserve(merged.size());
    for (const auto& form : merged)
        graphs.push_back({form.n, decode_canonical(form)});
    return graphs;
}

std::vector<Network> assign_couplings(const UnsignedGraph& g)
{
    if (!is_connected(g.adjacency))
        throw std::invalid_argument("assign_couplings requires a connected graph");
    const auto edges = edge_list(g.adjacency);
    const int e = static_cast<int>(edges.size());
    const auto perms = edge_slot_automorphisms(g);

    std::vector<Network> out;
    const std::uint32_t total = std::uint32_t{1} << e;
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        if (!is_class_representative(mask, perms, e)) continue;
        Network net;
        net.n = g.n;
        net.couplings = signed_matrix(g, edges, mask);
        net.canonical_id = canonical_signed_form(net.couplings);
        net.couplings = decode_canonical(net.canonical_id);
        out.push_back(std::move(net));
    }
    std::sort(out.begin(), out.end(),
              [](const Network& a, const Network& b) { return a.canonical_id < b.canonical_id; });
    return out;
}

std::vector<CanonicalForm> enumerate_canonical_forms(int n, int workers)
{
    const auto graphs = enumerate_connected_graphs(n, workers);

    struct GraphContext {
        std::vector<Edge> edges;
        std::vector<std::array<std::uint8_t, 21>> perms;
    };
    std::vector<GraphContext> ctx(graphs.size());
    for (std::size_t g = 0; g < graphs.size(); ++g)
        ctx[g] = {edge_list(graphs[g].adjacency), edge_slot_automorphisms(graphs[g])};

    const auto tasks = make_tasks(graphs);
    std::vector<std::vector<CanonicalForm>> per_task(tasks.size());
    run_parallel(tasks.size(), workers, [&](int, std::size_t t) {
        const auto& task = tasks[t];
        const auto& graph = graphs[task.graph];
        const auto& c = ctx[task.graph];
        const int e = static_cast<int>(c.edges.size());
        auto& local = per_task[t];
        for (std::uint32_t mask = task.begin; mask < task.end; ++mask) {
            if (!is_class_representative(mask, c.perms, e)) continue;
            local.push_back(canonical_signed_form(signed_matrix(graph, c.edges, mask)));
        }
    });

    std::size_t count = 0;
    for (const auto& v : per_task) count += v.size();
    std::vector<CanonicalForm> forms;
    forms.reserve(count);
    for (auto& v : per_task) forms.insert(forms.end(), v.begin(), v.end());
    std::sort(forms.begin(), forms.end());
    return forms;
}

Network network_from_canonical(const CanonicalForm& form, std::uint64_t ordinal)
{
    Network net;
    net.n = form.n;
    net.couplings = decode_canonical(form);
    net.canonical_id = form;
    net.id = format_network_id(form.n, ordinal);
    return net;
}

std::vector<Network> enumerate_networks(int n, int workers)
{
    const auto forms = enumerate_canonical_forms(n, workers);
    std::vector<Network> nets;
    nets.reserve(forms.size());
    for (std::size_t k = 0; k < forms.size(); ++k)
        nets.push_back(network_from_canonical(forms[k], k + 1));
    return nets;
}

NetworkCounts count_networks(int n, int workers)
{
    if (n < 3 || n > kMaxSpins)
        throw unsupported_size_error("count_networks requires 3 <= n <= 7, got " +
                                     std::to_string(n));
    const auto graphs = enumerate_connected_graphs(n, workers);

    std::vector<std::vector<Edge>> edges(graphs.size());
    std::vector<std::vector<std::array<std::uint8_t, 21>>> perms(graphs.size());
    for (std::size_t g = 0; g < graphs.size(); ++g) {
        edges[g] = edge_list(graphs[g].adjacency);
        perms[g] = edge_slot_automorphisms(graphs[g]);
    }

    const auto tasks = make_tasks(graphs);
    std::vector<std::uint64_t> per_task(tasks.size(), 0);
    run_parallel(tasks.size(), workers, [&](int, std::size_t t) {
        const auto& task = tasks[t];
        const int e = static_cast<int>(edges[task.graph].size());
        const auto& p = perms[task.graph];
        std::uint64_t local = 0;
        if (p.empty()) {
            local = task.end - task.begin;  // asymmetric graph: every mask is a class
        } else {
            for (std::uint32_t mask = task.begin; mask < task.end; ++mask)
                if (is_class_representative(mask, p, e)) ++local;
        }
        per_task[t] = local;
    });

    NetworkCounts counts;
    counts.connected_graphs = graphs.size();
    for (std::uint64_t c : per_task) counts.interaction_networks += c;
    return counts;
}

std::string format_network_id(int n, std::uint64_t ordinal)
{
    return "N" + std::to_string(n) + "-" + std::to_string(ordinal);
}

bool parse_network_id(std::string_view id, int& n, std::uint64_t& ordinal)
{
    if (id.size() < 4 || id[0] != 'N') return false;
    const auto dash = id.find('-');
    if (dash == std::string_view::npos || dash == 1 || dash + 1 == id.size()) return false;
    const auto* first = id.data() + 1;
    auto [p1, ec1] = std::from_chars(first, id.data() + dash, n);
    if (ec1 != std::errc{} || p1 != id.data() + dash) return false;
    auto [p2, ec2] = std::from_chars(id.data() + dash + 1, id.data() + id.size(), ordinal);
    if (ec2 != std::errc{} || p2 != id.data() + id.size()) return false;
    return n >= 1 && n <= kMaxSpins && ordinal >= 1;
}

}  // namespace isingnet
