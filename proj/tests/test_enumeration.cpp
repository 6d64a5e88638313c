#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "isingnet/enumeration.hpp"
#include "test_helpers.hpp"

using namespace isingnet;

namespace {

// Brute-force class count over all sign patterns of a graph: two patterns are
// equivalent iff some vertex permutation of one equals the other. Independent
// of the canonical-form machinery.
int brute_force_signed_classes(const UnsignedGraph& g)
{
    const auto edges = edge_list(g.adjacency);
    const int e = static_cast<int>(edges.size());
    std::vector<int> perm(g.n);
    std::vector<CouplingMatrix> seen;
    int classes = 0;
    for (std::uint32_t mask = 0; mask < (1u << e); ++mask) {
        CouplingMatrix m;
        m.n = g.n;
        for (int k = 0; k < e; ++k)
            m.set(edges[k].i, edges[k].j, (mask >> k & 1u) ? std::int8_t{-1} : std::int8_t{1});
        bool is_new = true;
        for (const auto& old : seen) {
            std::iota(perm.begin(), perm.end(), 0);
            do {
                bool equal = true;
                for (int i = 0; i < g.n && equal; ++i)
                    for (int j = i + 1; j < g.n && equal; ++j)
                        if (old(perm[i], perm[j]) != m(i, j)) equal = false;
                if (equal) {
                    is_new = false;
                    break;
                }
            } while (std::next_permutation(perm.begin(), perm.end()));
            if (!is_new) break;
        }
        if (is_new) {
            seen.push_back(m);
            ++classes;
        }
    }
    return classes;
}

CouplingMatrix permuted(const CouplingMatrix& m, const std::vector<int>& perm)
{
    CouplingMatrix out;
    out.n = m.n;
    for (int i = 0; i < m.n; ++i)
        for (int j = i + 1; j < m.n; ++j)
            if (m(i, j) != 0) out.set(perm[i], perm[j], m(i, j));
    return out;
}

}  // namespace

TEST_CASE("connected graph enumeration matches known counts")
{
    CHECK(enumerate_connected_graphs(1).size() == 1);
    CHECK(enumerate_connected_graphs(2).size() == 1);
    CHECK(enumerate_connected_graphs(3).size() == 2);
    CHECK(enumerate_connected_graphs(4).size() == 6);
    CHECK(enumerate_connected_graphs(5).size() == 21);
}

TEST_CASE("size guard rejects n outside [1, 7]")
{
    CHECK_THROWS_AS(enumerate_connected_graphs(0), unsupported_size_error);
    CHECK_THROWS_AS(enumerate_connected_graphs(8), unsupported_size_error);
    CHECK_THROWS_AS(count_networks(2), unsupported_size_error);
}

TEST_CASE("three-spin signed classes match a permutation brute force")
{
    const auto graphs = enumerate_connected_graphs(3);
    REQUIRE(graphs.size() == 2);
    int total = 0;
    for (const auto& g : graphs) {
        const int expected = brute_force_signed_classes(g);
        const auto nets = assign_couplings(g);
        CHECK(nets.size() == static_cast<std::size_t>(expected));
        total += expected;
        const auto e = edge_list(g.adjacency).size();
        // path (2 edges) splits into 3 classes, triangle (3 edges) into 4
        if (e == 2) CHECK(nets.size() == 3);
        if (e == 3) CHECK(nets.size() == 4);
    }
    CHECK(total == 7);
}

TEST_CASE("single edge has exactly the two sign classes")
{
    UnsignedGraph g;
    g.n = 2;
    g.adjacency.n = 2;
    g.adjacency.set(0, 1, 1);
    const auto nets = assign_couplings(g);
    REQUIRE(nets.size() == 2);
    std::set<int> signs;
    for (const auto& net : nets) signs.insert(net.couplings(0, 1));
    CHECK(signs == std::set<int>{-1, 1});
}

TEST_CASE("path sign classes collapse (-,+) onto (+,-)")
{
    using testing::path3;
    const auto a = canonical_signed_form(path3(1, -1));
    const auto b = canonical_signed_form(path3(-1, 1));
    CHECK(a == b);
    const auto pp = canonical_signed_form(path3(1, 1));
    const auto mm = canonical_signed_form(path3(-1, -1));
    CHECK(pp != a);
    CHECK(pp != mm);
    CHECK(a != mm);
}

TEST_CASE("canonical form identifies isomorphic triangles and separates others")
{
    using testing::triangle;
    CHECK(canonical_signed_form(triangle(1, 1, -1)) ==
          canonical_signed_form(triangle(1, -1, 1)));
    CHECK(canonical_signed_form(triangle(1, 1, 1)) !=
          canonical_signed_form(triangle(-1, -1, -1)));
}

TEST_CASE("canonical form is invariant under random vertex permutations")
{
    std::mt19937_64 rng(20240811);
    for (int n = 3; n <= 6; ++n) {
        for (int rep = 0; rep < 40; ++rep) {
            const auto m = testing::random_connected_network(rng, n);
            std::vector<int> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            CHECK(canonical_signed_form(m) == canonical_signed_form(permuted(m, perm)));
        }
    }
}

TEST_CASE("table of class counts for small sizes")
{
    const auto c3 = count_networks(3);
    CHECK(c3.connected_graphs == 2);
    CHECK(c3.interaction_networks == 7);
    const auto c4 = count_networks(4);
    CHECK(c4.connected_graphs == 6);
    CHECK(c4.interaction_networks == 53);
    const auto c5 = count_networks(5);
    CHECK(c5.connected_graphs == 21);
    CHECK(c5.interaction_networks == 712);
}

TEST_CASE("enumerated networks are connected, canonical and duplicate free")
{
    const auto nets = enumerate_networks(4);
    REQUIRE(nets.size() == 53);
    std::set<CanonicalForm> ids;
    std::mt19937_64 rng(7);
    for (const auto& net : nets) {
        CHECK(is_connected(net.couplings));
        CHECK(ids.insert(net.canonical_id).second);
        CHECK(canonical_signed_form(net.couplings) == net.canonical_id);
        // a random relabeling must canonicalize back to the same id
        std::vector<int> perm(net.n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(canonical_signed_form(permuted(net.couplings, perm)) == net.canonical_id);
    }
    CHECK(std::is_sorted(nets.begin(), nets.end(), [](const Network& a, const Network& b) {
        return a.canonical_id < b.canonical_id;
    }));
    CHECK(nets.front().id == "N4-1");
    CHECK(nets.back().id == "N4-53");
}

TEST_CASE("enumeration order does not depend on the worker count")
{
    const auto one = enumerate_canonical_forms(4, 1);
    const auto four = enumerate_canonical_forms(4, 4);
    CHECK(one == four);
}

TEST_CASE("network id formatting round trips")
{
    CHECK(format_network_id(5, 17) == "N5-17");
    int n = 0;
    std::uint64_t ordinal = 0;
    CHECK(parse_network_id("N5-17", n, ordinal));
    CHECK(n == 5);
    CHECK(ordinal == 17);
    CHECK_FALSE(parse_network_id("N5x17", n, ordinal));
    CHECK_FALSE(parse_network_id("5-17", n, ordinal));
    CHECK_FALSE(parse_network_id("N8-1", n, ordinal));
    CHECK_FALSE(parse_network_id("N5-0", n, ordinal));
}
