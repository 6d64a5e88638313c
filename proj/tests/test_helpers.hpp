#pragma once

#include <random>

#include "isingnet/network.hpp"

namespace isingnet::testing {

// Uniformly random connected signed network (not reduced to a canonical
// representative; fine for property tests).
inline CouplingMatrix random_connected_network(std::mt19937_64& rng, int n)
{
    std::uniform_int_distribution<int> coin(0, 1);
    for (;;) {
        CouplingMatrix m;
        m.n = n;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (coin(rng)) m.set(i, j, coin(rng) ? std::int8_t{1} : std::int8_t{-1});
        bool connected = [&] {
            // plain BFS over nonzero couplings
            std::uint8_t seen = 1, frontier = 1;
            while (frontier) {
                std::uint8_t next = 0;
                for (int v = 0; v < n; ++v) {
                    if (!(frontier >> v & 1)) continue;
                    for (int w = 0; w < n; ++w)
                        if (w != v && m(v, w) != 0) next |= std::uint8_t(1u << w);
                }
                next &= std::uint8_t(~seen);
                seen |= next;
                frontier = next;
            }
            return seen == std::uint8_t((1u << n) - 1);
        }();
        if (connected) return m;
    }
}

inline CouplingMatrix triangle(int s01, int s02, int s12)
{
    CouplingMatrix m;
    m.n = 3;
    m.set(0, 1, static_cast<std::int8_t>(s01));
    m.set(0, 2, static_cast<std::int8_t>(s02));
    m.set(1, 2, static_cast<std::int8_t>(s12));
    return m;
}

// Path 0-1-2 with the two edge signs.
inline CouplingMatrix path3(int s01, int s12)
{
    CouplingMatrix m;
    m.n = 3;
    m.set(0, 1, static_cast<std::int8_t>(s01));
    m.set(1, 2, static_cast<std::int8_t>(s12));
    return m;
}

}  // namespace isingnet::testing
