#pragma once

#include <cstdint>

namespace isingnet {

// Hard cap on system size; brute-force canonical labeling and dense
// diagonalization are tuned for dimensions up to 2^7 = 128.
inline constexpr int kMaxSpins = 7;

// Fock basis label on the N-dimensional hypercube. Convention: bit i of the
// index is 0 for spin up (s_i = +1) and 1 for spin down (s_i = -1); spins are
// little-endian (spin i <-> bit i).
using Config = std::uint32_t;

inline int spin_sign(Config s, int i) { return (s >> i) & 1u ? -1 : +1; }

inline Config flip_spin(Config s, int i) { return s ^ (Config{1} << i); }

inline std::uint32_t basis_dimension(int n_spins)
{
    return std::uint32_t{1} << n_spins;
}

}  // namespace isingnet
