#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "eigsum/embedding.hpp"
#include "eigsum/graph.hpp"

namespace eigsum {

// SplitMix64 (Steele, Lea & Flood 2014): 64-bit state, golden-ratio increment,
// Stafford "mix13" finalizer. Every random generator here draws from it so a
// (parameters, seed) pair yields the same graph on any platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) from the top 53 bits.
    double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound). Plain modulo; the bias is below 2^-40 for
    /// the bounds used here.
    std::uint64_t below(std::uint64_t bound) noexcept { return next() % bound; }

private:
    std::uint64_t state_;
};

Graph gen_path(std::size_t n);
Graph gen_cycle(std::size_t n);
/// Star with its center at the highest id n-1.
Graph gen_star(std::size_t n);
Graph gen_complete(std::size_t n);

/// Join of an edgeless graph on the first n-p vertices with K_p on the last p.
/// p = 1 is the star, p = n-1 the complete graph.
Graph gen_join(std::size_t n, std::size_t p);

/// Erdos-Renyi G(n, probability) conditioned on connectivity by rejection.
/// Pairs u < v are visited in lexicographic order, one SplitMix64 draw each;
/// rejected draws continue the same stream. Throws after 1000 attempts.
Graph gen_random_connected(std::size_t n, double edge_probability, std::uint64_t seed);

/// Random connected cluster of n points in Z^nu grown from the origin: each step
/// picks a uniformly random placed point, axis and direction and adds the
/// target point if it is new.
std::vector<LatticePoint> gen_random_lattice_cluster(std::size_t nu, std::size_t n, std::uint64_t seed);

}  // namespace eigsum
