#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "bmg/graph.hpp"

namespace bmg {

/// SplitMix64 (Steele, Lea, Flood). state += 0x9E3779B97F4A7C15, then the
/// output is mixed with shifts 30/27/31 and multipliers 0xBF58476D1CE4E5B9,
/// 0x94D049BB133111EB. Fixed so samples reproduce across implementations.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}
    std::uint64_t next() noexcept;
    /// Uniform in [0, bound) by rejection of the biased low range; bound >= 1.
    std::uint64_t below(std::uint64_t bound) noexcept;

private:
    std::uint64_t state_;
};

/// The SplitMix64 output function applied to x.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Seed of the i-th sample in a run: master ^ mix64(i).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept;

/// Fisher–Yates: for i = n-1 down to 1 swap perm[i] with perm[below(i+1)].
std::vector<std::size_t> random_permutation(std::size_t n, SplitMix64& rng);

/// [[q]]: the only q-regular bipartite multigraph on two vertices.
BipartiteMultigraph gen_k2_multi(Multiplicity q);

/// Cycle u_1 v_1 u_2 v_2 ... u_m v_m u_1 (len = 2m) where each u_i v_i has
/// multiplicity q-1 and each v_i u_{i+1} multiplicity 1.
BipartiteMultigraph gen_inflated_cycle(std::size_t len, Multiplicity q);

/// K_{n,n}.
BipartiteMultigraph gen_complete(std::size_t n);

/// Superposition of q independent uniform perfect matchings.
BipartiteMultigraph gen_random_permutation_model(std::size_t n, std::size_t q, SplitMix64& rng);
BipartiteMultigraph gen_random_permutation_model(std::size_t n, std::size_t q, std::uint64_t seed);

/// Rejection sampling of the permutation model until the result is simple.
/// When 2q > n the (n-q)-regular complement is sampled instead and flipped.
/// nullopt once max_tries draws were rejected.
std::optional<BipartiteMultigraph> gen_random_simple(std::size_t n, std::size_t q, SplitMix64& rng,
                                                     std::uint64_t max_tries);
std::optional<BipartiteMultigraph> gen_random_simple(std::size_t n, std::size_t q, std::uint64_t seed,
                                                     std::uint64_t max_tries);

inline constexpr std::size_t kEnumerateCap = 6;

/// Every 0/1 n×n matrix with all line sums q, rows chosen in increasing
/// lexicographic order. The visitor returns false to stop early.
void enumerate_labeled_regular(std::size_t n, std::size_t q,
                               const std::function<bool(const BipartiteMultigraph&)>& visit);
std::vector<BipartiteMultigraph> enumerate_labeled_regular(std::size_t n, std::size_t q);

}  // namespace bmg
