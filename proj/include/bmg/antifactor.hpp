#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "bmg/gf.hpp"
#include "bmg/graph.hpp"
#include "bmg/nullpoly.hpp"

namespace bmg {

/// choice[u] = the V-neighbour joined to u in H; H has d_H(u) = 1 for all u.
using OneFactorChoice = std::vector<std::size_t>;

/// d_H(v) for every v. Throws std::invalid_argument if some chosen pair has
/// multiplicity zero or the shape is wrong.
std::vector<std::size_t> choice_degrees(const BipartiteMultigraph& g, const OneFactorChoice& h);

/// True iff d_H(v) mod q != alpha(v) for every v.
bool verify(const BipartiteMultigraph& g, const AlphaAssignment& alpha, const OneFactorChoice& h, std::uint32_t q);

/// Exhaustive backtracking over neighbour choices. U-vertices are decided in
/// descending order of distinct-neighbour count (ties by index), neighbours in
/// increasing v; a branch is cut once a v with no undecided neighbours has
/// d_H(v) ≡ alpha(v). With threads > 1 the top-level branches run in parallel
/// and the first successful branch in sequential order wins, so the result
/// does not depend on the thread count. q need not be a prime power.
std::optional<OneFactorChoice> find_antifactor(const BipartiteMultigraph& g, const AlphaAssignment& alpha,
                                               std::uint32_t q, unsigned threads = 1);

/// Edge-colors g, builds f, takes the first nonvanishing point s and maps each
/// x_u = s_u to the neighbour across the edge of that color.
std::optional<OneFactorChoice> find_via_polynomial(const BipartiteMultigraph& g, const AlphaAssignment& alpha,
                                                   std::shared_ptr<const Field> field);

/// alpha as a constant or explicit per-vertex list, checked against q.
AlphaAssignment alpha_const(std::size_t n_v, std::uint32_t value, std::uint32_t q);

}  // namespace bmg
