#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "bmg/graph.hpp"

namespace bmg {

inline constexpr std::size_t kBadnessCap = 8;

/// A 3-regular spanning subgraph sub <= g (entrywise) and pm(sub) mod 3.
struct SpanningSubgraphWitness {
    BipartiteMultigraph sub;
    std::uint32_t residue = 0;
};

/// Every 3-regular spanning subgraph of a q-regular g (q >= 3, n <= 8).
/// Cells are filled row-major with candidate values descending; the visitor
/// returns false to stop.
void enumerate_3regular_spanning(const BipartiteMultigraph& g,
                                 const std::function<bool(const BipartiteMultigraph&)>& visit);
std::size_t count_3regular_spanning(const BipartiteMultigraph& g);

struct BadnessResult {
    bool bad = false;
    std::optional<SpanningSubgraphWitness> witness;  // set iff !bad
};

/// g is bad iff no 3-regular spanning subgraph has pm not divisible by 3.
BadnessResult is_bad(const BipartiteMultigraph& g);

}  // namespace bmg
