#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bmg/gf.hpp"
#include "bmg/graph.hpp"

namespace bmg {

/// matching[u] = v, over the support of the multiplicity matrix.
using Matching = std::vector<std::size_t>;

/// Perfect matching of the support by augmenting paths (Kuhn). Free U-vertices
/// are processed in increasing index, neighbours scanned in increasing v.
/// nullopt when the graph is not square or has no perfect matching.
std::optional<Matching> find_perfect_matching(const BipartiteMultigraph& g);

/// Color of every parallel edge copy, stored as field element encodings.
class EdgeColoring {
public:
    EdgeColoring() = default;
    EdgeColoring(std::size_t n_u, std::size_t n_v) : n_v_(n_v), colors_(n_u * n_v) {}

    std::size_t n_u() const noexcept { return n_v_ ? colors_.size() / n_v_ : 0; }
    std::size_t n_v() const noexcept { return n_v_; }

    /// Colors of the copies of u–v, indexed by copy.
    const std::vector<std::uint32_t>& colors(std::size_t u, std::size_t v) const { return colors_[u * n_v_ + v]; }
    std::vector<std::uint32_t>& colors(std::size_t u, std::size_t v) { return colors_[u * n_v_ + v]; }

    std::uint32_t color(const EdgeInstance& e) const { return colors(e.u, e.v).at(e.copy); }

    /// The V-endpoint of the edge at u with the given color, if any.
    std::optional<std::size_t> neighbor_with_color(std::size_t u, std::uint32_t color) const;

    friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

private:
    std::size_t n_v_ = 0;
    std::vector<std::vector<std::uint32_t>> colors_;
};

/// Proper q-edge-coloring of a q-regular graph by peeling q perfect
/// matchings; matching t receives color t. Throws std::invalid_argument if g
/// is not regular.
EdgeColoring edge_color(const BipartiteMultigraph& g);

/// As above, additionally requiring the degree to equal the field order.
EdgeColoring edge_color(const BipartiteMultigraph& g, const Field& field);

/// Every vertex sees pairwise distinct colors, all below num_colors, and the
/// copy lists match the multiplicities.
bool is_proper_coloring(const BipartiteMultigraph& g, const EdgeColoring& coloring, std::uint32_t num_colors);

/// Properness (and, for regular g, completeness) with colors in [0, num_colors).
bool check_coloring(const BipartiteMultigraph& g, const EdgeColoring& coloring, std::uint32_t num_colors);
bool check_coloring(const BipartiteMultigraph& g, const EdgeColoring& coloring, const Field& field);

}  // namespace bmg
