#include "bmg/coloring.hpp"

#include <functional>
#include <stdexcept>
#include <string>

namespace bmg {

namespace {

constexpr std::size_t kFree = static_cast<std::size_t>(-1);

bool augment(const BipartiteMultigraph& g, std::size_t u, std::vector<char>& visited,
             std::vector<std::size_t>& match_v) {
    for (std::size_t v = 0; v < g.n_v(); ++v) {
        if (g.mult(u, v) == 0 || visited[v]) continue;
        visited[v] = 1;
        if (match_v[v] == kFree || augment(g, match_v[v], visited, match_v)) {
            match_v[v] = u;
            return true;
        }
    }
    return false;
}

}  // namespace

std::optional<Matching> find_perfect_matching(const BipartiteMultigraph& g) {
    if (!g.is_square()) return std::nullopt;
    const std::size_t n = g.n_u();
    std::vector<std::size_t> match_v(n, kFree);
    std::vector<char> visited(n);
    for (std::size_t u = 0; u < n; ++u) {
        std::fill(visited.begin(), visited.end(), 0);
        if (!augment(g, u, visited, match_v)) return std::nullopt;
    }
    Matching m(n);
    for (std::size_t v = 0; v < n; ++v) m[match_v[v]] = v;
    return m;
}

std::optional<std::size_t> EdgeColoring::neighbor_with_color(std::size_t u, std::uint32_t color) const {
    for (std::size_t v = 0; v < n_v_; ++v)
        for (std::uint32_t c : colors(u, v))
            if (c == color) return v;
    return std::nullopt;
}

EdgeColoring edge_color(const BipartiteMultigraph& g) {
    const auto q = regularity(g);
    if (!q) throw std::invalid_argument("edge_color: graph is not regular");
    const std::size_t n = g.n_u();
    auto residual = g.rows();
    EdgeColoring coloring(n, n);
    for (Multiplicity t = 0; t < *q; ++t) {
        // residual is (q - t)-regular, so König guarantees a perfect matching
        const auto matching = find_perfect_matching(BipartiteMultigraph(residual));
        if (!matching) throw std::logic_error("edge_color: residual graph has no perfect matching");
        for (std::size_t u = 0; u < n; ++u) {
            const std::size_t v = (*matching)[u];
            coloring.colors(u, v).push_back(static_cast<std::uint32_t>(t));
            --residual[u][v];
        }
    }
    return coloring;
}

EdgeColoring edge_color(const BipartiteMultigraph& g, const Field& field) {
    const auto q = regularity(g);
    if (!q || *q != static_cast<Multiplicity>(field.order()))
        throw std::invalid_argument("edge_color: graph is not " + std::to_string(field.order()) + "-regular");
    return edge_color(g);
}

bool is_proper_coloring(const BipartiteMultigraph& g, const EdgeColoring& coloring, std::uint32_t num_colors) {
    if (coloring.n_v() != g.n_v() || (g.n_v() != 0 && coloring.n_u() != g.n_u())) return false;
    std::vector<std::vector<char>> seen_u(g.n_u(), std::vector<char>(num_colors, 0));
    std::vector<std::vector<char>> seen_v(g.n_v(), std::vector<char>(num_colors, 0));
    for (std::size_t u = 0; u < g.n_u(); ++u)
        for (std::size_t v = 0; v < g.n_v(); ++v) {
            const auto& cs = coloring.colors(u, v);
            if (static_cast<Multiplicity>(cs.size()) != g.mult(u, v)) return false;
            for (std::uint32_t c : cs) {
                if (c >= num_colors || seen_u[u][c] || seen_v[v][c]) return false;
                seen_u[u][c] = seen_v[v][c] = 1;
            }
        }
    return true;
}

bool check_coloring(const BipartiteMultigraph& g, const EdgeColoring& coloring, std::uint32_t num_colors) {
    if (!is_proper_coloring(g, coloring, num_colors)) return false;
    // proper with degree num_colors means every color appears once at each
    // vertex; a regular graph of any other degree cannot be complete
    const auto q = regularity(g);
    return !q || *q == static_cast<Multiplicity>(num_colors);
}

bool check_coloring(const BipartiteMultigraph& g, const EdgeColoring& coloring, const Field& field) {
    return check_coloring(g, coloring, field.order());
}

}  // namespace bmg
