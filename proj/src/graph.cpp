#include "bmg/graph.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>
#include <sstream>

namespace bmg {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
      line_(line) {}

BipartiteMultigraph::BipartiteMultigraph(std::size_t n_u, std::size_t n_v)
    : n_u_(n_u), n_v_(n_v), mult_(n_u * n_v, 0) {}

BipartiteMultigraph::BipartiteMultigraph(std::vector<std::vector<Multiplicity>> rows)
    : n_u_(rows.size()), n_v_(rows.empty() ? 0 : rows.front().size()) {
    mult_.reserve(n_u_ * n_v_);
    for (const auto& row : rows) {
        if (row.size() != n_v_) throw std::invalid_argument("ragged multiplicity matrix");
        for (Multiplicity m : row) {
            if (m < 0) throw std::invalid_argument("negative multiplicity");
            mult_.push_back(m);
        }
    }
}

Multiplicity BipartiteMultigraph::at(std::size_t u, std::size_t v) const {
    if (u >= n_u_ || v >= n_v_) throw std::out_of_range("vertex index out of range");
    return mult(u, v);
}

Multiplicity BipartiteMultigraph::degree_u(std::size_t u) const {
    if (u >= n_u_) throw std::out_of_range("U-index out of range");
    auto first = mult_.begin() + static_cast<std::ptrdiff_t>(u * n_v_);
    return std::accumulate(first, first + static_cast<std::ptrdiff_t>(n_v_), Multiplicity{0});
}

Multiplicity BipartiteMultigraph::degree_v(std::size_t v) const {
    if (v >= n_v_) throw std::out_of_range("V-index out of range");
    Multiplicity d = 0;
    for (std::size_t u = 0; u < n_u_; ++u) d += mult(u, v);
    return d;
}

Multiplicity BipartiteMultigraph::total() const {
    return std::accumulate(mult_.begin(), mult_.end(), Multiplicity{0});
}

Multiplicity BipartiteMultigraph::max_mult() const {
    return mult_.empty() ? 0 : *std::max_element(mult_.begin(), mult_.end());
}

std::vector<std::vector<Multiplicity>> BipartiteMultigraph::rows() const {
    std::vector<std::vector<Multiplicity>> out(n_u_);
    for (std::size_t u = 0; u < n_u_; ++u)
        out[u].assign(mult_.begin() + static_cast<std::ptrdiff_t>(u * n_v_),
                      mult_.begin() + static_cast<std::ptrdiff_t>((u + 1) * n_v_));
    return out;
}

std::optional<Multiplicity> regularity(const BipartiteMultigraph& g) {
    if (!g.is_square() || g.n_u() == 0) return std::nullopt;
    const Multiplicity q = g.degree_u(0);
    for (std::size_t i = 0; i < g.n_u(); ++i)
        if (g.degree_u(i) != q || g.degree_v(i) != q) return std::nullopt;
    if (q <= 0) return std::nullopt;
    return q;
}

bool is_connected(const BipartiteMultigraph& g) {
    const std::size_t total = g.n_u() + g.n_v();
    if (total == 0) return true;
    // vertices 0..n_u-1 are U, n_u.. are V
    std::vector<char> seen(total, 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const std::size_t x = stack.back();
        stack.pop_back();
        auto visit = [&](std::size_t y) {
            if (!seen[y]) {
                seen[y] = 1;
                ++reached;
                stack.push_back(y);
            }
        };
        if (x < g.n_u()) {
            for (std::size_t v = 0; v < g.n_v(); ++v)
                if (g.mult(x, v) > 0) visit(g.n_u() + v);
        } else {
            const std::size_t v = x - g.n_u();
            for (std::size_t u = 0; u < g.n_u(); ++u)
                if (g.mult(u, v) > 0) visit(u);
        }
    }
    return reached == total;
}

namespace {

constexpr std::size_t kMaxCells = std::size_t{1} << 26;

template <typename Int>
Int parse_int(std::string_view tok, std::size_t line, const char* what) {
    Int value{};
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec == std::errc::result_out_of_range) throw ParseError(line, std::string(what) + " overflows");
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(line, std::string("invalid ") + what + " '" + std::string(tok) + "'");
    return value;
}

std::vector<std::string> split(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> toks;
    for (std::string t; ss >> t;) toks.push_back(t);
    return toks;
}

}  // namespace

BipartiteMultigraph parse_bmg(std::istream& in) {
    std::optional<std::pair<std::size_t, std::size_t>> shape;
    std::vector<Multiplicity> cells;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto toks = split(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        if (toks[0] == "bmg") {
            if (shape) throw ParseError(lineno, "duplicate header");
            if (toks.size() != 3) throw ParseError(lineno, "malformed header");
            auto n_u = parse_int<std::int64_t>(toks[1], lineno, "vertex count");
            auto n_v = parse_int<std::int64_t>(toks[2], lineno, "vertex count");
            if (n_u < 0 || n_v < 0) throw ParseError(lineno, "malformed header: negative vertex count");
            if (n_u > 0 && static_cast<std::size_t>(n_v) > kMaxCells / static_cast<std::size_t>(n_u))
                throw ParseError(lineno, "graph too large");
            shape.emplace(static_cast<std::size_t>(n_u), static_cast<std::size_t>(n_v));
            cells.assign(shape->first * shape->second, 0);
            continue;
        }
        if (!shape) throw ParseError(lineno, "malformed header: expected 'bmg <n_u> <n_v>'");
        if (toks[0] != "e") throw ParseError(lineno, "unknown record '" + toks[0] + "'");
        if (toks.size() != 4) throw ParseError(lineno, "edge line needs 'e <u> <v> <mult>'");
        auto u = parse_int<std::int64_t>(toks[1], lineno, "U-index");
        auto v = parse_int<std::int64_t>(toks[2], lineno, "V-index");
        auto m = parse_int<Multiplicity>(toks[3], lineno, "multiplicity");
        if (u < 1 || static_cast<std::size_t>(u) > shape->first) throw ParseError(lineno, "U-index out of range");
        if (v < 1 || static_cast<std::size_t>(v) > shape->second) throw ParseError(lineno, "V-index out of range");
        if (m < 0) throw ParseError(lineno, "negative multiplicity");
        auto& cell = cells[static_cast<std::size_t>(u - 1) * shape->second + static_cast<std::size_t>(v - 1)];
        if (cell > std::numeric_limits<Multiplicity>::max() - m) throw ParseError(lineno, "multiplicity overflows");
        cell += m;
    }
    if (!shape) throw ParseError(lineno, "malformed header: missing 'bmg' line");
    std::vector<std::vector<Multiplicity>> rows(shape->first);
    for (std::size_t u = 0; u < shape->first; ++u)
        rows[u].assign(cells.begin() + static_cast<std::ptrdiff_t>(u * shape->second),
                       cells.begin() + static_cast<std::ptrdiff_t>((u + 1) * shape->second));
    if (shape->first == 0) return BipartiteMultigraph(0, shape->second);
    return BipartiteMultigraph(std::move(rows));
}

BipartiteMultigraph parse_bmg(const std::string& text) {
    std::istringstream in(text);
    return parse_bmg(in);
}

std::string serialize_bmg(const BipartiteMultigraph& g) {
    std::ostringstream out;
    out << "bmg " << g.n_u() << ' ' << g.n_v() << '\n';
    for (std::size_t u = 0; u < g.n_u(); ++u)
        for (std::size_t v = 0; v < g.n_v(); ++v)
            if (g.mult(u, v) != 0) out << "e " << u + 1 << ' ' << v + 1 << ' ' << g.mult(u, v) << '\n';
    return out.str();
}

}  // namespace bmg
