#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bmg {

/// Raised for malformed BMG input. `line()` is 1-based; 0 when not tied to a line.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// An operation's size cap (vertex count, field order, modulus) was exceeded.
class LimitExceeded : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

using Multiplicity = std::int64_t;

/// Dense multiplicity matrix of a bipartite multigraph with parts U (rows)
/// and V (columns). Immutable after construction.
class BipartiteMultigraph {
public:
    BipartiteMultigraph() = default;
    /// Throws std::invalid_argument on ragged rows or negative entries.
    explicit BipartiteMultigraph(std::vector<std::vector<Multiplicity>> rows);
    BipartiteMultigraph(std::initializer_list<std::initializer_list<Multiplicity>> rows)
        : BipartiteMultigraph(std::vector<std::vector<Multiplicity>>(rows.begin(), rows.end())) {}
    BipartiteMultigraph(std::size_t n_u, std::size_t n_v);

    std::size_t n_u() const noexcept { return n_u_; }
    std::size_t n_v() const noexcept { return n_v_; }
    bool is_square() const noexcept { return n_u_ == n_v_; }

    Multiplicity mult(std::size_t u, std::size_t v) const { return mult_[u * n_v_ + v]; }
    Multiplicity at(std::size_t u, std::size_t v) const;

    Multiplicity degree_u(std::size_t u) const;
    Multiplicity degree_v(std::size_t v) const;
    Multiplicity total() const;
    Multiplicity max_mult() const;
    bool is_simple() const { return max_mult() <= 1; }

    std::vector<std::vector<Multiplicity>> rows() const;

    friend bool operator==(const BipartiteMultigraph&, const BipartiteMultigraph&) = default;

private:
    std::size_t n_u_ = 0;
    std::size_t n_v_ = 0;
    std::vector<Multiplicity> mult_;
};

/// One parallel copy of the edge u–v.
struct EdgeInstance {
    std::size_t u;
    std::size_t v;
    std::size_t copy;
    friend bool operator==(const EdgeInstance&, const EdgeInstance&) = default;
};

/// The common degree q if every row and column sums to q.
/// The 0×0 graph has no degree and yields nullopt.
std::optional<Multiplicity> regularity(const BipartiteMultigraph& g);

/// Connectivity of the support on U ∪ V. The empty graph counts as connected.
bool is_connected(const BipartiteMultigraph& g);

BipartiteMultigraph parse_bmg(std::istream& in);
BipartiteMultigraph parse_bmg(const std::string& text);
std::string serialize_bmg(const BipartiteMultigraph& g);

}  // namespace bmg
