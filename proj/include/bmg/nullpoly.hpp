#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "bmg/coloring.hpp"
#include "bmg/gf.hpp"
#include "bmg/graph.hpp"

namespace bmg {

using Exponents = std::vector<std::uint32_t>;
/// One field element per U-vertex.
using ColorAssignment = std::vector<FieldElement>;
/// alpha[v] in [0, q) for every V-vertex.
using AlphaAssignment = std::vector<std::uint32_t>;

inline constexpr std::size_t kPolyMaxVars = 6;
inline constexpr std::uint32_t kPolyMaxOrder = 4;

/// Multivariate polynomial over GF(q) with a fixed number of variables.
/// Terms map a dense exponent vector to a nonzero coefficient; no reduction
/// by x^q - x is ever applied.
class SparsePoly {
public:
    using Terms = std::map<Exponents, FieldElement>;

    SparsePoly(std::shared_ptr<const Field> field, std::size_t arity);

    static SparsePoly constant(std::shared_ptr<const Field> field, std::size_t arity, FieldElement c);
    static SparsePoly variable(std::shared_ptr<const Field> field, std::size_t arity, std::size_t index);

    const Field& field() const noexcept { return *field_; }
    const std::shared_ptr<const Field>& field_ptr() const noexcept { return field_; }
    std::size_t arity() const noexcept { return arity_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    /// -1 for the zero polynomial.
    long total_degree() const;
    FieldElement coefficient(const Exponents& e) const;

    SparsePoly operator+(const SparsePoly& o) const;
    SparsePoly operator-(const SparsePoly& o) const;
    SparsePoly operator-() const;
    SparsePoly operator*(const SparsePoly& o) const;
    SparsePoly scale(FieldElement c) const;
    SparsePoly pow(std::uint32_t e) const;

    FieldElement eval(const ColorAssignment& point) const;

    friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
        return *a.field_ == *b.field_ && a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }

private:
    std::shared_ptr<const Field> field_;
    std::size_t arity_;
    Terms terms_;

    void add_term(const Exponents& e, FieldElement c);
    void require_compatible(const SparsePoly& o) const;
};

/// 1 - (x_var - i)^{q-1}.
SparsePoly indicator_poly(std::shared_ptr<const Field> field, std::size_t arity, std::size_t var, FieldElement i);

/// prod_v [ sum over edge copies uv of g_{c(uv)}(x_u) - alpha(v) ], expanded.
/// alpha(v) enters through Z -> GF(q). Requires a proper coloring with
/// field.order() colors, n_u <= kPolyMaxVars and q <= kPolyMaxOrder.
SparsePoly build_f(const BipartiteMultigraph& g, const EdgeColoring& coloring, const AlphaAssignment& alpha,
                   std::shared_ptr<const Field> field);

/// Coefficient of prod_u x_u^{q-1}.
FieldElement top_coefficient(const SparsePoly& f);

/// First point of GF(q)^n, in lexicographic order with x_0 most significant,
/// where f does not vanish. Exhaustive; arity <= kPolyMaxVars.
std::optional<ColorAssignment> nonvanishing_witness(const SparsePoly& f);

}  // namespace bmg
