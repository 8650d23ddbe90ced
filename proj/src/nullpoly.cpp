#include "bmg/nullpoly.hpp"

#include <stdexcept>
#include <string>

namespace bmg {

SparsePoly::SparsePoly(std::shared_ptr<const Field> field, std::size_t arity)
    : field_(std::move(field)), arity_(arity) {
    if (!field_) throw std::invalid_argument("SparsePoly: null field");
}

SparsePoly SparsePoly::constant(std::shared_ptr<const Field> field, std::size_t arity, FieldElement c) {
    SparsePoly p(std::move(field), arity);
    p.add_term(Exponents(arity, 0), c);
    return p;
}

SparsePoly SparsePoly::variable(std::shared_ptr<const Field> field, std::size_t arity, std::size_t index) {
    if (index >= arity) throw std::invalid_argument("SparsePoly::variable: index out of range");
    SparsePoly p(std::move(field), arity);
    Exponents e(arity, 0);
    e[index] = 1;
    p.add_term(e, p.field().one());
    return p;
}

void SparsePoly::add_term(const Exponents& e, FieldElement c) {
    if (c == field_->zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (inserted) return;
    it->second = field_->add(it->second, c);
    if (it->second == field_->zero()) terms_.erase(it);
}

void SparsePoly::require_compatible(const SparsePoly& o) const {
    if (arity_ != o.arity_)
        throw std::invalid_argument("SparsePoly: arity mismatch (" + std::to_string(arity_) + " vs " +
                                    std::to_string(o.arity_) + ")");
    if (!(*field_ == *o.field_)) throw std::invalid_argument("SparsePoly: field mismatch");
}

long SparsePoly::total_degree() const {
    long best = -1;
    for (const auto& [e, c] : terms_) {
        long d = 0;
        for (auto x : e) d += x;
        best = std::max(best, d);
    }
    return best;
}

FieldElement SparsePoly::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? field_->zero() : it->second;
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
    require_compatible(o);
    SparsePoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

SparsePoly SparsePoly::operator-() const {
    SparsePoly r(field_, arity_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, field_->neg(c));
    return r;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const { return *this + (-o); }

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
    require_compatible(o);
    SparsePoly r(field_, arity_);
    Exponents e(arity_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            for (std::size_t i = 0; i < arity_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, field_->mul(ca, cb));
        }
    return r;
}

SparsePoly SparsePoly::scale(FieldElement c) const {
    SparsePoly r(field_, arity_);
    if (c == field_->zero()) return r;
    for (const auto& [e, x] : terms_) r.terms_.emplace(e, field_->mul(x, c));
    return r;
}

SparsePoly SparsePoly::pow(std::uint32_t e) const {
    SparsePoly r = constant(field_, arity_, field_->one());
    SparsePoly b = *this;
    for (; e; e >>= 1) {
        if (e & 1) r = r * b;
        if (e > 1) b = b * b;
    }
    return r;
}

FieldElement SparsePoly::eval(const ColorAssignment& point) const {
    if (point.size() != arity_)
        throw std::invalid_argument("SparsePoly::eval: expected " + std::to_string(arity_) + " values, got " +
                                    std::to_string(point.size()));
    FieldElement sum = field_->zero();
    for (const auto& [e, c] : terms_) {
        FieldElement t = c;
        for (std::size_t i = 0; i < arity_; ++i)
            if (e[i]) t = field_->mul(t, field_->pow(point[i], e[i]));
        sum = field_->add(sum, t);
    }
    return sum;
}

SparsePoly indicator_poly(std::shared_ptr<const Field> field, std::size_t arity, std::size_t var, FieldElement i) {
    const Field& f = *field;
    const auto shifted = SparsePoly::variable(field, arity, var) - SparsePoly::constant(field, arity, i);
    return SparsePoly::constant(field, arity, f.one()) - shifted.pow(f.order() - 1);
}

SparsePoly build_f(const BipartiteMultigraph& g, const EdgeColoring& coloring, const AlphaAssignment& alpha,
                   std::shared_ptr<const Field> field) {
    const Field& fd = *field;
    const std::size_t n_u = g.n_u();
    if (n_u > kPolyMaxVars || fd.order() > kPolyMaxOrder)
        throw LimitExceeded("build_f: requires n_u <= " + std::to_string(kPolyMaxVars) + " and q <= " +
                            std::to_string(kPolyMaxOrder));
    if (alpha.size() != g.n_v()) throw std::invalid_argument("build_f: alpha has wrong length");
    for (auto a : alpha)
        if (a >= fd.order()) throw std::invalid_argument("build_f: alpha value out of range");
    if (!is_proper_coloring(g, coloring, fd.order())) throw std::invalid_argument("build_f: coloring is not proper");

    // g_c(x_u), cached per (u, color)
    std::vector<std::optional<SparsePoly>> cache(n_u * fd.order());
    auto indicator = [&](std::size_t u, std::uint32_t c) -> const SparsePoly& {
        auto& slot = cache[u * fd.order() + c];
        if (!slot) slot = indicator_poly(field, n_u, u, fd.element(c));
        return *slot;
    };

    SparsePoly f = SparsePoly::constant(field, n_u, fd.one());
    for (std::size_t v = 0; v < g.n_v(); ++v) {
        SparsePoly factor = SparsePoly::constant(field, n_u, fd.neg(fd.from_int(alpha[v])));
        for (std::size_t u = 0; u < n_u; ++u)
            for (std::uint32_t c : coloring.colors(u, v)) factor = factor + indicator(u, c);
        f = f * factor;
    }
    return f;
}

FieldElement top_coefficient(const SparsePoly& f) {
    return f.coefficient(Exponents(f.arity(), f.field().order() - 1));
}

std::optional<ColorAssignment> nonvanishing_witness(const SparsePoly& f) {
    const std::size_t n = f.arity();
    if (n > kPolyMaxVars) throw LimitExceeded("nonvanishing_witness: more than " + std::to_string(kPolyMaxVars) + " variables");
    if (f.is_zero()) return std::nullopt;
    const Field& fd = f.field();
    ColorAssignment point(n, fd.zero());
    while (true) {
        if (f.eval(point) != fd.zero()) return point;
        std::size_t i = n;
        while (i > 0 && point[i - 1].value + 1 == fd.order()) point[--i] = fd.zero();
        if (i == 0) return std::nullopt;
        point[i - 1] = fd.element(point[i - 1].value + 1);
    }
}

}  // namespace bmg
