#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace bmg {

class NotPrimePower : public std::invalid_argument {
public:
    explicit NotPrimePower(std::uint64_t q);
};

/// Element of GF(q), encoded as the base-p digit string of its residue
/// polynomial (digit i is the coefficient of x^i). Only meaningful together
/// with the Field that produced it.
struct FieldElement {
    std::uint32_t value = 0;
    friend bool operator==(FieldElement, FieldElement) = default;
    friend auto operator<=>(FieldElement, FieldElement) = default;
};

/// p^k if q is a prime power.
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q);

/// GF(q) built on the lexicographically smallest monic irreducible polynomial
/// of degree k over GF(p). Polynomials are compared from the x^{k-1}
/// coefficient downwards, i.e. by the integer value of their encoding.
class Field {
public:
    static constexpr std::uint64_t kMaxOrder = (std::uint64_t{1} << 31) - 1;
    static constexpr std::uint64_t kTableOrder = std::uint64_t{1} << 16;

    /// Throws NotPrimePower, or std::invalid_argument when q exceeds kMaxOrder.
    explicit Field(std::uint64_t q);

    std::uint32_t order() const noexcept { return q_; }
    std::uint32_t characteristic() const noexcept { return p_; }
    std::uint32_t degree() const noexcept { return k_; }
    /// Coefficients c_0..c_k of the reduction polynomial (c_k == 1).
    const std::vector<std::uint32_t>& reduction() const noexcept { return reduction_; }
    bool has_tables() const noexcept { return !exp_.empty(); }

    FieldElement zero() const noexcept { return {0}; }
    FieldElement one() const noexcept { return {1}; }
    /// Element with integer encoding `i`; i-th element in canonical order.
    FieldElement element(std::uint64_t i) const;
    /// Image of an integer under Z -> GF(q).
    FieldElement from_int(std::int64_t n) const;

    FieldElement add(FieldElement a, FieldElement b) const;
    FieldElement sub(FieldElement a, FieldElement b) const;
    FieldElement neg(FieldElement a) const;
    FieldElement mul(FieldElement a, FieldElement b) const;
    /// Throws std::domain_error for a == 0.
    FieldElement inv(FieldElement a) const;
    FieldElement pow(FieldElement a, std::uint64_t e) const;

    /// 1 - (x - i)^{q-1}: the indicator of x == i.
    FieldElement g_eval(FieldElement i, FieldElement x) const;

    /// Multiplication by polynomial reduction; never uses the tables.
    FieldElement mul_reduce(FieldElement a, FieldElement b) const;

    friend bool operator==(const Field& a, const Field& b) {
        return a.q_ == b.q_ && a.reduction_ == b.reduction_;
    }

private:
    std::uint32_t p_ = 0;
    std::uint32_t k_ = 0;
    std::uint32_t q_ = 0;
    std::vector<std::uint32_t> reduction_;
    std::vector<std::uint32_t> exp_;  // exp_[i] = gen^i, length 2(q-1)
    std::vector<std::uint32_t> log_;  // log_[a] for a != 0

    std::vector<std::uint32_t> digits(std::uint32_t a) const;
    std::uint32_t compose(const std::vector<std::uint32_t>& d) const;
    void build_tables();
};

/// Monic irreducibility over GF(p) by trial division; coefficients low to high.
bool is_irreducible_mod_p(const std::vector<std::uint32_t>& poly, std::uint32_t p);

}  // namespace bmg
