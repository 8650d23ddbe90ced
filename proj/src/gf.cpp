#include "bmg/gf.hpp"

#include <string>

namespace bmg {

NotPrimePower::NotPrimePower(std::uint64_t q)
    : std::invalid_argument(std::to_string(q) + " is not a prime power") {}

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) {
    if (q < 2) return std::nullopt;
    std::uint64_t p = q;
    for (std::uint64_t d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    std::uint32_t k = 0;
    while (q % p == 0) {
        q /= p;
        ++k;
    }
    if (q != 1) return std::nullopt;
    return std::pair{static_cast<std::uint32_t>(p), k};
}

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    std::uint64_t r = 1, b = a % p;
    for (std::uint64_t e = p - 2; e; e >>= 1, b = b * b % p)
        if (e & 1) r = r * b % p;
    return static_cast<std::uint32_t>(r);
}

// Remainder of a modulo a nonzero polynomial b over GF(p).
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    const std::uint64_t lead_inv = inv_mod(b.back(), p);
    while (a.size() > db) {
        const std::size_t shift = a.size() - 1 - db;
        const std::uint64_t c = a.back() * lead_inv % p;
        for (std::size_t i = 0; i <= db; ++i) {
            const std::uint64_t sub = c * b[i] % p;
            a[i + shift] = static_cast<std::uint32_t>((a[i + shift] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

}  // namespace

bool is_irreducible_mod_p(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
    Poly f = poly;
    trim(f);
    if (f.size() < 2) return false;
    const std::size_t k = f.size() - 1;
    if (k == 1) return true;
    // every monic divisor of degree d in 1..k/2
    for (std::size_t d = 1; d <= k / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        Poly divisor(d + 1, 0);
        divisor[d] = 1;
        for (std::uint64_t t = 0; t < count; ++t) {
            std::uint64_t x = t;
            for (std::size_t i = 0; i < d; ++i, x /= p) divisor[i] = static_cast<std::uint32_t>(x % p);
            if (poly_mod(f, divisor, p).empty()) return false;
        }
    }
    return true;
}

Field::Field(std::uint64_t q) {
    if (q > kMaxOrder) throw std::invalid_argument("field order " + std::to_string(q) + " too large");
    const auto pk = prime_power(q);
    if (!pk) throw NotPrimePower(q);
    p_ = pk->first;
    k_ = pk->second;
    q_ = static_cast<std::uint32_t>(q);
    reduction_.assign(k_ + 1, 0);
    reduction_[k_] = 1;
    if (k_ > 1) {
        bool found = false;
        for (std::uint32_t t = 0; t < q_ && !found; ++t) {
            std::uint32_t x = t;
            for (std::uint32_t i = 0; i < k_; ++i, x /= p_) reduction_[i] = x % p_;
            found = is_irreducible_mod_p(reduction_, p_);
        }
        if (!found) throw std::logic_error("no irreducible polynomial found");
    }
    if (q_ <= kTableOrder && q_ > 2) build_tables();
}

std::vector<std::uint32_t> Field::digits(std::uint32_t a) const {
    std::vector<std::uint32_t> d(k_);
    for (std::uint32_t i = 0; i < k_; ++i, a /= p_) d[i] = a % p_;
    return d;
}

std::uint32_t Field::compose(const std::vector<std::uint32_t>& d) const {
    std::uint64_t v = 0;
    for (std::size_t i = d.size(); i-- > 0;) v = v * p_ + d[i];
    return static_cast<std::uint32_t>(v);
}

FieldElement Field::element(std::uint64_t i) const {
    if (i >= q_) throw std::out_of_range("field element " + std::to_string(i) + " out of range");
    return {static_cast<std::uint32_t>(i)};
}

FieldElement Field::from_int(std::int64_t n) const {
    std::int64_t r = n % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return {static_cast<std::uint32_t>(r)};
}

FieldElement Field::add(FieldElement a, FieldElement b) const {
    if (k_ == 1) return {static_cast<std::uint32_t>((std::uint64_t{a.value} + b.value) % p_)};
    if (p_ == 2) return {a.value ^ b.value};
    std::uint64_t out = 0, place = 1;
    for (std::uint32_t i = 0; i < k_; ++i, place *= p_) {
        out += ((a.value % p_ + b.value % p_) % p_) * place;
        a.value /= p_;
        b.value /= p_;
    }
    return {static_cast<std::uint32_t>(out)};
}

FieldElement Field::neg(FieldElement a) const {
    if (p_ == 2) return a;
    if (k_ == 1) return {a.value == 0 ? 0 : p_ - a.value};
    std::uint64_t out = 0, place = 1;
    for (std::uint32_t i = 0; i < k_; ++i, place *= p_) {
        out += ((p_ - a.value % p_) % p_) * place;
        a.value /= p_;
    }
    return {static_cast<std::uint32_t>(out)};
}

FieldElement Field::sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

FieldElement Field::mul_reduce(FieldElement a, FieldElement b) const {
    if (k_ == 1) return {static_cast<std::uint32_t>(std::uint64_t{a.value} * b.value % p_)};
    const auto da = digits(a.value), db = digits(b.value);
    Poly prod(2 * k_ - 1, 0);
    for (std::uint32_t i = 0; i < k_; ++i)
        for (std::uint32_t j = 0; j < k_; ++j)
            prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{da[i]} * db[j]) % p_);
    Poly r = poly_mod(std::move(prod), reduction_, p_);
    r.resize(k_, 0);
    return {compose(r)};
}

FieldElement Field::mul(FieldElement a, FieldElement b) const {
    if (a.value == 0 || b.value == 0) return zero();
    if (!has_tables()) return mul_reduce(a, b);
    return {exp_[log_[a.value] + log_[b.value]]};
}

FieldElement Field::pow(FieldElement a, std::uint64_t e) const {
    FieldElement r = one();
    for (; e; e >>= 1, a = mul(a, a))
        if (e & 1) r = mul(r, a);
    return r;
}

FieldElement Field::inv(FieldElement a) const {
    if (a.value == 0) throw std::domain_error("inverse of zero");
    return pow(a, q_ - 2);
}

FieldElement Field::g_eval(FieldElement i, FieldElement x) const {
    return sub(one(), pow(sub(x, i), q_ - 1));
}

void Field::build_tables() {
    const std::uint32_t n = q_ - 1;
    std::vector<std::uint32_t> exp(2 * std::size_t{n});
    for (std::uint32_t g = 2; g < q_; ++g) {
        FieldElement x = one();
        std::uint32_t order = 0;
        do {
            exp[order++] = x.value;
            x = mul_reduce(x, {g});
        } while (x.value != 1 && order < n);
        if (x.value == 1 && order == n) {
            for (std::uint32_t i = 0; i < n; ++i) exp[n + i] = exp[i];
            log_.assign(q_, 0);
            for (std::uint32_t i = 0; i < n; ++i) log_[exp[i]] = i;
            exp_ = std::move(exp);
            return;
        }
    }
    throw std::logic_error("no primitive element found");
}

}  // namespace bmg
