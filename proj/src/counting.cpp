#include "bmg/counting.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace bmg {

namespace {

using Subset = std::uint64_t;

void require_square(const BipartiteMultigraph& g, std::size_t cap, const char* what) {
    if (!g.is_square()) throw std::invalid_argument(std::string(what) + ": graph is not square");
    if (g.n_u() > cap)
        throw LimitExceeded(std::string(what) + ": n=" + std::to_string(g.n_u()) + " exceeds cap " +
                            std::to_string(cap));
}

Subset gray(Subset k) { return k ^ (k >> 1); }

// Splits [1, 2^n) into contiguous chunks and sums `run(lo, hi)` over them.
template <typename Acc, typename Run>
std::vector<Acc> run_chunks(std::size_t n, unsigned threads, Run run) {
    const Subset end = Subset{1} << n;
    const Subset span = end - 1;
    const unsigned workers = static_cast<unsigned>(std::max<Subset>(1, std::min<Subset>(std::max(threads, 1u), span / 4096 + 1)));
    std::vector<Acc> partial(workers);
    auto bounds = [&](unsigned w) { return 1 + span * w / workers; };
    if (workers == 1) {
        partial[0] = run(Subset{1}, end);
        return partial;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&, w] { partial[w] = run(bounds(w), bounds(w + 1)); });
    pool.clear();  // joins
    return partial;
}

// Ryser over gray(lo) .. gray(hi-1) with a generic arithmetic policy.
template <typename Arith>
typename Arith::Sum ryser_chunk(const BipartiteMultigraph& g, const Arith& ar, Subset lo, Subset hi) {
    const std::size_t n = g.n_u();
    std::vector<typename Arith::Value> row(n, ar.zero());
    const Subset start = gray(lo);
    for (std::size_t j = 0; j < n; ++j)
        if (start >> j & 1)
            for (std::size_t i = 0; i < n; ++i) row[i] = ar.add(row[i], ar.entry(i, j));
    typename Arith::Sum sum = ar.sum_zero();
    for (Subset k = lo;;) {
        const Subset s = gray(k);
        ar.accumulate(sum, row, std::popcount(s) & 1);
        if (++k >= hi) break;
        const std::size_t j = static_cast<std::size_t>(std::countr_zero(k));
        if (gray(k) >> j & 1)
            for (std::size_t i = 0; i < n; ++i) row[i] = ar.add(row[i], ar.entry(i, j));
        else
            for (std::size_t i = 0; i < n; ++i) row[i] = ar.sub(row[i], ar.entry(i, j));
    }
    return sum;
}

struct Int128Arith {
    using Value = std::int64_t;
    using Sum = __int128;
    const BipartiteMultigraph& g;
    Value zero() const { return 0; }
    Sum sum_zero() const { return 0; }
    Value entry(std::size_t i, std::size_t j) const { return g.mult(i, j); }
    Value add(Value a, Value b) const { return a + b; }
    Value sub(Value a, Value b) const { return a - b; }
    void accumulate(Sum& sum, const std::vector<Value>& row, bool odd) const {
        Sum prod = 1;
        for (Value r : row) {
            if (r == 0) return;
            prod *= r;
        }
        sum += odd ? -prod : prod;
    }
};

struct BigArith {
    using Value = BigInt;
    using Sum = BigInt;
    const BipartiteMultigraph& g;
    Value zero() const { return 0; }
    Sum sum_zero() const { return 0; }
    Value entry(std::size_t i, std::size_t j) const { return g.mult(i, j); }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value sub(const Value& a, const Value& b) const { return a - b; }
    void accumulate(Sum& sum, const std::vector<Value>& row, bool odd) const {
        BigInt prod = 1;
        for (const auto& r : row) {
            if (r == 0) return;
            prod *= r;
        }
        if (odd)
            sum -= prod;
        else
            sum += prod;
    }
};

struct ModArith {
    using Value = std::uint64_t;
    using Sum = std::uint64_t;
    std::vector<std::uint64_t> reduced;  // row-major entries mod m
    std::size_t n;
    std::uint64_t m;
    Value zero() const { return 0; }
    Sum sum_zero() const { return 0; }
    Value entry(std::size_t i, std::size_t j) const { return reduced[i * n + j]; }
    Value add(Value a, Value b) const { return (a + b) % m; }
    Value sub(Value a, Value b) const { return (a + m - b) % m; }
    void accumulate(Sum& sum, const std::vector<Value>& row, bool odd) const {
        std::uint64_t prod = 1 % m;
        for (Value r : row) {
            if (r == 0) return;
            prod = prod * r % m;
        }
        sum = odd ? (sum + m - prod) % m : (sum + prod) % m;
    }
};

bool fits_int128(const BipartiteMultigraph& g) {
    // every |row sum| <= row total and every term <= prod of totals; the
    // accumulator sees at most 2^n terms
    BigInt bound = BigInt(1) << g.n_u();
    for (std::size_t i = 0; i < g.n_u(); ++i) {
        BigInt total = 0;
        for (std::size_t j = 0; j < g.n_v(); ++j) total += g.mult(i, j);
        if (total >= (BigInt(1) << 62)) return false;
        bound *= total;
    }
    return bound < (BigInt(1) << 125);
}

BigInt to_big(__int128 x) {
    const bool neg = x < 0;
    unsigned __int128 mag = neg ? static_cast<unsigned __int128>(-(x + 1)) + 1 : static_cast<unsigned __int128>(x);
    BigInt r = static_cast<std::uint64_t>(mag >> 64);
    r <<= 64;
    r += static_cast<std::uint64_t>(mag);
    return neg ? BigInt(-r) : r;
}

}  // namespace

BigInt pm_exact(const BipartiteMultigraph& g, unsigned threads, std::size_t cap) {
    require_square(g, std::min(cap, std::size_t{62}), "pm_exact");
    const std::size_t n = g.n_u();
    if (n == 0) return 1;
    BigInt total = 0;
    if (fits_int128(g)) {
        const Int128Arith ar{g};
        for (__int128 part : run_chunks<__int128>(n, threads, [&](Subset lo, Subset hi) { return ryser_chunk(g, ar, lo, hi); }))
            total += to_big(part);
    } else {
        const BigArith ar{g};
        for (const BigInt& part : run_chunks<BigInt>(n, threads, [&](Subset lo, Subset hi) { return ryser_chunk(g, ar, lo, hi); }))
            total += part;
    }
    return (n & 1) ? BigInt(-total) : total;
}

std::uint64_t pm_mod(const BipartiteMultigraph& g, std::uint64_t m, unsigned threads) {
    if (m < 2) throw std::invalid_argument("pm_mod: modulus must be at least 2");
    if (m > kMaxModulus) throw LimitExceeded("pm_mod: modulus must be below 2^31");
    require_square(g, kModCap, "pm_mod");
    const std::size_t n = g.n_u();
    if (n == 0) return 1 % m;
    ModArith ar{std::vector<std::uint64_t>(n * n), n, m};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) ar.reduced[i * n + j] = static_cast<std::uint64_t>(g.mult(i, j)) % m;
    std::uint64_t total = 0;
    for (std::uint64_t part : run_chunks<std::uint64_t>(n, threads, [&](Subset lo, Subset hi) { return ryser_chunk(g, ar, lo, hi); }))
        total = (total + part) % m;
    return (n & 1) ? (m - total) % m : total;
}

BigInt pm_bruteforce(const BipartiteMultigraph& g) {
    require_square(g, kBruteForceCap, "pm_bruteforce");
    const std::size_t n = g.n_u();
    std::vector<std::size_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    BigInt total = 0;
    do {
        BigInt prod = 1;
        for (std::size_t i = 0; i < n && prod != 0; ++i) prod *= g.mult(i, sigma[i]);
        total += prod;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return total;
}

}  // namespace bmg
