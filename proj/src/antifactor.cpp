#include "bmg/antifactor.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

#include "bmg/coloring.hpp"

namespace bmg {

std::vector<std::size_t> choice_degrees(const BipartiteMultigraph& g, const OneFactorChoice& h) {
    if (h.size() != g.n_u()) throw std::invalid_argument("choice has wrong length");
    std::vector<std::size_t> deg(g.n_v(), 0);
    for (std::size_t u = 0; u < h.size(); ++u) {
        if (h[u] >= g.n_v() || g.mult(u, h[u]) == 0)
            throw std::invalid_argument("invalid choice: no edge between u" + std::to_string(u + 1) + " and v" +
                                        std::to_string(h[u] + 1));
        ++deg[h[u]];
    }
    return deg;
}

bool verify(const BipartiteMultigraph& g, const AlphaAssignment& alpha, const OneFactorChoice& h, std::uint32_t q) {
    if (q == 0) throw std::invalid_argument("verify: q must be positive");
    if (alpha.size() != g.n_v()) throw std::invalid_argument("verify: alpha has wrong length");
    const auto deg = choice_degrees(g, h);
    for (std::size_t v = 0; v < g.n_v(); ++v)
        if (deg[v] % q == alpha[v] % q) return false;
    return true;
}

AlphaAssignment alpha_const(std::size_t n_v, std::uint32_t value, std::uint32_t q) {
    if (value >= q) throw std::invalid_argument("alpha value " + std::to_string(value) + " not below q=" + std::to_string(q));
    return AlphaAssignment(n_v, value);
}

namespace {

class Search {
public:
    Search(const BipartiteMultigraph& g, const AlphaAssignment& alpha, std::uint32_t q) : alpha_(alpha), q_(q) {
        const std::size_t n_u = g.n_u();
        neighbors_.resize(n_u);
        for (std::size_t u = 0; u < n_u; ++u)
            for (std::size_t v = 0; v < g.n_v(); ++v)
                if (g.mult(u, v) > 0) neighbors_[u].push_back(v);
        order_.resize(n_u);
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](std::size_t a, std::size_t b) { return neighbors_[a].size() > neighbors_[b].size(); });
        deg_.assign(g.n_v(), 0);
        undecided_.assign(g.n_v(), 0);
        for (const auto& nb : neighbors_)
            for (std::size_t v : nb) ++undecided_[v];
        choice_.assign(n_u, 0);
    }

    bool feasible_start() const {
        for (std::size_t v = 0; v < deg_.size(); ++v)
            if (undecided_[v] == 0 && violated(v)) return false;
        return true;
    }

    std::size_t top_branches() const { return order_.empty() ? 0 : neighbors_[order_[0]].size(); }

    /// Explores the subtree under the given top-level branch (or everything
    /// when branch is nullopt). `stop` is polled to abandon the search.
    bool solve(std::optional<std::size_t> branch, const std::function<bool()>& stop) {
        stop_ = &stop;
        if (order_.empty()) return true;
        if (!branch) return descend(0);
        const std::size_t u = order_[0];
        return try_choice(0, u, neighbors_[u][*branch]);
    }

    const OneFactorChoice& choice() const { return choice_; }

private:
    const AlphaAssignment& alpha_;
    std::uint32_t q_;
    std::vector<std::vector<std::size_t>> neighbors_;
    std::vector<std::size_t> order_;
    std::vector<std::size_t> deg_;
    std::vector<std::size_t> undecided_;
    OneFactorChoice choice_;
    const std::function<bool()>* stop_ = nullptr;

    bool violated(std::size_t v) const { return deg_[v] % q_ == alpha_[v] % q_; }

    bool descend(std::size_t pos) {
        if (pos == order_.size()) return true;
        if ((*stop_)()) return false;
        const std::size_t u = order_[pos];
        for (std::size_t v : neighbors_[u])
            if (try_choice(pos, u, v)) return true;
        return false;
    }

    bool try_choice(std::size_t pos, std::size_t u, std::size_t v) {
        choice_[u] = v;
        ++deg_[v];
        for (std::size_t w : neighbors_[u]) --undecided_[w];
        bool ok = true;
        // only neighbours of u can have just become fully decided
        for (std::size_t w : neighbors_[u])
            if (undecided_[w] == 0 && violated(w)) {
                ok = false;
                break;
            }
        const bool found = ok && descend(pos + 1);
        if (!found) {
            for (std::size_t w : neighbors_[u]) ++undecided_[w];
            --deg_[v];
        }
        return found;
    }
};

}  // namespace

std::optional<OneFactorChoice> find_antifactor(const BipartiteMultigraph& g, const AlphaAssignment& alpha,
                                               std::uint32_t q, unsigned threads) {
    if (q == 0) throw std::invalid_argument("find_antifactor: q must be positive");
    if (alpha.size() != g.n_v()) throw std::invalid_argument("find_antifactor: alpha has wrong length");
    for (auto a : alpha)
        if (a >= q) throw std::invalid_argument("find_antifactor: alpha value out of range");

    Search root(g, alpha, q);
    if (!root.feasible_start()) return std::nullopt;
    const std::size_t branches = root.top_branches();
    if (threads <= 1 || branches <= 1) {
        const std::function<bool()> never = [] { return false; };
        if (root.solve(std::nullopt, never)) return root.choice();
        return std::nullopt;
    }

    std::atomic<std::size_t> best{branches};  // lowest successful branch so far
    std::atomic<std::size_t> next{0};
    std::vector<std::optional<OneFactorChoice>> results(branches);
    auto worker = [&] {
        for (std::size_t b; (b = next.fetch_add(1)) < branches;) {
            if (b > best.load()) break;
            Search s(g, alpha, q);
            const std::function<bool()> stop = [&] { return best.load(std::memory_order_relaxed) < b; };
            if (s.solve(b, stop)) {
                results[b] = s.choice();
                std::size_t cur = best.load();
                while (b < cur && !best.compare_exchange_weak(cur, b)) {
                }
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < std::min<std::size_t>(threads, branches); ++t) pool.emplace_back(worker);
    }
    const std::size_t b = best.load();
    if (b == branches) return std::nullopt;
    return results[b];
}

std::optional<OneFactorChoice> find_via_polynomial(const BipartiteMultigraph& g, const AlphaAssignment& alpha,
                                                   std::shared_ptr<const Field> field) {
    const auto coloring = edge_color(g, *field);
    const auto f = build_f(g, coloring, alpha, field);
    const auto witness = nonvanishing_witness(f);
    if (!witness) return std::nullopt;
    OneFactorChoice h(g.n_u());
    for (std::size_t u = 0; u < g.n_u(); ++u) {
        const auto v = coloring.neighbor_with_color(u, (*witness)[u].value);
        if (!v) throw std::logic_error("find_via_polynomial: coloring is not complete");
        h[u] = *v;
    }
    return h;
}

}  // namespace bmg
