#include "bmg/experiment.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "bmg/counting.hpp"
#include "bmg/gen.hpp"
#include "bmg/graph.hpp"

namespace bmg {

std::string to_string(Model m) {
    switch (m) {
        case Model::Multigraph: return "multigraph";
        case Model::Simple: return "simple";
        case Model::Exhaustive: return "exhaustive";
    }
    return "?";
}

Model parse_model(const std::string& name) {
    if (name == "multigraph") return Model::Multigraph;
    if (name == "simple") return Model::Simple;
    if (name == "exhaustive") return Model::Exhaustive;
    throw std::invalid_argument("unknown model '" + name + "'");
}

namespace {

constexpr std::uint64_t kMaxRedraws = 1'000'000;

std::uint32_t resolve_modulus(std::uint32_t q, std::uint32_t modulus) {
    const std::uint32_t m = modulus == 0 ? q : modulus;
    if (m < 2) throw std::invalid_argument("experiment: modulus must be at least 2");
    return m;
}

void finish(ExperimentReport& r) {
    r.proportions.assign(r.counts.size(), 0.0);
    r.chi_square = 0.0;
    if (r.samples == 0) {
        r.min_proportion = 0.0;
        return;
    }
    const double expected = static_cast<double>(r.samples) / r.modulus;
    for (std::size_t i = 0; i < r.counts.size(); ++i) {
        r.proportions[i] = static_cast<double>(r.counts[i]) / static_cast<double>(r.samples);
        const double d = static_cast<double>(r.counts[i]) - expected;
        r.chi_square += d * d / expected;
    }
    r.min_proportion = *std::min_element(r.proportions.begin(), r.proportions.end());
}

BipartiteMultigraph draw(std::size_t n, std::uint32_t q, Model model, bool connected_only, SplitMix64& rng) {
    for (std::uint64_t attempt = 0; attempt < kMaxRedraws; ++attempt) {
        std::optional<BipartiteMultigraph> g;
        if (model == Model::Simple)
            g = gen_random_simple(n, q, rng, kSimpleMaxTries);
        else
            g = gen_random_permutation_model(n, q, rng);
        if (!g) throw std::runtime_error("experiment: simple-graph rejection sampling exhausted its tries");
        if (!connected_only || is_connected(*g)) return *std::move(g);
    }
    throw std::runtime_error("experiment: no connected sample after repeated redraws");
}

}  // namespace

ExperimentReport run_monte_carlo(std::uint32_t q, std::size_t n, std::uint64_t samples, std::uint64_t seed, Model model,
                                 bool connected_only, std::uint32_t modulus, unsigned threads) {
    if (model == Model::Exhaustive) throw std::invalid_argument("run_monte_carlo: exhaustive is not a sampling model");
    if (q < 1 || n < 1) throw std::invalid_argument("run_monte_carlo: q and n must be positive");
    if (n > kModCap) throw LimitExceeded("run_monte_carlo: n above cap " + std::to_string(kModCap));
    if (model == Model::Simple && q > n) throw std::invalid_argument("run_monte_carlo: simple model needs q <= n");
    ExperimentReport r;
    r.q = q;
    r.n = n;
    r.modulus = resolve_modulus(q, modulus);
    r.model = model;
    r.samples = samples;
    r.connected_only = connected_only;
    r.seed = seed;

    const unsigned workers = static_cast<unsigned>(std::clamp<std::uint64_t>(samples, 1, std::max(threads, 1u)));
    std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(r.modulus, 0));
    std::vector<std::exception_ptr> errors(workers);
    auto work = [&](unsigned w) {
        try {
            for (std::uint64_t i = w; i < samples; i += workers) {
                SplitMix64 rng(derive_seed(seed, i));
                const auto g = draw(n, q, model, connected_only, rng);
                ++partial[w][pm_mod(g, r.modulus)];
            }
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    r.counts.assign(r.modulus, 0);
    for (const auto& p : partial)
        for (std::size_t i = 0; i < p.size(); ++i) r.counts[i] += p[i];
    finish(r);
    return r;
}

ExperimentReport run_exhaustive(std::uint32_t q, std::size_t n, bool connected_only, std::uint32_t modulus) {
    ExperimentReport r;
    r.q = q;
    r.n = n;
    r.modulus = resolve_modulus(q, modulus);
    r.model = Model::Exhaustive;
    r.connected_only = connected_only;
    r.counts.assign(r.modulus, 0);
    enumerate_labeled_regular(n, q, [&](const BipartiteMultigraph& g) {
        if (connected_only && !is_connected(g)) return true;
        ++r.counts[pm_mod(g, r.modulus)];
        ++r.samples;
        return true;
    });
    finish(r);
    return r;
}

nlohmann::ordered_json to_json(const ExperimentReport& r) {
    nlohmann::ordered_json j;
    j["q"] = r.q;
    j["n"] = r.n;
    j["modulus"] = r.modulus;
    j["model"] = to_string(r.model);
    j["samples"] = r.samples;
    j["connected_only"] = r.connected_only;
    j["seed"] = r.seed ? nlohmann::ordered_json(*r.seed) : nlohmann::ordered_json(nullptr);
    j["counts"] = r.counts;
    j["proportions"] = r.proportions;
    j["min_proportion"] = r.min_proportion;
    j["chi_square"] = r.chi_square;
    return j;
}

std::string to_csv(const ExperimentReport& r) {
    std::ostringstream out;
    out << "residue,count,proportion\n";
    char buf[32];
    for (std::size_t i = 0; i < r.counts.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.6f", r.proportions[i]);
        out << i << ',' << r.counts[i] << ',' << buf << '\n';
    }
    return out.str();
}

}  // namespace bmg
