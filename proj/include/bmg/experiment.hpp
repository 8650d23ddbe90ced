#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace bmg {

enum class Model { Multigraph, Simple, Exhaustive };

std::string to_string(Model m);
/// Throws std::invalid_argument for unknown names.
Model parse_model(const std::string& name);

/// Residue histogram of pm(G) mod `modulus` over a family of q-regular graphs.
struct ExperimentReport {
    std::uint32_t q = 0;
    std::size_t n = 0;
    std::uint32_t modulus = 0;
    Model model = Model::Multigraph;
    std::uint64_t samples = 0;
    bool connected_only = false;
    std::optional<std::uint64_t> seed;  // absent for exhaustive runs
    std::vector<std::uint64_t> counts;
    std::vector<double> proportions;
    double min_proportion = 0.0;
    /// Sum over residues of (O - E)^2 / E with E = samples / modulus.
    double chi_square = 0.0;
};

inline constexpr std::uint64_t kSimpleMaxTries = 1'000'000;

/// Sample i draws from SplitMix64(derive_seed(seed, i)), redrawing from the
/// same stream until the graph is accepted, so the report is independent of
/// the thread count. modulus == 0 means modulus = q.
ExperimentReport run_monte_carlo(std::uint32_t q, std::size_t n, std::uint64_t samples, std::uint64_t seed, Model model,
                                 bool connected_only, std::uint32_t modulus = 0, unsigned threads = 1);

/// Exact histogram over every labeled simple q-regular bipartite graph on n+n vertices.
ExperimentReport run_exhaustive(std::uint32_t q, std::size_t n, bool connected_only, std::uint32_t modulus = 0);

nlohmann::ordered_json to_json(const ExperimentReport& r);
/// `residue,count,proportion` with six-decimal proportions.
std::string to_csv(const ExperimentReport& r);

}  // namespace bmg
