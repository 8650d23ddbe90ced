#include "corpus.hpp"

#include <algorithm>
#include <fstream>
#include <functional>

#include "bmg/gen.hpp"

namespace bmg::testing {

std::filesystem::path data_dir() { return BMG_DATA_DIR; }

std::vector<NamedGraph> file_corpus() {
    std::vector<std::filesystem::path> paths;
    for (const auto& entry : std::filesystem::directory_iterator(data_dir()))
        if (entry.path().extension() == ".bmg") paths.push_back(entry.path());
    std::sort(paths.begin(), paths.end());
    std::vector<NamedGraph> out;
    for (const auto& p : paths) {
        std::ifstream in(p);
        out.push_back({p.filename().string(), parse_bmg(in)});
    }
    return out;
}

std::vector<BipartiteMultigraph> all_regular_multigraphs(std::size_t n, Multiplicity q) {
    std::vector<BipartiteMultigraph> out;
    std::vector<std::vector<Multiplicity>> m(n, std::vector<Multiplicity>(n, 0));
    std::vector<Multiplicity> col(n, 0);
    std::function<void(std::size_t, std::size_t, Multiplicity)> fill = [&](std::size_t i, std::size_t j, Multiplicity row) {
        if (j == n) {
            if (row != q) return;
            if (i + 1 == n) {
                if (std::all_of(col.begin(), col.end(), [&](Multiplicity c) { return c == q; }))
                    out.emplace_back(m);
                return;
            }
            fill(i + 1, 0, 0);
            return;
        }
        for (Multiplicity x = 0; x <= q - row && x <= q - col[j]; ++x) {
            m[i][j] = x;
            col[j] += x;
            fill(i, j + 1, row + x);
            col[j] -= x;
        }
        m[i][j] = 0;
    };
    if (n > 0) fill(0, 0, 0);
    return out;
}

std::vector<NamedGraph> regular_corpus(std::size_t max_n) {
    std::vector<NamedGraph> out;
    for (auto& g : file_corpus())
        if (regularity(g.graph) && g.graph.n_u() <= max_n) out.push_back(std::move(g));
    for (Multiplicity q : {2, 3}) {
        const std::string tag = "q" + std::to_string(q);
        for (std::size_t n = 1; n <= std::min<std::size_t>(3, max_n); ++n) {
            std::size_t k = 0;
            for (auto& g : all_regular_multigraphs(n, q))
                out.push_back({"all-" + tag + "-n" + std::to_string(n) + "-" + std::to_string(k++), std::move(g)});
        }
        if (max_n >= 4) {
            std::size_t k = 0;
            for (auto& g : enumerate_labeled_regular(4, static_cast<std::size_t>(q)))
                out.push_back({"simple-" + tag + "-n4-" + std::to_string(k++), std::move(g)});
            for (std::uint64_t s = 0; s < 40; ++s)
                out.push_back({"random-" + tag + "-n4-" + std::to_string(s),
                               gen_random_permutation_model(4, static_cast<std::size_t>(q), 1000 + s)});
        }
    }
    return out;
}

}  // namespace bmg::testing
