#include "bmg/badness.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "bmg/counting.hpp"

namespace bmg {

namespace {

constexpr Multiplicity kDegree = 3;

class SubgraphEnumerator {
public:
    SubgraphEnumerator(const BipartiteMultigraph& g, const std::function<bool(const BipartiteMultigraph&)>& visit)
        : g_(g), n_(g.n_u()), visit_(visit), sub_(n_, std::vector<Multiplicity>(n_, 0)), row_left_(n_, kDegree),
          col_left_(n_, kDegree), below_(n_ + 1, std::vector<Multiplicity>(n_, 0)) {
        // below_[i][j]: capacity of column j in rows i..n-1
        for (std::size_t i = n_; i-- > 0;)
            for (std::size_t j = 0; j < n_; ++j) below_[i][j] = below_[i + 1][j] + std::min(g_.mult(i, j), kDegree);
    }

    void run() { cell(0, 0); }

private:
    const BipartiteMultigraph& g_;
    std::size_t n_;
    const std::function<bool(const BipartiteMultigraph&)>& visit_;
    std::vector<std::vector<Multiplicity>> sub_;
    std::vector<Multiplicity> row_left_;
    std::vector<Multiplicity> col_left_;
    std::vector<std::vector<Multiplicity>> below_;

    // room left in row i from column j on
    Multiplicity row_room(std::size_t i, std::size_t j) const {
        Multiplicity room = 0;
        for (; j < n_; ++j) room += std::min(g_.mult(i, j), col_left_[j]);
        return room;
    }

    bool cell(std::size_t i, std::size_t j) {
        if (j == n_) {
            if (row_left_[i] != 0) return true;
            // columns must still be completable from the rows below
            for (std::size_t c = 0; c < n_; ++c)
                if (col_left_[c] > below_[i + 1][c]) return true;
            if (i + 1 == n_) return visit_(BipartiteMultigraph(sub_));
            return cell(i + 1, 0);
        }
        const Multiplicity hi = std::min({g_.mult(i, j), row_left_[i], col_left_[j]});
        for (Multiplicity x = hi; x >= 0; --x) {
            row_left_[i] -= x;
            col_left_[j] -= x;
            sub_[i][j] = x;
            bool more = true;
            if (row_room(i, j + 1) >= row_left_[i]) more = cell(i, j + 1);
            row_left_[i] += x;
            col_left_[j] += x;
            sub_[i][j] = 0;
            if (!more) return false;
        }
        return true;
    }
};

void require_input(const BipartiteMultigraph& g) {
    const auto q = regularity(g);
    if (!q) throw std::invalid_argument("badness: graph is not regular");
    if (*q < kDegree) throw std::invalid_argument("badness: graph must be q-regular with q >= 3");
    if (g.n_u() > kBadnessCap) throw LimitExceeded("badness: n above cap " + std::to_string(kBadnessCap));
}

}  // namespace

void enumerate_3regular_spanning(const BipartiteMultigraph& g,
                                 const std::function<bool(const BipartiteMultigraph&)>& visit) {
    require_input(g);
    SubgraphEnumerator(g, visit).run();
}

std::size_t count_3regular_spanning(const BipartiteMultigraph& g) {
    std::size_t count = 0;
    enumerate_3regular_spanning(g, [&](const BipartiteMultigraph&) {
        ++count;
        return true;
    });
    return count;
}

BadnessResult is_bad(const BipartiteMultigraph& g) {
    BadnessResult result{true, std::nullopt};
    enumerate_3regular_spanning(g, [&](const BipartiteMultigraph& sub) {
        const auto residue = static_cast<std::uint32_t>(pm_mod(sub, 3));
        if (residue == 0) return true;
        result = {false, SpanningSubgraphWitness{sub, residue}};
        return false;
    });
    return result;
}

}  // namespace bmg
