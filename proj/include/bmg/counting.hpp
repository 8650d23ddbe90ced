#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

#include "bmg/graph.hpp"

namespace bmg {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::size_t kExactCap = 24;
inline constexpr std::size_t kModCap = 32;
inline constexpr std::size_t kBruteForceCap = 9;
inline constexpr std::uint64_t kMaxModulus = (std::uint64_t{1} << 31) - 1;

/// Number of perfect matchings (parallel copies distinguished), i.e. the
/// permanent of the multiplicity matrix, by Ryser's formula with Gray-code
/// column updates. Exact: a 128-bit accumulator is used when the row-sum
/// bound proves it cannot overflow, arbitrary precision otherwise.
/// The subset range is split across `threads` workers.
BigInt pm_exact(const BipartiteMultigraph& g, unsigned threads = 1, std::size_t cap = kExactCap);

/// pm(g) mod m, Ryser with every operation reduced mod m; 2 <= m <= kMaxModulus.
std::uint64_t pm_mod(const BipartiteMultigraph& g, std::uint64_t m, unsigned threads = 1);

/// Reference count by enumerating all n! bijections (n <= kBruteForceCap).
BigInt pm_bruteforce(const BipartiteMultigraph& g);

}  // namespace bmg
