#pragma once

// Reference computations written directly from the definitions, without
// calling into the library, used as test oracles.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

/// Exact fraction num/den in lowest terms, den > 0.
struct Frac {
    std::int64_t num = 0;
    std::int64_t den = 1;
};

inline Frac frac(std::int64_t num, std::int64_t den)
{
    if (den < 0) num = -num, den = -den;
    const auto g = std::gcd(num < 0 ? -num : num, den);
    return {num / g, den / g};
}

inline Frac add(Frac a, Frac b) { return frac(a.num * b.den + b.num * a.den, a.den * b.den); }

/// Nodes holding segment i: i, i+1, ..., i+r-1 reduced into [1..n].
inline std::set<int> storage(int i, int n, int r)
{
    std::set<int> s;
    for (int k = 0; k < r; ++k) s.insert((i - 1 + k) % n + 1);
    return s;
}

/// Segments stored at `node`.
inline std::set<int> contents(int node, int n, int r)
{
    std::set<int> out;
    for (int i = 1; i <= n; ++i)
        if (storage(i, n, r).count(node)) out.insert(i);
    return out;
}

/// Coded Scheme-1 load as the two parity sums, in units of T.
inline Frac scheme1_coded(int K, int r)
{
    Frac total{0, 1};
    const int split = r % 2 ? (r - 1) / 2 : r / 2;
    for (int j = 0; j <= split - 1; ++j) total = add(total, frac(K + r - 2 * j - 2, 2 * (K - 1)));
    for (int j = split; j <= r - 2; ++j) total = add(total, frac(K - r + 2 * (j + 1), 2 * (K - 1)));
    return total;
}

/// Coded Scheme-2 load as the sum over broadcast pairs, in units of T.
inline Frac scheme2_coded(int K, int r)
{
    Frac total{0, 1};
    for (int i = 1; i <= K - r; ++i) total = add(total, frac(2 * (K + r - 2 * i), 2 * (K - 1)));
    return total;
}

/// Half-unit sizes (unit = T/(2(K-1))) of the removed node's pieces when node
/// K is removed. Middle segment K-r+1+i: {i+1} then {i+K-r}.
inline std::pair<int, int> middle_halves(int K, int r, int i)
{
    return {K + r - 2 * i - 2, K - r + 2 * i};
}

/// Half-unit sizes of one corner segment: primary, optional half, pairs.
inline std::vector<int> corner_halves(int K, int r)
{
    std::vector<int> out{K + r - 2};
    if ((K - r) % 2) out.push_back(1);
    for (int j = 1; j <= (K - r) / 2; ++j) out.push_back(2);
    return out;
}

}  // namespace oracle
