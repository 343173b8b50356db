#include "rebal/analytics.hpp"

#include <algorithm>

namespace rebal {

namespace {

void require_removal_range(int K, int r)
{
    if (r < 3 || r > K - 1)
        throw ParamError("removal loads need 3 <= r <= K-1 (got K=" + std::to_string(K) + ", r=" + std::to_string(r)
                         + ")");
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }

// 4(K-1) * (L1 - L2) for odd r, as a polynomial in r: 9r^2 - 6(K+1)r + 2K + 1.
std::int64_t odd_gap(std::int64_t K, std::int64_t r) { return 9 * r * r - 6 * (K + 1) * r + 2 * K + 1; }
// Same for even r: 9r^2 - 6(K+1)r + 2K.
std::int64_t even_gap(std::int64_t K, std::int64_t r) { return 9 * r * r - 6 * (K + 1) * r + 2 * K; }

}  // namespace

std::string to_string(SchemeChoice c)
{
    switch (c) {
    case SchemeChoice::automatic: return "auto";
    case SchemeChoice::scheme1: return "scheme1";
    case SchemeChoice::scheme2: return "scheme2";
    case SchemeChoice::uncoded: return "uncoded";
    }
    return "?";
}

SchemeChoice parse_scheme_choice(const std::string& name)
{
    if (name == "auto") return SchemeChoice::automatic;
    if (name == "scheme1") return SchemeChoice::scheme1;
    if (name == "scheme2") return SchemeChoice::scheme2;
    if (name == "uncoded") return SchemeChoice::uncoded;
    throw ParamError("unknown scheme '" + name + "'");
}

Rational load_scheme1(int K, int r)
{
    require_removal_range(K, r);
    const std::int64_t sq = std::int64_t{r} * r - 2 * r;
    return Rational(std::int64_t{K} * (r - 1) + ceil_div(sq, 2), 2 * (std::int64_t{K} - 1));
}

Rational load_scheme1_by_parity(int K, int r)
{
    require_removal_range(K, r);
    const Rational denom(2 * (std::int64_t{K} - 1));
    if (r % 2 == 1) return Rational(r - 1) * (Rational(K) + Rational(r - 1, 2)) / denom;
    return (Rational(r - 2) * (Rational(K) + Rational(r, 2)) + Rational(K)) / denom;
}

Rational load_scheme2(int K, int r)
{
    require_removal_range(K, r);
    return Rational(std::int64_t{K - r} * (2 * r - 1), K - 1);
}

Rational corner_load(int K, int r)
{
    require_removal_range(K, r);
    return Rational(K - r, K - 1);
}

Rational removal_load(int K, int r)
{
    return corner_load(K, r) + std::min(load_scheme1(K, r), load_scheme2(K, r));
}

Rational addition_load(int K, int r)
{
    if (r < 2 || r > K - 1) throw ParamError("addition needs 2 <= r <= K-1");
    return Rational(std::int64_t{r} * K, K + 1);
}

Rational uncoded_removal_load(int r) { return Rational(r); }

Rational removal_lower_bound(int K, int r)
{
    if (r < 2 || r > K - 1) throw ParamError("removal lower bound needs 2 <= r <= K-1");
    return Rational(r, r - 1);
}

Rational addition_lower_bound(const SystemParams& params)
{
    return addition_load(params.K, params.r);
}

int threshold(int K)
{
    if (K < 4) throw ParamError("threshold needs K >= 4 (got " + std::to_string(K) + ")");
    return static_cast<int>(ceil_div(2 * std::int64_t{K} + 2, 3));
}

SchemeChoice select_scheme(int K, int r)
{
    return load_scheme1(K, r) <= load_scheme2(K, r) ? SchemeChoice::scheme1 : SchemeChoice::scheme2;
}

Claim1Report verify_claim1(int k_max)
{
    if (k_max < 4) throw ParamError("check-claim1 needs kmax >= 4 (got " + std::to_string(k_max) + ")");
    Claim1Report report;
    report.k_max = k_max;
    for (int K = 4; K <= k_max; ++K) {
        const int r_th = threshold(K);
        for (int r = 3; r <= K - 1; ++r) {
            ++report.pairs_checked;
            const Rational l1 = load_scheme1(K, r);
            const Rational l2 = load_scheme2(K, r);
            const char* reason = nullptr;
            if (r < r_th && l1 == l2) report.ties.push_back({K, r, l1, l2, "L1 == L2 below r_th"});
            else if (r < r_th && !(l1 < l2)) reason = "r < r_th but L2 < L1";
            else if (r >= r_th && !(l2 < l1)) reason = "r >= r_th but L2 is not strictly smaller";
            else if (l1 != load_scheme1_by_parity(K, r)) reason = "ceil form of L1 disagrees with parity form";
            if (reason) report.counterexamples.push_back({K, r, l1, l2, reason});
        }

        // Larger root of each gap polynomial: the last integer n where the gap is
        // non-positive satisfies floor(root) = n (the gap is increasing past its
        // vertex at (K+1)/3).
        auto floor_of_root = [K](auto gap) {
            int n = static_cast<int>((K + 1) / 3);
            while (gap(K, n + 1) <= 0) ++n;
            return n;
        };
        const int floor_ro = floor_of_root(odd_gap);
        const int floor_re = floor_of_root(even_gap);
        // r_e is irrational (K^2+1 is never a perfect square for K >= 1), so its
        // ceiling is floor + 1 and the gap is strictly non-zero at integers.
        const bool re_integral = even_gap(K, floor_re) == 0;
        const int ceil_re = re_integral ? floor_re : floor_re + 1;
        if (re_integral || ceil_re != r_th || floor_ro + 1 != r_th) {
            report.counterexamples.push_back(
                {K, r_th, Rational(0), Rational(0),
                 "crossing structure violated: ceil(r_e)=" + std::to_string(ceil_re) + ", floor(r_o)+1="
                     + std::to_string(floor_ro + 1) + ", r_th=" + std::to_string(r_th)});
        }
    }
    return report;
}

}  // namespace rebal
