#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>

#include "oracles.hpp"
#include "rebal/removal.hpp"
#include "rebal/verify.hpp"

using namespace rebal;

namespace {

using Sent = std::multiset<std::string>;

std::string describe(const Broadcast& b)
{
    std::vector<std::string> ops;
    for (const auto& op : b.operands) ops.push_back(to_string(op));
    std::sort(ops.begin(), ops.end());
    std::string out = std::to_string(b.sender) + ":";
    for (std::size_t k = 0; k < ops.size(); ++k) out += (k ? "+" : "") + ops[k];
    return out;
}

Sent sent(const TransmissionLog& log)
{
    Sent out;
    for (const auto& b : log.broadcasts) out.insert(describe(b));
    return out;
}

Rational frac(oracle::Frac f) { return Rational(f.num, f.den); }

}  // namespace

TEST_CASE("worked example K=6 r=3: Scheme 1 broadcast set and load")
{
    const auto p = SystemParams::with_default_size(6, 3);
    const auto db = build_cyclic_database(p, 0);
    const auto res = rebalance_remove(db, 6, SchemeChoice::automatic);
    CHECK(res.report.scheme_used == SchemeChoice::scheme1);
    CHECK(res.report.measured_load == Rational(2));
    CHECK(sent(res.log) == Sent{"1:W_5^{2}+W_6^{5}", "5:W_4^{1}+W_5^{4}", "1:W_6^{3}", "1:W_6^{3,4}", "5:W_4^{3}",
                                "5:W_4^{2,3}"});
    int coded = 0;
    for (const auto& b : res.log.broadcasts) coded += b.kind == BroadcastKind::coded;
    CHECK(coded == 2);
    CHECK(verify_removal(db, res).ok());
    CHECK(res.final_db.total_bits() == 18 * p.T);
}

TEST_CASE("worked example K=8 r=6: Scheme 2 broadcast set and load")
{
    const auto p = SystemParams::with_default_size(8, 6);
    const auto db = build_cyclic_database(p, 0);
    const auto res = rebalance_remove(db, 8, SchemeChoice::automatic);
    CHECK(res.report.scheme_used == SchemeChoice::scheme2);
    CHECK(res.report.measured_load == Rational(24, 7));
    CHECK(sent(res.log) == Sent{"1:W_4^{3}+W_6^{5}+W_8^{7}", "1:W_5^{4}+W_7^{6}", "7:W_3^{1}+W_5^{3}+W_7^{5}",
                                "7:W_4^{2}+W_6^{4}", "1:W_8^{6}", "7:W_3^{2}"});
    for (const auto& b : res.log.broadcasts) {
        if (b.kind != BroadcastKind::coded) continue;
        // Payload is the j = 0 operand: (K+r-2i)/(2(K-1)) of T.
        const auto i = b.operands.size() == 3 ? 1 : 2;
        CHECK(b.payload_atoms == (8 + 6 - 2 * i) * 9);
    }
    CHECK(verify_removal(db, res).ok());
    CHECK(res.final_db.total_bits() == 48 * p.T);
}

TEST_CASE("Scheme 1 load for K=7 r=4")
{
    const auto db = build_cyclic_database(SystemParams::with_default_size(7, 4), 3);
    const auto res = rebalance_remove(db, 7, SchemeChoice::scheme1);
    CHECK(res.report.measured_load == Rational(31, 12));
    CHECK(verify_removal(db, res).ok());
}

TEST_CASE("uncoded baseline load is r")
{
    for (auto [K, r] : {std::pair{6, 3}, std::pair{15, 10}, std::pair{5, 4}}) {
        const auto db = build_cyclic_database(SystemParams::with_default_size(K, r), 0);
        const auto res = rebalance_remove(db, K, SchemeChoice::uncoded);
        CHECK(res.report.measured_load == Rational(r));
        CHECK(res.log.broadcasts.size() == static_cast<std::size_t>(r));
        CHECK(verify_removal(db, res).ok());
    }
}

TEST_CASE("removing a different node gives the same load")
{
    const auto db = build_cyclic_database(SystemParams::with_default_size(6, 3), 0);
    const auto res = rebalance_remove(db, 2, SchemeChoice::automatic);
    CHECK(res.report.measured_load == Rational(2));
    CHECK(verify_removal(db, res).ok());
}

TEST_CASE("r = 2 removal is unsupported")
{
    const auto db = build_cyclic_database(SystemParams::with_default_size(6, 2), 0);
    CHECK_THROWS_AS(rebalance_remove(db, 6, SchemeChoice::automatic), UnsupportedConfiguration);
}

TEST_CASE("Scheme 1 matches its closed form on every small system")
{
    for (int K = 4; K <= 12; ++K)
        for (int r = 3; r < K; ++r) {
            const auto db = build_cyclic_database(SystemParams::with_default_size(K, r), 1);
            const auto res = rebalance_remove(db, K, SchemeChoice::scheme1);
            const auto expected = Rational(K - r, K - 1) + frac(oracle::scheme1_coded(K, r));
            CHECK_MESSAGE(res.report.measured_load == expected, "K=" << K << " r=" << r);
            int coded = 0;
            for (const auto& b : res.log.broadcasts) coded += b.kind == BroadcastKind::coded;
            CHECK(coded == r - 1);
            CHECK(verify_removal(db, res).ok());
        }
}

TEST_CASE("Scheme 2 matches its closed form whenever K < 2r")
{
    for (int K = 4; K <= 12; ++K)
        for (int r = 3; r < K; ++r) {
            if (K >= 2 * r) continue;
            const auto db = build_cyclic_database(SystemParams::with_default_size(K, r), 1);
            const auto res = rebalance_remove(db, K, SchemeChoice::scheme2);
            const auto expected = Rational(K - r, K - 1) + frac(oracle::scheme2_coded(K, r));
            CHECK_MESSAGE(res.report.measured_load == expected, "K=" << K << " r=" << r);
            CHECK(verify_removal(db, res).ok());
        }
}

TEST_CASE("Scheme 2 sends nothing for empty chains when K >= 2r")
{
    // Chains i = r..K-r have no operands; the executed coded load counts only
    // i = 1..r-1, two broadcasts of (K+r-2i)/(2(K-1)) each.
    for (int K = 6; K <= 14; ++K)
        for (int r = 3; 2 * r <= K; ++r) {
            const auto db = build_cyclic_database(SystemParams::with_default_size(K, r), 2);
            const auto res = rebalance_remove(db, K, SchemeChoice::scheme2);
            oracle::Frac coded{0, 1};
            for (int i = 1; i <= r - 1; ++i) coded = oracle::add(coded, oracle::frac(K + r - 2 * i, K - 1));
            CHECK(res.report.measured_load == Rational(K - r, K - 1) + frac(coded));
            CHECK(res.report.measured_load < res.report.expected_load);
            CHECK(verify_removal(db, res).ok());
        }
}

TEST_CASE("every scheme verifies for every removed node, including r = K-1")
{
    for (int K = 4; K <= 9; ++K)
        for (int r = 3; r < K; ++r) {
            const auto db = build_cyclic_database(SystemParams::with_default_size(K, r), 9);
            for (int node = 1; node <= K; ++node)
                for (auto c : {SchemeChoice::scheme1, SchemeChoice::scheme2, SchemeChoice::uncoded}) {
                    const auto res = rebalance_remove(db, node, c);
                    const auto v = verify_removal(db, res);
                    CHECK_MESSAGE(v.ok(), "K=" << K << " r=" << r << " node=" << node << " " << to_string(c));
                }
        }
}

TEST_CASE("loads are invariant under scaling the segment size")
{
    for (auto [K, r] : {std::pair{6, 3}, std::pair{8, 6}, std::pair{9, 5}})
        for (auto c : {SchemeChoice::scheme1, SchemeChoice::scheme2, SchemeChoice::uncoded}) {
            const auto a = rebalance_remove(build_cyclic_database(SystemParams::with_default_size(K, r, 1), 0), K, c);
            const auto b = rebalance_remove(build_cyclic_database(SystemParams::with_default_size(K, r, 3), 0), K, c);
            CHECK(a.report.measured_load == b.report.measured_load);
        }
}
