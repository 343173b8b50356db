#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rebal/model.hpp"
#include "rebal/rational.hpp"

namespace rebal {

enum class SchemeChoice { automatic, scheme1, scheme2, uncoded };

std::string to_string(SchemeChoice c);
/// Accepts "auto", "scheme1", "scheme2", "uncoded".
SchemeChoice parse_scheme_choice(const std::string& name);

// Closed-form loads, all in units of the segment size T.

/// Coded part of Scheme 1: (K(r-1) + ceil((r^2-2r)/2)) / (2(K-1)).
Rational load_scheme1(int K, int r);
/// The same quantity through the separate odd-r / even-r sums.
Rational load_scheme1_by_parity(int K, int r);
/// Coded part of Scheme 2: (K-r)(2r-1)/(K-1).
Rational load_scheme2(int K, int r);
/// Uncoded corner broadcasts shared by both schemes: (K-r)/(K-1).
Rational corner_load(int K, int r);
/// corner_load + min(L1, L2).
Rational removal_load(int K, int r);
/// rK/(K+1).
Rational addition_load(int K, int r);
/// r.
Rational uncoded_removal_load(int r);

/// r/(r-1): the removal bound, un-normalized.
Rational removal_lower_bound(int K, int r);
/// rK/(K+1): the addition bound, un-normalized.
Rational addition_lower_bound(const SystemParams& params);

/// ceil((2K+2)/3). Requires K >= 4.
int threshold(int K);

/// Scheme picked for node removal: scheme1 iff L1 <= L2.
SchemeChoice select_scheme(int K, int r);

struct Claim1Counterexample {
    int K = 0;
    int r = 0;
    Rational L1;
    Rational L2;
    std::string reason;
};

struct Claim1Report {
    int k_max = 0;
    long pairs_checked = 0;
    std::vector<Claim1Counterexample> counterexamples;
    /// Pairs below r_th with L1 == L2. min(L1, L2) = L1 still holds there and
    /// the selection rule picks Scheme 1, so these are not counterexamples.
    std::vector<Claim1Counterexample> ties;

    bool ok() const { return counterexamples.empty(); }
};

/// Exhaustively checks, for K in [4..k_max] and r in [3..K-1], that
/// min(L1, L2) = L1 for r < threshold(K) and L2 < L1 strictly from there on.
/// Exact ties below the threshold are collected separately; they occur at
/// the integer crossing r = (2K+1)/3 whenever K = 1 mod 3. Also brackets both real crossings of the odd-r and even-r
/// continuous load curves using integer sign tests and checks
/// ceil(r_even) = ceil((2K+2)/3) = floor(r_odd) + 1.
Claim1Report verify_claim1(int k_max);

/// Load figures for one executed scenario.
struct LoadReport {
    SystemParams params;
    SchemeChoice scheme_used = SchemeChoice::automatic;
    Rational measured_load;
    std::optional<Rational> L1;
    std::optional<Rational> L2;
    std::optional<Rational> L_rem;
    std::optional<Rational> L_add;
    Rational L_u;
    Rational removal_lower_bound;
    Rational addition_lower_bound;
    std::optional<int> r_th;
    /// Formula value for what was executed: corner_load + L1 or + L2, r for
    /// the uncoded baseline, rK/(K+1) for addition.
    Rational expected_load;

    bool matches_formula() const { return measured_load == expected_load; }
};

}  // namespace rebal
