#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "rebal/analytics.hpp"

namespace rebal {

/// One r of a removal sweep. The load columns describe the automatically
/// selected scheme; L1 and L2 are the closed-form coded parts.
struct SweepRow {
    int K = 0;
    int r = 0;
    SchemeChoice scheme = SchemeChoice::automatic;
    Rational load;
    Rational L1;
    Rational L2;
    Rational L_u;
    Rational lower_bound;
    int r_th = 0;
    bool verified = false;
};

/// Executes auto, Scheme 1, Scheme 2 and the uncoded baseline for node K and
/// r in [r_min..r_max]. `verified` is set iff all four runs pass both
/// verifiers.
std::vector<SweepRow> run_sweep(int K, int r_min, int r_max, std::int64_t t_mult, std::uint64_t seed);

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out);

/// Entry point of the `rebal` tool; `args` excludes the program name.
/// Returns 0 on success, 1 on a verification or formula failure, 2 on a
/// usage, parameter or I/O error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rebal
