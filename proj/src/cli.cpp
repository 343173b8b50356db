#include "rebal/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <future>
#include <ostream>

#include <CLI11.hpp>

#include "rebal/addition.hpp"
#include "rebal/removal.hpp"
#include "rebal/trace.hpp"
#include "rebal/verify.hpp"

namespace rebal {

namespace {

std::string fixed6(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

std::string exact_and_float(const Rational& q)
{
    return to_string(q) + " (= " + std::to_string(q.numerator()) + "/" + std::to_string(q.denominator()) + ", "
           + fixed6(to_double(q)) + ")";
}

void print_report(const LoadReport& rep, std::ostream& out)
{
    out << "scheme: " << to_string(rep.scheme_used) << "\n";
    out << "load: " << exact_and_float(rep.measured_load) << "\n";
    out << "formula load: " << to_string(rep.expected_load) << (rep.matches_formula() ? " (match)" : " (MISMATCH)")
        << "\n";
    if (rep.L1) out << "L1 (coded part, Scheme 1): " << to_string(*rep.L1) << "\n";
    if (rep.L2) out << "L2 (coded part, Scheme 2): " << to_string(*rep.L2) << "\n";
    if (rep.L_rem) out << "removal load: " << to_string(*rep.L_rem) << "\n";
    if (rep.L_add) out << "addition load: " << to_string(*rep.L_add) << "\n";
    out << "uncoded load: " << to_string(rep.L_u) << "\n";
    out << "removal lower bound: " << to_string(rep.removal_lower_bound) << "\n";
    out << "addition lower bound: " << to_string(rep.addition_lower_bound) << "\n";
    if (rep.r_th) out << "r_th: " << *rep.r_th << "\n";
}

void print_verification(const VerificationReport& v, std::ostream& out)
{
    out << "verified: " << (v.ok() ? "yes" : "no") << "\n";
    for (const auto& finding : v.violations) out << "  finding: " << finding << "\n";
}

void write_text(const std::string& path, const std::string& text)
{
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::ios_base::failure("cannot open " + path + " for writing");
    f << text;
    f.close();
    if (!f) throw std::ios_base::failure("cannot write " + path);
}

struct Options {
    int K = 0;
    int r = 0;
    int node = 0;
    std::string scheme = "auto";
    std::uint64_t seed = 0;
    std::int64_t t_mult = 1;
    std::string out_path;
    std::string trace_path;
    bool full_trace = false;
    int k_max = 0;
    int r_min = 0;
    int r_max = 0;
};

int cmd_remove(const Options& o, std::ostream& out)
{
    auto params = SystemParams::with_default_size(o.K, o.r, o.t_mult);
    params.validate_for_removal();
    if (o.node < 1 || o.node > o.K) throw ParamError("--node must lie in [1.." + std::to_string(o.K) + "]");
    const auto choice = parse_scheme_choice(o.scheme);

    const auto db = build_cyclic_database(params, o.seed);
    const auto result = rebalance_remove(db, o.node, choice);
    const auto verification = verify_removal(db, result);

    out << "remove node " << o.node << " from K=" << o.K << ", r=" << o.r << ", T=" << params.T
        << ", seed=" << o.seed << "\n";
    out << "broadcasts: " << result.log.broadcasts.size() << "\n";
    print_report(result.report, out);
    print_verification(verification, out);
    if (!o.trace_path.empty())
        write_text(o.trace_path, removal_trace(result, verification, o.seed, o.full_trace).dump(2) + "\n");
    return verification.ok() && result.report.matches_formula() ? 0 : 1;
}

int cmd_add(const Options& o, std::ostream& out)
{
    auto params = SystemParams::with_default_size(o.K, o.r, o.t_mult);
    params.validate();

    const auto db = build_cyclic_database(params, o.seed);
    const auto result = rebalance_add(db);
    const auto verification = verify_addition(db, result);
    const bool optimal = result.report.measured_load == result.report.addition_lower_bound;

    out << "add node " << o.K + 1 << " to K=" << o.K << ", r=" << o.r << ", T=" << params.T << ", seed=" << o.seed
        << "\n";
    out << "broadcasts: " << result.log.broadcasts.size() << "\n";
    print_report(result.report, out);
    out << "optimal: " << (optimal ? "yes" : "no") << "\n";
    print_verification(verification, out);
    if (!o.trace_path.empty())
        write_text(o.trace_path, addition_trace(result, verification, o.seed, o.full_trace).dump(2) + "\n");
    return verification.ok() && result.report.matches_formula() && optimal ? 0 : 1;
}

int cmd_sweep(const Options& o, std::ostream& out)
{
    if (o.K < 4) throw ParamError("sweep requires K >= 4");
    const int r_min = o.r_min ? o.r_min : 3;
    const int r_max = o.r_max ? o.r_max : o.K - 1;
    if (r_min < 3 || r_max > o.K - 1 || r_min > r_max)
        throw ParamError("r range must satisfy 3 <= r-min <= r-max <= K-1");

    const auto rows = run_sweep(o.K, r_min, r_max, o.t_mult, o.seed);
    std::ostringstream csv;
    write_sweep_csv(rows, csv);
    if (o.out_path.empty())
        out << csv.str();
    else
        write_text(o.out_path, csv.str());

    const bool all = std::all_of(rows.begin(), rows.end(), [](const SweepRow& row) { return row.verified; });
    if (!o.out_path.empty())
        out << rows.size() << " rows written to " << o.out_path << (all ? "" : " (unverified rows present)") << "\n";
    return all ? 0 : 1;
}

int cmd_check_claim1(const Options& o, std::ostream& out)
{
    const auto report = verify_claim1(o.k_max);
    out << "checked " << report.pairs_checked << " (K, r) pairs for K in [4.." << o.k_max
        << "]: " << report.counterexamples.size() << " counterexamples\n";
    if (!report.ties.empty())
        out << report.ties.size() << " exact ties L1 == L2 below r_th (Scheme 1 selected), first at K="
            << report.ties.front().K << " r=" << report.ties.front().r << "\n";
    for (const auto& c : report.counterexamples)
        out << "  K=" << c.K << " r=" << c.r << " L1=" << to_string(c.L1) << " L2=" << to_string(c.L2) << ": "
            << c.reason << "\n";
    return report.ok() ? 0 : 1;
}

}  // namespace

std::vector<SweepRow> run_sweep(int K, int r_min, int r_max, std::int64_t t_mult, std::uint64_t seed)
{
    std::vector<std::future<SweepRow>> jobs;
    for (int r = r_min; r <= r_max; ++r) {
        jobs.push_back(std::async(std::launch::async, [=] {
            auto params = SystemParams::with_default_size(K, r, t_mult);
            params.validate_for_removal();
            const auto db = build_cyclic_database(params, seed);

            SweepRow row;
            row.K = K;
            row.r = r;
            row.verified = true;
            for (auto choice :
                 {SchemeChoice::automatic, SchemeChoice::scheme1, SchemeChoice::scheme2, SchemeChoice::uncoded}) {
                const auto result = rebalance_remove(db, K, choice);
                if (!verify_removal(db, result).ok()) row.verified = false;
                if (choice == SchemeChoice::automatic) {
                    row.scheme = result.report.scheme_used;
                    row.load = result.report.measured_load;
                }
            }
            row.L1 = load_scheme1(K, r);
            row.L2 = load_scheme2(K, r);
            row.L_u = uncoded_removal_load(r);
            row.lower_bound = removal_lower_bound(K, r);
            row.r_th = threshold(K);
            return row;
        }));
    }
    std::vector<SweepRow> rows;
    for (auto& job : jobs) rows.push_back(job.get());
    return rows;
}

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out)
{
    out << "K,r,scheme,load_num,load_den,load_float,L1_float,L2_float,L_u,lower_bound_float,r_th,verified\n";
    for (const auto& row : rows) {
        out << row.K << ',' << row.r << ',' << to_string(row.scheme) << ',' << row.load.numerator() << ','
            << row.load.denominator() << ',' << fixed6(to_double(row.load)) << ',' << fixed6(to_double(row.L1)) << ','
            << fixed6(to_double(row.L2)) << ',' << to_string(row.L_u) << ',' << fixed6(to_double(row.lower_bound))
            << ',' << row.r_th << ',' << (row.verified ? "true" : "false") << '\n';
    }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Coded rebalancing simulator for r-balanced cyclic databases", "rebal"};
    app.require_subcommand(1);

    auto* remove = app.add_subcommand("remove", "Remove one node and rebalance");
    remove->add_option("--k", o.K, "Number of nodes")->required();
    remove->add_option("--r", o.r, "Replication factor")->required();
    remove->add_option("--node", o.node, "Node to remove")->required();
    remove->add_option("--scheme", o.scheme, "auto | scheme1 | scheme2 | uncoded")
        ->check(CLI::IsMember({"auto", "scheme1", "scheme2", "uncoded"}));

    auto* add = app.add_subcommand("add", "Add node K+1 and rebalance");
    add->add_option("--k", o.K, "Number of nodes")->required();
    add->add_option("--r", o.r, "Replication factor")->required();

    for (auto* sub : {remove, add}) {
        sub->add_option("--trace", o.trace_path, "Write a JSON trace to this path");
        sub->add_flag("--full-trace", o.full_trace, "Include payload bits in the trace");
    }

    auto* sweep = app.add_subcommand("sweep", "Removal loads for every r at fixed K, as CSV");
    sweep->add_option("--k", o.K, "Number of nodes")->required();
    sweep->add_option("--r-min", o.r_min, "Smallest r (default 3)");
    sweep->add_option("--r-max", o.r_max, "Largest r (default K-1)");
    sweep->add_option("--out", o.out_path, "CSV path (default stdout)");

    for (auto* sub : {remove, add, sweep}) {
        sub->add_option("--seed", o.seed, "Content seed")->capture_default_str();
        sub->add_option("--t-mult", o.t_mult, "Segment size multiplier")->check(CLI::PositiveNumber);
    }

    auto* claim1 = app.add_subcommand("check-claim1", "Check the scheme-selection threshold up to K_max");
    claim1->add_option("--kmax", o.k_max, "Largest K")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        if (remove->parsed()) return cmd_remove(o, out);
        if (add->parsed()) return cmd_add(o, out);
        if (sweep->parsed()) return cmd_sweep(o, out);
        return cmd_check_claim1(o, out);
    } catch (const UnsupportedConfiguration& e) {
        err << "unsupported configuration: " << e.what() << "\n";
        return 2;
    } catch (const ParamError& e) {
        err << "parameter error: " << e.what() << "\n";
        return 2;
    } catch (const std::ios_base::failure& e) {
        err << "I/O error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        err << "rebalancing failed: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace rebal
