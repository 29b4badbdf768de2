#include "hookspecht/json_io.hpp"
#include "hookspecht/presentation.hpp"
#include "hookspecht/relations.hpp"
#include "hookspecht/solver.hpp"
#include "hookspecht/sweep.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

namespace {

using namespace hookspecht;

constexpr int kDefaultDmaxCap = 12;

int dmax_cap() {
    if (const char* env = std::getenv("HOOK_SPECHT_DMAX")) {
        int cap = std::atoi(env);
        if (cap >= 1 && cap < kDefaultDmaxCap) return cap;
    }
    return kDefaultDmaxCap;
}

bool is_prime(long p) {
    if (p < 2) return false;
    for (long q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

struct InstanceFlags {
    std::string mu;
    int d = 0;
    int k = 0;
    int e = 3;
    long characteristic = 0;
    bool check = false;
    bool show_garnir = false;
};

void add_instance_flags(CLI::App* cmd, InstanceFlags& flags) {
    cmd->add_option("--mu", flags.mu, "source partition, comma-separated parts")->required();
    cmd->add_option("--d", flags.d, "size of the partitions")->required();
    cmd->add_option("--k", flags.k, "leg length of the hook lambda = (d-k,1^k)")->required();
    cmd->add_option("--e", flags.e, "quantum characteristic (>= 3)");
    cmd->add_option("--char", flags.characteristic, "field characteristic, 0 or a prime");
}

// Shared validation; throws std::invalid_argument on bad input.
std::pair<Partition, HookShape> parse_instance(const InstanceFlags& flags) {
    Partition mu = Partition::parse(flags.mu);
    if (flags.e < 3) throw std::invalid_argument("--e must be at least 3");
    if (flags.characteristic != 0 && !is_prime(flags.characteristic))
        throw std::invalid_argument("--char must be 0 or a prime");
    HookShape shape(flags.d, flags.k);
    if (mu.d() != flags.d)
        throw std::invalid_argument("mu is not a partition of d");
    return {mu, shape};
}

template <typename Fn>
auto with_field(long characteristic, Fn&& fn) {
    if (characteristic == 0) return fn(Rationals{});
    return fn(PrimeField(characteristic));
}

int cmd_classify(const InstanceFlags& flags) {
    auto [mu, shape] = parse_instance(flags);
    Quiver q(flags.e);
    HomCertificate cert = with_field(flags.characteristic, [&](const auto& field) {
        return classify_hom(field, mu, shape, q);
    });
    std::cout << to_json(cert).dump() << "\n";
    return 0;
}

int cmd_solve(const InstanceFlags& flags) {
    auto [mu, shape] = parse_instance(flags);
    Quiver q(flags.e);
    HookModule module(shape, q);
    HomCertificate cert = with_field(flags.characteristic, [&](const auto& field) {
        return bruteforce_hom(field, mu, module);
    });
    if (flags.check) {
        HomCertificate classified = with_field(flags.characteristic, [&](const auto& field) {
            return classify_hom(field, mu, shape, q);
        });
        cert.agreement = cert.dimension == classified.dimension &&
                         (cert.dimension == 0 ||
                          (cert.degree == classified.degree && cert.sigma == classified.sigma));
    }
    if (flags.show_garnir)
        for (Node a : garnir_nodes(mu))
            std::cerr << render_garnir(garnir_datum(mu, a, q));
    std::cout << to_json(cert).dump() << "\n";
    return (flags.check && cert.agreement == false) ? 1 : 0;
}

struct SweepFlags {
    int dmax = 6;
    std::vector<int> e_list{3};
    std::vector<long> char_list{0};
    int jobs = 0;
    std::string format = "jsonl";
};

int cmd_sweep(const SweepFlags& flags) {
    if (flags.dmax < 1 || flags.dmax > dmax_cap())
        throw std::invalid_argument("--dmax must be between 1 and " +
                                    std::to_string(dmax_cap()));
    for (int e : flags.e_list)
        if (e < 3) throw std::invalid_argument("--e-list entries must be >= 3");
    for (long c : flags.char_list)
        if (c != 0 && !is_prime(c))
            throw std::invalid_argument("--char-list entries must be 0 or prime");
    if (flags.format != "jsonl" && flags.format != "csv")
        throw std::invalid_argument("--format must be jsonl or csv");

    int jobs = flags.jobs > 0 ? flags.jobs
                              : static_cast<int>(std::thread::hardware_concurrency());
    SweepReport report = run_sweep(flags.dmax, flags.e_list, flags.char_list, jobs);

    if (flags.format == "csv") {
        std::cout << csv_header() << "\n";
        for (const SweepRow& row : report.rows) std::cout << to_csv(row) << "\n";
        std::cerr << "instances=" << report.rows.size() << " nonzero=" << report.nonzero
                  << " disagreements=" << report.disagreements << "\n";
    } else {
        for (const SweepRow& row : report.rows) std::cout << to_json(row).dump() << "\n";
        nlohmann::json summary{{"schema", kSchema},
                               {"type", "summary"},
                               {"instances", report.rows.size()},
                               {"nonzero", report.nonzero},
                               {"disagreements", report.disagreements}};
        std::cout << summary.dump() << "\n";
    }
    return report.disagreements == 0 ? 0 : 1;
}

struct RelationFlags {
    int dmax = 5;
    std::vector<int> e_list{3};
};

int cmd_verify_relations(const RelationFlags& flags) {
    if (flags.dmax < 1 || flags.dmax > dmax_cap())
        throw std::invalid_argument("--dmax must be between 1 and " +
                                    std::to_string(dmax_cap()));
    RelationReport report = check_klr_relations_all(flags.dmax, flags.e_list, {3, 5, 0});
    for (const auto& [family, checked] : report.checked) {
        long bad = report.failed.count(family) ? report.failed.at(family) : 0;
        std::cout << (bad == 0 ? "pass" : "FAIL") << "  " << family << "  checked="
                  << checked << " failed=" << bad << "\n";
    }
    for (const auto& f : report.failures) std::cerr << f << "\n";
    return report.ok() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Homomorphisms from graded Specht modules into hook Specht modules"};
    app.require_subcommand(1);

    InstanceFlags classify_flags, solve_flags;
    SweepFlags sweep_flags;
    RelationFlags relation_flags;

    CLI::App* classify = app.add_subcommand(
        "classify", "closed-form classification of Hom(S^mu, S^lambda)");
    add_instance_flags(classify, classify_flags);

    CLI::App* solve =
        app.add_subcommand("solve", "brute-force kernel of the Specht presentation");
    add_instance_flags(solve, solve_flags);
    solve->add_flag("--check", solve_flags.check,
                    "also run the classification and report agreement");
    solve->add_flag("--garnir", solve_flags.show_garnir,
                    "print belt pictures for mu's Garnir nodes to stderr");

    CLI::App* sweep = app.add_subcommand("sweep", "dual-route sweep over all mu |- d <= dmax");
    sweep->add_option("--dmax", sweep_flags.dmax, "largest d (capped at 12)");
    sweep->add_option("--e-list", sweep_flags.e_list, "quantum characteristics")
        ->delimiter(',');
    sweep->add_option("--char-list", sweep_flags.char_list, "field characteristics")
        ->delimiter(',');
    sweep->add_option("--jobs", sweep_flags.jobs, "worker threads (default: hardware)");
    sweep->add_option("--format", sweep_flags.format, "jsonl or csv");

    CLI::App* verify =
        app.add_subcommand("verify-relations", "KLR defining relations on hook modules");
    verify->add_option("--dmax", relation_flags.dmax, "largest d (capped at 12)");
    verify->add_option("--e-list", relation_flags.e_list, "quantum characteristics")
        ->delimiter(',');

    try {
        app.parse(argc, argv);
        if (classify->parsed()) return cmd_classify(classify_flags);
        if (solve->parsed()) return cmd_solve(solve_flags);
        if (sweep->parsed()) return cmd_sweep(sweep_flags);
        if (verify->parsed()) return cmd_verify_relations(relation_flags);
    } catch (const CLI::ParseError& err) {
        int code = app.exit(err);
        return code == 0 ? 0 : 2;
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
    return 2;
}
