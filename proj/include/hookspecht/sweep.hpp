#pragma once

#include "hookspecht/solver.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hookspecht {

/// One (mu, lambda, e, char) instance of the dual-route Hom computation.
struct SweepRow {
    int d = 0;
    int k = 0;
    int e = 0;
    long characteristic = 0;
    std::string mu;
    std::string lambda;
    int dim_bruteforce = 0;
    int dim_classify = 0;
    std::string witness_case; // "i", "ii", "iii" or "none"
    std::string gc;           // Gc of the matched a-vector, "" when no match
    std::optional<int> degree;
    bool agreement = false;

    bool operator==(const SweepRow&) const = default;
};

struct SweepReport {
    int dmax = 0;
    std::vector<int> e_list;
    std::vector<long> char_list;
    std::vector<SweepRow> rows;
    long disagreements = 0;
    long nonzero = 0;
};

/// Run bruteforce_hom and classify_hom on every mu |- d, every hook (d,k)
/// with d <= dmax, every e, every characteristic (0 = rationals). Instances
/// run concurrently; rows come back sorted by (d, k, mu, e, char).
SweepReport run_sweep(int dmax, const std::vector<int>& e_list,
                      const std::vector<long>& char_list, int jobs);

/// Closed-form Garnir actions versus direct operator application of the
/// formal g^A words, on [sigma^lambda_mu] for every Garnir node of every
/// form-matched mu. Returns the number of compared nodes; throws on mismatch
/// via internal_check.
long check_garnir_closed_forms(int dmax, const std::vector<int>& e_list,
                               const std::vector<long>& char_list);

} // namespace hookspecht
