#include "hookspecht/sweep.hpp"

#include "hookspecht/relations.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

namespace hookspecht {

namespace {

template <CoefficientField F>
SweepRow run_instance(const F& field, const Partition& mu, const HookModule& module) {
    const Quiver& q = module.quiver();
    const HookShape& shape = module.shape();
    HomCertificate brute = bruteforce_hom(field, mu, module);
    HomCertificate classified = classify_hom(field, mu, shape, q);

    SweepRow row;
    row.d = shape.d;
    row.k = shape.k;
    row.e = q.e();
    row.characteristic = field.characteristic();
    row.mu = mu.to_string();
    row.lambda = shape.partition().to_string();
    row.dim_bruteforce = brute.dimension;
    row.dim_classify = classified.dimension;
    row.witness_case =
        classified.matches.empty() ? "none" : to_string(classified.matches.front().form);
    row.gc = classified.gc;
    row.agreement = brute.dimension == classified.dimension;
    if (brute.dimension == 1 && classified.dimension == 1) {
        row.degree = brute.degree;
        row.agreement = row.agreement && brute.degree == classified.degree &&
                        brute.sigma == classified.sigma;
    }
    return row;
}

template <CoefficientField F>
long garnir_instance(const F& field, const Partition& mu, const HookModule& module) {
    const Quiver& q = module.quiver();
    if (match_mu_forms(mu, module.shape(), q).empty()) return 0;
    Permutation sigma = target_tableau(mu, module.shape()).word;
    ZVector unit{{module.index_of(sigma), 1}};
    long compared = 0;
    for (Node a : garnir_nodes(mu)) {
        GarnirDatum datum = garnir_datum(mu, a, q);
        HookVector<F> closed_psi = garnir_psi_action<F>(field, mu, module, a);
        HookVector<F> op_psi =
            module.reduce(field, module.act_word(garnir_psi_tokens(datum), unit));
        internal_check(detail::vectors_equal(field, closed_psi, op_psi),
                       "closed-form psi^{T^A} disagrees with the operator word");
        HookVector<F> closed_g = garnir_action<F>(field, mu, module, a);
        HookVector<F> op_g = module.reduce(field, apply_garnir(module, datum, unit));
        internal_check(detail::vectors_equal(field, closed_g, op_g),
                       "closed-form g^A disagrees with the operator expansion");
        ++compared;
    }
    return compared;
}

struct Task {
    int d, k, e;
};

std::vector<Task> make_tasks(int dmax, const std::vector<int>& e_list) {
    std::vector<Task> tasks;
    for (int d = 1; d <= dmax; ++d)
        for (int k = 0; k <= d - 1; ++k)
            for (int e : e_list) tasks.push_back({d, k, e});
    return tasks;
}

void sort_rows(std::vector<SweepRow>& rows) {
    std::sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
        auto key = [](const SweepRow& r) {
            return std::tuple(r.d, r.k, Partition::parse(r.mu).parts(), r.e,
                              r.characteristic);
        };
        return key(a) < key(b);
    });
}

// Run fn(task) over a pool of worker threads; exceptions surface after join.
template <typename Fn>
void parallel_for(const std::vector<Task>& tasks, int jobs, Fn&& fn) {
    if (jobs < 1) jobs = 1;
    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr error;
    auto worker = [&] {
        while (true) {
            std::size_t idx = next.fetch_add(1);
            if (idx >= tasks.size()) return;
            try {
                fn(idx, tasks[idx]);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    int n = std::min<int>(jobs, static_cast<int>(tasks.size()));
    for (int t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

} // namespace

SweepReport run_sweep(int dmax, const std::vector<int>& e_list,
                      const std::vector<long>& char_list, int jobs) {
    SweepReport report;
    report.dmax = dmax;
    report.e_list = e_list;
    report.char_list = char_list;

    std::vector<Task> tasks = make_tasks(dmax, e_list);
    std::vector<std::vector<SweepRow>> buckets(tasks.size());

    parallel_for(tasks, jobs, [&](std::size_t idx, const Task& task) {
        Quiver q(task.e);
        HookModule module(HookShape(task.d, task.k), q);
        for (const Partition& mu : partitions_of(task.d))
            for (long c : char_list) {
                if (c == 0)
                    buckets[idx].push_back(run_instance(Rationals{}, mu, module));
                else
                    buckets[idx].push_back(run_instance(PrimeField(c), mu, module));
            }
    });

    for (auto& bucket : buckets)
        report.rows.insert(report.rows.end(), bucket.begin(), bucket.end());
    sort_rows(report.rows);
    for (const SweepRow& row : report.rows) {
        if (!row.agreement) report.disagreements += 1;
        if (row.dim_bruteforce == 1) report.nonzero += 1;
    }
    return report;
}

long check_garnir_closed_forms(int dmax, const std::vector<int>& e_list,
                               const std::vector<long>& char_list) {
    std::vector<Task> tasks = make_tasks(dmax, e_list);
    std::vector<long> counts(tasks.size(), 0);
    parallel_for(tasks, static_cast<int>(std::thread::hardware_concurrency()),
                 [&](std::size_t idx, const Task& task) {
                     Quiver q(task.e);
                     HookModule module(HookShape(task.d, task.k), q);
                     for (const Partition& mu : partitions_of(task.d))
                         for (long c : char_list) {
                             if (c == 0)
                                 counts[idx] += garnir_instance(Rationals{}, mu, module);
                             else
                                 counts[idx] += garnir_instance(PrimeField(c), mu, module);
                         }
                 });
    long total = 0;
    for (long c : counts) total += c;
    return total;
}

} // namespace hookspecht
