#pragma once

#include "hookspecht/arith.hpp"
#include "hookspecht/check.hpp"
#include "hookspecht/fields.hpp"
#include "hookspecht/hook_module.hpp"
#include "hookspecht/linalg.hpp"
#include "hookspecht/presentation.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hookspecht {

/// T^lambda_mu: restriction of T^mu to lambda, remaining nodes filled with
/// the leftover values of T^mu in increasing order. Standard whenever mu has
/// at least k+1 parts.
struct TargetTableau {
    Tableau tableau;
    Permutation word; // sigma^lambda_mu = w^{T^lambda_mu}
};

TargetTableau target_tableau(const Partition& mu, const HookShape& shape);

enum class WitnessCase { I, II, III };
std::string to_string(WitnessCase c);

/// Matched parameters of one of the three partition forms of the main
/// theorem: (a_1 e, ..., a_{c-1} e, a_c e - m, 1^{k-c+1}) for case I,
/// the same with an extra trailing 1 (and e | d) for case II, and
/// (a_1 e, ..., a_k e, a_{k+1} e - 1, ..., a_N e - 1 - m) for case III.
struct HomWitness {
    WitnessCase form = WitnessCase::I;
    int c_or_n = 0; // c in cases I/II, N in case III
    std::vector<long> a;
    int m = 0;

    bool operator==(const HomWitness&) const = default;
};

/// Result of one Hom computation.
struct HomCertificate {
    std::string method; // "bruteforce" or "classification"
    std::string mu;
    int d = 0;
    int k = 0;
    int e = 0;
    long characteristic = 0;
    int dimension = 0;
    std::optional<HomWitness> witness;   // only for classification, dim 1
    std::vector<HomWitness> matches;     // every admissible parametrization
    std::string gc;                      // Gc of the matched a, decimal ("" if none)
    std::optional<int> degree;           // degree of z^mu -> [sigma_mu]
    std::vector<int> sigma;              // one-line sigma_mu when dim 1
    std::optional<bool> agreement;

    bool operator==(const HomCertificate&) const = default;
};

/// All admissible parametrizations of mu against the three forms, canonical
/// (largest c) first. Cases are mutually exclusive; within a case at most two
/// adjacent values of c are admissible. Form II entries satisfy the
/// congruence m+c = k+2 (mod e), which is checked equivalent to e | d.
std::vector<HomWitness> match_mu_forms(const Partition& mu, const HookShape& shape,
                                       const Quiver& q);

/// The two sides of the weight lemma, both computed: the direct weight of
/// [sigma^lambda_mu] versus i^mu, and the pattern match; they must agree.
/// Throws when mu has fewer than k+1 parts.
std::optional<HomWitness> mu_forms_check(const Partition& mu, const HookShape& shape,
                                         const Quiver& q);

/// Leg nodes of mu under the strand map into sigma_mu T^lambda; only defined
/// when the i^mu weight space of the hook module is nonzero.
std::vector<Node> leg_nodes(const Partition& mu, const HookModule& module);

std::pair<Partition, Partition> conjugate_pair(const Partition& mu, const Partition& lambda);

/// Degree of the map z^mu -> [sigma], for sigma a hook shuffle of weight i^mu.
int hom_degree(const Partition& mu, const HookModule& module, int sigma_index);

int hom_graded_dimension(const HomCertificate& cert);

namespace detail {

inline ResidueSeq initial_weight(const Partition& mu, const Quiver& q) {
    return Tableau::row_reading(mu).residue_sequence(q);
}

/// Gc of the witness's a-vector.
inline BigInt witness_gc(const HomWitness& w) { return garnir_content(w.a); }

template <CoefficientField F>
bool gc_vanishes(const F& field, const HomWitness& w) {
    BigInt gc = witness_gc(w);
    bool zero = field.is_zero(field.from_integer(gc));
    if (field.characteristic() > 0)
        internal_check(zero == p_divides_garnir_content(field.characteristic(), w.a),
                       "valuation criterion disagrees with direct divisibility");
    return zero;
}

} // namespace detail

/// The candidate line O.[sigma_mu] surviving J_1 + J_2 + J_3: present iff
/// i^mu is a weight of the hook module and every dot and row-psi generator
/// kills the extreme vector.
template <CoefficientField F>
std::optional<HookVector<F>> solve_J123(const F& field, const Partition& mu,
                                        const HookModule& module) {
    internal_check(mu.d() == module.shape().d, "solve_J123: size mismatch");
    const Quiver& q = module.quiver();
    auto extreme = module.extreme_index(detail::initial_weight(mu, q));
    if (!extreme) return std::nullopt;
    ZVector unit{{*extreme, 1}};
    for (const RelationGenerator& gen : relation_generators(mu, q)) {
        if (gen.kind != RelationGenerator::Kind::Dot &&
            gen.kind != RelationGenerator::Kind::RowPsi)
            continue;
        if (!apply_relation(module, mu, gen, unit).empty()) return std::nullopt;
    }
    HookVector<F> line;
    line.terms[*extreme] = field.one();
    return line;
}

/// Brute-force Hom computation: stack one exact linear block per relation
/// generator over the i^mu weight space of S^lambda and return the joint
/// kernel. Never consults sigma^lambda_mu or the three forms.
template <CoefficientField F>
HomCertificate bruteforce_hom(const F& field, const Partition& mu,
                              const HookModule& module) {
    using Elem = typename F::Elem;
    const Quiver& q = module.quiver();
    const HookShape& shape = module.shape();
    internal_check(mu.d() == shape.d, "bruteforce_hom: |mu| != d");

    HomCertificate cert;
    cert.method = "bruteforce";
    cert.mu = mu.to_string();
    cert.d = shape.d;
    cert.k = shape.k;
    cert.e = q.e();
    cert.characteristic = field.characteristic();
    cert.dimension = 0;

    ResidueSeq imu = detail::initial_weight(mu, q);
    std::vector<int> cols = module.weight_space(imu);
    if (cols.empty()) return cert;
    int w = static_cast<int>(cols.size());

    std::vector<std::vector<Elem>> rows;
    for (const RelationGenerator& gen : relation_generators(mu, q)) {
        if (gen.kind == RelationGenerator::Kind::Idempotent)
            continue; // imposed by restricting to the i^mu weight space
        std::map<int, std::vector<BigInt>> blocks;
        for (int j = 0; j < w; ++j) {
            ZVector image = apply_relation(module, mu, gen, ZVector{{cols[j], 1}});
            for (const auto& [out_idx, c] : image) {
                auto [it, inserted] = blocks.try_emplace(out_idx, std::vector<BigInt>(w, 0));
                it->second[j] = c;
            }
        }
        for (const auto& [out_idx, coeffs] : blocks) {
            std::vector<Elem> row(w, field.zero());
            bool nonzero = false;
            for (int j = 0; j < w; ++j) {
                row[j] = field.from_integer(coeffs[j]);
                nonzero = nonzero || !field.is_zero(row[j]);
            }
            if (nonzero) rows.push_back(std::move(row));
        }
    }

    auto kernel = kernel_basis(field, std::move(rows), w);
    internal_check(kernel.size() <= 1, "Hom space dimension exceeds 1");
    if (kernel.empty()) return cert;

    const std::vector<Elem>& vec = kernel.front();
    auto extreme = module.extreme_index(imu);
    internal_check(extreme.has_value(), "nonzero kernel in an empty weight space");
    for (int j = 0; j < w; ++j)
        internal_check(field.is_zero(vec[j]) == (cols[j] != *extreme),
                       "kernel vector is not supported on [sigma_mu]");

    cert.dimension = 1;
    cert.sigma = module.element(*extreme).sigma.targets();
    cert.degree = hom_degree(mu, module, *extreme);
    return cert;
}

/// Closed-form classification of Hom(S^mu, S^lambda): match mu against the
/// three forms and test whether Gc(a) vanishes in the field.
template <CoefficientField F>
HomCertificate classify_hom(const F& field, const Partition& mu, const HookShape& shape,
                            const Quiver& q) {
    internal_check(mu.d() == shape.d, "classify_hom: |mu| != d");
    HomCertificate cert;
    cert.method = "classification";
    cert.mu = mu.to_string();
    cert.d = shape.d;
    cert.k = shape.k;
    cert.e = q.e();
    cert.characteristic = field.characteristic();
    cert.dimension = 0;
    cert.matches = match_mu_forms(mu, shape, q);
    if (cert.matches.empty()) return cert;

    bool vanishes = detail::gc_vanishes(field, cert.matches.front());
    for (const HomWitness& alt : cert.matches)
        internal_check(detail::gc_vanishes(field, alt) == vanishes,
                       "Gc verdict differs across admissible parametrizations");
    cert.gc = detail::witness_gc(cert.matches.front()).str();
    if (!vanishes) return cert;

    cert.dimension = 1;
    cert.witness = cert.matches.front();
    TargetTableau target = target_tableau(mu, shape);
    cert.sigma = target.word.targets();
    cert.degree = tableau_degree(target.tableau, q) - specht_degree_shift(mu, q);
    return cert;
}

/// psi^{T^A} [sigma^lambda_mu] by the closed-form case table. Requires mu to
/// match one of the three forms and A to be a Garnir node.
template <CoefficientField F>
HookVector<F> garnir_psi_action(const F& field, const Partition& mu,
                                const HookModule& module, Node a) {
    const Quiver& q = module.quiver();
    const HookShape& shape = module.shape();
    if (match_mu_forms(mu, shape, q).empty())
        throw std::invalid_argument("garnir_psi_action: mu does not match any form");
    if (!is_garnir_node(mu, a))
        throw std::invalid_argument("garnir_psi_action: not a Garnir node");
    int x = a.row, y = a.col, e = q.e(), k = shape.k, d = shape.d;

    Tableau tmu = Tableau::row_reading(mu);
    int r = tmu.entry({x, y});
    int s = tmu.entry({x + 1, 1});
    int t = tmu.entry({x + 1, y});
    Permutation sigma = target_tableau(mu, shape).word;

    std::optional<Permutation> cycle;
    if (x <= k && y % e == 0 && y < mu.part(x + 1)) {
        // (t+1, t, ..., s): everything in (s, t+1] slides down, s -> t+1
        std::vector<int> targets(d);
        for (int z = 1; z <= d; ++z) targets[z - 1] = z;
        for (int z = s + 1; z <= t + 1; ++z) targets[z - 1] = z - 1;
        targets[s - 1] = t + 1;
        cycle = Permutation(std::move(targets));
    } else if (x <= k && y % e == 1 && y > 1) {
        // (r, r+1, ..., s): everything in [r, s) slides up, s -> r
        std::vector<int> targets(d);
        for (int z = 1; z <= d; ++z) targets[z - 1] = z;
        for (int z = r; z < s; ++z) targets[z - 1] = z + 1;
        targets[s - 1] = r;
        cycle = Permutation(std::move(targets));
    } else if (x > k && y % e == 0) {
        cycle = Permutation::identity(d);
    }

    HookVector<F> out;
    if (cycle) out.terms[module.index_of(*cycle * sigma)] = field.one();
    return out;
}

/// g^A [sigma^lambda_mu] = C(a_x, f) psi^{T^A} [sigma^lambda_mu], the
/// binomial taken in the field, with f = floor(y/e).
template <CoefficientField F>
HookVector<F> garnir_action(const F& field, const Partition& mu,
                            const HookModule& module, Node a) {
    HookVector<F> psi = garnir_psi_action<F>(field, mu, module, a);
    if (psi.is_zero()) return psi;
    const Quiver& q = module.quiver();
    int x = a.row, y = a.col, e = q.e();
    long f = y / e;
    long ax = (mu.part(x) % e == 0) ? mu.part(x) / e : (mu.part(x) + 1) / e;
    internal_check((mu.part(x) + 1) % e == 0 || mu.part(x) % e == 0,
                   "nonzero garnir action on a row that is not e-aligned");
    auto coeff = field.from_integer(binomial(ax, f));
    HookVector<F> out;
    for (auto& [idx, c] : psi.terms) {
        auto scaled = field.mul(coeff, c);
        if (!field.is_zero(scaled)) out.terms[idx] = scaled;
    }
    return out;
}

} // namespace hookspecht
