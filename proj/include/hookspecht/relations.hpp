#pragma once

#include "hookspecht/check.hpp"
#include "hookspecht/fields.hpp"
#include "hookspecht/hook_module.hpp"

#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace hookspecht {

/// Outcome of running the defining-relation suite over one or more modules:
/// per-family counts of checked identities and any failures.
struct RelationReport {
    std::map<std::string, long> checked;
    std::map<std::string, long> failed;
    std::vector<std::string> failures;

    bool ok() const {
        for (const auto& [family, count] : failed)
            if (count > 0) return false;
        return true;
    }

    void merge(const RelationReport& other) {
        for (const auto& [f, c] : other.checked) checked[f] += c;
        for (const auto& [f, c] : other.failed) failed[f] += c;
        failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    }
};

namespace detail {

template <CoefficientField F>
bool vectors_equal(const F& field, const HookVector<F>& a, const HookVector<F>& b) {
    if (a.terms.size() != b.terms.size()) return false;
    auto it = b.terms.begin();
    for (const auto& [idx, c] : a.terms) {
        if (it->first != idx || !field.eq(it->second, c)) return false;
        ++it;
    }
    return true;
}

template <CoefficientField F>
HookVector<F> vec_add(const F& field, const HookVector<F>& a, const HookVector<F>& b) {
    HookVector<F> out = a;
    for (const auto& [idx, c] : b.terms) {
        auto it = out.terms.find(idx);
        if (it == out.terms.end()) {
            if (!field.is_zero(c)) out.terms[idx] = c;
        } else {
            it->second = field.add(it->second, c);
            if (field.is_zero(it->second)) out.terms.erase(it);
        }
    }
    return out;
}

template <CoefficientField F>
HookVector<F> vec_neg(const F& field, const HookVector<F>& a) {
    HookVector<F> out;
    for (const auto& [idx, c] : a.terms) out.terms[idx] = field.neg(c);
    return out;
}

} // namespace detail

/// Check every defining relation of the KLR algebra as an operator identity
/// on every basis vector of the given hook module.
template <CoefficientField F>
RelationReport check_klr_relations(const HookModule& m, const F& field) {
    using detail::vec_add;
    using detail::vec_neg;
    using detail::vectors_equal;
    const Quiver& q = m.quiver();
    int d = m.shape().d;
    RelationReport report;

    auto note = [&](const std::string& family, bool ok, int idx, int r, int s) {
        report.checked[family] += 1;
        if (!ok) {
            report.failed[family] += 1;
            std::ostringstream msg;
            msg << family << " failed on basis " << idx << " (d=" << d
                << ", k=" << m.shape().k << ", e=" << q.e()
                << ", char=" << field.characteristic() << ", r=" << r << ", s=" << s << ")";
            report.failures.push_back(msg.str());
        }
    };

    std::vector<ResidueSeq> weights = m.weights();

    for (int idx = 0; idx < m.dimension(); ++idx) {
        const HookBasisElement& el = m.element(idx);
        const ResidueSeq& i = el.weight;
        HookVector<F> u;
        u.terms[idx] = field.one();
        HookVector<F> zero;

        // idempotents: e(j)e(j') = delta e(j), and the weight projections
        // resolve the identity on the module
        {
            HookVector<F> sum;
            for (const ResidueSeq& j : weights) {
                HookVector<F> ej = m.act_e(field, j, u);
                sum = vec_add(field, sum, ej);
                bool expect = j == i;
                note("idempotents", vectors_equal(field, ej, expect ? u : zero), idx, 0, 0);
                for (const ResidueSeq& j2 : weights) {
                    HookVector<F> both = m.act_e(field, j, m.act_e(field, j2, u));
                    note("idempotents",
                         vectors_equal(field, both, (j == j2 && j == i) ? u : zero), idx, 0, 0);
                }
            }
            note("idempotents", vectors_equal(field, sum, u), idx, 0, 0);
        }

        // weight and degree bookkeeping of single generators
        for (int r = 1; r <= d; ++r) {
            HookVector<F> yu = m.act_y(field, r, u);
            for (const auto& [tid, c] : yu.terms) {
                note("weight", m.element(tid).weight == i, idx, r, 0);
                note("grading", m.element(tid).degree == el.degree + 2, idx, r, 0);
            }
        }
        for (int r = 1; r <= d - 1; ++r) {
            HookVector<F> pu = m.act_psi(field, r, u);
            ResidueSeq si = Permutation::simple(d, r).act(i);
            int expected_degree = el.degree - q.cartan(i[r - 1], i[r]);
            for (const auto& [tid, c] : pu.terms) {
                note("weight", m.element(tid).weight == si, idx, r, 0);
                note("grading", m.element(tid).degree == expected_degree, idx, r, 0);
            }
            // psi_r e(i) = e(s_r i) psi_r
            note("e-psi", vectors_equal(field, pu, m.act_e(field, si, pu)), idx, r, 0);
        }

        // commutations
        for (int r = 1; r <= d; ++r) {
            HookVector<F> yr = m.act_y(field, r, u);
            note("e-y", vectors_equal(field, yr, m.act_e(field, i, yr)), idx, r, 0);
            for (int s = r + 1; s <= d; ++s)
                note("y-y", vectors_equal(field, m.act_y(field, r, m.act_y(field, s, u)),
                                          m.act_y(field, s, m.act_y(field, r, u))),
                     idx, r, s);
        }
        for (int r = 1; r <= d - 1; ++r) {
            for (int s = 1; s <= d; ++s) {
                if (s == r || s == r + 1) continue;
                note("psi-y distant",
                     vectors_equal(field, m.act_psi(field, r, m.act_y(field, s, u)),
                                   m.act_y(field, s, m.act_psi(field, r, u))),
                     idx, r, s);
            }
            for (int s = r + 2; s <= d - 1; ++s)
                note("psi-psi distant",
                     vectors_equal(field, m.act_psi(field, r, m.act_psi(field, s, u)),
                                   m.act_psi(field, s, m.act_psi(field, r, u))),
                     idx, r, s);
        }

        // y_{r+1} psi_r = psi_r y_r + delta_{i_r, i_{r+1}};
        // y_r psi_r = psi_r y_{r+1} - delta_{i_r, i_{r+1}}
        for (int r = 1; r <= d - 1; ++r) {
            bool same = i[r - 1] == i[r];
            HookVector<F> lhs = m.act_y(field, r + 1, m.act_psi(field, r, u));
            HookVector<F> rhs = m.act_psi(field, r, m.act_y(field, r, u));
            if (same) rhs = vec_add(field, rhs, u);
            note("psi-y interchange", vectors_equal(field, lhs, rhs), idx, r, 0);

            lhs = m.act_y(field, r, m.act_psi(field, r, u));
            rhs = m.act_psi(field, r, m.act_y(field, r + 1, u));
            if (same) rhs = vec_add(field, rhs, vec_neg(field, u));
            note("psi-y interchange", vectors_equal(field, lhs, rhs), idx, r, 0);
        }

        // quadratic: psi_r^2 e(i) by the adjacency of i_r, i_{r+1}
        for (int r = 1; r <= d - 1; ++r) {
            HookVector<F> lhs = m.act_psi(field, r, m.act_psi(field, r, u));
            HookVector<F> rhs;
            Residue ir = i[r - 1], ir1 = i[r];
            if (ir == ir1) {
                // zero
            } else if (q.unrelated(ir, ir1)) {
                rhs = u;
            } else if (ir1 == q.shift(ir, +1)) {
                rhs = vec_add(field, m.act_y(field, r, u),
                              vec_neg(field, m.act_y(field, r + 1, u)));
            } else {
                rhs = vec_add(field, m.act_y(field, r + 1, u),
                              vec_neg(field, m.act_y(field, r, u)));
            }
            note("quadratic", vectors_equal(field, lhs, rhs), idx, r, 0);
        }

        // braid: psi_{r+1} psi_r psi_{r+1} - psi_r psi_{r+1} psi_r
        //        = delta_{i_r, i_{r+2}} (+-1 by the step of i_{r+1})
        for (int r = 1; r <= d - 2; ++r) {
            auto psi = [&](int t, const HookVector<F>& v) { return m.act_psi(field, t, v); };
            HookVector<F> lhs = psi(r + 1, psi(r, psi(r + 1, u)));
            lhs = vec_add(field, lhs, vec_neg(field, psi(r, psi(r + 1, psi(r, u)))));
            HookVector<F> rhs;
            if (i[r - 1] == i[r + 1]) {
                if (i[r] == q.shift(i[r - 1], +1))
                    rhs = u;
                else if (i[r] == q.shift(i[r - 1], -1))
                    rhs = vec_neg(field, u);
            }
            note("braid", vectors_equal(field, lhs, rhs), idx, r, 0);
        }
    }
    return report;
}

/// Run the relation suite for every hook with d <= dmax, every e in e_list,
/// and every characteristic in chars (0 meaning the rationals).
RelationReport check_klr_relations_all(int dmax, const std::vector<int>& e_list,
                                       const std::vector<long>& chars);

} // namespace hookspecht
