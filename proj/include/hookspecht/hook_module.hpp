#pragma once

#include "hookspecht/arith.hpp"
#include "hookspecht/fields.hpp"
#include "hookspecht/partition.hpp"
#include "hookspecht/permutation.hpp"
#include "hookspecht/quiver.hpp"
#include "hookspecht/shuffles.hpp"
#include "hookspecht/tableau.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hookspecht {

/// The hook lambda = (d-k, 1^k); k <= d-1 so the first row is nonempty.
struct HookShape {
    int d = 1;
    int k = 0;

    HookShape(int d_, int k_) : d(d_), k(k_) {
        if (d < 1 || k < 0 || k > d - 1)
            throw std::invalid_argument("hook shape requires d >= 1 and 0 <= k <= d-1");
    }

    Partition partition() const {
        std::vector<int> parts{d - k};
        parts.insert(parts.end(), k, 1);
        return Partition(std::move(parts));
    }
};

/// One basis vector [sigma] of the hook module: sigma fixes 1 and shuffles the
/// arm strands 2..d-k with the leg strands d-k+1..d. Keyed by sigma's one-line
/// notation, which makes equality canonical.
struct HookBasisElement {
    Permutation sigma;
    ResidueSeq weight;       // sigma . i^lambda
    std::vector<char> arm;   // arm[r-1]: position r holds an arm strand
    std::vector<char> leg;
    int degree = 0;          // tableau degree of sigma T^lambda
};

/// Generator tokens for formal words in the KLR generators.
struct GenToken {
    enum class Kind { E, Y, Psi };
    Kind kind = Kind::Y;
    int r = 0;          // for Y (1..d) and Psi (1..d-1)
    ResidueSeq weight;  // for E

    static GenToken e(ResidueSeq w) { return {Kind::E, 0, std::move(w)}; }
    static GenToken y(int r) { return {Kind::Y, r, {}}; }
    static GenToken psi(int r) { return {Kind::Psi, r, {}}; }
};

using TokenWord = std::vector<GenToken>;

/// Sparse integer combination of basis elements, indexed into HookModule's
/// basis order. All single-generator actions have integer matrices, so module
/// arithmetic happens over Z and is reduced into a coefficient field at the
/// edges.
using ZVector = std::map<int, BigInt>;

/// Sparse vector over a coefficient field.
template <CoefficientField F>
struct HookVector {
    std::map<int, typename F::Elem> terms;

    bool is_zero() const { return terms.empty(); }
};

/// S^lambda for a hook lambda, with its shuffle basis and the explicit action
/// of every KLR generator on it.
class HookModule {
public:
    HookModule(HookShape shape, const Quiver& q);

    const HookShape& shape() const { return shape_; }
    const Quiver& quiver() const { return q_; }
    int dimension() const { return static_cast<int>(basis_.size()); }
    const std::vector<HookBasisElement>& basis() const { return basis_; }
    const HookBasisElement& element(int idx) const { return basis_.at(idx); }
    const ResidueSeq& initial_weight() const { return initial_weight_; }

    int index_of(const Permutation& sigma) const;
    std::vector<int> weight_space(const ResidueSeq& weight) const;
    std::vector<ResidueSeq> weights() const;

    /// The unique maximal-degree basis element of a weight space, located via
    /// the minimal shuffle of the arm and leg residue segments. Absent when
    /// the weight space is zero.
    std::optional<int> extreme_index(const ResidueSeq& weight) const;

    // Single-basis-element generator actions; at most one output term, with
    // coefficient +-1. Results are indices into basis().
    struct Term {
        int index;
        int sign;
    };
    std::optional<Term> y_action(int r, int idx) const;
    std::optional<Term> psi_action(int r, int idx) const;

    ZVector act_e(const ResidueSeq& j, const ZVector& v) const;
    ZVector act_y(int r, const ZVector& v) const;
    ZVector act_psi(int r, const ZVector& v) const;
    ZVector act_token(const GenToken& token, const ZVector& v) const;
    /// Right-to-left composition: the last token applies first.
    ZVector act_word(const TokenWord& word, const ZVector& v) const;

    template <CoefficientField F>
    HookVector<F> reduce(const F& field, const ZVector& v) const {
        HookVector<F> out;
        for (const auto& [idx, c] : v) {
            auto e = field.from_integer(c);
            if (!field.is_zero(e)) out.terms[idx] = e;
        }
        return out;
    }

    template <CoefficientField F>
    HookVector<F> act_e(const F& field, const ResidueSeq& j, const HookVector<F>& v) const {
        HookVector<F> out;
        for (const auto& [idx, c] : v.terms)
            if (basis_[idx].weight == j) out.terms[idx] = c;
        return out;
    }

    template <CoefficientField F>
    HookVector<F> act_y(const F& field, int r, const HookVector<F>& v) const {
        return apply_linear<F>(field, v, [&](int idx) { return y_action(r, idx); });
    }

    template <CoefficientField F>
    HookVector<F> act_psi(const F& field, int r, const HookVector<F>& v) const {
        return apply_linear<F>(field, v, [&](int idx) { return psi_action(r, idx); });
    }

    template <CoefficientField F>
    HookVector<F> act_word(const F& field, const TokenWord& word,
                           const HookVector<F>& v) const {
        HookVector<F> cur = v;
        for (auto it = word.rbegin(); it != word.rend(); ++it) {
            switch (it->kind) {
                case GenToken::Kind::E: cur = act_e(field, it->weight, cur); break;
                case GenToken::Kind::Y: cur = act_y(field, it->r, cur); break;
                case GenToken::Kind::Psi: cur = act_psi(field, it->r, cur); break;
            }
        }
        return cur;
    }

private:
    template <CoefficientField F, typename Single>
    HookVector<F> apply_linear(const F& field, const HookVector<F>& v,
                               Single&& single) const {
        HookVector<F> out;
        for (const auto& [idx, c] : v.terms) {
            auto t = single(idx);
            if (!t) continue;
            auto add = t->sign > 0 ? c : field.neg(c);
            auto it = out.terms.find(t->index);
            if (it == out.terms.end()) {
                if (!field.is_zero(add)) out.terms[t->index] = add;
            } else {
                it->second = field.add(it->second, add);
                if (field.is_zero(it->second)) out.terms.erase(it);
            }
        }
        return out;
    }

    HookShape shape_;
    Quiver q_;
    std::vector<HookBasisElement> basis_;
    ResidueSeq initial_weight_;
    std::map<std::vector<int>, int> index_by_targets_;
    std::map<ResidueSeq, std::vector<int>> by_weight_;
};

} // namespace hookspecht
