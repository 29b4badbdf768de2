#include "hookspecht/hook_module.hpp"

#include "hookspecht/check.hpp"

#include <algorithm>
#include <stdexcept>

namespace hookspecht {

namespace {

// Lift an element of Sh(d-k-1, k) on {1..d-1} through s_i -> s_{i+1}:
// fix 1 and shift everything up by one.
Permutation lift_fixing_one(const Permutation& s) {
    std::vector<int> t(s.degree() + 1);
    t[0] = 1;
    for (int x = 1; x <= s.degree(); ++x) t[x] = s(x) + 1;
    return Permutation(std::move(t));
}

} // namespace

HookModule::HookModule(HookShape shape, const Quiver& q) : shape_(shape), q_(q) {
    Partition lambda = shape_.partition();
    Tableau initial = Tableau::row_reading(lambda);
    initial_weight_ = initial.residue_sequence(q_);

    int d = shape_.d, k = shape_.k;
    for (const Permutation& s : shuffle_reps(d - k - 1, k)) {
        Permutation sigma = lift_fixing_one(s);
        HookBasisElement el;
        el.weight = sigma.act(initial_weight_);
        el.arm.assign(d, 0);
        el.leg.assign(d, 0);
        for (int x = 2; x <= d - k; ++x) el.arm[sigma(x) - 1] = 1;
        for (int x = d - k + 1; x <= d; ++x) el.leg[sigma(x) - 1] = 1;
        el.degree = tableau_degree(act(sigma, initial), q_);
        el.sigma = std::move(sigma);
        index_by_targets_[el.sigma.targets()] = static_cast<int>(basis_.size());
        by_weight_[el.weight].push_back(static_cast<int>(basis_.size()));
        basis_.push_back(std::move(el));
    }
}

int HookModule::index_of(const Permutation& sigma) const {
    auto it = index_by_targets_.find(sigma.targets());
    if (it == index_by_targets_.end())
        throw std::logic_error("permutation is not a hook shuffle");
    return it->second;
}

std::vector<int> HookModule::weight_space(const ResidueSeq& weight) const {
    auto it = by_weight_.find(weight);
    if (it == by_weight_.end()) return {};
    return it->second;
}

std::vector<ResidueSeq> HookModule::weights() const {
    std::vector<ResidueSeq> out;
    out.reserve(by_weight_.size());
    for (const auto& [w, idxs] : by_weight_) out.push_back(w);
    return out;
}

std::optional<int> HookModule::extreme_index(const ResidueSeq& weight) const {
    int d = shape_.d, k = shape_.k;
    if (static_cast<int>(weight.size()) != d) return std::nullopt;
    bool nonzero = by_weight_.count(weight) > 0;
    if (!(weight[0] == q_.make(0))) {
        internal_check(!nonzero, "weight space without leading residue 0");
        return std::nullopt;
    }
    SegmentSpec arm{q_.make(1), d - k - 1, false};
    SegmentSpec leg{q_.make(-1), k, true};
    ResidueSeq tail(weight.begin() + 1, weight.end());
    auto witness = minimal_shuffle(tail, arm, leg, q_);
    internal_check(witness.has_value() == nonzero,
                   "minimal shuffle disagrees with weight-space support");
    if (!witness) return std::nullopt;
    int idx = index_of(lift_fixing_one(witness->minimal));
    // The minimal shuffle is the unique top-degree vector of its weight space.
    for (int other : weight_space(weight))
        internal_check(other == idx || basis_[other].degree < basis_[idx].degree,
                       "extreme vector is not the unique top-degree element");
    return idx;
}

std::optional<HookModule::Term> HookModule::y_action(int r, int idx) const {
    int d = shape_.d;
    if (r < 1 || r > d) throw std::invalid_argument("y_r: r out of range");
    const HookBasisElement& el = basis_.at(idx);
    const ResidueSeq& i = el.weight;
    if (r + 1 <= d && i[r - 1] == i[r] && el.leg[r - 1] && el.arm[r])
        return Term{index_of(Permutation::simple(d, r) * el.sigma), -1};
    if (r >= 2 && i[r - 2] == i[r - 1] && el.leg[r - 2] && el.arm[r - 1])
        return Term{index_of(Permutation::simple(d, r - 1) * el.sigma), +1};
    return std::nullopt;
}

std::optional<HookModule::Term> HookModule::psi_action(int r, int idx) const {
    int d = shape_.d;
    if (r < 1 || r > d - 1) throw std::invalid_argument("psi_r: r out of range");
    const HookBasisElement& el = basis_.at(idx);
    const ResidueSeq& i = el.weight;
    auto arm = [&](int p) { return p >= 1 && p <= d && el.arm[p - 1]; };
    auto leg = [&](int p) { return p >= 1 && p <= d && el.leg[p - 1]; };
    auto s = [&](int m) { return Permutation::simple(d, m); };
    Residue ir = i[r - 1], ir1 = i[r];

    // One row per arm/leg configuration of the strands at r, r+1; the residue
    // patterns make the rows mutually exclusive.
    if ((arm(r) && leg(r + 1)) || q_.unrelated(ir, ir1))
        return Term{index_of(s(r) * el.sigma), +1};
    if (leg(r) && arm(r + 1)) {
        if (ir1 == q_.shift(ir, -1) && arm(r + 2))
            return Term{index_of(s(r + 1) * s(r) * el.sigma), +1};
        if (ir1 == q_.shift(ir, +1) && leg(r - 1))
            return Term{index_of(s(r - 1) * s(r) * el.sigma), -1};
        return std::nullopt;
    }
    if (arm(r) && arm(r + 1)) {
        if (leg(r - 1) && i[r - 2] == ir)
            return Term{index_of(s(r) * s(r - 1) * el.sigma), +1};
        return std::nullopt;
    }
    if (leg(r) && leg(r + 1)) {
        if (arm(r + 2) && ir1 == i[r + 1])
            return Term{index_of(s(r) * s(r + 1) * el.sigma), -1};
        return std::nullopt;
    }
    return std::nullopt;
}

ZVector HookModule::act_e(const ResidueSeq& j, const ZVector& v) const {
    ZVector out;
    for (const auto& [idx, c] : v)
        if (basis_[idx].weight == j) out[idx] = c;
    return out;
}

namespace {

void accumulate(ZVector& out, int idx, const BigInt& c) {
    auto it = out.find(idx);
    if (it == out.end()) {
        if (c != 0) out[idx] = c;
    } else {
        it->second += c;
        if (it->second == 0) out.erase(it);
    }
}

} // namespace

ZVector HookModule::act_y(int r, const ZVector& v) const {
    ZVector out;
    for (const auto& [idx, c] : v)
        if (auto t = y_action(r, idx)) accumulate(out, t->index, t->sign > 0 ? c : -c);
    return out;
}

ZVector HookModule::act_psi(int r, const ZVector& v) const {
    ZVector out;
    for (const auto& [idx, c] : v)
        if (auto t = psi_action(r, idx)) accumulate(out, t->index, t->sign > 0 ? c : -c);
    return out;
}

ZVector HookModule::act_token(const GenToken& token, const ZVector& v) const {
    switch (token.kind) {
        case GenToken::Kind::E: return act_e(token.weight, v);
        case GenToken::Kind::Y: return act_y(token.r, v);
        case GenToken::Kind::Psi: return act_psi(token.r, v);
    }
    throw std::invalid_argument("malformed generator token");
}

ZVector HookModule::act_word(const TokenWord& word, const ZVector& v) const {
    ZVector cur = v;
    for (auto it = word.rbegin(); it != word.rend(); ++it) cur = act_token(*it, cur);
    return cur;
}

} // namespace hookspecht
