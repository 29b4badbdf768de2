#include "hookspecht/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hookspecht {

Permutation::Permutation(std::vector<int> targets) : targets_(std::move(targets)) {
    std::vector<char> seen(targets_.size(), 0);
    for (int t : targets_) {
        if (t < 1 || t > degree() || seen[t - 1])
            throw std::invalid_argument("not a permutation of 1..d");
        seen[t - 1] = 1;
    }
}

Permutation Permutation::identity(int d) {
    std::vector<int> t(d);
    std::iota(t.begin(), t.end(), 1);
    return Permutation(std::move(t));
}

Permutation Permutation::simple(int d, int r) {
    if (r < 1 || r >= d) throw std::invalid_argument("simple transposition out of range");
    Permutation w = identity(d);
    std::swap(w.targets_[r - 1], w.targets_[r]);
    return w;
}

Permutation Permutation::transposition(int d, int a, int b) {
    Permutation w = identity(d);
    std::swap(w.targets_[a - 1], w.targets_[b - 1]);
    return w;
}

Permutation Permutation::from_word(int d, const std::vector<int>& word) {
    Permutation w = identity(d);
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        w = simple(d, *it) * w;
    return w;
}

bool Permutation::is_identity() const {
    for (int x = 1; x <= degree(); ++x)
        if (targets_[x - 1] != x) return false;
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<int> t(targets_.size());
    for (int x = 1; x <= degree(); ++x) t[targets_[x - 1] - 1] = x;
    return Permutation(std::move(t));
}

Permutation operator*(const Permutation& u, const Permutation& v) {
    if (u.degree() != v.degree())
        throw std::invalid_argument("degree mismatch in permutation product");
    std::vector<int> t(u.degree());
    for (int x = 1; x <= u.degree(); ++x) t[x - 1] = u(v(x));
    return Permutation(std::move(t));
}

long Permutation::length() const {
    long inv = 0;
    for (int i = 0; i < degree(); ++i)
        for (int j = i + 1; j < degree(); ++j)
            if (targets_[i] > targets_[j]) ++inv;
    return inv;
}

std::vector<int> Permutation::canonical_word() const {
    std::vector<int> line = targets_;
    std::vector<int> swaps;
    for (int v = degree(); v >= 1; --v) {
        int pos = static_cast<int>(std::find(line.begin(), line.end(), v) - line.begin()) + 1;
        while (pos < v) {
            std::swap(line[pos - 1], line[pos]);
            swaps.push_back(pos);
            ++pos;
        }
    }
    std::reverse(swaps.begin(), swaps.end());
    return swaps;
}

ResidueSeq Permutation::act(const ResidueSeq& seq) const {
    if (static_cast<int>(seq.size()) != degree())
        throw std::invalid_argument("sequence length mismatch in place permutation");
    ResidueSeq out(seq.size());
    for (int r = 1; r <= degree(); ++r) out[targets_[r - 1] - 1] = seq[r - 1];
    return out;
}

} // namespace hookspecht
