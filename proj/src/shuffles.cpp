#include "hookspecht/shuffles.hpp"

#include "hookspecht/check.hpp"

#include <algorithm>
#include <stdexcept>

namespace hookspecht {

std::vector<Permutation> ShuffleWitness::coset() const {
    int d = minimal.degree();
    std::vector<Permutation> out;
    std::size_t n = stabilizer_generators.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        Permutation h = Permutation::identity(d);
        for (std::size_t bit = 0; bit < n; ++bit)
            if (mask & (std::size_t{1} << bit))
                h = h * Permutation::simple(d, stabilizer_generators[bit]);
        out.push_back(h * minimal);
    }
    return out;
}

std::vector<Permutation> shuffle_reps(int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("shuffle_reps: negative block size");
    int d = a + b;
    std::vector<Permutation> out;
    std::vector<int> pick(a);
    // lexicographic a-subsets of {1..d} as the arm targets
    for (int i = 0; i < a; ++i) pick[i] = i + 1;
    while (true) {
        std::vector<int> targets(d);
        std::vector<char> used(d + 1, 0);
        for (int i = 0; i < a; ++i) {
            targets[i] = pick[i];
            used[pick[i]] = 1;
        }
        int pos = a;
        for (int v = 1; v <= d; ++v)
            if (!used[v]) targets[pos++] = v;
        out.push_back(Permutation(std::move(targets)));
        if (a == 0) break;
        int i = a - 1;
        while (i >= 0 && pick[i] == d - (a - 1 - i)) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < a; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
}

namespace {

// One step of the proof's recursion. jp and km are the remaining segment
// letters; i is the remaining target weight.
std::optional<Permutation> minimal_rec(const ResidueSeq& i, const ResidueSeq& jp,
                                       const ResidueSeq& km, const Quiver& q) {
    int a = static_cast<int>(jp.size());
    int b = static_cast<int>(km.size());
    int d = a + b;
    if (a == 0 || b == 0) {
        const ResidueSeq& whole = (a == 0) ? km : jp;
        if (i == whole) return Permutation::identity(d);
        return std::nullopt;
    }

    Residue last = i[d - 1];
    Residue prev = i[d - 2];
    bool ends_differ = !(jp.back() == km.back());
    bool case1 = last == jp.back() && (ends_differ || prev == q.shift(last, -1));
    bool case2 = last == km.back() && (ends_differ || prev == q.shift(last, +1));
    bool case3 = last == prev && last == jp.back() && jp.back() == km.back();
    // Cases 1 and 2 can only collide when e = 2; unreachable here.
    internal_check(!(case1 && case2), "shuffle recursion case overlap");

    if (case3) {
        ResidueSeq i2(i.begin(), i.end() - 2);
        ResidueSeq jp2(jp.begin(), jp.end() - 1);
        ResidueSeq km2(km.begin(), km.end() - 1);
        auto sub = minimal_rec(i2, jp2, km2, q);
        if (!sub) return std::nullopt;
        // Shorter lift: last arm letter to position d-1, last leg letter to d.
        std::vector<int> t(d);
        for (int r = 1; r < a; ++r) t[r - 1] = (*sub)(r);
        t[a - 1] = d - 1;
        for (int r = a + 1; r < d; ++r) t[r - 1] = (*sub)(r - 1);
        t[d - 1] = d;
        return Permutation(std::move(t));
    }
    if (case1) {
        ResidueSeq i2(i.begin(), i.end() - 1);
        ResidueSeq jp2(jp.begin(), jp.end() - 1);
        auto sub = minimal_rec(i2, jp2, km, q);
        if (!sub) return std::nullopt;
        std::vector<int> t(d);
        for (int r = 1; r < a; ++r) t[r - 1] = (*sub)(r);
        t[a - 1] = d;
        for (int r = a + 1; r <= d; ++r) t[r - 1] = (*sub)(r - 1);
        return Permutation(std::move(t));
    }
    if (case2) {
        ResidueSeq i2(i.begin(), i.end() - 1);
        ResidueSeq km2(km.begin(), km.end() - 1);
        auto sub = minimal_rec(i2, jp, km2, q);
        if (!sub) return std::nullopt;
        std::vector<int> t(d);
        for (int r = 1; r < d; ++r) t[r - 1] = (*sub)(r);
        t[d - 1] = d;
        return Permutation(std::move(t));
    }
    return std::nullopt;
}

} // namespace

std::optional<ShuffleWitness> minimal_shuffle(const ResidueSeq& target,
                                              const SegmentSpec& plus,
                                              const SegmentSpec& minus,
                                              const Quiver& q) {
    if (plus.decreasing || !minus.decreasing)
        throw std::invalid_argument("minimal_shuffle: segment directions");
    if (plus.length + minus.length != static_cast<int>(target.size()))
        throw std::invalid_argument("minimal_shuffle: segment lengths do not sum to |target|");
    auto sigma = minimal_rec(target, plus.residues(q), minus.residues(q), q);
    if (!sigma) return std::nullopt;
    ShuffleWitness w;
    w.weight = target;
    w.minimal = *sigma;
    for (int m = 1; m + 1 <= static_cast<int>(target.size()); ++m)
        if (target[m - 1] == target[m]) w.stabilizer_generators.push_back(m);
    return w;
}

} // namespace hookspecht
