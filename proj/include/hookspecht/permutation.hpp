#pragma once

#include "hookspecht/quiver.hpp"

#include <vector>

namespace hookspecht {

/// An element of the symmetric group on {1..d}, stored in one-line notation.
/// Reduced words use the fixed canonical form produced by canonical_word(),
/// so everything downstream that depends on a word choice is deterministic.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> targets);

    static Permutation identity(int d);
    static Permutation simple(int d, int r); // s_r = (r, r+1)
    static Permutation transposition(int d, int a, int b);
    /// Product s_{word[0]} s_{word[1]} ... evaluated right-to-left.
    static Permutation from_word(int d, const std::vector<int>& word);

    int degree() const { return static_cast<int>(targets_.size()); }
    int operator()(int x) const { return targets_[x - 1]; }
    const std::vector<int>& targets() const { return targets_; }

    bool is_identity() const;
    Permutation inverse() const;
    /// Composition of maps: (u * v)(x) = u(v(x)).
    friend Permutation operator*(const Permutation& u, const Permutation& v);

    long length() const; // inversion count

    /// Canonical reduced word: sort the one-line notation to the identity by
    /// moving the largest misplaced value right with adjacent swaps; the word
    /// is the reversed swap sequence. Length always equals the inversion count.
    std::vector<int> canonical_word() const;

    /// Place permutation action on sequences: (w . i)_{w(r)} = i_r.
    ResidueSeq act(const ResidueSeq& seq) const;

    bool operator==(const Permutation&) const = default;
    bool operator<(const Permutation& o) const { return targets_ < o.targets_; }

private:
    std::vector<int> targets_;
};

} // namespace hookspecht
