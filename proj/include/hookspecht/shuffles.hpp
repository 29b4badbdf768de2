#pragma once

#include "hookspecht/permutation.hpp"
#include "hookspecht/quiver.hpp"

#include <optional>
#include <vector>

namespace hookspecht {

/// A residue segment: S+(i,a) = (i, i+1, ..., i+a-1) or
/// S-(k,b) = (k, k-1, ..., k-b+1).
struct SegmentSpec {
    Residue start;
    int length = 0;
    bool decreasing = false;

    ResidueSeq residues(const Quiver& q) const {
        ResidueSeq out;
        out.reserve(length);
        for (int j = 0; j < length; ++j)
            out.push_back(q.shift(start, decreasing ? -j : j));
        return out;
    }
};

/// Result of a successful minimal-shuffle search for a weight i: the unique
/// shortest sigma with sigma.(S+ S-) = i, together with the stabilizer
/// generators { s_m : s_m i = i }. The full fibre Sh(i; S+, S-) is the coset
/// { h sigma : h in H(i) }, of size 2^(#generators).
struct ShuffleWitness {
    ResidueSeq weight;
    Permutation minimal;
    std::vector<int> stabilizer_generators;

    /// All elements h sigma, one per subset of the stabilizer generators.
    /// The generators commute (no weight in a two-segment shuffle has three
    /// equal adjacent letters), so subsets enumerate H(i) bijectively.
    std::vector<Permutation> coset() const;
};

/// All C(a+b, a) elements of Sh(a,b): permutations increasing on the first a
/// positions and on the last b positions.
std::vector<Permutation> shuffle_reps(int a, int b);

/// Minimal-length element of Sh(target; S+, S-), by the stripping recursion
/// on the last letter. Absent when target is not a shuffle of the segments.
/// Throws when the segment lengths do not sum to |target|.
std::optional<ShuffleWitness> minimal_shuffle(const ResidueSeq& target,
                                              const SegmentSpec& plus,
                                              const SegmentSpec& minus,
                                              const Quiver& q);

} // namespace hookspecht
