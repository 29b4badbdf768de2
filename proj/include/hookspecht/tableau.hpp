#pragma once

#include "hookspecht/partition.hpp"
#include "hookspecht/permutation.hpp"

#include <vector>

namespace hookspecht {

/// A bijective filling of the diagram of a partition by 1..d.
class Tableau {
public:
    Tableau() = default;
    Tableau(Partition shape, std::vector<std::vector<int>> rows);

    /// T^mu: 1..d written left to right along successive rows.
    static Tableau row_reading(const Partition& shape);

    const Partition& shape() const { return shape_; }
    int d() const { return shape_.d(); }
    int entry(Node a) const { return rows_[a.row - 1][a.col - 1]; }
    Node node_of(int value) const { return node_of_[value - 1]; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }

    bool is_row_strict() const;
    bool is_standard() const;

    ResidueSeq residue_sequence(const Quiver& q) const;

    /// Row-reading word: entries concatenated along successive rows.
    std::vector<int> reading_word() const;

    bool operator==(const Tableau&) const = default;

private:
    Partition shape_;
    std::vector<std::vector<int>> rows_;
    std::vector<Node> node_of_;
};

/// d_A(mu): addable minus removable res(A)-nodes strictly below the removable
/// node A.
int removal_degree(const Partition& mu, Node a, const Quiver& q);

/// Degree of a standard tableau, by the recursion anchored at the node of d.
/// For T^mu this equals the closed form sum_x floor(mu_x / e).
int tableau_degree(const Tableau& t, const Quiver& q);

/// w^T, defined by w^T T^mu = T. Only invoked on standard tableaux.
Permutation tableau_word(const Tableau& t);

/// Apply w to the entries of t.
Tableau act(const Permutation& w, const Tableau& t);

/// All standard tableaux of the given shape, sorted by reading word.
std::vector<Tableau> standard_tableaux(const Partition& shape);

} // namespace hookspecht
