#pragma once

#include "hookspecht/quiver.hpp"

#include <string>
#include <vector>

namespace hookspecht {

/// Multiplicities of each residue class in a set of nodes; the vector is
/// indexed by residue value and always has length e.
struct RootContent {
    std::vector<long> multiplicity;

    long height() const {
        long h = 0;
        for (long m : multiplicity) h += m;
        return h;
    }
    bool operator==(const RootContent&) const = default;
};

/// A partition: weakly decreasing sequence of positive integers.
/// The empty partition is allowed.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    static Partition parse(const std::string& text);
    std::string to_string() const;

    const std::vector<int>& parts() const { return parts_; }
    int num_parts() const { return static_cast<int>(parts_.size()); }
    int part(int row) const; // 1-indexed; 0 beyond the last row
    int d() const { return d_; }
    bool empty() const { return parts_.empty(); }

    bool contains(Node a) const {
        return a.row >= 1 && a.col >= 1 && a.col <= part(a.row);
    }

    /// Nodes in row-reading order (left to right, top to bottom).
    std::vector<Node> nodes() const;

    Partition conjugate() const;

    RootContent content(const Quiver& q) const;

    /// Removable i-nodes and addable i-nodes, each ordered by row.
    std::pair<std::vector<Node>, std::vector<Node>>
    removable_addable(Residue i, const Quiver& q) const;

    std::vector<Node> removable_nodes() const;
    std::vector<Node> addable_nodes() const;

    Partition remove(Node a) const;

    bool operator==(const Partition&) const = default;
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

private:
    std::vector<int> parts_;
    int d_ = 0;
};

/// All partitions of d, in lexicographically decreasing part order.
std::vector<Partition> partitions_of(int d);

} // namespace hookspecht
