#pragma once

#include <compare>
#include <stdexcept>
#include <vector>

namespace hookspecht {

/// A node (row, col) of a Young diagram, 1-indexed, rows growing downward.
struct Node {
    int row = 0;
    int col = 0;
    auto operator<=>(const Node&) const = default;
};

/// Residue in Z/eZ; the modulus lives in Quiver.
struct Residue {
    int v = 0;
    auto operator<=>(const Residue&) const = default;
};

using ResidueSeq = std::vector<Residue>;

/// Quiver data of type A^(1)_{e-1}: the quantum characteristic e >= 3,
/// residues of nodes, and the Cartan pairing a_{ij}.
class Quiver {
public:
    explicit Quiver(int e) : e_(e) {
        if (e < 3)
            throw std::invalid_argument("quantum characteristic must be >= 3");
    }

    int e() const { return e_; }

    Residue residue(Node a) const { return make((a.col - a.row) % e_); }

    Residue make(int v) const { return Residue{((v % e_) + e_) % e_}; }

    Residue shift(Residue r, int by) const { return make(r.v + by); }

    // a_{ij}: 2 on the diagonal, -1 for neighbours i +- 1, 0 otherwise.
    // Valid for e >= 3 (no double bonds).
    int cartan(Residue i, Residue j) const {
        if (i == j) return 2;
        if (j == shift(i, 1) || j == shift(i, -1)) return -1;
        return 0;
    }

    bool adjacent(Residue i, Residue j) const { return cartan(i, j) == -1; }
    bool unrelated(Residue i, Residue j) const { return cartan(i, j) == 0; }

private:
    int e_;
};

} // namespace hookspecht
