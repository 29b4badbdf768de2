#include "hookspecht/tableau.hpp"

#include <algorithm>
#include <stdexcept>

namespace hookspecht {

Tableau::Tableau(Partition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
    if (static_cast<int>(rows_.size()) != shape_.num_parts())
        throw std::invalid_argument("tableau rows do not match shape");
    node_of_.assign(shape_.d(), Node{});
    std::vector<char> seen(shape_.d(), 0);
    for (int r = 1; r <= shape_.num_parts(); ++r) {
        if (static_cast<int>(rows_[r - 1].size()) != shape_.part(r))
            throw std::invalid_argument("tableau row length does not match shape");
        for (int c = 1; c <= shape_.part(r); ++c) {
            int v = rows_[r - 1][c - 1];
            if (v < 1 || v > shape_.d() || seen[v - 1])
                throw std::invalid_argument("tableau entries must be a bijection with 1..d");
            seen[v - 1] = 1;
            node_of_[v - 1] = Node{r, c};
        }
    }
}

Tableau Tableau::row_reading(const Partition& shape) {
    std::vector<std::vector<int>> rows;
    int next = 1;
    for (int r = 1; r <= shape.num_parts(); ++r) {
        std::vector<int> row(shape.part(r));
        for (int& v : row) v = next++;
        rows.push_back(std::move(row));
    }
    return Tableau(shape, std::move(rows));
}

bool Tableau::is_row_strict() const {
    for (const auto& row : rows_)
        for (std::size_t c = 1; c < row.size(); ++c)
            if (row[c - 1] >= row[c]) return false;
    return true;
}

bool Tableau::is_standard() const {
    if (!is_row_strict()) return false;
    for (int r = 2; r <= shape_.num_parts(); ++r)
        for (int c = 1; c <= shape_.part(r); ++c)
            if (entry({r - 1, c}) >= entry({r, c})) return false;
    return true;
}

ResidueSeq Tableau::residue_sequence(const Quiver& q) const {
    ResidueSeq out(d());
    for (int v = 1; v <= d(); ++v) out[v - 1] = q.residue(node_of(v));
    return out;
}

std::vector<int> Tableau::reading_word() const {
    std::vector<int> out;
    out.reserve(d());
    for (const auto& row : rows_) out.insert(out.end(), row.begin(), row.end());
    return out;
}

int removal_degree(const Partition& mu, Node a, const Quiver& q) {
    auto removable = mu.removable_nodes();
    if (std::find(removable.begin(), removable.end(), a) == removable.end())
        throw std::invalid_argument("removal_degree: node is not removable");
    Residue i = q.residue(a);
    auto [rem, add] = mu.removable_addable(i, q);
    int below_add = 0, below_rem = 0;
    for (Node b : add)
        if (b.row > a.row) ++below_add;
    for (Node b : rem)
        if (b.row > a.row) ++below_rem;
    return below_add - below_rem;
}

int tableau_degree(const Tableau& t, const Quiver& q) {
    if (!t.is_standard())
        throw std::invalid_argument("tableau_degree requires a standard tableau");
    int deg = 0;
    Partition shape = t.shape();
    Tableau cur = t;
    for (int v = t.d(); v >= 1; --v) {
        Node a = cur.node_of(v);
        deg += removal_degree(shape, a, q);
        shape = shape.remove(a);
        std::vector<std::vector<int>> rows = cur.rows();
        rows[a.row - 1].pop_back();
        if (rows[a.row - 1].empty()) rows.erase(rows.begin() + (a.row - 1));
        cur = Tableau(shape, std::move(rows));
    }
    return deg;
}

Permutation tableau_word(const Tableau& t) {
    Tableau initial = Tableau::row_reading(t.shape());
    std::vector<int> targets(t.d());
    for (Node a : t.shape().nodes()) targets[initial.entry(a) - 1] = t.entry(a);
    return Permutation(std::move(targets));
}

Tableau act(const Permutation& w, const Tableau& t) {
    std::vector<std::vector<int>> rows = t.rows();
    for (auto& row : rows)
        for (int& v : row) v = w(v);
    return Tableau(t.shape(), std::move(rows));
}

static void grow_standard(const Partition& shape, int placed,
                          std::vector<std::vector<int>>& rows,
                          std::vector<int>& heights,
                          std::vector<Tableau>& out) {
    int d = shape.d();
    if (placed == d) {
        std::vector<std::vector<int>> full;
        for (int r = 1; r <= shape.num_parts(); ++r)
            full.push_back(rows[r - 1]);
        out.push_back(Tableau(shape, std::move(full)));
        return;
    }
    for (int r = 1; r <= shape.num_parts(); ++r) {
        int c = heights[r - 1] + 1;
        if (c > shape.part(r)) continue;
        if (r > 1 && heights[r - 2] < c) continue; // column-strictness
        rows[r - 1].push_back(placed + 1);
        heights[r - 1] += 1;
        grow_standard(shape, placed + 1, rows, heights, out);
        heights[r - 1] -= 1;
        rows[r - 1].pop_back();
    }
}

std::vector<Tableau> standard_tableaux(const Partition& shape) {
    std::vector<Tableau> out;
    std::vector<std::vector<int>> rows(shape.num_parts());
    std::vector<int> heights(shape.num_parts(), 0);
    grow_standard(shape, 0, rows, heights, out);
    std::sort(out.begin(), out.end(), [](const Tableau& a, const Tableau& b) {
        return a.reading_word() < b.reading_word();
    });
    return out;
}

} // namespace hookspecht
