#include "hookspecht/partition.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hookspecht {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    d_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    if (text.empty()) return Partition{};
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t pos = 0;
        int value = 0;
        try {
            value = std::stoi(item, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed partition string: " + text);
        }
        if (pos != item.size())
            throw std::invalid_argument("malformed partition string: " + text);
        parts.push_back(value);
    }
    return Partition(std::move(parts));
}

std::string Partition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

int Partition::part(int row) const {
    if (row < 1 || row > num_parts()) return 0;
    return parts_[row - 1];
}

std::vector<Node> Partition::nodes() const {
    std::vector<Node> out;
    out.reserve(d_);
    for (int r = 1; r <= num_parts(); ++r)
        for (int c = 1; c <= parts_[r - 1]; ++c)
            out.push_back({r, c});
    return out;
}

Partition Partition::conjugate() const {
    std::vector<int> parts;
    for (int c = 1; c <= part(1); ++c) {
        int len = 0;
        while (len < num_parts() && parts_[len] >= c) ++len;
        parts.push_back(len);
    }
    return Partition(std::move(parts));
}

RootContent Partition::content(const Quiver& q) const {
    RootContent out;
    out.multiplicity.assign(q.e(), 0);
    for (Node a : nodes()) out.multiplicity[q.residue(a).v] += 1;
    return out;
}

std::vector<Node> Partition::removable_nodes() const {
    std::vector<Node> out;
    for (int r = 1; r <= num_parts(); ++r)
        if (part(r) > part(r + 1)) out.push_back({r, part(r)});
    return out;
}

std::vector<Node> Partition::addable_nodes() const {
    std::vector<Node> out;
    for (int r = 1; r <= num_parts() + 1; ++r)
        if (r == 1 || part(r - 1) > part(r)) out.push_back({r, part(r) + 1});
    return out;
}

std::pair<std::vector<Node>, std::vector<Node>>
Partition::removable_addable(Residue i, const Quiver& q) const {
    std::vector<Node> rem, add;
    for (Node a : removable_nodes())
        if (q.residue(a) == i) rem.push_back(a);
    for (Node a : addable_nodes())
        if (q.residue(a) == i) add.push_back(a);
    return {rem, add};
}

Partition Partition::remove(Node a) const {
    if (a.row < 1 || a.row > num_parts() || a.col != part(a.row) ||
        part(a.row) - 1 < part(a.row + 1))
        throw std::invalid_argument("not a removable node");
    std::vector<int> parts = parts_;
    parts[a.row - 1] -= 1;
    if (parts[a.row - 1] == 0) parts.erase(parts.begin() + (a.row - 1));
    return Partition(std::move(parts));
}

static void fill_partitions(int remaining, int cap, std::vector<int>& stack,
                            std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(stack));
        return;
    }
    for (int next = std::min(remaining, cap); next >= 1; --next) {
        stack.push_back(next);
        fill_partitions(remaining - next, next, stack, out);
        stack.pop_back();
    }
}

std::vector<Partition> partitions_of(int d) {
    if (d < 0) throw std::invalid_argument("partitions_of: d must be >= 0");
    std::vector<Partition> out;
    std::vector<int> stack;
    fill_partitions(d, d, stack, out);
    return out;
}

} // namespace hookspecht
