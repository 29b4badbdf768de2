#include "hookspecht/presentation.hpp"

#include "hookspecht/check.hpp"
#include "hookspecht/shuffles.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hookspecht {

bool is_garnir_node(const Partition& mu, Node a) {
    return mu.contains(a) && mu.contains({a.row + 1, a.col});
}

std::vector<Node> garnir_nodes(const Partition& mu) {
    std::vector<Node> out;
    for (Node a : mu.nodes())
        if (is_garnir_node(mu, a)) out.push_back(a);
    return out;
}

GarnirDatum garnir_datum(const Partition& mu, Node a, const Quiver& q) {
    if (!is_garnir_node(mu, a))
        throw std::invalid_argument("garnir_datum: node is not a Garnir node");
    int x = a.row, y = a.col, e = q.e();

    GarnirDatum g;
    g.node = a;
    g.mu = mu;
    for (int c = y; c <= mu.part(x); ++c) g.belt.push_back({x, c});
    for (int c = 1; c <= y; ++c) g.belt.push_back({x + 1, c});

    // Bricks are e-blocks whose leftmost node has residue res(A); in row x
    // they start at columns congruent to y mod e, in row x+1 at columns
    // congruent to y+1.
    for (int c = y; c + e - 1 <= mu.part(x); c += e) {
        std::vector<Node> brick;
        for (int z = c; z < c + e; ++z) brick.push_back({x, z});
        g.bricks.push_back(std::move(brick));
    }
    g.row_brick_count = static_cast<int>(g.bricks.size());
    int below_start = (y % e) + 1;
    for (int c = below_start; c + e - 1 <= y; c += e) {
        std::vector<Node> brick;
        for (int z = c; z < c + e; ++z) brick.push_back({x + 1, z});
        g.bricks.push_back(std::move(brick));
    }

    std::set<Node> covered;
    for (const auto& brick : g.bricks)
        for (Node n : brick) covered.insert(n);
    for (Node n : g.belt) {
        if (covered.count(n)) continue;
        (n.row == x ? g.row_leftover : g.below_leftover).push_back(n);
    }

    // T^A: the belt values u..v laid out over D^A, B_1, ..., B_k, C^A.
    Tableau initial = Tableau::row_reading(mu);
    int u = initial.entry({x, y});
    std::vector<Node> order = g.below_leftover;
    for (const auto& brick : g.bricks) order.insert(order.end(), brick.begin(), brick.end());
    order.insert(order.end(), g.row_leftover.begin(), g.row_leftover.end());
    internal_check(order.size() == g.belt.size(), "belt partition into bricks and leftovers");

    std::vector<std::vector<int>> rows = initial.rows();
    int value = u;
    for (Node n : order) rows[n.row - 1][n.col - 1] = value++;
    g.garnir_tableau = Tableau(mu, std::move(rows));
    g.weight = g.garnir_tableau.residue_sequence(q);
    g.psi_word = tableau_word(g.garnir_tableau).canonical_word();

    int k = g.brick_count();
    g.first_brick_value = u + static_cast<int>(g.below_leftover.size());
    int d = mu.d();
    for (int r = 1; r < k; ++r) {
        Permutation w = Permutation::identity(d);
        int n0 = g.first_brick_value;
        for (int z = n0 + r * e - e; z <= n0 + r * e - 1; ++z)
            w = w * Permutation::transposition(d, z, z + e);
        g.brick_generators.push_back(std::move(w));
    }

    int f = g.row_brick_count;
    for (const Permutation& rep : shuffle_reps(f, k - f)) {
        GarnirDatum::CosetRep cr;
        cr.gen_word = rep.canonical_word();
        Permutation p = Permutation::identity(d);
        for (int r : cr.gen_word) p = p * g.brick_generators[r - 1];
        cr.perm = std::move(p);
        g.coset_reps.push_back(std::move(cr));
    }
    return g;
}

std::vector<RelationGenerator> relation_generators(const Partition& mu, const Quiver& q) {
    std::vector<RelationGenerator> out;
    out.push_back({RelationGenerator::Kind::Idempotent, 0, std::nullopt, "J1"});
    for (int r = 1; r <= mu.d(); ++r)
        out.push_back({RelationGenerator::Kind::Dot, r, std::nullopt, "J2 y_" + std::to_string(r)});
    Tableau initial = Tableau::row_reading(mu);
    for (int x = 1; x <= mu.num_parts(); ++x) {
        int start = initial.entry({x, 1});
        for (int r = start; r <= start + mu.part(x) - 2; ++r)
            out.push_back({RelationGenerator::Kind::RowPsi, r, std::nullopt,
                           "J3 psi_" + std::to_string(r)});
    }
    for (Node a : garnir_nodes(mu)) {
        std::ostringstream src;
        src << "J4 A=(" << a.row << "," << a.col << ")";
        out.push_back({RelationGenerator::Kind::Garnir, 0, garnir_datum(mu, a, q), src.str()});
    }
    return out;
}

int specht_degree_shift(const Partition& mu, const Quiver& q) {
    return tableau_degree(Tableau::row_reading(mu), q);
}

TokenWord garnir_psi_tokens(const GarnirDatum& g) {
    TokenWord out;
    for (int r : g.psi_word) out.push_back(GenToken::psi(r));
    return out;
}

std::vector<TokenWord> garnir_token_words(const GarnirDatum& g) {
    TokenWord psi_ta = garnir_psi_tokens(g);
    std::vector<TokenWord> out;
    for (const auto& rep : g.coset_reps) {
        std::size_t a = rep.gen_word.size();
        for (std::size_t mask = 0; mask < (std::size_t{1} << a); ++mask) {
            TokenWord word;
            for (std::size_t i = 0; i < a; ++i) {
                if (mask & (std::size_t{1} << i))
                    for (int r : g.brick_generators[rep.gen_word[i] - 1].canonical_word())
                        word.push_back(GenToken::psi(r));
                word.push_back(GenToken::e(g.weight));
            }
            word.insert(word.end(), psi_ta.begin(), psi_ta.end());
            out.push_back(std::move(word));
        }
    }
    return out;
}

namespace {

void add_into(ZVector& acc, const ZVector& v) {
    for (const auto& [idx, c] : v) {
        auto it = acc.find(idx);
        if (it == acc.end()) {
            acc[idx] = c;
        } else {
            it->second += c;
            if (it->second == 0) acc.erase(it);
        }
    }
}

} // namespace

ZVector apply_garnir(const HookModule& m, const GarnirDatum& g, const ZVector& v) {
    ZVector base = m.act_word(garnir_psi_tokens(g), v);
    ZVector total;
    for (const auto& rep : g.coset_reps) {
        ZVector acc = base;
        // tau_{r_1} ... tau_{r_a} applied right to left
        for (auto it = rep.gen_word.rbegin(); it != rep.gen_word.rend(); ++it) {
            ZVector projected = m.act_e(g.weight, acc);
            TokenWord brick_word;
            for (int r : g.brick_generators[*it - 1].canonical_word())
                brick_word.push_back(GenToken::psi(r));
            ZVector crossed = m.act_word(brick_word, projected);
            add_into(crossed, projected);
            acc = std::move(crossed);
        }
        add_into(total, acc);
    }
    return total;
}

ZVector apply_relation(const HookModule& m, const Partition& mu,
                       const RelationGenerator& gen, const ZVector& v) {
    switch (gen.kind) {
        case RelationGenerator::Kind::Idempotent: {
            // J_1 acts as "live in the i^mu weight space": e(i^mu)v - v.
            ResidueSeq imu = Tableau::row_reading(mu).residue_sequence(m.quiver());
            ZVector projected = m.act_e(imu, v);
            ZVector out;
            for (const auto& [idx, c] : v) out[idx] = -c;
            add_into(out, projected);
            return out;
        }
        case RelationGenerator::Kind::Dot:
            return m.act_y(gen.r, v);
        case RelationGenerator::Kind::RowPsi:
            return m.act_psi(gen.r, v);
        case RelationGenerator::Kind::Garnir:
            return apply_garnir(m, *gen.datum, v);
    }
    throw std::invalid_argument("unknown relation generator kind");
}

std::string render_garnir(const GarnirDatum& g) {
    std::ostringstream out;
    int x = g.node.row;
    out << "Garnir node (" << x << "," << g.node.col << ") of mu=" << g.mu.to_string()
        << ": " << g.brick_count() << " brick(s), f=" << g.row_brick_count
        << ", |C|=" << g.row_leftover.size() << ", |D|=" << g.below_leftover.size()
        << ", coset reps " << g.coset_reps.size() << "\n";
    for (int row = x; row <= x + 1; ++row) {
        out << "  row " << row << ":";
        for (int c = 1; c <= g.mu.part(row); ++c) {
            Node n{row, c};
            bool in_belt = std::find(g.belt.begin(), g.belt.end(), n) != g.belt.end();
            if (!in_belt) {
                out << "  .";
                continue;
            }
            bool opens = false, closes = false;
            for (const auto& brick : g.bricks) {
                if (brick.front() == n) opens = true;
                if (brick.back() == n) closes = true;
            }
            out << (opens ? " [" : "  ") << g.garnir_tableau.entry(n) << (closes ? "]" : "");
        }
        out << "\n";
    }
    return out.str();
}

} // namespace hookspecht
