#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hookspecht/presentation.hpp"
#include "hookspecht/relations.hpp"

#include <algorithm>
#include <set>

using namespace hookspecht;

namespace {

// All reduced words of a permutation, by peeling right descents.
void reduced_words(const Permutation& w, std::vector<int>& stack,
                   std::vector<std::vector<int>>& out) {
    if (w.is_identity()) {
        std::vector<int> word(stack.rbegin(), stack.rend());
        out.push_back(std::move(word));
        return;
    }
    for (int r = 1; r < w.degree(); ++r) {
        if (w(r) > w(r + 1)) {
            stack.push_back(r);
            reduced_words(w * Permutation::simple(w.degree(), r), stack, out);
            stack.pop_back();
        }
    }
}

bool avoids_321(const Permutation& w) {
    int d = w.degree();
    for (int i = 1; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j)
            for (int l = j + 1; l <= d; ++l)
                if (w(i) > w(j) && w(j) > w(l)) return false;
    return true;
}

} // namespace

TEST_CASE("garnir nodes need a node below") {
    CHECK(garnir_nodes(Partition({5})).empty());
    CHECK(garnir_nodes(Partition({1, 1, 1, 1})) ==
          std::vector<Node>{{1, 1}, {2, 1}, {3, 1}});
    CHECK(garnir_nodes(Partition({2, 1})) == std::vector<Node>{{1, 1}});
    CHECK(garnir_nodes(Partition({3, 2})) == std::vector<Node>{{1, 1}, {1, 2}});
}

TEST_CASE("garnir datum for (2,1) at (1,1)") {
    Quiver q(3);
    GarnirDatum g = garnir_datum(Partition({2, 1}), {1, 1}, q);
    CHECK(g.brick_count() == 0);
    CHECK(g.row_leftover == std::vector<Node>{{1, 1}, {1, 2}});
    CHECK(g.below_leftover == std::vector<Node>{{2, 1}});
    CHECK(g.garnir_tableau.rows() == std::vector<std::vector<int>>{{2, 3}, {1}});
    CHECK(tableau_word(g.garnir_tableau) == Permutation({2, 3, 1}));
    REQUIRE(g.coset_reps.size() == 1);
    CHECK(g.coset_reps[0].gen_word.empty());
    CHECK_THROWS_AS(garnir_datum(Partition({2, 1}), {1, 2}, q), std::invalid_argument);
}

TEST_CASE("garnir datum for (6,3) at (1,3)") {
    Quiver q(3);
    GarnirDatum g = garnir_datum(Partition({6, 3}), {1, 3}, q);
    std::vector<Node> belt;
    for (int c = 3; c <= 6; ++c) belt.push_back({1, c});
    for (int c = 1; c <= 3; ++c) belt.push_back({2, c});
    CHECK(g.belt == belt);
    REQUIRE(g.brick_count() == 2);
    CHECK(g.bricks[0] == std::vector<Node>{{1, 3}, {1, 4}, {1, 5}});
    CHECK(g.bricks[1] == std::vector<Node>{{2, 1}, {2, 2}, {2, 3}});
    CHECK(g.row_brick_count == 1);
    CHECK(g.row_leftover == std::vector<Node>{{1, 6}});
    CHECK(g.below_leftover.empty());
    CHECK(g.coset_reps.size() == 2); // C(2,1)
    CHECK(g.garnir_tableau.rows() ==
          std::vector<std::vector<int>>{{1, 2, 3, 4, 5, 9}, {6, 7, 8}});
    CHECK(g.first_brick_value == 3);
    REQUIRE(g.brick_generators.size() == 1);
    // w^A_1 = (3,6)(4,7)(5,8)
    CHECK(g.brick_generators[0] == Permutation({1, 2, 6, 7, 8, 3, 4, 5, 9}));
}

TEST_CASE("brick swap generator shape") {
    // one brick per row: w^A_1 is a product of e disjoint transpositions
    // (z, z+e)
    Quiver q(3);
    GarnirDatum g = garnir_datum(Partition({6, 3}), {1, 3}, q);
    REQUIRE(g.brick_generators.size() == 1);
    const Permutation& w = g.brick_generators[0];
    int moved = 0;
    for (int z = 1; z <= 9; ++z)
        if (w(z) != z) {
            ++moved;
            CHECK((w(z) == z + 3 || w(z) == z - 3));
        }
    CHECK(moved == 2 * 3);
}

TEST_CASE("belt structure across small partitions") {
    for (int e : {3, 4}) {
        Quiver q(e);
        for (int d = 1; d <= 9; ++d)
            for (const Partition& mu : partitions_of(d))
                for (Node a : garnir_nodes(mu)) {
                    GarnirDatum g = garnir_datum(mu, a, q);
                    int x = a.row, y = a.col;
                    CHECK(static_cast<int>(g.belt.size()) == (mu.part(x) - y + 1) + y);
                    CHECK(static_cast<int>(g.row_leftover.size()) < e);
                    CHECK(static_cast<int>(g.below_leftover.size()) < e);
                    // every belt node in exactly one piece
                    std::set<Node> seen;
                    for (const auto& brick : g.bricks) {
                        CHECK(static_cast<int>(brick.size()) == e);
                        CHECK(q.residue(brick.front()) == q.residue(a));
                        for (Node n : brick) CHECK(seen.insert(n).second);
                    }
                    for (Node n : g.row_leftover) CHECK(seen.insert(n).second);
                    for (Node n : g.below_leftover) CHECK(seen.insert(n).second);
                    CHECK(seen == std::set<Node>(g.belt.begin(), g.belt.end()));

                    // w^{T^A} is the identity outside the belt and carries
                    // the T^mu labels to the T^A labels inside it
                    Permutation w = tableau_word(g.garnir_tableau);
                    Tableau initial = Tableau::row_reading(mu);
                    for (Node n : mu.nodes()) {
                        bool in_belt =
                            std::find(g.belt.begin(), g.belt.end(), n) != g.belt.end();
                        if (!in_belt) CHECK(w(initial.entry(n)) == initial.entry(n));
                    }
                    for (Node n : g.belt)
                        CHECK(w(initial.entry(n)) == g.garnir_tableau.entry(n));

                    // coset representatives: count and full commutativity
                    int k = g.brick_count(), f = g.row_brick_count;
                    CHECK(BigInt(g.coset_reps.size()) == binomial(k, f));
                    for (const auto& rep : g.coset_reps) {
                        for (std::size_t i = 0; i + 2 < rep.gen_word.size(); ++i)
                            CHECK_FALSE((rep.gen_word[i] == rep.gen_word[i + 2] &&
                                         std::abs(rep.gen_word[i] - rep.gen_word[i + 1]) == 1));
                        if (k > 0) {
                            Permutation u = Permutation::identity(k);
                            for (int r : rep.gen_word) u = u * Permutation::simple(k, r);
                            CHECK(avoids_321(u));
                        }
                    }
                }
    }
}

TEST_CASE("relation generator lists") {
    Quiver q(3);
    auto kinds = [](const std::vector<RelationGenerator>& gens,
                    RelationGenerator::Kind kind) {
        std::vector<int> rs;
        for (const auto& g : gens)
            if (g.kind == kind) rs.push_back(g.r);
        return rs;
    };
    auto count_garnir = [](const std::vector<RelationGenerator>& gens) {
        int n = 0;
        for (const auto& g : gens)
            if (g.kind == RelationGenerator::Kind::Garnir) ++n;
        return n;
    };

    auto single_row = relation_generators(Partition({4}), q);
    CHECK(kinds(single_row, RelationGenerator::Kind::Dot) == std::vector<int>{1, 2, 3, 4});
    CHECK(kinds(single_row, RelationGenerator::Kind::RowPsi) == std::vector<int>{1, 2, 3});
    CHECK(count_garnir(single_row) == 0);

    auto single_col = relation_generators(Partition({1, 1, 1, 1}), q);
    CHECK(kinds(single_col, RelationGenerator::Kind::RowPsi).empty());
    CHECK(count_garnir(single_col) == 3);

    auto hook21 = relation_generators(Partition({2, 1}), q);
    CHECK(kinds(hook21, RelationGenerator::Kind::RowPsi) == std::vector<int>{1});
    CHECK(count_garnir(hook21) == 1);
}

TEST_CASE("degree shifts") {
    Quiver q(3);
    CHECK(specht_degree_shift(Partition({3}), q) == 1);
    CHECK(specht_degree_shift(Partition({2, 1}), q) == 0);
    CHECK(specht_degree_shift(Partition{}, q) == 0);
}

TEST_CASE("structured garnir application equals the distributed expansion") {
    for (int e : {3, 4}) {
        Quiver q(e);
        for (int d = 1; d <= 6; ++d)
            for (const Partition& mu : partitions_of(d)) {
                if (garnir_nodes(mu).empty()) continue;
                for (int k = 0; k <= d - 1; ++k) {
                    HookModule m(HookShape(d, k), q);
                    ResidueSeq imu = Tableau::row_reading(mu).residue_sequence(q);
                    std::vector<int> cols = m.weight_space(imu);
                    if (cols.empty()) continue;
                    for (Node a : garnir_nodes(mu)) {
                        GarnirDatum g = garnir_datum(mu, a, q);
                        auto words = garnir_token_words(g);
                        for (int col : cols) {
                            ZVector v{{col, 1}};
                            ZVector structured = apply_garnir(m, g, v);
                            ZVector distributed;
                            for (const TokenWord& word : words)
                                for (const auto& [idx, c] : m.act_word(word, v)) {
                                    distributed[idx] += c;
                                    if (distributed[idx] == 0) distributed.erase(idx);
                                }
                            CHECK(structured == distributed);
                        }
                    }
                }
            }
    }
}

TEST_CASE("tau expansion does not depend on the reduced word") {
    // mu = (12,6), A = (1,6), e = 3: four bricks, two per row, so the coset
    // representatives include fully commutative elements with several
    // reduced words. Expand tau along each word and compare the operator
    // action on S^lambda for lambda = (17,1).
    Quiver q(3);
    Partition mu({12, 6});
    GarnirDatum g = garnir_datum(mu, {1, 6}, q);
    REQUIRE(g.brick_count() == 4);
    REQUIRE(g.row_brick_count == 2);
    HookModule m(HookShape(18, 1), q);

    auto apply_tau_word = [&](const std::vector<int>& word, const ZVector& v) {
        ZVector acc = v;
        for (auto it = word.rbegin(); it != word.rend(); ++it) {
            ZVector projected = m.act_e(g.weight, acc);
            TokenWord brick_word;
            for (int r : g.brick_generators[*it - 1].canonical_word())
                brick_word.push_back(GenToken::psi(r));
            ZVector crossed = m.act_word(brick_word, projected);
            for (const auto& [idx, c] : projected) {
                crossed[idx] += c;
                if (crossed[idx] == 0) crossed.erase(idx);
            }
            acc = std::move(crossed);
        }
        return acc;
    };

    REQUIRE_FALSE(m.weight_space(g.weight).empty());
    bool saw_multiple_words = false;
    for (const auto& rep : g.coset_reps) {
        if (rep.gen_word.size() < 2) continue;
        int k = g.brick_count();
        Permutation u = Permutation::identity(k);
        for (int r : rep.gen_word) u = u * Permutation::simple(k, r);
        std::vector<std::vector<int>> words;
        std::vector<int> stack;
        reduced_words(u, stack, words);
        if (words.size() < 2) continue;
        saw_multiple_words = true;

        for (int idx : m.weight_space(g.weight)) {
            ZVector v{{idx, 1}};
            CHECK(apply_tau_word(words.front(), v) == apply_tau_word(words.back(), v));
        }
    }
    CHECK(saw_multiple_words);
}

TEST_CASE("diagnostic rendering") {
    Quiver q(3);
    GarnirDatum g = garnir_datum(Partition({6, 3}), {1, 3}, q);
    std::string text = render_garnir(g);
    CHECK(text.find("Garnir node (1,3)") != std::string::npos);
    CHECK(text.find("2 brick(s)") != std::string::npos);
}
