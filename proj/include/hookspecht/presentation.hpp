#pragma once

#include "hookspecht/hook_module.hpp"
#include "hookspecht/partition.hpp"
#include "hookspecht/permutation.hpp"
#include "hookspecht/tableau.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hookspecht {

/// Everything attached to one Garnir node A = (x,y) of mu: the belt, its
/// bricks, the leftover node sets, the Garnir tableau T^A and its weight,
/// the brick-swapping generators of Sigma^A, the minimal coset
/// representatives of Sigma_f x Sigma_{k-f}, and the fixed word for psi^{T^A}.
struct GarnirDatum {
    Node node;
    Partition mu;
    std::vector<Node> belt;
    std::vector<std::vector<Node>> bricks;
    std::vector<Node> row_leftover;   // C^A, in row x
    std::vector<Node> below_leftover; // D^A, in row x+1
    int row_brick_count = 0;          // f = bricks in row x
    Tableau garnir_tableau;           // T^A
    ResidueSeq weight;                // i^A
    int first_brick_value = 0;        // value of the leftmost node of B^A_1 in T^A
    std::vector<Permutation> brick_generators; // w^A_1 .. w^A_{k-1}

    struct CosetRep {
        Permutation perm;          // product of the w^A_r in Sigma_d
        std::vector<int> gen_word; // reduced word in brick-generator indices
    };
    std::vector<CosetRep> coset_reps;

    std::vector<int> psi_word; // canonical reduced word of w^{T^A}

    int brick_count() const { return static_cast<int>(bricks.size()); }
};

/// A node (x,y) of mu is Garnir when (x+1,y) is also a node of mu, so the
/// belt reaches into the next row.
bool is_garnir_node(const Partition& mu, Node a);
std::vector<Node> garnir_nodes(const Partition& mu);

GarnirDatum garnir_datum(const Partition& mu, Node a, const Quiver& q);

/// One generator of the relation ideal J^mu = J_1 + J_2 + J_3 + J_4.
struct RelationGenerator {
    enum class Kind { Idempotent, Dot, RowPsi, Garnir };
    Kind kind;
    int r = 0; // dot / row-psi index
    std::optional<GarnirDatum> datum;
    std::string source;
};

std::vector<RelationGenerator> relation_generators(const Partition& mu, const Quiver& q);

/// deg(T^mu), the degree shift in S^mu = R/J^mu<deg(T^mu)>.
int specht_degree_shift(const Partition& mu, const Quiver& q);

/// psi^{T^A} as generator tokens.
TokenWord garnir_psi_tokens(const GarnirDatum& g);

/// The fully distributed expansion of g^A: every tau factor (psi_{w^A_r}+1)e
/// split into its two summands, one token word per summand, all with
/// coefficient +1.
std::vector<TokenWord> garnir_token_words(const GarnirDatum& g);

/// g^A v computed structurally (psi^{T^A} first, then the tau factors per
/// coset representative). Agrees with summing garnir_token_words over
/// act_word; the distributed form is exercised by tests.
ZVector apply_garnir(const HookModule& m, const GarnirDatum& g, const ZVector& v);

/// Apply one relation generator to a vector of weight i^mu.
ZVector apply_relation(const HookModule& m, const Partition& mu,
                       const RelationGenerator& gen, const ZVector& v);

/// Belt picture with brick boundaries, for the CLI's diagnostic output.
std::string render_garnir(const GarnirDatum& g);

} // namespace hookspecht
