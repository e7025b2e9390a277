// Sequents with explicit cut lists, derivation trees, occurrence identity
// and eigenweight bookkeeping.
//
// Every proof node owns its conclusion sequent.  A sequent stores all its
// formula occurrences (down to atoms) in an arena indexed by OccId, assigned
// in preorder: cut trees first, conclusion trees after.  Rule nodes keep a
// premise-occurrence -> conclusion-occurrence map, which is how superposition
// (the with rule identifying context and Σ occurrences of both premises) and
// matrix index bookkeeping are expressed.

#ifndef GOI_PROOF_HPP
#define GOI_PROOF_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "goi/algebra.hpp"
#include "goi/formula.hpp"

namespace goi {

using OccId = std::uint32_t;
inline constexpr OccId kNoOcc = static_cast<OccId>(-1);

struct ProofError : std::runtime_error {
    explicit ProofError(const std::string& w) : std::runtime_error(w) {}
};
struct RuleMismatch : ProofError {
    explicit RuleMismatch(const std::string& w) : ProofError("rule mismatch: " + w) {}
};
struct DualityViolation : ProofError {
    explicit DualityViolation(const std::string& w) : ProofError("duality violation: " + w) {}
};
struct DanglingOccurrence : ProofError {
    explicit DanglingOccurrence(const std::string& w) : ProofError("dangling occurrence: " + w) {}
};

struct OccNode {
    Formula formula;
    OccId parent = kNoOcc;
    OccId left = kNoOcc;
    OccId right = kNoOcc;
    WeightId weight = 0;  // for With occurrences; 0 = not yet assigned
};

struct Sequent {
    std::vector<OccNode> arena;
    std::vector<std::pair<OccId, OccId>> cuts;  // dual root pairs, in list order
    std::vector<OccId> conclusion;              // Γ roots, in list order

    OccId add_tree(const Formula& f, OccId parent = kNoOcc);
    const OccNode& at(OccId o) const;
    bool is_leaf(OccId o) const { return at(o).formula.is_atom(); }
    // flattened matrix index: cut roots pairwise, then conclusion roots
    std::vector<OccId> matrix_index() const;
    std::size_t delta_size() const { return 2 * cuts.size(); }
    std::vector<OccId> leaves_under(OccId root) const;
    std::string str() const;

    bool operator==(const Sequent& o) const;
};

enum class Rule { Ax, Cut, Tensor, Par, Plus1, Plus2, With };

std::string rule_name(Rule r);

struct Proof;
using ProofPtr = std::shared_ptr<const Proof>;

struct Proof {
    Rule rule = Rule::Ax;
    std::vector<ProofPtr> premises;
    // per premise: premise OccId -> conclusion OccId (total on the premise arena)
    std::vector<std::vector<OccId>> occ_map;
    // positions of principal occurrences in the premises' conclusion lists:
    //   Cut/Tensor/With: principal1 in premises[0], principal2 in premises[1]
    //   Par: both in premises[0]
    //   Plus1/Plus2: principal1 in premises[0]
    int principal1 = -1;
    int principal2 = -1;
    // With: superposed cuts as (premise-1 cut index, premise-2 cut index)
    std::vector<std::pair<int, int>> superpose;
    // With: context pairing; entry i is the premise-2 context ordinal matched
    // with premise-1 context ordinal i (empty = positional)
    std::vector<int> ctx_map;
    Formula other;  // Plus1/Plus2: the argument without a premise
    Sequent seq;

    // Builders; they throw RuleMismatch / DualityViolation on bad data.
    static ProofPtr ax(const std::string& atom, bool positive_first = true);
    static ProofPtr cut(ProofPtr a, ProofPtr b, int pos1, int pos2);
    static ProofPtr tensor(ProofPtr a, ProofPtr b, int pos1, int pos2);
    static ProofPtr par(ProofPtr a, int pos_left, int pos_right);
    static ProofPtr plus1(ProofPtr a, int pos, Formula right_side);
    static ProofPtr plus2(ProofPtr a, int pos, Formula left_side);
    static ProofPtr with(ProofPtr a, ProofPtr b, int pos1, int pos2,
                         std::vector<std::pair<int, int>> superpose, WeightId weight = 0,
                         std::vector<int> ctx_map = {});

    OccId conclusion_occ(int premise, OccId premise_occ) const;
    bool operator==(const Proof& o) const;
};

// Validates every rule instance of the tree; returns the conclusion sequent.
Sequent check_proof(const ProofPtr& p);

// Fresh, pairwise-distinct eigenweights on the root arena (preorder order),
// pushed down through the occurrence maps so superposed occurrences share
// their contracted weight.  Returns a reweighted copy of the tree.
ProofPtr assign_eigenweights(const ProofPtr& p);

// Deep copy with eigenweights substituted (used by duplicating reductions).
ProofPtr rename_weights(const ProofPtr& p, const std::map<WeightId, WeightId>& ren);
WeightId max_weight(const ProofPtr& p);
// Fresh identifiers for any unassigned with occurrences (rewrites introduce
// fresh unused plus branches); assigned weights are left alone.
ProofPtr fill_missing_weights(const ProofPtr& p, WeightId& next);

// Eigenweight literal sets.  Throw if a With occurrence is unassigned.
std::set<Literal> literals_of(const Formula& f);  // requires no With, or use occurrence form
std::set<Literal> literals_of(const Sequent& s, OccId root);
std::set<Literal> literals_of(const Sequent& s);
std::set<Literal> literals_of_delta(const Sequent& s);
std::set<Literal> literals_of_gamma(const Sequent& s);

// Occurrence-level rendering, e.g. "~X&~X" for a with occurrence.
std::string occ_str(const Sequent& s, OccId o);

}  // namespace goi

#endif  // GOI_PROOF_HPP
