// Cut elimination with step-indexed reduction.  Each step rewrites the
// leftmost-outermost cut node, records the scalar homomorphism describing how
// the step's cut literals become definable in the reduct, and keeps enough
// occurrence bookkeeping (conclusion and cut index maps) to compare
// quasi-execution results across the step.  Commuting a cut past a with
// either superposes the duplicated material in the new Σ or duplicates it
// outright, emitting the co-contraction homomorphism c := a·c + ā·c'.

#ifndef GOI_REWRITE_HPP
#define GOI_REWRITE_HPP

#include <optional>

#include "goi/equations.hpp"
#include "goi/execution.hpp"

namespace goi {

struct StepBoundExceeded : std::runtime_error {
    explicit StepBoundExceeded(int bound)
        : std::runtime_error("normalization exceeded " + std::to_string(bound) + " steps") {}
};

enum class StepKind {
    AxCut,
    KeyTensorPar,
    KeyWithPlus,
    CommuteWith_Superposed,
    CommuteWith_Duplicating,
    CommuteOther,
};

std::string step_kind_name(StepKind k);

enum class WithCommuteStrategy { Superpose, Duplicate };

struct RewriteOptions {
    WithCommuteStrategy with_strategy = WithCommuteStrategy::Superpose;
    int step_bound = 512;
};

struct ReductionStep {
    StepKind kind;
    RingHom emitted_hom;         // cut literals of the redex into the reduct's ring
    std::vector<int> gamma_map;  // old conclusion position -> new conclusion position
    std::vector<int> cut_map;    // old cut index -> new cut index, -1 when consumed
};

// One reduction of the leftmost-outermost cut; nullopt when cut-free.
std::optional<std::pair<ProofPtr, ReductionStep>> reduce_step(const ProofPtr& p,
                                                              const RewriteOptions& opt = {});

struct ReductionTrace {
    ProofPtr start;
    std::vector<ReductionStep> steps;
    std::vector<ProofPtr> proofs;  // after each step
    RingHom composite_hom;         // stepwise composition
    std::vector<int> gamma_map;    // start conclusion position -> final position

    ProofPtr result() const { return proofs.empty() ? start : proofs.back(); }
};

ReductionTrace normalize(const ProofPtr& p, const RewriteOptions& opt = {});

// M = dg(N, 0) up to index permutation lives in matrix.hpp (embeds_mod_zero).

struct InvarianceReport {
    bool pass = true;
    std::vector<std::string> failures;
};

// Stepwise d^Γ(qEx(σ, [p])) = qEx(σ', [p']) in the boolean quotient, plus the
// end-to-end identity: the composite homomorphism applied to the start's
// quasi-execution equals the normal form's interpretation.
InvarianceReport verify_invariance_external(const ReductionTrace& trace, int bound = 1024);

// Stepwise solutions of the autonomous systems on both sides, checked as
// solutions and as witnesses of the same equality restricted to cut literals.
InvarianceReport verify_invariance_autonomous(const ReductionTrace& trace, int bound = 1024);

// The duplication identity behind the duplicating with-commutation: feeding
// the superposition of f and g through σ_Δ equals, after the co-contraction
// substitution c := a·c + ā·c' on the designated duplicated weights, feeding
// the doubled index with f and the renamed g laid out diagonally.  Compared
// under complement elimination plus idempotency of the superposition weight.
bool verify_cocontraction_identity(const FMatrix& f, const FMatrix& g, int principal_pos,
                                   WeightId weight, const Pairs& delta_pairs,
                                   const std::set<WeightId>& duplicated, int bound = 1024);

}  // namespace goi

#endif  // GOI_REWRITE_HPP
