// Feedback resolution: partial symmetries over cut pairs, the quasi-execution
// sum U_Γ^Γ + Σ U_Γ^Δ (σU_Δ^Δ)^n (σU_Δ^Γ), its language counterpart, the
// execution formula (a scalar homomorphism applied on top), and the slice and
// paired nilpotency tests that decide whether the sum truncates.

#ifndef GOI_EXECUTION_HPP
#define GOI_EXECUTION_HPP

#include "goi/hom.hpp"
#include "goi/interpret.hpp"
#include "goi/matrix.hpp"

namespace goi {

// Positions of the cut pairs inside a matrix index.
using Pairs = std::vector<std::pair<int, int>>;

// All cut pairs of a proof matrix: {(0,1), (2,3), ...}.
Pairs cut_pairs(const Sequent& s);
Pairs all_pairs(const FMatrix& u);

struct PartialSymmetry {
    Pairs pairs;
    FMatrix matrix;  // indexed by the flattened pair positions, antidiagonal 1 blocks
};

PartialSymmetry sigma(const FMatrix& u, const Pairs& pairs);
PartialSymmetry sigma(const Sequent& s);

struct Divergent : std::runtime_error {
    explicit Divergent(int bound)
        : std::runtime_error("feedback not nilpotent within bound " + std::to_string(bound)) {}
};

struct ExecReport {
    FMatrix result;   // indexed by the passive (Γ) labels
    bool divergent = false;
    int n0 = 0;       // least n with (σU_Δ^Δ)^n = 0 under the mode, when not divergent
    int bound = 0;
    ReductionMode mode;
    std::vector<FMatrix> trace;  // Δ-power trace when requested
};

ExecReport qExec(const FMatrix& u, const Pairs& pairs, const ReductionMode& mode,
                 int bound = 1024, bool want_trace = false);

// Ex(d, σ, U): the homomorphism (identity on unmapped literals) applied to
// every entry of the quasi-execution result.  Throws Divergent.
FMatrix exec(const RingHom& d, const FMatrix& u, const Pairs& pairs, const ReductionMode& mode,
             int bound = 1024);

struct LExecReport {
    LMatrix result;
    bool divergent = false;
    int n0 = 0;
    int bound = 0;
};

// Language quasi-execution.  The union is truncated when the Δ-power empties,
// at `joint_n0` when >= 0 (the paired scalar run's index), or at the bound.
LExecReport qexec(const LMatrix& m, const Pairs& pairs, int bound = 1024, int joint_n0 = -1);

struct NilpotencyReport {
    bool divergent = false;
    int index = 0;
    int bound = 0;
};

// Least n with (σU_Δ^Δ)^n : (σm_Δ^Δ)^n zero entrywise, each scalar entry
// tested modulo the quotient selected by its paired language entry (complement
// elimination always included).
NilpotencyReport pair_nilpotency(const FMatrix& u, const LMatrix& m, const Pairs& pairs,
                                 int bound = 1024);
// Same with the uniform boolean quotient: every weight idempotent.
NilpotencyReport slice_nilpotency(const FMatrix& u, const Pairs& pairs, int bound = 1024);

// qEx(σ2⊗σ1, U) = qEx(σ2, qEx(σ1, U)).
bool check_assoc(const FMatrix& u, const Pairs& inner, const Pairs& outer,
                 const ReductionMode& mode, int bound = 1024);
// Ex(d1 ⊎ d2, σ1⊗σ2, U) = Ex(d1, σ1, Ex(Res d2, σ2, U)) with d2 into the conclusion ring.
bool check_assoc_hom_res(const RingHom& d1, const RingHom& d2, const FMatrix& u,
                         const Pairs& p1, const Pairs& p2, const ReductionMode& mode,
                         int bound = 1024);
// Ex(d1 ⊎ Ind(d2), σ1⊗σ2, U) = Ex(d1, σ1, Ex(d2, σ2, U)) with d2 into the Δ1-extended ring.
bool check_assoc_hom_ind(const RingHom& d1, const RingHom& d2, const FMatrix& u,
                         const Pairs& p1, const Pairs& p2, const ReductionMode& mode,
                         int bound = 1024);

// Positions of `pairs` inside the passive index left behind by resolving
// `resolved` (for nesting quasi-executions).
Pairs remap_pairs(const FMatrix& u, const Pairs& resolved, const Pairs& pairs);

}  // namespace goi

#endif  // GOI_EXECUTION_HPP
