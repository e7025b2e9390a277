// Autonomous equational systems read off the matrix entries adjacent to the
// feedback hops: every path through the cut indices contributes, for each of
// its hops, the equations w(αi) = w(βj) between the scalar monomials of the
// two factors meeting there, filtered by nonvanishing of the factor product
// (paths annihilate by p*q = q*p = 0, monomials by complementary literals).
// A solution substitutes conclusion-ring polynomials for the literals so that
// every equation holds in the boolean quotient; the solver constructs one by
// recursion over the proof.

#ifndef GOI_EQUATIONS_HPP
#define GOI_EQUATIONS_HPP

#include <optional>

#include "goi/execution.hpp"

namespace goi {

struct MonEq {
    Monomial lhs, rhs;  // canonically ordered lhs <= rhs

    MonEq() = default;
    MonEq(Monomial a, Monomial b) {
        if (b < a) std::swap(a, b);
        lhs = std::move(a);
        rhs = std::move(b);
    }
    auto operator<=>(const MonEq&) const = default;
    std::string str() const { return lhs.str() + " = " + rhs.str(); }
};

struct EqSystem {
    std::set<MonEq> equations;
    std::set<Literal> delta_literals, gamma_literals;
};

// Side condition order for the factor product: composition (left factor path
// times right factor path) by default; the flipped reading is configurable.
enum class EqOrder { Composition, Reversed };

std::set<MonEq> e_set(const AlgElem& left, const AlgElem& right,
                      EqOrder order = EqOrder::Composition);

EqSystem eq_system(const FMatrix& u, const Pairs& pairs,
                   EqOrder order = EqOrder::Composition);
EqSystem eq_system(const ProofPtr& p, EqOrder order = EqOrder::Composition);

// nullopt = pass; otherwise the first failing equation after substitution,
// compared in the boolean quotient of the conclusion ring.
std::optional<MonEq> check_solution(const EqSystem& sys, const RingHom& d);

struct Solution {
    RingHom hom;                  // total via literal defaults; explicit zeros included
    std::set<Literal> free_lits;  // cut literals the construction left unconstrained
};

// Constructive satisfiability witness, built by recursion over the proof.
Solution solve(const ProofPtr& p);

// eq(σ1 ⊗ σ2, U) = eq(σ1, U) ∪ eq(σ2, U).
bool partition_check(const FMatrix& u, const Pairs& p1, const Pairs& p2);

}  // namespace goi

#endif  // GOI_EQUATIONS_HPP
