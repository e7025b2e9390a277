// Scalar ring homomorphisms given by literal -> polynomial substitution.
// Literals without an entry are mapped to themselves, so a RingHom is always
// total; hom_extend_identity documents the identity extension d^Γ.

#ifndef GOI_HOM_HPP
#define GOI_HOM_HPP

#include <map>
#include <optional>
#include <string>

#include "goi/algebra.hpp"

namespace goi {

struct DomainOverlapConflict : std::runtime_error {
    explicit DomainOverlapConflict(const std::string& what) : std::runtime_error(what) {}
};

struct RingHom {
    std::map<Literal, Poly> subst;

    bool maps(Literal l) const { return subst.count(l) > 0; }
    const Poly* image(Literal l) const {
        auto it = subst.find(l);
        return it == subst.end() ? nullptr : &it->second;
    }
    void set(Literal l, Poly v) { subst[l] = std::move(v); }
    std::string str() const;
};

RingHom hom_identity();
// l := 0 for every literal of both polarities of the given weights.
RingHom hom_zero_on(const std::set<Literal>& lits);

Poly hom_apply(const RingHom& d, const Poly& x);
Poly hom_apply(const RingHom& d, const Monomial& m);
AlgElem hom_apply(const RingHom& d, const AlgElem& x);

// d2 after d1: substitute with d1, then d2 on the result.
RingHom hom_compose(const RingHom& d2, const RingHom& d1);
// Union of substitutions; throws DomainOverlapConflict when the maps
// disagree on a shared literal.
RingHom hom_union(const RingHom& d1, const RingHom& d2);
// d^Γ: identity on the given literals.  Representationally a no-op (absent
// entries already mean identity); entries clashing with `identity_on` are
// dropped only if they are literal identities, otherwise it is a conflict.
RingHom hom_extend_identity(const RingHom& d, const std::set<Literal>& identity_on);
// Res(d): widen the codomain (no representational change).
RingHom hom_res(const RingHom& d);
// Ind(d2) w.r.t. d1: postcompose d2's images with d1 (identity elsewhere).
RingHom hom_ind(const RingHom& d1, const RingHom& d2);
// Restrict to the literals in `keep`.
RingHom hom_restrict(const RingHom& d, const std::set<Literal>& keep);

}  // namespace goi

#endif  // GOI_HOM_HPP
