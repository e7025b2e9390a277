#include "goi/hom.hpp"

namespace goi {

std::string RingHom::str() const {
    std::string s = "{";
    bool first = true;
    for (const auto& [l, v] : subst) {
        if (!first) s += ", ";
        first = false;
        s += l.str() + " := " + v.str();
    }
    return s + "}";
}

RingHom hom_identity() { return RingHom{}; }

RingHom hom_zero_on(const std::set<Literal>& lits) {
    RingHom d;
    for (const auto& l : lits) d.set(l, Poly::zero());
    return d;
}

Poly hom_apply(const RingHom& d, const Monomial& m) {
    Poly acc = Poly::one();
    for (const auto& [l, e] : m.factors()) {
        Poly base = d.maps(l) ? *d.image(l) : Poly::lit(l);
        for (Exponent i = 0; i < e; ++i) acc = acc.times(base);
    }
    return acc;
}

Poly hom_apply(const RingHom& d, const Poly& x) {
    Poly out;
    for (const auto& m : x.monomials()) out = out.plus(hom_apply(d, m));
    return out;
}

AlgElem hom_apply(const RingHom& d, const AlgElem& x) {
    AlgElem out;
    for (const auto& [m, s] : x.terms()) {
        Poly v = hom_apply(d, m);
        out = out.plus(AlgElem::path(s).scaled(v));
    }
    return out;
}

RingHom hom_compose(const RingHom& d2, const RingHom& d1) {
    RingHom r = d2;
    for (const auto& [l, v] : d1.subst) r.subst[l] = hom_apply(d2, v);
    return r;
}

RingHom hom_union(const RingHom& d1, const RingHom& d2) {
    RingHom r = d1;
    for (const auto& [l, v] : d2.subst) {
        auto it = r.subst.find(l);
        if (it != r.subst.end() && it->second != v)
            throw DomainOverlapConflict("hom_union disagrees on " + l.str());
        r.subst[l] = v;
    }
    return r;
}

RingHom hom_extend_identity(const RingHom& d, const std::set<Literal>& identity_on) {
    RingHom r = d;
    for (const auto& l : identity_on) {
        auto it = r.subst.find(l);
        if (it != r.subst.end() && it->second != Poly::lit(l))
            throw DomainOverlapConflict("identity extension clashes on " + l.str());
        r.subst.erase(l);
    }
    return r;
}

RingHom hom_res(const RingHom& d) { return d; }

RingHom hom_ind(const RingHom& d1, const RingHom& d2) {
    RingHom r;
    for (const auto& [l, v] : d2.subst) r.set(l, hom_apply(d1, v));
    return r;
}

RingHom hom_restrict(const RingHom& d, const std::set<Literal>& keep) {
    RingHom r;
    for (const auto& [l, v] : d.subst)
        if (keep.count(l)) r.set(l, v);
    return r;
}

}  // namespace goi
