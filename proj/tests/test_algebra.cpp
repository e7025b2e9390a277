#include <doctest.h>

#include "goi/hom.hpp"
#include "goi/lang.hpp"

using namespace goi;

namespace {
Literal a{1, false}, abar{1, true};
Literal b{2, false}, bbar{2, true};

AlgElem term(const Poly& v, const char* path) {
    return AlgElem::path(PathWord::parse(path)).scaled(v);
}
}  // namespace

TEST_CASE("gf2 polynomial ring laws") {
    Poly pa = Poly::lit(a);
    CHECK(pa.plus(pa).is_zero());  // x + x = 0
    Poly s = pa.plus(Poly::lit(abar));
    // (a + ā)(a + ā) = a² + ā² in characteristic 2
    Poly sq = s.times(s);
    Poly expect = Poly::mono(Monomial::lit(a, 2)).plus(Poly::mono(Monomial::lit(abar, 2)));
    CHECK(sq == expect);
    // a·ā is a real monomial of the raw ring
    Poly prod = pa.times(Poly::lit(abar));
    CHECK(!prod.is_zero());
    CHECK(prod.str() == "a1.ā1");
}

TEST_CASE("path words reduce at the boundary") {
    CHECK(PathWord::p_star().times(PathWord::p()).is_one());   // p*p = 1
    CHECK(PathWord::q_star().times(PathWord::q()).is_one());   // q*q = 1
    CHECK(PathWord::q_star().times(PathWord::p()).is_zero());  // q*p = 0
    CHECK(PathWord::p_star().times(PathWord::q()).is_zero());  // p*q = 0
    // (pq*)(qp*) = pp*
    PathWord x = PathWord::parse("pq*");
    PathWord y = PathWord::parse("qp*");
    CHECK(x.times(y).str() == "pp*");
    // star reverses and swaps
    CHECK(x.star().str() == "qp*");
    CHECK(PathWord::parse("ppq*p*").star().str() == "pqp*p*");
    CHECK(PathWord::parse("ppq*p*").str() == "ppq*p*");
}

TEST_CASE("star algebra laws on samples") {
    AlgElem x = term(Poly::lit(a), "pq*").plus(term(Poly::lit(b), "qp*"));
    AlgElem y = term(Poly::one(), "p");
    CHECK(alg_star(alg_star(x)) == x);
    CHECK(alg_star(alg_mul(x, y)) == alg_mul(alg_star(y), alg_star(x)));
    CHECK(alg_star(AlgElem::one()) == AlgElem::one());
}

TEST_CASE("squares and cubes of a p q superposition") {
    // (a pq* + b qp*)² = ab pp* + ab qq*
    AlgElem x = term(Poly::lit(a), "pq*").plus(term(Poly::lit(b), "qp*"));
    AlgElem x2 = alg_mul(x, x);
    Monomial ab = Monomial::lit(a).times(Monomial::lit(b));
    AlgElem expect2 =
        AlgElem::term(ab, PathWord::parse("pp*")).plus(AlgElem::term(ab, PathWord::parse("qq*")));
    CHECK(x2 == expect2);

    // mod <ab> the square dies
    ReductionMode ann;
    ann.annihilate.insert({a, b});
    CHECK(is_zero(x2, ann));

    // cube mod idempotency: ab pq* + ab qp*
    AlgElem x3 = alg_mul(x2, x);
    ReductionMode idem;
    idem.idempotent.insert(a);
    idem.idempotent.insert(b);
    AlgElem expect3 =
        AlgElem::term(ab, PathWord::parse("pq*")).plus(AlgElem::term(ab, PathWord::parse("qp*")));
    CHECK(reduce(x3, idem) == expect3);

    // scalar-free instance: (pq* + qp*)³ = pq* + qp*
    AlgElem y = term(Poly::one(), "pq*").plus(term(Poly::one(), "qp*"));
    AlgElem y3 = alg_mul(alg_mul(y, y), y);
    CHECK(y3 == y);
}

TEST_CASE("complement elimination and idempotency") {
    // a + ā = 1 under complement elimination
    Poly s = Poly::lit(a).plus(Poly::lit(abar));
    CHECK(reduce(s, mode_cplus()) == Poly::one());
    // aā = 0 once a is also idempotent
    Poly prod = Poly::lit(a).times(Poly::lit(abar));
    ReductionMode m = mode_cplus();
    m.idempotent.insert(a);
    CHECK(is_zero(prod, m));
    CHECK(!is_zero(prod, mode_cplus()));
    CHECK(!is_zero(prod, mode_raw()));
    // zero stays zero raw
    CHECK(is_zero(Poly::zero(), mode_raw()));
}

TEST_CASE("reduce is idempotent and a ring map") {
    auto polys = {
        Poly::lit(a),
        Poly::lit(abar).times(Poly::lit(b)),
        Poly::lit(a).plus(Poly::one()),
        Poly::mono(Monomial::lit(abar, 3)).plus(Poly::mono(Monomial::lit(b, 2))),
    };
    for (const auto& mode : {mode_cplus(), mode_cplustimes_all()}) {
        for (const Poly& x : polys) {
            CHECK(reduce(reduce(x, mode), mode) == reduce(x, mode));
            for (const Poly& y : polys) {
                CHECK(reduce(x.plus(y), mode) ==
                      reduce(reduce(x, mode).plus(reduce(y, mode)), mode));
                CHECK(reduce(x.times(y), mode) ==
                      reduce(reduce(x, mode).times(reduce(y, mode)), mode));
            }
        }
    }
}

TEST_CASE("boolean quotient satisfies x^2 = x") {
    auto mode = mode_cplustimes_all();
    auto polys = {Poly::lit(a).plus(Poly::lit(b)), Poly::lit(abar),
                  Poly::lit(a).times(Poly::lit(b)).plus(Poly::one())};
    for (const Poly& x : polys) {
        Poly r = reduce(x, mode);
        CHECK(reduce(r.times(r), mode) == r);
    }
}

TEST_CASE("languages form a semiring with eps unit") {
    Lang u = Lang::letter(a);
    Lang v = Lang::letter(abar);
    Lang uv = lang_union(u, v);
    CHECK(lang_concat(Lang::epsilon(), uv) == uv);
    CHECK(lang_concat(uv, Lang::zero()).is_zero());
    CHECK(lang_union(uv, uv) == uv);
    // {ε}{a, ā} = {a, ā}
    CHECK(lang_concat(Lang::epsilon(), uv) == uv);
}

TEST_CASE("norm map keeps only fully witnessed weights") {
    Lang both = lang_union(Lang::letter(a), Lang::letter(abar));
    CHECK(lang_norm(both) == std::set<Literal>{a, abar});
    // {ab, ā}: b̄ never occurs, so only the first weight survives
    Lang mixed = Lang::of({{a, b}, {abar}});
    CHECK(lang_norm(mixed) == std::set<Literal>{a, abar});
    CHECK(lang_norm(Lang::letter(a)).empty());
    CHECK(lang_norm(Lang::zero()).empty());

    CHECK(mode_from_lang(both).idempotent == std::set<Literal>{a});
    CHECK(mode_from_lang(Lang::letter(a)).idempotent.empty());
    CHECK(mode_from_lang(Lang::zero()) == mode_cplus());
    // the entry of the paired square: aā : {a,ā} is zero under its own mode
    Poly cross = Poly::lit(a).times(Poly::lit(abar));
    CHECK(is_zero(cross, mode_from_lang(both)));
    CHECK(!is_zero(cross, mode_cplus()));
}

TEST_CASE("norm is monotone") {
    Lang u = Lang::of({{a}});
    Lang v = Lang::of({{a}, {abar, b}});
    auto nu = lang_norm(u), nv = lang_norm(v);
    for (const auto& l : nu) CHECK(nv.count(l));
}

TEST_CASE("ring homomorphisms substitute literals") {
    RingHom d;
    d.set(a, Poly::lit(abar));
    d.set(abar, Poly::lit(a));
    Poly s = Poly::lit(a).plus(Poly::lit(abar));
    CHECK(hom_apply(d, s) == s);  // swapped but equal as a set

    RingHom d2;
    d2.set(Literal{1, false}, Poly::lit(Literal{2, true}));
    d2.set(Literal{1, true}, Poly::lit(Literal{2, false}));
    Poly x = Poly::lit(Literal{1, false}).plus(Poly::lit(Literal{1, true}));
    Poly img = hom_apply(d2, x);
    CHECK(img == Poly::lit(Literal{2, true}).plus(Poly::lit(Literal{2, false})));

    // identity on unmapped literals
    CHECK(hom_apply(RingHom{}, x) == x);

    // valuation d(a)=1, d(ā)=0 picks the p branch
    RingHom v;
    v.set(a, Poly::one());
    v.set(abar, Poly::zero());
    AlgElem e = AlgElem::path(PathWord::parse("pq*")).scaled(Poly::lit(a)).plus(
        AlgElem::path(PathWord::parse("qp*")).scaled(Poly::lit(abar)));
    CHECK(hom_apply(v, e) == AlgElem::path(PathWord::parse("pq*")));
}

TEST_CASE("hom union composition and conflicts") {
    RingHom d1, d2;
    d1.set(a, Poly::one());
    d2.set(b, Poly::zero());
    RingHom u = hom_union(d1, d2);
    CHECK(u.maps(a));
    CHECK(u.maps(b));
    RingHom clash;
    clash.set(a, Poly::zero());
    CHECK_THROWS_AS(hom_union(d1, clash), DomainOverlapConflict);

    RingHom inner;
    inner.set(a, Poly::lit(b));
    RingHom outer;
    outer.set(b, Poly::one());
    RingHom comp = hom_compose(outer, inner);
    CHECK(hom_apply(comp, Poly::lit(a)) == Poly::one());
}

TEST_CASE("collapse and monomial components") {
    AlgElem e = AlgElem::term(Monomial::lit(a), PathWord::parse("qp*"))
                    .plus(AlgElem::term(Monomial::lit(abar), PathWord::parse("pq*")));
    auto comps = monomial_components(e);
    CHECK(comps.size() == 2);
    CHECK(collapse_w(comps[0]) == Monomial::lit(a));
    Monomial big = Monomial::lit(a, 2).times(Monomial::lit(b));
    CHECK(collapse_w({big, PathWord::parse("pq*")}) == big);
}

TEST_CASE("canonical text renderings") {
    Monomial m = Monomial::lit(a, 2).times(Monomial::lit(Literal{3, true}));
    CHECK(m.str() == "a1^2.ā3");
    AlgElem e = AlgElem::term(Monomial::lit(a), PathWord::parse("pq*"))
                    .plus(AlgElem::term(Monomial::lit(abar), PathWord::parse("pq*")));
    CHECK(e.str() == "(a1+ā1)·pq*");
    CHECK(AlgElem::zero().str() == "0");
    CHECK(AlgElem::one().str() == "1");
}
