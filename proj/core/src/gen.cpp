#include "goi/gen.hpp"

namespace goi {

namespace {
const char* kAtoms[] = {"X", "Y", "Z"};
}

ProofGen::ProofGen(std::uint64_t seed, GenOptions opt) : rng_(seed), opt_(opt) {}

int ProofGen::pick(int n) {
    return static_cast<int>(std::uniform_int_distribution<int>(0, n - 1)(rng_));
}

bool ProofGen::chance(double p) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng_) < p;
}

Formula ProofGen::formula(int depth) {
    if (depth <= 0 || chance(0.4)) return Formula::atom(kAtoms[pick(3)], chance(0.7));
    Formula l = formula(depth - 1);
    Formula r = formula(depth - 1);
    switch (pick(4)) {
        case 0: return Formula::tensor(l, r);
        case 1: return Formula::par(l, r);
        case 2: return withs_ < opt_.max_withs ? Formula::with(l, r) : Formula::tensor(l, r);
        default: return Formula::plus(l, r);
    }
}

int ProofGen::additive_count(const Formula& f) {
    if (f.is_atom()) return 0;
    int self = f.conn() == Conn::With || f.conn() == Conn::Plus ? 1 : 0;
    return self + additive_count(f.left()) + additive_count(f.right());
}

std::pair<ProofPtr, int> ProofGen::expansion(const Formula& f) {
    if (f.is_atom()) return {Proof::ax(f.atom_name(), f.atom_positive()), 0};
    auto [el, pl] = expansion(f.left());
    auto [er, pr] = expansion(f.right());
    switch (f.conn()) {
        case Conn::Tensor: {
            // ⊢ G~, H~, G⊗H then par the duals
            ProofPtr t = Proof::tensor(el, er, pl, pr);
            ProofPtr p = Proof::par(t, 0, 1);
            return {p, 0};  // conclusion: [G⊗H, G~|H~] -> F at 0? check below
        }
        case Conn::Par: {
            ProofPtr t = Proof::tensor(el, er, 1 - pl, 1 - pr);
            ProofPtr p = Proof::par(t, 0, 1);
            return {p, 1};  // [G~⊗H~, G|H]
        }
        case Conn::With: {
            ++withs_;
            ProofPtr p1 = Proof::plus1(el, 1 - pl, f.right().negate());
            ProofPtr p2 = Proof::plus2(er, 1 - pr, f.left().negate());
            ProofPtr w = Proof::with(p1, p2, 0, 0, {});
            return {w, 1};  // [G~+H~, G&H]
        }
        case Conn::Plus: {
            ++withs_;
            ProofPtr p1 = Proof::plus1(el, pl, f.right());
            ProofPtr p2 = Proof::plus2(er, pr, f.left());
            ProofPtr w = Proof::with(p1, p2, 0, 0, {});
            return {w, 0};  // [G+H, G~&H~]
        }
        default: break;
    }
    throw ProofError("expansion: unreachable");
}

ProofPtr ProofGen::gen(int depth) {
    if (depth <= 0) return Proof::ax(kAtoms[pick(3)], chance(0.7));
    switch (pick(6)) {
        case 0:
            return Proof::ax(kAtoms[pick(3)], chance(0.7));
        case 1: {  // par
            ProofPtr p = gen(depth - 1);
            int n = static_cast<int>(p->seq.conclusion.size());
            if (n < 2) return p;
            int a = pick(n), b = pick(n);
            if (a == b) b = (b + 1) % n;
            return Proof::par(p, a, b);
        }
        case 2: {  // tensor
            ProofPtr a = gen(depth - 1);
            ProofPtr b = gen(depth - 1);
            return Proof::tensor(a, b, pick(static_cast<int>(a->seq.conclusion.size())),
                                 pick(static_cast<int>(b->seq.conclusion.size())));
        }
        case 3: {  // plus
            ProofPtr p = gen(depth - 1);
            Formula side = formula(opt_.formula_depth);
            if (withs_ + additive_count(side) > opt_.max_withs)
                side = Formula::atom(kAtoms[pick(3)], chance(0.7));
            int pos = pick(static_cast<int>(p->seq.conclusion.size()));
            return chance(0.5) ? Proof::plus1(p, pos, side) : Proof::plus2(p, pos, side);
        }
        case 4: {  // with over a structural twin
            if (withs_ >= opt_.max_withs) return gen(depth - 1);
            ++withs_;
            ProofPtr p1 = gen(depth - 1);
            ProofPtr p2 = p1;  // twin; plus flips would also be admissible
            int pos = pick(static_cast<int>(p1->seq.conclusion.size()));
            int ncuts = static_cast<int>(p1->seq.cuts.size());
            std::vector<std::pair<int, int>> sup;
            for (int i = 0; i < ncuts; ++i)
                if (chance(0.5)) sup.push_back({i, i});
            return Proof::with(p1, p2, pos, pos, sup);
        }
        default: {  // cut against an expanded axiom
            if (cuts_ >= opt_.max_cuts) return gen(depth - 1);
            ++cuts_;
            ProofPtr a = gen(depth - 1);
            int pos = pick(static_cast<int>(a->seq.conclusion.size()));
            Formula c = a->seq.at(a->seq.conclusion[pos]).formula;
            if (withs_ + additive_count(c) > opt_.max_withs) {
                ProofPtr ax = Proof::ax(kAtoms[pick(3)], true);
                return Proof::tensor(a, ax, pos, 0);
            }
            auto [b, bpos] = expansion(c.negate());
            return Proof::cut(a, b, pos, bpos);
        }
    }
}

ProofPtr ProofGen::proof() {
    withs_ = 0;
    cuts_ = 0;
    ProofPtr p = gen(opt_.max_depth);
    return assign_eigenweights(p);
}

}  // namespace goi
