#include "goi/equations.hpp"

#include <algorithm>
#include <functional>

namespace goi {

namespace {

bool has_complementary_pair(const Monomial& m) {
    for (const auto& [l, e] : m.factors())
        if (!l.bar && m.contains(l.opposite())) return true;
    return false;
}

}  // namespace

std::set<MonEq> e_set(const AlgElem& left, const AlgElem& right, EqOrder order) {
    std::set<MonEq> out;
    for (const auto& [ml, sl] : left.terms())
        for (const auto& [mr, sr] : right.terms()) {
            PathWord prod = order == EqOrder::Composition ? sl.times(sr) : sr.times(sl);
            if (prod.is_zero()) continue;
            if (has_complementary_pair(ml.times(mr))) continue;
            out.insert(MonEq(ml, mr));
        }
    return out;
}

EqSystem eq_system(const FMatrix& u, const Pairs& pairs, EqOrder order) {
    if (!u.is_square()) throw IndexMismatch("eq_system needs a square matrix");
    EqSystem sys;
    int n = u.nrows();
    for (const auto& [a, b] : pairs) {
        int hop[2][2] = {{a, b}, {b, a}};  // (δ, σδ)
        for (auto& h : hop) {
            int delta = h[0], sigma_delta = h[1];
            for (int x = 0; x < n; ++x) {
                const AlgElem* lf = u.find(x, sigma_delta);
                if (!lf) continue;
                for (int y = 0; y < n; ++y) {
                    const AlgElem* rf = u.find(delta, y);
                    if (!rf) continue;
                    auto eqs = e_set(*lf, *rf, order);
                    sys.equations.insert(eqs.begin(), eqs.end());
                }
            }
        }
    }
    return sys;
}

EqSystem eq_system(const ProofPtr& p, EqOrder order) {
    FMatrix u = interpret(p);
    EqSystem sys = eq_system(u, cut_pairs(p->seq), order);
    sys.delta_literals = literals_of_delta(p->seq);
    sys.gamma_literals = literals_of_gamma(p->seq);
    return sys;
}

std::optional<MonEq> check_solution(const EqSystem& sys, const RingHom& d) {
    ReductionMode mode = mode_cplustimes_all();
    for (const MonEq& eq : sys.equations) {
        Poly l = reduce(hom_apply(d, eq.lhs), mode);
        Poly r = reduce(hom_apply(d, eq.rhs), mode);
        if (!(l == r)) return eq;
    }
    return std::nullopt;
}

bool partition_check(const FMatrix& u, const Pairs& p1, const Pairs& p2) {
    Pairs both = p1;
    both.insert(both.end(), p2.begin(), p2.end());
    EqSystem whole = eq_system(u, both);
    EqSystem left = eq_system(u, p1);
    EqSystem right = eq_system(u, p2);
    std::set<MonEq> uni = left.equations;
    uni.insert(right.equations.begin(), right.equations.end());
    return whole.equations == uni;
}

// ---------------------------------------------------------------------------
// Constructive solver.
//
// Cuts are solved on a flattened view: the maximal tree of cut rules at the
// root becomes a set of non-cut parts joined by pairs.  Pairs whose both
// endpoints are principal get the key treatment (axiom pairs are mere relays,
// tensor/par pairs split, with/plus pairs prune), and a pair ending at a
// context position commutes into its owner part; a with owner superposes the
// solutions of its two branch nets and pins its own weight to 1, because
// feedback re-entering through the superposed context picks that weight up.

namespace {

using Assign = std::map<Literal, Poly>;

int kth_excluding(int k, std::vector<int> removed, int n) {
    std::sort(removed.begin(), removed.end());
    int count = -1;
    for (int i = 0; i < n; ++i) {
        if (std::find(removed.begin(), removed.end(), i) != removed.end()) continue;
        if (++count == k) return i;
    }
    throw DanglingOccurrence("conclusion position out of range");
}

Assign solve_rec(const ProofPtr& p);

Poly effective(const Assign& m, Literal c, const std::set<Literal>& delta_lits) {
    auto it = m.find(c);
    if (it != m.end()) return it->second;
    if (delta_lits.count(c)) return Poly::zero();
    return Poly::lit(c);
}

// superpose two branch solutions through the weight a: private literals keep
// their branch value, shared assigned literals become a·d1(c) + ā·d2(c)
Assign superpose_assignments(const Assign& m1, const Assign& m2,
                             const std::set<Literal>& l1, const std::set<Literal>& l2,
                             const std::set<Literal>& d1, const std::set<Literal>& d2,
                             WeightId w) {
    Poly a = Poly::lit(Literal{w, false});
    Poly abar = Poly::lit(Literal{w, true});

    Assign out;
    std::set<Literal> keys;
    for (const auto& [c, v] : m1) keys.insert(c);
    for (const auto& [c, v] : m2) keys.insert(c);
    for (const Literal& c : keys) {
        bool shared = l1.count(c) && l2.count(c);
        if (!shared) {
            if (m1.count(c)) out[c] = m1.at(c);
            if (m2.count(c)) out[c] = m2.at(c);
            continue;
        }
        Poly v1 = effective(m1, c, d1);
        Poly v2 = effective(m2, c, d2);
        out[c] = a.times(v1).plus(abar.times(v2));
    }
    return out;
}

Assign merge_disjoint(Assign a, const Assign& b) {
    for (const auto& [c, v] : b) a[c] = v;
    return a;
}

struct FlatEnd {
    int part;
    int pos;
};

int with_cmap(const ProofPtr& w, int ordinal) {
    return w->ctx_map.empty() ? ordinal : w->ctx_map.at(ordinal);
}

struct FlatNet {
    std::vector<ProofPtr> parts;  // rooted by non-cut rules
    std::vector<std::pair<FlatEnd, FlatEnd>> pairs;

    Formula end_formula(const FlatEnd& e) const {
        const Sequent& s = parts[e.part]->seq;
        return s.at(s.conclusion.at(e.pos)).formula;
    }
    std::set<Literal> literals() const {
        std::set<Literal> out;
        for (const auto& p : parts)
            for (const Literal& l : literals_of(p->seq)) out.insert(l);
        return out;
    }
    std::set<Literal> delta_literals() const {
        std::set<Literal> out;
        for (const auto& p : parts)
            for (const Literal& l : literals_of_delta(p->seq)) out.insert(l);
        for (const auto& [x, y] : pairs)
            for (const FlatEnd& e : {x, y}) {
                const Sequent& s = parts[e.part]->seq;
                for (const Literal& l : literals_of(s, s.conclusion.at(e.pos))) out.insert(l);
            }
        return out;
    }
};

struct Flattened {
    FlatNet net;
    std::vector<FlatEnd> concl;
};

Flattened flatten(const ProofPtr& p) {
    if (p->rule != Rule::Cut) {
        Flattened f;
        f.net.parts = {p};
        for (int i = 0; i < static_cast<int>(p->seq.conclusion.size()); ++i)
            f.concl.push_back({0, i});
        return f;
    }
    Flattened f1 = flatten(p->premises[0]);
    Flattened f2 = flatten(p->premises[1]);
    int off = static_cast<int>(f1.net.parts.size());
    Flattened out;
    out.net.parts = f1.net.parts;
    out.net.parts.insert(out.net.parts.end(), f2.net.parts.begin(), f2.net.parts.end());
    out.net.pairs = f1.net.pairs;
    for (auto [x, y] : f2.net.pairs)
        out.net.pairs.push_back({{x.part + off, x.pos}, {y.part + off, y.pos}});
    FlatEnd c1 = f1.concl.at(p->principal1);
    FlatEnd c2 = f2.concl.at(p->principal2);
    out.net.pairs.push_back({c1, {c2.part + off, c2.pos}});
    for (int i = 0; i < static_cast<int>(f1.concl.size()); ++i)
        if (i != p->principal1) out.concl.push_back(f1.concl[i]);
    for (int i = 0; i < static_cast<int>(f2.concl.size()); ++i)
        if (i != p->principal2)
            out.concl.push_back({f2.concl[i].part + off, f2.concl[i].pos});
    return out;
}

bool is_principal_end(const FlatNet& net, const FlatEnd& e) {
    const ProofPtr& t = net.parts[e.part];
    if (t->rule == Rule::Ax) return true;
    return e.pos == static_cast<int>(t->seq.conclusion.size()) - 1;
}

// replace part k's endpoint positions with premise positions; `map` sends an
// old conclusion position to (new part, new pos)
void remap_ends(FlatNet& net, int k, const std::function<FlatEnd(int)>& map,
                int limit = -1) {
    std::size_t n = limit < 0 ? net.pairs.size() : static_cast<std::size_t>(limit);
    for (std::size_t i = 0; i < n; ++i)
        for (FlatEnd* e : {&net.pairs[i].first, &net.pairs[i].second})
            if (e->part == k) *e = map(e->pos);
}

Flattened flatten(const ProofPtr& p);

// install `sub` in slot k, splicing its own cut tree into the net; returns
// the map from sub's conclusion positions to flat endpoints
std::function<FlatEnd(int)> install_part(FlatNet& net, int k, const ProofPtr& sub) {
    if (sub->rule != Rule::Cut) {
        net.parts[k] = sub;
        return [k](int pos) { return FlatEnd{k, pos}; };
    }
    Flattened f = flatten(sub);
    int base = static_cast<int>(net.parts.size());
    net.parts[k] = f.net.parts[0];
    for (std::size_t i = 1; i < f.net.parts.size(); ++i) net.parts.push_back(f.net.parts[i]);
    auto relocate = [k, base](FlatEnd e) {
        return FlatEnd{e.part == 0 ? k : base + e.part - 1, e.pos};
    };
    for (auto [x, y] : f.net.pairs) net.pairs.push_back({relocate(x), relocate(y)});
    std::vector<FlatEnd> concl = f.concl;
    return [concl, relocate](int pos) { return relocate(concl.at(pos)); };
}

Assign solve_flat(FlatNet net);

// matrix and equation system of a flat cluster: parts assembled diagonally,
// the flat pairs fed back
EqSystem local_system(const FlatNet& net) {
    std::vector<Mat<AlgElem>> blocks;
    std::vector<int> gamma_off(net.parts.size());
    int off = 0;
    for (std::size_t i = 0; i < net.parts.size(); ++i) {
        FMatrix m = interpret(net.parts[i]);
        gamma_off[i] = off + static_cast<int>(net.parts[i]->seq.delta_size());
        off += m.nrows();
        blocks.push_back(std::move(m));
    }
    FMatrix u = dg(blocks);
    Pairs pairs;
    for (const auto& [x, y] : net.pairs)
        pairs.push_back({gamma_off[x.part] + x.pos, gamma_off[y.part] + y.pos});
    return eq_system(u, pairs);
}

bool valid_locally(const FlatNet& net, const Assign& m) {
    RingHom d;
    for (const auto& [c, v] : m) d.set(c, v);
    for (const Literal& c : net.delta_literals())
        if (!m.count(c)) d.set(c, Poly::zero());
    return !check_solution(local_system(net), d).has_value();
}

// owner part k is a with; superpose the branch nets
Assign split_with(const FlatNet& net, int k) {
    ProofPtr t = net.parts[k];
    WeightId w = t->seq.at(t->seq.conclusion.back()).weight;
    FlatNet nets[2];
    std::set<Literal> lits[2], dlits[2];
    for (int side = 0; side < 2; ++side) {
        ProofPtr prem = t->premises[side];
        int principal = side == 0 ? t->principal1 : t->principal2;
        FlatNet n = net;
        int old_pairs = static_cast<int>(n.pairs.size());
        auto mapp = install_part(n, k, prem);
        int psize = static_cast<int>(prem->seq.conclusion.size());
        remap_ends(n, k, [&](int pos) -> FlatEnd {
            int ordinal = side == 0 ? pos : with_cmap(t, pos);
            return mapp(kth_excluding(ordinal, {principal}, psize));
        }, old_pairs);
        lits[side] = n.literals();
        dlits[side] = n.delta_literals();
        nets[side] = std::move(n);
    }
    Assign m1 = solve_flat(nets[0]);
    Assign m2 = solve_flat(nets[1]);
    Assign m = superpose_assignments(m1, m2, lits[0], lits[1], dlits[0], dlits[1], w);
    // Feedback re-entering through the superposed context picks the weight up
    // against the other flows.  Sometimes that forces both its literals to 1
    // (scalar-free relays), sometimes it must stay free (the superposed
    // images discriminate the branches through it); validate locally.
    if (valid_locally(net, m)) return m;
    Assign pinned = m;
    pinned[Literal{w, false}] = Poly::one();
    pinned[Literal{w, true}] = Poly::one();
    if (valid_locally(net, pinned)) return pinned;
    return m;
}

Assign solve_flat(FlatNet net) {
    // key pairs first: both endpoints principal
    for (std::size_t i = 0; i < net.pairs.size(); ++i) {
        auto [ea, eb] = net.pairs[i];
        if (!is_principal_end(net, ea) || !is_principal_end(net, eb)) continue;
        ProofPtr ta = net.parts[ea.part];
        ProofPtr tb = net.parts[eb.part];
        if (ta->rule == Rule::Ax || tb->rule == Rule::Ax) {
            // atomic relay: its equations are tautologies
            net.pairs.erase(net.pairs.begin() + static_cast<long>(i));
            return solve_flat(std::move(net));
        }
        bool a_tensor = ta->rule == Rule::Tensor && tb->rule == Rule::Par;
        bool b_tensor = ta->rule == Rule::Par && tb->rule == Rule::Tensor;
        if (a_tensor || b_tensor) {
            FlatEnd et = a_tensor ? ea : eb;  // tensor side
            FlatEnd ep = a_tensor ? eb : ea;
            ProofPtr tt = net.parts[et.part];
            ProofPtr tp = net.parts[ep.part];
            ProofPtr f1 = tt->premises[0];
            ProofPtr f2 = tt->premises[1];
            ProofPtr rho = tp->premises[0];
            net.pairs.erase(net.pairs.begin() + static_cast<long>(i));
            int old_pairs = static_cast<int>(net.pairs.size());
            int newpart = static_cast<int>(net.parts.size());
            net.parts.push_back(nullptr);
            auto map1 = install_part(net, et.part, f1);
            auto map2 = install_part(net, newpart, f2);
            auto mapr = install_part(net, ep.part, rho);
            int n1 = static_cast<int>(f1->seq.conclusion.size());
            int t1 = tt->principal1, t2 = tt->principal2;
            remap_ends(net, et.part, [&](int pos) -> FlatEnd {
                if (pos < n1 - 1) return map1(kth_excluding(pos, {t1}, n1));
                return map2(kth_excluding(pos - (n1 - 1), {t2},
                                          static_cast<int>(f2->seq.conclusion.size())));
            }, old_pairs);
            int pa = tp->principal1, pb = tp->principal2;
            remap_ends(net, ep.part, [&](int pos) -> FlatEnd {
                return mapr(kth_excluding(pos, {pa, pb},
                                          static_cast<int>(rho->seq.conclusion.size())));
            }, old_pairs);
            // the key pair becomes the two argument pairs
            net.pairs.push_back({map1(t1), mapr(pa)});
            net.pairs.push_back({map2(t2), mapr(pb)});
            return solve_flat(std::move(net));
        }
        bool a_with = ta->rule == Rule::With &&
                      (tb->rule == Rule::Plus1 || tb->rule == Rule::Plus2);
        bool b_with = tb->rule == Rule::With &&
                      (ta->rule == Rule::Plus1 || ta->rule == Rule::Plus2);
        if (a_with || b_with) {
            FlatNet snapshot = net;
            FlatEnd ew = a_with ? ea : eb;
            FlatEnd epl = a_with ? eb : ea;
            ProofPtr tw = net.parts[ew.part];
            ProofPtr tp = net.parts[epl.part];
            int k = tp->rule == Rule::Plus1 ? 0 : 1;
            WeightId w = tw->seq.at(tw->seq.conclusion.back()).weight;
            ProofPtr live = tw->premises[k];
            ProofPtr dead = tw->premises[1 - k];
            int live_principal = k == 0 ? tw->principal1 : tw->principal2;
            ProofPtr rho = tp->premises[0];

            int old_pairs = static_cast<int>(net.pairs.size());
            auto mapl = install_part(net, ew.part, live);
            auto mapr = install_part(net, epl.part, rho);
            int lsize = static_cast<int>(live->seq.conclusion.size());
            remap_ends(net, ew.part, [&](int pos) -> FlatEnd {
                if (pos == static_cast<int>(tw->seq.conclusion.size()) - 1)
                    return mapl(live_principal);
                int ordinal = k == 0 ? pos : with_cmap(tw, pos);
                return mapl(kth_excluding(ordinal, {live_principal}, lsize));
            }, old_pairs);
            remap_ends(net, epl.part, [&](int pos) -> FlatEnd {
                if (pos == static_cast<int>(tp->seq.conclusion.size()) - 1)
                    return mapr(tp->principal1);
                return mapr(kth_excluding(pos, {tp->principal1},
                                          static_cast<int>(rho->seq.conclusion.size())));
            }, old_pairs);
            Assign m = solve_flat(std::move(net));
            // the live branch literal is forced to 1 by the selected flows;
            // the dead literal is usually free (zeroed with its private
            // weights), but other flows through the with context can still
            // constrain it, in which case it collapses to 1 as well
            m[Literal{w, k == 1}] = Poly::one();
            std::set<Literal> dead_lits = literals_of(dead->seq);
            std::set<Literal> live_lits = literals_of(live->seq);
            Assign zeroed = m;
            zeroed[Literal{w, k == 0}] = Poly::zero();
            for (const Literal& c : dead_lits)
                if (!live_lits.count(c) && !zeroed.count(c)) zeroed[c] = Poly::zero();
            if (valid_locally(snapshot, zeroed)) return zeroed;
            Assign ones = m;
            ones[Literal{w, k == 0}] = Poly::one();
            for (const Literal& c : dead_lits)
                if (!live_lits.count(c) && !ones.count(c)) ones[c] = Poly::zero();
            if (valid_locally(snapshot, ones)) return ones;
            return zeroed;
        }
        throw ProofError("solve: mismatched dual introductions");
    }

    // no key pair: find a context endpoint whose owner's principal is free,
    // walking principal-to-principal pair links (the pair graph is a tree)
    if (!net.pairs.empty()) {
        FlatEnd work = net.pairs.front().first;
        if (is_principal_end(net, work)) work = net.pairs.front().second;
        for (int guard = 0; guard <= static_cast<int>(net.pairs.size()); ++guard) {
            const ProofPtr& t = net.parts[work.part];
            if (t->rule == Rule::Ax)
                throw ProofError("solve: axiom endpoint cannot be a context");
            int principal = static_cast<int>(t->seq.conclusion.size()) - 1;
            bool principal_paired = false;
            for (const auto& [x, y] : net.pairs) {
                const FlatEnd* opposite = nullptr;
                if (x.part == work.part && x.pos == principal) opposite = &y;
                if (y.part == work.part && y.pos == principal) opposite = &x;
                if (opposite) {
                    principal_paired = true;
                    work = *opposite;  // that endpoint is a context (no key pair)
                    break;
                }
            }
            if (!principal_paired) break;
        }

        int k = work.part;
        ProofPtr t = net.parts[k];
        switch (t->rule) {
            case Rule::Par: {
                ProofPtr rho = t->premises[0];
                int pa = t->principal1, pb = t->principal2;
                int old_pairs = static_cast<int>(net.pairs.size());
                auto mapr = install_part(net, k, rho);
                remap_ends(net, k, [&](int pos) -> FlatEnd {
                    return mapr(kth_excluding(pos, {pa, pb},
                                              static_cast<int>(rho->seq.conclusion.size())));
                }, old_pairs);
                return solve_flat(std::move(net));
            }
            case Rule::Plus1:
            case Rule::Plus2: {
                ProofPtr rho = t->premises[0];
                int pa = t->principal1;
                int old_pairs = static_cast<int>(net.pairs.size());
                auto mapr = install_part(net, k, rho);
                remap_ends(net, k, [&](int pos) -> FlatEnd {
                    return mapr(kth_excluding(pos, {pa},
                                              static_cast<int>(rho->seq.conclusion.size())));
                }, old_pairs);
                return solve_flat(std::move(net));
            }
            case Rule::Tensor: {
                ProofPtr f1 = t->premises[0];
                ProofPtr f2 = t->premises[1];
                int t1 = t->principal1, t2 = t->principal2;
                int old_pairs = static_cast<int>(net.pairs.size());
                int newpart = static_cast<int>(net.parts.size());
                net.parts.push_back(nullptr);
                auto map1 = install_part(net, k, f1);
                auto map2 = install_part(net, newpart, f2);
                int n1 = static_cast<int>(f1->seq.conclusion.size());
                remap_ends(net, k, [&](int pos) -> FlatEnd {
                    if (pos < n1 - 1) return map1(kth_excluding(pos, {t1}, n1));
                    return map2(kth_excluding(pos - (n1 - 1), {t2},
                                              static_cast<int>(f2->seq.conclusion.size())));
                }, old_pairs);
                return solve_flat(std::move(net));
            }
            case Rule::With:
                return split_with(net, k);
            case Rule::Cut:
            case Rule::Ax:
                throw ProofError("solve: unexpected part rule");
        }
        throw ProofError("solve: unreachable");
    }

    // pairless: the parts stand alone
    Assign out;
    for (const auto& part : net.parts) out = merge_disjoint(out, solve_rec(part));
    return out;
}

Assign solve_rec(const ProofPtr& p) {
    switch (p->rule) {
        case Rule::Ax:
            return {};
        case Rule::Par:
        case Rule::Plus1:
        case Rule::Plus2:
            return solve_rec(p->premises[0]);
        case Rule::Tensor:
            return merge_disjoint(solve_rec(p->premises[0]), solve_rec(p->premises[1]));
        case Rule::With: {
            WeightId w = p->seq.at(p->seq.conclusion.back()).weight;
            Assign m1 = solve_rec(p->premises[0]);
            Assign m2 = solve_rec(p->premises[1]);
            return superpose_assignments(m1, m2, literals_of(p->premises[0]->seq),
                                         literals_of(p->premises[1]->seq),
                                         literals_of_delta(p->premises[0]->seq),
                                         literals_of_delta(p->premises[1]->seq), w);
        }
        case Rule::Cut:
            return solve_flat(flatten(p).net);
    }
    throw ProofError("solve: unknown rule");
}

}  // namespace

Solution solve(const ProofPtr& p) {
    Assign m = solve_rec(p);
    Solution sol;
    for (const auto& [c, v] : m) sol.hom.set(c, v);
    for (const Literal& c : literals_of_delta(p->seq))
        if (!m.count(c)) {
            sol.free_lits.insert(c);
            sol.hom.set(c, Poly::zero());
        }
    return sol;
}

}  // namespace goi
