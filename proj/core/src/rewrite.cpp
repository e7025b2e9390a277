#include "goi/rewrite.hpp"

#include <algorithm>

namespace goi {

std::string step_kind_name(StepKind k) {
    switch (k) {
        case StepKind::AxCut: return "ax-cut";
        case StepKind::KeyTensorPar: return "key-tensor-par";
        case StepKind::KeyWithPlus: return "key-with-plus";
        case StepKind::CommuteWith_Superposed: return "commute-with-superposed";
        case StepKind::CommuteWith_Duplicating: return "commute-with-duplicating";
        case StepKind::CommuteOther: return "commute";
    }
    return "?";
}

namespace {

struct LocalResult {
    ProofPtr proof;
    std::vector<int> concl_map;  // old conclusion position -> new
    std::vector<int> cut_map;    // old cut index -> new, -1 = consumed
    StepKind kind = StepKind::CommuteOther;
    RingHom hom;
};

int kth_excluding(int k, std::vector<int> removed, int n) {
    std::sort(removed.begin(), removed.end());
    int count = -1;
    for (int i = 0; i < n; ++i) {
        if (std::find(removed.begin(), removed.end(), i) != removed.end()) continue;
        if (++count == k) return i;
    }
    throw DanglingOccurrence("position out of range");
}

// rank of position j within [0..n) after excluding `removed`
int rank_excluding(int j, std::vector<int> removed, int n) {
    int count = 0;
    for (int i = 0; i < n; ++i) {
        if (std::find(removed.begin(), removed.end(), i) != removed.end()) continue;
        if (i == j) return count;
        ++count;
    }
    throw DanglingOccurrence("rank of an excluded position");
}

int shifted(int pos, int removed) { return pos - (pos > removed ? 1 : 0); }

bool introduces(const ProofPtr& premise, int pos) {
    if (premise->rule == Rule::Ax) return true;
    return pos == static_cast<int>(premise->seq.conclusion.size()) - 1 &&
           premise->rule != Rule::Cut;
}

std::set<WeightId> weights_of(const std::set<Literal>& lits) {
    std::set<WeightId> out;
    for (const auto& l : lits) out.insert(l.weight);
    return out;
}

// identity conclusion map
std::vector<int> idmap(int n) {
    std::vector<int> m(n);
    for (int i = 0; i < n; ++i) m[i] = i;
    return m;
}

LocalResult reduce_cut_node(const ProofPtr& node, const RewriteOptions& opt,
                            WeightId& next_weight);

// ---------------------------------------------------------------------------
// local cases

LocalResult ax_case(const ProofPtr& node, bool ax_left) {
    const ProofPtr& ax = ax_left ? node->premises[0] : node->premises[1];
    const ProofPtr& body = ax_left ? node->premises[1] : node->premises[0];
    int pos_ax = ax_left ? node->principal1 : node->principal2;
    int pos_body = ax_left ? node->principal2 : node->principal1;
    (void)ax;
    (void)pos_ax;

    LocalResult r;
    r.kind = StepKind::AxCut;
    r.proof = body;
    int nb = static_cast<int>(body->seq.conclusion.size());
    int nold = static_cast<int>(node->seq.conclusion.size());
    r.concl_map.assign(nold, -1);
    if (ax_left) {
        // old conclusion: [ax leftover] + (body Γ minus the cut occurrence)
        r.concl_map[0] = pos_body;
        for (int k = 1; k < nold; ++k) r.concl_map[k] = kth_excluding(k - 1, {pos_body}, nb);
    } else {
        for (int k = 0; k + 1 < nold; ++k) r.concl_map[k] = kth_excluding(k, {pos_body}, nb);
        r.concl_map[nold - 1] = pos_body;
    }
    // old cuts: body cuts then the redex pair
    int bc = static_cast<int>(body->seq.cuts.size());
    r.cut_map.assign(bc + 1, -1);
    for (int i = 0; i < bc; ++i) r.cut_map[i] = i;
    return r;
}

LocalResult key_tensor_par(const ProofPtr& node, bool tensor_left) {
    const ProofPtr& t = tensor_left ? node->premises[0] : node->premises[1];
    const ProofPtr& p = tensor_left ? node->premises[1] : node->premises[0];
    const ProofPtr& pa = t->premises[0];
    const ProofPtr& pb = t->premises[1];
    const ProofPtr& rho = p->premises[0];

    LocalResult r;
    r.kind = StepKind::KeyTensorPar;
    if (tensor_left) {
        // cut(A⊗B, ρ with A~,B~): cut(πA, cut(πB, ρ ; B) ; A)
        ProofPtr inner = Proof::cut(pb, rho, t->principal2, p->principal2);
        int pos_abar = static_cast<int>(pb->seq.conclusion.size()) - 1 +
                       shifted(p->principal1, p->principal2);
        r.proof = Proof::cut(pa, inner, t->principal1, pos_abar);
    } else {
        ProofPtr inner = Proof::cut(rho, pa, p->principal1, t->principal1);
        int pos_b = shifted(p->principal2, p->principal1);
        r.proof = Proof::cut(inner, pb, pos_b, t->principal2);
    }
    int nold = static_cast<int>(node->seq.conclusion.size());
    r.concl_map = idmap(nold);

    // old cuts: [left premise cuts, right premise cuts, redex pair]
    int ca = static_cast<int>(pa->seq.cuts.size());
    int cb = static_cast<int>(pb->seq.cuts.size());
    int cr = static_cast<int>(rho->seq.cuts.size());
    int total_old = ca + cb + cr + 1;
    r.cut_map.assign(total_old, -1);
    if (tensor_left) {
        // new: [πA cuts, πB cuts, ρ cuts, B-pair, A-pair]
        for (int i = 0; i < ca; ++i) r.cut_map[i] = i;
        for (int i = 0; i < cb; ++i) r.cut_map[ca + i] = ca + i;
        for (int i = 0; i < cr; ++i) r.cut_map[ca + cb + i] = ca + cb + i;
    } else {
        // old: [ρ cuts, πA cuts, πB cuts, pair]; new: [ρ cuts, πA cuts, A-pair, πB cuts, B-pair]
        for (int i = 0; i < cr; ++i) r.cut_map[i] = i;
        for (int i = 0; i < ca; ++i) r.cut_map[cr + i] = cr + i;
        for (int i = 0; i < cb; ++i) r.cut_map[cr + ca + i] = cr + ca + 1 + i;
    }
    return r;
}

int with_cmap(const ProofPtr& w, int ordinal) {
    return w->ctx_map.empty() ? ordinal : w->ctx_map.at(ordinal);
}

LocalResult key_with_plus(const ProofPtr& node, bool with_left) {
    const ProofPtr& w = with_left ? node->premises[0] : node->premises[1];
    const ProofPtr& pl = with_left ? node->premises[1] : node->premises[0];
    int k = pl->rule == Rule::Plus1 ? 0 : 1;
    const ProofPtr& live = w->premises[k];
    const ProofPtr& dead = w->premises[1 - k];
    int live_pos = k == 0 ? w->principal1 : w->principal2;
    WeightId weight = w->seq.at(w->seq.conclusion.back()).weight;
    int n_live = static_cast<int>(live->seq.conclusion.size());

    LocalResult r;
    r.kind = StepKind::KeyWithPlus;
    r.proof = with_left ? Proof::cut(live, pl->premises[0], live_pos, pl->principal1)
                        : Proof::cut(pl->premises[0], live, pl->principal1, live_pos);
    int nold = static_cast<int>(node->seq.conclusion.size());
    r.concl_map = idmap(nold);
    {
        // with-context ordinals follow premise 1; a live right branch with a
        // nontrivial pairing reorders them in the reduct
        int wctx = static_cast<int>(w->seq.conclusion.size()) - 1;
        int off = with_left ? 0 : static_cast<int>(pl->seq.conclusion.size()) - 1;
        for (int i = 0; i < wctx; ++i) {
            int prem_pos = kth_excluding(k == 0 ? i : with_cmap(w, i), {live_pos}, n_live);
            r.concl_map[off + i] = off + rank_excluding(prem_pos, {live_pos}, n_live);
        }
    }

    // hom: live branch literal := 1, dead := 0, dead-private weights := 0
    r.hom.set(Literal{weight, k == 1}, Poly::one());
    r.hom.set(Literal{weight, k == 0}, Poly::zero());
    std::set<Literal> dropped = literals_of_delta(node->seq);
    for (const Literal& l : literals_of_delta(r.proof->seq)) dropped.erase(l);
    for (const Literal& l : dropped)
        if (l.weight != weight) r.hom.set(l, Poly::zero());

    // cuts: old [with's Δ1, Δ2, Σ_W, plus cuts, pair];
    // new: with_left ? [live cuts, plus cuts, pair] : [plus cuts, live cuts, pair]
    const auto& wsup = w->superpose;
    std::set<int> sh1, sh2;
    for (auto [i, j] : wsup) {
        sh1.insert(i);
        sh2.insert(j);
    }
    int c1 = static_cast<int>(w->premises[0]->seq.cuts.size());
    int c2 = static_cast<int>(w->premises[1]->seq.cuts.size());
    int cp = static_cast<int>(pl->premises[0]->seq.cuts.size());
    int nsup = static_cast<int>(wsup.size());
    int nold_cuts = (c1 - nsup) + (c2 - nsup) + nsup + cp + 1;
    r.cut_map.assign(nold_cuts, -1);

    int live_cuts = static_cast<int>(live->seq.cuts.size());
    int live_off = with_left ? 0 : cp;  // live premise's block offset in the new list
    int plus_off = with_left ? live_cuts : 0;
    int pos = 0;
    for (int i = 0; i < c1; ++i) {  // Δ1 block: survives only when premise 1 is live
        if (sh1.count(i)) continue;
        if (k == 0) r.cut_map[pos] = live_off + i;
        ++pos;
    }
    for (int i = 0; i < c2; ++i) {  // Δ2 block
        if (sh2.count(i)) continue;
        if (k == 1) r.cut_map[pos] = live_off + i;
        ++pos;
    }
    for (const auto& [i, j] : wsup) {  // Σ survives through the live premise's copy
        r.cut_map[pos] = live_off + (k == 0 ? i : j);
        ++pos;
    }
    for (int i = 0; i < cp; ++i) r.cut_map[pos + i] = plus_off + i;
    return r;
}

// commute the cut past a unary rule (par/plus) or into one branch of a
// tensor; `j` tells which side of the cut holds the non-introducing premise
LocalResult commute_unary(const ProofPtr& node, int j) {
    const ProofPtr& pj = node->premises[j];
    const ProofPtr& other = node->premises[1 - j];
    int posC = j == 0 ? node->principal1 : node->principal2;
    int pos_other = j == 0 ? node->principal2 : node->principal1;
    const ProofPtr& rho = pj->premises[0];
    int n = static_cast<int>(pj->seq.conclusion.size());
    int nrho = static_cast<int>(rho->seq.conclusion.size());
    int nother = static_cast<int>(other->seq.conclusion.size());

    std::vector<int> removed = pj->rule == Rule::Par
                                   ? std::vector<int>{pj->principal1, pj->principal2}
                                   : std::vector<int>{n - 1};
    std::vector<int> premise_removed = pj->rule == Rule::Par
                                           ? std::vector<int>{pj->principal1, pj->principal2}
                                           : std::vector<int>{pj->principal1};
    int pr = pj->rule == Rule::Par ? kth_excluding(posC, premise_removed, nrho)
                                   : kth_excluding(posC, premise_removed, nrho);

    ProofPtr inner = j == 0 ? Proof::cut(rho, other, pr, pos_other)
                            : Proof::cut(other, rho, pos_other, pr);
    int off = j == 0 ? 0 : nother - 1;  // rho's block offset inside inner's conclusion

    LocalResult r;
    r.kind = StepKind::CommuteOther;
    auto inner_pos = [&](int rho_pos) { return off + shifted(rho_pos, pr); };
    switch (pj->rule) {
        case Rule::Par:
            r.proof = Proof::par(inner, inner_pos(pj->principal1), inner_pos(pj->principal2));
            break;
        case Rule::Plus1:
            r.proof = Proof::plus1(inner, inner_pos(pj->principal1), pj->other);
            break;
        case Rule::Plus2:
            r.proof = Proof::plus2(inner, inner_pos(pj->principal1), pj->other);
            break;
        default:
            throw ProofError("commute_unary misuse");
    }

    // conclusion maps: old = j==0 ? [pjΓ∖posC..., otherΓ'] : [otherΓ', pjΓ∖posC...]
    // new = rule(inner): [innerΓ minus principals ..., principal]
    int nold = static_cast<int>(node->seq.conclusion.size());
    r.concl_map.assign(nold, -1);
    auto new_rank = [&](int inner_position) {
        std::vector<int> rem;
        if (pj->rule == Rule::Par)
            rem = {inner_pos(pj->principal1), inner_pos(pj->principal2)};
        else
            rem = {inner_pos(pj->principal1)};
        return rank_excluding(inner_position, rem, static_cast<int>(inner->seq.conclusion.size()));
    };
    int new_n = static_cast<int>(r.proof->seq.conclusion.size());
    for (int kpos = 0; kpos < nold; ++kpos) {
        bool in_pj_block = j == 0 ? kpos < n - 1 : kpos >= nother - 1;
        int local = j == 0 ? kpos : kpos - (nother - 1);
        if (in_pj_block) {
            // position within pj's conclusion minus posC
            int pj_pos = kth_excluding(local, {posC}, n);
            if (pj_pos == n - 1 && pj->rule != Rule::Par) {
                r.concl_map[kpos] = new_n - 1;  // the principal moved to the end
            } else if (pj->rule == Rule::Par && pj_pos == n - 1) {
                r.concl_map[kpos] = new_n - 1;
            } else {
                // context formula: back to rho position, then into inner, then rank
                std::vector<int> prem_rem = premise_removed;
                int rho_pos = kth_excluding(pj->rule == Rule::Par ? pj_pos : pj_pos, prem_rem,
                                            nrho);
                r.concl_map[kpos] = new_rank(inner_pos(rho_pos));
            }
        } else {
            // other's leftover at inner position
            int other_local = j == 0 ? kpos - (n - 1) : kpos;
            int inner_position = j == 0
                                     ? (nrho - 1) + other_local
                                     : other_local;
            r.concl_map[kpos] = new_rank(inner_position);
        }
    }

    // cuts: unary rules preserve premise cut order; inner appends the pair.
    int crho = static_cast<int>(rho->seq.cuts.size());
    int cother = static_cast<int>(other->seq.cuts.size());
    int nold_cuts = crho + cother + 1;
    r.cut_map.assign(nold_cuts, -1);
    for (int i = 0; i < crho + cother; ++i) {
        if (j == 0) {
            r.cut_map[i] = i;  // [rho cuts, other cuts] both orders match
        } else {
            // old: [other cuts, rho cuts]; new inner: [other cuts, rho cuts]
            r.cut_map[i] = i;
        }
    }
    r.cut_map[nold_cuts - 1] = nold_cuts - 1;  // the pair persists, last in inner as well
    return r;
}

LocalResult commute_tensor(const ProofPtr& node, int j) {
    const ProofPtr& pj = node->premises[j];
    const ProofPtr& other = node->premises[1 - j];
    int posC = j == 0 ? node->principal1 : node->principal2;
    int pos_other = j == 0 ? node->principal2 : node->principal1;
    const ProofPtr& r1 = pj->premises[0];
    const ProofPtr& r2 = pj->premises[1];
    int n1 = static_cast<int>(r1->seq.conclusion.size()) - 1;  // left block length
    int nother = static_cast<int>(other->seq.conclusion.size());
    bool into_left = posC < n1;
    const ProofPtr& target = into_left ? r1 : r2;
    int tpos = into_left ? pj->principal1 : pj->principal2;
    int tn = static_cast<int>(target->seq.conclusion.size());
    int local = into_left ? posC : posC - n1;
    int pr = kth_excluding(local, {tpos}, tn);

    ProofPtr inner = j == 0 ? Proof::cut(target, other, pr, pos_other)
                            : Proof::cut(other, target, pos_other, pr);
    int off = j == 0 ? 0 : nother - 1;
    auto inner_pos = [&](int target_pos) { return off + shifted(target_pos, pr); };

    LocalResult r;
    r.kind = StepKind::CommuteOther;
    r.proof = into_left ? Proof::tensor(inner, r2, inner_pos(tpos), pj->principal2)
                        : Proof::tensor(r1, inner, pj->principal1, inner_pos(tpos));

    // conclusion map; new conclusion is
    //   into_left:  [inner ctx, r2 ctx, ⊗]
    //   otherwise:  [r1 ctx, inner ctx, ⊗]
    int nold = static_cast<int>(node->seq.conclusion.size());
    int n = static_cast<int>(pj->seq.conclusion.size());
    r.concl_map.assign(nold, -1);
    int in_n = static_cast<int>(inner->seq.conclusion.size());
    int new_n = static_cast<int>(r.proof->seq.conclusion.size());
    auto inner_rank = [&](int ip) { return rank_excluding(ip, {inner_pos(tpos)}, in_n); };
    int keep_n = static_cast<int>((into_left ? r2 : r1)->seq.conclusion.size());
    auto keep_rank = [&](int kp) {
        return rank_excluding(kp, {into_left ? pj->principal2 : pj->principal1}, keep_n);
    };
    int inner_block = in_n - 1;
    for (int kpos = 0; kpos < nold; ++kpos) {
        bool in_pj_block = j == 0 ? kpos < n - 1 : kpos >= nother - 1;
        if (!in_pj_block) {
            int other_local = j == 0 ? kpos - (n - 1) : kpos;
            int ip = j == 0 ? (tn - 1) + other_local : other_local;
            r.concl_map[kpos] = into_left ? inner_rank(ip) : (keep_n - 1) + inner_rank(ip);
            continue;
        }
        int local_pos = j == 0 ? kpos : kpos - (nother - 1);
        int pj_pos = kth_excluding(local_pos, {posC}, n);
        if (pj_pos == n - 1) {
            r.concl_map[kpos] = new_n - 1;  // the tensor principal
            continue;
        }
        if (pj_pos < n1) {
            int rho_pos = kth_excluding(pj_pos, {pj->principal1},
                                        static_cast<int>(r1->seq.conclusion.size()));
            r.concl_map[kpos] =
                into_left ? inner_rank(inner_pos(rho_pos)) : keep_rank(rho_pos);
        } else {
            int rho_pos = kth_excluding(pj_pos - n1, {pj->principal2},
                                        static_cast<int>(r2->seq.conclusion.size()));
            r.concl_map[kpos] = into_left ? inner_block + keep_rank(rho_pos)
                                          : (keep_n - 1) + inner_rank(inner_pos(rho_pos));
        }
    }

    // cut maps
    int c1 = static_cast<int>(r1->seq.cuts.size());
    int c2 = static_cast<int>(r2->seq.cuts.size());
    int cother = static_cast<int>(other->seq.cuts.size());
    int nold_cuts = c1 + c2 + cother + 1;
    r.cut_map.assign(nold_cuts, -1);
    // old layout: j==0 ? [r1, r2, other, pair] : [other, r1, r2, pair]
    // new: into_left ? [inner(target+other+pair), r2] : [r1, inner(...)]
    auto old_index = [&](char block, int i) {
        if (j == 0) {
            if (block == '1') return i;
            if (block == '2') return c1 + i;
            return c1 + c2 + i;  // other
        }
        if (block == 'o') return i;
        if (block == '1') return cother + i;
        return cother + c1 + i;
    };
    auto inner_cut = [&](char block, int i) {  // inside inner: [left cuts, right cuts, pair]
        int ct = static_cast<int>(target->seq.cuts.size());
        if (j == 0) return block == 't' ? i : ct + i;
        return block == 'o' ? i : cother + i;
    };
    int inner_cuts = static_cast<int>(inner->seq.cuts.size());
    if (into_left) {
        // new: [inner cuts..., r2 cuts...]
        for (int i = 0; i < c1; ++i) r.cut_map[old_index('1', i)] = inner_cut('t', i);
        for (int i = 0; i < cother; ++i) r.cut_map[old_index('o', i)] = inner_cut('o', i);
        for (int i = 0; i < c2; ++i) r.cut_map[old_index('2', i)] = inner_cuts + i;
        r.cut_map[nold_cuts - 1] = inner_cuts - 1;
    } else {
        for (int i = 0; i < c1; ++i) r.cut_map[old_index('1', i)] = i;
        for (int i = 0; i < c2; ++i) r.cut_map[old_index('2', i)] = c1 + inner_cut('t', i);
        for (int i = 0; i < cother; ++i) r.cut_map[old_index('o', i)] = c1 + inner_cut('o', i);
        r.cut_map[nold_cuts - 1] = c1 + inner_cuts - 1;
    }
    return r;
}

LocalResult commute_cut(const ProofPtr& node, int j) {
    const ProofPtr& pj = node->premises[j];
    const ProofPtr& other = node->premises[1 - j];
    int posC = j == 0 ? node->principal1 : node->principal2;
    int pos_other = j == 0 ? node->principal2 : node->principal1;
    const ProofPtr& r1 = pj->premises[0];
    const ProofPtr& r2 = pj->premises[1];
    int n1 = static_cast<int>(r1->seq.conclusion.size()) - 1;
    int nother = static_cast<int>(other->seq.conclusion.size());
    bool into_left = posC < n1;
    const ProofPtr& target = into_left ? r1 : r2;
    int dpos = into_left ? pj->principal1 : pj->principal2;  // D's position in target
    int tn = static_cast<int>(target->seq.conclusion.size());
    int local = into_left ? posC : posC - n1;
    int pr = kth_excluding(local, {dpos}, tn);

    ProofPtr inner = j == 0 ? Proof::cut(target, other, pr, pos_other)
                            : Proof::cut(other, target, pos_other, pr);
    int off = j == 0 ? 0 : nother - 1;
    auto inner_pos = [&](int target_pos) { return off + shifted(target_pos, pr); };

    LocalResult r;
    r.kind = StepKind::CommuteOther;
    r.proof = into_left ? Proof::cut(inner, r2, inner_pos(dpos), pj->principal2)
                        : Proof::cut(r1, inner, pj->principal1, inner_pos(dpos));

    // conclusion map
    int nold = static_cast<int>(node->seq.conclusion.size());
    int n = static_cast<int>(pj->seq.conclusion.size());
    r.concl_map.assign(nold, -1);
    int in_n = static_cast<int>(inner->seq.conclusion.size());
    auto inner_rank = [&](int ip) { return rank_excluding(ip, {inner_pos(dpos)}, in_n); };
    int keep_n = static_cast<int>((into_left ? r2 : r1)->seq.conclusion.size());
    auto keep_rank = [&](int kp) {
        return rank_excluding(kp, {into_left ? pj->principal2 : pj->principal1}, keep_n);
    };
    int inner_block = in_n - 1;
    for (int kpos = 0; kpos < nold; ++kpos) {
        bool in_pj_block = j == 0 ? kpos < n - 1 : kpos >= nother - 1;
        if (!in_pj_block) {
            int other_local = j == 0 ? kpos - (n - 1) : kpos;
            int ip = j == 0 ? (tn - 1) + other_local : other_local;
            r.concl_map[kpos] = into_left ? inner_rank(ip) : (keep_n - 1) + inner_rank(ip);
            continue;
        }
        int local_pos = j == 0 ? kpos : kpos - (nother - 1);
        int pj_pos = kth_excluding(local_pos, {posC}, n);
        if (pj_pos < n1) {
            int rho_pos = kth_excluding(pj_pos, {pj->principal1},
                                        static_cast<int>(r1->seq.conclusion.size()));
            r.concl_map[kpos] =
                into_left ? inner_rank(inner_pos(rho_pos)) : keep_rank(rho_pos);
        } else {
            int rho_pos = kth_excluding(pj_pos - n1, {pj->principal2},
                                        static_cast<int>(r2->seq.conclusion.size()));
            r.concl_map[kpos] = into_left ? inner_block + keep_rank(rho_pos)
                                          : (keep_n - 1) + inner_rank(inner_pos(rho_pos));
        }
    }

    // cut maps: old j==0: [r1, r2, D-pair, other, C-pair]; j==1: [other, r1, r2, D-pair, C-pair]
    int c1 = static_cast<int>(r1->seq.cuts.size());
    int c2 = static_cast<int>(r2->seq.cuts.size());
    int cother = static_cast<int>(other->seq.cuts.size());
    int nold_cuts = c1 + c2 + 1 + cother + 1;
    r.cut_map.assign(nold_cuts, -1);
    auto old_index = [&](char block, int i) {
        if (j == 0) {
            if (block == '1') return i;
            if (block == '2') return c1 + i;
            if (block == 'D') return c1 + c2;
            if (block == 'o') return c1 + c2 + 1 + i;
            return nold_cuts - 1;  // C
        }
        if (block == 'o') return i;
        if (block == '1') return cother + i;
        if (block == '2') return cother + c1 + i;
        if (block == 'D') return cother + c1 + c2;
        return nold_cuts - 1;
    };
    int ct = static_cast<int>(target->seq.cuts.size());
    auto inner_cut = [&](char block, int i) {  // [left cuts, right cuts, C-pair]
        if (j == 0) return block == 't' ? i : ct + i;
        return block == 'o' ? i : cother + i;
    };
    int inner_cuts = static_cast<int>(inner->seq.cuts.size());
    if (into_left) {
        // new: cut(inner, r2; D): [inner cuts, r2 cuts, D-pair]
        for (int i = 0; i < c1; ++i) r.cut_map[old_index('1', i)] = inner_cut('t', i);
        for (int i = 0; i < cother; ++i) r.cut_map[old_index('o', i)] = inner_cut('o', i);
        r.cut_map[old_index('C', 0)] = inner_cuts - 1;
        for (int i = 0; i < c2; ++i) r.cut_map[old_index('2', i)] = inner_cuts + i;
        r.cut_map[old_index('D', 0)] = inner_cuts + c2;
    } else {
        // new: cut(r1, inner; D): [r1 cuts, inner cuts, D-pair]
        for (int i = 0; i < c1; ++i) r.cut_map[old_index('1', i)] = i;
        for (int i = 0; i < c2; ++i) r.cut_map[old_index('2', i)] = c1 + inner_cut('t', i);
        for (int i = 0; i < cother; ++i) r.cut_map[old_index('o', i)] = c1 + inner_cut('o', i);
        r.cut_map[old_index('C', 0)] = c1 + inner_cuts - 1;
        r.cut_map[old_index('D', 0)] = c1 + inner_cuts;
    }
    return r;
}

LocalResult commute_with(const ProofPtr& node, int j, const RewriteOptions& opt,
                         WeightId& next_weight) {
    const ProofPtr& pj = node->premises[j];
    int posC = j == 0 ? node->principal1 : node->principal2;
    int pos_other = j == 0 ? node->principal2 : node->principal1;
    const ProofPtr& other = node->premises[1 - j];
    const ProofPtr& r1 = pj->premises[0];
    const ProofPtr& r2 = pj->premises[1];
    WeightId weight = pj->seq.at(pj->seq.conclusion.back()).weight;
    int n = static_cast<int>(pj->seq.conclusion.size());
    int nother = static_cast<int>(other->seq.conclusion.size());

    int pr1 = kth_excluding(posC, {pj->principal1}, static_cast<int>(r1->seq.conclusion.size()));
    int pr2 = kth_excluding(with_cmap(pj, posC), {pj->principal2},
                            static_cast<int>(r2->seq.conclusion.size()));

    bool duplicate = opt.with_strategy == WithCommuteStrategy::Duplicate;

    ProofPtr other2 = other;
    std::map<WeightId, WeightId> ren;
    if (duplicate) {
        // fresh copies for the duplicated material's weights: the second copy
        // of `other` and of the cut formula's own subtree weights
        std::set<WeightId> dup = weights_of(literals_of(other->seq));
        std::set<Literal> clits = literals_of(pj->seq, pj->seq.conclusion[posC]);
        for (WeightId w : weights_of(clits)) dup.insert(w);
        for (WeightId w : dup) ren[w] = ++next_weight;
        other2 = rename_weights(other, ren);
    }
    ProofPtr r2_use = duplicate && !ren.empty() ? rename_weights(r2, ren) : r2;

    ProofPtr left = j == 0 ? Proof::cut(r1, other, pr1, pos_other)
                           : Proof::cut(other, r1, pos_other, pr1);
    ProofPtr right = j == 0 ? Proof::cut(r2_use, other2, pr2, pos_other)
                            : Proof::cut(other2, r2_use, pos_other, pr2);

    int off = j == 0 ? 0 : nother - 1;
    auto left_pos = [&](int p) { return off + shifted(p, pr1); };
    auto right_pos = [&](int p) { return off + shifted(p, pr2); };

    int c1 = static_cast<int>(r1->seq.cuts.size());
    int c2 = static_cast<int>(r2->seq.cuts.size());
    int cother = static_cast<int>(other->seq.cuts.size());

    // inner cut lists: j==0: [ri cuts, other cuts, C-pair]; j==1: [other, ri, C]
    auto in_cut = [&](int ci, char block, int i) {
        int cr = ci == 1 ? c1 : c2;
        (void)cr;
        if (j == 0) return block == 'r' ? i : (ci == 1 ? c1 : c2) + i;
        return block == 'o' ? i : cother + i;
    };
    int left_cuts = static_cast<int>(left->seq.cuts.size());
    int right_cuts = static_cast<int>(right->seq.cuts.size());
    int cpair_left = left_cuts - 1;
    int cpair_right = right_cuts - 1;

    std::vector<std::pair<int, int>> sup;
    for (auto [i1, i2] : pj->superpose) sup.push_back({in_cut(1, 'r', i1), in_cut(2, 'r', i2)});
    if (!duplicate) {
        for (int i = 0; i < cother; ++i) sup.push_back({in_cut(1, 'o', i), in_cut(2, 'o', i)});
        sup.push_back({cpair_left, cpair_right});
    }

    // context pairing of the reduct's with: the rho parts pair through the
    // old with's pairing (skipping the consumed context slot), the copied
    // other parts pair positionally
    int n1 = static_cast<int>(r1->seq.conclusion.size());
    int n2 = static_cast<int>(r2->seq.conclusion.size());
    int ln_ = static_cast<int>(left->seq.conclusion.size());
    int rn_ = static_cast<int>(right->seq.conclusion.size());
    int lp_principal = left_pos(pj->principal1);
    int rp_principal = right_pos(pj->principal2);
    std::vector<int> new_ctx;
    for (int i = 0; i < ln_ - 1; ++i) {
        int lpos = kth_excluding(i, {lp_principal}, ln_);
        // left layout: j==0 -> [rho1 minus {pr1}, other minus pos_other]
        //              j==1 -> [other minus pos_other, rho1 minus {pr1}]
        int rho_block_start = j == 0 ? 0 : nother - 1;
        int rho_block_len = n1 - 1;
        bool in_rho = lpos >= rho_block_start && lpos < rho_block_start + rho_block_len;
        if (in_rho) {
            int p1 = kth_excluding(lpos - rho_block_start, {pr1}, n1);
            int o1 = rank_excluding(p1, {pj->principal1}, n1);     // old ctx ordinal
            int p2 = kth_excluding(with_cmap(pj, o1), {pj->principal2}, n2);
            int rpos = rho_block_start + shifted(p2, pr2);
            new_ctx.push_back(rank_excluding(rpos, {rp_principal}, rn_));
        } else {
            int other_local = j == 0 ? lpos - rho_block_len : lpos;
            int rpos = j == 0 ? (n2 - 1) + other_local : other_local;
            new_ctx.push_back(rank_excluding(rpos, {rp_principal}, rn_));
        }
    }

    LocalResult r;
    r.kind = duplicate ? StepKind::CommuteWith_Duplicating : StepKind::CommuteWith_Superposed;
    r.proof = Proof::with(left, right, lp_principal, rp_principal, sup, weight, new_ctx);

    if (duplicate) {
        Poly a = Poly::lit(Literal{weight, false});
        Poly abar = Poly::lit(Literal{weight, true});
        for (const auto& [w, w2] : ren) {
            r.hom.set(Literal{w, false},
                      a.times(Poly::lit(Literal{w, false}))
                          .plus(abar.times(Poly::lit(Literal{w2, false}))));
            r.hom.set(Literal{w, true},
                      a.times(Poly::lit(Literal{w, true}))
                          .plus(abar.times(Poly::lit(Literal{w2, true}))));
        }
    }

    // conclusion map: old = [pjΓ∖posC block ..., other block] (j==0)
    //                  new = [shared ctx ..., &]
    int nold = static_cast<int>(node->seq.conclusion.size());
    r.concl_map.assign(nold, -1);
    int ln = static_cast<int>(left->seq.conclusion.size());
    auto left_rank = [&](int lp) { return rank_excluding(lp, {left_pos(pj->principal1)}, ln); };
    int new_n = static_cast<int>(r.proof->seq.conclusion.size());
    for (int kpos = 0; kpos < nold; ++kpos) {
        bool in_pj_block = j == 0 ? kpos < n - 1 : kpos >= nother - 1;
        if (!in_pj_block) {
            int other_local = j == 0 ? kpos - (n - 1) : kpos;
            int lp = j == 0 ? (static_cast<int>(r1->seq.conclusion.size()) - 1) + other_local
                            : other_local;
            r.concl_map[kpos] = left_rank(lp);
            continue;
        }
        int local_pos = j == 0 ? kpos : kpos - (nother - 1);
        int pj_pos = kth_excluding(local_pos, {posC}, n);
        if (pj_pos == n - 1) {
            r.concl_map[kpos] = new_n - 1;  // the with principal
            continue;
        }
        int rho_pos = kth_excluding(pj_pos, {pj->principal1},
                                    static_cast<int>(r1->seq.conclusion.size()));
        r.concl_map[kpos] = left_rank(left_pos(rho_pos));
    }

    // cut maps: old: j==0: [Δ1, Δ2, Σ_W, other cuts, C-pair]; j==1 other first.
    std::set<int> sh1, sh2;
    for (auto [i1, i2] : pj->superpose) {
        sh1.insert(i1);
        sh2.insert(i2);
    }
    int nsup = static_cast<int>(pj->superpose.size());
    int delta1 = c1 - nsup, delta2 = c2 - nsup;
    int nold_cuts = delta1 + delta2 + nsup + cother + 1;
    r.cut_map.assign(nold_cuts, -1);

    // the reduct's with: [Δ1', Δ2', Σ'] where Δi' are the non-superposed cuts
    // of the new premises in order; compute each new premise cut's final index
    std::set<int> nsh1, nsh2;
    for (auto [i1, i2] : sup) {
        nsh1.insert(i1);
        nsh2.insert(i2);
    }
    auto final_index = [&](int side, int idx) {
        // position of premise cut idx in the reduct's cut list
        const std::set<int>& sh = side == 1 ? nsh1 : nsh2;
        int d1 = left_cuts - static_cast<int>(nsh1.size());
        if (!sh.count(idx)) {
            int ahead = 0;
            int limit = idx;
            const std::set<int>& own = sh;
            for (int i = 0; i < limit; ++i)
                if (!own.count(i)) ++ahead;
            return side == 1 ? ahead : d1 + ahead;
        }
        int d2 = right_cuts - static_cast<int>(nsh2.size());
        int srank = 0;
        for (const auto& [i1, i2] : sup) {
            int own_idx = side == 1 ? i1 : i2;
            if (own_idx == idx) return d1 + d2 + srank;
            ++srank;
        }
        throw DanglingOccurrence("superposed cut not found");
    };

    int pos = 0;
    for (int i = 0; i < c1; ++i) {  // Δ1 block of the old node
        if (sh1.count(i)) continue;
        r.cut_map[pos++] = final_index(1, in_cut(1, 'r', i));
    }
    for (int i = 0; i < c2; ++i) {  // Δ2 block
        if (sh2.count(i)) continue;
        r.cut_map[pos++] = final_index(2, in_cut(2, 'r', i));
    }
    for (auto [i1, i2] : pj->superpose)  // Σ_W block, tracked through premise 1
        r.cut_map[pos++] = final_index(1, in_cut(1, 'r', i1));
    for (int i = 0; i < cother; ++i)  // other's cuts, tracked through premise 1
        r.cut_map[pos++] = final_index(1, in_cut(1, 'o', i));
    r.cut_map[pos] = final_index(1, cpair_left);  // the commuted pair
    return r;
}

LocalResult reduce_cut_node(const ProofPtr& node, const RewriteOptions& opt,
                            WeightId& next_weight) {
    const ProofPtr& a = node->premises[0];
    const ProofPtr& b = node->premises[1];
    bool intro1 = introduces(a, node->principal1);
    bool intro2 = introduces(b, node->principal2);

    if (a->rule == Rule::Ax && intro2) return ax_case(node, true);
    if (b->rule == Rule::Ax && intro1) return ax_case(node, false);
    if (intro1 && intro2) {
        if (a->rule == Rule::Tensor && b->rule == Rule::Par) return key_tensor_par(node, true);
        if (a->rule == Rule::Par && b->rule == Rule::Tensor) return key_tensor_par(node, false);
        if (a->rule == Rule::With && (b->rule == Rule::Plus1 || b->rule == Rule::Plus2))
            return key_with_plus(node, true);
        if ((a->rule == Rule::Plus1 || a->rule == Rule::Plus2) && b->rule == Rule::With)
            return key_with_plus(node, false);
        throw ProofError("reduce: mismatched dual introductions");
    }
    int j = intro1 ? 1 : 0;
    const ProofPtr& pj = node->premises[j];
    switch (pj->rule) {
        case Rule::Par:
        case Rule::Plus1:
        case Rule::Plus2:
            return commute_unary(node, j);
        case Rule::Tensor:
            return commute_tensor(node, j);
        case Rule::Cut:
            return commute_cut(node, j);
        case Rule::With:
            return commute_with(node, j, opt, next_weight);
        case Rule::Ax:
            throw ProofError("reduce: axiom cannot be non-introducing");
    }
    throw ProofError("reduce: unreachable");
}

// ---------------------------------------------------------------------------
// lifting a local reduction through the ancestors

bool has_cut(const ProofPtr& p) {
    if (p->rule == Rule::Cut) return true;
    for (const auto& q : p->premises)
        if (has_cut(q)) return true;
    return false;
}

// leftmost cut whose premises are already cut-free: reducing there needs no
// commutation with other cut rules
std::optional<std::vector<int>> find_cut_path(const ProofPtr& p) {
    for (int i = 0; i < static_cast<int>(p->premises.size()); ++i) {
        auto sub = find_cut_path(p->premises[i]);
        if (sub) {
            sub->insert(sub->begin(), i);
            return sub;
        }
    }
    if (p->rule == Rule::Cut) return std::vector<int>{};
    return std::nullopt;
}

LocalResult rebuild_above(const ProofPtr& parent, int child_slot, const LocalResult& child) {
    LocalResult r;
    r.kind = child.kind;
    r.hom = child.hom;
    const ProofPtr& oldc = parent->premises[child_slot];
    int nc_old = static_cast<int>(oldc->seq.conclusion.size());
    int nc_new = static_cast<int>(child.proof->seq.conclusion.size());
    auto cm = [&](int pos) {
        int m = child.concl_map.at(pos);
        if (m < 0) throw DanglingOccurrence("conclusion lost across reduction");
        return m;
    };
    (void)nc_new;

    switch (parent->rule) {
        case Rule::Par: {
            int p1 = cm(parent->principal1), p2 = cm(parent->principal2);
            r.proof = Proof::par(child.proof, p1, p2);
            int nold = static_cast<int>(parent->seq.conclusion.size());
            r.concl_map.assign(nold, -1);
            for (int k = 0; k + 1 < nold; ++k) {
                int oldpos = kth_excluding(k, {parent->principal1, parent->principal2}, nc_old);
                r.concl_map[k] = rank_excluding(cm(oldpos), {p1, p2}, nc_new);
            }
            r.concl_map[nold - 1] = nold - 1;
            r.cut_map = child.cut_map;
            return r;
        }
        case Rule::Plus1:
        case Rule::Plus2: {
            int p1 = cm(parent->principal1);
            r.proof = parent->rule == Rule::Plus1 ? Proof::plus1(child.proof, p1, parent->other)
                                                  : Proof::plus2(child.proof, p1, parent->other);
            int nold = static_cast<int>(parent->seq.conclusion.size());
            r.concl_map.assign(nold, -1);
            for (int k = 0; k + 1 < nold; ++k) {
                int oldpos = kth_excluding(k, {parent->principal1}, nc_old);
                r.concl_map[k] = rank_excluding(cm(oldpos), {p1}, nc_new);
            }
            r.concl_map[nold - 1] = nold - 1;
            r.cut_map = child.cut_map;
            return r;
        }
        case Rule::Tensor:
        case Rule::Cut: {
            const ProofPtr& sibling = parent->premises[1 - child_slot];
            int sib_cuts = static_cast<int>(sibling->seq.cuts.size());
            int old_child_cuts = static_cast<int>(oldc->seq.cuts.size());
            int new_child_cuts = static_cast<int>(child.proof->seq.cuts.size());
            ProofPtr np;
            int p_child = cm(child_slot == 0 ? parent->principal1 : parent->principal2);
            int p_sib = child_slot == 0 ? parent->principal2 : parent->principal1;
            if (parent->rule == Rule::Tensor)
                np = child_slot == 0 ? Proof::tensor(child.proof, sibling, p_child, p_sib)
                                     : Proof::tensor(sibling, child.proof, p_sib, p_child);
            else
                np = child_slot == 0 ? Proof::cut(child.proof, sibling, p_child, p_sib)
                                     : Proof::cut(sibling, child.proof, p_sib, p_child);
            r.proof = np;

            int nold = static_cast<int>(parent->seq.conclusion.size());
            r.concl_map.assign(nold, -1);
            int nsib = static_cast<int>(sibling->seq.conclusion.size());
            int left_old = child_slot == 0 ? nc_old - 1 : nsib - 1;
            int left_new = child_slot == 0 ? nc_new - 1 : nsib - 1;
            bool has_principal = parent->rule == Rule::Tensor;
            for (int k = 0; k < nold; ++k) {
                if (has_principal && k == nold - 1) {
                    r.concl_map[k] = nold - 1;
                    continue;
                }
                bool left_block = k < left_old;
                if ((child_slot == 0) == left_block) {
                    // inside the rewritten child's block
                    int local = left_block ? k : k - left_old;
                    int oldpos = kth_excluding(
                        local, {child_slot == 0 ? parent->principal1 : parent->principal2},
                        nc_old);
                    int newpos = rank_excluding(cm(oldpos), {p_child}, nc_new);
                    r.concl_map[k] = left_block ? newpos : left_new + newpos;
                } else {
                    int local = left_block ? k : k - left_old;
                    r.concl_map[k] = left_block ? local : left_new + local;
                }
            }
            // cuts: [left cuts, right cuts (, pair for Cut)]
            int nold_cuts = static_cast<int>(parent->seq.cuts.size());
            r.cut_map.assign(nold_cuts, -1);
            int old_left_cuts = child_slot == 0 ? old_child_cuts : sib_cuts;
            int new_left_cuts = child_slot == 0 ? new_child_cuts : sib_cuts;
            for (int i = 0; i < nold_cuts; ++i) {
                bool pair = parent->rule == Rule::Cut && i == nold_cuts - 1;
                if (pair) {
                    r.cut_map[i] = new_left_cuts +
                                   (child_slot == 0 ? sib_cuts : new_child_cuts);
                    continue;
                }
                bool left_block = i < old_left_cuts;
                int local = left_block ? i : i - old_left_cuts;
                if ((child_slot == 0) == left_block) {
                    int m = child.cut_map.at(local);
                    if (m < 0) continue;
                    r.cut_map[i] = left_block ? m : new_left_cuts + m;
                } else {
                    r.cut_map[i] = left_block ? local : new_left_cuts + local;
                }
            }
            return r;
        }
        case Rule::With: {
            const ProofPtr& sibling = parent->premises[1 - child_slot];
            int p_child = cm(child_slot == 0 ? parent->principal1 : parent->principal2);
            int p_sib = child_slot == 0 ? parent->principal2 : parent->principal1;
            // the sibling branch did not take the step: superpose the hom
            // with the ancestor's weight, c := a·d(c) + ā·c (slot 0)
            {
                WeightId w = parent->seq.at(parent->seq.conclusion.back()).weight;
                Poly mine = Poly::lit(Literal{w, child_slot == 1});
                Poly theirs = Poly::lit(Literal{w, child_slot == 0});
                RingHom lifted;
                for (const auto& [c, v] : r.hom.subst)
                    lifted.set(c, mine.times(v).plus(theirs.times(Poly::lit(c))));
                r.hom = std::move(lifted);
            }
            // surviving superposition: entries whose rewritten-side cut survives
            std::vector<std::pair<int, int>> sup;
            std::vector<int> old_sup_kept;  // index into parent->superpose
            for (int s = 0; s < static_cast<int>(parent->superpose.size()); ++s) {
                auto [i1, i2] = parent->superpose[s];
                int own = child_slot == 0 ? i1 : i2;
                int m = child.cut_map.at(own);
                if (m < 0) continue;
                std::pair<int, int> entry = child_slot == 0 ? std::make_pair(m, i2)
                                                            : std::make_pair(i1, m);
                // the builder validates formula equality; drop silently if gone
                sup.push_back(entry);
                old_sup_kept.push_back(s);
            }
            WeightId w = parent->seq.at(parent->seq.conclusion.back()).weight;

            int nold = static_cast<int>(parent->seq.conclusion.size());
            int nc_new_sz = static_cast<int>(child.proof->seq.conclusion.size());
            r.concl_map.assign(nold, -1);
            std::vector<int> new_ctx(nold - 1, -1);
            auto cmap = [&](int i) { return with_cmap(parent, i); };
            if (child_slot == 0) {
                for (int k = 0; k + 1 < nold; ++k) {
                    int oldpos1 = kth_excluding(k, {parent->principal1},
                                                static_cast<int>(oldc->seq.conclusion.size()));
                    int ni = rank_excluding(cm(oldpos1), {p_child}, nc_new_sz);
                    r.concl_map[k] = ni;
                    new_ctx[ni] = cmap(k);
                }
            } else {
                int n2_old = static_cast<int>(oldc->seq.conclusion.size());
                for (int k = 0; k + 1 < nold; ++k) {
                    r.concl_map[k] = k;  // premise-1 untouched, context order preserved
                    int oldpos2 = kth_excluding(cmap(k), {parent->principal2}, n2_old);
                    new_ctx[k] = rank_excluding(cm(oldpos2), {p_child}, nc_new_sz);
                }
            }
            r.concl_map[nold - 1] = nold - 1;

            ProofPtr np = child_slot == 0
                              ? Proof::with(child.proof, sibling, p_child, p_sib, sup, w, new_ctx)
                              : Proof::with(sibling, child.proof, p_sib, p_child, sup, w, new_ctx);
            r.proof = np;

            // cut maps through the with layout
            std::set<int> osh1, osh2, nsh1, nsh2;
            for (auto [i1, i2] : parent->superpose) {
                osh1.insert(i1);
                osh2.insert(i2);
            }
            for (auto [i1, i2] : sup) {
                nsh1.insert(i1);
                nsh2.insert(i2);
            }
            const ProofPtr& np1 = np->premises[0];
            const ProofPtr& np2 = np->premises[1];
            int nc1 = static_cast<int>(np1->seq.cuts.size());
            int nc2 = static_cast<int>(np2->seq.cuts.size());
            int nd1 = nc1 - static_cast<int>(sup.size());
            auto new_index = [&](int side, int idx) {
                const std::set<int>& sh = side == 1 ? nsh1 : nsh2;
                if (!sh.count(idx)) {
                    int ahead = 0;
                    for (int i = 0; i < idx; ++i)
                        if (!sh.count(i)) ++ahead;
                    return side == 1 ? ahead : nd1 + ahead;
                }
                int nd2 = nc2 - static_cast<int>(sup.size());
                int srank = 0;
                for (auto [i1, i2] : sup) {
                    if ((side == 1 ? i1 : i2) == idx) return nd1 + nd2 + srank;
                    ++srank;
                }
                throw DanglingOccurrence("with cut bookkeeping");
            };
            const ProofPtr& oc1 = parent->premises[0];
            const ProofPtr& oc2 = parent->premises[1];
            int occ1 = static_cast<int>(oc1->seq.cuts.size());
            int occ2 = static_cast<int>(oc2->seq.cuts.size());
            int nold_cuts = static_cast<int>(parent->seq.cuts.size());
            r.cut_map.assign(nold_cuts, -1);
            int pos = 0;
            for (int i = 0; i < occ1; ++i) {
                if (osh1.count(i)) continue;
                int idx = child_slot == 0 ? child.cut_map.at(i) : i;
                if (idx >= 0) r.cut_map[pos] = new_index(1, idx);
                ++pos;
            }
            for (int i = 0; i < occ2; ++i) {
                if (osh2.count(i)) continue;
                int idx = child_slot == 1 ? child.cut_map.at(i) : i;
                if (idx >= 0) r.cut_map[pos] = new_index(2, idx);
                ++pos;
            }
            for (int s = 0; s < static_cast<int>(parent->superpose.size()); ++s) {
                auto [i1, i2] = parent->superpose[s];
                int idx1 = child_slot == 0 ? child.cut_map.at(i1) : i1;
                if (idx1 >= 0)
                    r.cut_map[pos] = new_index(1, idx1);
                else {
                    // superposition broke: the pair survives through premise 2
                    int idx2 = child_slot == 1 ? child.cut_map.at(i2) : i2;
                    if (idx2 >= 0) r.cut_map[pos] = new_index(2, idx2);
                }
                ++pos;
            }
            return r;
        }
        case Rule::Ax:
            throw ProofError("axiom cannot be a parent");
    }
    throw ProofError("rebuild_above: unreachable");
}

}  // namespace

std::optional<std::pair<ProofPtr, ReductionStep>> reduce_step(const ProofPtr& p,
                                                              const RewriteOptions& opt) {
    auto path = find_cut_path(p);
    if (!path) return std::nullopt;

    // collect the ancestor chain
    std::vector<ProofPtr> chain{p};
    for (int slot : *path) chain.push_back(chain.back()->premises[slot]);

    WeightId next_weight = max_weight(p);
    LocalResult local = reduce_cut_node(chain.back(), opt, next_weight);
    for (int i = static_cast<int>(path->size()) - 1; i >= 0; --i)
        local = rebuild_above(chain[i], (*path)[i], local);
    local.proof = fill_missing_weights(local.proof, next_weight);

    ReductionStep step;
    step.kind = local.kind;
    step.emitted_hom = local.hom;
    step.gamma_map = local.concl_map;
    step.cut_map = local.cut_map;
    return std::make_pair(local.proof, step);
}

ReductionTrace normalize(const ProofPtr& p, const RewriteOptions& opt) {
    ReductionTrace t;
    t.start = p;
    t.composite_hom = hom_identity();
    int n = static_cast<int>(p->seq.conclusion.size());
    t.gamma_map.resize(n);
    for (int i = 0; i < n; ++i) t.gamma_map[i] = i;

    ProofPtr cur = p;
    for (int steps = 0;; ++steps) {
        auto next = reduce_step(cur, opt);
        if (!next) break;
        if (steps >= opt.step_bound) throw StepBoundExceeded(opt.step_bound);
        t.steps.push_back(next->second);
        t.proofs.push_back(next->first);
        t.composite_hom = hom_compose(next->second.emitted_hom, t.composite_hom);
        for (int& g : t.gamma_map) g = next->second.gamma_map.at(g);
        cur = next->first;
    }
    return t;
}

namespace {

bool compare_through_map(const FMatrix& lhs, const FMatrix& rhs, const std::vector<int>& gm,
                         const ReductionMode& mode, std::string* failure) {
    if (lhs.nrows() != rhs.nrows()) {
        if (failure) *failure = "size mismatch";
        return false;
    }
    for (int i = 0; i < lhs.nrows(); ++i)
        for (int j = 0; j < lhs.nrows(); ++j) {
            AlgElem l = reduce(lhs.at(i, j), mode);
            AlgElem r = reduce(rhs.at(gm.at(i), gm.at(j)), mode);
            if (!(l == r)) {
                if (failure)
                    *failure = "entry (" + lhs.rows()[i].text + ", " + lhs.cols()[j].text +
                               "): " + l.str() + " vs " + r.str();
                return false;
            }
        }
    return true;
}

}  // namespace

InvarianceReport verify_invariance_external(const ReductionTrace& trace, int bound) {
    InvarianceReport rep;
    ReductionMode mode = mode_cplustimes_all();
    ProofPtr cur = trace.start;
    ExecReport qcur = qExec(interpret(cur), cut_pairs(cur->seq), mode, bound);
    for (std::size_t s = 0; s < trace.steps.size(); ++s) {
        const ReductionStep& step = trace.steps[s];
        ProofPtr next = trace.proofs[s];
        ExecReport qnext = qExec(interpret(next), cut_pairs(next->seq), mode, bound);
        if (qcur.divergent || qnext.divergent) {
            rep.pass = false;
            rep.failures.push_back("step " + std::to_string(s) + ": divergent quasi-execution");
            return rep;
        }
        FMatrix lhs(qcur.result.rows(), qcur.result.cols());
        for (const auto& [rc, v] : qcur.result.entries())
            lhs.set(rc.first, rc.second, reduce(hom_apply(step.emitted_hom, v), mode));
        std::string why;
        if (!compare_through_map(lhs, qnext.result, step.gamma_map, mode, &why)) {
            rep.pass = false;
            rep.failures.push_back("step " + std::to_string(s) + " (" +
                                   step_kind_name(step.kind) + "): " + why);
        }
        cur = next;
        qcur = qnext;
    }
    // end-to-end: composite hom carries the start's execution onto the normal form
    ProofPtr nf = trace.result();
    if (nf->seq.cuts.empty()) {
        ExecReport q0 = qExec(interpret(trace.start), cut_pairs(trace.start->seq), mode, bound);
        if (q0.divergent) {
            rep.pass = false;
            rep.failures.push_back("end-to-end: divergent quasi-execution");
            return rep;
        }
        FMatrix lhs(q0.result.rows(), q0.result.cols());
        for (const auto& [rc, v] : q0.result.entries())
            lhs.set(rc.first, rc.second, reduce(hom_apply(trace.composite_hom, v), mode));
        std::string why;
        if (!compare_through_map(lhs, interpret(nf), trace.gamma_map, mode, &why)) {
            rep.pass = false;
            rep.failures.push_back("end-to-end: " + why);
        }
    }
    return rep;
}

InvarianceReport verify_invariance_autonomous(const ReductionTrace& trace, int bound) {
    InvarianceReport rep;
    ReductionMode mode = mode_cplustimes_all();
    ProofPtr cur = trace.start;
    for (std::size_t s = 0; s < trace.steps.size(); ++s) {
        ProofPtr next = trace.proofs[s];
        // the target side is solved autonomously; the source solution is the
        // target one, identity on the superposition weights the step's
        // substitution introduces, precomposed with that substitution
        Solution dnext = solve(next);
        const RingHom& e = trace.steps[s].emitted_hom;
        RingHom dn2 = dnext.hom;
        std::set<Literal> gamma_cur = literals_of_gamma(cur->seq);
        for (const auto& [l, v] : e.subst)
            for (const Literal& image_lit : v.literals())
                if (gamma_cur.count(image_lit)) dn2.subst.erase(image_lit);
        RingHom dcur = hom_compose(dn2, e);
        // the source system's own conclusion-literal constraints (weights
        // pinned by relay flows) live outside the cut restriction, so they
        // can be adopted from a direct solution without touching the equality
        Solution dsrc = solve(cur);
        for (const auto& [l, v] : dsrc.hom.subst)
            if (gamma_cur.count(l) && !dcur.maps(l)) dcur.set(l, v);
        for (const Literal& l : literals_of_delta(cur->seq))
            if (!dcur.maps(l)) dcur.set(l, Poly::zero());

        EqSystem scur = eq_system(cur);
        EqSystem snext = eq_system(next);
        if (auto bad = check_solution(scur, dcur)) {
            rep.pass = false;
            rep.failures.push_back("step " + std::to_string(s) +
                                   ": source solution fails " + bad->str());
        }
        if (auto bad = check_solution(snext, dnext.hom)) {
            rep.pass = false;
            rep.failures.push_back("step " + std::to_string(s) +
                                   ": target solution fails " + bad->str());
        }
        RingHom dl = hom_restrict(dcur, literals_of_delta(cur->seq));
        RingHom dr = hom_restrict(dnext.hom, literals_of_delta(next->seq));
        ExecReport ql = qExec(interpret(cur), cut_pairs(cur->seq), mode, bound);
        ExecReport qr = qExec(interpret(next), cut_pairs(next->seq), mode, bound);
        if (ql.divergent || qr.divergent) {
            rep.pass = false;
            rep.failures.push_back("step " + std::to_string(s) + ": divergent quasi-execution");
            return rep;
        }
        FMatrix lhs(ql.result.rows(), ql.result.cols());
        for (const auto& [rc, v] : ql.result.entries())
            lhs.set(rc.first, rc.second, reduce(hom_apply(dl, v), mode));
        FMatrix rhs(qr.result.rows(), qr.result.cols());
        for (const auto& [rc, v] : qr.result.entries())
            rhs.set(rc.first, rc.second, reduce(hom_apply(dr, v), mode));
        std::string why;
        if (!compare_through_map(lhs, rhs, trace.steps[s].gamma_map, mode, &why)) {
            rep.pass = false;
            rep.failures.push_back("step " + std::to_string(s) + " (" +
                                   step_kind_name(trace.steps[s].kind) + "): " + why);
        }
        cur = next;
    }
    return rep;
}

bool verify_cocontraction_identity(const FMatrix& f, const FMatrix& g, int principal_pos,
                                   WeightId weight, const Pairs& delta_pairs,
                                   const std::set<WeightId>& duplicated, int bound) {
    // mode: complement elimination plus idempotency of the superposition weight
    ReductionMode mode = mode_cplus();
    mode.idempotent.insert(Literal{weight, false});

    MatLabel merged{"&", kNoOcc, -1, false};
    FMatrix s = superpose_S(f, g, principal_pos, principal_pos, weight, merged);
    ExecReport left_run = qExec(s, delta_pairs, mode, bound);
    if (left_run.divergent) return false;

    std::set<Literal> delta_lits;
    for (WeightId w : duplicated) {
        delta_lits.insert(Literal{w, false});
        delta_lits.insert(Literal{w, true});
    }
    std::map<WeightId, WeightId> ren;
    WeightId next = weight;
    for (const auto& m : {f, g})
        for (const auto& [rc, v] : m.entries())
            for (const Literal& l : v.literals()) next = std::max(next, l.weight);
    for (WeightId w : duplicated) ren[w] = ++next;

    RingHom rename;
    for (const auto& [w, w2] : ren) {
        rename.set(Literal{w, false}, Poly::lit(Literal{w2, false}));
        rename.set(Literal{w, true}, Poly::lit(Literal{w2, true}));
    }
    RingHom dup;  // c := a c + ā c'
    Poly a = Poly::lit(Literal{weight, false});
    Poly abar = Poly::lit(Literal{weight, true});
    for (const Literal& l : delta_lits)
        dup.set(l, a.times(Poly::lit(l)).plus(abar.times(hom_apply(rename, Poly::lit(l)))));

    FMatrix lhs(left_run.result.rows(), left_run.result.cols());
    for (const auto& [rc, v] : left_run.result.entries())
        lhs.set(rc.first, rc.second, reduce(hom_apply(dup, v), mode));

    // doubled index: Δ2 copy inserted after Δ, carrying the renamed g block
    int n = f.nrows();
    std::vector<int> delta_positions;
    for (const auto& [pa, pb] : delta_pairs) {
        delta_positions.push_back(pa);
        delta_positions.push_back(pb);
    }
    std::sort(delta_positions.begin(), delta_positions.end());
    int dn = static_cast<int>(delta_positions.size());

    std::vector<MatLabel> labels;
    for (int i : delta_positions) labels.push_back(f.rows()[i]);
    for (int i : delta_positions) {
        MatLabel l = f.rows()[i];
        l.text += "'";
        labels.push_back(l);
    }
    std::vector<int> rest;
    for (int i = 0; i < n; ++i)
        if (std::find(delta_positions.begin(), delta_positions.end(), i) ==
            delta_positions.end())
            rest.push_back(i);
    for (int i : rest) labels.push_back(f.rows()[i]);

    auto pos_first = [&](int i) {
        auto it = std::find(delta_positions.begin(), delta_positions.end(), i);
        if (it != delta_positions.end())
            return static_cast<int>(it - delta_positions.begin());
        return 2 * dn +
               static_cast<int>(std::find(rest.begin(), rest.end(), i) - rest.begin());
    };
    auto pos_second = [&](int i) {
        auto it = std::find(delta_positions.begin(), delta_positions.end(), i);
        if (it != delta_positions.end())
            return dn + static_cast<int>(it - delta_positions.begin());
        return 2 * dn +
               static_cast<int>(std::find(rest.begin(), rest.end(), i) - rest.begin());
    };

    FMatrix fd = FMatrix::square(labels);
    for (const auto& [rc, v] : f.entries()) fd.set(pos_first(rc.first), pos_first(rc.second), v);
    FMatrix gd = FMatrix::square(labels);
    for (const auto& [rc, v] : g.entries())
        gd.set(pos_second(rc.first), pos_second(rc.second), hom_apply(rename, v));

    int principal_doubled = pos_first(principal_pos);
    FMatrix sd = superpose_S(fd, gd, principal_doubled, principal_doubled, weight, merged);
    Pairs doubled_pairs;
    for (const auto& [pa, pb] : delta_pairs) {
        doubled_pairs.push_back({pos_first(pa), pos_first(pb)});
        doubled_pairs.push_back({pos_second(pa), pos_second(pb)});
    }
    ExecReport right_run = qExec(sd, doubled_pairs, mode, bound);
    if (right_run.divergent) return false;

    return equal_mod(lhs, right_run.result, mode);
}

}  // namespace goi
