#include "goi/proof.hpp"

#include <algorithm>

namespace goi {

OccId Sequent::add_tree(const Formula& f, OccId parent) {
    OccId id = static_cast<OccId>(arena.size());
    arena.push_back(OccNode{f, parent, kNoOcc, kNoOcc, 0});
    if (!f.is_atom()) {
        OccId l = add_tree(f.left(), id);
        OccId r = add_tree(f.right(), id);
        arena[id].left = l;
        arena[id].right = r;
    }
    return id;
}

const OccNode& Sequent::at(OccId o) const {
    if (o >= arena.size()) throw DanglingOccurrence("occ " + std::to_string(o));
    return arena[o];
}

std::vector<OccId> Sequent::matrix_index() const {
    std::vector<OccId> idx;
    for (const auto& [c, cbar] : cuts) {
        idx.push_back(c);
        idx.push_back(cbar);
    }
    for (OccId g : conclusion) idx.push_back(g);
    return idx;
}

std::vector<OccId> Sequent::leaves_under(OccId root) const {
    std::vector<OccId> out;
    std::vector<OccId> stack{root};
    while (!stack.empty()) {
        OccId o = stack.back();
        stack.pop_back();
        const OccNode& n = at(o);
        if (n.formula.is_atom()) {
            out.push_back(o);
        } else {
            stack.push_back(n.right);
            stack.push_back(n.left);
        }
    }
    return out;
}

std::string Sequent::str() const {
    std::string s = "⊢ ";
    if (!cuts.empty()) {
        s += "[";
        for (std::size_t i = 0; i < cuts.size(); ++i) {
            if (i) s += ", ";
            s += at(cuts[i].first).formula.str() + " * " + at(cuts[i].second).formula.str();
        }
        s += "], ";
    }
    for (std::size_t i = 0; i < conclusion.size(); ++i) {
        if (i) s += ", ";
        s += at(conclusion[i]).formula.str();
    }
    return s;
}

bool Sequent::operator==(const Sequent& o) const {
    if (cuts != o.cuts || conclusion != o.conclusion) return false;
    if (arena.size() != o.arena.size()) return false;
    for (std::size_t i = 0; i < arena.size(); ++i) {
        const OccNode& a = arena[i];
        const OccNode& b = o.arena[i];
        if (a.formula != b.formula || a.parent != b.parent || a.left != b.left ||
            a.right != b.right || a.weight != b.weight)
            return false;
    }
    return true;
}

std::string rule_name(Rule r) {
    switch (r) {
        case Rule::Ax: return "ax";
        case Rule::Cut: return "cut";
        case Rule::Tensor: return "tensor";
        case Rule::Par: return "par";
        case Rule::Plus1: return "plus1";
        case Rule::Plus2: return "plus2";
        case Rule::With: return "with";
    }
    return "?";
}

namespace {

// Copies the subtree at src_root into dst (preorder), filling omap.
OccId copy_tree(const Sequent& src, OccId src_root, Sequent& dst, OccId parent,
                std::vector<OccId>& omap) {
    const OccNode& n = src.at(src_root);
    OccId id = static_cast<OccId>(dst.arena.size());
    dst.arena.push_back(OccNode{n.formula, parent, kNoOcc, kNoOcc, n.weight});
    omap[src_root] = id;
    if (!n.formula.is_atom()) {
        OccId l = copy_tree(src, n.left, dst, id, omap);
        OccId r = copy_tree(src, n.right, dst, id, omap);
        dst.arena[id].left = l;
        dst.arena[id].right = r;
    }
    return id;
}

// Maps src subtree occurrences onto an existing dst subtree of identical
// shape (superposition); contracts weights, complaining on a clash.
void map_onto(const Sequent& src, OccId src_root, Sequent& dst, OccId dst_root,
              std::vector<OccId>& omap) {
    const OccNode& sn = src.at(src_root);
    OccNode& dn = dst.arena[dst_root];
    if (sn.formula != dn.formula)
        throw RuleMismatch("superposed occurrences differ: " + sn.formula.str() + " vs " +
                           dn.formula.str());
    if (sn.weight != 0 && dn.weight != 0 && sn.weight != dn.weight)
        throw RuleMismatch("superposed with occurrences carry distinct assigned weights");
    if (dn.weight == 0) dn.weight = sn.weight;
    omap[src_root] = dst_root;
    if (!sn.formula.is_atom()) {
        map_onto(src, sn.left, dst, dn.left, omap);
        map_onto(src, sn.right, dst, dn.right, omap);
    }
}

Formula conclusion_formula(const ProofPtr& p, int pos) {
    if (pos < 0 || pos >= static_cast<int>(p->seq.conclusion.size()))
        throw DanglingOccurrence("conclusion position " + std::to_string(pos));
    return p->seq.at(p->seq.conclusion[pos]).formula;
}

}  // namespace

OccId Proof::conclusion_occ(int premise, OccId premise_occ) const {
    return occ_map.at(premise).at(premise_occ);
}

ProofPtr Proof::ax(const std::string& atom, bool positive_first) {
    auto p = std::make_shared<Proof>();
    p->rule = Rule::Ax;
    p->seq.conclusion.push_back(p->seq.add_tree(Formula::atom(atom, positive_first)));
    p->seq.conclusion.push_back(p->seq.add_tree(Formula::atom(atom, !positive_first)));
    return p;
}

ProofPtr Proof::cut(ProofPtr a, ProofPtr b, int pos1, int pos2) {
    Formula c = conclusion_formula(a, pos1);
    Formula cbar = conclusion_formula(b, pos2);
    if (c.negate() != cbar)
        throw DualityViolation(c.str() + " cut against " + cbar.str());

    auto p = std::make_shared<Proof>();
    p->rule = Rule::Cut;
    p->premises = {a, b};
    p->principal1 = pos1;
    p->principal2 = pos2;
    std::vector<OccId> m1(a->seq.arena.size(), kNoOcc), m2(b->seq.arena.size(), kNoOcc);

    // cut list: [Δ1, Δ2, C * C⊥]
    for (const auto& [x, y] : a->seq.cuts)
        p->seq.cuts.push_back({copy_tree(a->seq, x, p->seq, kNoOcc, m1),
                               copy_tree(a->seq, y, p->seq, kNoOcc, m1)});
    for (const auto& [x, y] : b->seq.cuts)
        p->seq.cuts.push_back({copy_tree(b->seq, x, p->seq, kNoOcc, m2),
                               copy_tree(b->seq, y, p->seq, kNoOcc, m2)});
    OccId cn = copy_tree(a->seq, a->seq.conclusion[pos1], p->seq, kNoOcc, m1);
    OccId cbn = copy_tree(b->seq, b->seq.conclusion[pos2], p->seq, kNoOcc, m2);
    p->seq.cuts.push_back({cn, cbn});

    for (int i = 0; i < static_cast<int>(a->seq.conclusion.size()); ++i)
        if (i != pos1)
            p->seq.conclusion.push_back(
                copy_tree(a->seq, a->seq.conclusion[i], p->seq, kNoOcc, m1));
    for (int i = 0; i < static_cast<int>(b->seq.conclusion.size()); ++i)
        if (i != pos2)
            p->seq.conclusion.push_back(
                copy_tree(b->seq, b->seq.conclusion[i], p->seq, kNoOcc, m2));
    p->occ_map = {std::move(m1), std::move(m2)};
    return p;
}

ProofPtr Proof::tensor(ProofPtr a, ProofPtr b, int pos1, int pos2) {
    Formula fa = conclusion_formula(a, pos1);
    Formula fb = conclusion_formula(b, pos2);
    auto p = std::make_shared<Proof>();
    p->rule = Rule::Tensor;
    p->premises = {a, b};
    p->principal1 = pos1;
    p->principal2 = pos2;
    std::vector<OccId> m1(a->seq.arena.size(), kNoOcc), m2(b->seq.arena.size(), kNoOcc);

    for (const auto& [x, y] : a->seq.cuts)
        p->seq.cuts.push_back({copy_tree(a->seq, x, p->seq, kNoOcc, m1),
                               copy_tree(a->seq, y, p->seq, kNoOcc, m1)});
    for (const auto& [x, y] : b->seq.cuts)
        p->seq.cuts.push_back({copy_tree(b->seq, x, p->seq, kNoOcc, m2),
                               copy_tree(b->seq, y, p->seq, kNoOcc, m2)});
    for (int i = 0; i < static_cast<int>(a->seq.conclusion.size()); ++i)
        if (i != pos1)
            p->seq.conclusion.push_back(
                copy_tree(a->seq, a->seq.conclusion[i], p->seq, kNoOcc, m1));
    for (int i = 0; i < static_cast<int>(b->seq.conclusion.size()); ++i)
        if (i != pos2)
            p->seq.conclusion.push_back(
                copy_tree(b->seq, b->seq.conclusion[i], p->seq, kNoOcc, m2));

    OccId root = static_cast<OccId>(p->seq.arena.size());
    p->seq.arena.push_back(OccNode{Formula::tensor(fa, fb), kNoOcc, kNoOcc, kNoOcc, 0});
    OccId lch = copy_tree(a->seq, a->seq.conclusion[pos1], p->seq, root, m1);
    OccId rch = copy_tree(b->seq, b->seq.conclusion[pos2], p->seq, root, m2);
    p->seq.arena[root].left = lch;
    p->seq.arena[root].right = rch;
    p->seq.conclusion.push_back(root);
    p->occ_map = {std::move(m1), std::move(m2)};
    return p;
}

ProofPtr Proof::par(ProofPtr a, int pos_left, int pos_right) {
    if (pos_left == pos_right) throw RuleMismatch("par needs two distinct occurrences");
    Formula fl = conclusion_formula(a, pos_left);
    Formula fr = conclusion_formula(a, pos_right);
    auto p = std::make_shared<Proof>();
    p->rule = Rule::Par;
    p->premises = {a};
    p->principal1 = pos_left;
    p->principal2 = pos_right;
    std::vector<OccId> m1(a->seq.arena.size(), kNoOcc);

    for (const auto& [x, y] : a->seq.cuts)
        p->seq.cuts.push_back({copy_tree(a->seq, x, p->seq, kNoOcc, m1),
                               copy_tree(a->seq, y, p->seq, kNoOcc, m1)});
    for (int i = 0; i < static_cast<int>(a->seq.conclusion.size()); ++i)
        if (i != pos_left && i != pos_right)
            p->seq.conclusion.push_back(
                copy_tree(a->seq, a->seq.conclusion[i], p->seq, kNoOcc, m1));

    OccId root = static_cast<OccId>(p->seq.arena.size());
    p->seq.arena.push_back(OccNode{Formula::par(fl, fr), kNoOcc, kNoOcc, kNoOcc, 0});
    OccId lch = copy_tree(a->seq, a->seq.conclusion[pos_left], p->seq, root, m1);
    OccId rch = copy_tree(a->seq, a->seq.conclusion[pos_right], p->seq, root, m1);
    p->seq.arena[root].left = lch;
    p->seq.arena[root].right = rch;
    p->seq.conclusion.push_back(root);
    p->occ_map = {std::move(m1)};
    return p;
}

static ProofPtr plus_impl(Rule rule, ProofPtr a, int pos, Formula absent) {
    Formula fp = conclusion_formula(a, pos);
    auto p = std::make_shared<Proof>();
    p->rule = rule;
    p->premises = {a};
    p->principal1 = pos;
    p->other = absent;
    std::vector<OccId> m1(a->seq.arena.size(), kNoOcc);

    for (const auto& [x, y] : a->seq.cuts)
        p->seq.cuts.push_back({copy_tree(a->seq, x, p->seq, kNoOcc, m1),
                               copy_tree(a->seq, y, p->seq, kNoOcc, m1)});
    for (int i = 0; i < static_cast<int>(a->seq.conclusion.size()); ++i)
        if (i != pos)
            p->seq.conclusion.push_back(
                copy_tree(a->seq, a->seq.conclusion[i], p->seq, kNoOcc, m1));

    Formula whole = rule == Rule::Plus1 ? Formula::plus(fp, absent) : Formula::plus(absent, fp);
    OccId root = static_cast<OccId>(p->seq.arena.size());
    p->seq.arena.push_back(OccNode{whole, kNoOcc, kNoOcc, kNoOcc, 0});
    if (rule == Rule::Plus1) {
        OccId lch = copy_tree(a->seq, a->seq.conclusion[pos], p->seq, root, m1);
        OccId rch = p->seq.add_tree(absent, root);
        p->seq.arena[root].left = lch;
        p->seq.arena[root].right = rch;
    } else {
        OccId lch = p->seq.add_tree(absent, root);
        OccId rch = copy_tree(a->seq, a->seq.conclusion[pos], p->seq, root, m1);
        p->seq.arena[root].left = lch;
        p->seq.arena[root].right = rch;
    }
    p->seq.conclusion.push_back(root);
    p->occ_map = {std::move(m1)};
    return p;
}

ProofPtr Proof::plus1(ProofPtr a, int pos, Formula right_side) {
    return plus_impl(Rule::Plus1, std::move(a), pos, std::move(right_side));
}

ProofPtr Proof::plus2(ProofPtr a, int pos, Formula left_side) {
    return plus_impl(Rule::Plus2, std::move(a), pos, std::move(left_side));
}

ProofPtr Proof::with(ProofPtr a, ProofPtr b, int pos1, int pos2,
                     std::vector<std::pair<int, int>> superpose, WeightId weight,
                     std::vector<int> ctx_map) {
    Formula fa = conclusion_formula(a, pos1);
    Formula fb = conclusion_formula(b, pos2);

    // contexts (everything but the principal) must match under the pairing
    std::vector<int> ctx1, ctx2;
    for (int i = 0; i < static_cast<int>(a->seq.conclusion.size()); ++i)
        if (i != pos1) ctx1.push_back(i);
    for (int i = 0; i < static_cast<int>(b->seq.conclusion.size()); ++i)
        if (i != pos2) ctx2.push_back(i);
    if (ctx1.size() != ctx2.size())
        throw RuleMismatch("with premises have different context sizes");
    if (!ctx_map.empty()) {
        if (ctx_map.size() != ctx1.size())
            throw RuleMismatch("with context pairing has the wrong length");
        std::vector<bool> used(ctx2.size(), false);
        for (int j : ctx_map) {
            if (j < 0 || j >= static_cast<int>(ctx2.size()) || used[j])
                throw RuleMismatch("with context pairing is not a bijection");
            used[j] = true;
        }
    }
    // canonical form: the identity pairing is stored empty
    bool identity = true;
    for (std::size_t i = 0; i < ctx_map.size(); ++i)
        if (ctx_map[i] != static_cast<int>(i)) identity = false;
    if (identity) ctx_map.clear();
    auto paired2 = [&](std::size_t i) { return ctx2[ctx_map.empty() ? i : ctx_map[i]]; };
    for (std::size_t i = 0; i < ctx1.size(); ++i) {
        Formula f1 = a->seq.at(a->seq.conclusion[ctx1[i]]).formula;
        Formula f2 = b->seq.at(b->seq.conclusion[paired2(i)]).formula;
        if (f1 != f2)
            throw RuleMismatch("with contexts differ at position " + std::to_string(i) + ": " +
                               f1.str() + " vs " + f2.str());
    }

    std::sort(superpose.begin(), superpose.end());
    std::set<int> shared1, shared2;
    for (const auto& [i, j] : superpose) {
        if (i < 0 || i >= static_cast<int>(a->seq.cuts.size()) || j < 0 ||
            j >= static_cast<int>(b->seq.cuts.size()))
            throw RuleMismatch("superpose index out of range");
        if (!shared1.insert(i).second || !shared2.insert(j).second)
            throw RuleMismatch("duplicate superpose index");
        Formula a1 = a->seq.at(a->seq.cuts[i].first).formula;
        Formula a2 = b->seq.at(b->seq.cuts[j].first).formula;
        Formula b1 = a->seq.at(a->seq.cuts[i].second).formula;
        Formula b2 = b->seq.at(b->seq.cuts[j].second).formula;
        if (a1 != a2 || b1 != b2)
            throw RuleMismatch("superposed cuts differ at index " + std::to_string(i));
    }

    auto p = std::make_shared<Proof>();
    p->rule = Rule::With;
    p->premises = {a, b};
    p->principal1 = pos1;
    p->principal2 = pos2;
    p->superpose = superpose;
    p->ctx_map = ctx_map;
    std::vector<OccId> m1(a->seq.arena.size(), kNoOcc), m2(b->seq.arena.size(), kNoOcc);

    // cut list: [Δ1, Δ2, Σ]
    for (int i = 0; i < static_cast<int>(a->seq.cuts.size()); ++i)
        if (!shared1.count(i))
            p->seq.cuts.push_back({copy_tree(a->seq, a->seq.cuts[i].first, p->seq, kNoOcc, m1),
                                   copy_tree(a->seq, a->seq.cuts[i].second, p->seq, kNoOcc, m1)});
    for (int i = 0; i < static_cast<int>(b->seq.cuts.size()); ++i)
        if (!shared2.count(i))
            p->seq.cuts.push_back({copy_tree(b->seq, b->seq.cuts[i].first, p->seq, kNoOcc, m2),
                                   copy_tree(b->seq, b->seq.cuts[i].second, p->seq, kNoOcc, m2)});
    for (const auto& [i, j] : superpose) {
        OccId x = copy_tree(a->seq, a->seq.cuts[i].first, p->seq, kNoOcc, m1);
        OccId y = copy_tree(a->seq, a->seq.cuts[i].second, p->seq, kNoOcc, m1);
        map_onto(b->seq, b->seq.cuts[j].first, p->seq, x, m2);
        map_onto(b->seq, b->seq.cuts[j].second, p->seq, y, m2);
        p->seq.cuts.push_back({x, y});
    }

    // superposed context
    for (std::size_t i = 0; i < ctx1.size(); ++i) {
        OccId g = copy_tree(a->seq, a->seq.conclusion[ctx1[i]], p->seq, kNoOcc, m1);
        map_onto(b->seq, b->seq.conclusion[paired2(i)], p->seq, g, m2);
        p->seq.conclusion.push_back(g);
    }

    OccId root = static_cast<OccId>(p->seq.arena.size());
    p->seq.arena.push_back(OccNode{Formula::with(fa, fb), kNoOcc, kNoOcc, kNoOcc, weight});
    OccId lch = copy_tree(a->seq, a->seq.conclusion[pos1], p->seq, root, m1);
    OccId rch = copy_tree(b->seq, b->seq.conclusion[pos2], p->seq, root, m2);
    p->seq.arena[root].left = lch;
    p->seq.arena[root].right = rch;
    p->seq.conclusion.push_back(root);
    p->occ_map = {std::move(m1), std::move(m2)};
    return p;
}

namespace {

// arena equality up to eigenweight values
bool same_shape(const Sequent& a, const Sequent& b) {
    if (a.cuts != b.cuts || a.conclusion != b.conclusion) return false;
    if (a.arena.size() != b.arena.size()) return false;
    for (std::size_t i = 0; i < a.arena.size(); ++i) {
        const OccNode& x = a.arena[i];
        const OccNode& y = b.arena[i];
        if (x.formula != y.formula || x.parent != y.parent || x.left != y.left ||
            x.right != y.right)
            return false;
    }
    return true;
}

ProofPtr rebuild(const ProofPtr& p) {
    switch (p->rule) {
        case Rule::Ax: {
            const OccNode& first = p->seq.at(p->seq.conclusion.at(0));
            if (p->seq.conclusion.size() != 2 || !p->seq.cuts.empty())
                throw RuleMismatch("ax conclusion must be exactly A, A~");
            if (!first.formula.is_atom()) throw RuleMismatch("ax is restricted to atoms");
            return Proof::ax(first.formula.atom_name(), first.formula.atom_positive());
        }
        case Rule::Cut:
            return Proof::cut(p->premises.at(0), p->premises.at(1), p->principal1,
                              p->principal2);
        case Rule::Tensor:
            return Proof::tensor(p->premises.at(0), p->premises.at(1), p->principal1,
                                 p->principal2);
        case Rule::Par:
            return Proof::par(p->premises.at(0), p->principal1, p->principal2);
        case Rule::Plus1:
            return Proof::plus1(p->premises.at(0), p->principal1, p->other);
        case Rule::Plus2:
            return Proof::plus2(p->premises.at(0), p->principal1, p->other);
        case Rule::With: {
            WeightId w = 0;
            // locate the stored root weight so reconstruction can compare fully
            if (!p->seq.conclusion.empty())
                w = p->seq.at(p->seq.conclusion.back()).weight;
            return Proof::with(p->premises.at(0), p->premises.at(1), p->principal1,
                               p->principal2, p->superpose, w, p->ctx_map);
        }
    }
    throw RuleMismatch("unknown rule");
}

}  // namespace

Sequent check_proof(const ProofPtr& p) {
    if (!p) throw ProofError("null proof");
    for (const auto& q : p->premises) check_proof(q);
    ProofPtr fresh = rebuild(p);
    if (!same_shape(fresh->seq, p->seq))
        throw RuleMismatch("stored conclusion of " + rule_name(p->rule) +
                           " node disagrees with its premises: stored " + p->seq.str() +
                           ", derived " + fresh->seq.str());
    if (fresh->occ_map != p->occ_map)
        throw RuleMismatch("occurrence maps of " + rule_name(p->rule) + " node are inconsistent");
    // weight coherence: premise occurrences carry their image's weight
    for (std::size_t i = 0; i < p->premises.size(); ++i)
        for (std::size_t o = 0; o < p->premises[i]->seq.arena.size(); ++o) {
            OccId img = p->occ_map[i][o];
            if (img == kNoOcc) throw DanglingOccurrence("premise occurrence unmapped");
            WeightId wp = p->premises[i]->seq.arena[o].weight;
            WeightId wc = p->seq.at(img).weight;
            if (wp != 0 && wc != 0 && wp != wc)
                throw RuleMismatch("eigenweight not contracted consistently across " +
                                   rule_name(p->rule));
        }
    return p->seq;
}

namespace {

struct MutableProof {
    Rule rule;
    std::vector<std::shared_ptr<MutableProof>> premises;
    std::vector<std::vector<OccId>> occ_map;
    int principal1, principal2;
    std::vector<std::pair<int, int>> superpose;
    std::vector<int> ctx_map;
    Formula other;
    Sequent seq;
};

std::shared_ptr<MutableProof> thaw(const ProofPtr& p) {
    auto m = std::make_shared<MutableProof>();
    m->rule = p->rule;
    for (const auto& q : p->premises) m->premises.push_back(thaw(q));
    m->occ_map = p->occ_map;
    m->principal1 = p->principal1;
    m->principal2 = p->principal2;
    m->superpose = p->superpose;
    m->ctx_map = p->ctx_map;
    m->other = p->other;
    m->seq = p->seq;
    return m;
}

ProofPtr freeze(const std::shared_ptr<MutableProof>& m) {
    auto p = std::make_shared<Proof>();
    p->rule = m->rule;
    for (const auto& q : m->premises) p->premises.push_back(freeze(q));
    p->occ_map = m->occ_map;
    p->principal1 = m->principal1;
    p->principal2 = m->principal2;
    p->superpose = m->superpose;
    p->ctx_map = m->ctx_map;
    p->other = m->other;
    p->seq = m->seq;
    return p;
}

void push_weights(const std::shared_ptr<MutableProof>& m) {
    for (std::size_t i = 0; i < m->premises.size(); ++i) {
        auto& prem = m->premises[i];
        const auto& omap = m->occ_map[i];
        for (std::size_t o = 0; o < prem->seq.arena.size(); ++o) {
            OccId img = omap[o];
            if (img == kNoOcc) throw DanglingOccurrence("premise occurrence unmapped");
            prem->seq.arena[o].weight = m->seq.arena[img].weight;
        }
        push_weights(prem);
    }
}

}  // namespace

ProofPtr assign_eigenweights(const ProofPtr& p) {
    check_proof(p);
    auto m = thaw(p);
    WeightId next = 1;
    for (auto& n : m->seq.arena)
        if (n.formula.conn() == Conn::With) n.weight = next++;
        else n.weight = 0;
    push_weights(m);
    return freeze(m);
}

namespace {

void rename_arena(Sequent& s, const std::map<WeightId, WeightId>& ren) {
    for (auto& n : s.arena) {
        auto it = ren.find(n.weight);
        if (n.weight != 0 && it != ren.end()) n.weight = it->second;
    }
}

void rename_rec(const std::shared_ptr<MutableProof>& m, const std::map<WeightId, WeightId>& ren) {
    rename_arena(m->seq, ren);
    for (auto& q : m->premises) rename_rec(q, ren);
}

}  // namespace

ProofPtr rename_weights(const ProofPtr& p, const std::map<WeightId, WeightId>& ren) {
    auto m = thaw(p);
    rename_rec(m, ren);
    return freeze(m);
}

ProofPtr fill_missing_weights(const ProofPtr& p, WeightId& next) {
    auto m = thaw(p);
    bool any = false;
    for (auto& n : m->seq.arena)
        if (n.formula.conn() == Conn::With && n.weight == 0) {
            n.weight = ++next;
            any = true;
        }
    if (!any) return p;
    push_weights(m);
    return freeze(m);
}

WeightId max_weight(const ProofPtr& p) {
    WeightId w = 0;
    for (const auto& n : p->seq.arena) w = std::max(w, n.weight);
    for (const auto& q : p->premises) w = std::max(w, max_weight(q));
    return w;
}

namespace {

void collect_literals(const Sequent& s, OccId root, std::set<Literal>& out) {
    const OccNode& n = s.at(root);
    if (n.formula.conn() == Conn::With) {
        if (n.weight == 0) throw ProofError("eigenweight unassigned at " + n.formula.str());
        out.insert(Literal{n.weight, false});
        out.insert(Literal{n.weight, true});
    }
    if (!n.formula.is_atom()) {
        collect_literals(s, n.left, out);
        collect_literals(s, n.right, out);
    }
}

}  // namespace

std::set<Literal> literals_of(const Formula& f) {
    if (f.is_atom()) return {};
    if (f.conn() == Conn::With)
        throw ProofError("bare formula with a with connective has no assigned weights");
    auto l = literals_of(f.left());
    auto r = literals_of(f.right());
    l.insert(r.begin(), r.end());
    return l;
}

std::set<Literal> literals_of(const Sequent& s, OccId root) {
    std::set<Literal> out;
    collect_literals(s, root, out);
    return out;
}

std::set<Literal> literals_of_delta(const Sequent& s) {
    std::set<Literal> out;
    for (const auto& [x, y] : s.cuts) {
        collect_literals(s, x, out);
        collect_literals(s, y, out);
    }
    return out;
}

std::set<Literal> literals_of_gamma(const Sequent& s) {
    std::set<Literal> out;
    for (OccId g : s.conclusion) collect_literals(s, g, out);
    return out;
}

std::set<Literal> literals_of(const Sequent& s) {
    auto out = literals_of_delta(s);
    auto g = literals_of_gamma(s);
    out.insert(g.begin(), g.end());
    return out;
}

std::string occ_str(const Sequent& s, OccId o) { return s.at(o).formula.str(); }

bool Proof::operator==(const Proof& o) const {
    if (rule != o.rule || principal1 != o.principal1 || principal2 != o.principal2 ||
        superpose != o.superpose || ctx_map != o.ctx_map || !(seq == o.seq) ||
        occ_map != o.occ_map)
        return false;
    if (!other.empty() != !o.other.empty()) return false;
    if (!other.empty() && other != o.other) return false;
    if (premises.size() != o.premises.size()) return false;
    for (std::size_t i = 0; i < premises.size(); ++i)
        if (!(*premises[i] == *o.premises[i])) return false;
    return true;
}

}  // namespace goi
