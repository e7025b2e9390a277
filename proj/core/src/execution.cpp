#include "goi/execution.hpp"

#include <algorithm>

namespace goi {

Pairs cut_pairs(const Sequent& s) {
    Pairs ps;
    for (int i = 0; i < static_cast<int>(s.cuts.size()); ++i) ps.push_back({2 * i, 2 * i + 1});
    return ps;
}

Pairs all_pairs(const FMatrix& u) {
    // delta labels come pairwise first in a proof matrix index
    Pairs ps;
    for (int i = 0; i < u.nrows(); ++i) {
        if (u.rows()[i].in_delta()) {
            ps.push_back({i, i + 1});
            ++i;
        }
    }
    return ps;
}

namespace {

struct Split {
    std::vector<int> delta;    // flattened pair positions, pairwise
    std::vector<int> passive;  // everything else, in order
};

Split split_positions(int n, const Pairs& pairs) {
    Split s;
    std::vector<bool> active(n, false);
    for (const auto& [a, b] : pairs) {
        if (a < 0 || b < 0 || a >= n || b >= n || a == b)
            throw IndexMismatch("bad pair positions");
        if (active[a] || active[b]) throw IndexMismatch("overlapping pairs");
        active[a] = active[b] = true;
        s.delta.push_back(a);
        s.delta.push_back(b);
    }
    for (int i = 0; i < n; ++i)
        if (!active[i]) s.passive.push_back(i);
    return s;
}

// swap rows within each consecutive pair: (σ M) for M indexed by the delta list
template <class E>
Mat<E> sigma_swap(const Mat<E>& m) {
    std::vector<int> perm(m.nrows());
    for (int i = 0; i + 1 < m.nrows(); i += 2) {
        perm[i] = i + 1;
        perm[i + 1] = i;
    }
    return m.permute_rows(perm);
}

}  // namespace

PartialSymmetry sigma(const FMatrix& u, const Pairs& pairs) {
    Split s = split_positions(u.nrows(), pairs);
    std::vector<MatLabel> labels;
    for (int i : s.delta) labels.push_back(u.rows()[i]);
    FMatrix m = FMatrix::square(labels);
    for (int i = 0; i + 1 < static_cast<int>(s.delta.size()); i += 2) {
        m.set(i, i + 1, AlgElem::one());
        m.set(i + 1, i, AlgElem::one());
    }
    PartialSymmetry out;
    out.pairs = pairs;
    out.matrix = std::move(m);
    return out;
}

PartialSymmetry sigma(const Sequent& s) {
    std::vector<MatLabel> labels = matrix_labels(s);
    FMatrix u = FMatrix::square(labels);
    return sigma(u, cut_pairs(s));
}

ExecReport qExec(const FMatrix& u, const Pairs& pairs, const ReductionMode& mode, int bound,
                 bool want_trace) {
    if (!u.is_square()) throw IndexMismatch("qExec needs a square matrix");
    Split s = split_positions(u.nrows(), pairs);

    ExecReport rep;
    rep.mode = mode;
    rep.bound = bound;

    FMatrix d = u.sub(s.passive, s.passive);
    if (s.delta.empty()) {
        rep.result = std::move(d);
        rep.n0 = 0;
        return rep;
    }
    FMatrix a = sigma_swap(u.sub(s.delta, s.delta));   // σ U_Δ^Δ
    FMatrix b = sigma_swap(u.sub(s.delta, s.passive)); // σ U_Δ^Γ
    FMatrix c = u.sub(s.passive, s.delta);             // U_Γ^Δ

    FMatrix acc = d;
    FMatrix power = FMatrix::identity(a.rows());
    int n = 0;
    for (;;) {
        if (want_trace) rep.trace.push_back(power);
        bool zero = true;
        for (const auto& [rc, v] : power.entries())
            if (!is_zero(v, mode)) {
                zero = false;
                break;
            }
        if (zero) {
            rep.n0 = n;
            break;
        }
        if (n >= bound) {
            rep.divergent = true;
            break;
        }
        acc = acc.plus(c.times(power).times(b));
        power = reduce(power.times(a), mode);
        ++n;
    }
    rep.result = reduce(acc, mode);
    return rep;
}

FMatrix exec(const RingHom& d, const FMatrix& u, const Pairs& pairs, const ReductionMode& mode,
             int bound) {
    ExecReport rep = qExec(u, pairs, mode, bound);
    if (rep.divergent) throw Divergent(bound);
    FMatrix out(rep.result.rows(), rep.result.cols());
    for (const auto& [rc, v] : rep.result.entries())
        out.set(rc.first, rc.second, reduce(hom_apply(d, v), mode));
    return out;
}

LExecReport qexec(const LMatrix& m, const Pairs& pairs, int bound, int joint_n0) {
    if (!m.is_square()) throw IndexMismatch("qexec needs a square matrix");
    Split s = split_positions(m.nrows(), pairs);

    LExecReport rep;
    rep.bound = bound;
    LMatrix d = m.sub(s.passive, s.passive);
    if (s.delta.empty()) {
        rep.result = std::move(d);
        return rep;
    }
    LMatrix a = sigma_swap(m.sub(s.delta, s.delta));
    LMatrix b = sigma_swap(m.sub(s.delta, s.passive));
    LMatrix c = m.sub(s.passive, s.delta);

    LMatrix acc = d;
    LMatrix power = LMatrix::identity(a.rows());
    int n = 0;
    for (;;) {
        if (power.all_zero()) {
            rep.n0 = n;
            break;
        }
        if (joint_n0 >= 0 && n >= joint_n0) {
            rep.n0 = n;
            break;
        }
        if (n >= bound) {
            rep.divergent = true;
            break;
        }
        acc = acc.plus(c.times(power).times(b));
        power = power.times(a);
        ++n;
    }
    rep.result = std::move(acc);
    return rep;
}

NilpotencyReport pair_nilpotency(const FMatrix& u, const LMatrix& m, const Pairs& pairs,
                                 int bound) {
    if (u.nrows() != m.nrows()) throw IndexMismatch("pair_nilpotency operand sizes");
    Split s = split_positions(u.nrows(), pairs);
    NilpotencyReport rep;
    rep.bound = bound;
    if (s.delta.empty()) return rep;

    ReductionMode base = mode_cplus();
    FMatrix au = sigma_swap(u.sub(s.delta, s.delta));
    LMatrix am = sigma_swap(m.sub(s.delta, s.delta));
    FMatrix pu = FMatrix::identity(au.rows());
    LMatrix pm = LMatrix::identity(am.rows());
    for (int n = 0;; ++n) {
        bool zero = true;
        for (const auto& [rc, v] : pu.entries()) {
            ReductionMode entry_mode = mode_from_lang(pm.at(rc.first, rc.second));
            if (!is_zero(v, entry_mode)) {
                zero = false;
                break;
            }
        }
        if (zero) {
            rep.index = n;
            return rep;
        }
        if (n >= bound) {
            rep.divergent = true;
            return rep;
        }
        pu = reduce(pu.times(au), base);
        pm = pm.times(am);
    }
}

NilpotencyReport slice_nilpotency(const FMatrix& u, const Pairs& pairs, int bound) {
    Split s = split_positions(u.nrows(), pairs);
    NilpotencyReport rep;
    rep.bound = bound;
    if (s.delta.empty()) return rep;

    ReductionMode mode = mode_cplustimes_all();
    FMatrix a = sigma_swap(u.sub(s.delta, s.delta));
    FMatrix power = FMatrix::identity(a.rows());
    for (int n = 0;; ++n) {
        if (power.all_zero()) {
            rep.index = n;
            return rep;
        }
        if (n >= bound) {
            rep.divergent = true;
            return rep;
        }
        power = reduce(power.times(a), mode);
    }
}

Pairs remap_pairs(const FMatrix& u, const Pairs& resolved, const Pairs& pairs) {
    Split s = split_positions(u.nrows(), resolved);
    std::vector<int> newpos(u.nrows(), -1);
    for (int i = 0; i < static_cast<int>(s.passive.size()); ++i) newpos[s.passive[i]] = i;
    Pairs out;
    for (const auto& [a, b] : pairs) {
        if (newpos[a] < 0 || newpos[b] < 0)
            throw IndexMismatch("pair position was already resolved");
        out.push_back({newpos[a], newpos[b]});
    }
    return out;
}

bool check_assoc(const FMatrix& u, const Pairs& inner, const Pairs& outer,
                 const ReductionMode& mode, int bound) {
    Pairs both = inner;
    both.insert(both.end(), outer.begin(), outer.end());
    ExecReport lhs = qExec(u, both, mode, bound);
    ExecReport in = qExec(u, inner, mode, bound);
    if (lhs.divergent || in.divergent) return false;
    ExecReport rhs = qExec(in.result, remap_pairs(u, inner, outer), mode, bound);
    if (rhs.divergent) return false;
    return equal_mod(lhs.result, rhs.result, mode);
}

namespace {

FMatrix hom_mapped(const RingHom& d, const FMatrix& m, const ReductionMode& mode) {
    FMatrix out(m.rows(), m.cols());
    for (const auto& [rc, v] : m.entries())
        out.set(rc.first, rc.second, reduce(hom_apply(d, v), mode));
    return out;
}

}  // namespace

bool check_assoc_hom_res(const RingHom& d1, const RingHom& d2, const FMatrix& u,
                         const Pairs& p1, const Pairs& p2, const ReductionMode& mode,
                         int bound) {
    Pairs both = p1;
    both.insert(both.end(), p2.begin(), p2.end());
    ExecReport lraw = qExec(u, both, mode, bound);
    if (lraw.divergent) return false;
    FMatrix lhs = hom_mapped(hom_union(d1, d2), lraw.result, mode);

    ExecReport inner = qExec(u, p2, mode, bound);
    if (inner.divergent) return false;
    FMatrix mid = hom_mapped(hom_res(d2), inner.result, mode);
    ExecReport outer = qExec(mid, remap_pairs(u, p2, p1), mode, bound);
    if (outer.divergent) return false;
    FMatrix rhs = hom_mapped(d1, outer.result, mode);
    return equal_mod(lhs, rhs, mode);
}

bool check_assoc_hom_ind(const RingHom& d1, const RingHom& d2, const FMatrix& u,
                         const Pairs& p1, const Pairs& p2, const ReductionMode& mode,
                         int bound) {
    Pairs both = p1;
    both.insert(both.end(), p2.begin(), p2.end());
    ExecReport lraw = qExec(u, both, mode, bound);
    if (lraw.divergent) return false;
    FMatrix lhs = hom_mapped(hom_union(d1, hom_ind(d1, d2)), lraw.result, mode);

    ExecReport inner = qExec(u, p2, mode, bound);
    if (inner.divergent) return false;
    FMatrix mid = hom_mapped(d2, inner.result, mode);
    ExecReport outer = qExec(mid, remap_pairs(u, p2, p1), mode, bound);
    if (outer.divergent) return false;
    FMatrix rhs = hom_mapped(d1, outer.result, mode);
    return equal_mod(lhs, rhs, mode);
}

}  // namespace goi
