#include "goi/matrix.hpp"

#include <algorithm>

namespace goi {

namespace {

// position mapping that drops `removed` and renames `kept` to the merged slot
std::vector<int> drop_map(int n, int removed) {
    std::vector<int> map(n, -1);
    int k = 0;
    for (int i = 0; i < n; ++i) {
        if (i == removed) continue;
        map[i] = k++;
    }
    return map;
}

}  // namespace

FMatrix contract_pq(const FMatrix& m, int pos1, int pos2, const MatLabel& merged) {
    if (!m.is_square()) throw IndexMismatch("contract_pq needs a square matrix");
    int n = m.nrows();
    if (pos1 < 0 || pos2 < 0 || pos1 >= n || pos2 >= n || pos1 == pos2)
        throw IndexMissing("contract_pq positions");
    std::vector<int> map = drop_map(n, pos2);
    std::vector<MatLabel> labels;
    for (int i = 0; i < n; ++i)
        if (i != pos2) labels.push_back(i == pos1 ? merged : m.rows()[i]);
    FMatrix r = FMatrix::square(labels);

    AlgElem p = AlgElem::path(PathWord::p());
    AlgElem q = AlgElem::path(PathWord::q());
    AlgElem ps = AlgElem::path(PathWord::p_star());
    AlgElem qs = AlgElem::path(PathWord::q_star());

    for (const auto& [rc, v] : m.entries()) {
        auto [i, j] = rc;
        AlgElem w = v;
        int ri = i, cj = j;
        if (i == pos1) w = p.times(w);
        if (i == pos2) {
            w = q.times(w);
            ri = pos1;
        }
        if (j == pos1) w = w.times(ps);
        if (j == pos2) {
            w = w.times(qs);
            cj = pos1;
        }
        r.add(map[ri], map[cj], w);
    }
    return r;
}

FMatrix contract_single(const FMatrix& m, int pos, bool use_p, const MatLabel& merged) {
    if (!m.is_square()) throw IndexMismatch("contract_single needs a square matrix");
    std::vector<MatLabel> labels = m.rows();
    labels[pos] = merged;
    FMatrix r = FMatrix::square(labels);
    AlgElem gen = AlgElem::path(use_p ? PathWord::p() : PathWord::q());
    AlgElem gen_star = AlgElem::path(use_p ? PathWord::p_star() : PathWord::q_star());
    for (const auto& [rc, v] : m.entries()) {
        auto [i, j] = rc;
        AlgElem w = v;
        if (i == pos) w = gen.times(w);
        if (j == pos) w = w.times(gen_star);
        r.add(i, j, w);
    }
    return r;
}

LMatrix contract_union(const LMatrix& m, int pos1, int pos2, const MatLabel& merged) {
    if (!m.is_square()) throw IndexMismatch("contract_union needs a square matrix");
    int n = m.nrows();
    std::vector<int> map = drop_map(n, pos2);
    std::vector<MatLabel> labels;
    for (int i = 0; i < n; ++i)
        if (i != pos2) labels.push_back(i == pos1 ? merged : m.rows()[i]);
    LMatrix r = LMatrix::square(labels);
    for (const auto& [rc, v] : m.entries()) {
        auto [i, j] = rc;
        int ri = i == pos2 ? pos1 : i;
        int cj = j == pos2 ? pos1 : j;
        r.add(map[ri], map[cj], v);
    }
    return r;
}

LMatrix contract_union_single(const LMatrix& m, int pos, const MatLabel& merged) {
    std::vector<MatLabel> labels = m.rows();
    labels[pos] = merged;
    LMatrix r = LMatrix::square(labels);
    for (const auto& [rc, v] : m.entries()) r.add(rc.first, rc.second, v);
    return r;
}

FMatrix superpose_S(const FMatrix& f, const FMatrix& g, int pos1, int pos2, WeightId weight,
                    const MatLabel& merged) {
    if (!f.is_square() || !g.is_square() || f.nrows() != g.nrows())
        throw IndexMismatch("superpose_S operands");
    if (pos1 != pos2)
        throw IndexMismatch("superpose_S expects aligned principal positions");
    int pos = pos1;
    std::vector<MatLabel> labels = f.rows();
    labels[pos] = merged;
    FMatrix r = FMatrix::square(labels);

    struct Side {
        const FMatrix& m;
        Poly s;
        PathWord gen;
    };
    Poly a = Poly::lit(Literal{weight, false});
    Poly abar = Poly::lit(Literal{weight, true});
    Side sides[2] = {{f, a, PathWord::p()}, {g, abar, PathWord::q()}};
    for (const auto& side : sides) {
        AlgElem gen = AlgElem::path(side.gen);
        AlgElem gen_star = AlgElem::path(side.gen.star());
        for (const auto& [rc, v] : side.m.entries()) {
            auto [i, j] = rc;
            AlgElem w = v.scaled(side.s);
            if (i == pos) w = gen.times(w);
            if (j == pos) w = w.times(gen_star);
            r.add(i, j, w);
        }
    }
    return r;
}

LMatrix superpose_s(const LMatrix& h, const LMatrix& l, int pos1, int pos2, WeightId weight,
                    const MatLabel& merged) {
    if (!h.is_square() || !l.is_square() || h.nrows() != l.nrows())
        throw IndexMismatch("superpose_s operands");
    if (pos1 != pos2)
        throw IndexMismatch("superpose_s expects aligned principal positions");
    int pos = pos1;
    std::vector<MatLabel> labels = h.rows();
    labels[pos] = merged;
    LMatrix r = LMatrix::square(labels);

    struct Side {
        const LMatrix& m;
        Lang s;
    };
    Side sides[2] = {{h, Lang::letter(Literal{weight, false})},
                     {l, Lang::letter(Literal{weight, true})}};
    for (const auto& side : sides) {
        for (const auto& [rc, v] : side.m.entries()) {
            auto [i, j] = rc;
            // flows through the with index do not record its own toggling
            Lang w = (i == pos || j == pos) ? v : side.s.concat(v);
            r.add(i, j, w);
        }
    }
    return r;
}

bool embeds_mod_zero(const FMatrix& m, const FMatrix& n) {
    if (!m.is_square() || !n.is_square() || m.nrows() < n.nrows()) return false;
    std::vector<int> match(n.nrows(), -1);
    std::vector<bool> used(m.nrows(), false);
    for (int i = 0; i < n.nrows(); ++i) {
        for (int j = 0; j < m.nrows(); ++j) {
            if (!used[j] && m.rows()[j].text == n.rows()[i].text) {
                match[i] = j;
                used[j] = true;
                break;
            }
        }
        if (match[i] < 0) return false;
    }
    for (int i = 0; i < n.nrows(); ++i)
        for (int j = 0; j < n.nrows(); ++j)
            if (!(m.at(match[i], match[j]) == n.at(i, j))) return false;
    for (const auto& [rc, v] : m.entries()) {
        bool row_in = std::find(match.begin(), match.end(), rc.first) != match.end();
        bool col_in = std::find(match.begin(), match.end(), rc.second) != match.end();
        if (!row_in || !col_in) return false;  // stray nonzero outside the embedded block
    }
    return true;
}

FMatrix reduce(const FMatrix& m, const ReductionMode& mode) {
    FMatrix r(m.rows(), m.cols());
    for (const auto& [rc, v] : m.entries()) r.set(rc.first, rc.second, reduce(v, mode));
    return r;
}

bool equal_mod(const FMatrix& a, const FMatrix& b, const ReductionMode& mode) {
    if (a.nrows() != b.nrows() || a.ncols() != b.ncols()) return false;
    for (int i = 0; i < a.nrows(); ++i)
        for (int j = 0; j < a.ncols(); ++j)
            if (!(reduce(a.at(i, j), mode) == reduce(b.at(i, j), mode))) return false;
    return true;
}

}  // namespace goi
