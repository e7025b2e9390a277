#include "goi/interpret.hpp"

#include <map>

namespace goi {

std::vector<MatLabel> matrix_labels(const Sequent& s) {
    std::vector<MatLabel> out;
    for (int ci = 0; ci < static_cast<int>(s.cuts.size()); ++ci) {
        out.push_back(MatLabel{occ_str(s, s.cuts[ci].first), s.cuts[ci].first, ci, false});
        out.push_back(MatLabel{occ_str(s, s.cuts[ci].second), s.cuts[ci].second, ci, true});
    }
    for (OccId g : s.conclusion) out.push_back(MatLabel{occ_str(s, g), g, -1, false});
    return out;
}

namespace {

// Where a premise index position lands in the conclusion index.
struct Reloc {
    int pos = -1;    // conclusion index position
    int side = 0;    // 0: plain; 1: left child of a fresh principal; 2: right child
};

std::vector<Reloc> relocations(const Proof& n, int k) {
    const Sequent& cs = n.seq;
    std::map<OccId, int> cpos;
    {
        auto idx = cs.matrix_index();
        for (int i = 0; i < static_cast<int>(idx.size()); ++i) cpos[idx[i]] = i;
    }
    const Sequent& ps = n.premises[k]->seq;
    auto pidx = ps.matrix_index();
    std::vector<Reloc> out(pidx.size());
    for (int t = 0; t < static_cast<int>(pidx.size()); ++t) {
        OccId img = n.occ_map[k][pidx[t]];
        auto it = cpos.find(img);
        if (it != cpos.end()) {
            out[t] = Reloc{it->second, 0};
            continue;
        }
        OccId parent = cs.at(img).parent;
        auto pit = parent == kNoOcc ? cpos.end() : cpos.find(parent);
        if (pit == cpos.end())
            throw DanglingOccurrence("premise index occurrence lands below a non-index node");
        out[t] = Reloc{pit->second, cs.at(parent).left == img ? 1 : 2};
    }
    return out;
}

WeightId with_weight(const Proof& n) {
    WeightId w = n.seq.at(n.seq.conclusion.back()).weight;
    if (w == 0) throw ProofError("with rule lacks an eigenweight; assign eigenweights first");
    return w;
}

}  // namespace

FMatrix interpret(const ProofPtr& p) {
    const Proof& n = *p;
    std::vector<MatLabel> labels = matrix_labels(n.seq);
    FMatrix out = FMatrix::square(labels);

    if (n.rule == Rule::Ax) {
        out.set(0, 1, AlgElem::one());
        out.set(1, 0, AlgElem::one());
        return out;
    }

    // per-premise entry decoration
    for (std::size_t k = 0; k < n.premises.size(); ++k) {
        FMatrix prem = interpret(n.premises[k]);
        std::vector<Reloc> rel = relocations(n, static_cast<int>(k));

        Poly scale = Poly::one();
        if (n.rule == Rule::With) {
            WeightId w = with_weight(n);
            scale = Poly::lit(Literal{w, k == 1});
        }
        for (const auto& [rc, v] : prem.entries()) {
            const Reloc& ri = rel[rc.first];
            const Reloc& cj = rel[rc.second];
            AlgElem w = n.rule == Rule::With ? v.scaled(scale) : v;
            if (ri.side != 0)
                w = AlgElem::path(ri.side == 1 ? PathWord::p() : PathWord::q()).times(w);
            if (cj.side != 0)
                w = w.times(AlgElem::path(cj.side == 1 ? PathWord::p_star() : PathWord::q_star()));
            out.add(ri.pos, cj.pos, w);
        }
    }
    return out;
}

LMatrix measure(const ProofPtr& p) {
    const Proof& n = *p;
    std::vector<MatLabel> labels = matrix_labels(n.seq);
    LMatrix out = LMatrix::square(labels);

    if (n.rule == Rule::Ax) {
        out.set(0, 1, Lang::epsilon());
        out.set(1, 0, Lang::epsilon());
        return out;
    }

    for (std::size_t k = 0; k < n.premises.size(); ++k) {
        LMatrix prem = measure(n.premises[k]);
        std::vector<Reloc> rel = relocations(n, static_cast<int>(k));

        Lang letter;
        if (n.rule == Rule::With) {
            WeightId w = with_weight(n);
            letter = Lang::letter(Literal{w, k == 1});
        }
        for (const auto& [rc, v] : prem.entries()) {
            const Reloc& ri = rel[rc.first];
            const Reloc& cj = rel[rc.second];
            Lang w = v;
            // the with row and column do not memorise their own toggling
            if (n.rule == Rule::With && ri.side == 0 && cj.side == 0) w = letter.concat(v);
            out.add(ri.pos, cj.pos, w);
        }
    }
    return out;
}

}  // namespace goi
