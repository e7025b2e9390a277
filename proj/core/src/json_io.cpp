#include "goi/json_io.hpp"

#include "goi/proof_text.hpp"

namespace goi {

Json sequent_json(const Sequent& s) {
    Json j;
    j["cuts"] = Json::array();
    for (const auto& [a, b] : s.cuts) {
        j["cuts"].push_back(Json{{"first", a},
                                 {"second", b},
                                 {"first_formula", occ_str(s, a)},
                                 {"second_formula", occ_str(s, b)}});
    }
    j["conclusion"] = Json::array();
    for (OccId g : s.conclusion)
        j["conclusion"].push_back(Json{{"occ", g}, {"formula", occ_str(s, g)}});
    j["arena"] = Json::array();
    for (OccId o = 0; o < s.arena.size(); ++o) {
        const OccNode& n = s.arena[o];
        Json e{{"occ", o}, {"formula", n.formula.str()}};
        if (n.parent != kNoOcc) e["parent"] = n.parent;
        if (n.left != kNoOcc) {
            e["left"] = n.left;
            e["right"] = n.right;
        }
        if (n.weight != 0) e["weight"] = weight_name(n.weight, false);
        j["arena"].push_back(std::move(e));
    }
    return j;
}

Json proof_json(const ProofPtr& p) {
    Json j;
    j["rule"] = rule_name(p->rule);
    j["sequent"] = p->seq.str();
    j["conclusion"] = sequent_json(p->seq);
    if (p->rule != Rule::Ax) {
        if (p->principal1 >= 0) j["principal1"] = p->principal1;
        if (p->principal2 >= 0) j["principal2"] = p->principal2;
        if (!p->superpose.empty()) {
            Json sup = Json::array();
            for (auto [a, b] : p->superpose) sup.push_back(Json::array({a, b}));
            j["superpose"] = std::move(sup);
        }
        j["premises"] = Json::array();
        for (const auto& q : p->premises) j["premises"].push_back(proof_json(q));
    }
    return j;
}

namespace {

template <class E>
Json matrix_json(const Mat<E>& m) {
    Json j;
    j["index"] = Json::array();
    for (const auto& l : m.rows()) {
        Json e{{"formula", l.text}};
        if (l.occ != kNoOcc) e["occ"] = l.occ;
        e["part"] = l.in_delta() ? "delta" : "gamma";
        if (l.in_delta()) e["cut"] = l.cut_index;
        j["index"].push_back(std::move(e));
    }
    j["entries"] = Json::array();
    for (const auto& [rc, v] : m.entries())
        j["entries"].push_back(
            Json{{"row", rc.first}, {"col", rc.second}, {"value", EntryOps<E>::str(v)}});
    return j;
}

}  // namespace

Json fmatrix_json(const FMatrix& m) { return matrix_json(m); }
Json lmatrix_json(const LMatrix& m) { return matrix_json(m); }

namespace {

std::string mode_str(const ReductionMode& m) {
    if (m.is_raw()) return "raw";
    if (m.eliminate_complement && m.idempotent_all) return "cplustimes";
    if (m.eliminate_complement && m.idempotent.empty() && m.annihilate.empty()) return "cplus";
    return "custom";
}

}  // namespace

Json exec_report_json(const ExecReport& r) {
    Json j;
    j["mode"] = mode_str(r.mode);
    if (r.divergent) {
        j["divergent"] = true;
        j["bound"] = r.bound;
    } else {
        j["n0"] = r.n0;
    }
    j["matrix"] = fmatrix_json(r.result);
    if (!r.trace.empty()) {
        j["trace"] = Json::array();
        for (const auto& m : r.trace) j["trace"].push_back(fmatrix_json(m));
    }
    return j;
}

Json nilpotency_json(const NilpotencyReport& r) {
    Json j;
    if (r.divergent) {
        j["divergent"] = true;
        j["bound"] = r.bound;
    } else {
        j["n"] = r.index;
    }
    return j;
}

namespace {

Json criterion_json(const CriterionResult& c) {
    Json j;
    j["pass"] = c.pass;
    if (c.capped) j["capped"] = true;
    if (!c.witnesses.empty()) j["witnesses"] = c.witnesses;
    return j;
}

}  // namespace

Json net_report_json(const NetReport& r) {
    Json j;
    j["pass"] = r.pass();
    j["wellformed"] = r.wellformed;
    if (!r.structure.empty()) j["structure"] = r.structure;
    j["P0"] = criterion_json(r.p0);
    j["P1"] = criterion_json(r.p1);
    j["P2"] = criterion_json(r.p2);
    j["P3"] = criterion_json(r.p3);
    return j;
}

Json linking_set_json(const LinkingSet& ls) {
    Json j;
    Json seq;
    seq["cuts"] = Json::array();
    for (const auto& [a, b] : ls.sequent.cuts)
        seq["cuts"].push_back(Json::array(
            {occ_str(ls.sequent, a), occ_str(ls.sequent, b)}));
    seq["conclusion"] = Json::array();
    for (OccId g : ls.sequent.conclusion) seq["conclusion"].push_back(occ_str(ls.sequent, g));
    j["sequent"] = std::move(seq);
    j["linkings"] = Json::array();
    for (const auto& l : ls.linkings) {
        Json e;
        e["links"] = Json::array();
        for (const auto& [a, b] : l.links) e["links"].push_back(Json::array({a, b}));
        Json res = Json::object();
        for (const auto& [o, side] : l.resolution)
            res[std::to_string(o)] = side ? "right" : "left";
        e["resolution"] = std::move(res);
        e["cuts"] = Json::array();
        for (int c : l.cuts) e["cuts"].push_back(c);
        j["linkings"].push_back(std::move(e));
    }
    return j;
}

LinkingSet linking_set_from_json(const Json& j) {
    LinkingSet ls;
    for (const auto& pair : j.at("sequent").at("cuts")) {
        Formula a = parse_formula(pair.at(0).get<std::string>());
        Formula b = parse_formula(pair.at(1).get<std::string>());
        OccId x = ls.sequent.add_tree(a);
        OccId y = ls.sequent.add_tree(b);
        ls.sequent.cuts.push_back({x, y});
    }
    for (const auto& f : j.at("sequent").at("conclusion"))
        ls.sequent.conclusion.push_back(
            ls.sequent.add_tree(parse_formula(f.get<std::string>())));
    for (const auto& e : j.at("linkings")) {
        Linking l;
        for (const auto& lk : e.at("links"))
            l.links.insert({lk.at(0).get<OccId>(), lk.at(1).get<OccId>()});
        if (e.contains("resolution"))
            for (const auto& [key, side] : e.at("resolution").items())
                l.resolution[static_cast<OccId>(std::stoul(key))] =
                    side.get<std::string>() == "right";
        if (e.contains("cuts"))
            for (const auto& c : e.at("cuts")) l.cuts.insert(c.get<int>());
        ls.linkings.push_back(std::move(l));
    }
    return ls;
}

Json eq_system_json(const EqSystem& s) {
    Json j;
    j["equations"] = Json::array();
    for (const auto& eq : s.equations) j["equations"].push_back(eq.str());
    Json dl = Json::array(), gl = Json::array();
    for (const auto& l : s.delta_literals) dl.push_back(l.str());
    for (const auto& l : s.gamma_literals) gl.push_back(l.str());
    j["delta_literals"] = std::move(dl);
    j["gamma_literals"] = std::move(gl);
    return j;
}

Json hom_json(const RingHom& d) {
    Json j = Json::object();
    for (const auto& [l, v] : d.subst) j[l.str()] = v.str();
    return j;
}

Json solution_json(const Solution& s) {
    Json j;
    j["substitution"] = hom_json(s.hom);
    Json fr = Json::array();
    for (const auto& l : s.free_lits) fr.push_back(l.str());
    j["free"] = std::move(fr);
    return j;
}

Json trace_json(const ReductionTrace& t) {
    Json j;
    j["start"] = print_proof(t.start);
    j["steps"] = Json::array();
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
        Json e;
        e["kind"] = step_kind_name(t.steps[i].kind);
        e["hom"] = hom_json(t.steps[i].emitted_hom);
        e["proof"] = print_proof(t.proofs[i]);
        e["sequent"] = t.proofs[i]->seq.str();
        j["steps"].push_back(std::move(e));
    }
    j["composite_hom"] = hom_json(t.composite_hom);
    j["normal_form"] = print_proof(t.result());
    return j;
}

Json invariance_json(const InvarianceReport& r) {
    Json j;
    j["pass"] = r.pass;
    if (!r.failures.empty()) j["failures"] = r.failures;
    return j;
}

}  // namespace goi
