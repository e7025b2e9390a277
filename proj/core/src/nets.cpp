#include "goi/nets.hpp"

#include <algorithm>

namespace goi {

bool Linking::resolves_right(OccId o) const {
    auto it = resolution.find(o);
    if (it == resolution.end()) throw DanglingOccurrence("unresolved additive occurrence");
    return it->second;
}

namespace {

Link mk_link(OccId a, OccId b) { return a < b ? Link{a, b} : Link{b, a}; }

// conclusion cut index lookup keyed by the cut pair's first root
std::map<OccId, int> cut_index_by_root(const Sequent& s) {
    std::map<OccId, int> m;
    for (int i = 0; i < static_cast<int>(s.cuts.size()); ++i) m[s.cuts[i].first] = i;
    return m;
}

Linking relabel(const Linking& l, const Proof& node, int k) {
    const auto& omap = node.occ_map[k];
    const Sequent& prem = node.premises[k]->seq;
    Linking out;
    for (const auto& [a, b] : l.links) out.links.insert(mk_link(omap[a], omap[b]));
    for (const auto& [o, side] : l.resolution) out.resolution[omap[o]] = side;
    auto by_root = cut_index_by_root(node.seq);
    for (int ci : l.cuts) {
        OccId img = omap[prem.cuts[ci].first];
        auto it = by_root.find(img);
        if (it == by_root.end()) throw DanglingOccurrence("cut image is not a cut root");
        out.cuts.insert(it->second);
    }
    return out;
}

}  // namespace

LinkingSet translate(const ProofPtr& p) {
    LinkingSet out;
    out.sequent = p->seq;
    const Proof& n = *p;

    switch (n.rule) {
        case Rule::Ax: {
            Linking l;
            l.links.insert(mk_link(n.seq.conclusion[0], n.seq.conclusion[1]));
            out.linkings.push_back(std::move(l));
            return out;
        }
        case Rule::Par: {
            LinkingSet prem = translate(n.premises[0]);
            for (const auto& l : prem.linkings) out.linkings.push_back(relabel(l, n, 0));
            return out;
        }
        case Rule::Plus1:
        case Rule::Plus2: {
            LinkingSet prem = translate(n.premises[0]);
            OccId root = n.seq.conclusion.back();
            for (const auto& l : prem.linkings) {
                Linking r = relabel(l, n, 0);
                r.resolution[root] = n.rule == Rule::Plus2;
                out.linkings.push_back(std::move(r));
            }
            return out;
        }
        case Rule::Tensor:
        case Rule::Cut: {
            LinkingSet p1 = translate(n.premises[0]);
            LinkingSet p2 = translate(n.premises[1]);
            int new_cut = n.rule == Rule::Cut ? static_cast<int>(n.seq.cuts.size()) - 1 : -1;
            for (const auto& l1 : p1.linkings)
                for (const auto& l2 : p2.linkings) {
                    Linking a = relabel(l1, n, 0);
                    Linking b = relabel(l2, n, 1);
                    a.links.insert(b.links.begin(), b.links.end());
                    a.resolution.insert(b.resolution.begin(), b.resolution.end());
                    a.cuts.insert(b.cuts.begin(), b.cuts.end());
                    if (new_cut >= 0) a.cuts.insert(new_cut);
                    out.linkings.push_back(std::move(a));
                }
            return out;
        }
        case Rule::With: {
            OccId root = n.seq.conclusion.back();
            for (int k = 0; k < 2; ++k) {
                LinkingSet prem = translate(n.premises[k]);
                for (const auto& l : prem.linkings) {
                    Linking r = relabel(l, n, k);
                    r.resolution[root] = k == 1;
                    out.linkings.push_back(std::move(r));
                }
            }
            return out;
        }
    }
    throw ProofError("translate: unknown rule");
}

std::set<OccId> present_occurrences(const Sequent& s, const Linking& l) {
    std::set<OccId> out;
    std::vector<OccId> stack;
    for (OccId g : s.conclusion) stack.push_back(g);
    for (int ci : l.cuts) {
        stack.push_back(s.cuts.at(ci).first);
        stack.push_back(s.cuts.at(ci).second);
    }
    while (!stack.empty()) {
        OccId o = stack.back();
        stack.pop_back();
        out.insert(o);
        const OccNode& node = s.at(o);
        if (node.formula.is_atom()) continue;
        Conn c = node.formula.conn();
        if (c == Conn::With || c == Conn::Plus) {
            stack.push_back(l.resolves_right(o) ? node.right : node.left);
        } else {
            stack.push_back(node.left);
            stack.push_back(node.right);
        }
    }
    return out;
}

namespace {

// memoised per-linking data shared by the criteria checkers
struct NetContext {
    const LinkingSet& ls;
    std::vector<std::set<OccId>> present;                    // per linking
    std::vector<std::map<OccId, bool>> with_side;            // present with occ -> right?
    std::map<std::pair<int, int>, std::set<OccId>> toggles;  // pair of linkings

    explicit NetContext(const LinkingSet& ls) : ls(ls) {
        for (const auto& l : ls.linkings) {
            present.push_back(present_occurrences(ls.sequent, l));
            std::map<OccId, bool> side;
            for (OccId o : present.back()) {
                const OccNode& node = ls.sequent.at(o);
                if (node.formula.is_atom() || node.formula.conn() != Conn::With) continue;
                side[o] = l.resolution.count(o) ? l.resolution.at(o) : false;
            }
            with_side.push_back(std::move(side));
        }
    }

    std::set<OccId> toggled_sel(const std::vector<int>& sel) {
        std::map<OccId, std::pair<bool, bool>> seen;
        for (int li : sel)
            for (const auto& [o, right] : with_side.at(li))
                (right ? seen[o].second : seen[o].first) = true;
        std::set<OccId> out;
        for (const auto& [o, lr] : seen)
            if (lr.first && lr.second) out.insert(o);
        return out;
    }

    const std::set<OccId>& toggled_pair(int i, int j) {
        if (j < i) std::swap(i, j);
        auto it = toggles.find({i, j});
        if (it != toggles.end()) return it->second;
        return toggles.emplace(std::make_pair(i, j), toggled_sel({i, j})).first->second;
    }

    bool depends_on(const Link& l, OccId w, const std::vector<int>& sel) {
        for (int i : sel)
            for (int j : sel) {
                if (i == j) continue;
                if (!ls.linkings[i].links.count(l) || ls.linkings[j].links.count(l)) continue;
                const std::set<OccId>& t = toggled_pair(i, j);
                if (t.size() == 1 && *t.begin() == w) return true;
            }
        return false;
    }
};

NetGraph build_graph_ctx(NetContext& ctx, const std::vector<int>& selection);

}  // namespace

std::set<OccId> toggled(const LinkingSet& ls, const std::vector<int>& selection) {
    NetContext ctx(ls);
    return ctx.toggled_sel(selection);
}

bool depends(const LinkingSet& ls, const Link& l, OccId with_occ,
             const std::vector<int>& selection) {
    NetContext ctx(ls);
    return ctx.depends_on(l, with_occ, selection);
}

NetGraph build_graph(const LinkingSet& ls, const std::vector<int>& selection) {
    NetContext ctx(ls);
    return build_graph_ctx(ctx, selection);
}

namespace {

NetGraph build_graph_ctx(NetContext& ctx, const std::vector<int>& selection) {
    const LinkingSet& ls = ctx.ls;
    const Sequent& s = ls.sequent;
    NetGraph g;

    std::set<OccId> occ_union;
    std::set<int> cut_union;
    std::set<Link> link_union;
    for (int li : selection) {
        const Linking& l = ls.linkings.at(li);
        const auto& present = ctx.present.at(li);
        occ_union.insert(present.begin(), present.end());
        cut_union.insert(l.cuts.begin(), l.cuts.end());
        link_union.insert(l.links.begin(), l.links.end());
    }

    auto add_vertex = [&](const std::string& name) {
        g.vertex_names.push_back(name);
        return static_cast<int>(g.vertex_names.size()) - 1;
    };
    for (OccId o : occ_union) {
        int v = add_vertex(occ_str(s, o) + "#" + std::to_string(o));
        g.occ_vertex[o] = v;
        Conn c = s.at(o).formula.is_atom() ? Conn::Atom : s.at(o).formula.conn();
        if (c == Conn::Par || c == Conn::With) g.par_or_with.insert(v);
    }
    for (int ci : cut_union) g.cut_vertex[ci] = add_vertex("cut#" + std::to_string(ci));
    for (const Link& l : link_union)
        g.link_vertex[l] =
            add_vertex("link#" + std::to_string(l.first) + "-" + std::to_string(l.second));

    // tree edges; argument edges of par/with are switch edges owned by the parent
    for (OccId o : occ_union) {
        const OccNode& node = s.at(o);
        if (node.parent == kNoOcc || !occ_union.count(node.parent)) continue;
        int child = g.occ_vertex[o], parent = g.occ_vertex[node.parent];
        Conn pc = s.at(node.parent).formula.conn();
        int owner = (pc == Conn::Par || pc == Conn::With) ? parent : -1;
        g.edges.push_back(NetEdge{parent, child, EdgeKind::Tree, owner});
    }
    // cut edges
    for (const auto& [ci, v] : g.cut_vertex) {
        g.edges.push_back(NetEdge{v, g.occ_vertex.at(s.cuts[ci].first), EdgeKind::Cut, -1});
        g.edges.push_back(NetEdge{v, g.occ_vertex.at(s.cuts[ci].second), EdgeKind::Cut, -1});
    }
    // axiom links through their midpoint vertices
    for (const auto& [l, v] : g.link_vertex) {
        g.edges.push_back(NetEdge{g.occ_vertex.at(l.first), v, EdgeKind::Link, -1});
        g.edges.push_back(NetEdge{v, g.occ_vertex.at(l.second), EdgeKind::Link, -1});
    }
    // jump edges, switch edges of their with vertex
    for (OccId o : occ_union) {
        const OccNode& node = s.at(o);
        if (node.formula.is_atom() || node.formula.conn() != Conn::With) continue;
        for (const auto& [l, lv] : g.link_vertex)
            if (ctx.depends_on(l, o, selection))
                g.edges.push_back(NetEdge{g.occ_vertex[o], lv, EdgeKind::Jump, g.occ_vertex[o]});
    }
    return g;
}

}  // namespace

namespace {

struct CycleFinder {
    const NetGraph& g;
    const NetCaps& caps;
    std::vector<std::vector<int>> incident;  // vertex -> edge indices
    std::vector<Cycle> found;
    std::vector<bool> on_path;
    std::vector<int> path_vertices, path_edges;
    std::map<int, int> switch_used;
    long steps = 0;

    CycleFinder(const NetGraph& g, const NetCaps& caps) : g(g), caps(caps) {
        incident.resize(g.vertex_names.size());
        for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
            incident[g.edges[e].a].push_back(e);
            incident[g.edges[e].b].push_back(e);
        }
        on_path.assign(g.vertex_names.size(), false);
    }

    bool spend(int e, int dir) {  // dir unused; switch budget is per owner
        (void)dir;
        int owner = g.edges[e].switch_owner;
        if (owner < 0) return true;
        if (++switch_used[owner] > 1) {
            --switch_used[owner];
            return false;
        }
        return true;
    }
    void refund(int e) {
        int owner = g.edges[e].switch_owner;
        if (owner >= 0) --switch_used[owner];
    }

    void run() {
        for (int s = 0; s < static_cast<int>(g.vertex_names.size()); ++s) {
            path_vertices = {s};
            on_path[s] = true;
            dfs(s, s, -1);
            on_path[s] = false;
        }
    }

    void dfs(int start, int v, int last_edge) {
        if (++steps > caps.steps) throw SizeCapExceeded("cycle search steps");
        for (int e : incident[v]) {
            if (e == last_edge) continue;
            const NetEdge& ed = g.edges[e];
            int w = ed.a == v ? ed.b : ed.a;
            if (w < start) continue;  // canonical: least vertex is the start
            if (w == start) {
                if (path_vertices.size() < 2) continue;
                // fixed orientation: second vertex smaller than last
                if (path_vertices[1] > path_vertices.back()) continue;
                if (!spend(e, 0)) continue;
                Cycle c;
                c.vertices = path_vertices;
                c.edges = path_edges;
                c.edges.push_back(e);
                found.push_back(std::move(c));
                refund(e);
                if (static_cast<int>(found.size()) > caps.cycles)
                    throw SizeCapExceeded("cycle count");
                continue;
            }
            if (on_path[w]) continue;
            if (!spend(e, 0)) continue;
            on_path[w] = true;
            path_vertices.push_back(w);
            path_edges.push_back(e);
            dfs(start, w, e);
            path_edges.pop_back();
            path_vertices.pop_back();
            on_path[w] = false;
            refund(e);
        }
    }
};

}  // namespace

std::vector<Cycle> switching_cycles(const NetGraph& g, const NetCaps& caps) {
    CycleFinder f(g, caps);
    f.run();
    return f.found;
}

std::vector<Cycle> switching_cycles(const LinkingSet& ls, const std::vector<int>& selection,
                                    const NetCaps& caps) {
    return switching_cycles(build_graph(ls, selection), caps);
}

namespace {

// links must partition the present leaves into dual pairs
std::vector<std::string> validate_linking(const Sequent& s, const Linking& l, int index) {
    std::vector<std::string> bad;
    std::set<OccId> present;
    try {
        present = present_occurrences(s, l);
    } catch (const DanglingOccurrence&) {
        bad.push_back("linking " + std::to_string(index) +
                      ": an additive occurrence is unresolved");
        return bad;
    }
    std::set<OccId> leaves;
    for (OccId o : present)
        if (s.at(o).formula.is_atom()) leaves.insert(o);
    std::set<OccId> linked;
    for (const auto& [a, b] : l.links) {
        if (!leaves.count(a) || !leaves.count(b)) {
            bad.push_back("linking " + std::to_string(index) + ": link " + std::to_string(a) +
                          "-" + std::to_string(b) + " touches a non-present leaf");
            continue;
        }
        if (s.at(a).formula.negate() != s.at(b).formula)
            bad.push_back("linking " + std::to_string(index) + ": link " + occ_str(s, a) + "-" +
                          occ_str(s, b) + " is not dual");
        if (!linked.insert(a).second || !linked.insert(b).second)
            bad.push_back("linking " + std::to_string(index) + ": leaf linked twice");
    }
    for (OccId o : leaves)
        if (!linked.count(o))
            bad.push_back("linking " + std::to_string(index) + ": leaf " + occ_str(s, o) + "#" +
                          std::to_string(o) + " is unlinked");
    return bad;
}

std::vector<OccId> with_occurrences(const Sequent& s) {
    std::vector<OccId> out;
    for (OccId o = 0; o < s.arena.size(); ++o)
        if (!s.at(o).formula.is_atom() && s.at(o).formula.conn() == Conn::With)
            out.push_back(o);
    return out;
}

}  // namespace

CriterionResult check_P0(const LinkingSet& ls) {
    CriterionResult r;
    for (int ci = 0; ci < static_cast<int>(ls.sequent.cuts.size()); ++ci) {
        bool covered = false;
        for (const auto& l : ls.linkings)
            if (l.cuts.count(ci)) {
                covered = true;
                break;
            }
        if (!covered) {
            r.pass = false;
            r.witnesses.push_back("cut " + std::to_string(ci) + " (" +
                                  occ_str(ls.sequent, ls.sequent.cuts[ci].first) +
                                  ") has no literal occurrence in any linking");
        }
    }
    return r;
}

CriterionResult check_P1(const LinkingSet& ls, const NetCaps& caps) {
    CriterionResult r;
    std::vector<OccId> withs = with_occurrences(ls.sequent);
    if (withs.size() > 30 || (1u << withs.size()) > static_cast<unsigned>(caps.switchings)) {
        r.capped = true;
        r.witnesses.push_back("too many & occurrences for resolution enumeration");
        return r;
    }
    for (unsigned mask = 0; mask < (1u << withs.size()); ++mask) {
        int compatible = 0;
        int witness = -1;
        for (int li = 0; li < static_cast<int>(ls.linkings.size()); ++li) {
            const Linking& l = ls.linkings[li];
            bool ok = true;
            for (std::size_t wi = 0; wi < withs.size(); ++wi) {
                auto it = l.resolution.find(withs[wi]);
                if (it == l.resolution.end()) continue;
                bool right = (mask >> wi) & 1;
                if (it->second != right) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                ++compatible;
                witness = li;
            }
        }
        if (compatible != 1) {
            r.pass = false;
            std::string res;
            for (std::size_t wi = 0; wi < withs.size(); ++wi)
                res += occ_str(ls.sequent, withs[wi]) + "#" + std::to_string(withs[wi]) +
                       (((mask >> wi) & 1) ? ":right " : ":left ");
            r.witnesses.push_back("resolution {" + res + "} has " + std::to_string(compatible) +
                                  " linkings" +
                                  (compatible > 1 ? " (e.g. " + std::to_string(witness) + ")" : ""));
            if (r.witnesses.size() >= 8) break;
        }
    }
    return r;
}

namespace {

struct UnionFind {
    std::vector<int> up;
    explicit UnionFind(int n) : up(n) {
        for (int i = 0; i < n; ++i) up[i] = i;
    }
    int find(int x) { return up[x] == x ? x : up[x] = find(up[x]); }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        up[a] = b;
        return true;
    }
};

}  // namespace

CriterionResult check_P2(const LinkingSet& ls, const NetCaps& caps) {
    CriterionResult r;
    for (int li = 0; li < static_cast<int>(ls.linkings.size()); ++li) {
        NetGraph g = build_graph(ls, {li});
        // switchable vertices: par occurrences with both argument edges present
        std::map<int, std::vector<int>> choices;  // owner vertex -> its switch edges
        for (int e = 0; e < static_cast<int>(g.edges.size()); ++e)
            if (g.edges[e].switch_owner >= 0) choices[g.edges[e].switch_owner].push_back(e);
        std::vector<std::pair<int, std::vector<int>>> sw(choices.begin(), choices.end());
        long total = 1;
        for (auto& [v, es] : sw) {
            total *= static_cast<long>(es.size());
            if (total > caps.switchings) {
                r.capped = true;
                r.witnesses.push_back("linking " + std::to_string(li) +
                                      ": switching count exceeds cap");
                return r;
            }
        }
        int n = static_cast<int>(g.vertex_names.size());
        for (long pick = 0; pick < total; ++pick) {
            // decode one switching: keep exactly one switch edge per owner
            std::set<int> dropped;
            long acc = pick;
            for (auto& [v, es] : sw) {
                int keep = static_cast<int>(acc % es.size());
                acc /= static_cast<long>(es.size());
                for (int i = 0; i < static_cast<int>(es.size()); ++i)
                    if (i != keep) dropped.insert(es[i]);
            }
            UnionFind uf(n);
            int edges_used = 0;
            bool cyclic = false;
            for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
                if (dropped.count(e)) continue;
                ++edges_used;
                if (!uf.unite(g.edges[e].a, g.edges[e].b)) cyclic = true;
            }
            int components = 0;
            for (int v = 0; v < n; ++v)
                if (uf.find(v) == v) ++components;
            if (cyclic || components != 1) {
                r.pass = false;
                r.witnesses.push_back("linking " + std::to_string(li) + ", switching " +
                                      std::to_string(pick) +
                                      (cyclic ? " has a cycle" : " is disconnected"));
                if (r.witnesses.size() >= 8) return r;
                break;
            }
        }
    }
    return r;
}

CriterionResult check_P3(const LinkingSet& ls, const NetCaps& caps) {
    CriterionResult r;
    int n = static_cast<int>(ls.linkings.size());
    if (n > caps.linkings) {
        r.capped = true;
        r.witnesses.push_back("too many linkings for subset enumeration");
        return r;
    }
    NetContext ctx(ls);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) < 2) continue;
        std::vector<int> sel;
        for (int i = 0; i < n; ++i)
            if ((mask >> i) & 1) sel.push_back(i);
        std::set<OccId> tog = ctx.toggled_sel(sel);
        bool ok = false;
        NetGraph g = build_graph_ctx(ctx, sel);
        std::vector<Cycle> cycles;
        try {
            cycles = switching_cycles(g, caps);
        } catch (const SizeCapExceeded& e) {
            r.capped = true;
            r.witnesses.push_back(e.what());
            return r;
        }
        for (OccId w : tog) {
            int wv = g.occ_vertex.at(w);
            bool on_cycle = false;
            for (const auto& c : cycles)
                if (std::find(c.vertices.begin(), c.vertices.end(), wv) != c.vertices.end()) {
                    on_cycle = true;
                    break;
                }
            if (!on_cycle) {
                ok = true;
                break;
            }
        }
        if (!ok) {
            r.pass = false;
            std::string sels;
            for (int i : sel) sels += std::to_string(i) + " ";
            r.witnesses.push_back("selection {" + sels + "} toggles no & outside its " +
                                  std::to_string(cycles.size()) + " switching cycles");
            if (r.witnesses.size() >= 8) return r;
        }
    }
    return r;
}

NetReport check_net(const LinkingSet& ls, const NetCaps& caps) {
    NetReport rep;
    for (int li = 0; li < static_cast<int>(ls.linkings.size()); ++li) {
        auto bad = validate_linking(ls.sequent, ls.linkings[li], li);
        rep.structure.insert(rep.structure.end(), bad.begin(), bad.end());
    }
    rep.wellformed = rep.structure.empty();
    if (!rep.wellformed) return rep;
    rep.p0 = check_P0(ls);
    rep.p1 = check_P1(ls, caps);
    rep.p2 = check_P2(ls, caps);
    rep.p3 = check_P3(ls, caps);
    return rep;
}

}  // namespace goi
