// Linkings and linking sets over a cut sequent, the inductive translation of
// proofs into them, and the correctness criteria:
//   P0  every cut is covered by some linking,
//   P1  exactly one linking per &-resolution,
//   P2  every switching of every single linking is acyclic and connected,
//   P3  every set of >= 2 linkings toggles a & lying on no switching cycle.
// The checker works by explicit graph construction and exhaustive switching
// and subset enumeration, guarded by configurable caps.

#ifndef GOI_NETS_HPP
#define GOI_NETS_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "goi/proof.hpp"

namespace goi {

struct SizeCapExceeded : std::runtime_error {
    explicit SizeCapExceeded(const std::string& w)
        : std::runtime_error("size cap exceeded: " + w) {}
};

using Link = std::pair<OccId, OccId>;  // normalized first < second

struct Linking {
    std::set<Link> links;
    std::map<OccId, bool> resolution;  // additive occurrence -> right side?
    std::set<int> cuts;                // retained cut indices

    bool resolves_right(OccId o) const;
};

struct LinkingSet {
    Sequent sequent;
    std::vector<Linking> linkings;
};

LinkingSet translate(const ProofPtr& p);

// Occurrences of the cut-additive resolution of one linking (root-down).
std::set<OccId> present_occurrences(const Sequent& s, const Linking& l);

// & occurrences both of whose argument subtrees appear across the selection.
std::set<OccId> toggled(const LinkingSet& ls, const std::vector<int>& selection);

// l lies in some λ \ λ' of the selection with exactly {w} toggled by {λ, λ'}.
bool depends(const LinkingSet& ls, const Link& l, OccId with_occ,
             const std::vector<int>& selection);

enum class EdgeKind { Tree, Link, Cut, Jump };

struct NetEdge {
    int a, b;
    EdgeKind kind;
    int switch_owner = -1;  // vertex whose switch budget this edge spends
};

struct NetGraph {
    // vertex ids: occurrence vertices first, then cut vertices, then link vertices
    std::vector<std::string> vertex_names;
    std::map<OccId, int> occ_vertex;
    std::map<int, int> cut_vertex;    // cut index -> vertex
    std::map<Link, int> link_vertex;  // axiom link -> vertex
    std::vector<NetEdge> edges;
    std::set<int> par_or_with;  // vertices owning switch edges
};

NetGraph build_graph(const LinkingSet& ls, const std::vector<int>& selection);

struct Cycle {
    std::vector<int> vertices;  // canonical: least vertex first, fixed orientation
    std::vector<int> edges;     // indices into NetGraph::edges
};

struct NetCaps {
    int switchings = 1 << 16;
    int linkings = 12;   // P3 powerset cap
    int cycles = 4096;
    long steps = 2'000'000;
};

std::vector<Cycle> switching_cycles(const NetGraph& g, const NetCaps& caps = {});
std::vector<Cycle> switching_cycles(const LinkingSet& ls, const std::vector<int>& selection,
                                    const NetCaps& caps = {});

struct CriterionResult {
    bool pass = true;
    bool capped = false;
    std::vector<std::string> witnesses;
};

struct NetReport {
    bool wellformed = true;
    std::vector<std::string> structure;  // partition/duality/resolution violations
    CriterionResult p0, p1, p2, p3;
    bool pass() const {
        return wellformed && p0.pass && p1.pass && p2.pass && p3.pass && !p0.capped &&
               !p1.capped && !p2.capped && !p3.capped;
    }
};

CriterionResult check_P0(const LinkingSet& ls);
CriterionResult check_P1(const LinkingSet& ls, const NetCaps& caps = {});
CriterionResult check_P2(const LinkingSet& ls, const NetCaps& caps = {});
CriterionResult check_P3(const LinkingSet& ls, const NetCaps& caps = {});
NetReport check_net(const LinkingSet& ls, const NetCaps& caps = {});

}  // namespace goi

#endif  // GOI_NETS_HPP
