// JSON renderings of every report the tool emits, plus linking-set import so
// hand-mutated nets can be checked directly.  Keys are emitted in a fixed
// order and all payloads use the canonical text renderings, so identical
// invocations are byte-identical.

#ifndef GOI_JSON_IO_HPP
#define GOI_JSON_IO_HPP

#include <nlohmann/json.hpp>

#include "goi/equations.hpp"
#include "goi/nets.hpp"
#include "goi/rewrite.hpp"

namespace goi {

using Json = nlohmann::ordered_json;

Json sequent_json(const Sequent& s);
Json proof_json(const ProofPtr& p);
Json fmatrix_json(const FMatrix& m);
Json lmatrix_json(const LMatrix& m);
Json exec_report_json(const ExecReport& r);
Json nilpotency_json(const NilpotencyReport& r);
Json net_report_json(const NetReport& r);
Json linking_set_json(const LinkingSet& ls);
LinkingSet linking_set_from_json(const Json& j);
Json eq_system_json(const EqSystem& s);
Json hom_json(const RingHom& d);
Json solution_json(const Solution& s);
Json trace_json(const ReductionTrace& t);
Json invariance_json(const InvarianceReport& r);

}  // namespace goi

#endif  // GOI_JSON_IO_HPP
