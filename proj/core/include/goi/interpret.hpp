// The two proof interpretations: the scalar matrix (axioms as antidiagonal
// units, p/q contraction for multiplicatives and plus, weighted superposition
// for with) and its measure companion over formal languages (contraction by
// plain union, superposition with a/ā letter multipliers on the shared block
// only).  Both are indexed by the conclusion's matrix index: 2m cut
// occurrences then n conclusion occurrences.

#ifndef GOI_INTERPRET_HPP
#define GOI_INTERPRET_HPP

#include "goi/matrix.hpp"
#include "goi/proof.hpp"

namespace goi {

std::vector<MatLabel> matrix_labels(const Sequent& s);

FMatrix interpret(const ProofPtr& p);
LMatrix measure(const ProofPtr& p);

}  // namespace goi

#endif  // GOI_INTERPRET_HPP
