// Textual proof language.
//
//   ax ATOM | ax ~ATOM
//   cut(P1, P2 ; CUTFORMULA)
//   tensor(P1, P2 ; A, B)      par(P ; A, B)
//   plus1(P ; A, B)            plus2(P ; A, B)
//   with(P1, P2 ; A, B ; superpose = [i1, i2, ...])
//
// Formulas: atoms `X`, duals `~X`, connectives `*` `|` `&` `+` (one
// precedence level, left associative; use parentheses).  A principal formula
// may carry `@k` to pick the k-th (0-based) conclusion position when the
// leftmost occurrence of the formula is not the intended one.

#ifndef GOI_PROOF_TEXT_HPP
#define GOI_PROOF_TEXT_HPP

#include <stdexcept>
#include <string>

#include "goi/proof.hpp"

namespace goi {

struct ParseError : std::runtime_error {
    int line, col;
    std::string expected;
    ParseError(int line, int col, const std::string& expected)
        : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                             std::to_string(col) + ": expected " + expected),
          line(line),
          col(col),
          expected(expected) {}
};

Formula parse_formula(const std::string& text);
ProofPtr parse_proof(const std::string& text);
std::string print_proof(const ProofPtr& p);

}  // namespace goi

#endif  // GOI_PROOF_TEXT_HPP
