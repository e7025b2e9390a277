// Scalars and operators for the MALL interaction workbench.
//
// Three layers live here:
//   * Poly      -- sparse multivariate polynomials over GF(2) whose
//                  indeterminates are eigenweight literals (a, ā, b, ...).
//   * PathWord  -- normal-form words over the partial isometries p, q and
//                  their adjoints, subject to p*p = q*q = 1, p*q = q*p = 0.
//   * AlgElem   -- GF(2)-combinations of (monomial ⊗ path) basis terms,
//                  i.e. elements of the scalar extension of the *-ring
//                  generated by p and q to the polynomial ring.
//
// Quotients of the scalar ring (complement elimination a+ā=1, idempotency
// a²=a, pair annihilation) are expressed as ReductionMode values; reduce()
// computes canonical representatives.

#ifndef GOI_ALGEBRA_HPP
#define GOI_ALGEBRA_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace goi {

using WeightId = std::uint32_t;

// One eigenweight literal: the weight itself (a) or its formal bar (ā).
// a and ā are independent indeterminates of the raw ring.
struct Literal {
    WeightId weight = 0;
    bool bar = false;

    auto operator<=>(const Literal&) const = default;

    Literal opposite() const { return Literal{weight, !bar}; }
    std::string str() const;
};

using Exponent = std::uint32_t;

// Product of literal powers; the empty product is 1.
class Monomial {
public:
    Monomial() = default;
    static Monomial one() { return Monomial(); }
    static Monomial lit(Literal l, Exponent e = 1);

    bool is_one() const { return factors_.empty(); }
    Exponent exponent_of(Literal l) const;
    bool contains(Literal l) const { return exponent_of(l) > 0; }
    const std::vector<std::pair<Literal, Exponent>>& factors() const { return factors_; }
    std::uint64_t degree() const;

    Monomial times(const Monomial& o) const;
    // Substitute every literal in `drop` away (exponent -> 0).
    Monomial without(const std::set<Literal>& drop) const;

    auto operator<=>(const Monomial&) const = default;
    std::string str() const;

private:
    // sorted by literal, exponents >= 1
    std::vector<std::pair<Literal, Exponent>> factors_;
};

// GF(2) polynomial: a finite set of monomials (presence = coefficient 1).
class Poly {
public:
    Poly() = default;
    static Poly zero() { return Poly(); }
    static Poly one();
    static Poly lit(Literal l);
    static Poly mono(Monomial m);

    bool is_zero() const { return monos_.empty(); }
    bool is_one() const;
    const std::vector<Monomial>& monomials() const { return monos_; }

    Poly plus(const Poly& o) const;
    Poly times(const Poly& o) const;

    std::set<Literal> literals() const;

    auto operator<=>(const Poly&) const = default;
    std::string str() const;

private:
    std::vector<Monomial> monos_;  // sorted, unique
    void insert_xor(const Monomial& m);
    friend Poly poly_collect(std::vector<Monomial> ms);
};

Poly poly_add(const Poly& x, const Poly& y);
Poly poly_mul(const Poly& x, const Poly& y);

// Words of the *-ring generated by p, q in normal form: a block of plain
// generators followed by a block of starred ones.  The directed-graph
// discipline (no plain generator after a starred one) makes these words,
// together with 1, a basis; products reduce at the single boundary.
class PathWord {
public:
    PathWord() = default;  // the unit 1
    static PathWord one() { return PathWord(); }
    static PathWord zero();
    static PathWord p();
    static PathWord q();
    static PathWord p_star();
    static PathWord q_star();
    // Parse e.g. "pq*", "1", "0", "qqp*q*".
    static PathWord parse(const std::string& s);

    bool is_zero() const { return zero_; }
    bool is_one() const { return !zero_ && ups_.empty() && downs_.empty(); }
    const std::string& ups() const { return ups_; }
    const std::string& downs() const { return downs_; }

    PathWord times(const PathWord& o) const;
    PathWord star() const;

    auto operator<=>(const PathWord&) const = default;
    std::string str() const;

private:
    bool zero_ = false;
    std::string ups_;    // over {'p','q'}
    std::string downs_;  // over {'p','q'}; rendered starred, in this order
};

PathWord path_mul(const PathWord& x, const PathWord& y);
PathWord path_star(const PathWord& x);

// A GF(2) combination of basis terms monomial ⊗ path (paths never Zero).
class AlgElem {
public:
    AlgElem() = default;  // 0
    static AlgElem zero() { return AlgElem(); }
    static AlgElem one();
    static AlgElem term(Monomial m, PathWord s);
    static AlgElem path(PathWord s) { return term(Monomial::one(), std::move(s)); }
    static AlgElem scalar(const Poly& v);

    bool is_raw_zero() const { return terms_.empty(); }
    const std::vector<std::pair<Monomial, PathWord>>& terms() const { return terms_; }

    AlgElem plus(const AlgElem& o) const;
    AlgElem times(const AlgElem& o) const;
    AlgElem star() const;
    AlgElem scaled(const Poly& v) const;

    // Coefficient polynomial of each distinct path, paths sorted.
    std::vector<std::pair<PathWord, Poly>> by_path() const;
    std::set<Literal> literals() const;

    auto operator<=>(const AlgElem&) const = default;
    std::string str() const;

private:
    std::vector<std::pair<Monomial, PathWord>> terms_;  // sorted, unique
    void insert_xor(const Monomial& m, const PathWord& s);
    friend AlgElem alg_collect(std::vector<std::pair<Monomial, PathWord>> ts);
};

AlgElem alg_add(const AlgElem& x, const AlgElem& y);
AlgElem alg_mul(const AlgElem& x, const AlgElem& y);
AlgElem alg_star(const AlgElem& x);
AlgElem scalar_mul(const Poly& v, const AlgElem& x);

// Monomial components in the sense of the (monomial ⊗ path) basis.
std::vector<std::pair<Monomial, PathWord>> monomial_components(const AlgElem& x);
// Collapse a basis term to its scalar monomial (forgets the path).
Monomial collapse_w(const std::pair<Monomial, PathWord>& t);

// Ideal quotient of the scalar ring, as a confluent rewrite triple:
//   eliminate_complement:  ā := 1 + a for every weight,
//   idempotent:            exponent of a listed literal capped at 1,
//   annihilate:            monomials containing both members of a pair die.
struct ReductionMode {
    bool eliminate_complement = false;
    bool idempotent_all = false;  // cap every literal's exponent at 1
    std::set<Literal> idempotent;
    std::set<std::pair<Literal, Literal>> annihilate;

    bool is_raw() const {
        return !eliminate_complement && !idempotent_all && idempotent.empty() &&
               annihilate.empty();
    }
    bool caps(Literal l) const { return idempotent_all || idempotent.count(l) > 0; }
    auto operator<=>(const ReductionMode&) const = default;
};

// Raw ring (no quotient).
ReductionMode mode_raw();
// a + ā = 1 for every weight.
ReductionMode mode_cplus();
// a + ā = 1 and aā = 0 (boolean ring) for the given weights.
ReductionMode mode_cplustimes(const std::set<WeightId>& weights);
// Convenience: idempotency on every weight mentioned by the value at hand.
ReductionMode mode_cplustimes_all();

Poly reduce(const Poly& x, const ReductionMode& m);
AlgElem reduce(const AlgElem& x, const ReductionMode& m);
bool is_zero(const Poly& x, const ReductionMode& m);
bool is_zero(const AlgElem& x, const ReductionMode& m);
bool equal_mod(const Poly& x, const Poly& y, const ReductionMode& m);
bool equal_mod(const AlgElem& x, const AlgElem& y, const ReductionMode& m);

// Rendering helpers shared by goldens and reports.
std::string weight_name(WeightId w, bool bar);

}  // namespace goi

#endif  // GOI_ALGEBRA_HPP
