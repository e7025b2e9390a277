#include "goi/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace goi {

std::string weight_name(WeightId w, bool bar) {
    std::string s = bar ? "ā" : "a";  // ā
    s += std::to_string(w);
    return s;
}

std::string Literal::str() const { return weight_name(weight, bar); }

Monomial Monomial::lit(Literal l, Exponent e) {
    Monomial m;
    if (e > 0) m.factors_.push_back({l, e});
    return m;
}

Exponent Monomial::exponent_of(Literal l) const {
    for (const auto& [lit, e] : factors_)
        if (lit == l) return e;
    return 0;
}

std::uint64_t Monomial::degree() const {
    std::uint64_t d = 0;
    for (const auto& [lit, e] : factors_) d += e;
    return d;
}

Monomial Monomial::times(const Monomial& o) const {
    Monomial r;
    auto a = factors_.begin(), b = o.factors_.begin();
    while (a != factors_.end() || b != o.factors_.end()) {
        if (b == o.factors_.end() || (a != factors_.end() && a->first < b->first)) {
            r.factors_.push_back(*a++);
        } else if (a == factors_.end() || b->first < a->first) {
            r.factors_.push_back(*b++);
        } else {
            r.factors_.push_back({a->first, a->second + b->second});
            ++a, ++b;
        }
    }
    return r;
}

Monomial Monomial::without(const std::set<Literal>& drop) const {
    Monomial r;
    for (const auto& f : factors_)
        if (!drop.count(f.first)) r.factors_.push_back(f);
    return r;
}

std::string Monomial::str() const {
    if (factors_.empty()) return "1";
    std::string s;
    for (const auto& [l, e] : factors_) {
        if (!s.empty()) s += ".";
        s += l.str();
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

void Poly::insert_xor(const Monomial& m) {
    auto it = std::lower_bound(monos_.begin(), monos_.end(), m);
    if (it != monos_.end() && *it == m)
        monos_.erase(it);
    else
        monos_.insert(it, m);
}

Poly poly_collect(std::vector<Monomial> ms) {
    Poly p;
    for (auto& m : ms) p.insert_xor(m);
    return p;
}

Poly Poly::one() { return mono(Monomial::one()); }

Poly Poly::lit(Literal l) { return mono(Monomial::lit(l)); }

Poly Poly::mono(Monomial m) {
    Poly p;
    p.monos_.push_back(std::move(m));
    return p;
}

bool Poly::is_one() const { return monos_.size() == 1 && monos_[0].is_one(); }

Poly Poly::plus(const Poly& o) const {
    Poly r = *this;
    for (const auto& m : o.monos_) r.insert_xor(m);
    return r;
}

Poly Poly::times(const Poly& o) const {
    Poly r;
    for (const auto& a : monos_)
        for (const auto& b : o.monos_) r.insert_xor(a.times(b));
    return r;
}

std::set<Literal> Poly::literals() const {
    std::set<Literal> out;
    for (const auto& m : monos_)
        for (const auto& [l, e] : m.factors()) out.insert(l);
    return out;
}

std::string Poly::str() const {
    if (monos_.empty()) return "0";
    std::string s;
    for (const auto& m : monos_) {
        if (!s.empty()) s += "+";
        s += m.str();
    }
    return s;
}

Poly poly_add(const Poly& x, const Poly& y) { return x.plus(y); }
Poly poly_mul(const Poly& x, const Poly& y) { return x.times(y); }

PathWord PathWord::zero() {
    PathWord w;
    w.zero_ = true;
    return w;
}

PathWord PathWord::p() {
    PathWord w;
    w.ups_ = "p";
    return w;
}

PathWord PathWord::q() {
    PathWord w;
    w.ups_ = "q";
    return w;
}

PathWord PathWord::p_star() {
    PathWord w;
    w.downs_ = "p";
    return w;
}

PathWord PathWord::q_star() {
    PathWord w;
    w.downs_ = "q";
    return w;
}

PathWord PathWord::parse(const std::string& s) {
    if (s == "0") return zero();
    if (s == "1" || s.empty()) return one();
    PathWord acc;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c != 'p' && c != 'q') throw std::invalid_argument("bad path word: " + s);
        bool starred = i + 1 < s.size() && s[i + 1] == '*';
        PathWord g;
        if (starred) g = (c == 'p') ? p_star() : q_star();
        else g = (c == 'p') ? p() : q();
        acc = acc.times(g);
        if (starred) ++i;
    }
    return acc;
}

PathWord PathWord::times(const PathWord& o) const {
    if (zero_ || o.zero_) return zero();
    // boundary: our starred suffix against o's plain prefix
    std::string d = downs_, u = o.ups_;
    std::size_t nd = d.size(), nu = 0;
    while (nd > 0 && nu < u.size()) {
        if (d[nd - 1] != u[nu]) return zero();  // x*y = 0 for x != y
        --nd, ++nu;                             // x*x = 1
    }
    PathWord r;
    if (nd == 0) {
        r.ups_ = ups_ + u.substr(nu);
        r.downs_ = o.downs_;
    } else {
        r.ups_ = ups_;
        r.downs_ = d.substr(0, nd) + o.downs_;
    }
    return r;
}

PathWord PathWord::star() const {
    if (zero_) return zero();
    PathWord r;
    r.ups_ = std::string(downs_.rbegin(), downs_.rend());
    r.downs_ = std::string(ups_.rbegin(), ups_.rend());
    return r;
}

std::string PathWord::str() const {
    if (zero_) return "0";
    if (ups_.empty() && downs_.empty()) return "1";
    std::string s = ups_;
    for (char c : downs_) {
        s += c;
        s += '*';
    }
    return s;
}

PathWord path_mul(const PathWord& x, const PathWord& y) { return x.times(y); }
PathWord path_star(const PathWord& x) { return x.star(); }

void AlgElem::insert_xor(const Monomial& m, const PathWord& s) {
    if (s.is_zero()) return;
    std::pair<Monomial, PathWord> t{m, s};
    auto it = std::lower_bound(terms_.begin(), terms_.end(), t);
    if (it != terms_.end() && *it == t)
        terms_.erase(it);
    else
        terms_.insert(it, t);
}

AlgElem alg_collect(std::vector<std::pair<Monomial, PathWord>> ts) {
    AlgElem x;
    for (auto& [m, s] : ts) x.insert_xor(m, s);
    return x;
}

AlgElem AlgElem::one() { return term(Monomial::one(), PathWord::one()); }

AlgElem AlgElem::term(Monomial m, PathWord s) {
    AlgElem x;
    if (!s.is_zero()) x.terms_.push_back({std::move(m), std::move(s)});
    return x;
}

AlgElem AlgElem::scalar(const Poly& v) {
    AlgElem x;
    for (const auto& m : v.monomials()) x.insert_xor(m, PathWord::one());
    return x;
}

AlgElem AlgElem::plus(const AlgElem& o) const {
    AlgElem r = *this;
    for (const auto& [m, s] : o.terms_) r.insert_xor(m, s);
    return r;
}

AlgElem AlgElem::times(const AlgElem& o) const {
    AlgElem r;
    for (const auto& [m1, s1] : terms_)
        for (const auto& [m2, s2] : o.terms_) {
            PathWord s = s1.times(s2);
            if (!s.is_zero()) r.insert_xor(m1.times(m2), s);
        }
    return r;
}

AlgElem AlgElem::star() const {
    AlgElem r;
    for (const auto& [m, s] : terms_) r.insert_xor(m, s.star());
    return r;
}

AlgElem AlgElem::scaled(const Poly& v) const {
    AlgElem r;
    for (const auto& vm : v.monomials())
        for (const auto& [m, s] : terms_) r.insert_xor(vm.times(m), s);
    return r;
}

std::vector<std::pair<PathWord, Poly>> AlgElem::by_path() const {
    std::map<PathWord, std::vector<Monomial>> groups;
    for (const auto& [m, s] : terms_) groups[s].push_back(m);
    std::vector<std::pair<PathWord, Poly>> out;
    for (auto& [s, ms] : groups) out.push_back({s, poly_collect(std::move(ms))});
    return out;
}

std::set<Literal> AlgElem::literals() const {
    std::set<Literal> out;
    for (const auto& [m, s] : terms_)
        for (const auto& [l, e] : m.factors()) out.insert(l);
    return out;
}

std::string AlgElem::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [path, coeff] : by_path()) {
        if (!s.empty()) s += " + ";
        bool needs_dot = !path.is_one();
        std::string c = coeff.str();
        if (!needs_dot) {
            s += c;
        } else if (coeff.is_one()) {
            s += path.str();
        } else {
            bool paren = coeff.monomials().size() > 1;
            s += paren ? "(" + c + ")" : c;
            s += "·" + path.str();  // middle dot
        }
    }
    return s;
}

AlgElem alg_add(const AlgElem& x, const AlgElem& y) { return x.plus(y); }
AlgElem alg_mul(const AlgElem& x, const AlgElem& y) { return x.times(y); }
AlgElem alg_star(const AlgElem& x) { return x.star(); }
AlgElem scalar_mul(const Poly& v, const AlgElem& x) { return x.scaled(v); }

std::vector<std::pair<Monomial, PathWord>> monomial_components(const AlgElem& x) {
    return x.terms();
}

Monomial collapse_w(const std::pair<Monomial, PathWord>& t) { return t.first; }

ReductionMode mode_raw() { return ReductionMode{}; }

ReductionMode mode_cplus() {
    ReductionMode m;
    m.eliminate_complement = true;
    return m;
}

ReductionMode mode_cplustimes(const std::set<WeightId>& weights) {
    ReductionMode m;
    m.eliminate_complement = true;
    for (WeightId w : weights) m.idempotent.insert(Literal{w, false});
    return m;
}

ReductionMode mode_cplustimes_all() {
    ReductionMode m;
    m.eliminate_complement = true;
    m.idempotent_all = true;
    return m;
}

namespace {

// (1+a)^e over GF(2); binomial coefficients mod 2 via bit containment.
Poly one_plus_pow(Literal a, Exponent e) {
    Poly r = Poly::zero();
    for (Exponent i = 0; i <= e; ++i)
        if ((i & e) == i) r = r.plus(Poly::mono(Monomial::lit(a, i)));
    return r;
}

Poly eliminate_bars(const Monomial& m) {
    Poly acc = Poly::one();
    Monomial kept;
    for (const auto& [l, e] : m.factors()) {
        if (l.bar)
            acc = acc.times(one_plus_pow(Literal{l.weight, false}, e));
        else
            kept = kept.times(Monomial::lit(l, e));
    }
    return acc.times(Poly::mono(kept));
}

bool annihilated(const Monomial& m, const std::set<std::pair<Literal, Literal>>& pairs) {
    for (const auto& [x, y] : pairs)
        if (m.contains(x) && m.contains(y)) return true;
    return false;
}

Monomial cap(const Monomial& m, const ReductionMode& mode) {
    Monomial r;
    for (const auto& [l, e] : m.factors())
        r = r.times(Monomial::lit(l, mode.caps(l) ? 1 : e));
    return r;
}

}  // namespace

Poly reduce(const Poly& x, const ReductionMode& mode) {
    if (mode.is_raw()) return x;
    Poly cur = x;
    if (mode.eliminate_complement) {
        Poly out;
        for (const auto& m : cur.monomials()) out = out.plus(eliminate_bars(m));
        cur = out;
    }
    std::vector<Monomial> ms;
    for (const auto& m : cur.monomials()) {
        Monomial c = cap(m, mode);
        if (!annihilated(c, mode.annihilate)) ms.push_back(c);
    }
    return poly_collect(std::move(ms));
}

AlgElem reduce(const AlgElem& x, const ReductionMode& mode) {
    if (mode.is_raw()) return x;
    AlgElem out;
    for (const auto& [path, coeff] : x.by_path()) {
        Poly r = reduce(coeff, mode);
        for (const auto& m : r.monomials()) out = out.plus(AlgElem::term(m, path));
    }
    return out;
}

bool is_zero(const Poly& x, const ReductionMode& m) { return reduce(x, m).is_zero(); }

bool is_zero(const AlgElem& x, const ReductionMode& m) {
    for (const auto& [path, coeff] : x.by_path())
        if (!reduce(coeff, m).is_zero()) return false;
    return true;
}

bool equal_mod(const Poly& x, const Poly& y, const ReductionMode& m) {
    return reduce(x, m) == reduce(y, m);
}

bool equal_mod(const AlgElem& x, const AlgElem& y, const ReductionMode& m) {
    return reduce(x, m) == reduce(y, m);
}

}  // namespace goi
