#include "goi/proof_text.hpp"

#include <cctype>

namespace goi {

namespace {

struct Lexer {
    const std::string& src;
    std::size_t pos = 0;
    int line = 1, col = 1;

    explicit Lexer(const std::string& s) : src(s) {}

    void skip_ws() {
        while (pos < src.size()) {
            char c = src[pos];
            if (c == '#') {  // comment to end of line
                while (pos < src.size() && src[pos] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    void advance() {
        if (src[pos] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++pos;
    }

    bool eof() {
        skip_ws();
        return pos >= src.size();
    }

    char peek() {
        skip_ws();
        return pos < src.size() ? src[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& expected) { throw ParseError(line, col, expected); }

    void expect(char c) {
        if (peek() != c) fail(std::string("'") + c + "'");
        advance();
    }

    bool accept(char c) {
        if (peek() == c) {
            advance();
            return true;
        }
        return false;
    }

    std::string ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < src.size() &&
               (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
            advance();
        if (start == pos) fail("identifier");
        return src.substr(start, pos - start);
    }

    int integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) advance();
        if (start == pos) fail("integer");
        return std::stoi(src.substr(start, pos - start));
    }
};

struct Parser {
    Lexer lex;

    explicit Parser(const std::string& s) : lex(s) {}

    Formula formula() {
        Formula acc = term();
        for (;;) {
            char c = lex.peek();
            if (c == '*' || c == '|' || c == '&' || c == '+') {
                lex.advance();
                Formula rhs = term();
                switch (c) {
                    case '*': acc = Formula::tensor(acc, rhs); break;
                    case '|': acc = Formula::par(acc, rhs); break;
                    case '&': acc = Formula::with(acc, rhs); break;
                    case '+': acc = Formula::plus(acc, rhs); break;
                }
            } else {
                return acc;
            }
        }
    }

    Formula term() {
        char c = lex.peek();
        if (c == '~') {
            lex.advance();
            return term().negate();
        }
        if (c == '(') {
            lex.advance();
            Formula f = formula();
            lex.expect(')');
            return f;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) return Formula::atom(lex.ident());
        lex.fail("formula");
    }

    // a principal: formula plus optional @position
    std::pair<Formula, int> principal() {
        Formula f = formula();
        int at = -1;
        if (lex.accept('@')) at = lex.integer();
        return {f, at};
    }

    static int resolve(const ProofPtr& p, const Formula& f, int at, Lexer& lex,
                       const std::set<int>& taken = {}) {
        const Sequent& s = p->seq;
        if (at >= 0) {
            if (at >= static_cast<int>(s.conclusion.size()) ||
                s.at(s.conclusion[at]).formula != f)
                lex.fail("occurrence of " + f.str() + " at position " + std::to_string(at));
            return at;
        }
        for (int i = 0; i < static_cast<int>(s.conclusion.size()); ++i)
            if (!taken.count(i) && s.at(s.conclusion[i]).formula == f) return i;
        lex.fail("an occurrence of " + f.str() + " in " + s.str());
    }

    ProofPtr proof() {
        std::string kw = lex.ident();
        if (kw == "ax") {
            bool positive = !lex.accept('~');
            std::string name = lex.ident();
            return Proof::ax(name, positive);
        }
        if (kw == "cut") {
            lex.expect('(');
            ProofPtr a = proof();
            lex.expect(',');
            ProofPtr b = proof();
            lex.expect(';');
            auto [f, at] = principal();
            int at2 = -1;
            if (lex.accept(',')) {
                auto [g, atg] = principal();
                if (g != f.negate()) lex.fail("the dual of the cut formula");
                at2 = atg;
            }
            lex.expect(')');
            int pos1 = resolve(a, f, at, lex);
            int pos2 = resolve(b, f.negate(), at2, lex);
            return Proof::cut(a, b, pos1, pos2);
        }
        if (kw == "tensor" || kw == "with") {
            lex.expect('(');
            ProofPtr a = proof();
            lex.expect(',');
            ProofPtr b = proof();
            lex.expect(';');
            auto [fa, ata] = principal();
            lex.expect(',');
            auto [fb, atb] = principal();
            std::vector<std::pair<int, int>> sup;
            std::vector<int> ctx;
            while (kw == "with" && lex.accept(';')) {
                std::string s = lex.ident();
                std::vector<int>* plain = nullptr;
                if (s == "superpose") {
                    lex.expect('=');
                    lex.expect('[');
                    auto entry = [&] {
                        int i = lex.integer();
                        int j = lex.accept(':') ? lex.integer() : i;
                        sup.push_back({i, j});
                    };
                    if (lex.peek() != ']') {
                        entry();
                        while (lex.accept(',')) entry();
                    }
                    lex.expect(']');
                } else if (s == "match") {
                    plain = &ctx;
                    lex.expect('=');
                    lex.expect('[');
                    if (lex.peek() != ']') {
                        plain->push_back(lex.integer());
                        while (lex.accept(',')) plain->push_back(lex.integer());
                    }
                    lex.expect(']');
                } else {
                    lex.fail("'superpose' or 'match'");
                }
            }
            lex.expect(')');
            int pos1 = resolve(a, fa, ata, lex);
            int pos2 = resolve(b, fb, atb, lex);
            return kw == "tensor" ? Proof::tensor(a, b, pos1, pos2)
                                  : Proof::with(a, b, pos1, pos2, sup, 0, ctx);
        }
        if (kw == "par") {
            lex.expect('(');
            ProofPtr a = proof();
            lex.expect(';');
            auto [fa, ata] = principal();
            lex.expect(',');
            auto [fb, atb] = principal();
            lex.expect(')');
            int pos1 = resolve(a, fa, ata, lex);
            int pos2 = resolve(a, fb, atb, lex, {pos1});
            return Proof::par(a, pos1, pos2);
        }
        if (kw == "plus1" || kw == "plus2") {
            lex.expect('(');
            ProofPtr a = proof();
            lex.expect(';');
            auto [fa, ata] = principal();
            lex.expect(',');
            auto [fb, atb] = principal();
            lex.expect(')');
            if (kw == "plus1") {
                if (atb >= 0) lex.fail("no position on the absent plus side");
                int pos = resolve(a, fa, ata, lex);
                return Proof::plus1(a, pos, fb);
            }
            if (ata >= 0) lex.fail("no position on the absent plus side");
            int pos = resolve(a, fb, atb, lex);
            return Proof::plus2(a, pos, fa);
        }
        lex.fail("proof rule (ax, cut, tensor, par, plus1, plus2, with)");
    }
};

// position annotation needed when the principal is not the leftmost
// occurrence of its formula
std::string principal_str(const ProofPtr& p, int pos, const std::set<int>& taken = {}) {
    const Sequent& s = p->seq;
    Formula f = s.at(s.conclusion[pos]).formula;
    int leftmost = -1;
    for (int i = 0; i < static_cast<int>(s.conclusion.size()); ++i)
        if (!taken.count(i) && s.at(s.conclusion[i]).formula == f) {
            leftmost = i;
            break;
        }
    std::string out = f.str();
    if (leftmost != pos) out += " @" + std::to_string(pos);
    return out;
}

}  // namespace

Formula parse_formula(const std::string& text) {
    Parser ps(text);
    Formula f = ps.formula();
    if (!ps.lex.eof()) ps.lex.fail("end of input");
    return f;
}

ProofPtr parse_proof(const std::string& text) {
    Parser ps(text);
    ProofPtr p = ps.proof();
    if (!ps.lex.eof()) ps.lex.fail("end of input");
    return p;
}

std::string print_proof(const ProofPtr& p) {
    switch (p->rule) {
        case Rule::Ax: {
            const OccNode& first = p->seq.at(p->seq.conclusion[0]);
            return std::string("ax ") + (first.formula.atom_positive() ? "" : "~") +
                   first.formula.atom_name();
        }
        case Rule::Cut: {
            std::string s = "cut(" + print_proof(p->premises[0]) + ", " +
                            print_proof(p->premises[1]) + " ; " +
                            principal_str(p->premises[0], p->principal1);
            std::string dual = principal_str(p->premises[1], p->principal2);
            if (dual.find('@') != std::string::npos) s += ", " + dual;
            return s + ")";
        }
        case Rule::Tensor:
            return "tensor(" + print_proof(p->premises[0]) + ", " +
                   print_proof(p->premises[1]) + " ; " +
                   principal_str(p->premises[0], p->principal1) + ", " +
                   principal_str(p->premises[1], p->principal2) + ")";
        case Rule::Par:
            return "par(" + print_proof(p->premises[0]) + " ; " +
                   principal_str(p->premises[0], p->principal1) + ", " +
                   principal_str(p->premises[0], p->principal2, {p->principal1}) + ")";
        case Rule::Plus1:
            return "plus1(" + print_proof(p->premises[0]) + " ; " +
                   principal_str(p->premises[0], p->principal1) + ", " + p->other.str() + ")";
        case Rule::Plus2:
            return "plus2(" + print_proof(p->premises[0]) + " ; " + p->other.str() + ", " +
                   principal_str(p->premises[0], p->principal1) + ")";
        case Rule::With: {
            std::string s = "with(" + print_proof(p->premises[0]) + ", " +
                            print_proof(p->premises[1]) + " ; " +
                            principal_str(p->premises[0], p->principal1) + ", " +
                            principal_str(p->premises[1], p->principal2);
            if (!p->superpose.empty()) {
                s += " ; superpose = [";
                for (std::size_t i = 0; i < p->superpose.size(); ++i) {
                    if (i) s += ", ";
                    s += std::to_string(p->superpose[i].first);
                    if (p->superpose[i].second != p->superpose[i].first)
                        s += ":" + std::to_string(p->superpose[i].second);
                }
                s += "]";
            }
            bool identity_ctx = true;
            for (std::size_t i = 0; i < p->ctx_map.size(); ++i)
                if (p->ctx_map[i] != static_cast<int>(i)) identity_ctx = false;
            if (!identity_ctx) {
                s += " ; match = [";
                for (std::size_t i = 0; i < p->ctx_map.size(); ++i) {
                    if (i) s += ", ";
                    s += std::to_string(p->ctx_map[i]);
                }
                s += "]";
            }
            return s + ")";
        }
    }
    throw ProofError("unknown rule in print_proof");
}

}  // namespace goi
