#include "goi/formula.hpp"

namespace goi {

Formula Formula::atom(std::string name, bool positive) {
    auto n = std::make_shared<Node>();
    n->c = Conn::Atom;
    n->name = std::move(name);
    n->pos = positive;
    return Formula(n);
}

Formula Formula::tensor(Formula l, Formula r) {
    auto n = std::make_shared<Node>();
    n->c = Conn::Tensor;
    n->l = l.n_;
    n->r = r.n_;
    return Formula(n);
}

Formula Formula::par(Formula l, Formula r) {
    auto n = std::make_shared<Node>();
    n->c = Conn::Par;
    n->l = l.n_;
    n->r = r.n_;
    return Formula(n);
}

Formula Formula::with(Formula l, Formula r) {
    auto n = std::make_shared<Node>();
    n->c = Conn::With;
    n->l = l.n_;
    n->r = r.n_;
    return Formula(n);
}

Formula Formula::plus(Formula l, Formula r) {
    auto n = std::make_shared<Node>();
    n->c = Conn::Plus;
    n->l = l.n_;
    n->r = r.n_;
    return Formula(n);
}

Formula Formula::negate() const {
    switch (n_->c) {
        case Conn::Atom:
            return atom(n_->name, !n_->pos);
        case Conn::Tensor:
            return par(left().negate(), right().negate());
        case Conn::Par:
            return tensor(left().negate(), right().negate());
        case Conn::With:
            return plus(left().negate(), right().negate());
        case Conn::Plus:
            return with(left().negate(), right().negate());
    }
    return Formula();
}

bool Formula::equal(const Node* a, const Node* b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->c != b->c) return false;
    if (a->c == Conn::Atom) return a->name == b->name && a->pos == b->pos;
    return equal(a->l.get(), b->l.get()) && equal(a->r.get(), b->r.get());
}

std::string Formula::render(const Node* n, bool parens) {
    if (n->c == Conn::Atom) return (n->pos ? "" : "~") + n->name;
    const char* op = nullptr;
    switch (n->c) {
        case Conn::Tensor: op = "*"; break;
        case Conn::Par: op = "|"; break;
        case Conn::With: op = "&"; break;
        case Conn::Plus: op = "+"; break;
        default: break;
    }
    std::string s = render(n->l.get(), true);
    s += op;
    s += render(n->r.get(), true);
    return parens ? "(" + s + ")" : s;
}

std::string Formula::str() const { return render(n_.get(), false); }

}  // namespace goi
