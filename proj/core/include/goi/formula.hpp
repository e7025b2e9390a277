// MALL formulas in negation normal form: atoms carry a polarity and
// negation is computed by de Morgan duality, so ~ never appears as a node.

#ifndef GOI_FORMULA_HPP
#define GOI_FORMULA_HPP

#include <memory>
#include <string>

namespace goi {

enum class Conn { Atom, Tensor, Par, With, Plus };

class Formula {
public:
    Formula() = default;  // empty handle; only produced by default construction
    static Formula atom(std::string name, bool positive = true);
    static Formula tensor(Formula l, Formula r);
    static Formula par(Formula l, Formula r);
    static Formula with(Formula l, Formula r);
    static Formula plus(Formula l, Formula r);

    bool empty() const { return !n_; }
    Conn conn() const { return n_->c; }
    bool is_atom() const { return n_->c == Conn::Atom; }
    const std::string& atom_name() const { return n_->name; }
    bool atom_positive() const { return n_->pos; }
    Formula left() const { return Formula(n_->l); }
    Formula right() const { return Formula(n_->r); }

    Formula negate() const;

    bool operator==(const Formula& o) const { return equal(n_.get(), o.n_.get()); }
    bool operator!=(const Formula& o) const { return !(*this == o); }

    // Connective glyphs: * (tensor), | (par), & (with), + (plus), ~X (dual atom).
    std::string str() const;

private:
    struct Node {
        Conn c;
        std::string name;  // atoms
        bool pos = true;
        std::shared_ptr<const Node> l, r;
    };
    explicit Formula(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
    static bool equal(const Node* a, const Node* b);
    static std::string render(const Node* n, bool parens);
    std::shared_ptr<const Node> n_;
};

}  // namespace goi

#endif  // GOI_FORMULA_HPP
