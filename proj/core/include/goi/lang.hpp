// Finite formal languages over eigenweight literals: the measure semiring.
// Union is addition, elementwise concatenation is multiplication; the
// ||.||-map extracts the weights witnessed with both polarities, which is
// what selects the ideal quotient applied to the paired scalar entry.

#ifndef GOI_LANG_HPP
#define GOI_LANG_HPP

#include <set>
#include <string>
#include <vector>

#include "goi/algebra.hpp"

namespace goi {

using Word = std::vector<Literal>;

class Lang {
public:
    Lang() = default;  // empty language = semiring zero
    static Lang zero() { return Lang(); }
    static Lang epsilon();
    static Lang letter(Literal l);
    static Lang of(std::set<Word> ws);

    bool is_zero() const { return words_.empty(); }
    bool is_epsilon() const;
    const std::set<Word>& words() const { return words_; }

    Lang unite(const Lang& o) const;
    Lang concat(const Lang& o) const;

    auto operator<=>(const Lang&) const = default;
    std::string str() const;

private:
    std::set<Word> words_;
};

Lang lang_union(const Lang& u, const Lang& v);
Lang lang_concat(const Lang& u, const Lang& v);

// Largest complement-closed literal set covered by the language: a and ā
// are both included exactly when each appears in some word of v.
std::set<Literal> lang_norm(const Lang& v);

// The quotient driven by a measure entry: complement elimination plus
// idempotency for every weight whose both literals lang_norm witnesses.
ReductionMode mode_from_lang(const Lang& m);

}  // namespace goi

#endif  // GOI_LANG_HPP
