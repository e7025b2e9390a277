#include "goi/lang.hpp"

namespace goi {

Lang Lang::epsilon() {
    Lang l;
    l.words_.insert(Word{});
    return l;
}

Lang Lang::letter(Literal lit) {
    Lang l;
    l.words_.insert(Word{lit});
    return l;
}

Lang Lang::of(std::set<Word> ws) {
    Lang l;
    l.words_ = std::move(ws);
    return l;
}

bool Lang::is_epsilon() const { return words_.size() == 1 && words_.begin()->empty(); }

Lang Lang::unite(const Lang& o) const {
    Lang r = *this;
    r.words_.insert(o.words_.begin(), o.words_.end());
    return r;
}

Lang Lang::concat(const Lang& o) const {
    Lang r;
    for (const auto& u : words_)
        for (const auto& v : o.words_) {
            Word w = u;
            w.insert(w.end(), v.begin(), v.end());
            r.words_.insert(std::move(w));
        }
    return r;
}

std::string Lang::str() const {
    if (words_.empty()) return "{}";
    std::string s = "{";
    bool first_word = true;
    for (const auto& w : words_) {
        if (!first_word) s += ", ";
        first_word = false;
        if (w.empty()) {
            s += "ε";  // ε
        } else {
            for (std::size_t i = 0; i < w.size(); ++i) {
                if (i) s += ".";
                s += w[i].str();
            }
        }
    }
    return s + "}";
}

Lang lang_union(const Lang& u, const Lang& v) { return u.unite(v); }
Lang lang_concat(const Lang& u, const Lang& v) { return u.concat(v); }

std::set<Literal> lang_norm(const Lang& v) {
    std::set<Literal> seen;
    for (const auto& w : v.words())
        for (const auto& l : w) seen.insert(l);
    std::set<Literal> out;
    for (const auto& l : seen)
        if (seen.count(l.opposite())) out.insert(l);
    return out;
}

ReductionMode mode_from_lang(const Lang& m) {
    ReductionMode mode = mode_cplus();
    for (const auto& l : lang_norm(m))
        if (!l.bar) mode.idempotent.insert(l);
    return mode;
}

}  // namespace goi
