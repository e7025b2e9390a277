// Occurrence-indexed sparse matrices over the scalar algebra (FMatrix) and
// over formal languages (LMatrix), plus the block combinators the proof
// interpretation is assembled from: diagonal sum, block extraction, p/q row
// and column contraction, and the two flavours of superposition.

#ifndef GOI_MATRIX_HPP
#define GOI_MATRIX_HPP

#include <map>
#include <string>
#include <vector>

#include "goi/algebra.hpp"
#include "goi/lang.hpp"
#include "goi/proof.hpp"

namespace goi {

struct IndexMismatch : std::runtime_error {
    explicit IndexMismatch(const std::string& w) : std::runtime_error("index mismatch: " + w) {}
};
struct IndexMissing : std::runtime_error {
    explicit IndexMissing(const std::string& w) : std::runtime_error("index missing: " + w) {}
};

struct MatLabel {
    std::string text;        // formula rendering, for reports and goldens
    OccId occ = kNoOcc;      // occurrence in the owning sequent, when applicable
    int cut_index = -1;      // >= 0 when the index is a cut-pair element
    bool cut_second = false;

    bool in_delta() const { return cut_index >= 0; }
    bool operator==(const MatLabel& o) const {
        return text == o.text && occ == o.occ && cut_index == o.cut_index &&
               cut_second == o.cut_second;
    }
};

template <class E>
struct EntryOps;  // zero / add / mul / is_zero per entry type

template <>
struct EntryOps<AlgElem> {
    static AlgElem zero() { return AlgElem::zero(); }
    static AlgElem add(const AlgElem& a, const AlgElem& b) { return a.plus(b); }
    static AlgElem mul(const AlgElem& a, const AlgElem& b) { return a.times(b); }
    static bool is_zero(const AlgElem& a) { return a.is_raw_zero(); }
    static AlgElem unit() { return AlgElem::one(); }
    static std::string str(const AlgElem& a) { return a.str(); }
};

template <>
struct EntryOps<Lang> {
    static Lang zero() { return Lang::zero(); }
    static Lang add(const Lang& a, const Lang& b) { return a.unite(b); }
    static Lang mul(const Lang& a, const Lang& b) { return a.concat(b); }
    static bool is_zero(const Lang& a) { return a.is_zero(); }
    static Lang unit() { return Lang::epsilon(); }
    static std::string str(const Lang& a) { return a.str(); }
};

template <class E>
class Mat {
public:
    Mat() = default;
    Mat(std::vector<MatLabel> rows, std::vector<MatLabel> cols)
        : rows_(std::move(rows)), cols_(std::move(cols)) {}
    static Mat square(std::vector<MatLabel> labels) {
        Mat m;
        m.rows_ = labels;
        m.cols_ = std::move(labels);
        return m;
    }
    static Mat identity(std::vector<MatLabel> labels) {
        Mat m = square(std::move(labels));
        for (int i = 0; i < m.nrows(); ++i) m.set(i, i, EntryOps<E>::unit());
        return m;
    }

    int nrows() const { return static_cast<int>(rows_.size()); }
    int ncols() const { return static_cast<int>(cols_.size()); }
    bool is_square() const { return rows_.size() == cols_.size(); }
    const std::vector<MatLabel>& rows() const { return rows_; }
    const std::vector<MatLabel>& cols() const { return cols_; }
    const std::map<std::pair<int, int>, E>& entries() const { return cells_; }

    E at(int r, int c) const {
        auto it = cells_.find({r, c});
        return it == cells_.end() ? EntryOps<E>::zero() : it->second;
    }
    const E* find(int r, int c) const {
        auto it = cells_.find({r, c});
        return it == cells_.end() ? nullptr : &it->second;
    }
    void set(int r, int c, E v) {
        check_rc(r, c);
        if (EntryOps<E>::is_zero(v))
            cells_.erase({r, c});
        else
            cells_[{r, c}] = std::move(v);
    }
    void add(int r, int c, const E& v) {
        check_rc(r, c);
        auto it = cells_.find({r, c});
        if (it == cells_.end()) {
            if (!EntryOps<E>::is_zero(v)) cells_[{r, c}] = v;
            return;
        }
        E sum = EntryOps<E>::add(it->second, v);
        if (EntryOps<E>::is_zero(sum))
            cells_.erase(it);
        else
            it->second = std::move(sum);
    }
    bool all_zero() const { return cells_.empty(); }

    Mat plus(const Mat& o) const {
        require_same_shape(o);
        Mat r = *this;
        for (const auto& [rc, v] : o.cells_) r.add(rc.first, rc.second, v);
        return r;
    }

    Mat times(const Mat& o) const {
        if (ncols() != o.nrows()) throw IndexMismatch("product shapes");
        Mat r(rows_, o.cols_);
        for (const auto& [rc, v] : cells_) {
            auto [i, k] = rc;
            for (int j = 0; j < o.ncols(); ++j) {
                const E* w = o.find(k, j);
                if (w) r.add(i, j, EntryOps<E>::mul(v, *w));
            }
        }
        return r;
    }

    Mat sub(const std::vector<int>& rsel, const std::vector<int>& csel) const {
        std::vector<MatLabel> rl, cl;
        for (int i : rsel) rl.push_back(rows_.at(i));
        for (int j : csel) cl.push_back(cols_.at(j));
        Mat r(std::move(rl), std::move(cl));
        for (int a = 0; a < static_cast<int>(rsel.size()); ++a)
            for (int b = 0; b < static_cast<int>(csel.size()); ++b) {
                const E* v = find(rsel[a], csel[b]);
                if (v) r.set(a, b, *v);
            }
        return r;
    }

    // row permutation: row i of the result is row perm[i] of *this
    Mat permute_rows(const std::vector<int>& perm) const {
        Mat r(rows_, cols_);
        for (const auto& [rc, v] : cells_) {
            for (int i = 0; i < nrows(); ++i)
                if (perm[i] == rc.first) r.set(i, rc.second, v);
        }
        return r;
    }

    template <class F>
    auto map(F f) const {  // entrywise; may change entry type
        using E2 = decltype(f(std::declval<const E&>()));
        Mat<E2> r(rows_, cols_);
        for (const auto& [rc, v] : cells_) r.set(rc.first, rc.second, f(v));
        return r;
    }

    std::string str() const;

private:
    std::vector<MatLabel> rows_, cols_;
    std::map<std::pair<int, int>, E> cells_;

    void check_rc(int r, int c) const {
        if (r < 0 || r >= nrows() || c < 0 || c >= ncols())
            throw IndexMissing("entry (" + std::to_string(r) + "," + std::to_string(c) + ")");
    }
    void require_same_shape(const Mat& o) const {
        if (nrows() != o.nrows() || ncols() != o.ncols())
            throw IndexMismatch("sum shapes");
    }

    template <class>
    friend class Mat;
};

using FMatrix = Mat<AlgElem>;
using LMatrix = Mat<Lang>;

template <class E>
std::string Mat<E>::str() const {
    std::string s;
    for (int i = 0; i < nrows(); ++i) {
        s += rows_[i].text + ":";
        for (int j = 0; j < ncols(); ++j) {
            const E* v = find(i, j);
            if (!v) continue;
            s += "  [" + cols_[j].text + "] " + EntryOps<E>::str(*v);
        }
        s += "\n";
    }
    return s;
}

// Block-diagonal assembly, index-order preserving.
template <class E>
Mat<E> dg(const std::vector<Mat<E>>& ms) {
    std::vector<MatLabel> labels;
    for (const auto& m : ms) {
        if (!m.is_square()) throw IndexMismatch("dg needs square blocks");
        for (const auto& l : m.rows()) labels.push_back(l);
    }
    Mat<E> r = Mat<E>::square(std::move(labels));
    int off = 0;
    for (const auto& m : ms) {
        for (const auto& [rc, v] : m.entries()) r.set(off + rc.first, off + rc.second, v);
        off += m.nrows();
    }
    return r;
}

template <class E>
Mat<E> zero_matrix(std::vector<MatLabel> labels) {
    return Mat<E>::square(std::move(labels));
}

// Sub-block by row/column positions (labels preserved).
template <class E>
Mat<E> block(const Mat<E>& m, const std::vector<int>& rows, const std::vector<int>& cols) {
    return m.sub(rows, cols);
}

// Contraction of two index positions into one (the row side is premultiplied
// by 1⊗p / 1⊗q, the column side postmultiplied by 1⊗p* / 1⊗q*).  Entries with
// both indices off {i,j} are untouched.  Passing use_p/use_q selects which
// retraction leg each old index rides on; plus-rules use a single leg.
FMatrix contract_pq(const FMatrix& m, int pos1, int pos2, const MatLabel& merged);
FMatrix contract_single(const FMatrix& m, int pos, bool use_p, const MatLabel& merged);
// Language matrices contract by plain union.
LMatrix contract_union(const LMatrix& m, int pos1, int pos2, const MatLabel& merged);
LMatrix contract_union_single(const LMatrix& m, int pos, const MatLabel& merged);

// Superposition over the shared part (every index except pos1/pos2, which
// must coincide): scalar weights a/ā everywhere, with p/q contraction into
// the fresh with-index.
FMatrix superpose_S(const FMatrix& f, const FMatrix& g, int pos1, int pos2, WeightId weight,
                    const MatLabel& merged);
// Language superposition: {a}/{ā} multipliers on the shared block only; the
// with row and column are plain unions.
LMatrix superpose_s(const LMatrix& h, const LMatrix& l, int pos1, int pos2, WeightId weight,
                    const MatLabel& merged);

// M = dg(N, 0) up to index permutation; indices are matched by label text.
bool embeds_mod_zero(const FMatrix& m, const FMatrix& n);

FMatrix reduce(const FMatrix& m, const ReductionMode& mode);
bool equal_mod(const FMatrix& a, const FMatrix& b, const ReductionMode& mode);

}  // namespace goi

#endif  // GOI_MATRIX_HPP
