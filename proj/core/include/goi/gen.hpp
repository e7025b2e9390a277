// Seeded random proof generation for the property suites: bounded depth,
// bounded with/cut counts, cut partners produced by expanding axioms over the
// chosen cut formula, with-premises produced as structural twins (optionally
// differing in plus choices) so the contexts superpose.

#ifndef GOI_GEN_HPP
#define GOI_GEN_HPP

#include <cstdint>
#include <random>

#include "goi/proof.hpp"

namespace goi {

struct GenOptions {
    int max_depth = 6;
    int max_withs = 4;
    int max_cuts = 4;
    int formula_depth = 2;
};

class ProofGen {
public:
    explicit ProofGen(std::uint64_t seed, GenOptions opt = {});

    // A random checked proof with eigenweights assigned.
    ProofPtr proof();
    // ⊢ F, F~ by expansion of atomic axioms, F at returned position.
    std::pair<ProofPtr, int> expansion(const Formula& f);
    Formula formula(int depth);

private:
    std::mt19937_64 rng_;
    GenOptions opt_;
    int withs_ = 0;
    int cuts_ = 0;

    ProofPtr gen(int depth);
    int additive_count(const Formula& f);
    int pick(int n);
    bool chance(double p);
};

}  // namespace goi

#endif  // GOI_GEN_HPP
