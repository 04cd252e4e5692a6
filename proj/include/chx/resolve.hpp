#pragma once

// Resolutions of bounded complexes by disk-sum (projective) complexes:
// canonical covers, resolution towers, projective dimension, membership in
// the class of exact complexes with degreewise n-projective cycles, Ext^1 of
// complexes, right-class consistency reports, and exactness-propagation
// checks for sequences of exact complexes.

#include "chx/maps.hpp"

namespace chx {

// Canonical disk-sum cover: P = (+)_m D^m(free on the generators of X_m),
// disks ordered by degree descending. P_m = (tops at m | bottoms of the
// degree-(m+1) disks); the epi sends tops to generators and bottoms through
// the boundary of X.
struct ComplexCover {
    ChainComplex P;
    ChainMap epi;  // P -> X, degreewise surjective
};
ComplexCover projective_cover_complex(const ChainComplex& X);

// 0 -> P^n -> ... -> P^1 -> P^0 -> X -> 0: stages[i].map points to the
// previous stage (stage 0 maps onto the target). When the iterated kernels
// never become disk-decomposable within max_len, complete = false and
// residual holds the last kernel.
struct ResolutionTower {
    ChainComplex target;
    std::vector<ComplexWithMap> stages;
    bool complete = false;
    ChainComplex residual;
    int length() const { return static_cast<int>(stages.size()) - 1; }
};
ResolutionTower resolve_complex(const ChainComplex& X, int max_len);

// Re-verify a tower from scratch: every stage disk-decomposable, every map
// valid, and the assembled sequence exact degreewise.
ValidationReport validate_tower(const ResolutionTower& t);

// Minimal tower length via the cycle criterion (exact + pd of every cycle
// module <= n); nullopt when the complex is not exact or no n <= max_len
// works.
std::optional<int> pd_complex(const ChainComplex& X, int max_len);

// Exact with pd(Z_m(X)) <= n for all m.
bool in_tilde_Pn(const ChainComplex& X, int n);

// Ext^1 in the category of bounded complexes, as the first homology of
// Hom(P^bullet, Y) against a 3-stage disk-sum cover resolution of X.
FgAbInvariants ext1_complex(const ChainComplex& X, const ChainComplex& Y);

// Semi-decision for membership of Y in the right Ext-orthogonal class: Y is
// only tested against a finite family of left-class complexes. "consistent"
// never claims full membership.
struct RightClassReport {
    std::vector<std::pair<std::string, FgAbInvariants>> groups;  // label -> ext1_complex(S, Y)
    bool consistent = true;  // all computed groups vanish
};
RightClassReport consistent_with_right_class(const ChainComplex& Y, int n,
                                             const std::vector<std::pair<std::string, ChainComplex>>& family);
std::vector<std::pair<std::string, ChainComplex>> default_left_family(int n);

// A finite exact sequence of complexes A^k -> A^{k-1} -> ... -> A^0 given by
// its consecutive maps (seq[i]: A^{k-i} -> A^{k-i-1}); exactness means the
// assembled 0 -> A^k -> ... -> A^0 -> 0 is exact degreewise.
ValidationReport validate_complex_sequence(const std::vector<ChainMap>& seq);

// Given an exact sequence of complexes whose terms other than the tail A^0
// are exact, confirm the tail is exact too (throws invalid_argument when the
// preconditions fail).
bool tail_exactness_propagates(const std::vector<ChainMap>& seq);

// Per degree m, the induced sequence of cycle modules
// 0 -> Z_m(A^k) -> ... -> Z_m(A^0) -> 0 with restricted maps, verified exact.
struct CycleSequence {
    int degree = 0;
    std::vector<ModuleMap> maps;
};
struct CycleSequenceReport {
    std::vector<std::string> failures;
    std::vector<CycleSequence> sequences;
    bool ok() const { return failures.empty(); }
};
CycleSequenceReport cycle_level_sequences(const std::vector<ChainMap>& seq);

}  // namespace chx
