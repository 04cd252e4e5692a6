#pragma once

// The two monoidal products on bounded complexes — the graded tensor product
// with the signed Leibniz boundary, and its quotient-by-boundaries variant
// with the left-factor-only boundary — plus the non-monoidality
// counterexample report for the n-indexed model structure.

#include "chx/resolve.hpp"

namespace chx {

struct TensorComplex {
    ChainComplex result;
    // per degree n: the (k, n-k) blocks composing the component, ascending k,
    // only blocks with generators listed
    std::map<int, std::vector<std::pair<int, int>>> summand_index;
};

// (X (x) Y)_n = (+)_k X_k (x) Y_{n-k}, boundary x(x)y -> dx(x)y + (-1)^k x(x)dy.
// Throws logic_error if the signed boundary fails d∘d = 0 (sign audit).
TensorComplex tensor(const ChainComplex& X, const ChainComplex& Y);

// Degreewise quotient of the tensor product by its boundary submodules, with
// the induced boundary x(x)y -> dx(x)y (left factor only). Throws logic_error
// if the induced boundary fails to be well defined.
ChainComplex bar_tensor(const ChainComplex& X, const ChainComplex& Y);

// Audit of the failure of the pushout-product axiom at level n: both products
// of the torsion sphere with the torsion-cycle exact complex are non-exact,
// although both factors are legitimate cofibration sources.
struct CounterexampleReport {
    int n = 1;
    ChainComplex sphere_factor;  // torsion sphere in degree 0
    ChainComplex exact_factor;   // torsion-cycle exact complex
    bool sphere_cofibration_candidate = false;  // mono from 0, degreewise dimension <= n
    bool exact_trivial_cofibration_candidate = false;  // class membership at level n
    TensorComplex plain;
    ChainComplex bar;
    FgAbInvariants plain_h1, bar_h1;
    bool plain_exact = true, bar_exact = true;
    bool control_exact = false;  // products with a contractible free disk stay exact
    std::vector<std::string> lines;  // rendered audit, one line per fact
};
CounterexampleReport counterexample_report(int n);

}  // namespace chx
