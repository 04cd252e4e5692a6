#pragma once

// Brute-force ground truth over Z/m: exhaustive enumeration of extension
// classes for Ext^1 and exhaustive lifting searches for projectivity. The
// methods here are deliberately independent of the resolution-based
// computations they certify.

#include "chx/complex.hpp"  // ValidationReport

namespace chx {

// A finite Z/m-module with an enumerated carrier: the product of its
// invariant factors. Elements are coordinate tuples, x[i] in [0, factors[i]).
struct FiniteModule {
    Ring ring;                  // Z/m only
    long m = 0;                 // the modulus, as a machine integer
    std::vector<long> factors;  // invariant factors > 1, divisibility-ascending
    // image of each presentation generator in carrier coordinates
    std::vector<std::vector<long>> gen_images;

    long size() const;  // product of the factors (1 for the zero module)
    std::vector<long> zero() const { return std::vector<long>(factors.size(), 0); }
    std::vector<long> add(const std::vector<long>& a, const std::vector<long>& b) const;
    std::vector<long> negate(const std::vector<long>& a) const;
    std::vector<long> scale(long c, const std::vector<long>& a) const;
    std::vector<long> element_at(long index) const;  // index in [0, size())
    long index_of(const std::vector<long>& a) const;
};

// Throws invalid_argument unless P is presented over Z/m.
FiniteModule finite_module(const Presentation& P);

// Exhaustive audit of the carrier tables: associativity, commutativity,
// identity, inverses, distributivity, and m * x = 0, over every element
// triple when the carrier has at most 64 elements (a deterministic sample
// otherwise).
ValidationReport check_tables(const FiniteModule& M);

// Extension classes 0 -> B -> E -> A -> 0, enumerated as all compatible
// module structures on the carrier B x A (choices of a_i * e_i in B for the
// invariant-factor generators e_i of A), identified up to equivalence by
// exhaustive search over the isomorphisms fixing B and inducing the identity
// on A. One representative tuple is kept per class.
struct ExtensionEnumeration {
    long class_count = 0;
    // one representative per class: the chosen values of a_i * e_i in B
    std::vector<std::vector<std::vector<long>>> representatives;
};
// Throws length_error when |A| * |B| exceeds the cap (explicit refusal), and
// invalid_argument on ring mismatch.
ExtensionEnumeration ext1_bruteforce(const FiniteModule& A, const FiniteModule& B, long cap = 256);

// Projectivity by exhaustive lifting of the identity through the canonical
// free cover (Z/m)^k -> P. Throws length_error when |P| exceeds the cap.
bool lifting_bruteforce(const FiniteModule& P, long cap = 256);

}  // namespace chx
