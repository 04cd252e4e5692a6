#pragma once

// Chain maps between bounded complexes: validation, composition, mono/epi,
// kernel/image/cokernel complexes, nullhomotopy decision (one global linear
// system over all degrees), quasi-isomorphism test, mapping cone and
// cylinder, homotopy-class groups.

#include "chx/complex.hpp"

namespace chx {

struct ChainMap {
    ChainComplex source, target;
    std::map<int, IntMatrix> comps;  // degree -> matrix (target gens x source gens)

    IntMatrix at(int m) const;  // correctly shaped zero when absent
    ModuleMap component(int m) const { return ModuleMap(source.at(m), target.at(m), at(m)); }
};

ChainMap make_chain_map(ChainComplex source, ChainComplex target, std::map<int, IntMatrix> comps);
ValidationReport validate_chain_map(const ChainMap& f);

ChainMap identity_chain_map(const ChainComplex& X);
ChainMap zero_chain_map(const ChainComplex& src, const ChainComplex& tgt);
ChainMap compose(const ChainMap& g, const ChainMap& f);
bool chain_maps_equal(const ChainMap& f, const ChainMap& g);

bool is_mono(const ChainMap& f);
bool is_epi(const ChainMap& f);

struct ComplexWithMap {
    ChainComplex complex;
    ChainMap map;  // inclusion into / projection out of the relevant complex
};

ComplexWithMap kernel_complex(const ChainMap& f);    // map: kernel -> source
ComplexWithMap image_complex(const ChainMap& f);     // map: image -> target
ComplexWithMap cokernel_complex(const ChainMap& f);  // map: target -> cokernel

struct Homotopy {
    std::map<int, IntMatrix> s;  // s[m]: source_m -> target_{m+1}
};

// Witness with f = ds + sd degreewise, or nullopt; decided by one exact
// linear system stacking all degrees (the constraints couple neighbours).
std::optional<Homotopy> nullhomotopy(const ChainMap& f);
// Exact re-verification of a claimed homotopy.
bool homotopy_certifies(const ChainMap& f, const Homotopy& h);

ModuleMap induced_homology_map(const ChainMap& f, int m);
bool is_quasi_iso(const ChainMap& f);

// cone(f)_m = source_{m-1} (+) target_m, differential (x, y) |-> (-dx, f(x) + dy).
ChainComplex cone(const ChainMap& f);

// Generators of the group of all chain maps A -> B (components supported on
// A's window); every chain map is an integer combination modulo target
// relations.
std::vector<ChainMap> chain_map_basis(const ChainComplex& A, const ChainComplex& B);

// Group of chain maps A -> B modulo chain homotopy, as abelian invariants.
FgAbInvariants homotopy_classes(const ChainComplex& A, const ChainComplex& B);

// Mapping cylinder factorization of f as (split mono, homotopy-equivalence
// epi); demo plumbing, not a model-structure factorization.
struct CylinderFactorization {
    ChainComplex cylinder;
    ChainMap into;  // source -> cylinder, degreewise split mono
    ChainMap onto;  // cylinder -> target, epi and homotopy equivalence
};
CylinderFactorization mapping_cylinder(const ChainMap& f);

}  // namespace chx
