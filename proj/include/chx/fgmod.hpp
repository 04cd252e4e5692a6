#pragma once

// Finitely generated modules over Z or Z/m as presentations (generators +
// relation matrix; the module is the cokernel), with morphisms, kernels,
// cokernels, images, Hom, tensor, Ext^1, Tor_1, projectivity and projective
// dimension. Z/m is handled as Z with the extra relations m*e_i; m need not
// be prime.

#include "chx/exact.hpp"

namespace chx {

struct Ring {
    enum class Kind { Z, Zmod } kind = Kind::Z;
    Int m;  // modulus, >= 2 when Zmod

    static Ring integers() { return Ring{Kind::Z, 0}; }
    static Ring zmod(Int mm) {
        if (mm < 2) throw std::invalid_argument("Ring: modulus must be >= 2");
        return Ring{Kind::Zmod, std::move(mm)};
    }
    bool is_z() const { return kind == Kind::Z; }
    std::optional<Int> modulus() const {
        if (kind == Kind::Zmod) return m;
        return std::nullopt;
    }
    bool operator==(const Ring& o) const { return kind == o.kind && (is_z() || m == o.m); }
};

struct Presentation {
    Ring ring;
    int gens = 0;
    IntMatrix relations;  // rows are relations in the generators

    Presentation() : relations(0, 0) {}
    Presentation(Ring r, int g, IntMatrix rel) : ring(std::move(r)), gens(g), relations(std::move(rel)) {
        if (relations.cols != gens) throw std::invalid_argument("Presentation: relations.cols != gens");
    }
    static Presentation free_module(const Ring& r, int g) { return Presentation(r, g, IntMatrix(0, g)); }
    static Presentation zero(const Ring& r) { return free_module(r, 0); }
    static Presentation cyclic(const Ring& r, const Int& d) { return Presentation(r, 1, IntMatrix(1, 1, {d})); }

    // Relation matrix including m*e_i rows for Zmod; the Z-lattice of
    // relations among the generators.
    IntMatrix effective_relations() const;
};

struct FgAbInvariants {
    int free_rank = 0;
    std::vector<Int> torsion;  // divisibility chain, each >= 2

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    bool is_free() const { return torsion.empty(); }
    // Group order; 0 encodes infinite.
    Int order() const;
    bool operator==(const FgAbInvariants& o) const = default;
    std::string to_string() const;
};

struct ModuleMap {
    Presentation source, target;
    IntMatrix matrix;  // target.gens x source.gens

    ModuleMap() : matrix(0, 0) {}
    ModuleMap(Presentation s, Presentation t, IntMatrix m)
        : source(std::move(s)), target(std::move(t)), matrix(std::move(m)) {
        if (matrix.rows != target.gens || matrix.cols != source.gens)
            throw std::invalid_argument("ModuleMap: matrix shape mismatch");
    }
};

// --- basic queries ------------------------------------------------------

FgAbInvariants invariants(const Presentation& M);
bool is_zero_module(const Presentation& M);
// Is v (coords in generators) the zero element of M?
bool is_zero_element(const Presentation& M, const std::vector<Int>& v);
bool elements_equal(const Presentation& M, const std::vector<Int>& a, const std::vector<Int>& b);

// Does f carry every source relation into the target relation lattice?
bool is_valid(const ModuleMap& f);
bool maps_equal(const ModuleMap& f, const ModuleMap& g);  // matrix equality modulo target relations
bool is_zero_map(const ModuleMap& f);

ModuleMap identity_map(const Presentation& M);
ModuleMap zero_map(const Presentation& src, const Presentation& tgt);
ModuleMap compose(const ModuleMap& g, const ModuleMap& f);  // g after f

// --- sub/quotient structure --------------------------------------------

struct SubquotientPart {
    Presentation pres;
    ModuleMap map;  // inclusion (pres -> ambient) or projection (ambient -> pres)
};

// Submodule of `ambient` generated by the columns of W, with inclusion map.
SubquotientPart submodule(const Presentation& ambient, const IntMatrix& W);

SubquotientPart kernel(const ModuleMap& f);    // inclusion into source
SubquotientPart image(const ModuleMap& f);     // inclusion into target
SubquotientPart cokernel(const ModuleMap& f);  // projection from target

// Solve incl * c == v in the target of incl; c expresses v in the source
// generators of incl. Used for element membership and map restriction.
std::optional<std::vector<Int>> lift_element(const ModuleMap& incl, const std::vector<Int>& v);
// Factor f (A -> C) through incl (B -> C): g with incl o g == f.
std::optional<ModuleMap> lift_through(const ModuleMap& f, const ModuleMap& incl);

bool is_injective_map(const ModuleMap& f);
bool is_surjective_map(const ModuleMap& f);
bool is_isomorphism(const ModuleMap& f);

// Is w (element of the ambient) inside the submodule generated by cols of W?
bool submodule_contains(const Presentation& ambient, const IntMatrix& W, const std::vector<Int>& w);

// Exactness of A --f--> B --g--> C at B (im f = ker g), and short exactness.
bool exact_at(const ModuleMap& f, const ModuleMap& g);
bool is_short_exact(const ModuleMap& f, const ModuleMap& g);

// --- constructions ------------------------------------------------------

Presentation direct_sum(const Presentation& M, const Presentation& N);
ModuleMap inclusion_left(const Presentation& M, const Presentation& N);
ModuleMap inclusion_right(const Presentation& M, const Presentation& N);
ModuleMap projection_left(const Presentation& M, const Presentation& N);
ModuleMap projection_right(const Presentation& M, const Presentation& N);

FgAbInvariants hom_invariants(const Presentation& M, const Presentation& N);
Presentation tensor_mod(const Presentation& M, const Presentation& N);

// N^k with block coordinates, plus the map N^{cols(T)} -> N^{rows(T)} acting
// by T between the copies (identity inside each copy). Used for Hom/tensor
// against free resolutions and disk sums.
Presentation power(const Presentation& N, int k);
ModuleMap power_map(const IntMatrix& T, const Presentation& N);

// ker(beta)/im(alpha) for composable alpha: A->B, beta: B->C with beta o
// alpha = 0; returns the subquotient presentation (projection from ker) and
// its invariants.
SubquotientPart homology_subquotient(const ModuleMap& alpha, const ModuleMap& beta);
FgAbInvariants homology_invariants(const ModuleMap& alpha, const ModuleMap& beta);

FgAbInvariants ext1(const Presentation& M, const Presentation& N);
FgAbInvariants tor1(const Presentation& M, const Presentation& N);

bool is_projective(const Presentation& M);

struct Pd {
    bool finite = true;
    int value = 0;  // meaningful when finite
    std::string note;
    bool operator==(const Pd& o) const { return finite == o.finite && (!finite || value == o.value); }
};
Pd pd(const Presentation& M);

// 0 -> F1 --boundary--> F0 -> M -> 0 with F0 free on M's generators and F1
// free on a basis of the relation lattice (ring Z only).
struct ResolutionData {
    Presentation target;
    int f0_rank = 0;
    int f1_rank = 0;
    IntMatrix boundary;  // f0_rank x f1_rank, columns = relation-lattice basis
};
ResolutionData free_resolution(const Presentation& M);

}  // namespace chx
