#pragma once

// Bounded chain complexes of presentations: validation, cycles, boundaries,
// homology, exactness, disks and spheres, sub/quotient complexes, free
// complex recognition with disk decomposition, contractibility, size.

#include <map>

#include "chx/fgmod.hpp"

namespace chx {

struct ChainComplex {
    Ring ring;
    int min_deg = 0;
    int max_deg = -1;  // empty window when max_deg < min_deg
    std::vector<Presentation> comps;  // comps[m - min_deg]
    std::vector<IntMatrix> bnds;      // bnds[m - min_deg]: comps[m] -> comps[m-1]; unused at m = min_deg

    static ChainComplex empty(const Ring& r) {
        ChainComplex c;
        c.ring = r;
        return c;
    }

    bool in_window(int m) const { return m >= min_deg && m <= max_deg; }
    // Component at any degree; the zero module outside the window.
    Presentation at(int m) const;
    int gens(int m) const { return at(m).gens; }
    // Boundary matrix comps[m] -> comps[m-1], shaped correctly at the edges.
    IntMatrix boundary(int m) const;
    ModuleMap boundary_map(int m) const { return ModuleMap(at(m), at(m - 1), boundary(m)); }

    int size() const;  // total generator count

    // Drop zero-module components at the window edges (canonical support).
    ChainComplex trimmed() const;
};

// Build from explicit degree-indexed data; validates shapes only (use
// validate() for the mathematical checks).
ChainComplex make_complex(const Ring& ring, int min_deg, std::vector<Presentation> comps,
                          std::vector<IntMatrix> bnds);

struct Element {
    int degree = 0;
    std::vector<Int> coords;
};

struct ValidationReport {
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

ValidationReport validate(const ChainComplex& X);

// Kernel of the boundary leaving degree m / image of the boundary entering
// degree m, each with its inclusion into the component.
SubquotientPart cycles(const ChainComplex& X, int m);
SubquotientPart boundaries(const ChainComplex& X, int m);
FgAbInvariants homology(const ChainComplex& X, int m);
bool is_exact(const ChainComplex& X);

ChainComplex disk(const Ring& ring, int n, const Presentation& M);
ChainComplex sphere(const Ring& ring, int n, const Presentation& M);
ChainComplex direct_sum(const ChainComplex& X, const ChainComplex& Y);

struct Subcomplex {
    ChainComplex ambient;
    std::map<int, ModuleMap> inclusion;  // inclusion[m]: sub component -> ambient component

    ModuleMap inclusion_at(int m) const;  // zero-module inclusion outside the map
    ChainComplex sub() const;             // the subcomplex with induced boundaries
};

ValidationReport validate_subcomplex(const Subcomplex& S);
bool subcomplex_contains(const Subcomplex& S, const Element& x);

// Componentwise cokernels with induced boundaries (projection is the
// identity on generators).
ChainComplex quotient(const ChainComplex& X, const Subcomplex& S);

bool is_free_complex(const ChainComplex& X);

// X isomorphic to the sum over entries of D^{top_degree}(Z^rank); the iso
// certificate per degree maps (cycle basis at m | lifted cycle basis at m-1)
// onto component m.
struct DiskDecomposition {
    std::vector<std::pair<int, int>> disks;  // (top degree, rank), descending degree
    std::map<int, ModuleMap> iso;            // free module -> component, per degree
};
std::optional<DiskDecomposition> disk_decomposition(const ChainComplex& X);

bool is_contractible(const ChainComplex& X);  // implemented in maps.cpp

}  // namespace chx
