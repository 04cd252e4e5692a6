#pragma once

// Extraction of small certified direct summands / subobjects containing a
// given element: for modules, a finitely presented submodule with a
// two-stage presentation certificate; for complexes in the class of exact
// complexes with degreewise n-projective cycles, a subcomplex in the same
// class cut out by a compatible selection of disks across a resolution
// tower. Also: exhaustive filtrations of a complex by iterated extraction.

#include "chx/resolve.hpp"

namespace chx {

// Certificate for the module-level extraction. extracted.map embeds the
// selected-generator submodule X' into the ambient module; quotient is the
// corresponding quotient presentation. B0/B1 index the selected generators
// of the free stages F0/F1 of a free resolution of the ambient module; the
// restricted resolution presents X' and the complementary columns present
// the quotient, each verified short exact against the full resolution.
struct ModuleZigzagCertificate {
    Presentation ambient;
    std::vector<Int> element;
    std::vector<int> B0;  // selected generators of the ambient presentation
    std::vector<int> B1;  // selected relations
    SubquotientPart extracted;  // X' with its inclusion into the ambient
    Presentation quotient;      // ambient / X'
    bool budget_exceeded = false;
};

// Smallest generator-supported submodule containing x, with certificate.
// budget bounds |B0|; exceeding it only sets the flag (the certificate is
// still produced and valid).
ModuleZigzagCertificate zigzag_module(const Presentation& M, const std::vector<Int>& x,
                                      int budget);

// Re-verify a module certificate from scratch: element membership, inclusion
// validity, short-exactness of the selected and complementary rows of the
// resolution, and the quotient presentation.
ValidationReport verify_certificate(const ModuleZigzagCertificate& c);

// Resolution tower of X whose stages are literal disk sums: each stage is a
// direct sum of disk complexes D^{d}(Z)^{r}, assembled from the canonical
// cover construction with the final free kernel converted through its disk
// decomposition. disks[i] lists (top degree, rank) for stage i, degree
// descending, matching the column layout of the stage.
struct DiskTower {
    ResolutionTower tower;
    std::vector<std::vector<std::pair<int, int>>> disks;
};
DiskTower disk_tower(const ChainComplex& X, int n);

// Certificate for the complex-level extraction. selected[i][m] lists the
// selected disk indices of stage i with top degree m (a disk contributes its
// top at m and its bottom at m-1). extracted is the image of the restricted
// stage-0 map, a subcomplex of the ambient complex containing the element;
// sub_tower resolves it by the selected disks and quotient_tower resolves
// ambient/extracted by the complementary disks.
struct ComplexZigzagCertificate {
    ChainComplex ambient;
    Element element;
    int n = 0;
    std::vector<std::map<int, std::vector<int>>> selected;
    Subcomplex extracted;
    ResolutionTower sub_tower;
    ChainComplex quotient;
    ResolutionTower quotient_tower;
    bool budget_exceeded = false;
    std::vector<std::string> audit;  // per-sweep selection sizes when requested
};

// Extract a small subcomplex of X containing x that stays in the class of
// exact complexes with degreewise n-projective cycles, certified by
// compatible disk selections across a resolution tower. Throws
// invalid_argument when X itself is not in the class. budget bounds the
// total number of selected stage-0 disks; exceeding it only sets the flag.
ComplexZigzagCertificate zigzag_complex(const ChainComplex& X, const Element& x, int n,
                                        int budget, bool audit = false);

// Re-verify a complex certificate from scratch: element membership in the
// extracted subcomplex, validity of both towers, class membership of the
// extracted subcomplex and of the ambient complex, and the quotient.
ValidationReport verify_certificate(const ComplexZigzagCertificate& c);

// Exhaustive filtration 0 = X_0 <= X_1 <= ... <= X_t = X by iterated
// extraction: each factor X_i/X_{i-1} starts from the first generator not
// yet absorbed and greedily absorbs further generators while the selected
// stage-0 disk count stays within the budget. stages[i] includes X_{i+1}
// into X; factors[i] certifies the extraction performed on X/X_i.
struct Filtration {
    ChainComplex ambient;
    std::vector<Subcomplex> stages;
    std::vector<ComplexZigzagCertificate> factors;
    bool budget_exceeded = false;
};
Filtration build_filtration(const ChainComplex& X, int n, int budget);

}  // namespace chx
