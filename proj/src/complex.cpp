#include "chx/complex.hpp"

#include <sstream>

namespace chx {

Presentation ChainComplex::at(int m) const {
    if (!in_window(m)) return Presentation::zero(ring);
    return comps[m - min_deg];
}

IntMatrix ChainComplex::boundary(int m) const {
    if (in_window(m) && in_window(m - 1)) return bnds[m - min_deg];
    return IntMatrix::zero(gens(m - 1), gens(m));
}

int ChainComplex::size() const {
    int s = 0;
    for (const Presentation& p : comps) s += p.gens;
    return s;
}

ChainComplex ChainComplex::trimmed() const {
    int lo = min_deg, hi = max_deg;
    while (lo <= hi && is_zero_module(at(lo))) ++lo;
    while (hi >= lo && is_zero_module(at(hi))) --hi;
    if (lo > hi) return ChainComplex::empty(ring);
    std::vector<Presentation> c;
    std::vector<IntMatrix> b;
    for (int m = lo; m <= hi; ++m) c.push_back(at(m));
    for (int m = lo + 1; m <= hi; ++m) b.push_back(boundary(m));
    return make_complex(ring, lo, std::move(c), std::move(b));
}

ChainComplex make_complex(const Ring& ring, int min_deg, std::vector<Presentation> comps,
                          std::vector<IntMatrix> bnds) {
    ChainComplex X;
    X.ring = ring;
    X.min_deg = min_deg;
    X.max_deg = min_deg + static_cast<int>(comps.size()) - 1;
    if (comps.empty()) {
        X.max_deg = min_deg - 1;
        return X;
    }
    if (bnds.size() + 1 != comps.size())
        throw std::invalid_argument("make_complex: need one boundary per adjacent pair");
    X.comps = std::move(comps);
    X.bnds.resize(X.comps.size(), IntMatrix(0, 0));
    X.bnds[0] = IntMatrix::zero(0, X.comps[0].gens);  // unused slot at min_deg
    for (size_t i = 0; i < bnds.size(); ++i) {
        if (bnds[i].rows != X.comps[i].gens || bnds[i].cols != X.comps[i + 1].gens)
            throw std::invalid_argument("make_complex: boundary shape mismatch at degree " +
                                        std::to_string(min_deg + static_cast<int>(i) + 1));
        X.bnds[i + 1] = std::move(bnds[i]);
    }
    return X;
}

ValidationReport validate(const ChainComplex& X) {
    ValidationReport rep;
    for (int m = X.min_deg; m <= X.max_deg; ++m) {
        if (!(X.at(m).ring == X.ring))
            rep.failures.push_back("component ring mismatch at degree " + std::to_string(m));
        ModuleMap d = X.boundary_map(m);
        if (!is_valid(d))
            rep.failures.push_back("boundary at degree " + std::to_string(m) +
                                   " does not respect relations");
        if (X.in_window(m - 1) || X.in_window(m)) {
            IntMatrix dd = X.boundary(m - 1).mul(X.boundary(m));
            for (int j = 0; j < dd.cols; ++j) {
                if (!is_zero_element(X.at(m - 2), dd.col(j))) {
                    rep.failures.push_back("boundary composite nonzero at degree " + std::to_string(m));
                    break;
                }
            }
        }
    }
    return rep;
}

SubquotientPart cycles(const ChainComplex& X, int m) { return kernel(X.boundary_map(m)); }

SubquotientPart boundaries(const ChainComplex& X, int m) { return image(X.boundary_map(m + 1)); }

FgAbInvariants homology(const ChainComplex& X, int m) {
    SubquotientPart Z = cycles(X, m), B = boundaries(X, m);
    auto incl = lift_through(B.map, Z.map);
    if (!incl) throw std::logic_error("homology: boundaries not inside cycles");
    return invariants(cokernel(*incl).pres);
}

bool is_exact(const ChainComplex& X) {
    for (int m = X.min_deg; m <= X.max_deg; ++m)
        if (!homology(X, m).is_trivial()) return false;
    return true;
}

ChainComplex disk(const Ring& ring, int n, const Presentation& M) {
    return make_complex(ring, n - 1, {M, M}, {IntMatrix::identity(M.gens)});
}

ChainComplex sphere(const Ring& ring, int n, const Presentation& M) {
    return make_complex(ring, n, {M}, {});
}

ChainComplex direct_sum(const ChainComplex& X, const ChainComplex& Y) {
    if (!(X.ring == Y.ring)) throw std::invalid_argument("direct_sum: ring mismatch");
    if (X.comps.empty()) return Y;
    if (Y.comps.empty()) return X;
    int lo = std::min(X.min_deg, Y.min_deg), hi = std::max(X.max_deg, Y.max_deg);
    std::vector<Presentation> comps;
    std::vector<IntMatrix> bnds;
    for (int m = lo; m <= hi; ++m) comps.push_back(direct_sum(X.at(m), Y.at(m)));
    for (int m = lo + 1; m <= hi; ++m) {
        IntMatrix a = X.boundary(m), b = Y.boundary(m);
        IntMatrix blk(a.rows + b.rows, a.cols + b.cols);
        for (int i = 0; i < a.rows; ++i)
            for (int j = 0; j < a.cols; ++j) blk.at(i, j) = a.at(i, j);
        for (int i = 0; i < b.rows; ++i)
            for (int j = 0; j < b.cols; ++j) blk.at(a.rows + i, a.cols + j) = b.at(i, j);
        bnds.push_back(std::move(blk));
    }
    return make_complex(X.ring, lo, std::move(comps), std::move(bnds));
}

ModuleMap Subcomplex::inclusion_at(int m) const {
    auto it = inclusion.find(m);
    if (it != inclusion.end()) return it->second;
    Presentation z = Presentation::zero(ambient.ring);
    return ModuleMap(z, ambient.at(m), IntMatrix::zero(ambient.gens(m), 0));
}

ChainComplex Subcomplex::sub() const {
    if (ambient.comps.empty()) return ambient;
    std::vector<Presentation> comps;
    std::vector<IntMatrix> bnds;
    for (int m = ambient.min_deg; m <= ambient.max_deg; ++m) comps.push_back(inclusion_at(m).source);
    for (int m = ambient.min_deg + 1; m <= ambient.max_deg; ++m) {
        ModuleMap im = inclusion_at(m), im1 = inclusion_at(m - 1);
        ModuleMap pushed = compose(ambient.boundary_map(m), im);
        auto lifted = lift_through(pushed, im1);
        if (!lifted) throw std::invalid_argument("Subcomplex: boundaries leave the selected spans");
        bnds.push_back(lifted->matrix);
    }
    return make_complex(ambient.ring, ambient.min_deg, std::move(comps), std::move(bnds)).trimmed();
}

ValidationReport validate_subcomplex(const Subcomplex& S) {
    ValidationReport rep;
    for (const auto& [m, incl] : S.inclusion) {
        if (!S.ambient.in_window(m) && incl.source.gens > 0) {
            rep.failures.push_back("nonzero inclusion outside ambient window at degree " +
                                   std::to_string(m));
            continue;
        }
        if (incl.target.gens != S.ambient.gens(m)) {
            rep.failures.push_back("inclusion target mismatch at degree " + std::to_string(m));
            continue;
        }
        if (!is_valid(incl)) rep.failures.push_back("invalid inclusion at degree " + std::to_string(m));
        else if (!is_injective_map(incl))
            rep.failures.push_back("inclusion not injective at degree " + std::to_string(m));
    }
    for (const auto& [m, incl] : S.inclusion) {
        // boundaries of selected elements stay in the selected span below
        IntMatrix pushed = S.ambient.boundary(m).mul(incl.matrix);
        ModuleMap below = S.inclusion_at(m - 1);
        for (int j = 0; j < pushed.cols; ++j) {
            if (!lift_element(below, pushed.col(j))) {
                rep.failures.push_back("boundary escapes subcomplex at degree " + std::to_string(m));
                break;
            }
        }
    }
    return rep;
}

bool subcomplex_contains(const Subcomplex& S, const Element& x) {
    return lift_element(S.inclusion_at(x.degree), x.coords).has_value();
}

ChainComplex quotient(const ChainComplex& X, const Subcomplex& S) {
    if (X.comps.empty()) return X;
    std::vector<Presentation> comps;
    std::vector<IntMatrix> bnds;
    for (int m = X.min_deg; m <= X.max_deg; ++m) {
        IntMatrix rel = X.at(m).relations.vstack(S.inclusion_at(m).matrix.transpose());
        comps.push_back(Presentation(X.ring, X.gens(m), rel));
    }
    for (int m = X.min_deg + 1; m <= X.max_deg; ++m) bnds.push_back(X.boundary(m));
    return make_complex(X.ring, X.min_deg, std::move(comps), std::move(bnds));
}

bool is_free_complex(const ChainComplex& X) {
    if (!X.ring.is_z()) return false;
    if (!is_exact(X)) return false;
    for (int m = X.min_deg; m <= X.max_deg; ++m)
        if (!invariants(cycles(X, m).pres).is_free()) return false;
    return true;
}

namespace {

// Columns forming a basis of the free module presented by `pres`, expressed
// through the inclusion `incl` in ambient coordinates. pres must be free.
IntMatrix free_basis_columns(const SubquotientPart& part) {
    const Presentation& pres = part.pres;
    SnfResult s = snf(pres.effective_relations());
    std::vector<std::vector<Int>> cols;
    for (int i = 0; i < pres.gens; ++i) {
        bool free_idx = i >= static_cast<int>(s.d.size()) || s.d[i] == 0;
        if (!free_idx) continue;
        cols.push_back(s.V.row(i));  // basis of the quotient in pres coords
    }
    IntMatrix B = from_columns(pres.gens, cols);
    return part.map.matrix.mul(B);
}

}  // namespace

std::optional<DiskDecomposition> disk_decomposition(const ChainComplex& X) {
    if (!is_free_complex(X)) return std::nullopt;
    DiskDecomposition out;
    std::map<int, IntMatrix> cycle_basis;  // per degree, ambient columns
    for (int m = X.min_deg - 1; m <= X.max_deg; ++m) cycle_basis[m] = free_basis_columns(cycles(X, m));
    for (int m = X.max_deg; m >= X.min_deg; --m) {
        const IntMatrix& zb = cycle_basis[m];
        if (zb.cols > 0) out.disks.emplace_back(m + 1, zb.cols);
        // section: lift the cycle basis one degree down through the boundary
        const IntMatrix& below = cycle_basis[m - 1];
        std::vector<std::vector<Int>> cols;
        for (int j = 0; j < zb.cols; ++j) cols.push_back(zb.col(j));
        IntMatrix L = X.at(m - 1).effective_relations();
        IntMatrix dm = X.boundary(m);
        for (int j = 0; j < below.cols; ++j) {
            auto sol = solve(dm.hstack(L.transpose()), below.col(j));
            if (!sol) throw std::logic_error("disk_decomposition: exactness lift failed");
            cols.push_back(std::vector<Int>(sol->begin(), sol->begin() + X.gens(m)));
        }
        ModuleMap iso(Presentation::free_module(X.ring, static_cast<int>(cols.size())), X.at(m),
                      from_columns(X.gens(m), cols));
        if (!is_isomorphism(iso)) throw std::logic_error("disk_decomposition: certificate not an iso");
        out.iso[m] = std::move(iso);
    }
    return out;
}

}  // namespace chx
