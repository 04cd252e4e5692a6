#include "chx/maps.hpp"

#include <algorithm>

namespace chx {

namespace {

// Sparse row collector for the stacked linear systems in this file. Columns
// are allocated in two groups: primary unknowns first, then slack unknowns
// appended on demand (slacks absorb "equality modulo a relation lattice").
struct SystemBuilder {
    int primary = 0;
    int slacks = 0;
    std::vector<std::vector<std::pair<int, Int>>> rows;
    std::vector<Int> rhs;

    explicit SystemBuilder(int primary_vars) : primary(primary_vars) {}

    int new_slack() { return primary + slacks++; }

    void add_row(std::vector<std::pair<int, Int>> coeffs, Int b) {
        rows.push_back(std::move(coeffs));
        rhs.push_back(std::move(b));
    }

    IntMatrix matrix() const {
        IntMatrix A(static_cast<int>(rows.size()), primary + slacks);
        for (size_t i = 0; i < rows.size(); ++i)
            for (const auto& [c, v] : rows[i]) A.at(static_cast<int>(i), c) += v;
        return A;
    }
};

// Append rows forcing (column `col` of the unknown block) to lie in the row
// lattice of L, where entry (r, c) of the block has variable index idx(r, c).
// `expr` lists (variable, coefficient) pairs per block row r; rhs[r] is the
// constant part.
void require_in_lattice(SystemBuilder& sys, const IntMatrix& L,
                        const std::vector<std::vector<std::pair<int, Int>>>& expr,
                        const std::vector<Int>& rhs) {
    int n = static_cast<int>(expr.size());
    std::vector<int> slack(L.rows);
    for (int t = 0; t < L.rows; ++t) slack[t] = sys.new_slack();
    for (int r = 0; r < n; ++r) {
        std::vector<std::pair<int, Int>> row = expr[r];
        for (int t = 0; t < L.rows; ++t)
            if (L.at(t, r) != 0) row.emplace_back(slack[t], L.at(t, r));
        sys.add_row(std::move(row), rhs[r]);
    }
}

}  // namespace

IntMatrix ChainMap::at(int m) const {
    auto it = comps.find(m);
    int r = target.gens(m), c = source.gens(m);
    if (it == comps.end()) return IntMatrix::zero(r, c);
    if (it->second.rows != r || it->second.cols != c)
        throw std::invalid_argument("ChainMap: component shape mismatch at degree " + std::to_string(m));
    return it->second;
}

ChainMap make_chain_map(ChainComplex source, ChainComplex target, std::map<int, IntMatrix> comps) {
    ChainMap f{std::move(source), std::move(target), std::move(comps)};
    for (const auto& [m, mat] : f.comps)
        if (mat.rows != f.target.gens(m) || mat.cols != f.source.gens(m))
            throw std::invalid_argument("make_chain_map: component shape mismatch at degree " +
                                        std::to_string(m));
    return f;
}

ValidationReport validate_chain_map(const ChainMap& f) {
    ValidationReport rep;
    if (!(f.source.ring == f.target.ring)) {
        rep.failures.push_back("source and target over different rings");
        return rep;
    }
    int lo = std::min(f.source.min_deg, f.target.min_deg);
    int hi = std::max(f.source.max_deg, f.target.max_deg);
    for (int m = lo; m <= hi; ++m) {
        if (!is_valid(f.component(m)))
            rep.failures.push_back("component at degree " + std::to_string(m) +
                                   " does not respect relations");
        IntMatrix lhs = f.target.boundary(m).mul(f.at(m));
        IntMatrix rhs = f.at(m - 1).mul(f.source.boundary(m));
        IntMatrix diff = lhs.sub(rhs);
        for (int j = 0; j < diff.cols; ++j)
            if (!is_zero_element(f.target.at(m - 1), diff.col(j))) {
                rep.failures.push_back("square does not commute at degree " + std::to_string(m));
                break;
            }
    }
    return rep;
}

ChainMap identity_chain_map(const ChainComplex& X) {
    std::map<int, IntMatrix> comps;
    for (int m = X.min_deg; m <= X.max_deg; ++m) comps[m] = IntMatrix::identity(X.gens(m));
    return ChainMap{X, X, std::move(comps)};
}

ChainMap zero_chain_map(const ChainComplex& src, const ChainComplex& tgt) {
    return ChainMap{src, tgt, {}};
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
    std::map<int, IntMatrix> comps;
    int lo = std::min(f.source.min_deg, g.source.min_deg);
    int hi = std::max(f.source.max_deg, g.source.max_deg);
    for (int m = lo; m <= hi; ++m) {
        if (f.target.gens(m) != g.source.gens(m))
            throw std::invalid_argument("compose: middle complexes disagree at degree " +
                                        std::to_string(m));
        comps[m] = g.at(m).mul(f.at(m));
    }
    return ChainMap{f.source, g.target, std::move(comps)};
}

bool chain_maps_equal(const ChainMap& f, const ChainMap& g) {
    int lo = std::min(f.source.min_deg, g.source.min_deg);
    int hi = std::max(f.source.max_deg, g.source.max_deg);
    for (int m = lo; m <= hi; ++m) {
        if (f.source.gens(m) != g.source.gens(m) || f.target.gens(m) != g.target.gens(m)) return false;
        if (!maps_equal(f.component(m), g.component(m))) return false;
    }
    return true;
}

bool is_mono(const ChainMap& f) {
    int lo = std::min(f.source.min_deg, f.target.min_deg);
    int hi = std::max(f.source.max_deg, f.target.max_deg);
    for (int m = lo; m <= hi; ++m)
        if (!is_injective_map(f.component(m))) return false;
    return true;
}

bool is_epi(const ChainMap& f) {
    int lo = std::min(f.source.min_deg, f.target.min_deg);
    int hi = std::max(f.source.max_deg, f.target.max_deg);
    for (int m = lo; m <= hi; ++m)
        if (!is_surjective_map(f.component(m))) return false;
    return true;
}

ComplexWithMap kernel_complex(const ChainMap& f) {
    const ChainComplex& X = f.source;
    if (X.comps.empty()) return {X, identity_chain_map(X)};
    std::map<int, SubquotientPart> K;
    for (int m = X.min_deg; m <= X.max_deg; ++m) K[m] = kernel(f.component(m));
    std::vector<Presentation> comps;
    std::vector<IntMatrix> bnds;
    std::map<int, IntMatrix> incl;
    for (int m = X.min_deg; m <= X.max_deg; ++m) {
        comps.push_back(K[m].pres);
        incl[m] = K[m].map.matrix;
    }
    for (int m = X.min_deg + 1; m <= X.max_deg; ++m) {
        ModuleMap pushed = compose(X.boundary_map(m), K[m].map);
        auto lifted = lift_through(pushed, K[m - 1].map);
        if (!lifted) throw std::logic_error("kernel_complex: boundary does not restrict to kernels");
        bnds.push_back(lifted->matrix);
    }
    ChainComplex Kc = make_complex(X.ring, X.min_deg, std::move(comps), std::move(bnds));
    return {Kc, ChainMap{Kc, X, std::move(incl)}};
}

ComplexWithMap image_complex(const ChainMap& f) {
    const ChainComplex& X = f.source;
    if (X.comps.empty()) return {X, ChainMap{X, f.target, {}}};
    std::vector<Presentation> comps;
    std::vector<IntMatrix> bnds;
    std::map<int, IntMatrix> incl;
    for (int m = X.min_deg; m <= X.max_deg; ++m) {
        comps.push_back(image(f.component(m)).pres);  // generated by the source generators
        incl[m] = f.at(m);
    }
    for (int m = X.min_deg + 1; m <= X.max_deg; ++m) bnds.push_back(X.boundary(m));
    ChainComplex I = make_complex(X.ring, X.min_deg, std::move(comps), std::move(bnds));
    return {I, ChainMap{I, f.target, std::move(incl)}};
}

ComplexWithMap cokernel_complex(const ChainMap& f) {
    const ChainComplex& Y = f.target;
    if (Y.comps.empty()) return {Y, identity_chain_map(Y)};
    std::vector<Presentation> comps;
    std::vector<IntMatrix> bnds;
    std::map<int, IntMatrix> proj;
    for (int m = Y.min_deg; m <= Y.max_deg; ++m) {
        comps.push_back(cokernel(f.component(m)).pres);  // same generators, extra relations
        proj[m] = IntMatrix::identity(Y.gens(m));
    }
    for (int m = Y.min_deg + 1; m <= Y.max_deg; ++m) bnds.push_back(Y.boundary(m));
    ChainComplex C = make_complex(Y.ring, Y.min_deg, std::move(comps), std::move(bnds));
    return {C, ChainMap{Y, C, std::move(proj)}};
}

std::optional<Homotopy> nullhomotopy(const ChainMap& f) {
    const ChainComplex& X = f.source;
    const ChainComplex& Y = f.target;

    // Primary unknowns: entries of s_m : X_m -> Y_{m+1} for m in X's window.
    std::map<int, int> off;
    int nvars = 0;
    for (int m = X.min_deg; m <= X.max_deg; ++m) {
        off[m] = nvars;
        nvars += Y.gens(m + 1) * X.gens(m);
    }
    auto svar = [&](int m, int r, int c) { return off.at(m) + r * X.gens(m) + c; };

    SystemBuilder sys(nvars);

    // Homotopy equations: for every degree m and source generator j,
    //   d^Y_{m+1} s_m e_j + s_{m-1} d^X_m e_j == f_m e_j   in Y_m.
    for (int m = X.min_deg; m <= X.max_deg; ++m) {
        int ygens = Y.gens(m);
        if (ygens == 0) continue;
        IntMatrix dY = Y.boundary(m + 1), dX = X.boundary(m);
        IntMatrix fm = f.at(m);
        IntMatrix L = Y.at(m).effective_relations();
        for (int j = 0; j < X.gens(m); ++j) {
            std::vector<std::vector<std::pair<int, Int>>> expr(ygens);
            std::vector<Int> rhs(ygens);
            for (int r = 0; r < ygens; ++r) {
                for (int k = 0; k < Y.gens(m + 1); ++k)
                    if (dY.at(r, k) != 0) expr[r].emplace_back(svar(m, k, j), dY.at(r, k));
                if (X.in_window(m - 1))
                    for (int i = 0; i < X.gens(m - 1); ++i)
                        if (dX.at(i, j) != 0) expr[r].emplace_back(svar(m - 1, r, i), dX.at(i, j));
                rhs[r] = fm.at(r, j);
            }
            require_in_lattice(sys, L, expr, rhs);
        }
    }

    // Well-definedness: s_m must carry every relation of X_m into the
    // relation lattice of Y_{m+1}.
    for (int m = X.min_deg; m <= X.max_deg; ++m) {
        int ygens = Y.gens(m + 1);
        if (ygens == 0 || X.gens(m) == 0) continue;
        IntMatrix R = X.at(m).effective_relations();
        IntMatrix L = Y.at(m + 1).effective_relations();
        for (int t = 0; t < R.rows; ++t) {
            std::vector<std::vector<std::pair<int, Int>>> expr(ygens);
            std::vector<Int> rhs(ygens, Int(0));
            for (int r = 0; r < ygens; ++r)
                for (int j = 0; j < X.gens(m); ++j)
                    if (R.at(t, j) != 0) expr[r].emplace_back(svar(m, r, j), R.at(t, j));
            require_in_lattice(sys, L, expr, rhs);
        }
    }

    auto sol = solve(sys.matrix(), sys.rhs);
    if (!sol) return std::nullopt;

    Homotopy h;
    for (int m = X.min_deg; m <= X.max_deg; ++m) {
        IntMatrix s(Y.gens(m + 1), X.gens(m));
        for (int r = 0; r < s.rows; ++r)
            for (int c = 0; c < s.cols; ++c) s.at(r, c) = (*sol)[svar(m, r, c)];
        h.s[m] = std::move(s);
    }
    if (!homotopy_certifies(f, h)) throw std::logic_error("nullhomotopy: certificate re-check failed");
    return h;
}

bool homotopy_certifies(const ChainMap& f, const Homotopy& h) {
    const ChainComplex& X = f.source;
    const ChainComplex& Y = f.target;
    auto s_at = [&](int m) {
        auto it = h.s.find(m);
        if (it == h.s.end()) return IntMatrix::zero(Y.gens(m + 1), X.gens(m));
        if (it->second.rows != Y.gens(m + 1) || it->second.cols != X.gens(m))
            throw std::invalid_argument("Homotopy: component shape mismatch at degree " +
                                        std::to_string(m));
        return it->second;
    };
    int lo = std::min(X.min_deg, Y.min_deg) - 1, hi = std::max(X.max_deg, Y.max_deg) + 1;
    for (int m = lo; m <= hi; ++m) {
        // each s_m must be a well-defined map X_m -> Y_{m+1}
        if (!is_valid(ModuleMap(X.at(m), Y.at(m + 1), s_at(m)))) return false;
        IntMatrix got = Y.boundary(m + 1).mul(s_at(m)).add(s_at(m - 1).mul(X.boundary(m)));
        IntMatrix diff = got.sub(f.at(m));
        for (int j = 0; j < diff.cols; ++j)
            if (!is_zero_element(Y.at(m), diff.col(j))) return false;
    }
    return true;
}

ModuleMap induced_homology_map(const ChainMap& f, int m) {
    SubquotientPart ZX = cycles(f.source, m), ZY = cycles(f.target, m);
    SubquotientPart BX = boundaries(f.source, m), BY = boundaries(f.target, m);
    auto bx = lift_through(BX.map, ZX.map);
    auto by = lift_through(BY.map, ZY.map);
    if (!bx || !by) throw std::logic_error("induced_homology_map: boundaries not inside cycles");
    Presentation HX = cokernel(*bx).pres, HY = cokernel(*by).pres;
    ModuleMap pushed = compose(f.component(m), ZX.map);
    auto g = lift_through(pushed, ZY.map);
    if (!g) throw std::logic_error("induced_homology_map: image of a cycle is not a cycle");
    ModuleMap out(HX, HY, g->matrix);
    if (!is_valid(out)) throw std::logic_error("induced_homology_map: boundaries not carried to boundaries");
    return out;
}

bool is_quasi_iso(const ChainMap& f) {
    int lo = std::min(f.source.min_deg, f.target.min_deg);
    int hi = std::max(f.source.max_deg, f.target.max_deg);
    for (int m = lo; m <= hi; ++m)
        if (!is_isomorphism(induced_homology_map(f, m))) return false;
    return true;
}

ChainComplex cone(const ChainMap& f) {
    const ChainComplex& X = f.source;
    const ChainComplex& Y = f.target;
    if (X.comps.empty() && Y.comps.empty()) return X;
    int lo = X.comps.empty() ? Y.min_deg
                             : (Y.comps.empty() ? X.min_deg + 1 : std::min(X.min_deg + 1, Y.min_deg));
    int hi = X.comps.empty() ? Y.max_deg
                             : (Y.comps.empty() ? X.max_deg + 1 : std::max(X.max_deg + 1, Y.max_deg));
    std::vector<Presentation> comps;
    std::vector<IntMatrix> bnds;
    for (int m = lo; m <= hi; ++m) comps.push_back(direct_sum(X.at(m - 1), Y.at(m)));
    for (int m = lo + 1; m <= hi; ++m) {
        // (x, y) |-> (-dx, f(x) + dy)
        int rx = X.gens(m - 2), ry = Y.gens(m - 1);
        int cx = X.gens(m - 1), cy = Y.gens(m);
        IntMatrix d(rx + ry, cx + cy);
        IntMatrix dX = X.boundary(m - 1), dY = Y.boundary(m), fm = f.at(m - 1);
        for (int i = 0; i < rx; ++i)
            for (int j = 0; j < cx; ++j) d.at(i, j) = -dX.at(i, j);
        for (int i = 0; i < ry; ++i) {
            for (int j = 0; j < cx; ++j) d.at(rx + i, j) = fm.at(i, j);
            for (int j = 0; j < cy; ++j) d.at(rx + i, cx + j) = dY.at(i, j);
        }
        bnds.push_back(std::move(d));
    }
    return make_complex(X.comps.empty() ? Y.ring : X.ring, lo, std::move(comps), std::move(bnds));
}

bool is_contractible(const ChainComplex& X) { return nullhomotopy(identity_chain_map(X)).has_value(); }

namespace {

// Generators of the lattice of chain maps A -> B, as columns of G in the
// flattened coordinates fvar(m, r, c) = foff[m] + r * gens(A_m) + c.
struct MapLattice {
    std::map<int, int> foff;
    int fvars = 0;
    IntMatrix G = IntMatrix(0, 0);

    int fvar(int m, int r, int c, const ChainComplex& A) const {
        return foff.at(m) + r * A.gens(m) + c;
    }
};

MapLattice chain_map_lattice(const ChainComplex& A, const ChainComplex& B) {
    if (!(A.ring == B.ring)) throw std::invalid_argument("chain map lattice: ring mismatch");

    // Primary unknowns: entries of f_m for m in A's window (outside it every
    // component is forced zero).
    MapLattice lat;
    for (int m = A.min_deg; m <= A.max_deg; ++m) {
        lat.foff[m] = lat.fvars;
        lat.fvars += B.gens(m) * A.gens(m);
    }
    int fvars = lat.fvars;
    auto fvar = [&](int m, int r, int c) { return lat.fvar(m, r, c, A); };

    SystemBuilder sys(fvars);
    for (int m = A.min_deg; m <= A.max_deg; ++m) {
        // commuting square at m: d^B_m f_m - f_{m-1} d^A_m == 0 in B_{m-1}
        int bg = B.gens(m - 1);
        if (bg > 0 && A.gens(m) > 0) {
            IntMatrix dB = B.boundary(m), dA = A.boundary(m);
            IntMatrix L = B.at(m - 1).effective_relations();
            for (int j = 0; j < A.gens(m); ++j) {
                std::vector<std::vector<std::pair<int, Int>>> expr(bg);
                std::vector<Int> rhs(bg, Int(0));
                for (int r = 0; r < bg; ++r) {
                    for (int k = 0; k < B.gens(m); ++k)
                        if (dB.at(r, k) != 0) expr[r].emplace_back(fvar(m, k, j), dB.at(r, k));
                    if (A.in_window(m - 1))
                        for (int i = 0; i < A.gens(m - 1); ++i)
                            if (dA.at(i, j) != 0) expr[r].emplace_back(fvar(m - 1, r, i), -dA.at(i, j));
                }
                require_in_lattice(sys, L, expr, rhs);
            }
        }
        // validity: f_m carries relations of A_m into the lattice of B_m
        if (B.gens(m) > 0 && A.gens(m) > 0) {
            IntMatrix R = A.at(m).effective_relations();
            IntMatrix L = B.at(m).effective_relations();
            for (int t = 0; t < R.rows; ++t) {
                std::vector<std::vector<std::pair<int, Int>>> expr(B.gens(m));
                std::vector<Int> rhs(B.gens(m), Int(0));
                for (int r = 0; r < B.gens(m); ++r)
                    for (int j = 0; j < A.gens(m); ++j)
                        if (R.at(t, j) != 0) expr[r].emplace_back(fvar(m, r, j), R.at(t, j));
                require_in_lattice(sys, L, expr, rhs);
            }
        }
    }
    lat.G = kernel_basis(sys.matrix()).top_rows(fvars);
    return lat;
}

}  // namespace

std::vector<ChainMap> chain_map_basis(const ChainComplex& A, const ChainComplex& B) {
    MapLattice lat = chain_map_lattice(A, B);
    std::vector<ChainMap> out;
    for (int c = 0; c < lat.G.cols; ++c) {
        std::map<int, IntMatrix> comps;
        for (int m = A.min_deg; m <= A.max_deg; ++m) {
            IntMatrix fm(B.gens(m), A.gens(m));
            for (int r = 0; r < fm.rows; ++r)
                for (int j = 0; j < fm.cols; ++j) fm.at(r, j) = lat.G.at(lat.fvar(m, r, j, A), c);
            comps[m] = std::move(fm);
        }
        out.push_back(ChainMap{A, B, std::move(comps)});
    }
    return out;
}

FgAbInvariants homotopy_classes(const ChainComplex& A, const ChainComplex& B) {
    MapLattice lat = chain_map_lattice(A, B);
    const int fvars = lat.fvars;
    const IntMatrix& G = lat.G;
    auto fvar = [&](int m, int r, int c) { return lat.fvar(m, r, c, A); };

    // Homotopy unknowns: entries of s_m : A_m -> B_{m+1}, constrained to be
    // well-defined maps.
    std::map<int, int> soff;
    int svars = 0;
    for (int m = A.min_deg; m <= A.max_deg; ++m) {
        soff[m] = svars;
        svars += B.gens(m + 1) * A.gens(m);
    }
    auto svar = [&](int m, int r, int c) { return soff.at(m) + r * A.gens(m) + c; };
    SystemBuilder ssys(svars);
    for (int m = A.min_deg; m <= A.max_deg; ++m) {
        if (B.gens(m + 1) == 0 || A.gens(m) == 0) continue;
        IntMatrix R = A.at(m).effective_relations();
        IntMatrix L = B.at(m + 1).effective_relations();
        for (int t = 0; t < R.rows; ++t) {
            std::vector<std::vector<std::pair<int, Int>>> expr(B.gens(m + 1));
            std::vector<Int> rhs(B.gens(m + 1), Int(0));
            for (int r = 0; r < B.gens(m + 1); ++r)
                for (int j = 0; j < A.gens(m); ++j)
                    if (R.at(t, j) != 0) expr[r].emplace_back(svar(m, r, j), R.at(t, j));
            require_in_lattice(ssys, L, expr, rhs);
        }
    }
    IntMatrix S = kernel_basis(ssys.matrix()).top_rows(svars);

    // Null lattice generators in f-coordinates: images ds + sd of the valid
    // homotopy generators, plus relation shifts of B per source generator.
    std::vector<std::vector<Int>> null_gens;
    for (int c = 0; c < S.cols; ++c) {
        std::vector<Int> v(fvars, Int(0));
        for (int m = A.min_deg; m <= A.max_deg; ++m) {
            IntMatrix sm(B.gens(m + 1), A.gens(m));
            for (int r = 0; r < sm.rows; ++r)
                for (int j = 0; j < sm.cols; ++j) sm.at(r, j) = S.at(svar(m, r, j), c);
            // contribution d^B_{m+1} s_m to the degree-m block
            IntMatrix up = B.boundary(m + 1).mul(sm);
            for (int r = 0; r < up.rows; ++r)
                for (int j = 0; j < up.cols; ++j) v[fvar(m, r, j)] += up.at(r, j);
            // contribution s_m d^A_{m+1} to the degree-(m+1) block
            if (A.in_window(m + 1)) {
                IntMatrix down = sm.mul(A.boundary(m + 1));
                for (int r = 0; r < down.rows; ++r)
                    for (int j = 0; j < down.cols; ++j) v[fvar(m + 1, r, j)] += down.at(r, j);
            }
        }
        null_gens.push_back(std::move(v));
    }
    for (int m = A.min_deg; m <= A.max_deg; ++m) {
        if (A.gens(m) == 0 || B.gens(m) == 0) continue;
        IntMatrix L = B.at(m).effective_relations();
        for (int t = 0; t < L.rows; ++t)
            for (int j = 0; j < A.gens(m); ++j) {
                std::vector<Int> v(fvars, Int(0));
                for (int r = 0; r < B.gens(m); ++r) v[fvar(m, r, j)] = L.at(t, r);
                null_gens.push_back(std::move(v));
            }
    }

    // Quotient: generators = columns of G, relations = null generators
    // rewritten in those coordinates.
    std::vector<std::vector<Int>> rel_rows;
    for (const auto& n : null_gens) {
        auto x = solve(G, n);
        if (!x) throw std::logic_error("homotopy_classes: null generator outside the chain-map lattice");
        rel_rows.push_back(*x);
    }
    IntMatrix rel(static_cast<int>(rel_rows.size()), G.cols);
    for (size_t i = 0; i < rel_rows.size(); ++i)
        for (int j = 0; j < G.cols; ++j) rel.at(static_cast<int>(i), j) = rel_rows[i][j];
    return invariants(Presentation(Ring::integers(), G.cols, rel));
}

CylinderFactorization mapping_cylinder(const ChainMap& f) {
    const ChainComplex& X = f.source;
    const ChainComplex& Y = f.target;
    int lo = std::min(X.min_deg, Y.min_deg), hi = std::max(X.max_deg + 1, Y.max_deg);
    if (X.comps.empty()) lo = Y.min_deg, hi = Y.max_deg;

    // Cyl_m = X_m (+) X_{m-1} (+) Y_m, d(x, x', y) = (dx + x', -dx', dy - f(x')).
    std::vector<Presentation> comps;
    std::vector<IntMatrix> bnds;
    std::map<int, IntMatrix> into, onto;
    for (int m = lo; m <= hi; ++m)
        comps.push_back(direct_sum(direct_sum(X.at(m), X.at(m - 1)), Y.at(m)));
    for (int m = lo + 1; m <= hi; ++m) {
        int c0 = X.gens(m), c1 = X.gens(m - 1), c2 = Y.gens(m);
        int r0 = X.gens(m - 1), r1 = X.gens(m - 2), r2 = Y.gens(m - 1);
        IntMatrix d(r0 + r1 + r2, c0 + c1 + c2);
        IntMatrix dXm = X.boundary(m), dXm1 = X.boundary(m - 1), dY = Y.boundary(m);
        IntMatrix fm1 = f.at(m - 1);
        for (int i = 0; i < r0; ++i) {
            for (int j = 0; j < c0; ++j) d.at(i, j) = dXm.at(i, j);
            d.at(i, c0 + i) = 1;
        }
        for (int i = 0; i < r1; ++i)
            for (int j = 0; j < c1; ++j) d.at(r0 + i, c0 + j) = -dXm1.at(i, j);
        for (int i = 0; i < r2; ++i) {
            for (int j = 0; j < c1; ++j) d.at(r0 + r1 + i, c0 + j) = -fm1.at(i, j);
            for (int j = 0; j < c2; ++j) d.at(r0 + r1 + i, c0 + c1 + j) = dY.at(i, j);
        }
        bnds.push_back(std::move(d));
    }
    ChainComplex cyl = make_complex(X.comps.empty() ? Y.ring : X.ring, lo, std::move(comps),
                                    std::move(bnds));
    for (int m = lo; m <= hi; ++m) {
        int c0 = X.gens(m), c1 = X.gens(m - 1), c2 = Y.gens(m);
        IntMatrix in(c0 + c1 + c2, c0);
        for (int i = 0; i < c0; ++i) in.at(i, i) = 1;
        into[m] = std::move(in);
        IntMatrix out(c2, c0 + c1 + c2);
        IntMatrix fm = f.at(m);
        for (int i = 0; i < c2; ++i) {
            for (int j = 0; j < c0; ++j) out.at(i, j) = fm.at(i, j);
            out.at(i, c0 + c1 + i) = 1;
        }
        onto[m] = std::move(out);
    }
    return {cyl, ChainMap{X, cyl, std::move(into)}, ChainMap{cyl, Y, std::move(onto)}};
}

}  // namespace chx
