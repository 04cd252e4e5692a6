#include "chx/fgmod.hpp"

#include <sstream>

namespace chx {

IntMatrix Presentation::effective_relations() const {
    if (ring.is_z()) return relations;
    return relations.vstack(IntMatrix::identity(gens).scaled(ring.m));
}

Int FgAbInvariants::order() const {
    if (free_rank > 0) return 0;
    Int o = 1;
    for (const Int& t : torsion) o *= t;
    return o;
}

std::string FgAbInvariants::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < free_rank; ++i) {
        os << (first ? "" : " + ") << "Z";
        first = false;
    }
    for (const Int& t : torsion) {
        os << (first ? "" : " + ") << "Z/" << t.get_str();
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

FgAbInvariants invariants(const Presentation& M) {
    SnfResult s = snf(M.effective_relations());
    FgAbInvariants r;
    int nonzero = 0;
    for (const Int& d : s.d) {
        if (d == 0) continue;
        ++nonzero;
        if (d >= 2) r.torsion.push_back(d);
    }
    r.free_rank = M.gens - nonzero;
    return r;
}

bool is_zero_module(const Presentation& M) { return invariants(M).is_trivial(); }

bool is_zero_element(const Presentation& M, const std::vector<Int>& v) {
    return in_row_lattice(M.effective_relations(), v);
}

bool elements_equal(const Presentation& M, const std::vector<Int>& a, const std::vector<Int>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("elements_equal: size mismatch");
    std::vector<Int> d(a.size());
    for (size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
    return is_zero_element(M, d);
}

bool is_valid(const ModuleMap& f) {
    if (!(f.source.ring == f.target.ring)) return false;
    IntMatrix srel = f.source.effective_relations();
    for (int i = 0; i < srel.rows; ++i) {
        std::vector<Int> pushed = f.matrix.apply(srel.row(i));
        if (!is_zero_element(f.target, pushed)) return false;
    }
    return true;
}

bool maps_equal(const ModuleMap& f, const ModuleMap& g) {
    if (f.matrix.rows != g.matrix.rows || f.matrix.cols != g.matrix.cols) return false;
    for (int j = 0; j < f.matrix.cols; ++j) {
        if (!elements_equal(f.target, f.matrix.col(j), g.matrix.col(j))) return false;
    }
    return true;
}

bool is_zero_map(const ModuleMap& f) {
    for (int j = 0; j < f.matrix.cols; ++j)
        if (!is_zero_element(f.target, f.matrix.col(j))) return false;
    return true;
}

ModuleMap identity_map(const Presentation& M) {
    return ModuleMap(M, M, IntMatrix::identity(M.gens));
}

ModuleMap zero_map(const Presentation& src, const Presentation& tgt) {
    return ModuleMap(src, tgt, IntMatrix::zero(tgt.gens, src.gens));
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
    if (f.target.gens != g.source.gens) throw std::invalid_argument("compose: shape mismatch");
    return ModuleMap(f.source, g.target, g.matrix.mul(f.matrix));
}

SubquotientPart submodule(const Presentation& ambient, const IntMatrix& W) {
    if (W.rows != ambient.gens) throw std::invalid_argument("submodule: generator shape mismatch");
    IntMatrix L = ambient.effective_relations();
    // relations among the W-columns: {c : W c lies in the relation lattice}
    IntMatrix K = kernel_basis(W.hstack(L.transpose().negated()));
    IntMatrix rel = K.top_rows(W.cols).transpose();  // rows are relations
    Presentation pres(ambient.ring, W.cols, rel);
    return {pres, ModuleMap(pres, ambient, W)};
}

namespace {

// Lattice {x : f(x) = 0 in target}, as generator columns in source coords.
IntMatrix kernel_lattice(const ModuleMap& f) {
    IntMatrix L = f.target.effective_relations();
    IntMatrix K = kernel_basis(f.matrix.hstack(L.transpose().negated()));
    return K.top_rows(f.source.gens);
}

}  // namespace

SubquotientPart kernel(const ModuleMap& f) {
    return submodule(f.source, kernel_lattice(f));
}

SubquotientPart image(const ModuleMap& f) {
    // Image is generated by the images of the source generators; its
    // relations are the full preimage lattice of the target relations.
    IntMatrix rel = kernel_lattice(f).transpose();
    Presentation pres(f.target.ring, f.source.gens, rel);
    return {pres, ModuleMap(pres, f.target, f.matrix)};
}

SubquotientPart cokernel(const ModuleMap& f) {
    IntMatrix rel = f.target.relations.vstack(f.matrix.transpose());
    Presentation pres(f.target.ring, f.target.gens, rel);
    return {pres, ModuleMap(f.target, pres, IntMatrix::identity(f.target.gens))};
}

std::optional<std::vector<Int>> lift_element(const ModuleMap& incl, const std::vector<Int>& v) {
    IntMatrix L = incl.target.effective_relations();
    auto sol = solve(incl.matrix.hstack(L.transpose()), v);
    if (!sol) return std::nullopt;
    return std::vector<Int>(sol->begin(), sol->begin() + incl.source.gens);
}

std::optional<ModuleMap> lift_through(const ModuleMap& f, const ModuleMap& incl) {
    if (f.target.gens != incl.target.gens) throw std::invalid_argument("lift_through: target mismatch");
    std::vector<std::vector<Int>> cols;
    for (int j = 0; j < f.matrix.cols; ++j) {
        auto c = lift_element(incl, f.matrix.col(j));
        if (!c) return std::nullopt;
        cols.push_back(std::move(*c));
    }
    return ModuleMap(f.source, incl.source, from_columns(incl.source.gens, cols));
}

bool is_injective_map(const ModuleMap& f) { return invariants(kernel(f).pres).is_trivial(); }

bool is_surjective_map(const ModuleMap& f) { return invariants(cokernel(f).pres).is_trivial(); }

bool is_isomorphism(const ModuleMap& f) { return is_injective_map(f) && is_surjective_map(f); }

bool submodule_contains(const Presentation& ambient, const IntMatrix& W, const std::vector<Int>& w) {
    IntMatrix L = ambient.effective_relations();
    return solve(W.hstack(L.transpose()), w).has_value();
}

bool exact_at(const ModuleMap& f, const ModuleMap& g) {
    if (f.target.gens != g.source.gens) throw std::invalid_argument("exact_at: not composable");
    if (!is_zero_map(compose(g, f))) return false;  // im f inside ker g
    SubquotientPart K = kernel(g);
    for (int j = 0; j < K.map.matrix.cols; ++j) {
        if (!submodule_contains(f.target, f.matrix, K.map.matrix.col(j))) return false;
    }
    return true;
}

bool is_short_exact(const ModuleMap& f, const ModuleMap& g) {
    return is_injective_map(f) && is_surjective_map(g) && exact_at(f, g);
}

Presentation direct_sum(const Presentation& M, const Presentation& N) {
    if (!(M.ring == N.ring)) throw std::invalid_argument("direct_sum: ring mismatch");
    IntMatrix rel(M.relations.rows + N.relations.rows, M.gens + N.gens);
    for (int i = 0; i < M.relations.rows; ++i)
        for (int j = 0; j < M.gens; ++j) rel.at(i, j) = M.relations.at(i, j);
    for (int i = 0; i < N.relations.rows; ++i)
        for (int j = 0; j < N.gens; ++j) rel.at(M.relations.rows + i, M.gens + j) = N.relations.at(i, j);
    return Presentation(M.ring, M.gens + N.gens, rel);
}

ModuleMap inclusion_left(const Presentation& M, const Presentation& N) {
    Presentation S = direct_sum(M, N);
    IntMatrix m(S.gens, M.gens);
    for (int i = 0; i < M.gens; ++i) m.at(i, i) = 1;
    return ModuleMap(M, S, m);
}

ModuleMap inclusion_right(const Presentation& M, const Presentation& N) {
    Presentation S = direct_sum(M, N);
    IntMatrix m(S.gens, N.gens);
    for (int i = 0; i < N.gens; ++i) m.at(M.gens + i, i) = 1;
    return ModuleMap(N, S, m);
}

ModuleMap projection_left(const Presentation& M, const Presentation& N) {
    Presentation S = direct_sum(M, N);
    IntMatrix m(M.gens, S.gens);
    for (int i = 0; i < M.gens; ++i) m.at(i, i) = 1;
    return ModuleMap(S, M, m);
}

ModuleMap projection_right(const Presentation& M, const Presentation& N) {
    Presentation S = direct_sum(M, N);
    IntMatrix m(N.gens, S.gens);
    for (int i = 0; i < N.gens; ++i) m.at(i, M.gens + i) = 1;
    return ModuleMap(S, N, m);
}

FgAbInvariants hom_invariants(const Presentation& M, const Presentation& N) {
    if (!(M.ring == N.ring)) throw std::invalid_argument("hom_invariants: ring mismatch");
    FgAbInvariants a = invariants(M), b = invariants(N);
    // Hom(Z, Z) = Z; Hom(Z, Z/t) = Z/t; Hom(Z/s, Z) = 0; Hom(Z/s, Z/t) = Z/gcd.
    std::vector<Int> tors;
    for (int i = 0; i < a.free_rank; ++i)
        for (const Int& t : b.torsion) tors.push_back(t);
    for (const Int& s : a.torsion)
        for (const Int& t : b.torsion) tors.push_back(gcd(s, t));
    IntMatrix rel(static_cast<int>(tors.size()), static_cast<int>(tors.size()));
    for (size_t i = 0; i < tors.size(); ++i) rel.at(static_cast<int>(i), static_cast<int>(i)) = tors[i];
    FgAbInvariants r = invariants(Presentation(Ring::integers(), static_cast<int>(tors.size()), rel));
    r.free_rank += a.free_rank * b.free_rank;
    return r;
}

Presentation tensor_mod(const Presentation& M, const Presentation& N) {
    if (!(M.ring == N.ring)) throw std::invalid_argument("tensor_mod: ring mismatch");
    const int g = M.gens * N.gens;
    auto idx = [&](int i, int j) { return i * N.gens + j; };
    std::vector<std::vector<Int>> rows;
    for (int r = 0; r < M.relations.rows; ++r)
        for (int j = 0; j < N.gens; ++j) {
            std::vector<Int> row(g);
            for (int i = 0; i < M.gens; ++i) row[idx(i, j)] = M.relations.at(r, i);
            rows.push_back(std::move(row));
        }
    for (int r = 0; r < N.relations.rows; ++r)
        for (int i = 0; i < M.gens; ++i) {
            std::vector<Int> row(g);
            for (int j = 0; j < N.gens; ++j) row[idx(i, j)] = N.relations.at(r, j);
            rows.push_back(std::move(row));
        }
    IntMatrix rel(static_cast<int>(rows.size()), g);
    for (size_t r = 0; r < rows.size(); ++r)
        for (int c = 0; c < g; ++c) rel.at(static_cast<int>(r), c) = rows[r][c];
    return Presentation(M.ring, g, rel);
}

Presentation power(const Presentation& N, int k) {
    Presentation r = Presentation::zero(N.ring);
    for (int i = 0; i < k; ++i) r = direct_sum(r, N);
    return r;
}

ModuleMap power_map(const IntMatrix& T, const Presentation& N) {
    Presentation src = power(N, T.cols), tgt = power(N, T.rows);
    const int h = N.gens;
    IntMatrix m(tgt.gens, src.gens);
    for (int i = 0; i < T.rows; ++i)
        for (int j = 0; j < T.cols; ++j) {
            if (T.at(i, j) == 0) continue;
            for (int c = 0; c < h; ++c) m.at(i * h + c, j * h + c) = T.at(i, j);
        }
    return ModuleMap(src, tgt, m);
}

SubquotientPart homology_subquotient(const ModuleMap& alpha, const ModuleMap& beta) {
    if (alpha.target.gens != beta.source.gens)
        throw std::invalid_argument("homology_subquotient: not composable");
    SubquotientPart K = kernel(beta);
    auto gamma = lift_through(alpha, K.map);
    if (!gamma) throw std::invalid_argument("homology_subquotient: im(alpha) not inside ker(beta)");
    return cokernel(*gamma);
}

FgAbInvariants homology_invariants(const ModuleMap& alpha, const ModuleMap& beta) {
    return invariants(homology_subquotient(alpha, beta).pres);
}

namespace {

// Truncated free resolution over the ring: F2 --d2--> F1 --d1--> F0 -> M.
// Over Z: d2 empty (genuine length-1 resolution). Over Z/m: F1 is free on
// the effective relations and d2 generates their kernel mod m.
struct RingResolution {
    IntMatrix d1;  // f0 x f1
    IntMatrix d2;  // f1 x f2
};

RingResolution ring_resolution(const Presentation& M) {
    if (M.ring.is_z()) {
        IntMatrix d1 = lattice_row_basis(M.relations).transpose();
        return {d1, IntMatrix(d1.cols, 0)};
    }
    IntMatrix d1 = M.effective_relations().transpose();
    IntMatrix d2 = kernel_basis(d1, M.ring.m);
    return {d1, d2};
}

}  // namespace

FgAbInvariants ext1(const Presentation& M, const Presentation& N) {
    if (!(M.ring == N.ring)) throw std::invalid_argument("ext1: ring mismatch");
    RingResolution r = ring_resolution(M);
    // Hom(F0,N) -> Hom(F1,N) -> Hom(F2,N); Ext^1 = ker / im.
    ModuleMap alpha = power_map(r.d1.transpose(), N);
    ModuleMap beta = power_map(r.d2.transpose(), N);
    return homology_invariants(alpha, beta);
}

FgAbInvariants tor1(const Presentation& M, const Presentation& N) {
    if (!(M.ring == N.ring)) throw std::invalid_argument("tor1: ring mismatch");
    RingResolution r = ring_resolution(M);
    // F2 (x) N -> F1 (x) N -> F0 (x) N; Tor_1 = ker / im.
    ModuleMap alpha = power_map(r.d2, N);
    ModuleMap beta = power_map(r.d1, N);
    return homology_invariants(alpha, beta);
}

bool is_projective(const Presentation& M) {
    FgAbInvariants inv = invariants(M);
    if (M.ring.is_z()) return inv.torsion.empty();
    // Z/d is projective over Z/m exactly when d and m/d are coprime (then
    // Z/d is a ring direct factor of Z/m).
    for (const Int& d : inv.torsion) {
        if (M.ring.m % d != 0) return false;
        if (gcd(d, M.ring.m / d) != 1) return false;
    }
    return true;
}

Pd pd(const Presentation& M) {
    if (M.ring.is_z()) {
        return Pd{true, invariants(M).torsion.empty() ? 0 : 1, ""};
    }
    if (is_projective(M)) return Pd{true, 0, ""};
    return Pd{false, 0, "non-projective f.g. modules over Z/m have periodic syzygies; pd is infinite"};
}

ResolutionData free_resolution(const Presentation& M) {
    if (!M.ring.is_z()) throw std::invalid_argument("free_resolution: ring must be Z");
    IntMatrix boundary = lattice_row_basis(M.relations).transpose();
    return ResolutionData{M, M.gens, boundary.cols, boundary};
}

}  // namespace chx
