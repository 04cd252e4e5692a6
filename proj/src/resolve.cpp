#include "chx/resolve.hpp"

namespace chx {

namespace {

void require_ring_z(const Ring& r, const char* who) {
    if (!r.is_z()) throw std::invalid_argument(std::string(who) + ": only implemented over Z");
}

}  // namespace

ComplexCover projective_cover_complex(const ChainComplex& X) {
    require_ring_z(X.ring, "projective_cover_complex");
    if (X.comps.empty()) return {X, identity_chain_map(X)};
    int lo = X.min_deg - 1, hi = X.max_deg;
    std::vector<Presentation> comps;
    std::vector<IntMatrix> bnds;
    std::map<int, IntMatrix> epi;
    // P_m = (tops at m | bottoms of the degree-(m+1) disks)
    for (int m = lo; m <= hi; ++m)
        comps.push_back(Presentation::free_module(X.ring, X.gens(m) + X.gens(m + 1)));
    for (int m = lo + 1; m <= hi; ++m) {
        int g = X.gens(m);
        IntMatrix d(X.gens(m - 1) + g, g + X.gens(m + 1));
        for (int i = 0; i < g; ++i) d.at(X.gens(m - 1) + i, i) = 1;  // top -> its bottom
        bnds.push_back(std::move(d));
    }
    ChainComplex P = make_complex(X.ring, lo, std::move(comps), std::move(bnds));
    for (int m = lo; m <= hi; ++m) {
        // tops hit the generators, bottoms go through the boundary above
        epi[m] = IntMatrix::identity(X.gens(m)).hstack(X.boundary(m + 1));
    }
    ChainMap e{P, X, std::move(epi)};
    return {P, std::move(e)};
}

ResolutionTower resolve_complex(const ChainComplex& X, int max_len) {
    require_ring_z(X.ring, "resolve_complex");
    if (max_len < 0) throw std::invalid_argument("resolve_complex: negative max_len");
    ResolutionTower t;
    t.target = X;
    if (is_free_complex(X)) {
        t.stages.push_back({X, identity_chain_map(X)});
        t.complete = true;
        return t;
    }
    ComplexCover c = projective_cover_complex(X);
    t.stages.push_back({c.P, c.epi});
    ComplexWithMap K = kernel_complex(c.epi);
    for (int i = 1;; ++i) {
        if (K.complex.trimmed().size() == 0) {
            t.complete = true;
            return t;
        }
        if (is_free_complex(K.complex)) {
            if (i <= max_len) {
                t.stages.push_back(K);
                t.complete = true;
            } else {
                t.residual = K.complex;
            }
            return t;
        }
        if (i >= max_len) {
            t.residual = K.complex;
            return t;
        }
        ComplexCover ci = projective_cover_complex(K.complex);
        t.stages.push_back({ci.P, compose(K.map, ci.epi)});
        K = kernel_complex(ci.epi);
    }
}

ValidationReport validate_tower(const ResolutionTower& t) {
    ValidationReport rep;
    if (!t.complete) {
        rep.failures.push_back("tower incomplete (residual kernel not disk-decomposable)");
        return rep;
    }
    if (t.stages.empty()) {
        if (t.target.trimmed().size() != 0) rep.failures.push_back("empty tower over nonzero target");
        return rep;
    }
    for (size_t i = 0; i < t.stages.size(); ++i) {
        if (!is_free_complex(t.stages[i].complex))
            rep.failures.push_back("stage " + std::to_string(i) + " is not disk-decomposable");
        if (!validate_chain_map(t.stages[i].map).ok())
            rep.failures.push_back("stage map " + std::to_string(i) + " invalid");
    }
    if (!rep.ok()) return rep;
    int lo = t.target.min_deg, hi = t.target.max_deg;
    for (const ComplexWithMap& s : t.stages) {
        lo = std::min(lo, s.complex.min_deg);
        hi = std::max(hi, s.complex.max_deg);
    }
    for (int m = lo; m <= hi; ++m) {
        if (!is_surjective_map(t.stages[0].map.component(m)))
            rep.failures.push_back("stage 0 not surjective at degree " + std::to_string(m));
        for (size_t i = 0; i + 1 < t.stages.size(); ++i)
            if (!exact_at(t.stages[i + 1].map.component(m), t.stages[i].map.component(m)))
                rep.failures.push_back("sequence not exact at stage " + std::to_string(i) +
                                       ", degree " + std::to_string(m));
        if (!is_injective_map(t.stages.back().map.component(m)))
            rep.failures.push_back("last stage not injective at degree " + std::to_string(m));
    }
    return rep;
}

std::optional<int> pd_complex(const ChainComplex& X, int max_len) {
    if (!is_exact(X)) return std::nullopt;
    int best = 0;
    for (int m = X.min_deg; m <= X.max_deg; ++m) {
        Pd p = pd(cycles(X, m).pres);
        if (!p.finite) return std::nullopt;
        best = std::max(best, p.value);
    }
    if (best > max_len) return std::nullopt;
    return best;
}

bool in_tilde_Pn(const ChainComplex& X, int n) {
    if (!is_exact(X)) return false;
    for (int m = X.min_deg; m <= X.max_deg; ++m) {
        Pd p = pd(cycles(X, m).pres);
        if (!p.finite || p.value > n) return false;
    }
    return true;
}

namespace {

// Hom(P, Y) for the canonical disk-sum cover P of `base`: one copy of Y_m per
// top generator (= generator of base) at degree m.
struct HomDesc {
    Presentation pres;
    std::map<int, int> offset;  // first generator index of the degree-m block
};

HomDesc hom_from_cover(const ChainComplex& base, const ChainComplex& Y) {
    HomDesc h;
    h.pres = Presentation::zero(Y.ring);
    for (int m = base.min_deg; m <= base.max_deg; ++m) {
        h.offset[m] = h.pres.gens;
        h.pres = direct_sum(h.pres, power(Y.at(m), base.gens(m)));
    }
    return h;
}

// Pullback Hom(P_prev, Y) -> Hom(P_next, Y) along g : P_next -> P_prev,
// where P_prev covers `prev` and P_next covers `next`. A hom is determined
// by its values on tops; g sends a top of P_next into (tops | bottoms) of
// P_prev, and a hom evaluates on a bottom through the boundary of Y.
ModuleMap hom_pullback(const HomDesc& hprev, const ChainComplex& prev, const HomDesc& hnext,
                       const ChainComplex& next, const ChainMap& g, const ChainComplex& Y) {
    IntMatrix A(hnext.pres.gens, hprev.pres.gens);
    for (int m = next.min_deg; m <= next.max_deg; ++m) {
        int yg = Y.gens(m);
        if (yg == 0 || next.gens(m) == 0) continue;
        IntMatrix gm = g.at(m);
        IntMatrix dY = Y.boundary(m + 1);
        int tprev = prev.gens(m), tprev_up = prev.gens(m + 1);
        for (int j = 0; j < next.gens(m); ++j) {
            int row0 = hnext.offset.at(m) + j * yg;
            for (int i = 0; i < tprev; ++i) {
                const Int& a = gm.at(i, j);
                if (a == 0) continue;
                int col0 = hprev.offset.at(m) + i * yg;
                for (int r = 0; r < yg; ++r) A.at(row0 + r, col0 + r) += a;
            }
            for (int k = 0; k < tprev_up; ++k) {
                const Int& b = gm.at(tprev + k, j);
                if (b == 0) continue;
                int col0 = hprev.offset.at(m + 1) + k * Y.gens(m + 1);
                for (int r = 0; r < yg; ++r)
                    for (int c = 0; c < Y.gens(m + 1); ++c) A.at(row0 + r, col0 + c) += b * dY.at(r, c);
            }
        }
    }
    return ModuleMap(hprev.pres, hnext.pres, A);
}

}  // namespace

FgAbInvariants ext1_complex(const ChainComplex& X, const ChainComplex& Y) {
    require_ring_z(X.ring, "ext1_complex");
    if (!(X.ring == Y.ring)) throw std::invalid_argument("ext1_complex: ring mismatch");
    ComplexCover c1 = projective_cover_complex(X);
    ComplexWithMap K0 = kernel_complex(c1.epi);
    ComplexCover c2 = projective_cover_complex(K0.complex);
    ComplexWithMap K1 = kernel_complex(c2.epi);
    ComplexCover c3 = projective_cover_complex(K1.complex);
    ChainMap g1 = compose(K0.map, c2.epi);  // P^1 -> P^0
    ChainMap g2 = compose(K1.map, c3.epi);  // P^2 -> P^1

    HomDesc h0 = hom_from_cover(X, Y), h1 = hom_from_cover(K0.complex, Y),
            h2 = hom_from_cover(K1.complex, Y);
    ModuleMap a1 = hom_pullback(h0, X, h1, K0.complex, g1, Y);
    ModuleMap a2 = hom_pullback(h1, K0.complex, h2, K1.complex, g2, Y);
    return homology_invariants(a1, a2);
}

std::vector<std::pair<std::string, ChainComplex>> default_left_family(int n) {
    const Ring kZ = Ring::integers();
    std::vector<std::pair<std::string, ChainComplex>> fam;
    for (int k = -1; k <= 2; ++k)
        fam.emplace_back("disk(" + std::to_string(k) + ")", disk(kZ, k, Presentation::free_module(kZ, 1)));
    if (n >= 1) {
        for (int s = 0; s <= 1; ++s) {
            // exact complex with a torsion cycle module: Z --x2--> Z --> Z/2
            ChainComplex E = make_complex(kZ, -1 + s,
                                          {Presentation::cyclic(kZ, 2), Presentation::free_module(kZ, 1),
                                           Presentation::free_module(kZ, 1)},
                                          {IntMatrix(1, 1, {1}), IntMatrix(1, 1, {2})});
            fam.emplace_back("torsion-cycle exact complex shifted by " + std::to_string(s), E);
        }
    }
    return fam;
}

RightClassReport consistent_with_right_class(
    const ChainComplex& Y, int n, const std::vector<std::pair<std::string, ChainComplex>>& family) {
    RightClassReport rep;
    for (const auto& [label, S] : family) {
        if (!in_tilde_Pn(S, n))
            throw std::invalid_argument("consistent_with_right_class: family member '" + label +
                                        "' is not in the left class for n = " + std::to_string(n));
        FgAbInvariants e = ext1_complex(S, Y);
        if (!e.is_trivial()) rep.consistent = false;
        rep.groups.emplace_back(label, std::move(e));
    }
    return rep;
}

namespace {

bool complexes_identical(const ChainComplex& A, const ChainComplex& B) {
    if (!(A.ring == B.ring)) return false;
    int lo = std::min(A.min_deg, B.min_deg), hi = std::max(A.max_deg, B.max_deg);
    for (int m = lo; m <= hi; ++m) {
        Presentation a = A.at(m), b = B.at(m);
        if (a.gens != b.gens || !(a.relations == b.relations)) return false;
        if (!(A.boundary(m) == B.boundary(m)) &&
            (A.in_window(m) || B.in_window(m)))
            return false;
    }
    return true;
}

}  // namespace

ValidationReport validate_complex_sequence(const std::vector<ChainMap>& seq) {
    ValidationReport rep;
    if (seq.empty()) {
        rep.failures.push_back("empty sequence");
        return rep;
    }
    for (size_t i = 0; i < seq.size(); ++i)
        if (!validate_chain_map(seq[i]).ok())
            rep.failures.push_back("map " + std::to_string(i) + " is not a chain map");
    for (size_t i = 0; i + 1 < seq.size(); ++i)
        if (!complexes_identical(seq[i].target, seq[i + 1].source))
            rep.failures.push_back("maps " + std::to_string(i) + " and " + std::to_string(i + 1) +
                                   " are not composable");
    if (!rep.ok()) return rep;
    int lo = seq[0].source.min_deg, hi = seq[0].source.max_deg;
    for (const ChainMap& f : seq) {
        lo = std::min(lo, std::min(f.source.min_deg, f.target.min_deg));
        hi = std::max(hi, std::max(f.source.max_deg, f.target.max_deg));
    }
    for (int m = lo; m <= hi; ++m) {
        if (!is_injective_map(seq.front().component(m)))
            rep.failures.push_back("head not injective at degree " + std::to_string(m));
        for (size_t i = 0; i + 1 < seq.size(); ++i)
            if (!exact_at(seq[i].component(m), seq[i + 1].component(m)))
                rep.failures.push_back("not exact after map " + std::to_string(i) + " at degree " +
                                       std::to_string(m));
        if (!is_surjective_map(seq.back().component(m)))
            rep.failures.push_back("tail map not surjective at degree " + std::to_string(m));
    }
    return rep;
}

bool tail_exactness_propagates(const std::vector<ChainMap>& seq) {
    ValidationReport rep = validate_complex_sequence(seq);
    if (!rep.ok())
        throw std::invalid_argument("tail_exactness_propagates: " + rep.failures.front());
    if (!is_exact(seq[0].source))
        throw std::invalid_argument("tail_exactness_propagates: head term not exact");
    for (size_t i = 0; i + 1 < seq.size(); ++i)
        if (!is_exact(seq[i].target))
            throw std::invalid_argument("tail_exactness_propagates: middle term not exact");
    return is_exact(seq.back().target);
}

CycleSequenceReport cycle_level_sequences(const std::vector<ChainMap>& seq) {
    CycleSequenceReport rep;
    ValidationReport v = validate_complex_sequence(seq);
    if (!v.ok()) {
        rep.failures = std::move(v.failures);
        return rep;
    }
    std::vector<ChainComplex> terms;
    terms.push_back(seq[0].source);
    for (const ChainMap& f : seq) terms.push_back(f.target);
    int lo = terms[0].min_deg, hi = terms[0].max_deg;
    for (const ChainComplex& T : terms) {
        lo = std::min(lo, T.min_deg);
        hi = std::max(hi, T.max_deg);
    }
    for (int m = lo; m <= hi; ++m) {
        CycleSequence cs;
        cs.degree = m;
        std::vector<SubquotientPart> Z;
        for (const ChainComplex& T : terms) Z.push_back(cycles(T, m));
        bool built = true;
        for (size_t i = 0; i < seq.size(); ++i) {
            ModuleMap pushed = compose(seq[i].component(m), Z[i].map);
            auto r = lift_through(pushed, Z[i + 1].map);
            if (!r) {
                rep.failures.push_back("cycle restriction failed after map " + std::to_string(i) +
                                       " at degree " + std::to_string(m));
                built = false;
                break;
            }
            cs.maps.push_back(std::move(*r));
        }
        if (!built) continue;
        if (!is_injective_map(cs.maps.front()))
            rep.failures.push_back("cycle sequence head not injective at degree " + std::to_string(m));
        for (size_t i = 0; i + 1 < cs.maps.size(); ++i)
            if (!exact_at(cs.maps[i], cs.maps[i + 1]))
                rep.failures.push_back("cycle sequence not exact after map " + std::to_string(i) +
                                       " at degree " + std::to_string(m));
        if (!is_surjective_map(cs.maps.back()))
            rep.failures.push_back("cycle sequence tail not surjective at degree " + std::to_string(m));
        rep.sequences.push_back(std::move(cs));
    }
    return rep;
}

}  // namespace chx
