#include "chx/model.hpp"

#include <algorithm>

namespace chx {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::yes:
            return "yes";
        case Verdict::no:
            return "no";
        default:
            return "consistent-with-family";
    }
}

namespace {

// Sparse row collector for the stacked lifting system; columns are the
// diagonal's entries first, then slack unknowns absorbing "equality modulo a
// relation lattice".
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

std::string invariants_of(const ChainComplex& C, int m) { return invariants(C.at(m)).to_string(); }

}  // namespace

MapClassification classify(const ChainMap& f, int n,
                           const std::vector<std::pair<std::string, ChainComplex>>& family) {
    ValidationReport val = validate_chain_map(f);
    if (!val.ok()) throw std::invalid_argument("classify: invalid chain map: " + val.failures.front());
    if (n < 0) throw std::invalid_argument("classify: level must be >= 0");

    MapClassification c;
    c.mono = is_mono(f);
    c.epi = is_epi(f);
    c.weak_equiv = is_quasi_iso(f);
    c.evidence.push_back(std::string("monomorphism: ") + (c.mono ? "yes" : "no"));
    c.evidence.push_back(std::string("epimorphism: ") + (c.epi ? "yes" : "no"));
    c.evidence.push_back(std::string("quasi-isomorphism: ") + (c.weak_equiv ? "yes" : "no"));

    // Cofibration side: mono + cokernel in the left class. The exact left
    // class (exact cokernel with cycle dimensions <= n) is fully decidable
    // and settles the trivial cofibration question.
    if (!c.mono) {
        c.cofibration = c.trivial_cofibration = Verdict::no;
        c.evidence.push_back("cofibration: no (not a monomorphism)");
    } else {
        ChainComplex C = cokernel_complex(f).complex;
        bool coker_trivial = C.trimmed().size() == 0;
        bool coker_exact_class = in_tilde_Pn(C, n);
        c.trivial_cofibration = coker_exact_class ? Verdict::yes : Verdict::no;
        c.evidence.push_back(std::string("cokernel exact with cycle dimensions <= ") +
                             std::to_string(n) + ": " + (coker_exact_class ? "yes" : "no"));
        if (coker_exact_class || coker_trivial) {
            c.cofibration = Verdict::yes;
        } else {
            bool dims_ok = true;
            for (int m = C.min_deg; m <= C.max_deg; ++m) {
                Pd p = pd(C.at(m));
                bool ok = p.finite && p.value <= n;
                if (!ok) dims_ok = false;
                c.evidence.push_back("cokernel degree " + std::to_string(m) + " (" +
                                     invariants_of(C, m) + ") dimension bound: " +
                                     (ok ? "holds" : "fails"));
            }
            c.cofibration = dims_ok ? Verdict::consistent_with_family : Verdict::no;
            if (dims_ok)
                c.evidence.push_back(
                    "cofibration: consistent-with-family (full membership of the cokernel in the "
                    "differential-graded left class is not finitely checkable)");
        }
        if (c.trivial_cofibration == Verdict::yes && !c.weak_equiv)
            throw std::logic_error("classify: trivial cofibration without weak equivalence");
    }

    // Fibration side: epi + kernel in the right Ext-orthogonal class. A zero
    // kernel decides "yes"; otherwise the kernel is tested against the
    // family, where a nonvanishing group refutes membership outright.
    if (!c.epi) {
        c.fibration = c.trivial_fibration = Verdict::no;
        c.evidence.push_back("fibration: no (not an epimorphism)");
    } else {
        ChainComplex K = kernel_complex(f).complex;
        if (K.trimmed().size() == 0) {
            c.fibration = c.trivial_fibration = Verdict::yes;
            c.evidence.push_back("kernel trivial: fibration and trivial fibration yes");
            if (!c.weak_equiv)
                throw std::logic_error("classify: epimorphism with trivial kernel is not a quasi-iso");
        } else {
            RightClassReport r = consistent_with_right_class(K, n, family);
            for (const auto& [label, g] : r.groups)
                c.evidence.push_back("obstruction group against '" + label + "': " + g.to_string());
            c.fibration = r.consistent ? Verdict::consistent_with_family : Verdict::no;
            bool ker_exact = is_exact(K);
            c.evidence.push_back(std::string("kernel exact: ") + (ker_exact ? "yes" : "no"));
            c.trivial_fibration = (ker_exact && r.consistent) ? Verdict::consistent_with_family
                                                              : Verdict::no;
        }
    }
    return c;
}

GeneratingSets generating_sets(const Ring& ring, int n, int window_lo, int window_hi,
                               const std::vector<Presentation>& sample_modules) {
    if (window_lo > window_hi) throw std::invalid_argument("generating_sets: empty degree window");
    if (n < 0) throw std::invalid_argument("generating_sets: level must be >= 0");
    for (const Presentation& S : sample_modules) {
        if (!(S.ring == ring)) throw std::invalid_argument("generating_sets: sample over wrong ring");
        Pd p = pd(S);
        if (!p.finite || p.value > n)
            throw std::invalid_argument("generating_sets: sample module " +
                                        invariants(S).to_string() +
                                        " exceeds the level-" + std::to_string(n) + " dimension bound");
    }

    GeneratingSets out;
    out.I.label = "I";
    out.J.label = "J";
    Presentation rank1 = Presentation::free_module(ring, 1);

    auto add = [](GeneratingSet& gs, std::string label, ChainMap f) {
        if (!validate_chain_map(f).ok() || !is_mono(f))
            throw std::logic_error("generating_sets: member '" + label + "' is not a monomorphism");
        gs.maps.push_back({std::move(label), std::move(f)});
    };

    for (int k = window_lo; k <= window_hi; ++k) {
        ChainComplex D = disk(ring, k, rank1);
        ChainMap from_zero = zero_chain_map(ChainComplex::empty(ring), D);
        add(out.J, "0 -> disk(" + std::to_string(k) + ")", from_zero);
        add(out.I, "0 -> disk(" + std::to_string(k) + ")", from_zero);
        // bottom sphere into the disk: identity on the degree-(k-1) generator
        ChainComplex S = sphere(ring, k - 1, rank1);
        add(out.I, "sphere(" + std::to_string(k - 1) + ") -> disk(" + std::to_string(k) + ")",
            make_chain_map(S, D, {{k - 1, IntMatrix::identity(1)}}));
    }

    // For each sample module: the kernel inclusion of its canonical free
    // cover, placed as a sphere map in every window degree.
    for (const Presentation& S : sample_modules) {
        Presentation F0 = Presentation::free_module(ring, S.gens);
        ModuleMap cover(F0, S, IntMatrix::identity(S.gens));
        SubquotientPart ker = kernel(cover);
        for (int k = window_lo; k <= window_hi; ++k)
            add(out.I,
                "sphere(" + std::to_string(k) + ") of the free-cover kernel of " +
                    invariants(S).to_string(),
                make_chain_map(sphere(ring, k, ker.pres), sphere(ring, k, F0),
                               {{k, ker.map.matrix}}));
    }
    return out;
}

std::optional<ChainMap> verify_lifting(const LiftingSquare& sq) {
    for (const ChainMap* f : {&sq.left, &sq.right, &sq.top, &sq.bottom}) {
        ValidationReport val = validate_chain_map(*f);
        if (!val.ok())
            throw std::invalid_argument("verify_lifting: invalid chain map: " + val.failures.front());
    }
    const ChainComplex& A = sq.left.source;
    const ChainComplex& B = sq.left.target;
    const ChainComplex& C = sq.right.source;
    const ChainComplex& D = sq.right.target;
    auto same = [](const ChainComplex& X, const ChainComplex& Y) {
        if (!(X.ring == Y.ring)) return false;
        int lo = std::min(X.min_deg, Y.min_deg), hi = std::max(X.max_deg, Y.max_deg);
        for (int m = lo; m <= hi; ++m)
            if (X.gens(m) != Y.gens(m)) return false;
        return true;
    };
    if (!same(A, sq.top.source) || !same(C, sq.top.target) || !same(B, sq.bottom.source) ||
        !same(D, sq.bottom.target))
        throw std::invalid_argument("verify_lifting: square corners do not match");
    if (!chain_maps_equal(compose(sq.right, sq.top), compose(sq.bottom, sq.left)))
        throw std::invalid_argument("verify_lifting: square does not commute");

    int lo = std::min({A.min_deg, B.min_deg, C.min_deg, D.min_deg});
    int hi = std::max({A.max_deg, B.max_deg, C.max_deg, D.max_deg});

    // Primary unknowns: entries of d_m : B_m -> C_m wherever both are nonzero.
    std::map<int, int> off;
    int nvars = 0;
    for (int m = lo; m <= hi; ++m) {
        if (B.gens(m) == 0 || C.gens(m) == 0) continue;
        off[m] = nvars;
        nvars += C.gens(m) * B.gens(m);
    }
    auto has_d = [&](int m) { return off.count(m) != 0; };
    auto dvar = [&](int m, int r, int c) { return off.at(m) + r * B.gens(m) + c; };

    SystemBuilder sys(nvars);

    for (int m = lo; m <= hi; ++m) {
        // chain-map condition in C_{m-1}: d^C_m d_m == d_{m-1} d^B_m
        if (C.gens(m - 1) > 0 && B.gens(m) > 0) {
            IntMatrix dC = C.boundary(m), dB = B.boundary(m);
            IntMatrix L = C.at(m - 1).effective_relations();
            for (int j = 0; j < B.gens(m); ++j) {
                std::vector<std::vector<std::pair<int, Int>>> expr(C.gens(m - 1));
                std::vector<Int> rhs(C.gens(m - 1), Int(0));
                for (int r = 0; r < C.gens(m - 1); ++r) {
                    if (has_d(m))
                        for (int k = 0; k < C.gens(m); ++k)
                            if (dC.at(r, k) != 0) expr[r].emplace_back(dvar(m, k, j), dC.at(r, k));
                    if (has_d(m - 1))
                        for (int i = 0; i < B.gens(m - 1); ++i)
                            if (dB.at(i, j) != 0)
                                expr[r].emplace_back(dvar(m - 1, r, i), -dB.at(i, j));
                }
                require_in_lattice(sys, L, expr, rhs);
            }
        }
        // upper triangle in C_m: d_m left_m == top_m
        if (A.gens(m) > 0 && C.gens(m) > 0) {
            IntMatrix lm = sq.left.at(m), tm = sq.top.at(m);
            IntMatrix L = C.at(m).effective_relations();
            for (int j = 0; j < A.gens(m); ++j) {
                std::vector<std::vector<std::pair<int, Int>>> expr(C.gens(m));
                std::vector<Int> rhs(C.gens(m));
                for (int r = 0; r < C.gens(m); ++r) {
                    if (has_d(m))
                        for (int i = 0; i < B.gens(m); ++i)
                            if (lm.at(i, j) != 0) expr[r].emplace_back(dvar(m, r, i), lm.at(i, j));
                    rhs[r] = tm.at(r, j);
                }
                require_in_lattice(sys, L, expr, rhs);
            }
        }
        // lower triangle in D_m: right_m d_m == bottom_m
        if (B.gens(m) > 0 && D.gens(m) > 0) {
            IntMatrix rm = sq.right.at(m), bm = sq.bottom.at(m);
            IntMatrix L = D.at(m).effective_relations();
            for (int j = 0; j < B.gens(m); ++j) {
                std::vector<std::vector<std::pair<int, Int>>> expr(D.gens(m));
                std::vector<Int> rhs(D.gens(m));
                for (int r = 0; r < D.gens(m); ++r) {
                    if (has_d(m))
                        for (int i = 0; i < C.gens(m); ++i)
                            if (rm.at(r, i) != 0) expr[r].emplace_back(dvar(m, i, j), rm.at(r, i));
                    rhs[r] = bm.at(r, j);
                }
                require_in_lattice(sys, L, expr, rhs);
            }
        }
        // well-definedness: d_m carries the relations of B_m into C_m's lattice
        if (has_d(m)) {
            IntMatrix R = B.at(m).effective_relations();
            IntMatrix L = C.at(m).effective_relations();
            for (int t = 0; t < R.rows; ++t) {
                std::vector<std::vector<std::pair<int, Int>>> expr(C.gens(m));
                std::vector<Int> rhs(C.gens(m), Int(0));
                for (int r = 0; r < C.gens(m); ++r)
                    for (int j = 0; j < B.gens(m); ++j)
                        if (R.at(t, j) != 0) expr[r].emplace_back(dvar(m, r, j), R.at(t, j));
                require_in_lattice(sys, L, expr, rhs);
            }
        }
    }

    auto sol = solve(sys.matrix(), sys.rhs);
    if (!sol) return std::nullopt;

    std::map<int, IntMatrix> comps;
    for (const auto& [m, o] : off) {
        IntMatrix d(C.gens(m), B.gens(m));
        for (int r = 0; r < d.rows; ++r)
            for (int c = 0; c < d.cols; ++c) d.at(r, c) = (*sol)[dvar(m, r, c)];
        comps[m] = std::move(d);
    }
    ChainMap d = make_chain_map(B, C, std::move(comps));
    if (!validate_chain_map(d).ok() || !chain_maps_equal(compose(d, sq.left), sq.top) ||
        !chain_maps_equal(compose(sq.right, d), sq.bottom))
        throw std::logic_error("verify_lifting: diagonal re-check failed");
    return d;
}

}  // namespace chx
