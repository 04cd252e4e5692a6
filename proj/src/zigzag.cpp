#include "chx/zigzag.hpp"

#include <algorithm>
#include <set>

namespace chx {

namespace {

std::vector<int> complement_of(int n, const std::vector<int>& sel) {
    std::vector<int> out;
    size_t k = 0;
    for (int i = 0; i < n; ++i) {
        while (k < sel.size() && sel[k] < i) ++k;
        if (k < sel.size() && sel[k] == i) continue;
        out.push_back(i);
    }
    return out;
}

IntMatrix submatrix(const IntMatrix& A, const std::vector<int>& rows, const std::vector<int>& cols) {
    IntMatrix B(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (int i = 0; i < B.rows; ++i)
        for (int j = 0; j < B.cols; ++j) B.at(i, j) = A.at(rows[i], cols[j]);
    return B;
}

// Reduce v modulo the lattice spanned by the rows of an echelon basis H
// (floor division at each pivot); lattice members reduce to zero, and
// block-supported bases never smear support across blocks.
void reduce_by_rows(std::vector<Int>& v, const IntMatrix& H) {
    for (int i = 0; i < H.rows; ++i) {
        int p = -1;
        for (int j = 0; j < H.cols; ++j)
            if (H.at(i, j) != 0) {
                p = j;
                break;
            }
        if (p < 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), v[p].get_mpz_t(), H.at(i, p).get_mpz_t());
        if (q == 0) continue;
        for (int j = 0; j < H.cols; ++j) v[j] -= q * H.at(i, j);
    }
}

bool complexes_identical(const ChainComplex& A, const ChainComplex& B) {
    if (!(A.ring == B.ring)) return false;
    int lo = std::min(A.min_deg, B.min_deg), hi = std::max(A.max_deg, B.max_deg);
    for (int m = lo; m <= hi; ++m) {
        Presentation a = A.at(m), b = B.at(m);
        if (a.gens != b.gens || !(a.relations == b.relations)) return false;
        if ((A.in_window(m) || B.in_window(m)) && !(A.boundary(m) == B.boundary(m))) return false;
    }
    return true;
}

}  // namespace

// --- module-level extraction -------------------------------------------

ModuleZigzagCertificate zigzag_module(const Presentation& M, const std::vector<Int>& x, int budget) {
    if (!M.ring.is_z()) throw std::invalid_argument("zigzag_module: only implemented over Z");
    if (static_cast<int>(x.size()) != M.gens)
        throw std::invalid_argument("zigzag_module: element size mismatch");
    if (budget < 0) throw std::invalid_argument("zigzag_module: negative budget");
    ResolutionData R = free_resolution(M);
    const IntMatrix& T = R.boundary;  // gens x f1_rank

    std::set<int> b0, b1;
    std::vector<Int> seed = x;
    reduce_by_rows(seed, lattice_row_basis(M.relations));
    for (int i = 0; i < M.gens; ++i)
        if (seed[i] != 0) b0.insert(i);

    std::vector<int> all1(T.cols);
    for (int j = 0; j < T.cols; ++j) all1[j] = j;
    bool changed = true;
    while (changed) {
        changed = false;
        // forward: relation-lattice vectors supported on b0 must come from b1
        std::vector<int> crows = complement_of(M.gens, {b0.begin(), b0.end()});
        IntMatrix K = kernel_basis(submatrix(T, crows, all1));
        for (int j = 0; j < K.cols; ++j)
            for (int i = 0; i < K.rows; ++i)
                if (K.at(i, j) != 0 && b1.insert(i).second) changed = true;
        // backward: selected relations must be supported on b0
        for (int j : b1)
            for (int i = 0; i < M.gens; ++i)
                if (T.at(i, j) != 0 && b0.insert(i).second) changed = true;
    }

    ModuleZigzagCertificate cert;
    cert.ambient = M;
    cert.element = x;
    cert.B0.assign(b0.begin(), b0.end());
    cert.B1.assign(b1.begin(), b1.end());
    std::vector<int> sel0(cert.B0.begin(), cert.B0.end());
    cert.extracted = submodule(M, IntMatrix::identity(M.gens).columns(sel0));
    std::vector<int> c0 = complement_of(M.gens, sel0);
    std::vector<int> c1 = complement_of(T.cols, std::vector<int>(cert.B1.begin(), cert.B1.end()));
    cert.quotient = Presentation(M.ring, static_cast<int>(c0.size()), submatrix(T, c0, c1).transpose());
    cert.budget_exceeded = static_cast<int>(cert.B0.size()) > budget;

    ValidationReport v = verify_certificate(cert);
    if (!v.ok()) throw std::logic_error("zigzag_module: certificate failed self-check: " + v.failures.front());
    return cert;
}

ValidationReport verify_certificate(const ModuleZigzagCertificate& c) {
    ValidationReport rep;
    const Presentation& M = c.ambient;
    if (!M.ring.is_z()) {
        rep.failures.push_back("ambient ring is not Z");
        return rep;
    }
    if (static_cast<int>(c.element.size()) != M.gens) {
        rep.failures.push_back("element size mismatch");
        return rep;
    }
    IntMatrix T = free_resolution(M).boundary;
    for (size_t i = 0; i < c.B0.size(); ++i)
        if (c.B0[i] < 0 || c.B0[i] >= M.gens || (i > 0 && c.B0[i] <= c.B0[i - 1]))
            rep.failures.push_back("B0 is not a sorted index subset");
    for (size_t i = 0; i < c.B1.size(); ++i)
        if (c.B1[i] < 0 || c.B1[i] >= T.cols || (i > 0 && c.B1[i] <= c.B1[i - 1]))
            rep.failures.push_back("B1 is not a sorted index subset");
    if (!rep.ok()) return rep;

    std::vector<int> b0 = c.B0, b1 = c.B1;
    std::vector<int> c0 = complement_of(M.gens, b0), c1 = complement_of(T.cols, b1);
    std::set<int> b0set(b0.begin(), b0.end());
    for (int j : b1)
        for (int i = 0; i < M.gens; ++i)
            if (T.at(i, j) != 0 && !b0set.count(i)) {
                rep.failures.push_back("selected relation escapes the selected generators");
                break;
            }

    if (!is_valid(c.extracted.map) || !is_injective_map(c.extracted.map))
        rep.failures.push_back("extracted inclusion is not a mono");
    if (c.extracted.map.target.gens != M.gens || !(c.extracted.map.target.relations == M.relations))
        rep.failures.push_back("extracted inclusion does not target the ambient module");
    if (!lift_element(c.extracted.map, c.element)) rep.failures.push_back("element not in the extracted submodule");
    if (c.extracted.pres.gens != static_cast<int>(b0.size()))
        rep.failures.push_back("extracted presentation size mismatch");
    if (c.quotient.gens != static_cast<int>(c0.size()))
        rep.failures.push_back("quotient presentation size mismatch");
    if (!rep.ok()) return rep;

    const Ring& ring = M.ring;
    // restricted resolution 0 -> <B1> -> <B0> -> X' -> 0
    ModuleMap f1(Presentation::free_module(ring, static_cast<int>(b1.size())),
                 Presentation::free_module(ring, static_cast<int>(b0.size())), submatrix(T, b0, b1));
    ModuleMap g1(f1.target, c.extracted.pres, IntMatrix::identity(static_cast<int>(b0.size())));
    if (!is_valid(g1) || !is_short_exact(f1, g1))
        rep.failures.push_back("restricted resolution is not short exact");
    // complementary resolution 0 -> F1/<B1> -> F0/<B0> -> X/X' -> 0
    ModuleMap fq(Presentation::free_module(ring, static_cast<int>(c1.size())),
                 Presentation::free_module(ring, static_cast<int>(c0.size())), submatrix(T, c0, c1));
    ModuleMap gq(fq.target, c.quotient, IntMatrix::identity(static_cast<int>(c0.size())));
    if (!is_valid(gq) || !is_short_exact(fq, gq))
        rep.failures.push_back("complementary resolution is not short exact");
    // 0 -> X' -> X -> X/X' -> 0 with the coordinate projection
    IntMatrix P(static_cast<int>(c0.size()), M.gens);
    for (size_t i = 0; i < c0.size(); ++i) P.at(static_cast<int>(i), c0[i]) = 1;
    ModuleMap proj(M, c.quotient, P);
    if (!is_valid(proj) || !is_short_exact(c.extracted.map, proj))
        rep.failures.push_back("ambient sequence X' -> X -> X/X' is not short exact");
    return rep;
}

// --- disk towers --------------------------------------------------------

namespace {

ChainComplex disk_model(const Ring& ring, const std::map<int, int>& tops) {
    std::map<int, int> t;
    for (const auto& [d, r] : tops)
        if (r > 0) t[d] = r;
    if (t.empty()) return ChainComplex::empty(ring);
    auto cnt = [&](int d) {
        auto it = t.find(d);
        return it == t.end() ? 0 : it->second;
    };
    int hi = t.rbegin()->first, lo = t.begin()->first - 1;
    std::vector<Presentation> comps;
    std::vector<IntMatrix> bnds;
    for (int m = lo; m <= hi; ++m) comps.push_back(Presentation::free_module(ring, cnt(m) + cnt(m + 1)));
    for (int m = lo + 1; m <= hi; ++m) {
        IntMatrix B(cnt(m - 1) + cnt(m), cnt(m) + cnt(m + 1));
        for (int j = 0; j < cnt(m); ++j) B.at(cnt(m - 1) + j, j) = 1;
        bnds.push_back(std::move(B));
    }
    return make_complex(ring, lo, std::move(comps), std::move(bnds));
}

std::vector<std::pair<int, int>> disks_of_tops(const std::map<int, int>& tops) {
    std::vector<std::pair<int, int>> out;
    for (auto it = tops.rbegin(); it != tops.rend(); ++it)
        if (it->second > 0) out.emplace_back(it->first, it->second);
    return out;
}

}  // namespace

DiskTower disk_tower(const ChainComplex& X, int n) {
    if (!X.ring.is_z()) throw std::invalid_argument("disk_tower: only implemented over Z");
    (void)n;
    DiskTower dt;
    dt.tower.target = X;
    ChainComplex W = X;
    ChainMap incl = identity_chain_map(X);
    for (int i = 0; i < 4; ++i) {
        if (W.trimmed().size() == 0) {
            dt.tower.complete = true;
            return dt;
        }
        if (auto dec = disk_decomposition(W)) {
            // convert to the literal disk model: columns reordered to
            // (tops of degree-m disks | bottoms of degree-(m+1) disks)
            std::map<int, int> tops;
            for (const auto& [d, r] : dec->disks) tops[d] = r;
            auto cnt = [&](int d) {
                auto it = tops.find(d);
                return it == tops.end() ? 0 : it->second;
            };
            ChainComplex D = disk_model(X.ring, tops);
            std::map<int, IntMatrix> comps;
            for (int m = W.min_deg; m <= W.max_deg; ++m) {
                int t = cnt(m), b = cnt(m + 1);
                if (t + b == 0) continue;
                const IntMatrix& iso = dec->iso.at(m).matrix;  // (bottoms | tops)
                std::vector<int> order;
                for (int j = 0; j < t; ++j) order.push_back(b + j);
                for (int j = 0; j < b; ++j) order.push_back(j);
                comps[m] = iso.columns(order);
            }
            ChainMap phi = make_chain_map(D, W, std::move(comps));
            dt.tower.stages.push_back({D, i == 0 ? phi : compose(incl, phi)});
            dt.disks.push_back(disks_of_tops(tops));
            dt.tower.complete = true;
            return dt;
        }
        ComplexCover c = projective_cover_complex(W);
        dt.tower.stages.push_back({c.P, i == 0 ? c.epi : compose(incl, c.epi)});
        std::map<int, int> tops;
        for (int d = W.min_deg; d <= W.max_deg; ++d)
            if (W.gens(d) > 0) tops[d] = W.gens(d);
        dt.disks.push_back(disks_of_tops(tops));
        ComplexWithMap K = kernel_complex(c.epi);
        W = K.complex;
        incl = K.map;
    }
    throw std::logic_error("disk_tower: iterated kernels did not stabilize");
}

// --- complex-level extraction ------------------------------------------

namespace {

// per stage: top degree -> selected disk indices
using Selection = std::vector<std::map<int, std::set<int>>>;

struct TowerData {
    DiskTower dt;
    std::vector<std::map<int, int>> tops;  // stage -> top degree -> rank

    int nstages() const { return static_cast<int>(dt.tower.stages.size()); }
    int tops_at(int i, int d) const {
        auto it = tops[i].find(d);
        return it == tops[i].end() ? 0 : it->second;
    }
    // column layout at degree m: (tops of degree-m disks | bottoms of
    // degree-(m+1) disks)
    int cols_at(int i, int m) const { return tops_at(i, m) + tops_at(i, m + 1); }
    std::pair<int, int> col_to_disk(int i, int m, int c) const {
        int t = tops_at(i, m);
        return c < t ? std::make_pair(m, c) : std::make_pair(m + 1, c - t);
    }
    std::vector<int> selected_cols(const Selection& sel, int i, int m) const {
        std::vector<int> out;
        auto itt = sel[i].find(m);
        if (itt != sel[i].end())
            for (int j : itt->second) out.push_back(j);
        auto itb = sel[i].find(m + 1);
        if (itb != sel[i].end())
            for (int j : itb->second) out.push_back(tops_at(i, m) + j);
        return out;
    }
    std::vector<int> complement_cols(const Selection& sel, int i, int m) const {
        return complement_of(cols_at(i, m), selected_cols(sel, i, m));
    }
    const ChainMap& map_of(int i) const { return dt.tower.stages[i].map; }
    const ChainComplex& target_of(int i) const {
        return i == 0 ? dt.tower.target : dt.tower.stages[i - 1].complex;
    }
};

TowerData build_tower_data(const ChainComplex& X, int n) {
    TowerData td;
    td.dt = disk_tower(X, n);
    for (const auto& stage_disks : td.dt.disks) {
        std::map<int, int> t;
        for (const auto& [d, r] : stage_disks) t[d] = r;
        td.tops.push_back(std::move(t));
    }
    return td;
}

bool add_support(const TowerData& td, Selection& sel, int i, int m, const std::vector<Int>& v) {
    bool changed = false;
    for (size_t c = 0; c < v.size(); ++c) {
        if (v[c] == 0) continue;
        auto [d, j] = td.col_to_disk(i, m, static_cast<int>(c));
        if (sel[i][d].insert(j).second) changed = true;
    }
    return changed;
}

int selected_disk_count(const Selection& sel, int i) {
    int k = 0;
    for (const auto& [d, js] : sel[i]) k += static_cast<int>(js.size());
    return k;
}

// seed the stage-0 selection with a preimage of x, reduced to canonical form
// modulo the preimage-of-zero lattice
bool seed_element(const TowerData& td, Selection& sel, const Element& x) {
    const ChainComplex& X = td.dt.tower.target;
    int m = x.degree;
    if (X.gens(m) == 0) return false;
    if (td.nstages() == 0) throw std::logic_error("zigzag: nonzero element over an empty tower");
    IntMatrix A = td.map_of(0).at(m);
    IntMatrix Lt = X.at(m).effective_relations().transpose();
    auto sol = solve(A.hstack(Lt), x.coords);
    if (!sol) throw std::logic_error("zigzag: cover is not surjective at the element degree");
    std::vector<Int> w(sol->begin(), sol->begin() + A.cols);
    IntMatrix K = kernel_basis(A.hstack(Lt)).top_rows(A.cols);
    reduce_by_rows(w, hnf_row_basis(K.transpose()));
    return add_support(td, sel, 0, m, w);
}

void close_selection(const TowerData& td, Selection& sel, std::vector<std::string>* audit) {
    const int nst = td.nstages();
    bool changed = true;
    int pass = 0;
    while (changed) {
        changed = false;
        ++pass;
        // backward: images of selected disks must lie in selected spans below
        for (int i = 1; i < nst; ++i) {
            std::map<int, std::set<int>> snapshot = sel[i];
            for (const auto& [d, js] : snapshot)
                for (int j : js) {
                    changed |= add_support(td, sel, i - 1, d, td.map_of(i).at(d).col(j));
                    int c = td.tops_at(i, d - 1) + j;
                    changed |= add_support(td, sel, i - 1, d - 1, td.map_of(i).at(d - 1).col(c));
                }
        }
        // forward: kernels of the restricted maps must be covered one stage up
        for (int i = 0; i + 1 < nst; ++i) {
            const ChainComplex& tgt = td.target_of(i);
            int lo = td.dt.tower.stages[i].complex.min_deg, hi = td.dt.tower.stages[i].complex.max_deg;
            for (int m = lo; m <= hi; ++m) {
                std::vector<int> cols = td.selected_cols(sel, i, m);
                if (cols.empty()) continue;
                IntMatrix A = td.map_of(i).at(m).columns(cols);
                IntMatrix Lt = tgt.at(m).effective_relations().transpose();
                IntMatrix K = kernel_basis(A.hstack(Lt)).top_rows(static_cast<int>(cols.size()));
                IntMatrix H = hnf_row_basis(K.transpose());
                for (int r = 0; r < H.rows; ++r) {
                    std::vector<Int> kappa(td.cols_at(i, m));
                    for (size_t t = 0; t < cols.size(); ++t) kappa[cols[t]] = H.at(r, static_cast<int>(t));
                    auto pre = solve(td.map_of(i + 1).at(m), kappa);
                    if (!pre) throw std::logic_error("zigzag: restricted kernel not covered by the next stage");
                    changed |= add_support(td, sel, i + 1, m, *pre);
                }
            }
        }
        if (audit) {
            std::string line = "pass " + std::to_string(pass) + ":";
            for (int i = 0; i < nst; ++i)
                line += " stage" + std::to_string(i) + "=" + std::to_string(selected_disk_count(sel, i));
            audit->push_back(line);
        }
    }
}

// ambient-coordinate generating columns of the extraction, per degree
std::map<int, IntMatrix> extraction_columns(const TowerData& td, const Selection& sel) {
    std::map<int, IntMatrix> W;
    if (td.nstages() == 0) return W;
    const ChainComplex& X = td.dt.tower.target;
    for (int m = X.min_deg; m <= X.max_deg; ++m) {
        std::vector<int> cols = td.selected_cols(sel, 0, m);
        if (cols.empty()) continue;
        W[m] = td.map_of(0).at(m).columns(cols);
    }
    return W;
}

ResolutionTower assemble_tower(const TowerData& td, const Selection& sel, bool take_selected,
                               const ChainComplex& target) {
    ResolutionTower t;
    t.target = target;
    t.complete = true;
    int last = -1;
    for (int i = 0; i < td.nstages(); ++i) {
        bool any = false;
        int lo = td.dt.tower.stages[i].complex.min_deg, hi = td.dt.tower.stages[i].complex.max_deg;
        for (int m = lo; m <= hi && !any; ++m) {
            auto cols = take_selected ? td.selected_cols(sel, i, m) : td.complement_cols(sel, i, m);
            any = !cols.empty();
        }
        if (any) last = i;
    }
    for (int i = 0; i <= last; ++i) {
        std::map<int, int> counts;
        for (const auto& [d, r] : td.tops[i]) {
            int s = 0;
            auto it = sel[i].find(d);
            if (it != sel[i].end()) s = static_cast<int>(it->second.size());
            counts[d] = take_selected ? s : r - s;
        }
        ChainComplex D = disk_model(td.dt.tower.target.ring, counts);
        std::map<int, IntMatrix> comps;
        const ChainComplex& prev_target = (i == 0) ? target : t.stages[i - 1].complex;
        int lo = td.dt.tower.stages[i].complex.min_deg, hi = td.dt.tower.stages[i].complex.max_deg;
        for (int m = lo; m <= hi; ++m) {
            std::vector<int> cols =
                take_selected ? td.selected_cols(sel, i, m) : td.complement_cols(sel, i, m);
            if (cols.empty()) continue;
            IntMatrix mat;
            if (i == 0) {
                if (take_selected) {
                    // the extracted subcomplex is presented on exactly these
                    // columns, so the stage map is the coordinate identity
                    int tg = target.at(m).gens;
                    mat = tg == static_cast<int>(cols.size())
                              ? IntMatrix::identity(tg)
                              : IntMatrix::zero(tg, static_cast<int>(cols.size()));
                } else {
                    mat = td.map_of(0).at(m).columns(cols);
                }
            } else {
                std::vector<int> rows =
                    take_selected ? td.selected_cols(sel, i - 1, m) : td.complement_cols(sel, i - 1, m);
                IntMatrix full = td.map_of(i).at(m);
                if (take_selected) {
                    for (int rr : complement_of(full.rows, rows))
                        for (int cc : cols)
                            if (full.at(rr, cc) != 0)
                                throw std::logic_error("zigzag: selection not closed under stage maps");
                }
                mat = submatrix(full, rows, cols);
            }
            comps[m] = std::move(mat);
        }
        t.stages.push_back({D, make_chain_map(D, prev_target, std::move(comps))});
    }
    return t;
}

ComplexZigzagCertificate assemble_certificate(const TowerData& td, const Selection& sel,
                                              const Element& x, int n, int budget,
                                              std::vector<std::string> audit) {
    const ChainComplex& X = td.dt.tower.target;
    ComplexZigzagCertificate cert;
    cert.ambient = X;
    cert.element = x;
    cert.n = n;
    cert.audit = std::move(audit);
    for (int i = 0; i < td.nstages(); ++i) {
        std::map<int, std::vector<int>> s;
        for (const auto& [d, js] : sel[i])
            if (!js.empty()) s[d] = std::vector<int>(js.begin(), js.end());
        cert.selected.push_back(std::move(s));
    }
    cert.extracted.ambient = X;
    for (auto& [m, W] : extraction_columns(td, sel)) cert.extracted.inclusion[m] = submodule(X.at(m), W).map;
    cert.sub_tower = assemble_tower(td, sel, true, cert.extracted.sub());
    cert.quotient = quotient(X, cert.extracted);
    cert.quotient_tower = assemble_tower(td, sel, false, cert.quotient);
    cert.budget_exceeded = td.nstages() > 0 && selected_disk_count(sel, 0) > budget;
    ValidationReport v = verify_certificate(cert);
    if (!v.ok())
        throw std::logic_error("zigzag_complex: certificate failed self-check: " + v.failures.front());
    return cert;
}

void check_element_shape(const ChainComplex& X, const Element& x) {
    if (static_cast<int>(x.coords.size()) != X.gens(x.degree))
        throw std::invalid_argument("zigzag: element coordinate size mismatch");
}

}  // namespace

ComplexZigzagCertificate zigzag_complex(const ChainComplex& X, const Element& x, int n, int budget,
                                        bool audit) {
    if (!X.ring.is_z()) throw std::invalid_argument("zigzag_complex: only implemented over Z");
    if (budget < 0) throw std::invalid_argument("zigzag_complex: negative budget");
    check_element_shape(X, x);
    if (!in_tilde_Pn(X, n))
        throw std::invalid_argument("zigzag_complex: ambient complex not in the class");
    TowerData td = build_tower_data(X, n);
    Selection sel(td.nstages());
    std::vector<std::string> hist;
    seed_element(td, sel, x);
    close_selection(td, sel, audit ? &hist : nullptr);
    return assemble_certificate(td, sel, x, n, budget, std::move(hist));
}

ValidationReport verify_certificate(const ComplexZigzagCertificate& c) {
    ValidationReport rep;
    ValidationReport amb = validate(c.ambient);
    if (!amb.ok()) {
        rep.failures.push_back("ambient complex invalid: " + amb.failures.front());
        return rep;
    }
    if (static_cast<int>(c.element.coords.size()) != c.ambient.gens(c.element.degree)) {
        rep.failures.push_back("element coordinate size mismatch");
        return rep;
    }
    if (!in_tilde_Pn(c.ambient, c.n)) rep.failures.push_back("ambient complex not in the class");
    ValidationReport vs = validate_subcomplex(c.extracted);
    for (const std::string& f : vs.failures) rep.failures.push_back("extracted: " + f);
    if (!complexes_identical(c.extracted.ambient, c.ambient))
        rep.failures.push_back("extracted subcomplex lives in a different ambient complex");
    if (!subcomplex_contains(c.extracted, c.element))
        rep.failures.push_back("element not in the extracted subcomplex");
    if (!rep.ok()) return rep;

    ChainComplex sub = c.extracted.sub();
    if (!complexes_identical(c.sub_tower.target, sub))
        rep.failures.push_back("sub tower target differs from the extracted subcomplex");
    ValidationReport vt = validate_tower(c.sub_tower);
    for (const std::string& f : vt.failures) rep.failures.push_back("sub tower: " + f);
    if (!complexes_identical(c.quotient, quotient(c.ambient, c.extracted)))
        rep.failures.push_back("stored quotient differs from ambient/extracted");
    if (!complexes_identical(c.quotient_tower.target, c.quotient))
        rep.failures.push_back("quotient tower target differs from the quotient");
    ValidationReport vq = validate_tower(c.quotient_tower);
    for (const std::string& f : vq.failures) rep.failures.push_back("quotient tower: " + f);
    if (!in_tilde_Pn(sub, c.n)) rep.failures.push_back("extracted subcomplex not in the class");
    if (!in_tilde_Pn(c.quotient, c.n)) rep.failures.push_back("quotient not in the class");
    return rep;
}

// --- filtration ---------------------------------------------------------

namespace {

std::optional<Element> first_live_generator(const ChainComplex& Q, int after_deg, int after_idx) {
    for (int m = Q.min_deg; m <= Q.max_deg; ++m) {
        if (m < after_deg) continue;
        for (int j = 0; j < Q.gens(m); ++j) {
            if (m == after_deg && j <= after_idx) continue;
            std::vector<Int> e(Q.gens(m), 0);
            e[j] = 1;
            if (!is_zero_element(Q.at(m), e)) return Element{m, std::move(e)};
        }
    }
    return std::nullopt;
}

}  // namespace

Filtration build_filtration(const ChainComplex& X, int n, int budget) {
    if (!X.ring.is_z()) throw std::invalid_argument("build_filtration: only implemented over Z");
    if (budget < 0) throw std::invalid_argument("build_filtration: negative budget");
    if (!in_tilde_Pn(X, n))
        throw std::invalid_argument("build_filtration: ambient complex not in the class");
    Filtration F;
    F.ambient = X;
    std::map<int, std::vector<std::vector<Int>>> acc;  // accumulated columns of X_t, ambient coords
    ChainComplex Q = X;
    int total = X.size();
    for (int step = 0; step <= total; ++step) {
        auto x = first_live_generator(Q, Q.min_deg - 1, -1);
        if (!x) break;
        TowerData td = build_tower_data(Q, n);
        Selection sel(td.nstages());
        seed_element(td, sel, *x);
        close_selection(td, sel, nullptr);
        // greedily absorb further generators while the budget permits
        int md = x->degree, mi = 0;
        while (x->coords[mi] == 0) ++mi;
        for (auto y = first_live_generator(Q, md, mi); y;) {
            int yd = y->degree, yi = 0;
            while (y->coords[yi] == 0) ++yi;
            bool absorbed = false;
            std::map<int, IntMatrix> W = extraction_columns(td, sel);
            auto it = W.find(yd);
            if (it != W.end() && submodule_contains(Q.at(yd), it->second, y->coords)) {
                absorbed = true;  // already inside the current extraction
            } else {
                Selection trial = sel;
                seed_element(td, trial, *y);
                close_selection(td, trial, nullptr);
                if (selected_disk_count(trial, 0) <= budget) {
                    sel = std::move(trial);
                    absorbed = true;
                }
            }
            if (!absorbed) break;
            y = first_live_generator(Q, yd, yi);
        }
        ComplexZigzagCertificate cert = assemble_certificate(td, sel, *x, n, budget, {});
        F.budget_exceeded = F.budget_exceeded || cert.budget_exceeded;
        // lift the extraction to the ambient complex (quotients keep the
        // ambient generators, so the columns are already ambient coordinates)
        for (const auto& [m, incl] : cert.extracted.inclusion)
            for (int j = 0; j < incl.matrix.cols; ++j) acc[m].push_back(incl.matrix.col(j));
        Subcomplex stage;
        stage.ambient = X;
        for (const auto& [m, cols] : acc)
            stage.inclusion[m] = submodule(X.at(m), from_columns(X.gens(m), cols)).map;
        F.stages.push_back(std::move(stage));
        F.factors.push_back(std::move(cert));
        Q = quotient(X, F.stages.back());
    }
    if (first_live_generator(Q, Q.min_deg - 1, -1))
        throw std::logic_error("build_filtration: filtration did not exhaust the complex");
    return F;
}

}  // namespace chx
