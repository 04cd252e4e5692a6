#include "chx/tensorx.hpp"

namespace chx {

namespace {

IntMatrix kron(const IntMatrix& A, const IntMatrix& B) {
    IntMatrix K(A.rows * B.rows, A.cols * B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) {
            if (A.at(i, j) == 0) continue;
            for (int r = 0; r < B.rows; ++r)
                for (int c = 0; c < B.cols; ++c)
                    K.at(i * B.rows + r, j * B.cols + c) = A.at(i, j) * B.at(r, c);
        }
    return K;
}

struct BlockLayout {
    std::vector<std::pair<int, int>> blocks;  // (k, n-k), ascending k
    std::vector<int> offset;                  // generator offset per block
    int total = 0;
    int offset_of(int k) const {
        for (size_t i = 0; i < blocks.size(); ++i)
            if (blocks[i].first == k) return offset[i];
        return -1;
    }
};

BlockLayout layout_at(const ChainComplex& X, const ChainComplex& Y, int n) {
    BlockLayout L;
    for (int k = X.min_deg; k <= X.max_deg; ++k) {
        int l = n - k;
        int g = X.gens(k) * Y.gens(l);
        if (g == 0) continue;
        L.blocks.emplace_back(k, l);
        L.offset.push_back(L.total);
        L.total += g;
    }
    return L;
}

void paste(IntMatrix& dst, int r0, int c0, const IntMatrix& B, bool negate) {
    for (int i = 0; i < B.rows; ++i)
        for (int j = 0; j < B.cols; ++j)
            if (B.at(i, j) != 0) dst.at(r0 + i, c0 + j) += negate ? -B.at(i, j) : B.at(i, j);
}

// the full signed boundary of the tensor product at degree n
IntMatrix tensor_boundary(const ChainComplex& X, const ChainComplex& Y, const BlockLayout& src,
                          const BlockLayout& dst, int n, bool left_only) {
    IntMatrix D(dst.total, src.total);
    for (size_t b = 0; b < src.blocks.size(); ++b) {
        auto [k, l] = src.blocks[b];
        int c0 = src.offset[b];
        int r_left = dst.offset_of(k - 1);  // block (k-1, l) at degree n-1
        if (r_left >= 0) paste(D, r_left, c0, kron(X.boundary(k), IntMatrix::identity(Y.gens(l))), false);
        if (!left_only) {
            int r_right = dst.offset_of(k);  // block (k, l-1) at degree n-1
            if (r_right >= 0)
                paste(D, r_right, c0, kron(IntMatrix::identity(X.gens(k)), Y.boundary(l)), k % 2 != 0);
        }
    }
    (void)n;
    return D;
}

}  // namespace

TensorComplex tensor(const ChainComplex& X, const ChainComplex& Y) {
    if (!(X.ring == Y.ring)) throw std::invalid_argument("tensor: ring mismatch");
    TensorComplex out;
    out.result = ChainComplex::empty(X.ring);
    if (X.comps.empty() || Y.comps.empty()) return out;
    int lo = X.min_deg + Y.min_deg, hi = X.max_deg + Y.max_deg;
    std::vector<Presentation> comps;
    std::vector<IntMatrix> bnds;
    std::map<int, BlockLayout> layouts;
    for (int n = lo; n <= hi; ++n) layouts[n] = layout_at(X, Y, n);
    for (int n = lo; n <= hi; ++n) {
        Presentation C = Presentation::zero(X.ring);
        for (auto [k, l] : layouts[n].blocks) C = direct_sum(C, tensor_mod(X.at(k), Y.at(l)));
        comps.push_back(std::move(C));
        out.summand_index[n] = layouts[n].blocks;
    }
    for (int n = lo + 1; n <= hi; ++n)
        bnds.push_back(tensor_boundary(X, Y, layouts[n], layouts[n - 1], n, false));
    out.result = make_complex(X.ring, lo, std::move(comps), std::move(bnds));
    ValidationReport rep = validate(out.result);
    if (!rep.ok()) throw std::logic_error("tensor: signed boundary invalid: " + rep.failures.front());
    return out;
}

ChainComplex bar_tensor(const ChainComplex& X, const ChainComplex& Y) {
    TensorComplex T = tensor(X, Y);
    if (T.result.comps.empty()) return T.result;
    const ChainComplex& R = T.result;
    std::vector<Presentation> comps;
    std::vector<IntMatrix> bnds;
    std::map<int, BlockLayout> layouts;
    for (int n = R.min_deg; n <= R.max_deg + 1; ++n) layouts[n] = layout_at(X, Y, n);
    for (int n = R.min_deg; n <= R.max_deg; ++n) {
        // quotient by the boundary submodule B_n = im(d_{n+1})
        IntMatrix rel = R.at(n).relations.vstack(R.boundary(n + 1).transpose());
        comps.push_back(Presentation(R.ring, R.gens(n), rel));
    }
    for (int n = R.min_deg + 1; n <= R.max_deg; ++n)
        bnds.push_back(tensor_boundary(X, Y, layouts[n], layouts[n - 1], n, true));
    ChainComplex out = make_complex(R.ring, R.min_deg, std::move(comps), std::move(bnds));
    ValidationReport rep = validate(out);
    if (!rep.ok()) throw std::logic_error("bar_tensor: induced boundary invalid: " + rep.failures.front());
    return out;
}

namespace {

void describe(std::vector<std::string>& lines, const std::string& name, const ChainComplex& C) {
    for (int m = C.max_deg; m >= C.min_deg; --m) {
        lines.push_back(name + " degree " + std::to_string(m) + ": " + invariants(C.at(m)).to_string());
        if (m > C.min_deg)
            lines.push_back(name + " boundary " + std::to_string(m) + ": " + C.boundary(m).to_string());
    }
}

}  // namespace

CounterexampleReport counterexample_report(int n) {
    if (n < 1) throw std::invalid_argument("counterexample_report: n must be >= 1");
    const Ring kZ = Ring::integers();
    CounterexampleReport rep;
    rep.n = n;
    rep.sphere_factor = sphere(kZ, 0, Presentation::cyclic(kZ, 2));
    rep.exact_factor = make_complex(kZ, -1,
                                    {Presentation::cyclic(kZ, 2), Presentation::free_module(kZ, 1),
                                     Presentation::free_module(kZ, 1)},
                                    {IntMatrix(1, 1, {1}), IntMatrix(1, 1, {2})});

    rep.sphere_cofibration_candidate = true;  // 0 -> S is always a mono
    for (int m = rep.sphere_factor.min_deg; m <= rep.sphere_factor.max_deg; ++m) {
        Pd p = pd(rep.sphere_factor.at(m));
        if (!p.finite || p.value > n) rep.sphere_cofibration_candidate = false;
    }
    rep.exact_trivial_cofibration_candidate = in_tilde_Pn(rep.exact_factor, n);

    rep.plain = tensor(rep.sphere_factor, rep.exact_factor);
    rep.bar = bar_tensor(rep.sphere_factor, rep.exact_factor);
    rep.plain_h1 = homology(rep.plain.result, 1);
    rep.bar_h1 = homology(rep.bar, 1);
    rep.plain_exact = is_exact(rep.plain.result);
    rep.bar_exact = is_exact(rep.bar);

    ChainComplex D = disk(kZ, 1, Presentation::free_module(kZ, 1));
    rep.control_exact = is_exact(tensor(D, rep.exact_factor).result) &&
                        is_exact(tensor(D, rep.sphere_factor).result) &&
                        is_exact(tensor(rep.exact_factor, D).result);

    rep.lines.push_back("level n = " + std::to_string(n));
    rep.lines.push_back(std::string("torsion sphere cofibration candidate: ") +
                        (rep.sphere_cofibration_candidate ? "yes" : "no"));
    rep.lines.push_back(std::string("exact factor trivial-cofibration candidate: ") +
                        (rep.exact_trivial_cofibration_candidate ? "yes" : "no"));
    describe(rep.lines, "tensor", rep.plain.result);
    rep.lines.push_back("tensor H1 = " + rep.plain_h1.to_string() +
                        (rep.plain_exact ? " (exact)" : " (not exact: not a weak equivalence)"));
    describe(rep.lines, "bar-tensor", rep.bar);
    rep.lines.push_back("bar-tensor H1 = " + rep.bar_h1.to_string() +
                        (rep.bar_exact ? " (exact)" : " (not exact: not a weak equivalence)"));
    rep.lines.push_back(std::string("contractible-disk control stays exact: ") +
                        (rep.control_exact ? "yes" : "no"));
    return rep;
}

}  // namespace chx
