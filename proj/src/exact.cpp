#include "chx/exact.hpp"

#include <sstream>

namespace chx {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool IntMatrix::is_zero() const {
    for (const Int& x : a)
        if (x != 0) return false;
    return true;
}

IntMatrix IntMatrix::mul(const IntMatrix& o) const {
    if (cols != o.rows) throw std::invalid_argument("mul: dimension mismatch");
    IntMatrix r(rows, o.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            const Int& x = at(i, k);
            if (x == 0) continue;
            for (int j = 0; j < o.cols; ++j) r.at(i, j) += x * o.at(k, j);
        }
    return r;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix r(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
    return r;
}

IntMatrix IntMatrix::negated() const {
    IntMatrix r = *this;
    for (Int& x : r.a) x = -x;
    return r;
}

IntMatrix IntMatrix::hstack(const IntMatrix& o) const {
    if (rows != o.rows) throw std::invalid_argument("hstack: row mismatch");
    IntMatrix r(rows, cols + o.cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) r.at(i, j) = at(i, j);
        for (int j = 0; j < o.cols; ++j) r.at(i, cols + j) = o.at(i, j);
    }
    return r;
}

IntMatrix IntMatrix::vstack(const IntMatrix& o) const {
    if (cols != o.cols) throw std::invalid_argument("vstack: col mismatch");
    IntMatrix r(rows + o.rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) r.at(i, j) = at(i, j);
    for (int i = 0; i < o.rows; ++i)
        for (int j = 0; j < cols; ++j) r.at(rows + i, j) = o.at(i, j);
    return r;
}

IntMatrix IntMatrix::scaled(const Int& k) const {
    IntMatrix r = *this;
    for (Int& x : r.a) x *= k;
    return r;
}

IntMatrix IntMatrix::add(const IntMatrix& o) const {
    if (rows != o.rows || cols != o.cols) throw std::invalid_argument("add: dimension mismatch");
    IntMatrix r = *this;
    for (size_t i = 0; i < a.size(); ++i) r.a[i] += o.a[i];
    return r;
}

IntMatrix IntMatrix::sub(const IntMatrix& o) const { return add(o.negated()); }

std::vector<Int> IntMatrix::col(int c) const {
    std::vector<Int> v(rows);
    for (int i = 0; i < rows; ++i) v[i] = at(i, c);
    return v;
}

std::vector<Int> IntMatrix::row(int r) const {
    std::vector<Int> v(cols);
    for (int j = 0; j < cols; ++j) v[j] = at(r, j);
    return v;
}

IntMatrix IntMatrix::columns(const std::vector<int>& idx) const {
    IntMatrix r(rows, static_cast<int>(idx.size()));
    for (int j = 0; j < r.cols; ++j)
        for (int i = 0; i < rows; ++i) r.at(i, j) = at(i, idx[j]);
    return r;
}

IntMatrix IntMatrix::top_rows(int n) const {
    IntMatrix r(n, cols);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < cols; ++j) r.at(i, j) = at(i, j);
    return r;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& x) const {
    if (static_cast<int>(x.size()) != cols) throw std::invalid_argument("apply: dimension mismatch");
    std::vector<Int> r(rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (at(i, j) != 0) r[i] += at(i, j) * x[j];
    return r;
}

IntMatrix IntMatrix::reduced_mod(const Int& m) const {
    IntMatrix r = *this;
    for (Int& x : r.a) {
        mpz_mod(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    }
    return r;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows; ++i) {
        os << (i ? " [" : "[");
        for (int j = 0; j < cols; ++j) os << (j ? "," : "") << at(i, j).get_str();
        os << "]";
    }
    os << "]";
    return os.str();
}

IntMatrix from_columns(int rows, const std::vector<std::vector<Int>>& cols) {
    IntMatrix r(rows, static_cast<int>(cols.size()));
    for (int j = 0; j < r.cols; ++j) {
        if (static_cast<int>(cols[j].size()) != rows)
            throw std::invalid_argument("from_columns: column length mismatch");
        for (int i = 0; i < rows; ++i) r.at(i, j) = cols[j][i];
    }
    return r;
}

int SnfResult::rank() const {
    int r = 0;
    for (const Int& x : d)
        if (x != 0) ++r;
    return r;
}

SnfResult snf(const IntMatrix& A) {
    const int R = A.rows, C = A.cols;
    IntMatrix D = A;
    IntMatrix U = IntMatrix::identity(R), Uinv = IntMatrix::identity(R);
    IntMatrix V = IntMatrix::identity(C), Vinv = IntMatrix::identity(C);

    // Row op on D: row i -= q*row t  (E = I - q*e_it). Then U := U*E^{-1}
    // (col of U: col t += q*col i), Uinv := E*Uinv (row i -= q*row t).
    auto row_sub = [&](int i, int t, const Int& q) {
        if (q == 0) return;
        for (int c = 0; c < C; ++c) D.at(i, c) -= q * D.at(t, c);
        for (int r = 0; r < R; ++r) U.at(r, t) += q * U.at(r, i);
        for (int c = 0; c < R; ++c) Uinv.at(i, c) -= q * Uinv.at(t, c);
    };
    auto col_sub = [&](int j, int t, const Int& q) {
        // col j -= q*col t (E = I - q*e_tj applied on the right). V := E^{-1}V
        // (row t += q*row j), Vinv := Vinv*E (col j -= q*col t).
        if (q == 0) return;
        for (int r = 0; r < R; ++r) D.at(r, j) -= q * D.at(r, t);
        for (int c = 0; c < C; ++c) V.at(t, c) += q * V.at(j, c);
        for (int r = 0; r < C; ++r) Vinv.at(r, j) -= q * Vinv.at(r, t);
    };
    auto row_swap = [&](int i, int j) {
        if (i == j) return;
        for (int c = 0; c < C; ++c) std::swap(D.at(i, c), D.at(j, c));
        for (int r = 0; r < R; ++r) std::swap(U.at(r, i), U.at(r, j));
        for (int c = 0; c < R; ++c) std::swap(Uinv.at(i, c), Uinv.at(j, c));
    };
    auto col_swap = [&](int i, int j) {
        if (i == j) return;
        for (int r = 0; r < R; ++r) std::swap(D.at(r, i), D.at(r, j));
        for (int c = 0; c < C; ++c) std::swap(V.at(i, c), V.at(j, c));
        for (int r = 0; r < C; ++r) std::swap(Vinv.at(r, i), Vinv.at(r, j));
    };
    auto row_negate = [&](int i) {
        for (int c = 0; c < C; ++c) D.at(i, c) = -D.at(i, c);
        for (int r = 0; r < R; ++r) U.at(r, i) = -U.at(r, i);
        for (int c = 0; c < R; ++c) Uinv.at(i, c) = -Uinv.at(i, c);
    };

    const int n = std::min(R, C);
    for (int t = 0; t < n; ++t) {
        // Find pivot: smallest |entry| != 0, ties by lowest (row, col).
        int pi = -1, pj = -1;
        for (int i = t; i < R; ++i)
            for (int j = t; j < C; ++j) {
                if (D.at(i, j) == 0) continue;
                if (pi < 0 || mpz_cmpabs(D.at(i, j).get_mpz_t(), D.at(pi, pj).get_mpz_t()) < 0) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;  // all remaining entries zero
        row_swap(t, pi);
        col_swap(t, pj);

        for (;;) {
            // Clear column t with Euclidean steps.
            bool clean = true;
            for (int i = t + 1; i < R; ++i) {
                if (D.at(i, t) == 0) continue;
                Int q = D.at(i, t) / D.at(t, t);  // truncated division
                row_sub(i, t, q);
                if (D.at(i, t) != 0) {
                    row_swap(t, i);  // remainder is smaller: promote it
                    clean = false;
                }
            }
            if (!clean) continue;
            // Clear row t.
            for (int j = t + 1; j < C; ++j) {
                if (D.at(t, j) == 0) continue;
                Int q = D.at(t, j) / D.at(t, t);
                col_sub(j, t, q);
                if (D.at(t, j) != 0) {
                    col_swap(t, j);
                    clean = false;
                }
            }
            if (!clean) continue;
            // Column may have been refilled by the column ops' row side? No:
            // col ops only touch columns > t at row t; re-check column anyway.
            bool colzero = true;
            for (int i = t + 1; i < R; ++i)
                if (D.at(i, t) != 0) colzero = false;
            if (colzero) break;
        }

        // Divisibility: pivot must divide every remaining entry.
        bool restart = false;
        for (int i = t + 1; i < R && !restart; ++i)
            for (int j = t + 1; j < C; ++j) {
                if (D.at(i, j) % D.at(t, t) != 0) {
                    // Fold row i into row t and redo the elimination at t.
                    row_sub(t, i, Int(-1));
                    restart = true;
                    break;
                }
            }
        if (restart) {
            --t;
            continue;
        }
        if (D.at(t, t) < 0) row_negate(t);
    }

    SnfResult res;
    res.d.resize(n);
    for (int i = 0; i < n; ++i) res.d[i] = D.at(i, i);
    res.U = std::move(U);
    res.Uinv = std::move(Uinv);
    res.V = std::move(V);
    res.Vinv = std::move(Vinv);

    // Internal certificate check: A = U*diag(d)*V exactly.
    IntMatrix Dm(R, C);
    for (int i = 0; i < n; ++i) Dm.at(i, i) = res.d[i];
    if (!(res.U.mul(Dm).mul(res.V) == A)) throw std::logic_error("snf: reconstruction failed");
    if (!(res.U.mul(res.Uinv) == IntMatrix::identity(R)) ||
        !(res.Vinv.mul(res.V) == IntMatrix::identity(C)))
        throw std::logic_error("snf: inverse certificate failed");
    return res;
}

Int det(const IntMatrix& A) {
    if (A.rows != A.cols) throw std::invalid_argument("det: not square");
    const int n = A.rows;
    if (n == 0) return 1;
    // Bareiss fraction-free elimination with row pivoting.
    IntMatrix M = A;
    Int sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (M.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (M.at(i, k) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(M.at(k, j), M.at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int num = M.at(i, j) * M.at(k, k) - M.at(i, k) * M.at(k, j);
                M.at(i, j) = num / prev;  // exact by Bareiss
            }
        prev = M.at(k, k);
    }
    return sign * M.at(n - 1, n - 1);
}

std::optional<std::vector<Int>> solve(const IntMatrix& A, const std::vector<Int>& b,
                                      const std::optional<Int>& modulus) {
    if (static_cast<int>(b.size()) != A.rows) throw std::invalid_argument("solve: dimension mismatch");
    if (modulus) {
        const Int& m = *modulus;
        if (m < 2) throw std::invalid_argument("solve: modulus must be >= 2");
        // A*x = b (mod m)  <=>  [A | m*I] * (x; t) = b over Z.
        IntMatrix aug = A.hstack(IntMatrix::identity(A.rows).scaled(m));
        auto sol = solve(aug, b, std::nullopt);
        if (!sol) return std::nullopt;
        std::vector<Int> x(sol->begin(), sol->begin() + A.cols);
        for (Int& v : x) mpz_mod(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
        return x;
    }
    SnfResult s = snf(A);
    std::vector<Int> c = s.Uinv.apply(b);
    std::vector<Int> y(A.cols);
    const int n = static_cast<int>(s.d.size());
    for (int i = 0; i < A.rows; ++i) {
        if (i < n && s.d[i] != 0) {
            if (c[i] % s.d[i] != 0) return std::nullopt;
            y[i] = c[i] / s.d[i];
        } else if (c[i] != 0) {
            return std::nullopt;
        }
    }
    return s.Vinv.apply(y);
}

IntMatrix hnf_row_basis(const IntMatrix& A) {
    // Integer row echelon with full reduction: basis rows sorted by pivot
    // column, positive pivots, entries above a pivot reduced into [0, pivot).
    // Fully reduced HNF bases respect coordinate-block decompositions of the
    // lattice, which downstream selection algorithms rely on.
    std::vector<std::vector<Int>> work;
    for (int i = 0; i < A.rows; ++i) work.push_back(A.row(i));
    std::vector<std::vector<Int>> basis;
    std::vector<int> pivots;
    for (int col = 0; col < A.cols; ++col) {
        // fold all rows with support starting at col into one
        std::vector<std::vector<Int>> keep;
        std::vector<Int> lead;
        for (auto& r : work) {
            bool zero_prefix = true;
            for (int j = 0; j < col; ++j)
                if (r[j] != 0) { zero_prefix = false; break; }
            if (!zero_prefix || r[col] == 0) {
                keep.push_back(std::move(r));
                continue;
            }
            if (lead.empty()) {
                lead = std::move(r);
                continue;
            }
            // gcd step on the col entries of lead and r
            while (r[col] != 0) {
                Int q = lead[col] / r[col];
                for (int j = 0; j < A.cols; ++j) lead[j] -= q * r[j];
                std::swap(lead, r);
            }
            keep.push_back(std::move(r));
        }
        work = std::move(keep);
        if (lead.empty()) continue;
        if (lead[col] < 0)
            for (Int& x : lead) x = -x;
        // clear the column below the new pivot
        for (auto& r : work) {
            if (r[col] == 0) continue;
            Int q = r[col] / lead[col];
            for (int j = 0; j < A.cols; ++j) r[j] -= q * lead[j];
            // after division the remainder must vanish for rows whose prefix
            // is zero; rows with earlier support keep their remainder until
            // their own column is processed
        }
        basis.push_back(std::move(lead));
        pivots.push_back(col);
    }
    // full back-reduction above each pivot
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t k = i + 1; k < basis.size(); ++k) {
            int p = pivots[k];
            const Int& v = basis[k][p];
            Int q = basis[i][p] / v;
            if (basis[i][p] % v < 0) q -= 1;  // floor division
            if (q == 0) continue;
            for (int j = 0; j < A.cols; ++j) basis[i][j] -= q * basis[k][j];
        }
    IntMatrix B(static_cast<int>(basis.size()), A.cols);
    for (int i = 0; i < B.rows; ++i)
        for (int j = 0; j < A.cols; ++j) B.at(i, j) = basis[i][j];
    return B;
}

IntMatrix kernel_basis(const IntMatrix& A, const std::optional<Int>& modulus) {
    if (modulus) {
        const Int& m = *modulus;
        if (m < 2) throw std::invalid_argument("kernel_basis: modulus must be >= 2");
        // Solutions of A*x = 0 mod m = projections of ker_Z([A | m*I]).
        IntMatrix aug = A.hstack(IntMatrix::identity(A.rows).scaled(m));
        IntMatrix full = kernel_basis(aug, std::nullopt);
        IntMatrix r = full.top_rows(A.cols);
        return r.reduced_mod(m);
    }
    SnfResult s = snf(A);
    std::vector<int> free_idx;
    const int n = static_cast<int>(s.d.size());
    for (int j = 0; j < A.cols; ++j)
        if (j >= n || s.d[j] == 0) free_idx.push_back(j);
    // canonicalize: HNF of the kernel lattice (columns)
    return hnf_row_basis(s.Vinv.columns(free_idx).transpose()).transpose();
}

IntMatrix lattice_row_basis(const IntMatrix& A) { return hnf_row_basis(A); }

bool in_row_lattice(const IntMatrix& A, const std::vector<Int>& v) {
    if (static_cast<int>(v.size()) != A.cols) throw std::invalid_argument("in_row_lattice: dimension mismatch");
    return solve(A.transpose(), v).has_value();
}

}  // namespace chx
