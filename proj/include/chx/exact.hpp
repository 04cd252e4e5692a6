#pragma once

// Exact integer matrix arithmetic over Z and Z/m: Smith normal form with
// unimodular transform certificates, linear solving, kernel lattices.
// Everything uses arbitrary-precision integers; no rounding anywhere.

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace chx {

using Int = mpz_class;

struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Int> a;  // row-major, rows*cols entries

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {
        if (r < 0 || c < 0) throw std::invalid_argument("negative matrix dimension");
    }
    // Row-major initializer, e.g. IntMatrix(2, 2, {2, 4, 6, 8}).
    IntMatrix(int r, int c, std::vector<Int> entries) : rows(r), cols(c), a(std::move(entries)) {
        if (a.size() != static_cast<size_t>(r) * c)
            throw std::invalid_argument("entry count does not match dimensions");
    }

    static IntMatrix identity(int n);
    static IntMatrix zero(int r, int c) { return IntMatrix(r, c); }

    Int& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const Int& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    bool is_zero() const;
    bool operator==(const IntMatrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

    IntMatrix mul(const IntMatrix& o) const;
    IntMatrix transpose() const;
    IntMatrix negated() const;
    IntMatrix hstack(const IntMatrix& o) const;  // [this | o]
    IntMatrix vstack(const IntMatrix& o) const;  // [this ; o]
    IntMatrix scaled(const Int& k) const;
    IntMatrix add(const IntMatrix& o) const;
    IntMatrix sub(const IntMatrix& o) const;

    std::vector<Int> col(int c) const;
    std::vector<Int> row(int r) const;
    IntMatrix columns(const std::vector<int>& idx) const;
    IntMatrix top_rows(int n) const;

    std::vector<Int> apply(const std::vector<Int>& x) const;  // A*x
    IntMatrix reduced_mod(const Int& m) const;                // entries into [0, m)

    std::string to_string() const;
};

IntMatrix from_columns(int rows, const std::vector<std::vector<Int>>& cols);

struct SnfResult {
    std::vector<Int> d;  // length min(rows, cols), divisibility chain, nonnegative
    IntMatrix U, V;      // A = U * diag(d) * V, both unimodular
    IntMatrix Uinv, Vinv;
    int rank() const;
};

// Smith normal form with certificates. Pivot rule: smallest nonzero absolute
// value, ties broken by lowest (row, col). Deterministic.
SnfResult snf(const IntMatrix& A);

// Signed determinant of a square matrix (fraction-free elimination).
Int det(const IntMatrix& A);

// Some x with A*x = b over Z (modulus empty) or mod m, or nullopt when none
// exists; decided exactly. Mod-m solutions are returned with entries in [0, m).
std::optional<std::vector<Int>> solve(const IntMatrix& A, const std::vector<Int>& b,
                                      const std::optional<Int>& modulus = std::nullopt);

// Columns generate {x : A*x = 0}: a full lattice basis over Z, a generating
// set mod m.
IntMatrix kernel_basis(const IntMatrix& A, const std::optional<Int>& modulus = std::nullopt);

// Rows form a Z-basis of the lattice spanned by the rows of A.
IntMatrix lattice_row_basis(const IntMatrix& A);

// Canonical row basis: integer row echelon form with positive pivots and
// entries above each pivot fully reduced into [0, pivot). When the row
// lattice decomposes along coordinate blocks, the basis rows are
// block-supported.
IntMatrix hnf_row_basis(const IntMatrix& A);

// Is v in the lattice spanned by the rows of A?
bool in_row_lattice(const IntMatrix& A, const std::vector<Int>& v);

}  // namespace chx
