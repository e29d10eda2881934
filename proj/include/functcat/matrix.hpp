#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "functcat/field.hpp"

namespace functcat {

struct DimensionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Vec = std::vector<Scalar>;

// Dense exact matrix over Q or F_p, row-major.
struct Mat {
    FieldSpec fs;
    int rows = 0;
    int cols = 0;
    std::vector<Scalar> a;

    Mat() = default;
    Mat(FieldSpec f, int r, int c) : fs(f), rows(r), cols(c), a(size_t(r) * c, Scalar(0)) {}

    Scalar& at(int r, int c) { return a[size_t(r) * cols + c]; }
    const Scalar& at(int r, int c) const { return a[size_t(r) * cols + c]; }

    static Mat zero(FieldSpec f, int r, int c) { return Mat(f, r, c); }
    static Mat identity(FieldSpec f, int n);
    static Mat from_rows(FieldSpec f, const std::vector<Vec>& rows);
    static Mat col_vec(FieldSpec f, const Vec& v);
    static Mat row_vec(FieldSpec f, const Vec& v);

    Vec row(int r) const;
    Vec col(int c) const;
    bool is_zero() const;
    bool operator==(const Mat&) const = default;
    std::string str() const;
};

Mat mul(const Mat& a, const Mat& b);
Mat add(const Mat& a, const Mat& b);
Mat sub(const Mat& a, const Mat& b);
Mat smul(const Scalar& s, const Mat& m);
Mat transpose(const Mat& m);
Mat hstack(const Mat& a, const Mat& b);
Mat vstack(const Mat& a, const Mat& b);
Vec apply_vec(const Mat& m, const Vec& v);  // m * v
bool vec_is_zero(const Vec& v);

// A linear subspace in canonical form: the basis rows are in reduced
// row-echelon form, so equal subspaces have bitwise equal bases.
struct Subspace {
    int ambient_dim = 0;
    Mat basis;  // dim x ambient_dim, RREF, independent rows

    static Subspace zero(FieldSpec f, int ambient);
    static Subspace full(FieldSpec f, int ambient);
    static Subspace span_rows(const Mat& rows);  // canonicalizes

    int dim() const { return basis.rows; }
    FieldSpec field() const { return basis.fs; }
    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;
    bool operator==(const Subspace&) const = default;
};

// Reduced row-echelon form and rank. Idempotent: rref(rref(m)) == rref(m).
std::pair<Mat, int> rref(const Mat& m);
int rank(const Mat& m);

// Right kernel {v : m v = 0}; asserts rank-nullity internally.
Subspace kernel_basis(const Mat& m);
// Column space of m.
Subspace image_basis(const Mat& m);

// One solution x of m x = b (any number of right-hand columns), or nullopt
// iff some column of b is outside the image.
std::optional<Mat> solve(const Mat& m, const Mat& b);

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);

// Surjective map ambient -> ambient-dim(sub) whose kernel is exactly sub.
// Canonical: coordinates of the residue on the non-pivot positions.
Mat quotient_map(int ambient_dim, const Subspace& sub);

// Coordinates of each row of `vecs` in the row basis `basis`
// (throws DimensionError if some row is outside the span).
Mat coords_in_rowbasis(const Mat& basis, const Mat& vecs);

}  // namespace functcat
