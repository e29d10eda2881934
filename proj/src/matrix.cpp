#include "functcat/matrix.hpp"

#include <cassert>
#include <sstream>

namespace functcat {

static void check_same_field(const Mat& a, const Mat& b) {
    if (!(a.fs == b.fs)) throw DimensionError("field mismatch");
}

Mat Mat::identity(FieldSpec f, int n) {
    Mat m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat Mat::from_rows(FieldSpec f, const std::vector<Vec>& rows) {
    int r = int(rows.size());
    int c = r ? int(rows[0].size()) : 0;
    Mat m(f, r, c);
    for (int i = 0; i < r; ++i) {
        if (int(rows[i].size()) != c) throw DimensionError("ragged rows");
        for (int j = 0; j < c; ++j) m.at(i, j) = freduce(f, rows[i][j]);
    }
    return m;
}

Mat Mat::col_vec(FieldSpec f, const Vec& v) {
    Mat m(f, int(v.size()), 1);
    for (size_t i = 0; i < v.size(); ++i) m.a[i] = freduce(f, v[i]);
    return m;
}

Mat Mat::row_vec(FieldSpec f, const Vec& v) {
    Mat m(f, 1, int(v.size()));
    for (size_t i = 0; i < v.size(); ++i) m.a[i] = freduce(f, v[i]);
    return m;
}

Vec Mat::row(int r) const {
    Vec v(cols);
    for (int j = 0; j < cols; ++j) v[j] = at(r, j);
    return v;
}

Vec Mat::col(int c) const {
    Vec v(rows);
    for (int i = 0; i < rows; ++i) v[i] = at(i, c);
    return v;
}

bool Mat::is_zero() const {
    for (const auto& x : a)
        if (!fis_zero(x)) return false;
    return true;
}

std::string Mat::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows; ++i) {
        os << (i ? ",[" : "[");
        for (int j = 0; j < cols; ++j) os << (j ? "," : "") << scalar_str(at(i, j));
        os << "]";
    }
    os << "]";
    return os.str();
}

Mat mul(const Mat& a, const Mat& b) {
    check_same_field(a, b);
    if (a.cols != b.rows) throw DimensionError("mul: inner dimensions differ");
    Mat r(a.fs, a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            const Scalar& x = a.at(i, k);
            if (fis_zero(x)) continue;
            for (int j = 0; j < b.cols; ++j) {
                if (fis_zero(b.at(k, j))) continue;
                r.at(i, j) = fadd(r.fs, r.at(i, j), fmul(r.fs, x, b.at(k, j)));
            }
        }
    return r;
}

Mat add(const Mat& a, const Mat& b) {
    check_same_field(a, b);
    if (a.rows != b.rows || a.cols != b.cols) throw DimensionError("add: shape mismatch");
    Mat r = a;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = fadd(r.fs, r.a[i], b.a[i]);
    return r;
}

Mat sub(const Mat& a, const Mat& b) {
    check_same_field(a, b);
    if (a.rows != b.rows || a.cols != b.cols) throw DimensionError("sub: shape mismatch");
    Mat r = a;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = fsub(r.fs, r.a[i], b.a[i]);
    return r;
}

Mat smul(const Scalar& s, const Mat& m) {
    Mat r = m;
    for (auto& x : r.a) x = fmul(r.fs, s, x);
    return r;
}

Mat transpose(const Mat& m) {
    Mat r(m.fs, m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) r.at(j, i) = m.at(i, j);
    return r;
}

Mat hstack(const Mat& a, const Mat& b) {
    check_same_field(a, b);
    if (a.rows != b.rows) throw DimensionError("hstack: row mismatch");
    Mat r(a.fs, a.rows, a.cols + b.cols);
    for (int i = 0; i < a.rows; ++i) {
        for (int j = 0; j < a.cols; ++j) r.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols; ++j) r.at(i, a.cols + j) = b.at(i, j);
    }
    return r;
}

Mat vstack(const Mat& a, const Mat& b) {
    check_same_field(a, b);
    if (a.cols != b.cols) throw DimensionError("vstack: col mismatch");
    Mat r(a.fs, a.rows + b.rows, a.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) r.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows; ++i)
        for (int j = 0; j < a.cols; ++j) r.at(a.rows + i, j) = b.at(i, j);
    return r;
}

Vec apply_vec(const Mat& m, const Vec& v) {
    return mul(m, Mat::col_vec(m.fs, v)).col(0);
}

bool vec_is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!fis_zero(x)) return false;
    return true;
}

std::pair<Mat, int> rref(const Mat& m) {
    Mat r = m;
    int lead = 0;
    for (int col = 0; col < r.cols && lead < r.rows; ++col) {
        int piv = -1;
        for (int i = lead; i < r.rows; ++i)
            if (!fis_zero(r.at(i, col))) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != lead)
            for (int j = 0; j < r.cols; ++j) std::swap(r.at(piv, j), r.at(lead, j));
        Scalar inv = finv(r.fs, r.at(lead, col));
        for (int j = col; j < r.cols; ++j) r.at(lead, j) = fmul(r.fs, inv, r.at(lead, j));
        for (int i = 0; i < r.rows; ++i) {
            if (i == lead || fis_zero(r.at(i, col))) continue;
            Scalar f = r.at(i, col);
            for (int j = col; j < r.cols; ++j)
                r.at(i, j) = fsub(r.fs, r.at(i, j), fmul(r.fs, f, r.at(lead, j)));
        }
        ++lead;
    }
    return {r, lead};
}

int rank(const Mat& m) { return rref(m).second; }

static std::vector<int> pivot_cols(const Mat& rrefm, int rk) {
    std::vector<int> piv;
    int col = 0;
    for (int i = 0; i < rk; ++i) {
        while (col < rrefm.cols && fis_zero(rrefm.at(i, col))) ++col;
        piv.push_back(col);
    }
    return piv;
}

Subspace Subspace::zero(FieldSpec f, int ambient) {
    Subspace s;
    s.ambient_dim = ambient;
    s.basis = Mat(f, 0, ambient);
    return s;
}

Subspace Subspace::full(FieldSpec f, int ambient) {
    Subspace s;
    s.ambient_dim = ambient;
    s.basis = Mat::identity(f, ambient);
    return s;
}

Subspace Subspace::span_rows(const Mat& rows) {
    auto [r, rk] = rref(rows);
    Subspace s;
    s.ambient_dim = rows.cols;
    s.basis = Mat(rows.fs, rk, rows.cols);
    for (int i = 0; i < rk; ++i)
        for (int j = 0; j < rows.cols; ++j) s.basis.at(i, j) = r.at(i, j);
    return s;
}

bool Subspace::contains(const Vec& v) const {
    if (int(v.size()) != ambient_dim) throw DimensionError("contains: bad vector length");
    // reduce v against the RREF basis
    Vec w = v;
    auto piv = pivot_cols(basis, basis.rows);
    for (int i = 0; i < basis.rows; ++i) {
        Scalar f = w[piv[i]];
        if (fis_zero(f)) continue;
        for (int j = 0; j < ambient_dim; ++j)
            w[j] = fsub(basis.fs, w[j], fmul(basis.fs, f, basis.at(i, j)));
    }
    for (const auto& x : w)
        if (!fis_zero(x)) return false;
    return true;
}

bool Subspace::contains(const Subspace& other) const {
    for (int i = 0; i < other.basis.rows; ++i)
        if (!contains(other.basis.row(i))) return false;
    return true;
}

Subspace kernel_basis(const Mat& m) {
    auto [r, rk] = rref(m);
    auto piv = pivot_cols(r, rk);
    std::vector<bool> is_piv(m.cols, false);
    for (int c : piv) is_piv[c] = true;
    std::vector<Vec> rows;
    for (int c = 0; c < m.cols; ++c) {
        if (is_piv[c]) continue;
        Vec v(m.cols, Scalar(0));
        v[c] = 1;
        for (int i = 0; i < rk; ++i) v[piv[i]] = fneg(m.fs, r.at(i, c));
        rows.push_back(std::move(v));
    }
    Subspace res = Subspace::span_rows(Mat::from_rows(m.fs, rows));
    res.ambient_dim = m.cols;
    if (res.basis.cols != m.cols) res.basis = Mat(m.fs, 0, m.cols);
    // rank-nullity, checked on every kernel computation
    if (res.dim() + rk != m.cols) throw std::logic_error("rank-nullity violated");
    return res;
}

Subspace image_basis(const Mat& m) {
    Subspace s = Subspace::span_rows(transpose(m));
    s.ambient_dim = m.rows;
    if (s.basis.cols != m.rows) s.basis = Mat(m.fs, 0, m.rows);
    return s;
}

std::optional<Mat> solve(const Mat& m, const Mat& b) {
    check_same_field(m, b);
    if (m.rows != b.rows) throw DimensionError("solve: row mismatch");
    Mat aug = hstack(m, b);
    auto [r, rk] = rref(aug);
    auto piv = pivot_cols(r, rk);
    for (int c : piv)
        if (c >= m.cols) return std::nullopt;  // inconsistent
    Mat x(m.fs, m.cols, b.cols);
    for (int i = 0; i < int(piv.size()); ++i)
        for (int j = 0; j < b.cols; ++j) x.at(piv[i], j) = r.at(i, m.cols + j);
    return x;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim != b.ambient_dim) throw DimensionError("sum: ambient mismatch");
    Subspace s = Subspace::span_rows(vstack(a.basis, b.basis));
    s.ambient_dim = a.ambient_dim;
    return s;
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim != b.ambient_dim) throw DimensionError("intersect: ambient mismatch");
    // v in a∩b  <=>  v = x·A = y·B; solve [A^T | -B^T] null space
    int da = a.dim(), db = b.dim();
    Mat big = hstack(transpose(a.basis), smul(Scalar(-1), transpose(b.basis)));
    Subspace ker = kernel_basis(big);
    std::vector<Vec> rows;
    for (int i = 0; i < ker.dim(); ++i) {
        Vec x(ker.basis.row(i).begin(), ker.basis.row(i).begin() + da);
        Vec v(a.ambient_dim, Scalar(0));
        for (int t = 0; t < da; ++t)
            for (int j = 0; j < a.ambient_dim; ++j)
                v[j] = fadd(a.basis.fs, v[j], fmul(a.basis.fs, x[t], a.basis.at(t, j)));
        rows.push_back(std::move(v));
    }
    (void)db;
    Mat rowsm = rows.empty() ? Mat(a.basis.fs, 0, a.ambient_dim) : Mat::from_rows(a.basis.fs, rows);
    Subspace s = Subspace::span_rows(rowsm);
    s.ambient_dim = a.ambient_dim;
    return s;
}

Mat quotient_map(int ambient_dim, const Subspace& sub) {
    if (sub.ambient_dim != ambient_dim) throw DimensionError("quotient_map: ambient mismatch");
    const Mat& B = sub.basis;
    auto piv = pivot_cols(B, B.rows);
    std::vector<bool> is_piv(ambient_dim, false);
    for (int c : piv) is_piv[c] = true;
    Mat q(B.fs, ambient_dim - B.rows, ambient_dim);
    int row = 0;
    for (int c = 0; c < ambient_dim; ++c) {
        if (is_piv[c]) continue;
        q.at(row, c) = 1;
        for (int t = 0; t < B.rows; ++t)
            q.at(row, piv[t]) = fneg(B.fs, B.at(t, c));
        ++row;
    }
    return q;
}

Mat coords_in_rowbasis(const Mat& basis, const Mat& vecs) {
    if (basis.cols != vecs.cols) throw DimensionError("coords: ambient mismatch");
    auto x = solve(transpose(basis), transpose(vecs));
    if (!x) throw DimensionError("coords: vector outside span");
    return transpose(*x);
}

}  // namespace functcat
