#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "functcat/funmod.hpp"
#include "functcat/matrix.hpp"

using namespace functcat;

namespace {

// Independent rank oracle: largest r such that some r x r minor is nonzero,
// found by greedily extending an independent row/column set and certifying
// with cofactor-expansion determinants. No echelon code involved.
Scalar det_cofactor(const FieldSpec& fs, const Mat& m, const std::vector<int>& rows,
                    const std::vector<int>& cols) {
    size_t k = rows.size();
    if (k == 0) return Scalar(1);
    if (k == 1) return m.at(rows[0], cols[0]);
    Scalar acc(0);
    std::vector<int> subrows(rows.begin() + 1, rows.end());
    for (size_t j = 0; j < k; ++j) {
        if (fis_zero(m.at(rows[0], cols[j]))) continue;
        std::vector<int> subcols;
        for (size_t t = 0; t < k; ++t)
            if (t != j) subcols.push_back(cols[t]);
        Scalar minor = det_cofactor(fs, m, subrows, subcols);
        Scalar term = fmul(fs, m.at(rows[0], cols[j]), minor);
        if (j % 2 == 1) term = fneg(fs, term);
        acc = fadd(fs, acc, term);
    }
    return acc;
}

int rank_by_minors(const Mat& m) {
    std::vector<int> rows, cols;
    bool grew = true;
    while (grew) {
        grew = false;
        for (int r = 0; r < m.rows && !grew; ++r) {
            if (std::find(rows.begin(), rows.end(), r) != rows.end()) continue;
            for (int c = 0; c < m.cols && !grew; ++c) {
                if (std::find(cols.begin(), cols.end(), c) != cols.end()) continue;
                auto rr = rows;
                auto cc = cols;
                rr.push_back(r);
                cc.push_back(c);
                if (!fis_zero(det_cofactor(m.fs, m, rr, cc))) {
                    rows = rr;
                    cols = cc;
                    grew = true;
                }
            }
        }
    }
    return int(rows.size());
}

Mat qmat(std::vector<std::vector<int>> rows) {
    std::vector<Vec> vr;
    for (auto& r : rows) {
        Vec v;
        for (int x : r) v.push_back(Scalar(x));
        vr.push_back(v);
    }
    return Mat::from_rows(FieldSpec::rationals(), vr);
}

}  // namespace

TEST_CASE("rref identity and dependent rows") {
    Mat id = Mat::identity(FieldSpec::rationals(), 2);
    auto [r, rk] = rref(id);
    CHECK(r == id);
    CHECK(rk == 2);

    Mat dep = qmat({{1, 2}, {2, 4}});
    auto [r2, rk2] = rref(dep);
    CHECK(rk2 == 1);
    CHECK(r2 == qmat({{1, 2}, {0, 0}}));
}

TEST_CASE("rref is idempotent and rank equals transpose rank") {
    Rng rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        Mat m(FieldSpec::rationals(), 4, 6);
        for (auto& x : m.a) x = Scalar(int(rng.next() % 7) - 3);
        auto [r, rk] = rref(m);
        auto [r2, rk2] = rref(r);
        CHECK(r == r2);
        CHECK(rk == rk2);
        CHECK(rank(m) == rank(transpose(m)));
    }
}

TEST_CASE("random 5x7 over F_101: rank matches the minor oracle") {
    FieldSpec f101 = FieldSpec::prime(101);
    Rng rng(12345);
    for (int trial = 0; trial < 6; ++trial) {
        Mat m(f101, 5, 7);
        for (auto& x : m.a) x = freduce(f101, Scalar(int(rng.next() % 101)));
        CHECK(rank(m) == rank_by_minors(m));
    }
}

TEST_CASE("kernel basics") {
    Mat id = Mat::identity(FieldSpec::rationals(), 3);
    CHECK(kernel_basis(id).dim() == 0);

    Mat z(FieldSpec::rationals(), 3, 3);
    CHECK(kernel_basis(z).dim() == 3);

    Mat row = qmat({{1, 1}});
    Subspace k = kernel_basis(row);
    CHECK(k.dim() == 1);
    // solved by hand: span{(1, -1)}
    CHECK(k.contains(Vec{Scalar(1), Scalar(-1)}));
    CHECK_FALSE(k.contains(Vec{Scalar(1), Scalar(1)}));
}

TEST_CASE("rank-nullity holds across random samples") {
    Rng rng(99);
    for (int trial = 0; trial < 10; ++trial) {
        Mat m(FieldSpec::rationals(), 3 + int(rng.next() % 3), 2 + int(rng.next() % 4));
        for (auto& x : m.a) x = Scalar(int(rng.next() % 5) - 2);
        CHECK(kernel_basis(m).dim() + rank(m) == m.cols);
    }
}

TEST_CASE("solve") {
    Mat id = Mat::identity(FieldSpec::rationals(), 3);
    Mat b = qmat({{1}, {2}, {3}});
    auto x = solve(id, b);
    REQUIRE(x.has_value());
    CHECK(*x == b);

    Mat singular = qmat({{1, 0}, {0, 0}});
    CHECK_FALSE(solve(singular, qmat({{0}, {1}})).has_value());
    CHECK(solve(singular, qmat({{1}, {0}})).has_value());
}

TEST_CASE("sum and intersection dimensions") {
    FieldSpec q = FieldSpec::rationals();
    Subspace e1 = Subspace::span_rows(qmat({{1, 0, 0}}));
    Subspace e2 = Subspace::span_rows(qmat({{0, 1, 0}}));
    CHECK(subspace_intersect(e1, e2).dim() == 0);
    CHECK(subspace_sum(e1, e2).dim() == 2);

    Rng rng(3);
    for (int trial = 0; trial < 8; ++trial) {
        Mat a(q, 2, 5), b(q, 3, 5);
        for (auto& x : a.a) x = Scalar(int(rng.next() % 5) - 2);
        for (auto& x : b.a) x = Scalar(int(rng.next() % 5) - 2);
        Subspace sa = Subspace::span_rows(a), sb = Subspace::span_rows(b);
        sa.ambient_dim = sb.ambient_dim = 5;
        CHECK(sa.dim() + sb.dim() ==
              subspace_sum(sa, sb).dim() + subspace_intersect(sa, sb).dim());
    }
}

TEST_CASE("quotient map kills exactly the subspace") {
    Subspace e1 = Subspace::span_rows(qmat({{1, 0, 0}}));
    e1.ambient_dim = 3;
    Mat qm = quotient_map(3, e1);
    CHECK(qm.rows == 2);
    CHECK(rank(qm) == 2);
    CHECK(vec_is_zero(apply_vec(qm, Vec{Scalar(1), Scalar(0), Scalar(0)})));
    CHECK_FALSE(vec_is_zero(apply_vec(qm, Vec{Scalar(0), Scalar(1), Scalar(0)})));
    Subspace ker = kernel_basis(qm);
    CHECK(ker == e1);
}

TEST_CASE("subspace canonical form is syntactic equality") {
    Mat a = qmat({{2, 4}, {1, 3}});
    Mat b = qmat({{1, 0}, {0, 1}});
    CHECK(Subspace::span_rows(a) == Subspace::span_rows(b));
}
