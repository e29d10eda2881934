#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "fixture_cats.hpp"

using namespace functcat;
using namespace functcat::testfix;

namespace {

// independent path-count oracle: DFS enumeration straight off the quiver,
// no category machinery
int count_paths(const Quiver& q, int src, int dst, int maxlen) {
    int count = 0;
    struct Item {
        int at;
        int len;
    };
    std::vector<Item> stack{{src, 0}};
    while (!stack.empty()) {
        Item it = stack.back();
        stack.pop_back();
        if (it.at == dst) ++count;
        if (it.len == maxlen) continue;
        for (const auto& a : q.arrows)
            if (a.src == it.at) stack.push_back({a.dst, it.len + 1});
    }
    return count;
}

}  // namespace

TEST_CASE("a2: hom dimensions by path enumeration") {
    PathCategory c = a2();
    CHECK(c.table->dim(0, 1) == 1);
    CHECK(c.table->dim(0, 0) == 1);
    CHECK(c.table->dim(1, 1) == 1);
    CHECK(c.table->dim(1, 0) == 0);
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            CHECK(c.table->dim(x, y) == count_paths(c.quiver, x, y, 2));
}

TEST_CASE("a3h: dims match enumeration; composite survives") {
    PathCategory c = a3h();
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
            CHECK(c.table->dim(x, y) == count_paths(c.quiver, x, y, 3));
    CHECK(c.table->dim(0, 2) == 1);
    // compose(a2, a1) is the basis path 1 -> 3
    Mor comp = compose(*c.table, c.arrow_mor(1), c.arrow_mor(0));
    CHECK(comp.coords == Vec{Scalar(1)});
}

TEST_CASE("z6: dims and vanishing composites") {
    PathCategory c = z6();
    for (int i = 0; i < 6; ++i) {
        CHECK(c.table->dim(i, i) == 1);
        if (i + 1 < 6) CHECK(c.table->dim(i, i + 1) == 1);
        for (int j = i + 2; j < 6; ++j) CHECK(c.table->dim(i, j) == 0);
    }
    Mor comp = compose(*c.table, c.arrow_mor(1), c.arrow_mor(0));
    for (const auto& x : comp.coords) CHECK(fis_zero(x));
}

TEST_CASE("identity is neutral") {
    PathCategory c = z6();
    Mor a1 = c.arrow_mor(0);
    Mor l = compose(*c.table, c.identity(1), a1);
    Mor r = compose(*c.table, a1, c.identity(0));
    CHECK(l.coords == a1.coords);
    CHECK(r.coords == a1.coords);
}

TEST_CASE("non-admissible: loop quiver with no relations fails") {
    Quiver q;
    q.vertices = {"1"};
    q.arrows = {{"l", 0, 0}};
    CHECK_THROWS_AS(build_path_category(q, {}, FieldSpec::rationals(), 1), NonAdmissibleError);
    CHECK_THROWS_AS(build_path_category(q, {}, FieldSpec::rationals(), 4), NonAdmissibleError);
}

TEST_CASE("non-admissible: a3h with max_len 2 has a surviving length-2 path") {
    Quiver q;
    q.vertices = {"1", "2", "3"};
    q.arrows = {{"a1", 0, 1}, {"a2", 1, 2}};
    CHECK_THROWS_AS(build_path_category(q, {}, FieldSpec::rationals(), 2), NonAdmissibleError);
}

TEST_CASE("unknown endpoints rejected") {
    Quiver q;
    q.vertices = {"1"};
    q.arrows = {{"a", 0, 7}};
    CHECK_THROWS_AS(build_path_category(q, {}, FieldSpec::rationals(), 2), UnknownSymbolError);
}

TEST_CASE("loop with nilpotency relation is admissible") {
    Quiver q;
    q.vertices = {"1"};
    q.arrows = {{"l", 0, 0}};
    std::vector<Relation> rels = {Relation{{{Scalar(1), PathSeq{0, 0}}}}};  // l.l = 0
    PathCategory c = build_path_category(q, rels, FieldSpec::rationals(), 2);
    CHECK(c.table->dim(0, 0) == 2);  // id and l
    Mor ll = compose(*c.table, c.arrow_mor(0), c.arrow_mor(0));
    for (const auto& x : ll.coords) CHECK(fis_zero(x));
}

TEST_CASE("opposite category swaps hom spaces") {
    PathCategory c = z6();
    PathCategory op = opposite(c);
    for (int x = 0; x < 6; ++x)
        for (int y = 0; y < 6; ++y)
            CHECK(c.table->dim(x, y) == op.table->dim(y, x));
    CHECK(op.table->dim(2, 1) == 1);

    PathCategory a = a2();
    PathCategory aop = opposite(a);
    CHECK(aop.quiver.arrows[0].src == 1);
    CHECK(aop.quiver.arrows[0].dst == 0);
    CHECK(aop.table->dim(1, 0) == 1);
}

TEST_CASE("opposite is involutive on the data") {
    for (const PathCategory& c : {a2(), a3h(), z6(), aus_a2()}) {
        PathCategory opop = opposite(opposite(c));
        CHECK(*opop.table == *c.table);
        CHECK(opop.rep_path == c.rep_path);
    }
}

TEST_CASE("associativity on all basis triples of every fixture") {
    for (const PathCategory& c : {a2(), a3h(), z6(), aus_a2()}) {
        CHECK_NOTHROW(c.table->validate());
    }
}

TEST_CASE("declared relations vanish in the built category") {
    PathCategory c = z6();
    for (const auto& r : c.relations) {
        int src = c.quiver.arrows[r.terms[0].path.front()].src;
        int dst = c.quiver.arrows[r.terms[0].path.back()].dst;
        Vec acc(c.table->dim(src, dst), Scalar(0));
        for (const auto& t : r.terms) {
            Mor m = c.path_mor(t.path);
            for (size_t i = 0; i < acc.size(); ++i)
                acc[i] = fadd(c.fs, acc[i], fmul(c.fs, t.coeff, m.coords[i]));
        }
        for (const auto& x : acc) CHECK(fis_zero(x));
    }
}

TEST_CASE("path category over a prime field") {
    Quiver q;
    q.vertices = {"1", "2"};
    q.arrows = {{"a", 0, 1}, {"b", 0, 1}};
    PathCategory c = build_path_category(q, {}, FieldSpec::prime(5), 2);
    CHECK(c.table->dim(0, 1) == 2);
    CHECK(c.fs.characteristic == 5);
}

TEST_CASE("commutativity-style relation identifies two composites") {
    // square: s -> x (via u), s -> y (via v), x -> t (p), y -> t (w); p.u = w.v
    Quiver q;
    q.vertices = {"s", "x", "y", "t"};
    q.arrows = {{"u", 0, 1}, {"v", 0, 2}, {"p", 1, 3}, {"w", 2, 3}};
    std::vector<Relation> rels = {
        Relation{{{Scalar(1), PathSeq{0, 2}}, {Scalar(-1), PathSeq{1, 3}}}}};
    PathCategory c = build_path_category(q, rels, FieldSpec::rationals(), 3);
    CHECK(c.table->dim(0, 3) == 1);  // the two composites agree
    Mor pu = c.path_mor(PathSeq{0, 2});
    Mor wv = c.path_mor(PathSeq{1, 3});
    CHECK(pu.coords == wv.coords);
}
