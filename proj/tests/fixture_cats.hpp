#pragma once

// Categories used across the test suites, built directly (not via the
// instance parser, so parser bugs cannot mask library bugs).

#include "functcat/pathcat.hpp"

namespace functcat::testfix {

// 1 --a1--> 2
inline PathCategory a2() {
    Quiver q;
    q.vertices = {"1", "2"};
    q.arrows = {{"a1", 0, 1}};
    return build_path_category(q, {}, FieldSpec::rationals(), 2);
}

// hereditary 1 --a1--> 2 --a2--> 3, no relations
inline PathCategory a3h() {
    Quiver q;
    q.vertices = {"1", "2", "3"};
    q.arrows = {{"a1", 0, 1}, {"a2", 1, 2}};
    return build_path_category(q, {}, FieldSpec::rationals(), 3);
}

// 1 -> 2 -> ... -> 6 with all length-2 composites zero
inline PathCategory z6() {
    Quiver q;
    q.vertices = {"1", "2", "3", "4", "5", "6"};
    for (int i = 0; i < 5; ++i)
        q.arrows.push_back({"a" + std::to_string(i + 1), i, i + 1});
    std::vector<Relation> rels;
    for (int i = 0; i < 4; ++i)
        rels.push_back(Relation{{{Scalar(1), PathSeq{i, i + 1}}}});
    return build_path_category(q, rels, FieldSpec::rationals(), 2);
}

// the Auslander-algebra presentation for the A_2 quiver: 1 -> 2 -> 3, ba = 0
inline PathCategory aus_a2() {
    Quiver q;
    q.vertices = {"1", "2", "3"};
    q.arrows = {{"a", 0, 1}, {"b", 1, 2}};
    std::vector<Relation> rels = {Relation{{{Scalar(1), PathSeq{0, 1}}}}};
    return build_path_category(q, rels, FieldSpec::rationals(), 2);
}

}  // namespace functcat::testfix
