#pragma once

#include <map>

#include "functcat/cat_table.hpp"

namespace functcat {

struct NonAdmissibleError : CategoryError {
    using CategoryError::CategoryError;
};
struct UnknownSymbolError : CategoryError {
    using CategoryError::CategoryError;
};

struct Quiver {
    struct Arrow {
        std::string name;
        int src = 0;
        int dst = 0;
    };
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    int vertex_index(const std::string& name) const;
    int arrow_index(const std::string& name) const;
    void check() const;  // unique names, endpoints declared
};

// Arrows of a path are listed first-to-last: {a1, a2} is the path a2 ∘ a1.
using PathSeq = std::vector<int>;

struct Relation {
    struct Term {
        Scalar coeff;
        PathSeq path;
    };
    std::vector<Term> terms;
};

// C = KQ/<relations>, built up to a path-length bound. Construction fails
// (NonAdmissibleError) unless every path of length exactly max_len is zero
// modulo the relation ideal, which certifies all longer paths vanish too.
struct PathCategory {
    Quiver quiver;
    std::vector<Relation> relations;
    FieldSpec fs;
    int max_len = 0;
    CatPtr table;
    // rep_path[x][y][k]: the path whose residue class is the k-th basis
    // morphism of Hom(x, y)
    std::vector<std::vector<std::vector<PathSeq>>> rep_path;
    // residue coordinates of each arrow in its Hom basis
    std::vector<Vec> arrow_coords;

    int nobj() const { return table->nobj(); }
    Mor identity(int v) const { return identity_mor(*table, v); }
    Mor arrow_mor(int arrow) const;
    Mor path_mor(const PathSeq& arrows) const;  // residue of a path
};

PathCategory build_path_category(const Quiver& q, const std::vector<Relation>& rels,
                                 FieldSpec fs, int max_len);

PathCategory opposite(const PathCategory& c);

}  // namespace functcat
