#pragma once

#include <memory>
#include <string>
#include <vector>

#include "functcat/matrix.hpp"

namespace functcat {

struct CategoryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A finite preadditive category with a chosen basis of every Hom space and
// dense composition tables. The path category, its opposite, quotient
// categories and endomorphism algebras all present themselves this way, so
// the module machinery is written once against it.
//
// Conventions: compose(g, f) means f first, then g. The table stores, for
// every composable pair of basis morphisms, the coordinates of the composite
// in the target Hom basis.
struct CatTable {
    FieldSpec fs;
    std::vector<std::string> objects;
    // hom[x][y]: dimension of Hom(x, y)
    std::vector<std::vector<int>> homdim;
    // labels[x][y][k]: printable name of the k-th basis morphism
    std::vector<std::vector<std::vector<std::string>>> labels;
    // idc[x]: coordinates of the identity in Hom(x, x); empty means the
    // object is a zero object
    std::vector<Vec> idc;
    // comp[x][y][z][i + homdim[x][y]*j]: coordinates in Hom(x, z) of the
    // composite (j-th basis of Hom(y,z)) ∘ (i-th basis of Hom(x,y))
    std::vector<std::vector<std::vector<std::vector<Vec>>>> comp;
    // Jacobson radical of the category, one subspace per Hom space
    std::vector<std::vector<Subspace>> rad;

    int nobj() const { return int(objects.size()); }
    int dim(int x, int y) const { return homdim[x][y]; }
    int object_index(const std::string& name) const;

    const Vec& compose_basis(int x, int y, int z, int i, int j) const {
        return comp[x][y][z][size_t(i) + size_t(homdim[x][y]) * j];
    }
    // g ∘ f for f: x→y (coords fc), g: y→z (coords gc)
    Vec compose(int x, int y, int z, const Vec& fc, const Vec& gc) const;

    bool is_zero_object(int x) const { return idc[x].empty() || homdim[x][x] == 0; }

    // associativity, identity neutrality, radical two-sidedness + nilpotency
    void validate() const;

    bool operator==(const CatTable&) const = default;
};

using CatPtr = std::shared_ptr<const CatTable>;

// A morphism given by coordinates in the Hom basis of its (src, dst) pair.
struct Mor {
    int src = 0;
    int dst = 0;
    Vec coords;
};

Mor compose(const CatTable& cat, const Mor& g, const Mor& f);
Mor identity_mor(const CatTable& cat, int x);
bool same_category(const CatPtr& a, const CatPtr& b);

// The opposite category on the same Hom data: Hom_op(x,y) = Hom(y,x) with
// reversed composition. Involutive on the stored data.
CatPtr opposite_table(const CatPtr& cat);

}  // namespace functcat
