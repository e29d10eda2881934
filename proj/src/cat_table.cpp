#include "functcat/cat_table.hpp"

#include <algorithm>

namespace functcat {

int CatTable::object_index(const std::string& name) const {
    auto it = std::find(objects.begin(), objects.end(), name);
    if (it == objects.end()) throw CategoryError("unknown object: " + name);
    return int(it - objects.begin());
}

Vec CatTable::compose(int x, int y, int z, const Vec& fc, const Vec& gc) const {
    if (int(fc.size()) != homdim[x][y] || int(gc.size()) != homdim[y][z])
        throw DimensionError("compose: coordinate length mismatch");
    Vec out(homdim[x][z], Scalar(0));
    for (int i = 0; i < homdim[x][y]; ++i) {
        if (fis_zero(fc[i])) continue;
        for (int j = 0; j < homdim[y][z]; ++j) {
            if (fis_zero(gc[j])) continue;
            Scalar c = fmul(fs, fc[i], gc[j]);
            const Vec& basis = compose_basis(x, y, z, i, j);
            for (int t = 0; t < homdim[x][z]; ++t)
                out[t] = fadd(fs, out[t], fmul(fs, c, basis[t]));
        }
    }
    return out;
}

Mor compose(const CatTable& cat, const Mor& g, const Mor& f) {
    if (f.dst != g.src) throw CategoryError("compose: morphisms not composable");
    return Mor{f.src, g.dst, cat.compose(f.src, f.dst, g.dst, f.coords, g.coords)};
}

Mor identity_mor(const CatTable& cat, int x) {
    Vec c = cat.idc[x];
    if (c.empty()) c = Vec(cat.homdim[x][x], Scalar(0));
    return Mor{x, x, c};
}

bool same_category(const CatPtr& a, const CatPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

void CatTable::validate() const {
    int n = nobj();
    // identity neutrality
    for (int x = 0; x < n; ++x) {
        Mor idx = identity_mor(*this, x);
        for (int y = 0; y < n; ++y) {
            for (int k = 0; k < homdim[x][y]; ++k) {
                Vec e(homdim[x][y], Scalar(0));
                e[k] = 1;
                Vec right = compose(x, x, y, idx.coords, e);
                if (right != e) throw CategoryError("identity not right-neutral");
                Mor idy = identity_mor(*this, y);
                Vec left = compose(x, y, y, e, idy.coords);
                if (left != e) throw CategoryError("identity not left-neutral");
            }
        }
    }
    // associativity on basis triples
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                for (int w = 0; w < n; ++w)
                    for (int i = 0; i < homdim[x][y]; ++i)
                        for (int j = 0; j < homdim[y][z]; ++j)
                            for (int k = 0; k < homdim[z][w]; ++k) {
                                Vec gf = compose_basis(x, y, z, i, j);
                                Vec ek(homdim[z][w], Scalar(0));
                                ek[k] = 1;
                                Vec a = compose(x, z, w, gf, ek);
                                Vec ei(homdim[x][y], Scalar(0));
                                ei[i] = 1;
                                Vec hg = compose_basis(y, z, w, j, k);
                                Vec b = compose(x, y, w, ei, hg);
                                if (a != b) throw CategoryError("composition not associative");
                            }
    // radical: two-sided ideal, nilpotent, complement of identities
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (rad[x][y].ambient_dim != homdim[x][y])
                throw CategoryError("radical ambient mismatch");
            if (x != y && rad[x][y].dim() != homdim[x][y])
                throw CategoryError("radical must fill Hom between distinct objects");
            if (x == y && !is_zero_object(x)) {
                if (rad[x][x].dim() != homdim[x][x] - 1)
                    throw CategoryError("End/rad must be one-dimensional");
                if (rad[x][x].contains(idc[x]))
                    throw CategoryError("identity inside the radical");
            }
        }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int i = 0; i < rad[x][y].dim(); ++i)
                for (int z = 0; z < n; ++z)
                    for (int j = 0; j < homdim[y][z]; ++j) {
                        Vec e(homdim[y][z], Scalar(0));
                        e[j] = 1;
                        Vec c = compose(x, y, z, rad[x][y].basis.row(i), e);
                        if (!rad[x][z].contains(c))
                            throw CategoryError("radical not a right ideal");
                    }
}

CatPtr opposite_table(const CatPtr& cat) {
    const CatTable& c = *cat;
    auto op = std::make_shared<CatTable>();
    int n = c.nobj();
    op->fs = c.fs;
    op->objects = c.objects;
    op->homdim.assign(n, std::vector<int>(n, 0));
    op->labels.assign(n, std::vector<std::vector<std::string>>(n));
    op->idc = c.idc;
    op->comp.assign(n, std::vector<std::vector<std::vector<Vec>>>(
                           n, std::vector<std::vector<Vec>>(n)));
    op->rad.assign(n, std::vector<Subspace>(n, Subspace::zero(c.fs, 0)));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            op->homdim[x][y] = c.homdim[y][x];
            op->labels[x][y] = c.labels[y][x];
            op->rad[x][y] = c.rad[y][x];
        }
    // op-composite of (i: x→y) then (j: y→z) is the C-composite of
    // (j: z→y) then (i: y→x)
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                auto& bucket = op->comp[x][y][z];
                bucket.resize(size_t(op->homdim[x][y]) * op->homdim[y][z]);
                for (int i = 0; i < op->homdim[x][y]; ++i)
                    for (int j = 0; j < op->homdim[y][z]; ++j)
                        bucket[size_t(i) + size_t(op->homdim[x][y]) * j] =
                            c.compose_basis(z, y, x, j, i);
            }
    return op;
}

}  // namespace functcat
