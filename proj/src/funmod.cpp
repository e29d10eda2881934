#include "functcat/funmod.hpp"

#include <algorithm>
#include <numeric>

namespace functcat {

Mat FModule::act_mor(const Mor& m) const {
    Mat out(cat->fs, dims[m.dst], dims[m.src]);
    for (size_t k = 0; k < m.coords.size(); ++k) {
        if (fis_zero(m.coords[k])) continue;
        out = add(out, smul(m.coords[k], act[m.src][m.dst][k]));
    }
    return out;
}

int FModule::total_dim() const { return std::accumulate(dims.begin(), dims.end(), 0); }

bool FModule::is_zero() const { return total_dim() == 0; }

void FModule::validate() const {
    const CatTable& c = *cat;
    int n = c.nobj();
    if (int(dims.size()) != n) throw ModuleError("dims size mismatch");
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (int(act[x][y].size()) != c.dim(x, y)) throw ModuleError("action table mismatch");
            for (const Mat& m : act[x][y])
                if (m.rows != dims[y] || m.cols != dims[x])
                    throw ModuleError("action matrix shape mismatch");
        }
    for (int x = 0; x < n; ++x) {
        Mat idm = act_mor(identity_mor(c, x));
        if (idm != Mat::identity(c.fs, dims[x]))
            throw ModuleError("identity does not act as identity");
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                for (int i = 0; i < c.dim(x, y); ++i)
                    for (int j = 0; j < c.dim(y, z); ++j) {
                        Mor comp{x, z, c.compose_basis(x, y, z, i, j)};
                        if (act_mor(comp) != mul(act[y][z][j], act[x][y][i]))
                            throw ModuleError("functoriality fails on a basis pair");
                    }
}

bool module_equal(const FModule& a, const FModule& b) {
    return same_category(a.cat, b.cat) && a.dims == b.dims && a.act == b.act;
}

void FMap::validate() const {
    const CatTable& c = *source.cat;
    if (!same_category(source.cat, target.cat)) throw ModuleError("FMap across categories");
    int n = c.nobj();
    for (int v = 0; v < n; ++v)
        if (comps[v].rows != target.dims[v] || comps[v].cols != source.dims[v])
            throw ModuleError("FMap component shape mismatch");
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int k = 0; k < c.dim(x, y); ++k)
                if (mul(comps[y], source.act[x][y][k]) != mul(target.act[x][y][k], comps[x]))
                    throw ModuleError("naturality fails");
}

bool FMap::is_zero() const {
    for (const Mat& m : comps)
        if (!m.is_zero()) return false;
    return true;
}

static FModule make_module_skeleton(const CatPtr& cat, std::vector<int> dims) {
    FModule m;
    m.cat = cat;
    m.dims = std::move(dims);
    int n = cat->nobj();
    m.act.assign(n, std::vector<std::vector<Mat>>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            m.act[x][y].assign(cat->dim(x, y), Mat(cat->fs, m.dims[y], m.dims[x]));
    return m;
}

FModule module_from_arrows(const PathCategory& pc, const std::vector<int>& dims,
                           const std::vector<Mat>& arrow_action) {
    const auto& q = pc.quiver;
    if (arrow_action.size() != q.arrows.size()) throw ModuleError("one matrix per arrow required");
    for (size_t a = 0; a < q.arrows.size(); ++a)
        if (arrow_action[a].rows != dims[q.arrows[a].dst] ||
            arrow_action[a].cols != dims[q.arrows[a].src])
            throw ModuleError("arrow matrix shape mismatch: " + q.arrows[a].name);
    auto path_mat = [&](const PathSeq& p, int src) {
        Mat m = Mat::identity(pc.fs, dims[src]);
        for (int ai : p) m = mul(arrow_action[ai], m);
        return m;
    };
    // relations must act as zero
    for (const auto& r : pc.relations) {
        int src = q.arrows[r.terms[0].path.front()].src;
        int dst = q.arrows[r.terms[0].path.back()].dst;
        Mat acc(pc.fs, dims[dst], dims[src]);
        for (const auto& t : r.terms)
            acc = add(acc, smul(freduce(pc.fs, t.coeff), path_mat(t.path, src)));
        if (!acc.is_zero()) throw ModuleError("arrow action violates a relation");
    }
    FModule m = make_module_skeleton(pc.table, dims);
    int n = pc.nobj();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int k = 0; k < pc.table->dim(x, y); ++k)
                m.act[x][y][k] = path_mat(pc.rep_path[x][y][k], x);
    m.validate();
    return m;
}

FModule zero_module(const CatPtr& cat) {
    return make_module_skeleton(cat, std::vector<int>(cat->nobj(), 0));
}

FModule direct_sum(const CatPtr& cat, const std::vector<FModule>& parts) {
    int n = cat->nobj();
    std::vector<int> dims(n, 0);
    for (const auto& p : parts) {
        if (!same_category(p.cat, cat)) throw ModuleError("direct_sum across categories");
        for (int v = 0; v < n; ++v) dims[v] += p.dims[v];
    }
    FModule m = make_module_skeleton(cat, dims);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int k = 0; k < cat->dim(x, y); ++k) {
                int ro = 0, co = 0;
                for (const auto& p : parts) {
                    for (int r = 0; r < p.dims[y]; ++r)
                        for (int c = 0; c < p.dims[x]; ++c)
                            m.act[x][y][k].at(ro + r, co + c) = p.act[x][y][k].at(r, c);
                    ro += p.dims[y];
                    co += p.dims[x];
                }
            }
    return m;
}

FMap sum_injection(const FModule& total, const std::vector<FModule>& parts, int which) {
    int n = total.cat->nobj();
    FMap f{parts[which], total, {}};
    f.comps.resize(n, Mat(total.cat->fs, 0, 0));
    for (int v = 0; v < n; ++v) {
        Mat m(total.cat->fs, total.dims[v], parts[which].dims[v]);
        int off = 0;
        for (int i = 0; i < which; ++i) off += parts[i].dims[v];
        for (int r = 0; r < parts[which].dims[v]; ++r) m.at(off + r, r) = 1;
        f.comps[v] = m;
    }
    return f;
}

FMap sum_projection(const FModule& total, const std::vector<FModule>& parts, int which) {
    int n = total.cat->nobj();
    FMap f{total, parts[which], {}};
    f.comps.resize(n, Mat(total.cat->fs, 0, 0));
    for (int v = 0; v < n; ++v) {
        Mat m(total.cat->fs, parts[which].dims[v], total.dims[v]);
        int off = 0;
        for (int i = 0; i < which; ++i) off += parts[i].dims[v];
        for (int r = 0; r < parts[which].dims[v]; ++r) m.at(r, off + r) = 1;
        f.comps[v] = m;
    }
    return f;
}

FMap identity_map(const FModule& m) {
    FMap f{m, m, {}};
    for (int v = 0; v < m.cat->nobj(); ++v)
        f.comps.push_back(Mat::identity(m.cat->fs, m.dims[v]));
    return f;
}

FMap zero_map(const FModule& src, const FModule& dst) {
    FMap f{src, dst, {}};
    for (int v = 0; v < src.cat->nobj(); ++v)
        f.comps.push_back(Mat(src.cat->fs, dst.dims[v], src.dims[v]));
    return f;
}

FMap compose(const FMap& g, const FMap& f) {
    if (f.target.dims != g.source.dims) throw ModuleError("FMap compose: middle mismatch");
    FMap r{f.source, g.target, {}};
    for (size_t v = 0; v < f.comps.size(); ++v) r.comps.push_back(mul(g.comps[v], f.comps[v]));
    return r;
}

FMap map_add(const FMap& a, const FMap& b) {
    FMap r = a;
    for (size_t v = 0; v < r.comps.size(); ++v) r.comps[v] = add(r.comps[v], b.comps[v]);
    return r;
}

FMap map_sub(const FMap& a, const FMap& b) {
    FMap r = a;
    for (size_t v = 0; v < r.comps.size(); ++v) r.comps[v] = sub(r.comps[v], b.comps[v]);
    return r;
}

FMap map_smul(const Scalar& s, const FMap& f) {
    FMap r = f;
    for (auto& m : r.comps) m = smul(s, m);
    return r;
}

bool map_equal(const FMap& a, const FMap& b) { return a.comps == b.comps; }

FModule yoneda_projective(const CatPtr& cat, int v) {
    int n = cat->nobj();
    std::vector<int> dims(n);
    for (int w = 0; w < n; ++w) dims[w] = cat->dim(v, w);
    FModule m = make_module_skeleton(cat, dims);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int k = 0; k < cat->dim(x, y); ++k) {
                Mat& a = m.act[x][y][k];
                for (int i = 0; i < cat->dim(v, x); ++i) {
                    Vec col = cat->compose_basis(v, x, y, i, k);
                    for (int r = 0; r < cat->dim(v, y); ++r) a.at(r, i) = col[r];
                }
            }
    return m;
}

FMap yoneda_map(const FModule& m_mod, int v, const Vec& elem) {
    const CatPtr& cat = m_mod.cat;
    FModule yv = yoneda_projective(cat, v);
    FMap f{yv, m_mod, {}};
    for (int w = 0; w < cat->nobj(); ++w) {
        Mat comp(cat->fs, m_mod.dims[w], cat->dim(v, w));
        for (int k = 0; k < cat->dim(v, w); ++k) {
            Vec e(cat->dim(v, w), Scalar(0));
            e[k] = 1;
            Vec img = apply_vec(m_mod.act_mor(Mor{v, w, e}), elem);
            for (int r = 0; r < m_mod.dims[w]; ++r) comp.at(r, k) = img[r];
        }
        f.comps.push_back(std::move(comp));
    }
    return f;
}

FModule realize_bundle(const CatPtr& cat, const ProjBundle& p) {
    std::vector<FModule> parts;
    for (int v : p.vertices) {
        if (v < 0 || v >= cat->nobj()) throw UnknownSymbolError("bundle vertex out of range");
        parts.push_back(yoneda_projective(cat, v));
    }
    return direct_sum(cat, parts);
}

std::vector<FMap> hom_modules(const FModule& m, const FModule& n) {
    if (!same_category(m.cat, n.cat)) throw ModuleError("hom across categories");
    const CatTable& c = *m.cat;
    int nv = c.nobj();
    std::vector<int> off(nv + 1, 0);
    for (int v = 0; v < nv; ++v) off[v + 1] = off[v] + n.dims[v] * m.dims[v];
    int unknowns = off[nv];
    std::vector<Vec> rows;
    for (int x = 0; x < nv; ++x)
        for (int y = 0; y < nv; ++y)
            for (int k = 0; k < c.dim(x, y); ++k) {
                const Mat& mn = n.act[x][y][k];
                const Mat& mm = m.act[x][y][k];
                // n(e)·φ_x = φ_y·m(e), entry (r, col)
                for (int r = 0; r < n.dims[y]; ++r)
                    for (int col = 0; col < m.dims[x]; ++col) {
                        Vec row(unknowns, Scalar(0));
                        bool nonzero = false;
                        for (int s = 0; s < n.dims[x]; ++s)
                            if (!fis_zero(mn.at(r, s))) {
                                row[off[x] + s * m.dims[x] + col] =
                                    fadd(c.fs, row[off[x] + s * m.dims[x] + col], mn.at(r, s));
                                nonzero = true;
                            }
                        for (int t = 0; t < m.dims[y]; ++t)
                            if (!fis_zero(mm.at(t, col))) {
                                row[off[y] + r * m.dims[y] + t] =
                                    fsub(c.fs, row[off[y] + r * m.dims[y] + t], mm.at(t, col));
                                nonzero = true;
                            }
                        if (nonzero) rows.push_back(std::move(row));
                    }
            }
    Mat sys = rows.empty() ? Mat(c.fs, 0, unknowns) : Mat::from_rows(c.fs, rows);
    Subspace ker = kernel_basis(sys);
    std::vector<FMap> basis;
    for (int i = 0; i < ker.dim(); ++i) {
        FMap f{m, n, {}};
        for (int v = 0; v < nv; ++v) {
            Mat comp(c.fs, n.dims[v], m.dims[v]);
            for (int r = 0; r < n.dims[v]; ++r)
                for (int col = 0; col < m.dims[v]; ++col)
                    comp.at(r, col) = ker.basis.at(i, off[v] + r * m.dims[v] + col);
            f.comps.push_back(std::move(comp));
        }
        basis.push_back(std::move(f));
    }
    return basis;
}

int hom_dim(const FModule& m, const FModule& n) { return int(hom_modules(m, n).size()); }

Vec flatten_map(const FMap& f) {
    Vec v;
    for (const Mat& m : f.comps) v.insert(v.end(), m.a.begin(), m.a.end());
    return v;
}

Mat hom_basis_matrix(const std::vector<FMap>& basis, FieldSpec fs, int len) {
    std::vector<Vec> rows;
    for (const auto& f : basis) rows.push_back(flatten_map(f));
    return rows.empty() ? Mat(fs, 0, len) : Mat::from_rows(fs, rows);
}

SubQuotient submodule(const FModule& m, const std::vector<Subspace>& sub) {
    const CatTable& c = *m.cat;
    int n = c.nobj();
    std::vector<int> dims(n);
    for (int v = 0; v < n; ++v) {
        if (sub[v].ambient_dim != m.dims[v]) throw ModuleError("submodule ambient mismatch");
        dims[v] = sub[v].dim();
    }
    FModule s = make_module_skeleton(m.cat, dims);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int k = 0; k < c.dim(x, y); ++k) {
                // restricted matrix: solve B_y^T · A = act · B_x^T
                Mat rhs = mul(m.act[x][y][k], transpose(sub[x].basis));
                auto a = solve(transpose(sub[y].basis), rhs);
                if (!a) throw ModuleError("subspaces are not action-invariant");
                s.act[x][y][k] = *a;
            }
    FMap incl{s, m, {}};
    for (int v = 0; v < n; ++v) incl.comps.push_back(transpose(sub[v].basis));
    return {s, incl};
}

SubQuotient quotient_module(const FModule& m, const std::vector<Subspace>& sub) {
    const CatTable& c = *m.cat;
    int n = c.nobj();
    std::vector<Mat> proj(n);
    std::vector<int> dims(n);
    for (int v = 0; v < n; ++v) {
        proj[v] = quotient_map(m.dims[v], sub[v]);
        dims[v] = proj[v].rows;
    }
    FModule qm = make_module_skeleton(m.cat, dims);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int k = 0; k < c.dim(x, y); ++k) {
                // A with A·proj_x = proj_y·act
                Mat rhs = transpose(mul(proj[y], m.act[x][y][k]));
                auto at = solve(transpose(proj[x]), rhs);
                if (!at) throw ModuleError("subspaces are not action-invariant (quotient)");
                qm.act[x][y][k] = transpose(*at);
            }
    FMap p{m, qm, {}};
    p.comps = std::move(proj);
    return {qm, p};
}

SubQuotient kernel(const FMap& f) {
    std::vector<Subspace> sub;
    for (const Mat& comp : f.comps) sub.push_back(kernel_basis(comp));
    return submodule(f.source, sub);
}

SubQuotient image(const FMap& f) {
    std::vector<Subspace> sub;
    for (const Mat& comp : f.comps) sub.push_back(image_basis(comp));
    return submodule(f.target, sub);
}

SubQuotient cokernel(const FMap& f) {
    std::vector<Subspace> sub;
    for (const Mat& comp : f.comps) sub.push_back(image_basis(comp));
    return quotient_module(f.target, sub);
}

SubQuotient radical_submodule(const FModule& m) {
    const CatTable& c = *m.cat;
    int n = c.nobj();
    std::vector<Subspace> sub;
    for (int v = 0; v < n; ++v) {
        Subspace s = Subspace::zero(c.fs, m.dims[v]);
        for (int x = 0; x < n; ++x)
            for (int i = 0; i < c.rad[x][v].dim(); ++i) {
                Mor r{x, v, c.rad[x][v].basis.row(i)};
                s = subspace_sum(s, image_basis(m.act_mor(r)));
            }
        sub.push_back(std::move(s));
    }
    return submodule(m, sub);
}

SubQuotient top_quotient(const FModule& m) {
    const CatTable& c = *m.cat;
    int n = c.nobj();
    std::vector<Subspace> sub;
    for (int v = 0; v < n; ++v) {
        Subspace s = Subspace::zero(c.fs, m.dims[v]);
        for (int x = 0; x < n; ++x)
            for (int i = 0; i < c.rad[x][v].dim(); ++i) {
                Mor r{x, v, c.rad[x][v].basis.row(i)};
                s = subspace_sum(s, image_basis(m.act_mor(r)));
            }
        sub.push_back(std::move(s));
    }
    return quotient_module(m, sub);
}

std::vector<Subspace> socle_subspaces(const FModule& m) {
    const CatTable& c = *m.cat;
    int n = c.nobj();
    std::vector<Subspace> soc;
    for (int v = 0; v < n; ++v) {
        Subspace s = Subspace::full(c.fs, m.dims[v]);
        for (int y = 0; y < n; ++y)
            for (int i = 0; i < c.rad[v][y].dim(); ++i) {
                Mor r{v, y, c.rad[v][y].basis.row(i)};
                s = subspace_intersect(s, kernel_basis(m.act_mor(r)));
            }
        soc.push_back(std::move(s));
    }
    return soc;
}

FModule simple_module(const CatPtr& cat, int v) {
    if (cat->is_zero_object(v))
        throw ModuleError("no simple at a zero object: " + cat->objects[v]);
    return top_quotient(yoneda_projective(cat, v)).module;
}

Cover projective_cover(const FModule& m) {
    const CatPtr& cat = m.cat;
    int n = cat->nobj();
    SubQuotient top = top_quotient(m);
    std::vector<FModule> parts;
    std::vector<FMap> ymaps;
    std::vector<int> mult(n, 0);
    for (int v = 0; v < n; ++v) {
        mult[v] = top.module.dims[v];
        for (int i = 0; i < top.module.dims[v]; ++i) {
            Mat e(cat->fs, top.module.dims[v], 1);
            e.at(i, 0) = 1;
            auto lift = solve(top.map.comps[v], e);
            if (!lift) throw ModuleError("projective cover: top lift failed");
            parts.push_back(yoneda_projective(cat, v));
            ymaps.push_back(yoneda_map(m, v, lift->col(0)));
        }
    }
    FModule p0 = direct_sum(cat, parts);
    FMap cov{p0, m, {}};
    for (int w = 0; w < n; ++w) {
        Mat comp(cat->fs, m.dims[w], 0);
        for (const auto& ym : ymaps) comp = hstack(comp, ym.comps[w]);
        cov.comps.push_back(std::move(comp));
    }
    // surjectivity and superfluous kernel
    for (int w = 0; w < n; ++w)
        if (rank(cov.comps[w]) != m.dims[w]) throw ModuleError("cover not surjective");
    SubQuotient rad = radical_submodule(p0);
    for (int w = 0; w < n; ++w) {
        Subspace kw = kernel_basis(cov.comps[w]);
        Subspace rw = Subspace::span_rows(transpose(rad.map.comps[w]));
        rw.ambient_dim = p0.dims[w];
        if (!rw.contains(kw)) throw ModuleError("cover kernel escapes the radical");
    }
    return Cover{p0, cov, mult};
}

FModule dualize(const FModule& m) {
    CatPtr op = opposite_table(m.cat);
    FModule d = make_module_skeleton(op, m.dims);
    int n = op->nobj();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int k = 0; k < op->dim(x, y); ++k)
                d.act[x][y][k] = transpose(m.act[y][x][k]);
    return d;
}

FMap dualize(const FMap& f) {
    FMap d{dualize(f.target), dualize(f.source), {}};
    for (const Mat& comp : f.comps) d.comps.push_back(transpose(comp));
    return d;
}

FModule with_category(const FModule& m, const CatPtr& cat) {
    if (!same_category(m.cat, cat)) throw ModuleError("with_category: categories differ");
    FModule r = m;
    r.cat = cat;
    return r;
}

FModule indecomposable_injective(const CatPtr& cat, int v) {
    return with_category(dualize(yoneda_projective(opposite_table(cat), v)), cat);
}

Envelope injective_envelope(const FModule& m) {
    FModule dm = dualize(m);
    Cover c = projective_cover(dm);
    FMap env = dualize(c.map);  // D(D(m)) -> D(p0)
    env.source = with_category(env.source, m.cat);
    env.target = with_category(env.target, m.cat);
    if (!module_equal(env.source, m)) throw ModuleError("double dual mismatch");
    env.source = m;
    // essential: the socle of J0 meets the image (soc(J0) ⊆ im(env) suffices)
    std::vector<Subspace> soc = socle_subspaces(env.target);
    for (int v = 0; v < m.cat->nobj(); ++v) {
        Subspace im = image_basis(env.comps[v]);
        if (!im.contains(soc[v])) throw ModuleError("envelope not essential");
    }
    return Envelope{env.target, env};
}

TensorSpace tensor_over_C(const FModule& n_op, const FModule& m) {
    CatPtr op = opposite_table(m.cat);
    if (!same_category(n_op.cat, op)) throw ModuleError("tensor: N must live over C^op");
    const CatTable& c = *m.cat;
    int nv = c.nobj();
    TensorSpace t;
    t.offset.resize(nv + 1, 0);
    for (int v = 0; v < nv; ++v) t.offset[v + 1] = t.offset[v] + n_op.dims[v] * m.dims[v];
    int total = t.offset[nv];
    std::vector<Vec> rows;
    for (int x = 0; x < nv; ++x)
        for (int y = 0; y < nv; ++y)
            for (int k = 0; k < c.dim(x, y); ++k) {
                const Mat& nmat = n_op.act[y][x][k];  // N(e): N(y) -> N(x)
                const Mat& mmat = m.act[x][y][k];     // M(e): M(x) -> M(y)
                for (int alpha = 0; alpha < n_op.dims[y]; ++alpha)
                    for (int beta = 0; beta < m.dims[x]; ++beta) {
                        Vec row(total, Scalar(0));
                        bool nonzero = false;
                        for (int s = 0; s < n_op.dims[x]; ++s)
                            if (!fis_zero(nmat.at(s, alpha))) {
                                row[t.offset[x] + s * m.dims[x] + beta] =
                                    fadd(c.fs, row[t.offset[x] + s * m.dims[x] + beta],
                                         nmat.at(s, alpha));
                                nonzero = true;
                            }
                        for (int u = 0; u < m.dims[y]; ++u)
                            if (!fis_zero(mmat.at(u, beta))) {
                                row[t.offset[y] + alpha * m.dims[y] + u] =
                                    fsub(c.fs, row[t.offset[y] + alpha * m.dims[y] + u],
                                         mmat.at(u, beta));
                                nonzero = true;
                            }
                        if (nonzero) rows.push_back(std::move(row));
                    }
            }
    Mat rel = rows.empty() ? Mat(c.fs, 0, total) : Mat::from_rows(c.fs, rows);
    Subspace span = Subspace::span_rows(rel);
    span.ambient_dim = total;
    if (span.basis.cols != total) span.basis = Mat(c.fs, 0, total);
    t.proj = quotient_map(total, span);
    t.dim = t.proj.rows;
    return t;
}

Mat tensor_induced(const FModule& n_op, const TensorSpace& t_src, const TensorSpace& t_dst,
                   const FMap& g) {
    const FieldSpec fs = g.source.cat->fs;
    int nv = g.source.cat->nobj();
    int src_total = t_src.offset[nv];
    int dst_total = t_dst.offset[nv];
    Mat big(fs, dst_total, src_total);
    for (int v = 0; v < nv; ++v) {
        int dm = g.source.dims[v], dmp = g.target.dims[v];
        for (int alpha = 0; alpha < n_op.dims[v]; ++alpha)
            for (int tgt = 0; tgt < dmp; ++tgt)
                for (int beta = 0; beta < dm; ++beta)
                    big.at(t_dst.offset[v] + alpha * dmp + tgt,
                           t_src.offset[v] + alpha * dm + beta) = g.comps[v].at(tgt, beta);
    }
    // X with X·proj_src = proj_dst·big
    Mat rhs = transpose(mul(t_dst.proj, big));
    auto xt = solve(transpose(t_src.proj), rhs);
    if (!xt) throw ModuleError("tensor induced map does not factor");
    return transpose(*xt);
}

// ---------------------------------------------------------------------------
// decomposition

static std::vector<Summand> decompose_rec(const FModule& m);

static std::optional<std::pair<SubQuotient, SubQuotient>> fitting_split(const FModule& m,
                                                                        const FMap& phi) {
    int n = m.total_dim();
    FMap pw = identity_map(m);
    for (int i = 0; i < n; ++i) pw = compose(phi, pw);
    SubQuotient k = kernel(pw);
    SubQuotient im = image(pw);
    if (k.module.total_dim() == 0 || im.module.total_dim() == 0) return std::nullopt;
    if (k.module.total_dim() + im.module.total_dim() != n)
        throw ModuleError("fitting split dims broken");
    return std::make_pair(k, im);
}

// minimal polynomial of phi inside End(M), via linear algebra on flattened powers
static std::vector<Scalar> min_poly(const FModule& m, const FMap& phi) {
    FieldSpec fs = m.cat->fs;
    int len = 0;
    for (int v = 0; v < m.cat->nobj(); ++v) len += m.dims[v] * m.dims[v];
    std::vector<Vec> rows;
    FMap p = identity_map(m);
    while (true) {
        Vec flat = flatten_map(p);
        Mat basis = rows.empty() ? Mat(fs, 0, len) : Mat::from_rows(fs, rows);
        if (!rows.empty()) {
            auto sol = solve(transpose(basis), Mat::col_vec(fs, flat));
            if (sol) {
                // phi^d = sum c_i phi^i -> monic minimal polynomial
                std::vector<Scalar> coeffs(rows.size() + 1, Scalar(0));
                for (size_t i = 0; i < rows.size(); ++i) coeffs[i] = fneg(fs, sol->at(int(i), 0));
                coeffs[rows.size()] = 1;
                return coeffs;
            }
        }
        rows.push_back(flat);
        p = compose(phi, p);
        if (rows.size() > size_t(len + 1)) throw ModuleError("min_poly runaway");
    }
}

static std::vector<Scalar> rational_roots(const FieldSpec& fs, const std::vector<Scalar>& poly) {
    std::vector<Scalar> roots;
    auto eval = [&](const Scalar& x) {
        Scalar acc(0);
        for (auto it = poly.rbegin(); it != poly.rend(); ++it)
            acc = fadd(fs, fmul(fs, acc, x), *it);
        return acc;
    };
    if (fs.kind == FieldKind::prime_field) {
        for (unsigned long r = 0; r < fs.characteristic; ++r)
            if (fis_zero(eval(Scalar(r)))) roots.push_back(Scalar(r));
        return roots;
    }
    // integer-clear, then p/q with p | a0, q | a_lead
    mpz_class lcm_den(1);
    for (const auto& c : poly) lcm_den = lcm(lcm_den, c.get_den());
    std::vector<mpz_class> ip;
    for (const auto& c : poly) ip.push_back(mpz_class(c * lcm_den));
    int lo = 0;
    while (lo < int(ip.size()) && ip[lo] == 0) ++lo;
    if (lo == int(ip.size())) return {Scalar(0)};
    if (lo > 0) roots.push_back(Scalar(0));
    mpz_class a0 = abs(ip[lo]), an = abs(ip.back());
    auto divisors = [](const mpz_class& v) {
        std::vector<mpz_class> ds;
        for (mpz_class d(1); d * d <= v; ++d)
            if (v % d == 0) {
                ds.push_back(d);
                ds.push_back(v / d);
            }
        return ds;
    };
    if (a0 > 100000 || an > 100000) {
        // coefficient blowup: fall back to small candidates only
        for (int p = -8; p <= 8; ++p)
            if (fis_zero(eval(Scalar(p)))) roots.push_back(Scalar(p));
        return roots;
    }
    for (const auto& p : divisors(a0))
        for (const auto& q : divisors(an))
            for (int sign = -1; sign <= 1; sign += 2) {
                Scalar cand(sign * p, q);
                cand.canonicalize();
                if (fis_zero(eval(cand))) {
                    if (std::find(roots.begin(), roots.end(), cand) == roots.end())
                        roots.push_back(cand);
                }
            }
    return roots;
}

static std::vector<Summand> decompose_pair(const FModule& m, const SubQuotient& k,
                                           const SubQuotient& im) {
    // projections: invert [B_k^T | B_im^T] per object
    int n = m.cat->nobj();
    FMap projk{m, k.module, {}}, projim{m, im.module, {}};
    for (int v = 0; v < n; ++v) {
        Mat u = hstack(k.map.comps[v], im.map.comps[v]);
        auto inv = solve(u, Mat::identity(m.cat->fs, m.dims[v]));
        if (!inv) throw ModuleError("fitting: not a direct sum");
        Mat pk(m.cat->fs, k.module.dims[v], m.dims[v]);
        Mat pi(m.cat->fs, im.module.dims[v], m.dims[v]);
        for (int r = 0; r < k.module.dims[v]; ++r)
            for (int c2 = 0; c2 < m.dims[v]; ++c2) pk.at(r, c2) = inv->at(r, c2);
        for (int r = 0; r < im.module.dims[v]; ++r)
            for (int c2 = 0; c2 < m.dims[v]; ++c2)
                pi.at(r, c2) = inv->at(k.module.dims[v] + r, c2);
        projk.comps.push_back(std::move(pk));
        projim.comps.push_back(std::move(pi));
    }
    std::vector<Summand> out;
    for (auto& s : decompose_rec(k.module)) {
        out.push_back(Summand{s.part, compose(k.map, s.incl), compose(s.proj, projk)});
    }
    for (auto& s : decompose_rec(im.module)) {
        out.push_back(Summand{s.part, compose(im.map, s.incl), compose(s.proj, projim)});
    }
    return out;
}

static std::vector<Summand> decompose_rec(const FModule& m) {
    if (m.is_zero()) return {};
    std::vector<FMap> endos = hom_modules(m, m);
    if (endos.size() > 1) {
        std::vector<FMap> candidates;
        for (const auto& h : endos) candidates.push_back(h);
        for (size_t i = 0; i + 1 < endos.size() && endos.size() <= 8; ++i)
            candidates.push_back(map_add(endos[i], endos[i + 1]));
        for (const auto& h : candidates) {
            auto poly = min_poly(m, h);
            for (const auto& root : rational_roots(m.cat->fs, poly)) {
                FMap shifted = map_sub(h, map_smul(root, identity_map(m)));
                auto split = fitting_split(m, shifted);
                if (split) return decompose_pair(m, split->first, split->second);
            }
        }
    }
    return {Summand{m, identity_map(m), identity_map(m)}};
}

std::vector<Summand> decompose(const FModule& m) {
    auto out = decompose_rec(m);
    // sanity: the inclusions/projections resolve the identity
    if (!out.empty()) {
        FMap acc = zero_map(m, m);
        for (const auto& s : out) acc = map_add(acc, compose(s.incl, s.proj));
        if (!map_equal(acc, identity_map(m)))
            throw ModuleError("decompose: inclusions do not resolve the identity");
    }
    return out;
}

bool modules_isomorphic(const FModule& a, const FModule& b) {
    if (!same_category(a.cat, b.cat)) return false;
    if (a.dims != b.dims) return false;
    if (a.total_dim() == 0) return true;
    std::vector<FMap> homs = hom_modules(a, b);
    if (homs.empty()) return false;
    auto invertible = [&](const FMap& f) {
        for (const Mat& comp : f.comps)
            if (rank(comp) != comp.rows) return false;
        return true;
    };
    for (const auto& h : homs)
        if (invertible(h)) return true;
    Rng rng(0xc0ffee);
    for (int trial = 0; trial < 200; ++trial) {
        FMap f = zero_map(a, b);
        for (const auto& h : homs)
            f = map_add(f, map_smul(Scalar(rng.uniform(-3, 3)), h));
        if (invertible(f)) return true;
    }
    return false;
}

bool is_projective(const FModule& m) {
    if (m.is_zero()) return true;
    Cover c = projective_cover(m);
    return c.p0.total_dim() == m.total_dim();
}

bool is_injective(const FModule& m) { return is_projective(dualize(m)); }

FModule random_extension(const FModule& a, const FModule& b, Rng& rng) {
    Cover c = projective_cover(a);
    SubQuotient k = kernel(c.map);
    std::vector<FMap> homs = hom_modules(k.module, b);
    if (homs.empty()) return direct_sum(a.cat, {b, a});
    FMap phi = zero_map(k.module, b);
    for (const auto& h : homs) phi = map_add(phi, map_smul(Scalar(rng.uniform(-2, 2)), h));
    // pushout of 0→K→P0→A→0 along phi: E = (B ⊕ P0)/span{(phi(x), -incl(x))}
    FModule big = direct_sum(a.cat, {b, c.p0});
    int n = a.cat->nobj();
    std::vector<Subspace> rel;
    for (int v = 0; v < n; ++v) {
        std::vector<Vec> rows;
        for (int i = 0; i < k.module.dims[v]; ++i) {
            Vec e(k.module.dims[v], Scalar(0));
            e[i] = 1;
            Vec pb = apply_vec(phi.comps[v], e);
            Vec pi = apply_vec(k.map.comps[v], e);
            Vec row;
            row.insert(row.end(), pb.begin(), pb.end());
            for (const auto& x : pi) row.push_back(fneg(a.cat->fs, x));
            rows.push_back(std::move(row));
        }
        Mat rm = rows.empty() ? Mat(a.cat->fs, 0, big.dims[v]) : Mat::from_rows(a.cat->fs, rows);
        Subspace s = Subspace::span_rows(rm);
        s.ambient_dim = big.dims[v];
        if (s.basis.cols != big.dims[v]) s.basis = Mat(a.cat->fs, 0, big.dims[v]);
        rel.push_back(std::move(s));
    }
    FModule e = quotient_module(big, rel).module;
    if (e.total_dim() != a.total_dim() + b.total_dim())
        throw ModuleError("random_extension: wrong dimension");
    return e;
}

}  // namespace functcat
