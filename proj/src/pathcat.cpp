#include "functcat/pathcat.hpp"

#include <algorithm>
#include <set>

namespace functcat {

namespace {
constexpr size_t kMaxPathsPerPair = 200000;
}

int Quiver::vertex_index(const std::string& name) const {
    for (size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == name) return int(i);
    throw UnknownSymbolError("unknown vertex: " + name);
}

int Quiver::arrow_index(const std::string& name) const {
    for (size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].name == name) return int(i);
    throw UnknownSymbolError("unknown arrow: " + name);
}

void Quiver::check() const {
    std::set<std::string> names(vertices.begin(), vertices.end());
    if (names.size() != vertices.size()) throw CategoryError("duplicate vertex name");
    std::set<std::string> anames;
    for (const auto& a : arrows) {
        if (!anames.insert(a.name).second) throw CategoryError("duplicate arrow name: " + a.name);
        if (names.count(a.name)) throw CategoryError("arrow name collides with vertex: " + a.name);
        if (a.src < 0 || a.src >= int(vertices.size()) || a.dst < 0 ||
            a.dst >= int(vertices.size()))
            throw UnknownSymbolError("arrow endpoint out of range: " + a.name);
    }
}

namespace {

struct PairData {
    std::vector<PathSeq> paths;            // sorted by (length, lex)
    std::map<PathSeq, int> index;          // path -> position
    Subspace ideal = Subspace::zero(FieldSpec::rationals(), 0);
};

int path_src(const Quiver& q, const PathSeq& p, int fallback) {
    return p.empty() ? fallback : q.arrows[p.front()].src;
}

}  // namespace

PathCategory build_path_category(const Quiver& q, const std::vector<Relation>& rels,
                                 FieldSpec fs, int max_len) {
    if (max_len < 1) throw CategoryError("max_len must be >= 1");
    q.check();
    const int n = int(q.vertices.size());

    // validate relations: nonempty composable parallel terms
    for (const auto& r : rels) {
        if (r.terms.empty()) throw CategoryError("empty relation");
        int src = -1, dst = -1;
        for (const auto& t : r.terms) {
            if (t.path.empty()) throw CategoryError("relation term must contain an arrow");
            for (size_t i = 0; i < t.path.size(); ++i) {
                if (t.path[i] < 0 || t.path[i] >= int(q.arrows.size()))
                    throw UnknownSymbolError("relation uses unknown arrow");
                if (i + 1 < t.path.size() &&
                    q.arrows[t.path[i]].dst != q.arrows[t.path[i + 1]].src)
                    throw CategoryError("relation term is not a composable path");
            }
            int s = q.arrows[t.path.front()].src;
            int d = q.arrows[t.path.back()].dst;
            if (src < 0) src = s, dst = d;
            else if (s != src || d != dst)
                throw CategoryError("relation terms are not parallel");
        }
    }

    // enumerate paths of length <= max_len per ordered pair
    std::vector<std::vector<PairData>> pairs(n, std::vector<PairData>(n));
    for (int v = 0; v < n; ++v) pairs[v][v].paths.push_back({});
    std::vector<PathSeq> frontier;
    for (int v = 0; v < n; ++v) frontier.push_back({});
    std::vector<int> frontier_dst(n);
    for (int v = 0; v < n; ++v) frontier_dst[v] = v;
    for (int len = 1; len <= max_len; ++len) {
        std::vector<PathSeq> next;
        std::vector<int> next_dst;
        for (size_t i = 0; i < frontier.size(); ++i) {
            int at = frontier_dst[i];
            for (size_t ai = 0; ai < q.arrows.size(); ++ai) {
                if (q.arrows[ai].src != at) continue;
                PathSeq p = frontier[i];
                p.push_back(int(ai));
                int s = path_src(q, p, -1), d = q.arrows[ai].dst;
                pairs[s][d].paths.push_back(p);
                if (pairs[s][d].paths.size() > kMaxPathsPerPair)
                    throw NonAdmissibleError("path explosion; lower max_len or add relations");
                next.push_back(std::move(p));
                next_dst.push_back(d);
            }
        }
        frontier = std::move(next);
        frontier_dst = std::move(next_dst);
    }
    auto by_len_lex = [](const PathSeq& a, const PathSeq& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    };
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            auto& pd = pairs[x][y];
            std::sort(pd.paths.begin(), pd.paths.end(), by_len_lex);
            for (size_t k = 0; k < pd.paths.size(); ++k) pd.index[pd.paths[k]] = int(k);
        }

    // span of the two-sided ideal generated by the relations, within the
    // bounded path space: all products (left path) ∘ relation ∘ (right path)
    // whose every term still fits in the bound
    std::vector<std::vector<std::vector<Vec>>> gen(n, std::vector<std::vector<Vec>>(n));
    for (const auto& r : rels) {
        int rs = q.arrows[r.terms[0].path.front()].src;
        int rd = q.arrows[r.terms[0].path.back()].dst;
        size_t rmax = 0;
        for (const auto& t : r.terms) rmax = std::max(rmax, t.path.size());
        for (int w = 0; w < n; ++w) {
            for (const auto& right : pairs[w][rs].paths) {
                if (right.size() + rmax > size_t(max_len)) continue;
                for (int z = 0; z < n; ++z) {
                    for (const auto& left : pairs[rd][z].paths) {
                        if (right.size() + rmax + left.size() > size_t(max_len)) continue;
                        Vec v(pairs[w][z].paths.size(), Scalar(0));
                        for (const auto& t : r.terms) {
                            PathSeq prod = right;
                            prod.insert(prod.end(), t.path.begin(), t.path.end());
                            prod.insert(prod.end(), left.begin(), left.end());
                            int idx = pairs[w][z].index.at(prod);
                            v[idx] = fadd(fs, v[idx], freduce(fs, t.coeff));
                        }
                        gen[w][z].push_back(std::move(v));
                    }
                }
            }
        }
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int amb = int(pairs[x][y].paths.size());
            if (gen[x][y].empty())
                pairs[x][y].ideal = Subspace::zero(fs, amb);
            else
                pairs[x][y].ideal = Subspace::span_rows(Mat::from_rows(fs, gen[x][y]));
        }

    // admissibility certificate: every path of length max_len dies
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (const auto& p : pairs[x][y].paths) {
                if (int(p.size()) != max_len) continue;
                Vec e(pairs[x][y].paths.size(), Scalar(0));
                e[pairs[x][y].index.at(p)] = 1;
                if (!pairs[x][y].ideal.contains(e)) {
                    std::string desc;
                    for (int ai : p) desc += (desc.empty() ? "" : ".") + q.arrows[ai].name;
                    throw NonAdmissibleError("path of length " + std::to_string(max_len) +
                                             " survives modulo relations: " + desc);
                }
            }

    // Hom bases: residues of the non-pivot paths
    PathCategory pc;
    pc.quiver = q;
    pc.relations = rels;
    pc.fs = fs;
    pc.max_len = max_len;
    pc.rep_path.assign(n, std::vector<std::vector<PathSeq>>(n));

    auto tab = std::make_shared<CatTable>();
    tab->fs = fs;
    tab->objects = q.vertices;
    tab->homdim.assign(n, std::vector<int>(n, 0));
    tab->labels.assign(n, std::vector<std::vector<std::string>>(n));
    tab->idc.resize(n);
    tab->comp.assign(n, std::vector<std::vector<std::vector<Vec>>>(
                            n, std::vector<std::vector<Vec>>(n)));
    tab->rad.assign(n, std::vector<Subspace>(n, Subspace::zero(fs, 0)));

    // reduction of a path's unit vector to basis coordinates
    std::vector<std::vector<std::vector<int>>> basis_pos(n, std::vector<std::vector<int>>(n));
    std::vector<std::vector<Mat>> reduce(n, std::vector<Mat>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const auto& pd = pairs[x][y];
            Mat qm = quotient_map(int(pd.paths.size()), pd.ideal);
            reduce[x][y] = qm;
            // non-pivot positions, in path order
            std::vector<bool> pivot(pd.paths.size(), false);
            {
                int col = 0;
                for (int i = 0; i < pd.ideal.dim(); ++i) {
                    while (fis_zero(pd.ideal.basis.at(i, col))) ++col;
                    pivot[col] = true;
                }
            }
            for (size_t k = 0; k < pd.paths.size(); ++k) {
                if (pivot[k]) continue;
                basis_pos[x][y].push_back(int(k));
                pc.rep_path[x][y].push_back(pd.paths[k]);
                std::string lab;
                if (pd.paths[k].empty())
                    lab = "id_" + q.vertices[x];
                else
                    for (auto it = pd.paths[k].rbegin(); it != pd.paths[k].rend(); ++it)
                        lab += (lab.empty() ? "" : ".") + q.arrows[*it].name;
                tab->labels[x][y].push_back(lab);
            }
            tab->homdim[x][y] = int(basis_pos[x][y].size());
        }
    auto reduce_path = [&](int x, int y, const PathSeq& p) -> Vec {
        if (int(p.size()) > pc.max_len) return Vec(tab->homdim[x][y], Scalar(0));
        Vec e(pairs[x][y].paths.size(), Scalar(0));
        e[pairs[x][y].index.at(p)] = 1;
        return apply_vec(reduce[x][y], e);
    };
    for (int v = 0; v < n; ++v) {
        Vec idv = reduce_path(v, v, {});
        bool zero = true;
        for (auto& c : idv)
            if (!fis_zero(c)) zero = false;
        if (zero) throw NonAdmissibleError("identity of " + q.vertices[v] + " lies in the ideal");
        tab->idc[v] = idv;
    }
    // composition tables; composites longer than max_len are zero because a
    // length-max_len tail already vanishes
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                auto& bucket = tab->comp[x][y][z];
                bucket.resize(size_t(tab->homdim[x][y]) * tab->homdim[y][z]);
                for (int i = 0; i < tab->homdim[x][y]; ++i)
                    for (int j = 0; j < tab->homdim[y][z]; ++j) {
                        PathSeq prod = pc.rep_path[x][y][i];
                        const PathSeq& g = pc.rep_path[y][z][j];
                        prod.insert(prod.end(), g.begin(), g.end());
                        bucket[size_t(i) + size_t(tab->homdim[x][y]) * j] =
                            reduce_path(x, z, prod);
                    }
            }
    // radical: residues of positive-length paths (these are exactly the
    // non-identity basis vectors)
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            std::vector<Vec> rows;
            for (int k = 0; k < tab->homdim[x][y]; ++k) {
                if (pc.rep_path[x][y][k].empty()) continue;
                Vec e(tab->homdim[x][y], Scalar(0));
                e[k] = 1;
                rows.push_back(std::move(e));
            }
            Mat rm = rows.empty() ? Mat(fs, 0, tab->homdim[x][y]) : Mat::from_rows(fs, rows);
            Subspace s = Subspace::span_rows(rm);
            s.ambient_dim = tab->homdim[x][y];
            if (s.basis.cols != tab->homdim[x][y]) s.basis = Mat(fs, 0, tab->homdim[x][y]);
            tab->rad[x][y] = s;
        }
    tab->validate();

    pc.table = tab;
    for (size_t ai = 0; ai < q.arrows.size(); ++ai)
        pc.arrow_coords.push_back(
            reduce_path(q.arrows[ai].src, q.arrows[ai].dst, PathSeq{int(ai)}));

    // every declared relation must be zero in the built category
    for (const auto& r : rels) {
        Vec acc;
        int src = q.arrows[r.terms[0].path.front()].src;
        int dst = q.arrows[r.terms[0].path.back()].dst;
        acc.assign(tab->homdim[src][dst], Scalar(0));
        for (const auto& t : r.terms) {
            Mor m = pc.path_mor(t.path);
            for (size_t i = 0; i < acc.size(); ++i)
                acc[i] = fadd(fs, acc[i], fmul(fs, freduce(fs, t.coeff), m.coords[i]));
        }
        for (const auto& c : acc)
            if (!fis_zero(c)) throw CategoryError("declared relation is nonzero in the category");
    }
    return pc;
}

Mor PathCategory::arrow_mor(int arrow) const {
    const auto& a = quiver.arrows[arrow];
    return Mor{a.src, a.dst, arrow_coords[arrow]};
}

Mor PathCategory::path_mor(const PathSeq& arrows) const {
    if (arrows.empty()) throw CategoryError("path_mor needs a vertex context for empty paths");
    Mor acc = identity(quiver.arrows[arrows.front()].src);
    for (int ai : arrows) acc = functcat::compose(*table, arrow_mor(ai), acc);
    return acc;
}

PathCategory opposite(const PathCategory& c) {
    PathCategory op;
    op.fs = c.fs;
    op.max_len = c.max_len;
    op.quiver.vertices = c.quiver.vertices;
    for (const auto& a : c.quiver.arrows)
        op.quiver.arrows.push_back({a.name, a.dst, a.src});
    for (const auto& r : c.relations) {
        Relation rr;
        for (const auto& t : r.terms) {
            PathSeq rev(t.path.rbegin(), t.path.rend());
            rr.terms.push_back({t.coeff, std::move(rev)});
        }
        op.relations.push_back(std::move(rr));
    }
    op.table = opposite_table(c.table);
    int n = int(c.quiver.vertices.size());
    op.rep_path.assign(n, std::vector<std::vector<PathSeq>>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (const auto& p : c.rep_path[y][x])
                op.rep_path[x][y].push_back(PathSeq(p.rbegin(), p.rend()));
    return op;
}

}  // namespace functcat
