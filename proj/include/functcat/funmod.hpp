#pragma once

#include "functcat/pathcat.hpp"

namespace functcat {

struct ModuleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A finitely presented functor on a CatTable: a dimension per object and a
// matrix per basis morphism. For path categories this is the usual quiver
// representation, compiled so that every basis residue has its matrix.
struct FModule {
    CatPtr cat;
    std::vector<int> dims;
    // act[x][y][k]: Mat dims[y] x dims[x] for the k-th basis morphism of Hom(x,y)
    std::vector<std::vector<std::vector<Mat>>> act;

    Mat act_mor(const Mor& m) const;
    int total_dim() const;
    bool is_zero() const;
    void validate() const;  // identities, functoriality on basis pairs
};

// content equality (categories compared by value, not by pointer)
bool module_equal(const FModule& a, const FModule& b);

struct FMap {
    FModule source;
    FModule target;
    std::vector<Mat> comps;  // per object, dims_target[v] x dims_source[v]

    void validate() const;  // naturality on every basis morphism
    bool is_zero() const;
};

// quiver-representation input: one matrix per arrow
FModule module_from_arrows(const PathCategory& pc, const std::vector<int>& dims,
                           const std::vector<Mat>& arrow_action);

FModule zero_module(const CatPtr& cat);
FModule direct_sum(const CatPtr& cat, const std::vector<FModule>& parts);
FMap sum_injection(const FModule& total, const std::vector<FModule>& parts, int which);
FMap sum_projection(const FModule& total, const std::vector<FModule>& parts, int which);

FMap identity_map(const FModule& m);
FMap zero_map(const FModule& src, const FModule& dst);
FMap compose(const FMap& g, const FMap& f);
FMap map_add(const FMap& a, const FMap& b);
FMap map_sub(const FMap& a, const FMap& b);
FMap map_smul(const Scalar& s, const FMap& f);
bool map_equal(const FMap& a, const FMap& b);

// Hom_C(v, -) with post-composition action
FModule yoneda_projective(const CatPtr& cat, int v);
// the Yoneda map yoneda(v) -> M attached to m in M(v)
FMap yoneda_map(const FModule& m_mod, int v, const Vec& elem);

struct ProjBundle {
    std::vector<int> vertices;  // with multiplicity
};
FModule realize_bundle(const CatPtr& cat, const ProjBundle& p);

// basis of the space of natural transformations M -> N
std::vector<FMap> hom_modules(const FModule& m, const FModule& n);
int hom_dim(const FModule& m, const FModule& n);

// flatten an FMap to coordinates (for expressing maps in hom bases)
Vec flatten_map(const FMap& f);
Mat hom_basis_matrix(const std::vector<FMap>& basis, FieldSpec fs, int len);

struct SubQuotient {
    FModule module;
    FMap map;  // inclusion (submodule) or projection (quotient)
};

// submodule spanned by per-object subspaces (must be action-invariant)
SubQuotient submodule(const FModule& m, const std::vector<Subspace>& sub);
SubQuotient quotient_module(const FModule& m, const std::vector<Subspace>& sub);

SubQuotient kernel(const FMap& f);
SubQuotient image(const FMap& f);
SubQuotient cokernel(const FMap& f);

FModule simple_module(const CatPtr& cat, int v);
SubQuotient radical_submodule(const FModule& m);
SubQuotient top_quotient(const FModule& m);
std::vector<Subspace> socle_subspaces(const FModule& m);

// minimal projective cover P0 ->> M; kernel lies in rad(P0)
struct Cover {
    FModule p0;
    FMap map;                 // p0 -> M, surjective
    std::vector<int> top_mult;  // multiplicity of yoneda(v) per object
};
Cover projective_cover(const FModule& m);

// vector-space duality: mod(C) -> mod(C^op); involutive on the data
FModule dualize(const FModule& m);
FMap dualize(const FMap& f);
// reinterpret m over an equal category object (content-checked)
FModule with_category(const FModule& m, const CatPtr& cat);

FModule indecomposable_injective(const CatPtr& cat, int v);
struct Envelope {
    FModule j0;
    FMap map;  // M -> J0, essential mono
};
Envelope injective_envelope(const FModule& m);

// N ⊗_C M for N over C^op, M over C, as the cokernel of the bilinearity
// relations on ⊕_v N(v)⊗M(v)
struct TensorSpace {
    int dim = 0;
    std::vector<int> offset;  // block start per object in the big sum
    Mat proj;                 // dim x total, surjective
};
TensorSpace tensor_over_C(const FModule& n_op, const FModule& m);
// map induced by g: M -> M' on the tensor spaces
Mat tensor_induced(const FModule& n_op, const TensorSpace& t_src, const TensorSpace& t_dst,
                   const FMap& g);

struct Summand {
    FModule part;
    FMap incl;
    FMap proj;
};
std::vector<Summand> decompose(const FModule& m);
bool modules_isomorphic(const FModule& a, const FModule& b);

bool is_projective(const FModule& m);
bool is_injective(const FModule& m);

// deterministic pseudo-random bits for batteries and property tests
struct Rng {
    unsigned long long state;
    explicit Rng(unsigned long long seed) : state(seed ? seed : 0x5eed5eedULL) {}
    unsigned long long next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    int uniform(int lo, int hi) {  // inclusive bounds
        return lo + int(next() % (unsigned long long)(hi - lo + 1));
    }
};

// middle term of a pseudo-random extension of A by B (i.e. 0→B→E→A→0)
FModule random_extension(const FModule& a, const FModule& b, Rng& rng);

}  // namespace functcat
