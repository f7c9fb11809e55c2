#pragma once

// The cluster category C = D^b(H)/tau^{-1}[1] on its fundamental domain
// ind H ∪ H[1], the BMR quotient by morphisms factoring through add(tau T~),
// and the cluster-tilted algebra B = End_C(T~).
//
// Objects are modules (arbitrary representations, so sums like tX ⊕ P work
// directly) or shifted indecomposable projectives P_v[1]. Graded Hom spaces:
//
//   Hom_C(X~, Y~)      = Hom_H(X,Y) ⊕ Ext^1(X, C-Y)        (modules)
//   Hom_C(P~[1], Y~)   = Hom_H(P, C-Y)                      (degree 1)
//   Hom_C(X~, P~[1])   = Ext^1(X, P)                        (degree 0 slot of
//                                                            the shifted target)
//   Hom_C(P~[1], P'~[1]) = Hom_H(P, P')
//
// where C- is the fixed tau^{-1} realization (BGP Coxeter functor), used
// consistently for spaces and for transporting degree-0 maps in compositions.
// Degree-2 composites vanish and are never materialized.

#include <map>
#include <memory>
#include <mutex>

#include "tamerep/tilting.hpp"

namespace tamerep {

struct CObj {
    std::shared_ptr<const Rep> rep; // the module, or P_v for the shifted case
    int shifted_vertex = -1;        // >= 0: this is P_v[1]

    bool shifted() const { return shifted_vertex >= 0; }
    auto key() const { return std::pair(rep.get(), shifted_vertex); }
    friend bool operator==(const CObj& a, const CObj& b) { return a.key() == b.key(); }
};

CObj module_obj(std::shared_ptr<const Rep> rep);
CObj module_obj(const Catalog& cat, const IndecLabel& l);
CObj shifted_obj(const Catalog& cat, int vertex);

// Morphism components; which slots are used depends on the object kinds.
struct CMorph {
    MorphMats deg0;
    Cocycle deg1;
};

struct ClusterHom {
    CObj x, y;
    HomSpace hom;                         // deg0 (or the P[1]-source space)
    ExtSpace ext;                         // deg1 (or the P[1]-target space)
    std::shared_ptr<const Rep> tauinv_y;  // fixed C- realization of y
    int dim0 = 0, dim1 = 0;

    int dim() const { return dim0 + dim1; }
    Vec coords(const CMorph& f) const;
    CMorph from_coords(const Vec& c) const;
    CMorph basis_elt(int k) const;
    CMorph zero() const;

    // C- transports of the deg0 basis (module-module pairs only), built on
    // demand by the context; empty until then.
    std::vector<MorphMats> tau0_basis;
    bool tau0_ready = false;
};

// Shared computation context: fixed C- realizations, memoized cluster Hom
// spaces, the tilting data and the BMR factoring quotients. Thread-safe for
// concurrent readers (every cache sits behind one mutex).
class BmrContext {
  public:
    // Any rigid summand list works (e.g. T = H for the End_C(H~) = H anchor);
    // tau T_i is the module C+(T_i) for non-projective T_i and P_i[1] for a
    // projective one (tau_C P~ = P~[1]).
    BmrContext(const Catalog& cat, std::vector<IndecLabel> labels);
    BmrContext(const Catalog& cat, const TiltingModule& t) : BmrContext(cat, t.summands) {}

    const Catalog& catalog() const { return *cat_; }
    const std::vector<IndecLabel>& summand_labels() const { return labels_; }
    const std::vector<CObj>& t_objs() const { return t_objs_; }
    const std::vector<CObj>& tau_t_objs() const { return tau_t_objs_; }

    std::shared_ptr<const Rep> tau_inv_rep(const std::shared_ptr<const Rep>& r);

    const ClusterHom& chom(const CObj& x, const CObj& y);

    // g after f; objects must chain x -> y -> z
    CMorph compose(const CObj& x, const CObj& y, const CObj& z, const CMorph& g, const CMorph& f);

    CMorph identity(const CObj& x);
    // lift an H-morphism to a degree-0 cluster morphism
    CMorph lift(const CObj& x, const CObj& y, const MorphMats& f) const;

    struct BHom {
        const ClusterHom* ambient = nullptr;
        std::shared_ptr<ColumnSpan> factoring; // inside ambient coordinates
        int dim = 0;                           // quotient dimension
        Vec reduce(const Vec& ambient_coords) const {
            return factoring->quotient_coords(ambient_coords);
        }
    };
    const BHom& bhom(const CObj& x, const CObj& y);

    // dim_B X' at vertex i, i.e. dim Hom_C(T_i~, X~)
    std::vector<int> b_dims(const CObj& x);
    bool collapses_to_zero(const CObj& x);

    // matrix of Hom_C(T_i~, f): Hom_C(T_i~, X~) -> Hom_C(T_i~, Y~)
    Matrix hom_t_operator(int i, const CObj& x, const CObj& y, const CMorph& f);

    // scalar part of an endomorphism class: c with f = c·id + nilpotent,
    // read off the trace of the faithful action on ⊕_i Hom_C(T_i~, X~)
    Rational scalar_part(const CObj& x, const CMorph& f);

    // representative ambient coordinates of a Hom_B quotient class (zero on
    // the factoring pivots, the class coordinates on the complement)
    Vec lift_class(const CObj& x, const CObj& y, const Vec& quotient_coords);

  private:
    const Catalog* cat_;
    std::vector<IndecLabel> labels_;
    std::vector<CObj> t_objs_, tau_t_objs_;

    std::mutex mu_;
    std::map<const Rep*, std::shared_ptr<const Rep>> tauinv_cache_;
    std::map<std::pair<std::pair<const Rep*, int>, std::pair<const Rep*, int>>,
             std::unique_ptr<ClusterHom>>
        chom_cache_;
    std::map<std::pair<std::pair<const Rep*, int>, std::pair<const Rep*, int>>,
             std::unique_ptr<BHom>>
        bhom_cache_;

    ClusterHom build_chom(const CObj& x, const CObj& y);
    const ClusterHom& chom_with_tau0(const CObj& x, const CObj& y);
};

// Cluster-tilted algebra data: pairwise Hom_B spaces among the summands of
// T~, the Gabriel quiver (arrow counts from rad/rad^2) and the dimension.
struct BAlgebra {
    std::vector<CObj> summands;
    std::vector<std::vector<int>> hom_dims; // hom_dims[i][j] = dim Hom_B(i -> j)
    std::vector<std::vector<int>> arrows;   // arrows[u][v] = #arrows u -> v
    long long total_dim = 0;
};
BAlgebra b_algebra(BmrContext& ctx);

// B-module descriptor of Hom_C(T~, X~); throws std::invalid_argument
// ("collapses to zero") on objects of add(tau T~).
struct BModuleDescriptor {
    CObj source;
    std::vector<int> dims; // per B-vertex
    int total = 0;
};
BModuleDescriptor bmr_image(BmrContext& ctx, const CObj& x);

} // namespace tamerep
