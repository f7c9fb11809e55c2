#pragma once

// Finite-dimensional representations of an acyclic quiver and morphisms
// between them. A morphism is stored as its tuple of vertex matrices
// (rows = target dimension, cols = source dimension); validity against a
// concrete source/target pair is checked by is_morphism.

#include <memory>
#include <vector>

#include "tamerep/linalg.hpp"
#include "tamerep/quiver.hpp"

namespace tamerep {

struct Rep {
    Quiver quiver;
    std::vector<int> dim;      // per vertex
    std::vector<Matrix> maps;  // per arrow, shape dim[target] x dim[source]

    int total_dim() const {
        int s = 0;
        for (int d : dim) s += d;
        return s;
    }
    bool is_zero_rep() const { return total_dim() == 0; }
    bool shapes_ok() const;
};

using MorphMats = std::vector<Matrix>; // one matrix per vertex

Rep zero_rep(const Quiver& q);
Rep projective(const Quiver& q, int v);
Rep injective(const Quiver& q, int v);
Rep simple(const Quiver& q, int v);

Rep direct_sum(const std::vector<Rep>& parts);

bool is_morphism(const Rep& x, const Rep& y, const MorphMats& f);
MorphMats identity_morphism(const Rep& x);
MorphMats zero_morphism(const Rep& x, const Rep& y);
MorphMats compose(const MorphMats& g, const MorphMats& f); // g after f
MorphMats add(const MorphMats& f, const MorphMats& g);
MorphMats scale(const Rational& c, const MorphMats& f);
bool is_zero_morphism(const MorphMats& f);

// The action of a path (arrow-index sequence, applied left to right) on x.
Matrix path_action(const Rep& x, const std::vector<int>& path, int source_vertex);

// Kernel of f: X -> Y as a representation, with the inclusion into X.
Rep kernel_rep(const Rep& x, const Rep& y, const MorphMats& f, MorphMats* inclusion);

// Image of f as a subrepresentation of Y, with its inclusion.
Rep image_rep(const Rep& x, const Rep& y, const MorphMats& f, MorphMats* inclusion);

// Cokernel of f with the projection from Y.
Rep cokernel_rep(const Rep& x, const Rep& y, const MorphMats& f, MorphMats* projection);

// Subrepresentation spanned by the given vertex-wise column collections
// (columns inside X's vertex spaces, need not be independent). Returns the
// subrep and its inclusion. The span is closed under arrows automatically
// only if the input generates a subrep; `close` additionally saturates under
// the arrow action so any vertex-wise family works.
Rep span_subrep(const Rep& x, const std::vector<std::vector<Vec>>& vectors, MorphMats* inclusion,
                bool close = true);

// Quotient X / U where incl: U -> X is injective. Returns projection.
Rep quotient_rep(const Rep& x, const Rep& u, const MorphMats& incl, MorphMats* projection);

// Radical (intersection of maximal subreps = arrow-image span) and top.
Rep radical_subrep(const Rep& x, MorphMats* inclusion);
std::vector<int> top_dims(const Rep& x);

// dim Hom(P_v, X) = X_v; the projective cover of X is built from top(X).
struct ProjectiveCover {
    Rep cover;                      // ⊕_v P_v^{t_v}
    std::vector<int> multiplicities; // t_v
    MorphMats map;                  // cover -> X, a minimal epi
};
ProjectiveCover projective_cover(const Rep& x);

} // namespace tamerep
