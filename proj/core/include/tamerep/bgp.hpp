#pragma once

// BGP reflection functors and the Coxeter functors C+ (= tau on modules
// without projective summands) and C- (= tau^{-1} without injectives).
// A full sweep reflects at every vertex once along an admissible order and
// returns to the original quiver, so C+/C- are endofunctors of rep(Q).
// Both act on morphisms; transports are what the cluster layer uses to
// compose degree-1 components.

#include <vector>

#include "tamerep/rep.hpp"

namespace tamerep {

// One full Coxeter sweep. direction = +1 for C+ (sinks, reverse topological
// order), -1 for C- (sources, topological order).
class CoxeterFunctor {
  public:
    CoxeterFunctor(const Quiver& q, int direction);

    const Quiver& quiver() const { return q_; }
    int direction() const { return dir_; }

    // Applies the functor to a representation. Kills projective (C+) or
    // injective (C-) direct summands.
    Rep apply(const Rep& x) const;

    // Transports a morphism f: X -> Y to C(f): C(X) -> C(Y). The outputs of
    // apply() are deterministic, so the transported matrices are valid
    // against apply(x), apply(y).
    MorphMats apply_to_morphism(const Rep& x, const Rep& y, const MorphMats& f) const;

  private:
    Quiver q_;
    int dir_;
    std::vector<int> order_; // admissible vertex order for the sweep

    struct Step {
        Rep rep;      // representation after the step
        Quiver before; // quiver the step was applied over
    };
    Rep reflect(const Quiver& qc, const Rep& x, int v, bool sink, Quiver* qout) const;
    MorphMats reflect_morphism(const Quiver& qc, const Rep& x, const Rep& y, const MorphMats& f,
                               int v, bool sink, const Rep& xr, const Rep& yr) const;
};

// dim tau X = Phi . dim X for X without projective summands; Phi is the
// Coxeter matrix -E^{-1} E^T of the Euler form matrix E.
Matrix coxeter_matrix(const Quiver& q);

} // namespace tamerep
