#pragma once

// Morphism and extension spaces for representations of an acyclic quiver.
//
// Both are read off one linear map: with coordinates phi = (phi_v) in
// ⊕_v Hom(X_v, Y_v), the constraint map
//
//     D(phi)_a = Y_a phi_{s(a)} - phi_{t(a)} X_a
//
// has Hom(X,Y) = ker D, and for the canonical projective presentation
// 0 -> ⊕_a P_{t(a)}^{x_{s(a)}} -> ⊕_v P_v^{x_v} -> X -> 0 of a hereditary
// path algebra, Ext^1(X,Y) = coker D. Ext classes are stored as cocycles:
// one matrix per arrow, c_a of shape Y_{t(a)} x X_{s(a)}, modulo im D.
// The presentation is functorial with P_1-component f_{s(a)} per arrow, so
// pulling a class back along f: X' -> X is c_a -> c_a f_{s(a)} and pushing
// forward along w: Y -> Y' is c_a -> w_{t(a)} c_a.

#include <memory>
#include <vector>

#include "tamerep/rep.hpp"

namespace tamerep {

using Cocycle = std::vector<Matrix>; // one matrix per arrow

struct HomSpace {
    std::vector<int> xdim, ydim;
    std::vector<MorphMats> basis;
    std::vector<int> free_cols; // flat phi-coordinates carrying the basis coefficients

    int dim() const { return (int)basis.size(); }
    // coefficients of a morphism in this basis (reads the free coordinates)
    Vec coeffs(const MorphMats& f) const;
    MorphMats combination(const Vec& c) const;
};

struct ExtSpace {
    std::vector<int> xdim, ydim;
    int ambient = 0;                       // sum over arrows of x_{s(a)} * y_{t(a)}
    std::shared_ptr<ColumnSpan> image;     // im D inside the cocycle space
    std::vector<Cocycle> basis;            // representatives (unit complement coords)

    int dim() const { return (int)basis.size(); }
    Vec coords(const Cocycle& c) const;    // quotient coordinates of a cocycle
    bool is_zero_class(const Cocycle& c) const;
    Cocycle combination(const Vec& c) const;
};

// Flattening helpers shared by hom/ext computations.
int flat_phi_dim(const Quiver& q, const std::vector<int>& xd, const std::vector<int>& yd);
Vec flatten_morphism(const Quiver& q, const std::vector<int>& xd, const std::vector<int>& yd,
                     const MorphMats& f);
MorphMats unflatten_morphism(const Quiver& q, const std::vector<int>& xd,
                             const std::vector<int>& yd, const Vec& v);
int flat_cocycle_dim(const Quiver& q, const std::vector<int>& xd, const std::vector<int>& yd);
Vec flatten_cocycle(const Quiver& q, const std::vector<int>& xd, const std::vector<int>& yd,
                    const Cocycle& c);
Cocycle unflatten_cocycle(const Quiver& q, const std::vector<int>& xd, const std::vector<int>& yd,
                          const Vec& v);

Matrix hom_constraint_matrix(const Rep& x, const Rep& y);

HomSpace hom_space(const Rep& x, const Rep& y);
int hom_dim(const Rep& x, const Rep& y);

ExtSpace ext1_space(const Rep& x, const Rep& y);
int ext1_dim(const Rep& x, const Rep& y);

Cocycle zero_cocycle(const Rep& x, const Rep& y);
Cocycle cocycle_pullback(const Rep& xnew, const Rep& xold, const Rep& y, const Cocycle& c,
                         const MorphMats& f); // along f: xnew -> xold
Cocycle cocycle_pushforward(const Rep& x, const Rep& yold, const Rep& ynew, const Cocycle& c,
                            const MorphMats& w); // along w: yold -> ynew
Cocycle cocycle_add(const Cocycle& a, const Cocycle& b);

// Middle term of the extension 0 -> B -> E -> A -> 0 classified by cocycle c
// (a class in Ext^1(A,B)); also returns the inclusion and projection.
Rep extension_middle(const Rep& a, const Rep& b, const Cocycle& c, MorphMats* incl_b,
                     MorphMats* proj_a);

// End(X) analysis. trace_form_radical_rank = dim of End(X)/rad End(X),
// computed from the radical of the trace bilinear form (char 0).
struct EndInfo {
    HomSpace end;
    int semisimple_dim = 0; // dim End / rad End
    bool local() const { return semisimple_dim == 1; }
};
EndInfo end_info(const Rep& x);
bool is_brick(const Rep& x);

// Indecomposability via Fitting splits + the local-endomorphism test.
bool is_indecomposable(const Rep& x);

// Splits X into indecomposable pieces (as subrepresentations of X).
std::vector<Rep> split_indecomposables(const Rep& x);

// Explicit isomorphism search between two representations (exact; tries
// basis elements and seeded combinations of Hom(X,Y)).
bool is_isomorphic(const Rep& x, const Rep& y);

} // namespace tamerep
