#pragma once

// Tilting-module validation over the catalog, the torsion pair
// (T(T), F(T)), full enumeration of the finite torsion class and the
// maximal-cone decomposition of the regular part.
//
// Scope note: accepted tilting modules have preinjective + regular summands
// only, with nonzero preinjective part, so T(T) is always finite here.

#include <stdexcept>

#include "tamerep/catalog.hpp"

namespace tamerep {

struct TiltingError : std::runtime_error {
    enum class Kind { NotRigid, WrongCount, PreprojectiveOutOfScope, Duplicate, NoPreinjective };
    Kind kind;
    TiltingError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

struct TiltingModule {
    std::vector<IndecLabel> summands;     // input order kept: names B's vertices
    std::vector<IndecLabel> preinjective; // T_I
    std::vector<IndecLabel> regular;      // T_R
};

TiltingModule validate_tilting(const Catalog& cat, const std::vector<IndecLabel>& labels);

struct TorsionFiniteness {
    bool torsion_finite = true; // T(T); true whenever T_I != 0 (always in scope)
    bool free_finite = false;   // F(T); the dual Happel-Ringel reading
};
TorsionFiniteness classify_torsion(const Catalog& cat, const TiltingModule& t);

// Membership by exact Hom/Ext vanishing: X in T(T) iff Ext^1(T,X) = 0 iff
// Hom(X, tau T) = 0; X in F(T) iff Hom(T, X) = 0.
bool in_torsion(const Catalog& cat, const TiltingModule& t, const Rep& x);
bool in_free(const Catalog& cat, const TiltingModule& t, const Rep& x);
bool in_torsion_label(const Catalog& cat, const TiltingModule& t, const IndecLabel& x);

enum class PairMembership { Torsion, Free, Neither };
// Combined membership with the disjointness check (throws std::logic_error
// if a nonzero module tests torsion and free simultaneously).
PairMembership membership(const Catalog& cat, const TiltingModule& t, const Rep& x);

struct TorsionClass {
    std::vector<IndecLabel> preinjective_members;
    std::vector<IndecLabel> regular_members;
    int scan_bound = 0; // preinjective powers 0..scan_bound-1 were scanned
};

struct ConeDecomposition {
    std::vector<Cone> maximal_cones;
};

ConeDecomposition maximal_cones(const Catalog& cat, const TiltingModule& t);

// Complete finite list of T(T): preinjectives by the sincerity-bounded
// tau-power scan, regulars by testing the members of the maximal cones.
// Throws std::logic_error("bound insufficient") if the scan-completeness
// assertion at the bound fails (never expected).
TorsionClass enumerate_torsion(const Catalog& cat, const TiltingModule& t);

// Label-level cone membership (no realization).
bool cone_contains(const Catalog& cat, const IndecLabel& vertex, const IndecLabel& x);

// dim Hom(X, tau^b I_w) read off the Coxeter orbit of dim X; valid for any
// X without injective summands in its first b tau-shifts (preinjective
// tau^k I with k >= b, or regular X).
long long hom_dim_into_preinjective(const Catalog& cat, const std::vector<long long>& xdims,
                                    int beyond, int w, int b);

} // namespace tamerep
