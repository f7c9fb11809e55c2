#include "tamerep/tilting.hpp"

#include <algorithm>
#include <set>

namespace tamerep {

TiltingModule validate_tilting(const Catalog& cat, const std::vector<IndecLabel>& labels) {
    // duplicates
    std::set<IndecLabel> seen;
    for (auto& l : labels)
        if (!seen.insert(l).second)
            throw TiltingError(TiltingError::Kind::Duplicate, "duplicate summand " + l.str());
    // count
    if ((int)labels.size() != cat.quiver().n)
        throw TiltingError(TiltingError::Kind::WrongCount,
                           "wrong summand count: got " + std::to_string(labels.size()) +
                               ", need " + std::to_string(cat.quiver().n));
    // rigidity (with a witnessing pair)
    for (auto& a : labels)
        for (auto& b : labels) {
            if (cat.ext_known_zero(a, b)) continue;
            if (ext1_dim(cat.realize(a), cat.realize(b)) != 0)
                throw TiltingError(TiltingError::Kind::NotRigid,
                                   "not rigid: Ext^1(" + a.str() + ", " + b.str() + ") != 0");
        }
    // scope: preinjective + regular only
    for (auto& l : labels)
        if (l.kind == IndecLabel::Kind::Preprojective)
            throw TiltingError(TiltingError::Kind::PreprojectiveOutOfScope,
                               "preprojective summand out of scope: " + l.str());
    TiltingModule t;
    t.summands = labels;
    for (auto& l : labels)
        (l.is_regular() ? t.regular : t.preinjective).push_back(l);
    if (t.preinjective.empty())
        throw TiltingError(TiltingError::Kind::NoPreinjective,
                           "tilting module needs a nonzero preinjective part");
    return t;
}

TorsionFiniteness classify_torsion(const Catalog& cat, const TiltingModule& t) {
    (void)cat;
    TorsionFiniteness f;
    f.torsion_finite = !t.preinjective.empty();
    f.free_finite = t.preinjective.empty(); // dual reading; never true in scope
    return f;
}

long long hom_dim_into_preinjective(const Catalog& cat, const std::vector<long long>& xdims,
                                    int beyond, int w, int b) {
    if (beyond >= 0 && b > beyond) return 0; // preinjective x shallower than target
    auto shifted = b ? cat.phi_inv_apply(xdims, b) : xdims;
    return shifted[w];
}

namespace {

// dim Hom(X, tau T_j) for labelled X, avoiding matrices whenever the target
// leg is preinjective (pure Coxeter-orbit arithmetic) or structurally zero.
long long hom_to_tau_summand(const Catalog& cat, const IndecLabel& x, const IndecLabel& tj) {
    auto tau_tj = cat.tau_label(tj);
    if (!tau_tj) return 0; // projective summand: Ext^1(T_j, -) = 0
    const IndecLabel& y = *tau_tj;
    if (cat.hom_known_zero(x, y)) return 0;
    if (y.kind == IndecLabel::Kind::Preinjective &&
        x.kind != IndecLabel::Kind::Preprojective) {
        int beyond = x.kind == IndecLabel::Kind::Preinjective ? x.power : -1;
        return hom_dim_into_preinjective(cat, cat.dims_of(x), beyond, y.vertex, y.power);
    }
    return hom_dim(cat.realize(x), cat.realize(y));
}

} // namespace

bool in_torsion_label(const Catalog& cat, const TiltingModule& t, const IndecLabel& x) {
    for (auto& tj : t.summands)
        if (hom_to_tau_summand(cat, x, tj) != 0) return false;
    return true;
}

bool in_torsion(const Catalog& cat, const TiltingModule& t, const Rep& x) {
    for (auto& tj : t.summands) {
        auto tau_tj = cat.tau_label(tj);
        if (!tau_tj) continue;
        if (hom_dim(x, cat.realize(*tau_tj)) != 0) return false;
    }
    return true;
}

bool in_free(const Catalog& cat, const TiltingModule& t, const Rep& x) {
    for (auto& tj : t.summands)
        if (hom_dim(cat.realize(tj), x) != 0) return false;
    return true;
}

PairMembership membership(const Catalog& cat, const TiltingModule& t, const Rep& x) {
    bool tor = in_torsion(cat, t, x);
    bool fr = in_free(cat, t, x);
    if (tor && fr && x.total_dim() > 0)
        throw std::logic_error("torsion/free disjointness violated");
    if (tor) return PairMembership::Torsion;
    if (fr) return PairMembership::Free;
    return PairMembership::Neither;
}

bool cone_contains(const Catalog& cat, const IndecLabel& vertex, const IndecLabel& x) {
    if (!vertex.is_regular() || !x.is_regular() || vertex.tube != x.tube) return false;
    int rank = cat.tubes()[vertex.tube].rank;
    for (int s = 0; s < vertex.level; ++s)
        if (x.ray == (vertex.ray + s) % rank) return x.level <= vertex.level - s;
    return false;
}

ConeDecomposition maximal_cones(const Catalog& cat, const TiltingModule& t) {
    ConeDecomposition d;
    for (auto& cand : t.regular) {
        bool maximal = true;
        for (auto& other : t.regular)
            if (!(other == cand) && cone_contains(cat, other, cand)) {
                maximal = false;
                break;
            }
        if (maximal) d.maximal_cones.push_back(cat.cone(cand));
    }
    std::sort(d.maximal_cones.begin(), d.maximal_cones.end(),
              [](const Cone& a, const Cone& b) { return a.vertex < b.vertex; });
    // every regular summand lies in exactly one maximal cone, and a cone of
    // level m holds exactly m summands of T
    for (auto& r : t.regular) {
        int containing = 0;
        for (auto& c : d.maximal_cones)
            if (cone_contains(cat, c.vertex, r)) ++containing;
        if (containing != 1)
            throw std::logic_error("regular summand " + r.str() + " lies in " +
                                   std::to_string(containing) + " maximal cones");
    }
    for (auto& c : d.maximal_cones) {
        int count = 0;
        for (auto& r : t.regular)
            if (cone_contains(cat, c.vertex, r)) ++count;
        if (count != c.level)
            throw std::logic_error("cone of level " + std::to_string(c.level) + " holds " +
                                   std::to_string(count) + " summands of T");
    }
    return d;
}

TorsionClass enumerate_torsion(const Catalog& cat, const TiltingModule& t) {
    if (!classify_torsion(cat, t).torsion_finite)
        throw std::invalid_argument("enumerate_torsion needs a finite torsion class");
    TorsionClass tc;
    int a_max = 0;
    for (auto& l : t.preinjective) a_max = std::max(a_max, l.power);
    int bound = a_max + 1 + cat.sincerity_threshold();
    tc.scan_bound = bound;
    for (int k = 0; k < bound; ++k)
        for (int v = 0; v < cat.quiver().n; ++v) {
            IndecLabel x = IndecLabel::preinjective(v, k);
            if (in_torsion_label(cat, t, x)) tc.preinjective_members.push_back(x);
        }
    // completeness spot-check at the bound itself
    for (int v = 0; v < cat.quiver().n; ++v)
        if (in_torsion_label(cat, t, IndecLabel::preinjective(v, bound)))
            throw std::logic_error("bound insufficient: torsion preinjective at the scan bound");
    // regular members live inside the maximal cones only
    for (auto& c : maximal_cones(cat, t).maximal_cones)
        for (auto& m : c.members)
            if (in_torsion_label(cat, t, m)) tc.regular_members.push_back(m);
    std::sort(tc.preinjective_members.begin(), tc.preinjective_members.end());
    std::sort(tc.regular_members.begin(), tc.regular_members.end());
    tc.regular_members.erase(std::unique(tc.regular_members.begin(), tc.regular_members.end()),
                             tc.regular_members.end());
    return tc;
}

} // namespace tamerep
