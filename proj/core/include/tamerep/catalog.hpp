#pragma once

// The indecomposable catalog of a tame hereditary path algebra: symbolic
// labels for transjective modules (tau-powers of projectives/injectives) and
// tube members (tube / ray / level), their realizations as explicit rational
// representations, the defect trichotomy, stable tubes, cones and slices.
//
// Construction is a single-threaded build; afterwards queries only touch
// mutex-guarded memo caches, so concurrent readers are safe.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "tamerep/bgp.hpp"
#include "tamerep/hom.hpp"

namespace tamerep {

struct IndecLabel {
    enum class Kind { Preprojective, Preinjective, Regular };
    Kind kind = Kind::Preinjective;
    int vertex = -1; // transjective: tau^{-power} P_vertex or tau^{power} I_vertex
    int power = 0;   // >= 0
    int tube = -1;   // regular
    int ray = 0;     // 0-based position on the mouth; tau E_{ray} = E_{ray-1}
    int level = 1;   // >= 1

    static IndecLabel preprojective(int v, int k) {
        return {Kind::Preprojective, v, k, -1, 0, 1};
    }
    static IndecLabel preinjective(int v, int k) { return {Kind::Preinjective, v, k, -1, 0, 1}; }
    static IndecLabel regular(int t, int r, int l) {
        return {Kind::Regular, -1, 0, t, r, l};
    }
    bool is_projective() const { return kind == Kind::Preprojective && power == 0; }
    bool is_injective() const { return kind == Kind::Preinjective && power == 0; }
    bool is_regular() const { return kind == Kind::Regular; }
    bool transjective() const { return kind != Kind::Regular; }

    auto key() const { return std::tuple((int)kind, vertex, power, tube, ray, level); }
    friend bool operator==(const IndecLabel& a, const IndecLabel& b) { return a.key() == b.key(); }
    friend bool operator<(const IndecLabel& a, const IndecLabel& b) { return a.key() < b.key(); }
    std::string str() const; // e.g. "P3", "t^2 I5", "T0[r1,l3]" (1-based vertices)
};

struct Tube {
    int id = 0;
    int rank = 1;
    std::vector<std::vector<long long>> mouth_dims; // per ray; tau-orbit, sums to delta
    std::optional<Rational> parameter;              // rank-1 (homogeneous) family point
    bool parameter_infinite = false;                // lambda = ∞ point of the family
};

struct Cone {
    IndecLabel vertex;
    int level = 1;
    std::vector<IndecLabel> members; // level*(level+1)/2 labels
};

struct Slice {
    int power = 0;
    std::vector<IndecLabel> members; // the n labels tau^power I_v
};

struct CatalogOptions {
    int max_transjective_power = 64; // hard window; pipelines set a tight value
    int tube_level_slack = 2;        // realize tube members up to rank + slack
    int tube_level_cap = 0;          // 0 = rank + slack
};

class Catalog {
  public:
    Catalog(Quiver q, CatalogOptions opt = {});

    const Quiver& quiver() const { return q_; }
    const CatalogOptions& options() const { return opt_; }

    // Coxeter data
    const Matrix& coxeter() const { return phi_; }
    const std::vector<long long>& delta() const { return delta_; }
    int coxeter_period() const { return period_; }      // h with Phi^h = 1 + delta·defect
    int sincerity_threshold() const { return sincerity_; } // least m with Phi^m dim I sincere
    long long defect(const std::vector<long long>& dims) const;
    long long defect(const std::vector<int>& dims) const;
    std::vector<long long> phi_apply(const std::vector<long long>& x, int times = 1) const;
    std::vector<long long> phi_inv_apply(const std::vector<long long>& x, int times = 1) const;

    const std::vector<Tube>& tubes() const { return tubes_; }

    // Dimension vector of a label (no realization needed).
    std::vector<long long> dims_of(const IndecLabel& l) const;

    // Explicit representation; cached. Throws on out-of-window labels.
    const Rep& realize(const IndecLabel& l) const;
    std::shared_ptr<const Rep> realize_ptr(const IndecLabel& l) const;

    // AR translate at label level; nullopt when it vanishes (tau of a
    // projective, tau^{-1} of an injective).
    std::optional<IndecLabel> tau_label(const IndecLabel& l) const;
    std::optional<IndecLabel> tau_inv_label(const IndecLabel& l) const;

    // AR translate at representation level (BGP Coxeter functors). Errors if
    // a projective (resp. injective) summand is present.
    Rep tau(const Rep& x) const;
    Rep tau_inverse(const Rep& x) const;
    const CoxeterFunctor& cplus() const { return cplus_; }
    const CoxeterFunctor& cminus() const { return cminus_; }

    Slice slice(int power) const;
    Cone cone(const IndecLabel& vertex) const;
    std::vector<IndecLabel> cone_edge(const IndecLabel& vertex) const;

    // Generic homogeneous (rank-1 tube) mouth modules; deterministic per
    // index. For A~ quivers index i realizes the rational parameter lambda=i+1;
    // for D~/E~ the parameter is a synthetic sample index.
    std::shared_ptr<const Rep> homogeneous_sample(int index) const;

    // Identification against the catalog (dim-vector match + isomorphism
    // test; tube members at level multiples of the rank are disambiguated by
    // Hom fingerprints against the mouth).
    std::optional<IndecLabel> identify(const Rep& x) const;

    struct Summand {
        IndecLabel label;
        int multiplicity = 1;
    };
    // Krull-Schmidt decomposition identified against the catalog. Throws
    // std::runtime_error("unidentified summand...") on a miss; homogeneous
    // summands on A~ quivers of mouth size are labelled with their parameter.
    std::vector<Summand> decompose(const Rep& x) const;

    enum class Side { Preprojective, Regular, Preinjective };
    Side side_of_dims(const std::vector<long long>& dims) const;
    static Side side_of(const IndecLabel& l) {
        switch (l.kind) {
            case IndecLabel::Kind::Preprojective: return Side::Preprojective;
            case IndecLabel::Kind::Regular: return Side::Regular;
            default: return Side::Preinjective;
        }
    }

    // Structural vanishing shortcuts (label level); true means the space is
    // zero without computation.
    bool hom_known_zero(const IndecLabel& x, const IndecLabel& y) const;
    bool ext_known_zero(const IndecLabel& x, const IndecLabel& y) const;

    int tube_level_cap(int tube_id) const;

  private:
    void build_coxeter_data();
    void enumerate_tubes();
    Rep realize_uncached(const IndecLabel& l) const;
    Rep realize_mouth(int tube, int ray) const;
    Rep generic_brick(const std::vector<long long>& dims, unsigned seed) const;

    Quiver q_;
    CatalogOptions opt_;
    Matrix phi_, phi_inv_;
    std::vector<long long> delta_;
    std::vector<long long> defect_row_;
    int period_ = 0;
    int sincerity_ = 0;
    std::vector<Tube> tubes_;
    CoxeterFunctor cplus_, cminus_;

    mutable std::mutex mu_;
    mutable std::map<IndecLabel, std::shared_ptr<const Rep>> rep_cache_;
    mutable std::map<int, std::shared_ptr<const Rep>> homog_cache_;
    mutable std::vector<std::pair<Rational, int>> homog_params_; // (lambda, index), A~ only
};

} // namespace tamerep
