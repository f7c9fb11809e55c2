#pragma once

// Acyclic quivers whose underlying graph is an extended Dynkin (Euclidean)
// diagram, plus path enumeration. Vertices are 0-based internally; the CLI
// layer converts from the 1-based numbering used in instance files.

#include <string>
#include <utility>
#include <vector>

#include "tamerep/matrix.hpp"

namespace tamerep {

// A~{p,q}: cycle with p arrows one way, q the other (p+q vertices, p,q >= 1).
// D~n: n+1 vertices (n >= 4). E~n: n ∈ {6,7,8}, n+1 vertices.
struct EuclideanTag {
    char family = 'A'; // 'A', 'D' or 'E'
    int p = 1, q = 1;  // A: (p,q); D/E: p = subscript, q unused

    std::string str() const;
    int vertex_count() const;
    bool operator==(const EuclideanTag&) const = default;
};

struct Arrow {
    int source = 0, target = 0;
    bool operator==(const Arrow&) const = default;
};

struct Quiver {
    int n = 0;
    std::vector<Arrow> arrows;
    EuclideanTag type;

    bool operator==(const Quiver&) const = default;

    std::vector<int> arrows_into(int v) const;
    std::vector<int> arrows_out_of(int v) const;
    Quiver opposite() const;

    // Topological order: sources first along arrows.
    std::vector<int> topological_order() const;
};

// Validates acyclicity and that the underlying graph is the named Euclidean
// diagram (structural classification, not just edge count). Throws
// std::invalid_argument with a diagnostic otherwise.
Quiver make_quiver(EuclideanTag type, std::vector<Arrow> arrows);

// Classifies the underlying graph; throws if it is not Euclidean.
EuclideanTag classify_euclidean(int n, const std::vector<Arrow>& arrows);

// The Kronecker quiver 1 ⇉ 2 (A~{1,1}).
Quiver kronecker_quiver();

// All paths from `source`, grouped by endpoint: result[w] lists arrow-index
// sequences (empty sequence = trivial path when w == source).
std::vector<std::vector<std::vector<int>>> paths_from(const Quiver& q, int source);

// Euler form <x,y> = sum_v x_v y_v - sum_a x_{s(a)} y_{t(a)}.
long long euler_form(const Quiver& q, const std::vector<long long>& x,
                     const std::vector<long long>& y);
long long euler_form(const Quiver& q, const std::vector<int>& x, const std::vector<int>& y);

// Tits form q(x) = <x,x>.
long long tits_form(const Quiver& q, const std::vector<long long>& x);

} // namespace tamerep
