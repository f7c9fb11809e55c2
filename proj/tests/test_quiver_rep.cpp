#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tamerep/catalog.hpp"
#include "tamerep/hom.hpp"

using namespace tamerep;

namespace {

Quiver dtilde4() {
    // 1 -> 3, 2 -> 3, 3 -> 4, 3 -> 5 (0-based: 0->2, 1->2, 2->3, 2->4)
    return make_quiver({'D', 4, 0}, {{0, 2}, {1, 2}, {2, 3}, {2, 4}});
}

} // namespace

TEST_CASE("euclidean classification") {
    CHECK(kronecker_quiver().type == EuclideanTag{'A', 1, 1});
    CHECK(dtilde4().type == EuclideanTag{'D', 4, 0});
    // A~(2,1): 3-cycle with 2 arrows one way
    Quiver a21 = make_quiver({'A', 2, 1}, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(a21.n == 3);
    CHECK_THROWS(make_quiver({'A', 1, 1}, {{0, 1}, {1, 0}})); // oriented cycle
    CHECK_THROWS(make_quiver({'D', 4, 0}, {{0, 2}, {1, 2}, {3, 2}, {4, 2}, {0, 1}}));
}

TEST_CASE("projective injective simple on the Kronecker quiver") {
    Quiver k = kronecker_quiver();
    Rep p1 = projective(k, 0);
    CHECK(p1.dim == std::vector<int>{1, 2}); // paths e1, a, b
    Rep p2 = projective(k, 1);
    CHECK(p2.dim == std::vector<int>{0, 1});
    Rep i1 = injective(k, 0);
    CHECK(i1.dim == std::vector<int>{1, 0}); // paths ending at 1
    Rep i2 = injective(k, 1);
    CHECK(i2.dim == std::vector<int>{2, 1});
    Rep s1 = simple(k, 0);
    CHECK(s1.dim == std::vector<int>{1, 0});
    CHECK(is_morphism(p1, p1, identity_morphism(p1)));
}

TEST_CASE("hom dims on the Kronecker quiver") {
    Quiver k = kronecker_quiver();
    Rep p1 = projective(k, 0), p2 = projective(k, 1);
    CHECK(hom_dim(p2, p1) == 2);
    CHECK(hom_dim(p1, p2) == 0);
    CHECK(hom_dim(p1, p1) == 1);
    // every hom basis element commutes exactly
    auto h = hom_space(p2, p1);
    for (auto& f : h.basis) CHECK(is_morphism(p2, p1, f));
}

TEST_CASE("ext dims and euler form") {
    Quiver k = kronecker_quiver();
    Rep s1 = simple(k, 0), s2 = simple(k, 1);
    CHECK(ext1_dim(s1, s2) == 2); // two parallel arrows
    CHECK(ext1_dim(s2, s1) == 0);
    CHECK(ext1_dim(projective(k, 0), s1) == 0);
    CHECK(ext1_dim(s1, injective(k, 0)) == 0);
    CHECK(euler_form(k, std::vector<int>{1, 0}, std::vector<int>{0, 1}) == -2);
    CHECK(euler_form(k, std::vector<int>{0, 1}, std::vector<int>{1, 2}) == 2);

    // euler = hom - ext on a deterministic sample of small reps
    Quiver d4 = dtilde4();
    std::vector<Rep> mods;
    for (int v = 0; v < d4.n; ++v) {
        mods.push_back(projective(d4, v));
        mods.push_back(injective(d4, v));
        mods.push_back(simple(d4, v));
    }
    for (auto& x : mods)
        for (auto& y : mods) {
            long long lhs = euler_form(d4, x.dim, y.dim);
            CHECK(lhs == hom_dim(x, y) - ext1_dim(x, y));
        }
}

TEST_CASE("direct sum and decompose round trip") {
    Quiver k = kronecker_quiver();
    Catalog cat(k);
    Rep p1 = projective(k, 0);
    Rep two = direct_sum({p1, p1});
    CHECK(two.dim == std::vector<int>{2, 4});
    auto parts = cat.decompose(two);
    REQUIRE(parts.size() == 1);
    CHECK(parts[0].label == IndecLabel::preprojective(0, 0));
    CHECK(parts[0].multiplicity == 2);

    // Kronecker regular R_{lambda=0}: dim (1,1), maps (1),(0)
    Rep r0{k, {1, 1}, {Matrix{{1}}, Matrix{{0}}}};
    auto dr = cat.decompose(r0);
    REQUIRE(dr.size() == 1);
    CHECK(dr[0].label.is_regular());
    CHECK(dr[0].label.level == 1);
    // the synthesized homogeneous tube carries parameter lambda = 0
    CHECK(dr[0].multiplicity == 1);

    // mixed sum decomposes into the exact multiset
    Rep i2 = injective(k, 1);
    auto dm = cat.decompose(direct_sum({i2, p1, i2}));
    REQUIRE(dm.size() == 2);
    CHECK(dm[0].label == IndecLabel::preprojective(0, 0));
    CHECK(dm[0].multiplicity == 1);
    CHECK(dm[1].label == IndecLabel::preinjective(1, 0));
    CHECK(dm[1].multiplicity == 2);
}

TEST_CASE("kernel image cokernel machinery") {
    Quiver k = kronecker_quiver();
    Rep p2 = projective(k, 1), p1 = projective(k, 0);
    auto h = hom_space(p2, p1);
    REQUIRE(h.dim() == 2);
    // a nonzero map p2 -> p1 is mono (submodules of projectives)
    auto& f = h.basis[0];
    MorphMats incl;
    Rep ker = kernel_rep(p2, p1, f, &incl);
    CHECK(ker.total_dim() == 0);
    MorphMats proj;
    Rep cok = cokernel_rep(p2, p1, f, &proj);
    CHECK(cok.total_dim() == p1.total_dim() - p2.total_dim());
    // projection is a morphism and epi
    CHECK(is_morphism(p1, cok, proj));
}

TEST_CASE("extension middle realizes nonsplit extensions") {
    Quiver k = kronecker_quiver();
    Rep s1 = simple(k, 0), s2 = simple(k, 1);
    ExtSpace e = ext1_space(s1, s2);
    REQUIRE(e.dim() == 2);
    MorphMats incl, proj;
    Rep mid = extension_middle(s1, s2, e.basis[0], &incl, &proj);
    CHECK(mid.dim == std::vector<int>{1, 1});
    CHECK(is_morphism(s2, mid, incl));
    CHECK(is_morphism(mid, s1, proj));
    CHECK(is_indecomposable(mid));
    // zero class gives the split middle
    Rep split = extension_middle(s1, s2, zero_cocycle(s1, s2), nullptr, nullptr);
    CHECK(!is_indecomposable(split));
}

TEST_CASE("end info and bricks") {
    Quiver k = kronecker_quiver();
    CHECK(is_brick(projective(k, 0)));
    CHECK(is_indecomposable(projective(k, 0)));
    Rep sum = direct_sum({projective(k, 0), projective(k, 1)});
    CHECK(!is_indecomposable(sum));
    auto pieces = split_indecomposables(sum);
    CHECK(pieces.size() == 2);
}
