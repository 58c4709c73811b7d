#include "cybundle/rm.hpp"

#include <doctest.h>

using namespace cybundle;
using namespace cybundle::rm;

TEST_CASE("character groups of Remmert-Morimoto factors") {
    CHECK(character_group(RmGroup{1, 0, 0}).free_rank == 1);
    CHECK(character_group(RmGroup{1, 0, 0}).continuous_dim == 0);
    CHECK(character_group(RmGroup{0, 1, 0}).continuous_dim == 1);
    // A Cousin factor contributes nothing.
    CharacterGroupInfo c = character_group(RmGroup{0, 0, 3});
    CHECK(c.free_rank == 0);
    CHECK(c.continuous_dim == 0);
}

TEST_CASE("sufficiency verdicts") {
    SUBCASE("P^n with (1,0) is sufficient") {
        auto v = sufficiency_check(RmGroup{1, 0, 0}, picard::projective_space(2));
        CHECK(v.status == Sufficiency::sufficient);
    }
    SUBCASE("genus-2 curve with (1,4) is sufficient") {
        auto v = sufficiency_check(RmGroup{1, 4, 0}, picard::curve_of_genus(2));
        CHECK(v.status == Sufficiency::sufficient);
    }
    SUBCASE("genus-2 curve with (1,3) is unknown, not insufficient") {
        auto v = sufficiency_check(RmGroup{1, 3, 0}, picard::curve_of_genus(2));
        CHECK(v.status == Sufficiency::unknown);
    }
    SUBCASE("too small a torus lattice is genuinely insufficient") {
        auto v = sufficiency_check(RmGroup{0, 4, 0}, picard::curve_of_genus(2));
        CHECK(v.status == Sufficiency::insufficient);
        // NS torsion counts toward the minimal generator count.
        auto e = sufficiency_check(RmGroup{10, 0, 0}, *picard::catalog_lookup("enriques-like"));
        CHECK(e.status == Sufficiency::insufficient);
        auto e2 = sufficiency_check(RmGroup{11, 0, 0}, *picard::catalog_lookup("enriques-like"));
        CHECK(e2.status == Sufficiency::sufficient);
    }
    SUBCASE("no vector factor against a positive-dimensional Pic0") {
        auto v = sufficiency_check(RmGroup{5, 0, 0}, picard::curve_of_genus(2));
        CHECK(v.status == Sufficiency::insufficient);
    }
    SUBCASE("non-Kahler base errors") {
        picard::ManifoldDescriptor m = picard::projective_space(2);
        m.kahler = false;
        CHECK_THROWS_AS(sufficiency_check(RmGroup{1, 0, 0}, m), std::domain_error);
    }
}

TEST_CASE("build_abelian_cy_bundle") {
    SUBCASE("P^n with (1,0,0): isomorphism onto Pic, consistent with the quotient bundle") {
        picard::ManifoldDescriptor p2 = picard::projective_space(2);
        bundles::PrincipalBundle b = build_abelian_cy_bundle(RmGroup{1, 0, 0}, p2);
        CHECK(bundles::certify_surjectivity(b).all_verified());
        bundles::CyStructureSet cy = bundles::obstruction_check(b);
        REQUIRE(cy.solvable);
        CHECK(cy.kernel.discrete_generators.empty());
        // Rigidity against a rank-1 Whitney bundle finds xi = +-1.
        bundles::PrincipalBundle n =
            bundles::whitney_sum_bundle(p2, {picard::make_pic_element(p2, {Int(-1)})});
        bundles::RigidityResult r = bundles::rigidity_solve(b, n);
        REQUIRE(r.status == bundles::RigidityStatus::found);
        CHECK(abs_int(r.xi->at(0, 0)) == 1);
    }
    SUBCASE("torus base with (0,2,0): image is the rational Pic0, K = 0 solvable") {
        picard::ManifoldDescriptor t = picard::complex_torus(1);
        bundles::PrincipalBundle b = build_abelian_cy_bundle(RmGroup{0, 2, 0}, t);
        bundles::CyStructureSet cy = bundles::obstruction_check(b);
        CHECK(cy.solvable);
        CHECK(bundles::certify_surjectivity(b).all_verified());
    }
    SUBCASE("padding columns vanish and do not change the image") {
        picard::ManifoldDescriptor p2 = picard::projective_space(2);
        bundles::PrincipalBundle small = build_abelian_cy_bundle(RmGroup{1, 0, 0}, p2);
        bundles::PrincipalBundle padded = build_abelian_cy_bundle(RmGroup{5, 7, 4}, p2);
        const auto& blocks = padded.char_map.map.blocks();
        for (std::size_t j = 1; j < 5; ++j) CHECK(blocks.free_free.at(0, j) == 0);
        CHECK(blocks.circle_line.is_zero());  // g = 0: no Pic0 to hit
        CHECK(bundles::certify_surjectivity(padded).all_verified());
        CHECK(bundles::obstruction_check(padded).solvable);
        // Padding shifts the recorded continuous kernel by b - q.
        CHECK(padded.char_map.continuous_kernel_dim ==
              small.char_map.continuous_kernel_dim + 7);
    }
    SUBCASE("genus-2 with (1,4): certificate and obstruction") {
        picard::ManifoldDescriptor c = picard::curve_of_genus(2);
        bundles::PrincipalBundle b = build_abelian_cy_bundle(RmGroup{1, 4, 0}, c);
        CHECK(bundles::certify_surjectivity(b).all_verified());
        bundles::CyStructureSet cy = bundles::obstruction_check(b);
        REQUIRE(cy.solvable);
        CHECK(b.char_map.apply(*cy.particular) == c.canonical_class);
    }
    SUBCASE("insufficient or unknown groups are rejected") {
        CHECK_THROWS_AS(build_abelian_cy_bundle(RmGroup{1, 3, 0}, picard::curve_of_genus(2)),
                        std::domain_error);
        CHECK_THROWS_AS(build_abelian_cy_bundle(RmGroup{0, 0, 5}, picard::projective_space(1)),
                        std::domain_error);
    }
}
