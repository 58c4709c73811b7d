#include "cybundle/json_io.hpp"

#include <doctest.h>

using namespace cybundle;
using namespace cybundle::io;

TEST_CASE("integers and rationals round-trip without floats") {
    CHECK(int_from_json(int_to_json(Int("123456789012345678901234567890"))) ==
          Int("123456789012345678901234567890"));
    CHECK(int_from_json(int_to_json(Int(-7))) == Int(-7));
    CHECK(int_to_json(Int(-7)).is_number_integer());
    Rational r(22, 7);
    json j = rational_to_json(r);
    CHECK(j.is_array());
    CHECK(j[0].is_string());
    CHECK(rational_from_json(j) == r);
}

TEST_CASE("manifold descriptors round-trip") {
    for (const auto& m : picard::catalog()) {
        json j = to_json(m);
        picard::ManifoldDescriptor back = manifold_from_json(j);
        CHECK(back == m);
        CHECK(to_json(back) == j);
    }
}

TEST_CASE("fans and rm groups round-trip") {
    toric::Fan f{2,
                 {{Int(1), Int(0)}, {Int(0), Int(1)}, {Int(-1), Int(-1)}},
                 {{0, 1}, {1, 2}, {2, 0}}};
    json j = to_json(f);
    toric::Fan back = fan_from_json(j);
    CHECK(back.dim == f.dim);
    CHECK(back.rays == f.rays);
    CHECK(back.max_cones == f.max_cones);

    rm::RmGroup g{3, 1, 2};
    CHECK(rm_group_from_json(to_json(g)) == g);
}

TEST_CASE("bundles round-trip through the full schema") {
    picard::ManifoldDescriptor c = picard::curve_of_genus(2);
    picard::PicElement l = picard::make_pic_element(
        c, {Int(3)}, {}, {Rational(1, 2), Rational(0), Rational(1, 3), Rational(0)});
    bundles::PrincipalBundle b = bundles::whitney_sum_bundle(c, {l, c.canonical_class});
    json j = to_json(b);
    bundles::PrincipalBundle back = bundle_from_json(j);
    CHECK(back.group == b.group);
    CHECK(back.base == b.base);
    CHECK(back.char_map.map == b.char_map.map);

    // The whitney shorthand builds the same bundle.
    json shorthand;
    shorthand["base"] = "curveG2";
    shorthand["classes"] = json::array({to_json(l), to_json(c.canonical_class)});
    bundles::PrincipalBundle from_short = bundle_from_json(shorthand);
    CHECK(from_short.char_map.map == b.char_map.map);
}

TEST_CASE("surjective bundle with a pi1 factor round-trips") {
    bundles::PrincipalBundle b =
        bundles::construct_surjective_bundle(*picard::catalog_lookup("enriques-like"));
    bundles::PrincipalBundle back = bundle_from_json(to_json(b));
    CHECK(back.group == b.group);
    CHECK(back.char_map.map == b.char_map.map);
    CHECK(back.char_map.continuous_kernel_dim == b.char_map.continuous_kernel_dim);
}

TEST_CASE("catalog base names resolve in bundle files") {
    json j;
    j["base"] = "P2";
    j["classes"] = json::array({json{{"free", json::array({-1})}}});
    bundles::PrincipalBundle b = bundle_from_json(j);
    CHECK(b.base.name == "P2");
    CHECK_THROWS_AS(bundle_from_json(json{{"base", "not-a-manifold"},
                                          {"classes", json::array()}}),
                    std::invalid_argument);
}
