#include "cybundle/picard.hpp"

#include <sstream>

namespace cybundle::picard {

PicElement make_pic_element(const ManifoldDescriptor& m, std::vector<Int> free_part,
                            std::vector<Int> torsion_part, std::vector<Rational> pic0_part) {
    ab::Shape s = m.pic_shape();
    if (torsion_part.empty()) torsion_part.assign(s.torsion_rank(), Int(0));
    if (pic0_part.empty()) pic0_part.assign(s.circle_rank, Rational(0));
    return PicElement(s, std::move(free_part), std::move(pic0_part), std::move(torsion_part), {});
}

PicElement zero_class(const ManifoldDescriptor& m) { return PicElement::zero(m.pic_shape()); }

std::vector<std::string> validate(const ManifoldDescriptor& m) {
    std::vector<std::string> violations;
    if (m.ns_torsion.free_rank() != 0)
        violations.push_back("ns-torsion-finite: ns_torsion must be a finite group");
    if (m.canonical_class.shape() != m.pic_shape())
        violations.push_back("canonical-shape: canonical class does not live in Pic coordinates");
    if (m.ns_torsion != m.pi1_ab.torsion_subgroup())
        violations.push_back(
            "ns-torsion: torsion of c1(Pic) is not isomorphic to the pi_1 torsion");
    if (m.kahler) {
        if (m.pi1_ab.free_rank() != 2 * m.pic0_dim)
            violations.push_back(
                "kahler-betti: pi_1 abelianization free rank must equal 2 * dim Pic_0");
        if (m.omega1c_dim != m.pic0_dim)
            violations.push_back(
                "kahler-forms: dim of closed holomorphic 1-forms must equal dim Pic_0");
    }
    return violations;
}

ManifoldDescriptor projective_space(std::size_t n) {
    ManifoldDescriptor m;
    m.name = "P" + std::to_string(n);
    m.dim = n;
    m.kahler = true;
    m.ns_free_rank = 1;
    m.canonical_class = make_pic_element(m, {Int(-(long long)(n + 1))});
    return m;
}

ManifoldDescriptor complex_torus(std::size_t g) {
    // Generic torus: Neron-Severi rank 0, so Pic is the (rational) Pic_0
    // torus alone and K is trivial.
    ManifoldDescriptor m;
    m.name = "torusG" + std::to_string(g);
    m.dim = g;
    m.kahler = true;
    m.ns_free_rank = 0;
    m.pic0_dim = g;
    m.pi1_ab = fga::FgaGroup::free_group(2 * g);
    m.omega1c_dim = g;
    m.canonical_class = zero_class(m);
    return m;
}

ManifoldDescriptor curve_of_genus(std::size_t g) {
    ManifoldDescriptor m;
    m.name = "curveG" + std::to_string(g);
    m.dim = 1;
    m.kahler = true;
    m.ns_free_rank = 1;  // degree
    m.pic0_dim = g;
    m.pi1_ab = fga::FgaGroup::free_group(2 * g);
    m.omega1c_dim = g;
    m.canonical_class = make_pic_element(m, {Int(2 * (long long)g - 2)});
    return m;
}

ManifoldDescriptor hirzebruch(std::size_t a) {
    // Coordinates follow the toric quotient basis for the fan with rays
    // (1,0), (0,1), (-1,a), (0,-1); there K = (-(a+2), -2).
    ManifoldDescriptor m;
    m.name = "hirzebruch-" + std::to_string(a);
    m.dim = 2;
    m.kahler = true;
    m.ns_free_rank = 2;
    m.canonical_class = make_pic_element(m, {Int(-(long long)(a + 2)), Int(-2)});
    return m;
}

namespace {

ManifoldDescriptor p1xp1() {
    ManifoldDescriptor m;
    m.name = "P1xP1";
    m.dim = 2;
    m.kahler = true;
    m.ns_free_rank = 2;
    m.canonical_class = make_pic_element(m, {Int(-2), Int(-2)});
    return m;
}

ManifoldDescriptor enriques_like() {
    // Not a full Enriques surface, only its group-theoretic profile:
    // pi_1 = Z/2, K_X the nontrivial 2-torsion class, NS free rank 10.
    ManifoldDescriptor m;
    m.name = "enriques-like";
    m.dim = 2;
    m.kahler = true;
    m.ns_free_rank = 10;
    m.ns_torsion = fga::FgaGroup::cyclic(2);
    m.pi1_ab = fga::FgaGroup::cyclic(2);
    m.canonical_class =
        make_pic_element(m, std::vector<Int>(10, Int(0)), std::vector<Int>{Int(1)});
    return m;
}

}  // namespace

std::vector<ManifoldDescriptor> catalog() {
    std::vector<ManifoldDescriptor> entries;
    for (std::size_t n = 1; n <= 4; ++n) entries.push_back(projective_space(n));
    entries.push_back(complex_torus(1));
    entries.push_back(complex_torus(2));
    entries.push_back(curve_of_genus(2));
    entries.push_back(p1xp1());
    for (std::size_t a = 0; a <= 3; ++a) entries.push_back(hirzebruch(a));
    entries.push_back(enriques_like());
    return entries;
}

std::optional<ManifoldDescriptor> catalog_lookup(const std::string& name) {
    for (const ManifoldDescriptor& m : catalog())
        if (m.name == name) return m;
    const std::string prefix = "hirzebruch-";
    if (name.rfind(prefix, 0) == 0) {
        std::istringstream is(name.substr(prefix.size()));
        std::size_t a = 0;
        if (is >> a && is.eof()) return hirzebruch(a);
    }
    return std::nullopt;
}

}  // namespace cybundle::picard
