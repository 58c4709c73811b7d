#pragma once

#include "cybundle/abelian.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cybundle::picard {

// A line bundle class in the fixed coordinates of a descriptor: free part
// over the chosen Neron-Severi generators L_1..L_p, a torsion class, and a
// rational point of the Pic_0 torus (entries in [0,1)).
using PicElement = ab::Element;

// A character of pi_1(X) through its abelianization, restricted to the
// exactly representable ones: root-of-unity values on the free part
// (exponents in [0,1)) and a torsion character encoded by self-duality as
// an element of the torsion group.
using Pi1Character = ab::Element;

// Topological/geometric profile of a compact complex manifold. The
// descriptor is an input to every construction; nothing here is computed
// from equations. The invariants checked by validate() are the structural
// relations the theory guarantees for consistent data.
struct ManifoldDescriptor {
    std::string name;
    std::size_t dim = 0;
    bool kahler = false;
    std::size_t ns_free_rank = 0;     // p, rank of c1(Pic(X))
    fga::FgaGroup ns_torsion;         // torsion of c1(Pic(X))
    std::size_t pic0_dim = 0;         // g, complex dimension of Pic_0(X)
    fga::FgaGroup pi1_ab;             // abelianization of pi_1(X)
    std::size_t omega1c_dim = 0;      // dim H^0(X, closed holomorphic 1-forms)
    PicElement canonical_class;       // [K_X] in pic_shape() coordinates

    // Pic(X) restricted to rational Pic_0 points: Z^p + (Q/Z)^{2g} + torsion.
    ab::Shape pic_shape() const {
        return ab::Shape{ns_free_rank, 2 * pic0_dim, ns_torsion, 0};
    }
    ab::Shape pi1_dual_shape() const {
        return ab::Shape{0, pi1_ab.free_rank(), pi1_ab.torsion_subgroup(), 0};
    }
    // Minimum generator count of the full Neron-Severi group (free rank
    // plus one generator per invariant factor).
    std::size_t ns_min_generators() const { return ns_free_rank + ns_torsion.torsion_rank(); }

    bool operator==(const ManifoldDescriptor&) const = default;
};

PicElement make_pic_element(const ManifoldDescriptor& m, std::vector<Int> free_part,
                            std::vector<Int> torsion_part = {},
                            std::vector<Rational> pic0_part = {});
PicElement zero_class(const ManifoldDescriptor& m);

// Empty iff the descriptor satisfies every structural relation; one entry
// per violated relation, naming it.
std::vector<std::string> validate(const ManifoldDescriptor& m);

// Built-in descriptors: P1..P4, torusG1, torusG2, curveG2, P1xP1,
// hirzebruch-0..3, enriques-like. Every entry passes validate().
std::vector<ManifoldDescriptor> catalog();

// Catalog lookup by stable name; also accepts hirzebruch-<a> for any a.
std::optional<ManifoldDescriptor> catalog_lookup(const std::string& name);

ManifoldDescriptor projective_space(std::size_t n);
ManifoldDescriptor complex_torus(std::size_t g);
ManifoldDescriptor curve_of_genus(std::size_t g);
ManifoldDescriptor hirzebruch(std::size_t a);

}  // namespace cybundle::picard
