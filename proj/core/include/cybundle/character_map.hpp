#pragma once

#include "cybundle/picard.hpp"

#include <optional>
#include <string>

namespace cybundle::bundles {

// Structure group of a principal bundle, in Remmert-Morimoto-with-discrete
// form: (C*)^torus_rank x C^vector_rank x (Cousin factor) x (optional
// discrete abelian factor, e.g. pi_1(X)). All groups in scope are abelian;
// the Cousin factor has trivial character group and contributes nothing to
// the character shape.
struct StructureGroupDesc {
    std::size_t torus_rank = 0;   // a
    std::size_t vector_rank = 0;  // b
    std::size_t cousin_dim = 0;
    std::optional<fga::FgaGroup> pi1_factor;

    // Character group restricted to its exactly representable part:
    // Z^a (torus characters) + (Q/Z)^q (root-of-unity characters of the
    // discrete free part) + dual torsion + Q^b (rational exponents on C^b).
    ab::Shape character_shape() const {
        ab::Shape s;
        s.free_rank = torus_rank;
        s.line_rank = vector_rank;
        if (pi1_factor) {
            s.circle_rank = pi1_factor->free_rank();
            s.torsion = pi1_factor->torsion_subgroup();
        }
        return s;
    }

    bool is_pure_torus() const {
        return vector_rank == 0 && cousin_dim == 0 &&
               (!pi1_factor || pi1_factor->is_trivial());
    }

    bool operator==(const StructureGroupDesc&) const = default;

    std::string to_string() const;
};

using Character = ab::Element;

// The character map of a bundle: a block homomorphism from the character
// group of the structure group to the Picard coordinates of the base. The
// continuous kernel (a complex vector space, invisible to exact
// arithmetic) is carried as a recorded dimension.
struct CharacterMap {
    StructureGroupDesc group;
    picard::ManifoldDescriptor target;
    ab::Hom map;
    std::size_t continuous_kernel_dim = 0;

    const fga::IntMatrix& free_block() const { return map.blocks().free_free; }
    Character basis_character(std::size_t index) const;
    picard::PicElement apply(const Character& chi) const { return map.apply(chi); }

    bool operator==(const CharacterMap&) const = default;
};

CharacterMap make_character_map(StructureGroupDesc group, picard::ManifoldDescriptor target,
                                ab::Hom map, std::size_t continuous_kernel_dim);

// Character map of the universal cover, seen as a pi_1(X)-bundle: free
// characters land on the rational Pic_0 torus (identically, under the
// real-torus identification), torsion characters map onto the
// Neron-Severi torsion, and the continuous kernel has dimension
// dim H^0(X, closed 1-forms). Requires a Kahler base.
CharacterMap universal_cover_character_map(const picard::ManifoldDescriptor& m);

}  // namespace cybundle::bundles
