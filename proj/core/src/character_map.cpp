#include "cybundle/character_map.hpp"

#include <sstream>
#include <stdexcept>

namespace cybundle::bundles {

std::string StructureGroupDesc::to_string() const {
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const std::string& s) {
        if (!first) os << " x ";
        os << s;
        first = false;
    };
    if (pi1_factor && !pi1_factor->is_trivial()) emit(pi1_factor->to_string());
    if (torus_rank > 0)
        emit(torus_rank == 1 ? "C*" : "(C*)^" + std::to_string(torus_rank));
    if (vector_rank > 0)
        emit(vector_rank == 1 ? "C" : "C^" + std::to_string(vector_rank));
    if (cousin_dim > 0) emit("G0(dim " + std::to_string(cousin_dim) + ")");
    if (first) os << "1";
    return os.str();
}

Character CharacterMap::basis_character(std::size_t index) const {
    ab::Shape s = group.character_shape();
    if (index >= s.free_rank)
        throw std::invalid_argument("basis_character: index exceeds the torus rank");
    Character chi = Character::zero(s);
    std::vector<Int> free = chi.free_part();
    free[index] = 1;
    return Character(s, std::move(free), chi.circle_part(), chi.torsion_part(), chi.line_part());
}

CharacterMap make_character_map(StructureGroupDesc group, picard::ManifoldDescriptor target,
                                ab::Hom map, std::size_t continuous_kernel_dim) {
    if (map.source() != group.character_shape())
        throw std::invalid_argument("CharacterMap: domain does not match the character group");
    if (map.target() != target.pic_shape())
        throw std::invalid_argument("CharacterMap: codomain does not match the Picard shape");
    return CharacterMap{std::move(group), std::move(target), std::move(map),
                        continuous_kernel_dim};
}

CharacterMap universal_cover_character_map(const picard::ManifoldDescriptor& m) {
    if (!m.kahler)
        throw std::domain_error(
            "universal_cover_character_map: Pic0 realization requires the Kahler hypothesis");
    if (m.ns_torsion != m.pi1_ab.torsion_subgroup())
        throw std::domain_error(
            "universal_cover_character_map: descriptor violates the torsion relation");
    if (m.pi1_ab.free_rank() != 2 * m.pic0_dim)
        throw std::domain_error(
            "universal_cover_character_map: descriptor violates the first Betti relation");

    StructureGroupDesc group;
    group.pi1_factor = m.pi1_ab;
    ab::Shape src = group.character_shape();
    ab::Shape tgt = m.pic_shape();
    // Kahler: q == 2g, so free pi_1 characters hit the Pic_0 coordinates
    // one for one; torsion characters hit NS torsion by the fixed
    // self-duality identification.
    ab::Hom::Blocks blocks{
        fga::IntMatrix::zero(tgt.free_rank, src.free_rank),
        fga::RationalMatrix::zero(tgt.circle_rank, src.free_rank),
        fga::IntMatrix::zero(tgt.torsion_rank(), src.free_rank),
        fga::RationalMatrix::zero(tgt.line_rank, src.free_rank),
        fga::IntMatrix::identity(src.circle_rank),
        fga::RationalMatrix::zero(tgt.circle_rank, src.torsion_rank()),
        fga::IntMatrix::identity(src.torsion_rank()),
        fga::RationalMatrix::zero(tgt.circle_rank, src.line_rank),
        fga::RationalMatrix::zero(tgt.line_rank, src.line_rank)};
    return make_character_map(group, m, ab::Hom(src, tgt, std::move(blocks)), m.omega1c_dim);
}

}  // namespace cybundle::bundles
