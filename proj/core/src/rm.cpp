#include "cybundle/rm.hpp"

#include <stdexcept>

namespace cybundle::rm {

using fga::IntMatrix;
using fga::RationalMatrix;

CharacterGroupInfo character_group(const RmGroup& g) {
    return CharacterGroupInfo{g.torus_rank, g.vector_rank, g.cousin_dim};
}

SufficiencyVerdict sufficiency_check(const RmGroup& g, const picard::ManifoldDescriptor& base) {
    if (!base.kahler)
        throw std::domain_error("sufficiency_check: requires a Kahler base");

    const std::size_t p_min = base.ns_min_generators();
    const std::size_t q = base.pi1_ab.free_rank();

    if (g.torus_rank >= p_min && g.vector_rank >= q)
        return {Sufficiency::sufficient,
                "a >= " + std::to_string(p_min) + " and b >= " + std::to_string(q)};

    // Characters of C^b and of the Cousin factor die in any finitely
    // generated quotient, so only the torus lattice can reach the
    // Neron-Severi group: a < p_min can never surject.
    if (g.torus_rank < p_min)
        return {Sufficiency::insufficient,
                "torus character lattice has rank " + std::to_string(g.torus_rank) +
                    " but the Neron-Severi group needs " + std::to_string(p_min) +
                    " generators"};

    // Without a vector factor the whole character group is finitely
    // generated; it cannot cover a positive-dimensional Pic_0 torus.
    if (g.vector_rank == 0 && base.pic0_dim > 0)
        return {Sufficiency::insufficient,
                "character group is finitely generated but Pic_0 has dimension " +
                    std::to_string(base.pic0_dim)};

    return {Sufficiency::unknown,
            "b = " + std::to_string(g.vector_rank) + " < q = " + std::to_string(q) +
                ": the sufficiency theorem does not apply and no necessity is known"};
}

bundles::PrincipalBundle build_abelian_cy_bundle(const RmGroup& g,
                                                 const picard::ManifoldDescriptor& base) {
    SufficiencyVerdict verdict = sufficiency_check(g, base);
    if (verdict.status != Sufficiency::sufficient)
        throw std::domain_error("build_abelian_cy_bundle: group not sufficient: " + verdict.reason);

    bundles::StructureGroupDesc group;
    group.torus_rank = g.torus_rank;
    group.vector_rank = g.vector_rank;
    group.cousin_dim = g.cousin_dim;
    ab::Shape src = group.character_shape();
    ab::Shape tgt = base.pic_shape();

    const std::size_t p = base.ns_free_rank;
    const std::size_t tau = base.ns_torsion.torsion_rank();
    const std::size_t q = base.pi1_ab.free_rank();  // == 2g on a valid Kahler descriptor

    ab::Hom::Blocks blocks{
        IntMatrix::zero(tgt.free_rank, src.free_rank),
        RationalMatrix::zero(tgt.circle_rank, src.free_rank),
        IntMatrix::zero(tgt.torsion_rank(), src.free_rank),
        RationalMatrix::zero(tgt.line_rank, src.free_rank),
        IntMatrix::zero(tgt.circle_rank, src.circle_rank),
        RationalMatrix::zero(tgt.circle_rank, src.torsion_rank()),
        IntMatrix::zero(tgt.torsion_rank(), src.torsion_rank()),
        RationalMatrix::zero(tgt.circle_rank, src.line_rank),
        RationalMatrix::zero(tgt.line_rank, src.line_rank)};
    // Torus characters 0..p-1 hit the free NS generators, p..p+tau-1 the
    // torsion generators; vector coordinates 0..q-1 hit Pic_0. Everything
    // beyond is padding and maps to zero.
    for (std::size_t i = 0; i < p; ++i) blocks.free_free.at(i, i) = 1;
    for (std::size_t i = 0; i < tau; ++i) blocks.torsion_free.at(i, p + i) = 1;
    for (std::size_t i = 0; i < q; ++i) blocks.circle_line.at(i, i) = 1;

    std::size_t padding = g.vector_rank - q;
    bundles::CharacterMap cm = bundles::make_character_map(
        group, base, ab::Hom(src, tgt, std::move(blocks)), base.omega1c_dim + padding);
    return bundles::PrincipalBundle{
        "rm-" + base.name, group, base, std::move(cm),
        bundles::Provenance{"rm-abelian", "NS generators + Pic_0 through C^" +
                                              std::to_string(g.vector_rank)}};
}

}  // namespace cybundle::rm
