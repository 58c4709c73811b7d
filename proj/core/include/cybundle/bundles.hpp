#pragma once

#include "cybundle/character_map.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cybundle::bundles {

struct Provenance {
    std::string kind;    // whitney-sum | universal-cover | induced | twist | audin-cox | rm-abelian | custom
    std::string detail;  // free-form, human oriented

    bool operator==(const Provenance&) const = default;
};

// A principal bundle is identified with its (group, base, character map)
// triple; by rigidity the triple determines the bundle up to twist, so no
// total-space geometry is modeled.
struct PrincipalBundle {
    std::string name;
    StructureGroupDesc group;
    picard::ManifoldDescriptor base;
    CharacterMap char_map;
    Provenance provenance;

    bool operator==(const PrincipalBundle&) const = default;
};

// Whitney sum of the C*-bundles of the given line bundle classes; the
// character map sends the i-th basis character to classes[i].
PrincipalBundle whitney_sum_bundle(const picard::ManifoldDescriptor& base,
                                   const std::vector<picard::PicElement>& classes,
                                   const std::string& name = "whitney");

// All characters mapping to [K_X]: empty or a coset particular + kernel.
struct CyStructureSet {
    bool solvable = false;
    std::optional<Character> particular;
    ab::KernelDescription kernel;
    std::size_t continuous_kernel_dim = 0;
};

// Exact obstruction decision: solvable iff [K_X] lies in the image of the
// character map. The kernel description is returned either way.
CyStructureSet obstruction_check(const PrincipalBundle& b);

// Same machinery against an arbitrary class; shared by the obstruction
// check, rigidity and the surjectivity certificates.
ab::SolveResult preimage_of_class(const PrincipalBundle& b, const picard::PicElement& value);

struct Rank1Root {
    Int k;
    Int root_coordinate;  // L with K = k * L, in the NS generator basis
};
struct Rank1Roots {
    bool all_integers = false;  // K = 0: every k works, with the trivial root
    std::vector<Rank1Root> roots;
};

// Integer roots of the canonical class for rank-1 structure groups.
// Requires p == 1, trivial NS torsion and a torsion-free/pic0-free K.
Rank1Roots rank1_roots(const picard::ManifoldDescriptor& base);

enum class RigidityStatus { found, absent, undecided, unsupported };

struct RigidityResult {
    RigidityStatus status = RigidityStatus::unsupported;
    std::optional<fga::IntMatrix> xi;       // automorphism of the character lattice
    std::optional<fga::IntMatrix> xi_dual;  // induced automorphism of H: inverse transpose
    std::string note;
};

// Searches for xi in GL_p(Z) with lambda_N . xi == lambda_M. Exact when the
// right-hand character map is injective; with a kernel present, coset
// representatives are searched with coefficients bounded by search_radius,
// and exhaustion yields `undecided` (never a silent wrong `absent`).
RigidityResult rigidity_solve(const PrincipalBundle& m, const PrincipalBundle& n,
                              std::size_t search_radius = 10);

// The unique bundle with the given character map on a torus group: the
// Whitney sum of the images of the basis characters.
PrincipalBundle bundle_from_lambda(const picard::ManifoldDescriptor& base,
                                   const CharacterMap& lambda);

// Whitney sum of the universal cover with NS-generator bundles: group
// pi_1(X) x (C*)^p, character map surjective onto the exact Picard data
// (NS free part, NS torsion, rational Pic_0 points). Kahler only.
PrincipalBundle construct_surjective_bundle(const picard::ManifoldDescriptor& base);

// Group homomorphism f: H -> K represented by its action on characters
// (the dual map K^ -> H^), which is all the character-map calculus needs.
struct GroupHom {
    StructureGroupDesc source;
    StructureGroupDesc target;
    ab::Hom dual;  // target.character_shape() -> source.character_shape()

    bool operator==(const GroupHom&) const = default;
};

GroupHom group_hom_identity(const StructureGroupDesc& g);
GroupHom compose(const GroupHom& g, const GroupHom& f);
// Torus-to-torus homomorphism given by its exponent matrix
// (target.torus_rank x source.torus_rank).
GroupHom torus_hom(const StructureGroupDesc& source, const StructureGroupDesc& target,
                   const fga::IntMatrix& exponents);
// Homomorphism of discrete factors (e.g. abelianization, projections).
GroupHom discrete_hom(const StructureGroupDesc& source, const StructureGroupDesc& target,
                      const fga::FgaHom& f);
// The inclusion Z^q -> C^q (source discrete free of rank q, target C^q).
GroupHom vector_inclusion(const StructureGroupDesc& source, const StructureGroupDesc& target);

// The principal bundle induced by f and b (structure group extended along
// f); its character map is lambda_b composed with the dual of f.
PrincipalBundle induced_bundle(const PrincipalBundle& b, const GroupHom& f);

// Twist by an automorphism of the torus factor (a unimodular matrix).
// Twisting by sigma then by its inverse restores the bundle.
PrincipalBundle twist_bundle(const PrincipalBundle& b, const fga::IntMatrix& sigma);

// The adjunction character chi * chi_h of a CY structure; chi_h is trivial
// for the (abelian) structure groups in scope, so this is cy.particular,
// re-verified against [K_X].
Character adjunction_character(const PrincipalBundle& b, const CyStructureSet& cy);

struct PreimageWitness {
    picard::PicElement target;
    Character preimage;
    bool verified = false;  // char map applied to preimage reproduces target
};

struct SurjectivityCertificate {
    std::vector<PreimageWitness> ns_free_generators;
    std::vector<PreimageWitness> ns_torsion_generators;
    std::vector<PreimageWitness> pic0_samples;
    std::size_t continuous_kernel_dim = 0;
    bool all_verified() const;
};

// Exact preimages for every NS generator (free and torsion) and for
// deterministic pseudo-random rational Pic_0 points.
SurjectivityCertificate certify_surjectivity(const PrincipalBundle& b,
                                             std::size_t pic0_sample_count = 20,
                                             unsigned seed = 20240801);

}  // namespace cybundle::bundles
