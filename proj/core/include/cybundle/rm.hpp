#pragma once

#include "cybundle/bundles.hpp"

#include <string>

namespace cybundle::rm {

// Connected abelian complex Lie group in Remmert-Morimoto form:
// (C*)^a x C^b x G_0 with G_0 a Cousin group (opaque here; its character
// group is trivial).
struct RmGroup {
    std::size_t torus_rank = 0;   // a
    std::size_t vector_rank = 0;  // b
    std::size_t cousin_dim = 0;
    std::string cousin_label;

    bool operator==(const RmGroup&) const = default;
};

struct CharacterGroupInfo {
    std::size_t free_rank = 0;       // Z^a from the torus factor
    std::size_t continuous_dim = 0;  // C^b worth of characters, rational exponents in this model
    std::size_t cousin_dim = 0;      // contributes nothing
};

CharacterGroupInfo character_group(const RmGroup& g);

enum class Sufficiency { sufficient, insufficient, unknown };

struct SufficiencyVerdict {
    Sufficiency status = Sufficiency::unknown;
    std::string reason;
};

// Sufficient when a >= (minimal generator count of the Neron-Severi group)
// and b >= rank of the pi_1 abelianization. `insufficient` is returned only
// on airtight necessary-condition failures (divisibility or cardinality
// arguments); everything else non-sufficient is `unknown`, because only the
// sufficient direction is a theorem.
SufficiencyVerdict sufficiency_check(const RmGroup& g, const picard::ManifoldDescriptor& base);

// CY bundle with surjective character map for a sufficient group: the
// first p torus characters hit the NS generators (free then torsion), the
// first q = 2g vector coordinates hit the rational Pic_0 torus, and all
// padding columns are zero.
bundles::PrincipalBundle build_abelian_cy_bundle(const RmGroup& g,
                                                 const picard::ManifoldDescriptor& base);

}  // namespace cybundle::rm
