#pragma once

#include "cybundle/bundles.hpp"
#include "cybundle/rm.hpp"
#include "cybundle/toric.hpp"

#include <json.hpp>

#include <string>

namespace cybundle::io {

using nlohmann::json;

// Integers are emitted as JSON numbers while they fit in 64 bits and as
// decimal strings beyond; rationals are always ["num", "den"] string pairs
// so no value ever rides through floating point.
json int_to_json(const Int& v);
Int int_from_json(const json& j);
json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);

json to_json(const fga::IntMatrix& m);
fga::IntMatrix int_matrix_from_json(const json& j);
json to_json(const fga::RationalMatrix& m);
fga::RationalMatrix rational_matrix_from_json(const json& j);

json to_json(const fga::FgaGroup& g);
fga::FgaGroup fga_group_from_json(const json& j);

json to_json(const ab::Element& e);  // parts only; the shape comes from context
ab::Element element_from_json(const json& j, const ab::Shape& shape);

// Spec-pinned manifold schema:
// {name, dim, kahler, ns_free_rank, ns_torsion: [factors], pic0_dim,
//  pi1_free_rank, pi1_torsion: [factors], omega1c_dim,
//  canonical: {free, torsion, pic0}}
json to_json(const picard::ManifoldDescriptor& m);
picard::ManifoldDescriptor manifold_from_json(const json& j);

// Fan schema: {dim, rays: [[..]], max_cones: [[indices]]}
json to_json(const toric::Fan& f);
toric::Fan fan_from_json(const json& j);

// Group schema: {torus_rank, vector_rank, cousin_dim}
json to_json(const rm::RmGroup& g);
rm::RmGroup rm_group_from_json(const json& j);

json to_json(const bundles::StructureGroupDesc& g);
bundles::StructureGroupDesc group_desc_from_json(const json& j);

json to_json(const bundles::CharacterMap& cm);
json to_json(const bundles::PrincipalBundle& b);
// Accepts either a full bundle object (group/base/char_map) or the
// whitney shorthand {base, classes: [{free, torsion, pic0}, ...]}.
bundles::PrincipalBundle bundle_from_json(const json& j);

json to_json(const bundles::CyStructureSet& cy);
json to_json(const ab::KernelDescription& k);
json to_json(const bundles::RigidityResult& r);
json to_json(const bundles::SurjectivityCertificate& c);
json to_json(const toric::FanReport& r);
json to_json(const toric::CoxData& c);
json to_json(const toric::AudinCoxCertificate& c);
json to_json(const rm::SufficiencyVerdict& v);
json to_json(const bundles::Rank1Roots& r);

}  // namespace cybundle::io
