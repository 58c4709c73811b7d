#pragma once

#include "cybundle/bundles.hpp"

#include <string>
#include <vector>

namespace cybundle::toric {

// Rational polyhedral fan given by its rays (primitive integer vectors)
// and maximal cones (sets of ray indices).
struct Fan {
    std::size_t dim = 0;
    std::vector<std::vector<Int>> rays;
    std::vector<std::vector<std::size_t>> max_cones;

    std::size_t ray_count() const { return rays.size(); }
    // t x d matrix whose column i lists <e_i, u_rho> over the rays; its
    // image is the lattice of principal toric divisors.
    fga::IntMatrix relation_columns() const;
};

struct FanReport {
    bool well_formed = true;
    bool simplicial_supported = true;  // non-simplicial cones are rejected, not mis-verified
    bool smooth = false;
    bool complete = false;
    std::vector<std::string> failures;

    bool accepted() const { return well_formed && simplicial_supported && smooth && complete; }
};

// Smoothness: every maximal cone is spanned by a lattice basis (|det| = 1).
// Completeness, for simplicial full-dimensional fans: every facet is shared
// by exactly two maximal cones and no two cones overlap in their interiors
// (checked through ray containment).
FanReport check_smooth_complete(const Fan& f);

struct CoxData {
    fga::FgaGroup class_group;
    fga::FgaHom quotient_map;       // Z^t -> class_group
    fga::FgaElement canonical_class;  // image of (-1, ..., -1)
    std::size_t h_dim = 0;          // t - d, the dimension of the quotient subgroup
    fga::IntMatrix free_basis_rows;  // recorded basis change: canonical free quotient rows
};

// Class group and canonical class of the quotient construction. The free
// basis is the row Hermite form of the divisor-relation cokernel, which
// lands in the conventional bases (hyperplane class for projective space).
// Throws when check_smooth_complete rejects the fan.
CoxData cox_data(const Fan& f);

struct AudinCoxCertificate {
    bool lambda_surjective = false;
    bool kernel_is_divisor_relations = false;  // ker(lambda) == im(relation columns), rank d
    bool canonical_in_image = false;
    bool rigidity_identity = false;
    bool all_pass() const {
        return lambda_surjective && kernel_is_divisor_relations && canonical_in_image &&
               rigidity_identity;
    }
};

struct AudinCoxResult {
    bundles::PrincipalBundle bundle;
    AudinCoxCertificate certificate;
    CoxData cox;
};

// The quotient bundle of the fan over a matching descriptor: group (C*)^t,
// character map the class-group quotient in target coordinates. Errors if
// the target's Picard data does not match the class group.
AudinCoxResult audin_cox_bundle(const Fan& f, const picard::ManifoldDescriptor& target);

// Descriptor synthesized from the fan itself (smooth complete toric:
// simply connected, Pic_0 trivial); always matches audin_cox_bundle.
picard::ManifoldDescriptor descriptor_from_fan(const Fan& f, const std::string& name);

}  // namespace cybundle::toric
