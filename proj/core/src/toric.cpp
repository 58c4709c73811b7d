#include "cybundle/toric.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace cybundle::toric {

using fga::IntMatrix;

IntMatrix Fan::relation_columns() const {
    IntMatrix c(rays.size(), dim);
    for (std::size_t r = 0; r < rays.size(); ++r)
        for (std::size_t i = 0; i < dim; ++i) c.at(r, i) = rays[r][i];
    return c;
}

namespace {

Int content(const std::vector<Int>& v) {
    Int g = 0;
    for (const Int& x : v) g = gcd_int(g, x);
    return g;
}

IntMatrix cone_matrix(const Fan& f, const std::vector<std::size_t>& cone) {
    IntMatrix m(f.dim, cone.size());
    for (std::size_t j = 0; j < cone.size(); ++j)
        for (std::size_t i = 0; i < f.dim; ++i) m.at(i, j) = f.rays[cone[j]][i];
    return m;
}

}  // namespace

FanReport check_smooth_complete(const Fan& f) {
    FanReport rep;
    auto fail = [&](bool& flag, const std::string& msg) {
        flag = false;
        rep.failures.push_back(msg);
    };

    if (f.dim == 0) fail(rep.well_formed, "fan dimension must be positive");
    for (std::size_t r = 0; r < f.rays.size(); ++r) {
        if (f.rays[r].size() != f.dim) {
            fail(rep.well_formed, "ray " + std::to_string(r) + " has wrong dimension");
            continue;
        }
        if (content(f.rays[r]) != 1)
            fail(rep.well_formed, "ray " + std::to_string(r) + " is not primitive");
        for (std::size_t q = 0; q < r; ++q)
            if (f.rays[q] == f.rays[r])
                fail(rep.well_formed,
                     "rays " + std::to_string(q) + " and " + std::to_string(r) + " coincide");
    }
    std::vector<bool> used(f.rays.size(), false);
    for (std::size_t c = 0; c < f.max_cones.size(); ++c) {
        std::set<std::size_t> seen;
        for (std::size_t idx : f.max_cones[c]) {
            if (idx >= f.rays.size()) {
                fail(rep.well_formed, "cone " + std::to_string(c) + " uses an invalid ray index");
                continue;
            }
            if (!seen.insert(idx).second)
                fail(rep.well_formed, "cone " + std::to_string(c) + " repeats a ray");
            used[idx] = true;
        }
    }
    for (std::size_t r = 0; r < f.rays.size(); ++r)
        if (!used[r]) fail(rep.well_formed, "ray " + std::to_string(r) + " is in no maximal cone");
    if (f.max_cones.empty()) fail(rep.well_formed, "fan has no maximal cones");
    if (!rep.well_formed) return rep;

    rep.smooth = true;
    rep.complete = true;
    std::vector<IntMatrix> bases;  // per-cone ray matrices (d x d when simplicial full-dim)
    for (std::size_t c = 0; c < f.max_cones.size(); ++c) {
        const auto& cone = f.max_cones[c];
        if (cone.size() > f.dim) {
            fail(rep.simplicial_supported,
                 "cone " + std::to_string(c) + " is not simplicial (unsupported)");
            bases.emplace_back();
            continue;
        }
        if (cone.size() < f.dim) {
            fail(rep.complete, "cone " + std::to_string(c) + " is not full-dimensional");
            bases.emplace_back();
            continue;
        }
        IntMatrix b = cone_matrix(f, cone);
        Int det = b.determinant();
        if (det == 0) {
            fail(rep.complete, "cone " + std::to_string(c) + " is degenerate");
            bases.emplace_back();
            continue;
        }
        if (det != 1 && det != -1)
            fail(rep.smooth,
                 "cone " + std::to_string(c) + " has determinant " + abs_int(det).str());
        bases.push_back(std::move(b));
    }
    if (!rep.simplicial_supported) return rep;

    // Facet pairing: every (d-1)-subset of a maximal cone must appear in
    // exactly two maximal cones.
    std::map<std::vector<std::size_t>, std::size_t> facets;
    for (const auto& cone : f.max_cones) {
        if (cone.size() != f.dim) continue;
        std::vector<std::size_t> sorted = cone;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t skip = 0; skip < sorted.size(); ++skip) {
            std::vector<std::size_t> facet;
            for (std::size_t i = 0; i < sorted.size(); ++i)
                if (i != skip) facet.push_back(sorted[i]);
            ++facets[facet];
        }
    }
    for (const auto& [facet, count] : facets) {
        if (count == 2) continue;
        std::ostringstream os;
        os << "facet {";
        for (std::size_t i = 0; i < facet.size(); ++i) os << (i ? "," : "") << facet[i];
        os << "} is shared by " << count << " cones (expected 2)";
        fail(rep.complete, os.str());
    }

    // Fan condition, ray-containment form: a ray of one smooth cone may lie
    // in another only when it is one of its generators.
    if (rep.smooth)
        for (std::size_t c = 0; c < f.max_cones.size(); ++c) {
            if (bases[c].rows() != f.dim || bases[c].cols() != f.dim) continue;
            for (std::size_t r = 0; r < f.rays.size(); ++r) {
                if (std::find(f.max_cones[c].begin(), f.max_cones[c].end(), r) !=
                    f.max_cones[c].end())
                    continue;
                auto sol = fga::solve_integer_linear(bases[c], f.rays[r]);
                if (!sol) continue;
                bool nonneg = std::all_of(sol->particular.begin(), sol->particular.end(),
                                          [](const Int& v) { return v >= 0; });
                if (nonneg)
                    fail(rep.complete, "ray " + std::to_string(r) + " lies inside cone " +
                                           std::to_string(c) + " without being a generator");
            }
        }
    return rep;
}

CoxData cox_data(const Fan& f) {
    FanReport rep = check_smooth_complete(f);
    if (!rep.accepted()) {
        std::ostringstream os;
        os << "cox_data: fan rejected:";
        for (const auto& msg : rep.failures) os << " [" << msg << "]";
        throw std::domain_error(os.str());
    }

    const std::size_t t = f.ray_count();
    IntMatrix relations = f.relation_columns();

    // Free quotient coordinates: canonical row basis of the left kernel of
    // the relation columns. Torsion coordinates come from the Smith form.
    IntMatrix q_free = fga::left_kernel_rows(relations);
    fga::SmithDecomposition snf = fga::smith_normal_form(relations);
    std::vector<Int> invariants = snf.nontrivial_invariants();
    std::vector<std::size_t> torsion_rows;
    for (std::size_t i = 0; i < std::min(snf.d.rows(), snf.d.cols()); ++i)
        if (snf.d.at(i, i) > 1) torsion_rows.push_back(i);

    fga::FgaGroup class_group(q_free.rows(), invariants);
    IntMatrix qm(class_group.generator_count(), t);
    for (std::size_t i = 0; i < q_free.rows(); ++i)
        for (std::size_t j = 0; j < t; ++j) qm.at(i, j) = q_free.at(i, j);
    for (std::size_t k = 0; k < torsion_rows.size(); ++k)
        for (std::size_t j = 0; j < t; ++j)
            qm.at(q_free.rows() + k, j) =
                mod_floor(snf.u.at(torsion_rows[k], j), invariants[k]);

    fga::FgaHom quotient(fga::FgaGroup::free_group(t), class_group, std::move(qm));
    // Exactness of the divisor sequence at Z^t.
    for (std::size_t j = 0; j < relations.cols(); ++j)
        if (!quotient.apply(fga::FgaElement::from_coordinates(fga::FgaGroup::free_group(t),
                                                              relations.column(j)))
                 .is_zero())
            throw std::logic_error("cox_data: quotient map does not kill the relations");

    fga::FgaElement canonical = quotient.apply(fga::FgaElement::from_coordinates(
        fga::FgaGroup::free_group(t), std::vector<Int>(t, Int(-1))));
    return CoxData{class_group, std::move(quotient), std::move(canonical), t - f.dim,
                   std::move(q_free)};
}

picard::ManifoldDescriptor descriptor_from_fan(const Fan& f, const std::string& name) {
    CoxData cox = cox_data(f);
    picard::ManifoldDescriptor m;
    m.name = name;
    m.dim = f.dim;
    m.kahler = true;
    m.ns_free_rank = cox.class_group.free_rank();
    m.ns_torsion = cox.class_group.torsion_subgroup();
    m.pi1_ab = cox.class_group.torsion_subgroup();  // matches the NS torsion relation
    m.canonical_class = picard::make_pic_element(
        m, cox.canonical_class.free_part(), cox.canonical_class.torsion_part());
    return m;
}

AudinCoxResult audin_cox_bundle(const Fan& f, const picard::ManifoldDescriptor& target) {
    CoxData cox = cox_data(f);
    if (target.ns_free_rank != cox.class_group.free_rank() ||
        target.ns_torsion != cox.class_group.torsion_subgroup())
        throw std::domain_error(
            "audin_cox_bundle: target Picard data does not match the class group");
    if (target.pic0_dim != 0 || !target.pi1_ab.is_trivial() || target.ns_torsion.free_rank() != 0)
        throw std::domain_error(
            "audin_cox_bundle: a smooth complete toric base has trivial pi_1 and Pic_0");
    picard::PicElement k_from_fan = picard::make_pic_element(
        target, cox.canonical_class.free_part(), cox.canonical_class.torsion_part());
    if (k_from_fan != target.canonical_class)
        throw std::domain_error(
            "audin_cox_bundle: canonical class of the fan disagrees with the target descriptor");

    const std::size_t t = f.ray_count();
    std::vector<picard::PicElement> classes;
    for (std::size_t j = 0; j < t; ++j) {
        fga::FgaElement img = cox.quotient_map.generator_image(j);
        classes.push_back(picard::make_pic_element(target, img.free_part(), img.torsion_part()));
    }
    bundles::PrincipalBundle bundle = bundles::whitney_sum_bundle(target, classes, "audin-cox");
    bundle.provenance = bundles::Provenance{"audin-cox", "quotient presentation of the fan"};

    AudinCoxCertificate cert;
    // (i) surjectivity onto the exact Picard data.
    bundles::SurjectivityCertificate surj = bundles::certify_surjectivity(bundle, 0);
    cert.lambda_surjective = surj.all_verified();

    // (ii) the kernel is exactly the divisor-relation lattice of rank d.
    bundles::CyStructureSet cy = bundles::obstruction_check(bundle);
    const auto& gens = cy.kernel.discrete_generators;
    cert.kernel_is_divisor_relations = gens.size() == f.dim;
    IntMatrix relations = f.relation_columns();
    for (const ab::Element& g : gens) {
        if (!fga::solve_integer_linear(relations, g.free_part()).has_value())
            cert.kernel_is_divisor_relations = false;
    }
    // (iii) obstruction: K_X lies in the image, so the bundle is CY.
    cert.canonical_in_image = cy.solvable;
    // (iv) rigidity against the bundle rebuilt from the same character map.
    bundles::PrincipalBundle rebuilt = bundles::bundle_from_lambda(target, bundle.char_map);
    bundles::RigidityResult rig = bundles::rigidity_solve(bundle, rebuilt);
    cert.rigidity_identity = rig.status == bundles::RigidityStatus::found && rig.xi &&
                             rig.xi->is_identity();

    return AudinCoxResult{std::move(bundle), cert, std::move(cox)};
}

}  // namespace cybundle::toric
