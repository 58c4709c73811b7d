// Acceptance suite: every release-gating criterion, at its stated
// tolerance (all exact), one PASS/FAIL line per criterion. Exit code is
// the number of failing criteria.

#include "cybundle/bundles.hpp"
#include "cybundle/rm.hpp"
#include "cybundle/toric.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

using namespace cybundle;
using picard::ManifoldDescriptor;
using picard::PicElement;
using bundles::Character;
using bundles::PrincipalBundle;
using fga::IntMatrix;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, double budget_seconds,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > budget_seconds) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("time budget exceeded");
    }
    std::ostringstream line;
    line << (ok ? "PASS" : "FAIL") << "  [" << number << "] " << name << "  (" << elapsed
         << "s)";
    if (!ok && !detail.empty()) line << "  -- " << detail;
    std::cout << line.str() << std::endl;
    if (!ok) ++failures;
}

Character torus_char(const PrincipalBundle& b, std::vector<Int> exponents) {
    ab::Shape s = b.group.character_shape();
    return Character(s, std::move(exponents), std::vector<Rational>(s.circle_rank, Rational(0)),
                     std::vector<Int>(s.torsion_rank(), Int(0)),
                     std::vector<Rational>(s.line_rank, Rational(0)));
}

// 1. Roots of K over P^1..P^4: exactly the signed divisors of d+1.
bool roots_of_projective_spaces(std::string& detail) {
    const std::vector<std::vector<long long>> expected = {
        {-2, -1, 1, 2}, {-3, -1, 1, 3}, {-4, -2, -1, 1, 2, 4}, {-5, -1, 1, 5}};
    for (std::size_t d = 1; d <= 4; ++d) {
        bundles::Rank1Roots r = bundles::rank1_roots(picard::projective_space(d));
        std::vector<long long> ks;
        for (const auto& root : r.roots) ks.push_back(static_cast<long long>(root.k));
        if (r.all_integers || ks != expected[d - 1]) {
            detail = "wrong divisor list for P^" + std::to_string(d);
            return false;
        }
        for (const auto& root : r.roots)
            if (root.k * root.root_coordinate != Int(-(long long)(d + 1))) {
                detail = "root coordinate mismatch for P^" + std::to_string(d);
                return false;
            }
    }
    return true;
}

// 2. CY-structure coset of O(-1)+O(-1) over P^n equals {(l, n+1-l)}.
bool cy_structure_cosets(std::string& detail) {
    for (std::size_t n = 1; n <= 4; ++n) {
        ManifoldDescriptor p = picard::projective_space(n);
        PicElement o_minus1 = picard::make_pic_element(p, {Int(-1)});
        PrincipalBundle b = bundles::whitney_sum_bundle(p, {o_minus1, o_minus1});
        bundles::CyStructureSet cy = bundles::obstruction_check(b);
        if (!cy.solvable) {
            detail = "unsolvable over P^" + std::to_string(n);
            return false;
        }
        if (cy.kernel.discrete_generators.size() != 1 ||
            cy.kernel.discrete_generators[0].free_part()[0] +
                    cy.kernel.discrete_generators[0].free_part()[1] !=
                0 ||
            abs_int(cy.kernel.discrete_generators[0].free_part()[0]) != 1) {
            detail = "kernel basis is not {(1,-1)} over P^" + std::to_string(n);
            return false;
        }
        // Exact coset equality against brute force over |k|,|l| <= 12.
        for (long long k = -12; k <= 12; ++k)
            for (long long l = -12; l <= 12; ++l) {
                Character chi = torus_char(b, {Int(k), Int(l)});
                bool solves = b.char_map.apply(chi) == p.canonical_class;
                bool in_coset = ab::in_discrete_kernel(cy.kernel, b.group.character_shape(),
                                                       chi - *cy.particular);
                if (solves != (k + l == (long long)n + 1) || solves != in_coset) {
                    detail = "coset mismatch at (" + std::to_string(k) + "," +
                             std::to_string(l) + ") over P^" + std::to_string(n);
                    return false;
                }
            }
    }
    return true;
}

// 3. Rigidity of O(-1) vs O(1): xi = (-1), twist equates character maps.
bool rigidity_on_projective_space(std::string& detail) {
    for (std::size_t d = 1; d <= 4; ++d) {
        ManifoldDescriptor p = picard::projective_space(d);
        PrincipalBundle m =
            bundles::whitney_sum_bundle(p, {picard::make_pic_element(p, {Int(-1)})});
        PrincipalBundle n =
            bundles::whitney_sum_bundle(p, {picard::make_pic_element(p, {Int(1)})});
        bundles::RigidityResult r = bundles::rigidity_solve(m, n);
        if (r.status != bundles::RigidityStatus::found || r.xi->at(0, 0) != -1 ||
            r.xi_dual->at(0, 0) != -1) {
            detail = "xi != -1 on P^" + std::to_string(d);
            return false;
        }
        if (bundles::twist_bundle(n, *r.xi_dual).char_map.map != m.char_map.map) {
            detail = "twist by xi-dual does not equate the maps";
            return false;
        }
    }
    return true;
}

// 4. Smith/Hermite property suite on 1000 random matrices up to 8x8.
bool snf_hnf_property_suite(std::string& detail) {
    std::mt19937 rng(20240801);
    std::uniform_int_distribution<std::size_t> dim(1, 8);
    std::uniform_int_distribution<int> entry(-20, 20);
    for (int iter = 0; iter < 1000; ++iter) {
        IntMatrix a(dim(rng), dim(rng));
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j) a.at(i, j) = entry(rng);
        fga::SmithDecomposition s = fga::smith_normal_form(a);
        if (s.u * a * s.v != s.d || !s.u.is_unimodular() || !s.v.is_unimodular()) {
            detail = "decomposition identity failed at iteration " + std::to_string(iter);
            return false;
        }
        const std::size_t nmin = std::min(s.d.rows(), s.d.cols());
        for (std::size_t i = 0; i < s.d.rows(); ++i)
            for (std::size_t j = 0; j < s.d.cols(); ++j)
                if (i != j && s.d.at(i, j) != 0) {
                    detail = "off-diagonal junk at iteration " + std::to_string(iter);
                    return false;
                }
        for (std::size_t i = 0; i < nmin; ++i) {
            if (s.d.at(i, i) < 0) {
                detail = "negative invariant at iteration " + std::to_string(iter);
                return false;
            }
            if (i + 1 < nmin && s.d.at(i + 1, i + 1) != 0 &&
                (s.d.at(i, i) == 0 || s.d.at(i + 1, i + 1) % s.d.at(i, i) != 0)) {
                detail = "divisibility chain broken at iteration " + std::to_string(iter);
                return false;
            }
        }
        fga::HermiteDecomposition h = fga::hermite_normal_form(a);
        if (h.u * a != h.h || !h.u.is_unimodular()) {
            detail = "Hermite identity failed at iteration " + std::to_string(iter);
            return false;
        }
    }
    return true;
}

// 5. Obstruction decisions agree with brute force over the character box.
bool obstruction_oracle_equivalence(std::string& detail) {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> num(0, 5);
    std::uniform_int_distribution<std::size_t> psize(1, 3);
    for (int iter = 0; iter < 200; ++iter) {
        ManifoldDescriptor m;
        m.name = "rand";
        m.dim = 2;
        m.kahler = true;
        m.ns_free_rank = 1 + iter % 2;
        m.ns_torsion =
            iter % 3 == 0 ? fga::FgaGroup::cyclic(2 + 2 * (iter % 2)) : fga::FgaGroup::trivial();
        m.pic0_dim = iter % 2;
        m.pi1_ab = fga::FgaGroup(2 * m.pic0_dim, m.ns_torsion.invariant_factors());
        m.omega1c_dim = m.pic0_dim;
        m.canonical_class = picard::zero_class(m);

        const std::size_t p = psize(rng);
        std::vector<PicElement> classes;
        for (std::size_t j = 0; j < p; ++j) {
            std::vector<Int> free(m.ns_free_rank);
            for (auto& v : free) v = coeff(rng);
            std::vector<Int> tors(m.ns_torsion.torsion_rank());
            for (auto& v : tors) v = num(rng);
            std::vector<Rational> pic0(2 * m.pic0_dim);
            for (auto& v : pic0) v = Rational(num(rng), 4);
            classes.push_back(picard::make_pic_element(m, free, tors, pic0));
        }
        if (iter % 2 == 0) {
            PicElement k = picard::zero_class(m);
            for (const auto& c : classes) k = k + c * Int(coeff(rng));
            m.canonical_class = k;
        } else {
            std::vector<Int> free(m.ns_free_rank);
            for (auto& v : free) v = coeff(rng);
            std::vector<Rational> pic0(2 * m.pic0_dim);
            for (auto& v : pic0) v = Rational(num(rng), 4);
            m.canonical_class = picard::make_pic_element(m, free, {}, pic0);
        }

        PrincipalBundle b = bundles::whitney_sum_bundle(m, classes);
        bundles::CyStructureSet cy = bundles::obstruction_check(b);
        if (cy.solvable && b.char_map.apply(*cy.particular) != m.canonical_class) {
            detail = "particular does not hit K at iteration " + std::to_string(iter);
            return false;
        }

        bool brute = false;
        std::vector<int> x(p, -10);
        for (;;) {
            Character chi = torus_char(b, std::vector<Int>(x.begin(), x.end()));
            if (b.char_map.apply(chi) == m.canonical_class) {
                brute = true;
                if (!cy.solvable) {
                    detail = "solver missed a box solution at iteration " + std::to_string(iter);
                    return false;
                }
                if (!ab::in_discrete_kernel(cy.kernel, b.group.character_shape(),
                                            chi - *cy.particular)) {
                    detail = "box solution outside the coset at iteration " +
                             std::to_string(iter);
                    return false;
                }
            }
            std::size_t d = 0;
            while (d < p && ++x[d] > 10) x[d++] = -10;
            if (d == p) break;
        }
        if (!cy.solvable && brute) {
            detail = "disagreement at iteration " + std::to_string(iter);
            return false;
        }
    }
    return true;
}

// 6. Toric golden values, frozen from the pre-build Smith/Hermite oracle.
bool toric_golden_files(std::string& detail) {
    struct Golden {
        const char* name;
        toric::Fan fan;
        std::size_t rank;
        std::vector<long long> k;
    };
    auto pn = [](std::size_t n) {
        toric::Fan f;
        f.dim = n;
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<Int> ray(n, Int(0));
            ray[i] = 1;
            f.rays.push_back(ray);
        }
        f.rays.push_back(std::vector<Int>(n, Int(-1)));
        for (std::size_t skip = 0; skip <= n; ++skip) {
            std::vector<std::size_t> cone;
            for (std::size_t i = 0; i <= n; ++i)
                if (i != skip) cone.push_back(i);
            f.max_cones.push_back(cone);
        }
        return f;
    };
    auto hirzebruch = [](long a) {
        return toric::Fan{
            2,
            {{Int(1), Int(0)}, {Int(0), Int(1)}, {Int(-1), Int(a)}, {Int(0), Int(-1)}},
            {{0, 1}, {1, 2}, {2, 3}, {3, 0}}};
    };
    std::vector<Golden> table;
    table.push_back({"P1", toric::Fan{1, {{Int(1)}, {Int(-1)}}, {{0}, {1}}}, 1, {-2}});
    table.push_back({"P2", pn(2), 1, {-3}});
    table.push_back({"P3", pn(3), 1, {-4}});
    table.push_back(
        {"P1xP1",
         toric::Fan{2,
                    {{Int(1), Int(0)}, {Int(-1), Int(0)}, {Int(0), Int(1)}, {Int(0), Int(-1)}},
                    {{0, 2}, {2, 1}, {1, 3}, {3, 0}}},
         2,
         {-2, -2}});
    table.push_back({"F0", hirzebruch(0), 2, {-2, -2}});
    table.push_back({"F1", hirzebruch(1), 2, {-3, -2}});
    table.push_back({"F2", hirzebruch(2), 2, {-4, -2}});
    table.push_back({"F3", hirzebruch(3), 2, {-5, -2}});

    for (const Golden& g : table) {
        toric::FanReport rep = toric::check_smooth_complete(g.fan);
        if (!rep.accepted()) {
            detail = std::string(g.name) + ": smooth/complete verdict wrong";
            return false;
        }
        toric::CoxData cox = toric::cox_data(g.fan);
        if (cox.class_group.free_rank() != g.rank ||
            !cox.class_group.invariant_factors().empty() ||
            cox.class_group.free_rank() != g.fan.ray_count() - g.fan.dim) {
            detail = std::string(g.name) + ": class group mismatch";
            return false;
        }
        for (std::size_t i = 0; i < g.k.size(); ++i)
            if (cox.canonical_class.free_part()[i] != Int(g.k[i])) {
                detail = std::string(g.name) + ": canonical class mismatch";
                return false;
            }
        ManifoldDescriptor target = toric::descriptor_from_fan(g.fan, g.name);
        toric::AudinCoxResult ac = toric::audin_cox_bundle(g.fan, target);
        if (!ac.certificate.all_pass()) {
            detail = std::string(g.name) + ": certificate failed";
            return false;
        }
    }
    return true;
}

// 7. Surjectivity certificates on every Kahler catalog entry.
bool surjectivity_certificates(std::string& detail) {
    for (const ManifoldDescriptor& m : picard::catalog()) {
        if (!m.kahler) continue;
        PrincipalBundle b = bundles::construct_surjective_bundle(m);
        bundles::SurjectivityCertificate cert = bundles::certify_surjectivity(b, 20);
        if (!cert.all_verified()) {
            detail = m.name + ": certificate failed";
            return false;
        }
        if (cert.ns_free_generators.size() != m.ns_free_rank ||
            cert.ns_torsion_generators.size() != m.ns_torsion.torsion_rank()) {
            detail = m.name + ": generator coverage incomplete";
            return false;
        }
        if (m.pic0_dim > 0 && cert.pic0_samples.size() != 20) {
            detail = m.name + ": missing Pic0 samples";
            return false;
        }
        if (b.char_map.continuous_kernel_dim != m.omega1c_dim) {
            detail = m.name + ": continuous kernel dimension mismatch";
            return false;
        }
    }
    return true;
}

// 8. Functoriality of induced bundles over composed homomorphism chains.
bool functoriality(std::string& detail) {
    std::mt19937 rng(515151);
    std::uniform_int_distribution<int> e(-3, 3);
    ManifoldDescriptor p2 = picard::projective_space(2);
    ManifoldDescriptor c2 = picard::curve_of_genus(2);
    for (int iter = 0; iter < 100; ++iter) {
        const ManifoldDescriptor& base = iter % 2 == 0 ? p2 : c2;
        std::vector<PicElement> classes;
        for (int j = 0; j < 2; ++j) {
            std::vector<Int> free(base.ns_free_rank);
            for (auto& v : free) v = e(rng);
            std::vector<Rational> pic0(2 * base.pic0_dim);
            for (auto& v : pic0) v = Rational((e(rng) + 3) % 4, 4);
            classes.push_back(picard::make_pic_element(base, free, {}, pic0));
        }
        PrincipalBundle b = bundles::whitney_sum_bundle(base, classes);

        bundles::StructureGroupDesc mid, last;
        mid.torus_rank = 2;
        last.torus_rank = 1 + iter % 3;
        IntMatrix fm(2, 2), gm(last.torus_rank, 2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) fm.at(i, j) = e(rng);
        for (std::size_t i = 0; i < gm.rows(); ++i)
            for (std::size_t j = 0; j < 2; ++j) gm.at(i, j) = e(rng);
        bundles::GroupHom f = bundles::torus_hom(b.group, mid, fm);
        bundles::GroupHom g = bundles::torus_hom(mid, last, gm);

        PrincipalBundle stepwise = bundles::induced_bundle(bundles::induced_bundle(b, f), g);
        PrincipalBundle direct = bundles::induced_bundle(b, bundles::compose(g, f));
        if (stepwise.char_map.map != direct.char_map.map) {
            detail = "blockwise composition mismatch at iteration " + std::to_string(iter);
            return false;
        }
        Character chi = torus_char(stepwise, [&] {
            std::vector<Int> v(last.torus_rank);
            for (auto& x : v) x = e(rng);
            return v;
        }());
        if (stepwise.char_map.apply(chi) !=
            b.char_map.apply(f.dual.apply(g.dual.apply(chi)))) {
            detail = "pointwise composition mismatch at iteration " + std::to_string(iter);
            return false;
        }
    }
    return true;
}

// 9. Remmert-Morimoto sufficiency verdicts and the built bundle.
bool rm_sufficiency(std::string& detail) {
    using rm::Sufficiency;
    for (std::size_t n = 1; n <= 4; ++n) {
        auto v = rm::sufficiency_check(rm::RmGroup{1, 0, 0}, picard::projective_space(n));
        if (v.status != Sufficiency::sufficient) {
            detail = "P^" + std::to_string(n) + " with (1,0) not sufficient";
            return false;
        }
    }
    ManifoldDescriptor c2 = picard::curve_of_genus(2);
    if (rm::sufficiency_check(rm::RmGroup{1, 4, 0}, c2).status != Sufficiency::sufficient) {
        detail = "genus-2 with (1,4) not sufficient";
        return false;
    }
    PrincipalBundle b = rm::build_abelian_cy_bundle(rm::RmGroup{1, 4, 0}, c2);
    if (!bundles::obstruction_check(b).solvable) {
        detail = "genus-2 bundle fails the obstruction check";
        return false;
    }
    if (rm::sufficiency_check(rm::RmGroup{1, 3, 0}, c2).status != Sufficiency::unknown) {
        detail = "(1,3) over genus-2 must be unknown, not insufficient";
        return false;
    }
    return true;
}

}  // namespace

int main() {
    std::cout << "cybundle acceptance suite" << std::endl;
    criterion(1, "projective-space root classification", 1.0, roots_of_projective_spaces);
    criterion(2, "CY-structure coset over P^n", 1.0, cy_structure_cosets);
    criterion(3, "rigidity O(-1) vs O(1)", 1.0, rigidity_on_projective_space);
    criterion(4, "Smith/Hermite property suite (1000 matrices)", 30.0, snf_hnf_property_suite);
    criterion(5, "obstruction oracle equivalence (200 bundles)", 60.0,
              obstruction_oracle_equivalence);
    criterion(6, "toric golden values and certificates", 5.0, toric_golden_files);
    criterion(7, "surjectivity certificates on the Kahler catalog", 5.0,
              surjectivity_certificates);
    criterion(8, "functoriality of induced bundles (100 chains)", 10.0, functoriality);
    criterion(9, "Remmert-Morimoto sufficiency", 1.0, rm_sufficiency);
    if (failures == 0)
        std::cout << "all 9 criteria passed" << std::endl;
    else
        std::cout << failures << " criteria failed" << std::endl;
    return failures;
}
