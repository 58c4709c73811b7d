#include "cybundle/bundles.hpp"

#include <algorithm>
#include <cassert>
#include <random>
#include <sstream>
#include <stdexcept>

namespace cybundle::bundles {

using fga::IntMatrix;
using fga::RationalMatrix;
using picard::ManifoldDescriptor;
using picard::PicElement;

PrincipalBundle whitney_sum_bundle(const ManifoldDescriptor& base,
                                   const std::vector<PicElement>& classes,
                                   const std::string& name) {
    if (classes.empty())
        throw std::invalid_argument("whitney_sum_bundle: at least one class is required");
    const ab::Shape pic = base.pic_shape();
    for (const PicElement& c : classes)
        if (c.shape() != pic)
            throw std::invalid_argument("whitney_sum_bundle: class not over the given base");

    const std::size_t t = classes.size();
    StructureGroupDesc group;
    group.torus_rank = t;
    ab::Shape src = group.character_shape();

    ab::Hom::Blocks blocks{
        IntMatrix::zero(pic.free_rank, t),       RationalMatrix::zero(pic.circle_rank, t),
        IntMatrix::zero(pic.torsion_rank(), t),  RationalMatrix::zero(0, t),
        IntMatrix::zero(pic.circle_rank, 0),     RationalMatrix::zero(pic.circle_rank, 0),
        IntMatrix::zero(pic.torsion_rank(), 0),  RationalMatrix::zero(pic.circle_rank, 0),
        RationalMatrix::zero(0, 0)};
    for (std::size_t j = 0; j < t; ++j) {
        for (std::size_t i = 0; i < pic.free_rank; ++i)
            blocks.free_free.at(i, j) = classes[j].free_part()[i];
        for (std::size_t i = 0; i < pic.circle_rank; ++i)
            blocks.circle_free.at(i, j) = classes[j].circle_part()[i];
        for (std::size_t i = 0; i < pic.torsion_rank(); ++i)
            blocks.torsion_free.at(i, j) = classes[j].torsion_part()[i];
    }
    CharacterMap cm = make_character_map(group, base, ab::Hom(src, pic, std::move(blocks)), 0);
    return PrincipalBundle{name, group, base, std::move(cm),
                           Provenance{"whitney-sum", std::to_string(t) + " classes"}};
}

ab::SolveResult preimage_of_class(const PrincipalBundle& b, const PicElement& value) {
    if (value.shape() != b.base.pic_shape())
        throw std::invalid_argument("preimage_of_class: value not in the base Picard shape");
    return ab::solve(b.char_map.map, value);
}

CyStructureSet obstruction_check(const PrincipalBundle& b) {
    ab::SolveResult r = preimage_of_class(b, b.base.canonical_class);
    return CyStructureSet{r.solvable, std::move(r.particular), std::move(r.kernel),
                          b.char_map.continuous_kernel_dim};
}

Rank1Roots rank1_roots(const ManifoldDescriptor& base) {
    if (base.ns_free_rank != 1)
        throw std::domain_error("rank1_roots: requires Neron-Severi free rank 1");
    if (!base.ns_torsion.is_trivial())
        throw std::domain_error("rank1_roots: requires trivial Neron-Severi torsion");
    const PicElement& k = base.canonical_class;
    for (const Rational& v : k.circle_part())
        if (v != 0)
            throw std::domain_error("rank1_roots: requires a canonical class with trivial Pic0 part");

    Rank1Roots out;
    const Int kappa = k.free_part()[0];
    if (kappa == 0) {
        out.all_integers = true;
        return out;
    }
    Int akappa = abs_int(kappa);
    std::vector<Int> divisors;
    for (Int d = 1; d * d <= akappa; ++d) {
        if (akappa % d != 0) continue;
        divisors.push_back(d);
        if (d * d != akappa) divisors.push_back(akappa / d);
    }
    std::sort(divisors.begin(), divisors.end());
    for (auto it = divisors.rbegin(); it != divisors.rend(); ++it)
        out.roots.push_back({-*it, kappa / -*it});
    for (const Int& d : divisors) out.roots.push_back({d, kappa / d});
    return out;
}

PrincipalBundle bundle_from_lambda(const ManifoldDescriptor& base, const CharacterMap& lambda) {
    if (!lambda.group.is_pure_torus())
        throw std::invalid_argument("bundle_from_lambda: the group must be a torus (C*)^p");
    if (lambda.target != base)
        throw std::invalid_argument("bundle_from_lambda: character map targets a different base");
    std::vector<PicElement> classes;
    for (std::size_t i = 0; i < lambda.group.torus_rank; ++i)
        classes.push_back(lambda.apply(lambda.basis_character(i)));
    PrincipalBundle b = whitney_sum_bundle(base, classes, "from-lambda");
    assert(b.char_map.map == lambda.map);
    return b;
}

namespace {

IntMatrix unimodular_inverse(const IntMatrix& m) {
    const std::size_t n = m.rows();
    IntMatrix inv(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Int> e(n, Int(0));
        e[j] = 1;
        auto sol = fga::solve_integer_linear(m, e);
        if (!sol) throw std::domain_error("unimodular_inverse: matrix is not invertible over Z");
        for (std::size_t i = 0; i < n; ++i) inv.at(i, j) = sol->particular[i];
    }
    return inv;
}

// Coefficient order 0, 1, -1, 2, -2, ... so small assemblies are found
// (and reported) first.
Int zigzag(std::size_t idx) {
    if (idx == 0) return 0;
    std::size_t half = (idx + 1) / 2;
    return idx % 2 == 1 ? Int(half) : Int(-(long long)half);
}

}  // namespace

RigidityResult rigidity_solve(const PrincipalBundle& m, const PrincipalBundle& n,
                              std::size_t search_radius) {
    if (m.base != n.base || m.group != n.group)
        throw std::invalid_argument("rigidity_solve: bundles must share base and group");
    if (!m.group.is_pure_torus())
        return RigidityResult{RigidityStatus::unsupported, std::nullopt, std::nullopt,
                              "rigidity is only decided for torus groups (C*)^p"};

    const std::size_t p = m.group.torus_rank;
    if (p == 0)
        return RigidityResult{RigidityStatus::found, IntMatrix::identity(0),
                              IntMatrix::identity(0), "trivial group"};

    // Identical maps commute with the identity; prefer that answer.
    if (m.char_map.map == n.char_map.map) {
        return RigidityResult{RigidityStatus::found, IntMatrix::identity(p),
                              IntMatrix::identity(p), "character maps are equal"};
    }

    std::vector<std::vector<Int>> particulars;
    std::vector<std::vector<Int>> kernel;  // lattice generators, shared by all columns
    for (std::size_t i = 0; i < p; ++i) {
        PicElement v = m.char_map.apply(m.char_map.basis_character(i));
        ab::SolveResult sol = ab::solve(n.char_map.map, v);
        if (!sol.solvable)
            return RigidityResult{RigidityStatus::absent, std::nullopt, std::nullopt,
                                  "a basis image of lambda_M is outside im(lambda_N)"};
        particulars.push_back(sol.particular->free_part());
        if (i == 0)
            for (const ab::Element& g : sol.kernel.discrete_generators)
                kernel.push_back(g.free_part());
    }

    auto assemble = [&](const std::vector<std::vector<Int>>& cols) {
        IntMatrix xi(p, p);
        for (std::size_t j = 0; j < p; ++j)
            for (std::size_t i = 0; i < p; ++i) xi.at(i, j) = cols[j][i];
        return xi;
    };

    auto finish = [&](IntMatrix xi) {
        IntMatrix xi_dual = unimodular_inverse(xi).transpose();
        return RigidityResult{RigidityStatus::found, std::move(xi), std::move(xi_dual), ""};
    };

    if (kernel.empty()) {
        IntMatrix xi = assemble(particulars);
        if (xi.is_unimodular()) return finish(std::move(xi));
        // Columns are the unique preimages, so no other candidate exists.
        return RigidityResult{RigidityStatus::absent, std::nullopt, std::nullopt,
                              "unique preimages assemble to a non-unimodular matrix"};
    }

    const std::size_t r = kernel.size();
    const std::size_t width = 2 * search_radius + 1;
    const std::size_t dims = r * p;
    // Odometer over coset coefficients for every column at once.
    std::vector<std::size_t> idx(dims, 0);
    const std::size_t budget = 5'000'000;
    std::size_t visited = 0;
    for (;;) {
        std::vector<std::vector<Int>> cols = particulars;
        for (std::size_t j = 0; j < p; ++j)
            for (std::size_t g = 0; g < r; ++g) {
                Int c = zigzag(idx[j * r + g]);
                if (c == 0) continue;
                for (std::size_t i = 0; i < p; ++i) cols[j][i] += c * kernel[g][i];
            }
        IntMatrix xi = assemble(cols);
        if (xi.is_unimodular()) return finish(std::move(xi));

        if (++visited >= budget)
            return RigidityResult{RigidityStatus::undecided, std::nullopt, std::nullopt,
                                  "search budget exhausted with a nontrivial kernel present"};
        std::size_t d = 0;
        while (d < dims) {
            if (++idx[d] < width) break;
            idx[d] = 0;
            ++d;
        }
        if (d == dims)
            return RigidityResult{RigidityStatus::undecided, std::nullopt, std::nullopt,
                                  "search radius exhausted with a nontrivial kernel present"};
    }
}

PrincipalBundle construct_surjective_bundle(const ManifoldDescriptor& base) {
    if (!base.kahler)
        throw std::domain_error("construct_surjective_bundle: requires a Kahler base");
    if (!picard::validate(base).empty())
        throw std::domain_error("construct_surjective_bundle: descriptor fails validation");

    StructureGroupDesc group;
    group.torus_rank = base.ns_free_rank;
    if (!base.pi1_ab.is_trivial()) group.pi1_factor = base.pi1_ab;
    ab::Shape src = group.character_shape();
    ab::Shape tgt = base.pic_shape();

    // Torus block onto the NS free generators, pi_1 free characters onto
    // the rational Pic_0 torus, dual torsion onto NS torsion.
    ab::Hom::Blocks blocks{
        IntMatrix::identity(tgt.free_rank),
        RationalMatrix::zero(tgt.circle_rank, src.free_rank),
        IntMatrix::zero(tgt.torsion_rank(), src.free_rank),
        RationalMatrix::zero(tgt.line_rank, src.free_rank),
        IntMatrix::identity(src.circle_rank),
        RationalMatrix::zero(tgt.circle_rank, src.torsion_rank()),
        IntMatrix::identity(src.torsion_rank()),
        RationalMatrix::zero(tgt.circle_rank, src.line_rank),
        RationalMatrix::zero(tgt.line_rank, src.line_rank)};
    CharacterMap cm =
        make_character_map(group, base, ab::Hom(src, tgt, std::move(blocks)), base.omega1c_dim);
    return PrincipalBundle{"surjective-" + base.name, group, base, std::move(cm),
                           Provenance{"universal-cover", "universal cover + NS generators"}};
}

GroupHom group_hom_identity(const StructureGroupDesc& g) {
    return GroupHom{g, g, ab::Hom::identity(g.character_shape())};
}

GroupHom compose(const GroupHom& g, const GroupHom& f) {
    if (f.target != g.source) throw std::invalid_argument("GroupHom: composition mismatch");
    return GroupHom{f.source, g.target, ab::compose(f.dual, g.dual)};
}

GroupHom torus_hom(const StructureGroupDesc& source, const StructureGroupDesc& target,
                   const IntMatrix& exponents) {
    if (exponents.rows() != target.torus_rank || exponents.cols() != source.torus_rank)
        throw std::invalid_argument("torus_hom: exponent matrix shape mismatch");
    if (!source.is_pure_torus() || !target.is_pure_torus())
        throw std::invalid_argument("torus_hom: both groups must be pure tori");
    ab::Shape st = target.character_shape();
    ab::Shape ss = source.character_shape();
    ab::Hom::Blocks b{
        exponents.transpose(),
        RationalMatrix::zero(ss.circle_rank, st.free_rank),
        IntMatrix::zero(ss.torsion_rank(), st.free_rank),
        RationalMatrix::zero(ss.line_rank, st.free_rank),
        IntMatrix::zero(ss.circle_rank, st.circle_rank),
        RationalMatrix::zero(ss.circle_rank, st.torsion_rank()),
        IntMatrix::zero(ss.torsion_rank(), st.torsion_rank()),
        RationalMatrix::zero(ss.circle_rank, st.line_rank),
        RationalMatrix::zero(ss.line_rank, st.line_rank)};
    return GroupHom{source, target, ab::Hom(st, ss, std::move(b))};
}

GroupHom discrete_hom(const StructureGroupDesc& source, const StructureGroupDesc& target,
                      const fga::FgaHom& f) {
    if (!source.pi1_factor || !target.pi1_factor || source.torus_rank != 0 ||
        target.torus_rank != 0 || source.vector_rank != 0 || target.vector_rank != 0)
        throw std::invalid_argument("discrete_hom: both groups must be purely discrete");
    if (f.source() != *source.pi1_factor || f.target() != *target.pi1_factor)
        throw std::invalid_argument("discrete_hom: FgaHom does not match the factors");

    const fga::FgaGroup& dh = *source.pi1_factor;
    const fga::FgaGroup& dk = *target.pi1_factor;
    const std::size_t qh = dh.free_rank(), th = dh.torsion_rank();
    const std::size_t qk = dk.free_rank(), tk = dk.torsion_rank();
    const IntMatrix& fm = f.matrix();

    // Dual of a discrete homomorphism: transpose on the free blocks, with
    // the free->torsion block turning into rational circle values and the
    // torsion block rescaled through the self-duality convention.
    ab::Shape ss = source.character_shape();
    ab::Shape st = target.character_shape();
    ab::Hom::Blocks b{
        IntMatrix::zero(0, 0),
        RationalMatrix::zero(qh, 0),
        IntMatrix::zero(th, 0),
        RationalMatrix::zero(0, 0),
        IntMatrix(qh, qk),
        RationalMatrix(qh, tk),
        IntMatrix(th, tk),
        RationalMatrix::zero(qh, 0),
        RationalMatrix::zero(0, 0)};
    for (std::size_t j = 0; j < qh; ++j) {
        for (std::size_t i = 0; i < qk; ++i) b.circle_circle.at(j, i) = fm.at(i, j);
        for (std::size_t i = 0; i < tk; ++i)
            b.circle_torsion.at(j, i) =
                Rational(fm.at(qk + i, j), dk.invariant_factors()[i]);
    }
    for (std::size_t j = 0; j < th; ++j)
        for (std::size_t i = 0; i < tk; ++i) {
            // t^H_j * B_ij / t^K_i is integral by well-definedness of f.
            Int num = dh.invariant_factors()[j] * fm.at(qk + i, qh + j);
            b.torsion_torsion.at(j, i) = num / dk.invariant_factors()[i];
        }
    return GroupHom{source, target, ab::Hom(st, ss, std::move(b))};
}

GroupHom vector_inclusion(const StructureGroupDesc& source, const StructureGroupDesc& target) {
    if (!source.pi1_factor || !source.pi1_factor->is_free() || source.torus_rank != 0 ||
        source.vector_rank != 0)
        throw std::invalid_argument("vector_inclusion: source must be a free discrete group Z^q");
    if (target.torus_rank != 0 || target.pi1_factor ||
        target.vector_rank != source.pi1_factor->free_rank())
        throw std::invalid_argument("vector_inclusion: target must be C^q of matching rank");
    const std::size_t q = source.pi1_factor->free_rank();
    ab::Shape ss = source.character_shape();
    ab::Shape st = target.character_shape();
    // Dual of the inclusion: a rational exponent vector restricts to its
    // class mod 1 on the lattice.
    ab::Hom::Blocks b{
        IntMatrix::zero(0, 0),         RationalMatrix::zero(q, 0),
        IntMatrix::zero(0, 0),         RationalMatrix::zero(0, 0),
        IntMatrix::zero(q, 0),         RationalMatrix::zero(q, 0),
        IntMatrix::zero(0, 0),         RationalMatrix::identity(q),
        RationalMatrix::zero(0, q)};
    return GroupHom{source, target, ab::Hom(st, ss, std::move(b))};
}

PrincipalBundle induced_bundle(const PrincipalBundle& b, const GroupHom& f) {
    if (f.source != b.group)
        throw std::invalid_argument("induced_bundle: homomorphism source is not the bundle group");
    ab::Hom composed = ab::compose(b.char_map.map, f.dual);
    // The continuous kernel dimension is known only for the named
    // constructions; a general induced bundle records zero.
    std::size_t ckd = (f.dual == ab::Hom::identity(f.dual.source()))
                          ? b.char_map.continuous_kernel_dim
                          : 0;
    CharacterMap cm = make_character_map(f.target, b.base, std::move(composed), ckd);
    return PrincipalBundle{b.name + "-induced", f.target, b.base, std::move(cm),
                           Provenance{"induced", "from " + b.name}};
}

PrincipalBundle twist_bundle(const PrincipalBundle& b, const IntMatrix& sigma) {
    const std::size_t p = b.group.torus_rank;
    if (sigma.rows() != p || sigma.cols() != p)
        throw std::invalid_argument("twist_bundle: automorphism must act on the torus factor");
    if (!sigma.is_unimodular())
        throw std::invalid_argument("twist_bundle: matrix is not an automorphism (det != +-1)");

    // lambda_{M^sigma}(chi) = lambda_M(chi . sigma^{-1}); on exponent
    // columns that is right-composition with sigma^{-T}.
    IntMatrix dual_matrix = unimodular_inverse(sigma).transpose();
    ab::Shape s = b.group.character_shape();
    ab::Hom::Blocks blocks{
        dual_matrix,
        RationalMatrix::zero(s.circle_rank, s.free_rank),
        IntMatrix::zero(s.torsion_rank(), s.free_rank),
        RationalMatrix::zero(s.line_rank, s.free_rank),
        IntMatrix::identity(s.circle_rank),
        RationalMatrix::zero(s.circle_rank, s.torsion_rank()),
        IntMatrix::identity(s.torsion_rank()),
        RationalMatrix::zero(s.circle_rank, s.line_rank),
        RationalMatrix::identity(s.line_rank)};
    ab::Hom dual(s, s, std::move(blocks));
    CharacterMap cm = make_character_map(b.group, b.base, ab::compose(b.char_map.map, dual),
                                         b.char_map.continuous_kernel_dim);
    return PrincipalBundle{b.name + "-twist", b.group, b.base, std::move(cm),
                           Provenance{"twist", "torus automorphism"}};
}

Character adjunction_character(const PrincipalBundle& b, const CyStructureSet& cy) {
    if (!cy.solvable || !cy.particular)
        throw std::domain_error("adjunction_character: the bundle admits no CY structure");
    // chi_h is trivial: every structure group representable here is
    // abelian, so the adjoint character vanishes.
    Character chi = *cy.particular;
    if (b.char_map.apply(chi) != b.base.canonical_class)
        throw std::domain_error("adjunction_character: particular character does not hit K_X");
    return chi;
}

bool SurjectivityCertificate::all_verified() const {
    auto ok = [](const std::vector<PreimageWitness>& v) {
        return std::all_of(v.begin(), v.end(), [](const PreimageWitness& w) { return w.verified; });
    };
    return ok(ns_free_generators) && ok(ns_torsion_generators) && ok(pic0_samples);
}

SurjectivityCertificate certify_surjectivity(const PrincipalBundle& b,
                                             std::size_t pic0_sample_count, unsigned seed) {
    const ManifoldDescriptor& base = b.base;
    const ab::Shape pic = base.pic_shape();
    SurjectivityCertificate cert;
    cert.continuous_kernel_dim = b.char_map.continuous_kernel_dim;

    auto witness = [&](const PicElement& target) {
        ab::SolveResult sol = preimage_of_class(b, target);
        PreimageWitness w{target, Character::zero(b.group.character_shape()), false};
        if (sol.solvable && sol.particular) {
            w.preimage = *sol.particular;
            w.verified = b.char_map.apply(w.preimage) == target;
        }
        return w;
    };

    for (std::size_t i = 0; i < pic.free_rank; ++i) {
        std::vector<Int> free(pic.free_rank, Int(0));
        free[i] = 1;
        cert.ns_free_generators.push_back(witness(picard::make_pic_element(base, free)));
    }
    for (std::size_t i = 0; i < pic.torsion_rank(); ++i) {
        std::vector<Int> tors(pic.torsion_rank(), Int(0));
        tors[i] = 1;
        cert.ns_torsion_generators.push_back(witness(
            picard::make_pic_element(base, std::vector<Int>(pic.free_rank, Int(0)), tors)));
    }
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> num(0, 11);
    std::uniform_int_distribution<int> den(1, 12);
    for (std::size_t s = 0; s < pic0_sample_count && pic.circle_rank > 0; ++s) {
        std::vector<Rational> point(pic.circle_rank);
        for (auto& v : point) {
            int d = den(rng);
            v = mod_one(Rational(num(rng), d));
        }
        cert.pic0_samples.push_back(witness(picard::make_pic_element(
            base, std::vector<Int>(pic.free_rank, Int(0)),
            std::vector<Int>(pic.torsion_rank(), Int(0)), std::move(point))));
    }
    return cert;
}

}  // namespace cybundle::bundles
