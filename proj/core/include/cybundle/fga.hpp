#pragma once

#include "cybundle/int_matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cybundle::fga {

// Finitely generated abelian group in canonical form: Z^free_rank plus one
// cyclic factor per invariant, each invariant > 1 and dividing the next.
// Structural equality of two FgaGroup values is group isomorphism.
class FgaGroup {
public:
    FgaGroup() = default;
    FgaGroup(std::size_t free_rank, std::vector<Int> invariant_factors);

    static FgaGroup free_group(std::size_t rank) { return FgaGroup(rank, {}); }
    static FgaGroup cyclic(const Int& n);
    static FgaGroup trivial() { return FgaGroup(); }

    std::size_t free_rank() const { return free_rank_; }
    const std::vector<Int>& invariant_factors() const { return invariant_factors_; }
    std::size_t torsion_rank() const { return invariant_factors_.size(); }
    std::size_t generator_count() const { return free_rank_ + invariant_factors_.size(); }
    bool is_trivial() const { return generator_count() == 0; }
    bool is_free() const { return invariant_factors_.empty(); }
    bool is_finite() const { return free_rank_ == 0; }
    Int torsion_order() const;
    FgaGroup torsion_subgroup() const { return FgaGroup(0, invariant_factors_); }

    // Columns whose images generate the relations f_i * e_{free_rank + i},
    // one per invariant factor, in the ambient Z^{generator_count}.
    IntMatrix relation_columns() const;

    bool operator==(const FgaGroup&) const = default;

    std::string to_string() const;

private:
    std::size_t free_rank_ = 0;
    std::vector<Int> invariant_factors_;
};

// Element of an FgaGroup in generator coordinates; torsion coordinates are
// kept reduced into [0, factor). Immutable after construction.
class FgaElement {
public:
    FgaElement(FgaGroup group, std::vector<Int> free_part, std::vector<Int> torsion_part);

    static FgaElement zero(const FgaGroup& g);
    static FgaElement generator(const FgaGroup& g, std::size_t index);
    // From flat generator coordinates (free then torsion).
    static FgaElement from_coordinates(const FgaGroup& g, const std::vector<Int>& coords);

    const FgaGroup& group() const { return group_; }
    const std::vector<Int>& free_part() const { return free_part_; }
    const std::vector<Int>& torsion_part() const { return torsion_part_; }
    std::vector<Int> coordinates() const;
    bool is_zero() const;

    FgaElement operator+(const FgaElement& rhs) const;
    FgaElement operator-() const;
    FgaElement operator-(const FgaElement& rhs) const { return *this + (-rhs); }
    FgaElement operator*(const Int& k) const;
    bool operator==(const FgaElement&) const = default;

    // Smallest n > 0 with n*x == 0, or 0 when x has infinite order.
    Int order() const;

    std::string to_string() const;

private:
    FgaGroup group_;
    std::vector<Int> free_part_;
    std::vector<Int> torsion_part_;
};

// Homomorphism between FgaGroups as a generator-coordinate matrix
// (target.generator_count() x source.generator_count()). Well-definedness —
// the image of each source torsion generator must be killed by that
// generator's invariant factor — is checked at construction.
class FgaHom {
public:
    FgaHom(FgaGroup source, FgaGroup target, IntMatrix matrix);

    static FgaHom identity(const FgaGroup& g);
    static FgaHom zero(const FgaGroup& source, const FgaGroup& target);
    // 1x1 convenience: multiplication by k on Z or Z/n.
    static FgaHom scalar(const FgaGroup& g, const Int& k);

    const FgaGroup& source() const { return source_; }
    const FgaGroup& target() const { return target_; }
    const IntMatrix& matrix() const { return matrix_; }

    FgaElement apply(const FgaElement& x) const;
    FgaElement generator_image(std::size_t j) const;

    // Equality as maps (numerically: equal matrices after torsion reduction).
    bool operator==(const FgaHom&) const = default;

    std::string to_string() const;

private:
    FgaGroup source_;
    FgaGroup target_;
    IntMatrix matrix_;
};

FgaHom compose(const FgaHom& g, const FgaHom& f);

// Isomorphism type of span(generators) / span(relations) inside Z^n, where
// the relation columns must lie in the generated lattice.
FgaGroup lattice_quotient(const IntMatrix& generators, const IntMatrix& relations);

FgaGroup hom_image(const FgaHom& f);
FgaGroup hom_kernel(const FgaHom& f);
FgaGroup hom_cokernel(const FgaHom& f);

// Some x with f(x) == y, or nullopt. Torsion is handled by lifting to the
// free presentation and solving the congruence system through the Smith
// form.
std::optional<FgaElement> preimage_element(const FgaHom& f, const FgaElement& y);

bool is_automorphism(const FgaHom& f);
// Throws std::domain_error when f is not an automorphism.
FgaHom invert_automorphism(const FgaHom& f);

}  // namespace cybundle::fga
