#pragma once

#include "cybundle/fga.hpp"
#include "cybundle/rational_matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cybundle::ab {

using fga::FgaGroup;
using fga::IntMatrix;
using fga::RationalMatrix;

// Both character groups and Picard groups in this library share one shape:
//
//   Z^free  +  (Q/Z)^circle  +  T  +  Q^line
//
// For a character group: free = torus characters, circle = unitary
// characters of the discrete free part, T = dual of the discrete torsion,
// line = rational exponents of vector-factor characters. For a Picard
// group: free = Neron-Severi coordinates, circle = rational points of
// Pic_0, T = Neron-Severi torsion, line is absent.
struct Shape {
    std::size_t free_rank = 0;
    std::size_t circle_rank = 0;
    FgaGroup torsion;  // finite (free rank zero)
    std::size_t line_rank = 0;

    bool operator==(const Shape&) const = default;
    std::size_t torsion_rank() const { return torsion.torsion_rank(); }
    bool is_trivial() const {
        return free_rank == 0 && circle_rank == 0 && torsion.is_trivial() && line_rank == 0;
    }
};

// Immutable element; circle coordinates live in [0,1), torsion coordinates
// are reduced mod the invariant factors, line coordinates are plain
// rationals (characters of C^b are not periodic).
class Element {
public:
    Element() = default;  // element of the trivial group
    Element(Shape shape, std::vector<Int> free_part, std::vector<Rational> circle_part,
            std::vector<Int> torsion_part, std::vector<Rational> line_part);

    static Element zero(const Shape& s);

    const Shape& shape() const { return shape_; }
    const std::vector<Int>& free_part() const { return free_part_; }
    const std::vector<Rational>& circle_part() const { return circle_part_; }
    const std::vector<Int>& torsion_part() const { return torsion_part_; }
    const std::vector<Rational>& line_part() const { return line_part_; }

    bool is_zero() const;
    Element operator+(const Element& rhs) const;
    Element operator-() const;
    Element operator-(const Element& rhs) const { return *this + (-rhs); }
    Element operator*(const Int& k) const;
    bool operator==(const Element&) const = default;

    std::string to_string() const;

private:
    Shape shape_;
    std::vector<Int> free_part_;
    std::vector<Rational> circle_part_;
    std::vector<Int> torsion_part_;
    std::vector<Rational> line_part_;
};

// Block homomorphism between two shapes. Structurally possible blocks only:
// the free part may hit everything, the circle part only the circle part,
// torsion may hit circle and torsion, the line part may hit circle and
// line. (Divisible to finite, finite to free, and divisible to free maps
// vanish; this is what makes the calculus exact.)
class Hom {
public:
    struct Blocks {
        IntMatrix free_free;          // free_t x free_s
        RationalMatrix circle_free;   // circle_t x free_s, entries mod 1
        IntMatrix torsion_free;       // tau_t x free_s, reduced
        RationalMatrix line_free;     // line_t x free_s
        IntMatrix circle_circle;      // circle_t x circle_s
        RationalMatrix circle_torsion;  // circle_t x tau_s (col j: denominator | factor j)
        IntMatrix torsion_torsion;    // tau_t x tau_s (order conditions)
        RationalMatrix circle_line;   // circle_t x line_s
        RationalMatrix line_line;     // line_t x line_s

        bool operator==(const Blocks&) const = default;
    };

    Hom(Shape source, Shape target, Blocks blocks);

    static Hom zero(const Shape& source, const Shape& target);
    static Hom identity(const Shape& s);

    const Shape& source() const { return source_; }
    const Shape& target() const { return target_; }
    const Blocks& blocks() const { return blocks_; }

    Element apply(const Element& x) const;
    bool operator==(const Hom&) const = default;

private:
    Shape source_;
    Shape target_;
    Blocks blocks_;
};

Hom compose(const Hom& g, const Hom& f);

// Kernel of a Hom, described exactly on the discrete part of the source and
// by dimension on the divisible part. discrete_generators have zero circle
// and line parts; together with the torsion relations they generate
// ker(h) restricted to Z^free + T.
struct KernelDescription {
    std::vector<Element> discrete_generators;
    std::size_t divisible_nullity = 0;  // Q-dimension of the circle/line kernel directions

    bool discrete_trivial() const { return discrete_generators.empty(); }
};

struct SolveResult {
    bool solvable = false;
    std::optional<Element> particular;
    KernelDescription kernel;
};

// All solutions of h(x) == target: exact over the free and torsion blocks
// (Smith reduction of one combined congruence system) and over the
// divisible blocks (rational solve against the subtorus they span).
// The particular solution is the canonical coset representative: its
// discrete coordinates are reduced against the Hermite basis of the
// discrete kernel.
SolveResult solve(const Hom& h, const Element& target);

// Membership test used by the coset-equality oracles: is x in the subgroup
// generated by the kernel description (discrete part only)?
bool in_discrete_kernel(const KernelDescription& k, const Shape& source, const Element& x);

}  // namespace cybundle::ab
