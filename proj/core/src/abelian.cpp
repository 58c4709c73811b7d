#include "cybundle/abelian.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace cybundle::ab {

namespace {

std::vector<Rational> to_rational(const std::vector<Int>& v) {
    std::vector<Rational> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rational(v[i]);
    return r;
}

RationalMatrix mod_one_matrix(RationalMatrix m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = mod_one(m.at(i, j));
    return m;
}

IntMatrix reduce_torsion_rows(IntMatrix m, const FgaGroup& torsion) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            m.at(i, j) = mod_floor(m.at(i, j), torsion.invariant_factors()[i]);
    return m;
}

RationalMatrix stack(const RationalMatrix& top, const RationalMatrix& bottom) {
    if (top.cols() != bottom.cols()) throw std::invalid_argument("stack: column mismatch");
    RationalMatrix m(top.rows() + bottom.rows(), top.cols());
    for (std::size_t i = 0; i < top.rows(); ++i)
        for (std::size_t j = 0; j < top.cols(); ++j) m.at(i, j) = top.at(i, j);
    for (std::size_t i = 0; i < bottom.rows(); ++i)
        for (std::size_t j = 0; j < bottom.cols(); ++j) m.at(top.rows() + i, j) = bottom.at(i, j);
    return m;
}

}  // namespace

Element::Element(Shape shape, std::vector<Int> free_part, std::vector<Rational> circle_part,
                 std::vector<Int> torsion_part, std::vector<Rational> line_part)
    : shape_(std::move(shape)), free_part_(std::move(free_part)),
      circle_part_(std::move(circle_part)), torsion_part_(std::move(torsion_part)),
      line_part_(std::move(line_part)) {
    if (shape_.torsion.free_rank() != 0)
        throw std::invalid_argument("Element: shape torsion must be a finite group");
    if (free_part_.size() != shape_.free_rank || circle_part_.size() != shape_.circle_rank ||
        torsion_part_.size() != shape_.torsion_rank() || line_part_.size() != shape_.line_rank)
        throw std::invalid_argument("Element: coordinate lengths do not match the shape");
    for (auto& c : circle_part_) c = mod_one(c);
    for (std::size_t i = 0; i < torsion_part_.size(); ++i)
        torsion_part_[i] = mod_floor(torsion_part_[i], shape_.torsion.invariant_factors()[i]);
}

Element Element::zero(const Shape& s) {
    return Element(s, std::vector<Int>(s.free_rank, Int(0)),
                   std::vector<Rational>(s.circle_rank, Rational(0)),
                   std::vector<Int>(s.torsion_rank(), Int(0)),
                   std::vector<Rational>(s.line_rank, Rational(0)));
}

bool Element::is_zero() const {
    auto zi = [](const Int& v) { return v == 0; };
    auto zr = [](const Rational& v) { return v == 0; };
    return std::all_of(free_part_.begin(), free_part_.end(), zi) &&
           std::all_of(circle_part_.begin(), circle_part_.end(), zr) &&
           std::all_of(torsion_part_.begin(), torsion_part_.end(), zi) &&
           std::all_of(line_part_.begin(), line_part_.end(), zr);
}

Element Element::operator+(const Element& rhs) const {
    if (shape_ != rhs.shape_) throw std::invalid_argument("Element: shape mismatch in sum");
    std::vector<Int> fp = free_part_;
    for (std::size_t i = 0; i < fp.size(); ++i) fp[i] += rhs.free_part_[i];
    std::vector<Rational> cp = circle_part_;
    for (std::size_t i = 0; i < cp.size(); ++i) cp[i] += rhs.circle_part_[i];
    std::vector<Int> tp = torsion_part_;
    for (std::size_t i = 0; i < tp.size(); ++i) tp[i] += rhs.torsion_part_[i];
    std::vector<Rational> lp = line_part_;
    for (std::size_t i = 0; i < lp.size(); ++i) lp[i] += rhs.line_part_[i];
    return Element(shape_, std::move(fp), std::move(cp), std::move(tp), std::move(lp));
}

Element Element::operator-() const {
    std::vector<Int> fp = free_part_;
    for (auto& v : fp) v = -v;
    std::vector<Rational> cp = circle_part_;
    for (auto& v : cp) v = -v;
    std::vector<Int> tp = torsion_part_;
    for (auto& v : tp) v = -v;
    std::vector<Rational> lp = line_part_;
    for (auto& v : lp) v = -v;
    return Element(shape_, std::move(fp), std::move(cp), std::move(tp), std::move(lp));
}

Element Element::operator*(const Int& k) const {
    std::vector<Int> fp = free_part_;
    for (auto& v : fp) v *= k;
    std::vector<Rational> cp = circle_part_;
    for (auto& v : cp) v *= Rational(k);
    std::vector<Int> tp = torsion_part_;
    for (auto& v : tp) v *= k;
    std::vector<Rational> lp = line_part_;
    for (auto& v : lp) v *= Rational(k);
    return Element(shape_, std::move(fp), std::move(cp), std::move(tp), std::move(lp));
}

std::string Element::to_string() const {
    std::ostringstream os;
    os << "(";
    bool first = true;
    auto emit = [&](const std::string& s) {
        if (!first) os << ", ";
        os << s;
        first = false;
    };
    for (const Int& v : free_part_) emit(v.str());
    for (const Rational& v : circle_part_) emit(cybundle::to_string(v));
    for (std::size_t i = 0; i < torsion_part_.size(); ++i)
        emit(torsion_part_[i].str() + " mod " + shape_.torsion.invariant_factors()[i].str());
    for (const Rational& v : line_part_) emit(cybundle::to_string(v));
    os << ")";
    return os.str();
}

Hom::Hom(Shape source, Shape target, Blocks blocks)
    : source_(std::move(source)), target_(std::move(target)), blocks_(std::move(blocks)) {
    if (source_.torsion.free_rank() != 0 || target_.torsion.free_rank() != 0)
        throw std::invalid_argument("Hom: shape torsion must be a finite group");
    const std::size_t as = source_.free_rank, qs = source_.circle_rank,
                      ts = source_.torsion_rank(), bs = source_.line_rank;
    const std::size_t at = target_.free_rank, qt = target_.circle_rank,
                      tt_ = target_.torsion_rank(), bt = target_.line_rank;
    auto check = [](std::size_t r, std::size_t c, std::size_t er, std::size_t ec,
                    const char* name) {
        if (r != er || c != ec)
            throw std::invalid_argument(std::string("Hom: block ") + name + " has wrong shape");
    };
    check(blocks_.free_free.rows(), blocks_.free_free.cols(), at, as, "free_free");
    check(blocks_.circle_free.rows(), blocks_.circle_free.cols(), qt, as, "circle_free");
    check(blocks_.torsion_free.rows(), blocks_.torsion_free.cols(), tt_, as, "torsion_free");
    check(blocks_.line_free.rows(), blocks_.line_free.cols(), bt, as, "line_free");
    check(blocks_.circle_circle.rows(), blocks_.circle_circle.cols(), qt, qs, "circle_circle");
    check(blocks_.circle_torsion.rows(), blocks_.circle_torsion.cols(), qt, ts, "circle_torsion");
    check(blocks_.torsion_torsion.rows(), blocks_.torsion_torsion.cols(), tt_, ts,
          "torsion_torsion");
    check(blocks_.circle_line.rows(), blocks_.circle_line.cols(), qt, bs, "circle_line");
    check(blocks_.line_line.rows(), blocks_.line_line.cols(), bt, bs, "line_line");

    blocks_.circle_free = mod_one_matrix(std::move(blocks_.circle_free));
    if (tt_ > 0) {
        blocks_.torsion_free = reduce_torsion_rows(std::move(blocks_.torsion_free), target_.torsion);
        blocks_.torsion_torsion =
            reduce_torsion_rows(std::move(blocks_.torsion_torsion), target_.torsion);
    }
    blocks_.circle_torsion = mod_one_matrix(std::move(blocks_.circle_torsion));

    // Well-definedness on source torsion: the image of a generator of order
    // n must be killed by n.
    for (std::size_t j = 0; j < ts; ++j) {
        const Int& n = source_.torsion.invariant_factors()[j];
        for (std::size_t i = 0; i < qt; ++i) {
            Rational v = blocks_.circle_torsion.at(i, j) * Rational(n);
            if (denominator(v) != 1)
                throw std::invalid_argument(
                    "Hom: circle_torsion entry has order exceeding the source factor");
        }
        for (std::size_t i = 0; i < tt_; ++i) {
            if ((n * blocks_.torsion_torsion.at(i, j)) % target_.torsion.invariant_factors()[i] !=
                0)
                throw std::invalid_argument(
                    "Hom: torsion_torsion entry violates the order condition");
        }
    }
}

Hom Hom::zero(const Shape& source, const Shape& target) {
    Blocks b{IntMatrix::zero(target.free_rank, source.free_rank),
             RationalMatrix::zero(target.circle_rank, source.free_rank),
             IntMatrix::zero(target.torsion_rank(), source.free_rank),
             RationalMatrix::zero(target.line_rank, source.free_rank),
             IntMatrix::zero(target.circle_rank, source.circle_rank),
             RationalMatrix::zero(target.circle_rank, source.torsion_rank()),
             IntMatrix::zero(target.torsion_rank(), source.torsion_rank()),
             RationalMatrix::zero(target.circle_rank, source.line_rank),
             RationalMatrix::zero(target.line_rank, source.line_rank)};
    return Hom(source, target, std::move(b));
}

Hom Hom::identity(const Shape& s) {
    Blocks b{IntMatrix::identity(s.free_rank),
             RationalMatrix::zero(s.circle_rank, s.free_rank),
             IntMatrix::zero(s.torsion_rank(), s.free_rank),
             RationalMatrix::zero(s.line_rank, s.free_rank),
             IntMatrix::identity(s.circle_rank),
             RationalMatrix::zero(s.circle_rank, s.torsion_rank()),
             IntMatrix::identity(s.torsion_rank()),
             RationalMatrix::zero(s.circle_rank, s.line_rank),
             RationalMatrix::identity(s.line_rank)};
    return Hom(s, s, std::move(b));
}

Element Hom::apply(const Element& x) const {
    if (x.shape() != source_) throw std::invalid_argument("Hom: element not in the source");
    std::vector<Int> free = blocks_.free_free * x.free_part();

    std::vector<Rational> circle(target_.circle_rank, Rational(0));
    {
        auto add = [&](const std::vector<Rational>& v) {
            for (std::size_t i = 0; i < circle.size(); ++i) circle[i] += v[i];
        };
        add(blocks_.circle_free * to_rational(x.free_part()));
        add(RationalMatrix::from_int(blocks_.circle_circle) * x.circle_part());
        add(blocks_.circle_torsion * to_rational(x.torsion_part()));
        add(blocks_.circle_line * x.line_part());
    }

    std::vector<Int> torsion = blocks_.torsion_free * x.free_part();
    {
        std::vector<Int> t2 = blocks_.torsion_torsion * x.torsion_part();
        for (std::size_t i = 0; i < torsion.size(); ++i) torsion[i] += t2[i];
    }

    std::vector<Rational> line = blocks_.line_free * to_rational(x.free_part());
    {
        std::vector<Rational> l2 = blocks_.line_line * x.line_part();
        for (std::size_t i = 0; i < line.size(); ++i) line[i] += l2[i];
    }
    return Element(target_, std::move(free), std::move(circle), std::move(torsion),
                   std::move(line));
}

Hom compose(const Hom& g, const Hom& f) {
    if (f.target() != g.source()) throw std::invalid_argument("Hom: composition mismatch");
    const auto& a = g.blocks();
    const auto& b = f.blocks();
    auto R = [](const IntMatrix& m) { return RationalMatrix::from_int(m); };

    Hom::Blocks c;
    c.free_free = a.free_free * b.free_free;
    c.circle_free = a.circle_free * R(b.free_free) + R(a.circle_circle) * b.circle_free +
                    a.circle_torsion * R(b.torsion_free) + a.circle_line * b.line_free;
    c.torsion_free = a.torsion_free * b.free_free + a.torsion_torsion * b.torsion_free;
    c.line_free = a.line_free * R(b.free_free) + a.line_line * b.line_free;
    c.circle_circle = a.circle_circle * b.circle_circle;
    c.circle_torsion = R(a.circle_circle) * b.circle_torsion + a.circle_torsion * R(b.torsion_torsion);
    c.torsion_torsion = a.torsion_torsion * b.torsion_torsion;
    c.circle_line = R(a.circle_circle) * b.circle_line + a.circle_line * b.line_line;
    c.line_line = a.line_line * b.line_line;
    return Hom(f.source(), g.target(), std::move(c));
}

namespace {

// Matrix of the divisible source directions against the circle+line target
// coordinates: [cc cl; 0 ll].
RationalMatrix divisible_block(const Hom& h) {
    const auto& b = h.blocks();
    RationalMatrix top = RationalMatrix::from_int(b.circle_circle).augmented(b.circle_line);
    RationalMatrix bottom =
        RationalMatrix::zero(h.target().line_rank, h.source().circle_rank).augmented(b.line_line);
    return stack(top, bottom);
}

std::vector<Element> canonical_discrete_generators(const Shape& source,
                                                   const std::vector<std::vector<Int>>& raw) {
    const std::size_t a = source.free_rank;
    const std::size_t t = source.torsion_rank();
    // Rows: raw generators plus the torsion relations, canonicalized by HNF.
    IntMatrix rows(raw.size() + t, a + t);
    for (std::size_t i = 0; i < raw.size(); ++i)
        for (std::size_t j = 0; j < a + t; ++j) rows.at(i, j) = raw[i][j];
    for (std::size_t i = 0; i < t; ++i)
        rows.at(raw.size() + i, a + i) = source.torsion.invariant_factors()[i];
    fga::HermiteDecomposition h = fga::hermite_normal_form(rows);
    std::vector<Element> gens;
    for (std::size_t i = 0; i < h.rank; ++i) {
        std::vector<Int> row = h.h.row(i);
        std::vector<Int> free(row.begin(), row.begin() + a);
        std::vector<Int> tors(row.begin() + a, row.end());
        Element e(source, std::move(free), std::vector<Rational>(source.circle_rank, Rational(0)),
                  std::move(tors), std::vector<Rational>(source.line_rank, Rational(0)));
        if (!e.is_zero()) gens.push_back(std::move(e));
    }
    return gens;
}

}  // namespace

// Reduction to one integer system. Unknowns: the discrete source
// coordinates k (free) and s (torsion, as unconstrained integers), a slack
// m1 per target torsion coordinate and a slack m2 per target circle
// coordinate. The divisible source coordinates (u, w) never need to be
// searched: their reachable set is the rational span V of [cc cl; 0 ll],
// and with R an integer basis of the left kernel of that block,
//
//   residual in V + (Z^qt x 0)   <=>   R residual in R (Z^qt x 0),
//
// which is linear in (k, s, m2). Stacking the free equations, the lifted
// torsion congruences and the scaled R-condition gives a single system
// solved by one Smith reduction; a rational solve against the divisible
// block then produces the (u, w) witness exactly.
SolveResult solve(const Hom& h, const Element& target) {
    if (target.shape() != h.target())
        throw std::invalid_argument("solve: target element not in the codomain");
    const Shape& src = h.source();
    const Shape& tgt = h.target();
    const auto& blk = h.blocks();
    const std::size_t as = src.free_rank, ts = src.torsion_rank();
    const std::size_t at = tgt.free_rank, tt = tgt.torsion_rank(), qt = tgt.circle_rank,
                      bt = tgt.line_rank;

    // Divisible directions span a rational subtorus of the circle+line
    // coordinates; R kills exactly that span.
    RationalMatrix cstar = divisible_block(h);
    IntMatrix r_rows = fga::rational_left_kernel_rows(cstar);
    const std::size_t nr = r_rows.rows();

    // R * ([cf; lf] k + [ct; 0] s + (m2; 0)) == R * (rhs_c; rhs_l)
    RationalMatrix mixed_free = stack(blk.circle_free, blk.line_free);
    RationalMatrix mixed_tors =
        stack(blk.circle_torsion, RationalMatrix::zero(bt, ts));
    RationalMatrix r_rat = RationalMatrix::from_int(r_rows);
    RationalMatrix m3k = r_rat * mixed_free;
    RationalMatrix m3s = r_rat * mixed_tors;
    std::vector<Rational> rc = target.circle_part();
    rc.insert(rc.end(), target.line_part().begin(), target.line_part().end());
    std::vector<Rational> b3 = r_rat * rc;

    Int delta = 1;
    delta = lcm_int(delta, m3k.denominator_lcm());
    delta = lcm_int(delta, m3s.denominator_lcm());
    for (const Rational& v : b3) delta = lcm_int(delta, denominator(v));

    // Unknown layout: k (as) | s (ts) | m1 (tt) | m2 (qt)
    const std::size_t cols = as + ts + tt + qt;
    IntMatrix big(at + tt + nr, cols);
    std::vector<Int> rhs(at + tt + nr, Int(0));
    for (std::size_t i = 0; i < at; ++i) {
        for (std::size_t j = 0; j < as; ++j) big.at(i, j) = blk.free_free.at(i, j);
        rhs[i] = target.free_part()[i];
    }
    for (std::size_t i = 0; i < tt; ++i) {
        std::size_t row = at + i;
        for (std::size_t j = 0; j < as; ++j) big.at(row, j) = blk.torsion_free.at(i, j);
        for (std::size_t j = 0; j < ts; ++j) big.at(row, as + j) = blk.torsion_torsion.at(i, j);
        big.at(row, as + ts + i) = tgt.torsion.invariant_factors()[i];
        rhs[row] = target.torsion_part()[i];
    }
    for (std::size_t i = 0; i < nr; ++i) {
        std::size_t row = at + tt + i;
        for (std::size_t j = 0; j < as; ++j)
            big.at(row, j) = numerator(m3k.at(i, j) * Rational(delta));
        for (std::size_t j = 0; j < ts; ++j)
            big.at(row, as + j) = numerator(m3s.at(i, j) * Rational(delta));
        for (std::size_t j = 0; j < qt; ++j) big.at(row, as + ts + tt + j) = delta * r_rows.at(i, j);
        rhs[row] = numerator(b3[i] * Rational(delta));
    }

    auto lin = fga::solve_integer_linear(big, rhs);

    SolveResult result;
    result.kernel.divisible_nullity = fga::rational_nullity(cstar);

    // Kernel of the big system, projected to (k, s).
    IntMatrix bigker = fga::kernel_basis(big);
    std::vector<std::vector<Int>> raw;
    for (std::size_t j = 0; j < bigker.cols(); ++j) {
        std::vector<Int> g(as + ts);
        for (std::size_t i = 0; i < as + ts; ++i) g[i] = bigker.at(i, j);
        raw.push_back(std::move(g));
    }
    result.kernel.discrete_generators = canonical_discrete_generators(src, raw);

    if (!lin) {
        result.solvable = false;
        return result;
    }
    result.solvable = true;

    // Canonical representative: reduce the full solution vector against the
    // Hermite basis of the full kernel, so the discrete part is reproducible
    // and the slack stays consistent for the divisible witness below.
    std::vector<Int> x = lin->particular;
    {
        IntMatrix kerrows(bigker.cols(), cols);
        for (std::size_t j = 0; j < bigker.cols(); ++j)
            for (std::size_t i = 0; i < cols; ++i) kerrows.at(j, i) = bigker.at(i, j);
        fga::HermiteDecomposition hk = fga::hermite_normal_form(kerrows);
        for (std::size_t i = 0; i < hk.rank; ++i) {
            std::size_t piv = 0;
            while (piv < cols && hk.h.at(i, piv) == 0) ++piv;
            if (piv == cols) continue;
            Int q = floor_div(x[piv], hk.h.at(i, piv));
            if (q != 0)
                for (std::size_t j = 0; j < cols; ++j) x[j] -= q * hk.h.at(i, j);
        }
    }

    std::vector<Int> k(x.begin(), x.begin() + as);
    std::vector<Int> s(x.begin() + as, x.begin() + as + ts);
    std::vector<Int> m2(x.begin() + as + ts + tt, x.end());

    // Divisible witness: solve [cc cl; 0 ll] (u; w) == residual exactly.
    std::vector<Rational> residual(qt + bt, Rational(0));
    {
        std::vector<Rational> mfk = mixed_free * to_rational(k);
        std::vector<Rational> mts = mixed_tors * to_rational(s);
        for (std::size_t i = 0; i < qt + bt; ++i) residual[i] = rc[i] - mfk[i] - mts[i];
        for (std::size_t i = 0; i < qt; ++i) residual[i] -= Rational(m2[i]);
    }
    auto witness = fga::solve_rational(cstar, residual);
    assert(witness.has_value());
    if (!witness) {
        result.solvable = false;
        return result;
    }
    std::vector<Rational> u(witness->begin(), witness->begin() + src.circle_rank);
    std::vector<Rational> w(witness->begin() + src.circle_rank, witness->end());
    result.particular = Element(src, std::move(k), std::move(u), std::move(s), std::move(w));
    assert(h.apply(*result.particular) == target);
    return result;
}

bool in_discrete_kernel(const KernelDescription& k, const Shape& source, const Element& x) {
    if (x.shape() != source) throw std::invalid_argument("in_discrete_kernel: shape mismatch");
    for (const Rational& v : x.circle_part())
        if (v != 0) return false;
    for (const Rational& v : x.line_part())
        if (v != 0) return false;

    const std::size_t a = source.free_rank;
    const std::size_t t = source.torsion_rank();
    const std::size_t n = k.discrete_generators.size();
    IntMatrix gens(a + t, n + t);
    for (std::size_t j = 0; j < n; ++j) {
        const Element& g = k.discrete_generators[j];
        for (std::size_t i = 0; i < a; ++i) gens.at(i, j) = g.free_part()[i];
        for (std::size_t i = 0; i < t; ++i) gens.at(a + i, j) = g.torsion_part()[i];
    }
    for (std::size_t i = 0; i < t; ++i)
        gens.at(a + i, n + i) = source.torsion.invariant_factors()[i];

    std::vector<Int> target = x.free_part();
    target.insert(target.end(), x.torsion_part().begin(), x.torsion_part().end());
    return fga::solve_integer_linear(gens, target).has_value();
}

}  // namespace cybundle::ab
