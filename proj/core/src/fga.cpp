#include "cybundle/fga.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cybundle::fga {

FgaGroup::FgaGroup(std::size_t free_rank, std::vector<Int> invariant_factors)
    : free_rank_(free_rank), invariant_factors_(std::move(invariant_factors)) {
    for (std::size_t i = 0; i < invariant_factors_.size(); ++i) {
        if (invariant_factors_[i] <= 1)
            throw std::invalid_argument("FgaGroup: invariant factors must be > 1");
        if (i > 0 && invariant_factors_[i] % invariant_factors_[i - 1] != 0)
            throw std::invalid_argument("FgaGroup: invariant factors must form a divisor chain");
    }
}

FgaGroup FgaGroup::cyclic(const Int& n) {
    if (n == 0) return free_group(1);
    if (n == 1 || n == -1) return trivial();
    return FgaGroup(0, {abs_int(n)});
}

Int FgaGroup::torsion_order() const {
    Int o = 1;
    for (const Int& f : invariant_factors_) o *= f;
    return o;
}

IntMatrix FgaGroup::relation_columns() const {
    IntMatrix r(generator_count(), torsion_rank());
    for (std::size_t j = 0; j < torsion_rank(); ++j)
        r.at(free_rank_ + j, j) = invariant_factors_[j];
    return r;
}

std::string FgaGroup::to_string() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank_ > 0) {
        os << "Z";
        if (free_rank_ > 1) os << "^" << free_rank_;
        first = false;
    }
    for (const Int& f : invariant_factors_) {
        if (!first) os << " + ";
        os << "Z/" << f;
        first = false;
    }
    return os.str();
}

FgaElement::FgaElement(FgaGroup group, std::vector<Int> free_part, std::vector<Int> torsion_part)
    : group_(std::move(group)), free_part_(std::move(free_part)),
      torsion_part_(std::move(torsion_part)) {
    if (free_part_.size() != group_.free_rank() ||
        torsion_part_.size() != group_.torsion_rank())
        throw std::invalid_argument("FgaElement: coordinate lengths do not match the group");
    for (std::size_t i = 0; i < torsion_part_.size(); ++i)
        torsion_part_[i] = mod_floor(torsion_part_[i], group_.invariant_factors()[i]);
}

FgaElement FgaElement::zero(const FgaGroup& g) {
    return FgaElement(g, std::vector<Int>(g.free_rank(), Int(0)),
                      std::vector<Int>(g.torsion_rank(), Int(0)));
}

FgaElement FgaElement::generator(const FgaGroup& g, std::size_t index) {
    if (index >= g.generator_count()) throw std::invalid_argument("FgaElement: generator index");
    std::vector<Int> coords(g.generator_count(), Int(0));
    coords[index] = 1;
    return from_coordinates(g, coords);
}

FgaElement FgaElement::from_coordinates(const FgaGroup& g, const std::vector<Int>& coords) {
    if (coords.size() != g.generator_count())
        throw std::invalid_argument("FgaElement: coordinate count mismatch");
    std::vector<Int> fp(coords.begin(), coords.begin() + g.free_rank());
    std::vector<Int> tp(coords.begin() + g.free_rank(), coords.end());
    return FgaElement(g, std::move(fp), std::move(tp));
}

std::vector<Int> FgaElement::coordinates() const {
    std::vector<Int> c = free_part_;
    c.insert(c.end(), torsion_part_.begin(), torsion_part_.end());
    return c;
}

bool FgaElement::is_zero() const {
    auto zero = [](const Int& v) { return v == 0; };
    return std::all_of(free_part_.begin(), free_part_.end(), zero) &&
           std::all_of(torsion_part_.begin(), torsion_part_.end(), zero);
}

FgaElement FgaElement::operator+(const FgaElement& rhs) const {
    if (group_ != rhs.group_) throw std::invalid_argument("FgaElement: group mismatch in sum");
    std::vector<Int> fp = free_part_;
    for (std::size_t i = 0; i < fp.size(); ++i) fp[i] += rhs.free_part_[i];
    std::vector<Int> tp = torsion_part_;
    for (std::size_t i = 0; i < tp.size(); ++i) tp[i] += rhs.torsion_part_[i];
    return FgaElement(group_, std::move(fp), std::move(tp));
}

FgaElement FgaElement::operator-() const {
    std::vector<Int> fp = free_part_;
    for (auto& v : fp) v = -v;
    std::vector<Int> tp = torsion_part_;
    for (auto& v : tp) v = -v;
    return FgaElement(group_, std::move(fp), std::move(tp));
}

FgaElement FgaElement::operator*(const Int& k) const {
    std::vector<Int> fp = free_part_;
    for (auto& v : fp) v *= k;
    std::vector<Int> tp = torsion_part_;
    for (auto& v : tp) v *= k;
    return FgaElement(group_, std::move(fp), std::move(tp));
}

Int FgaElement::order() const {
    for (const Int& v : free_part_)
        if (v != 0) return 0;
    Int o = 1;
    for (std::size_t i = 0; i < torsion_part_.size(); ++i) {
        if (torsion_part_[i] == 0) continue;
        const Int& f = group_.invariant_factors()[i];
        Int oi = f / gcd_int(torsion_part_[i], f);
        o = lcm_int(o, oi);
    }
    return o;
}

std::string FgaElement::to_string() const {
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (const Int& v : free_part_) {
        if (!first) os << ",";
        os << v;
        first = false;
    }
    for (std::size_t i = 0; i < torsion_part_.size(); ++i) {
        if (!first) os << ",";
        os << torsion_part_[i] << " mod " << group_.invariant_factors()[i];
        first = false;
    }
    os << ")";
    return os.str();
}

FgaHom::FgaHom(FgaGroup source, FgaGroup target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
    if (matrix_.rows() != target_.generator_count() ||
        matrix_.cols() != source_.generator_count())
        throw std::invalid_argument("FgaHom: matrix shape does not match the groups");
    // Normalize rows that land in torsion coordinates.
    for (std::size_t i = 0; i < target_.torsion_rank(); ++i) {
        std::size_t row = target_.free_rank() + i;
        for (std::size_t j = 0; j < matrix_.cols(); ++j)
            matrix_.at(row, j) = mod_floor(matrix_.at(row, j), target_.invariant_factors()[i]);
    }
    // Well-definedness: f(n_j e_j) == 0 for each source torsion generator.
    for (std::size_t j = 0; j < source_.torsion_rank(); ++j) {
        const Int& n = source_.invariant_factors()[j];
        std::size_t col = source_.free_rank() + j;
        for (std::size_t i = 0; i < target_.free_rank(); ++i)
            if (matrix_.at(i, col) != 0)
                throw std::invalid_argument(
                    "FgaHom: torsion generator mapped to an infinite-order element");
        for (std::size_t i = 0; i < target_.torsion_rank(); ++i) {
            std::size_t row = target_.free_rank() + i;
            if ((n * matrix_.at(row, col)) % target_.invariant_factors()[i] != 0)
                throw std::invalid_argument(
                    "FgaHom: image order does not divide the generator's invariant factor");
        }
    }
}

FgaHom FgaHom::identity(const FgaGroup& g) {
    return FgaHom(g, g, IntMatrix::identity(g.generator_count()));
}

FgaHom FgaHom::zero(const FgaGroup& source, const FgaGroup& target) {
    return FgaHom(source, target,
                  IntMatrix::zero(target.generator_count(), source.generator_count()));
}

FgaHom FgaHom::scalar(const FgaGroup& g, const Int& k) {
    if (g.generator_count() != 1) throw std::invalid_argument("FgaHom::scalar: rank-1 groups only");
    IntMatrix m(1, 1);
    m.at(0, 0) = k;
    return FgaHom(g, g, std::move(m));
}

FgaElement FgaHom::apply(const FgaElement& x) const {
    if (x.group() != source_) throw std::invalid_argument("FgaHom: element not in the source group");
    return FgaElement::from_coordinates(target_, matrix_ * x.coordinates());
}

FgaElement FgaHom::generator_image(std::size_t j) const {
    return FgaElement::from_coordinates(target_, matrix_.column(j));
}

std::string FgaHom::to_string() const {
    return source_.to_string() + " -> " + target_.to_string();
}

FgaHom compose(const FgaHom& g, const FgaHom& f) {
    if (f.target() != g.source()) throw std::invalid_argument("FgaHom: composition mismatch");
    return FgaHom(f.source(), g.target(), g.matrix() * f.matrix());
}

FgaGroup lattice_quotient(const IntMatrix& generators, const IntMatrix& relations) {
    if (generators.rows() != relations.rows())
        throw std::invalid_argument("lattice_quotient: ambient dimension mismatch");
    IntMatrix basis = column_lattice_basis(generators);
    const std::size_t rank = basis.cols();
    // Relations in basis coordinates; membership is part of the contract.
    IntMatrix coords(rank, relations.cols());
    for (std::size_t j = 0; j < relations.cols(); ++j) {
        auto sol = solve_integer_linear(basis, relations.column(j));
        if (!sol) throw std::invalid_argument("lattice_quotient: relation outside the lattice");
        for (std::size_t i = 0; i < rank; ++i) coords.at(i, j) = sol->particular[i];
    }
    SmithDecomposition s = smith_normal_form(coords);
    return FgaGroup(rank - s.rank(), s.nontrivial_invariants());
}

namespace {

// Columns of f together with the target relations: the sublattice of the
// target's free presentation that presents im(f) + relations.
IntMatrix image_with_relations(const FgaHom& f) {
    return f.matrix().augmented(f.target().relation_columns());
}

}  // namespace

FgaGroup hom_image(const FgaHom& f) {
    return lattice_quotient(image_with_relations(f), f.target().relation_columns());
}

FgaGroup hom_cokernel(const FgaHom& f) {
    const std::size_t n = f.target().generator_count();
    SmithDecomposition s = smith_normal_form(image_with_relations(f));
    return FgaGroup(n - s.rank(), s.nontrivial_invariants());
}

FgaGroup hom_kernel(const FgaHom& f) {
    // x in ker(f) iff F x lies in the relation lattice of the target:
    // [F | R_t] (x; t) == 0, projected to the x block.
    IntMatrix lifted = f.matrix().augmented(-f.target().relation_columns());
    IntMatrix ker = kernel_basis(lifted);
    const std::size_t n = f.source().generator_count();
    IntMatrix proj = ker.submatrix(0, 0, n, ker.cols());
    IntMatrix gens = proj.augmented(f.source().relation_columns());
    return lattice_quotient(gens, f.source().relation_columns());
}

std::optional<FgaElement> preimage_element(const FgaHom& f, const FgaElement& y) {
    if (y.group() != f.target())
        throw std::invalid_argument("preimage_element: element not in the target group");
    IntMatrix lifted = f.matrix().augmented(f.target().relation_columns());
    auto sol = solve_integer_linear(lifted, y.coordinates());
    if (!sol) return std::nullopt;
    std::vector<Int> x(sol->particular.begin(),
                       sol->particular.begin() + f.source().generator_count());
    return FgaElement::from_coordinates(f.source(), x);
}

bool is_automorphism(const FgaHom& f) {
    if (f.source() != f.target()) return false;
    if (f.source().is_free()) {
        if (f.source().free_rank() == 0) return true;
        return f.matrix().is_unimodular();
    }
    return hom_kernel(f).is_trivial() && hom_cokernel(f).is_trivial();
}

FgaHom invert_automorphism(const FgaHom& f) {
    if (!is_automorphism(f))
        throw std::domain_error("invert_automorphism: homomorphism is not an automorphism");
    const FgaGroup& g = f.source();
    IntMatrix inv(g.generator_count(), g.generator_count());
    for (std::size_t j = 0; j < g.generator_count(); ++j) {
        auto x = preimage_element(f, FgaElement::generator(g, j));
        if (!x) throw std::domain_error("invert_automorphism: generator has no preimage");
        std::vector<Int> coords = x->coordinates();
        for (std::size_t i = 0; i < coords.size(); ++i) inv.at(i, j) = coords[i];
    }
    return FgaHom(g, g, std::move(inv));
}

}  // namespace cybundle::fga
