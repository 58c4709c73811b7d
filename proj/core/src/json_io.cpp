#include "cybundle/json_io.hpp"

#include <limits>
#include <stdexcept>

namespace cybundle::io {

namespace {

const long long kSafeMax = 9007199254740991LL;  // 2^53 - 1, interoperable as a JSON number

json int_vector_to_json(const std::vector<Int>& v) {
    json a = json::array();
    for (const Int& x : v) a.push_back(int_to_json(x));
    return a;
}

std::vector<Int> int_vector_from_json(const json& j) {
    std::vector<Int> v;
    for (const auto& x : j) v.push_back(int_from_json(x));
    return v;
}

json rational_vector_to_json(const std::vector<Rational>& v) {
    json a = json::array();
    for (const Rational& x : v) a.push_back(rational_to_json(x));
    return a;
}

std::vector<Rational> rational_vector_from_json(const json& j) {
    std::vector<Rational> v;
    for (const auto& x : j) v.push_back(rational_from_json(x));
    return v;
}

}  // namespace

json int_to_json(const Int& v) {
    if (v <= kSafeMax && v >= -kSafeMax) return json(static_cast<long long>(v));
    return json(v.str());
}

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw std::invalid_argument("expected an integer (number or decimal string)");
}

json rational_to_json(const Rational& r) {
    return json::array({numerator(r).str(), denominator(r).str()});
}

Rational rational_from_json(const json& j) {
    if (j.is_array() && j.size() == 2)
        return Rational(int_from_json(j[0]), int_from_json(j[1]));
    if (j.is_number_integer() || j.is_string()) return Rational(int_from_json(j));
    throw std::invalid_argument("expected a rational as [\"num\",\"den\"]");
}

json to_json(const fga::IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(int_vector_to_json(m.row(i)));
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

fga::IntMatrix int_matrix_from_json(const json& j) {
    if (j.is_array()) {  // bare row-of-rows form
        std::size_t rows = j.size();
        std::size_t cols = rows == 0 ? 0 : j[0].size();
        fga::IntMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i) {
            if (j[i].size() != cols) throw std::invalid_argument("ragged matrix rows");
            for (std::size_t c = 0; c < cols; ++c) m.at(i, c) = int_from_json(j[i][c]);
        }
        return m;
    }
    std::size_t rows = j.at("rows").get<std::size_t>();
    std::size_t cols = j.at("cols").get<std::size_t>();
    fga::IntMatrix m(rows, cols);
    const json& entries = j.at("entries");
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t c = 0; c < cols; ++c) m.at(i, c) = int_from_json(entries[i][c]);
    return m;
}

json to_json(const fga::RationalMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rational_to_json(m.at(i, c)));
        rows.push_back(row);
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

fga::RationalMatrix rational_matrix_from_json(const json& j) {
    if (j.is_array()) {
        std::size_t rows = j.size();
        std::size_t cols = rows == 0 ? 0 : j[0].size();
        fga::RationalMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t c = 0; c < cols; ++c) m.at(i, c) = rational_from_json(j[i][c]);
        return m;
    }
    std::size_t rows = j.at("rows").get<std::size_t>();
    std::size_t cols = j.at("cols").get<std::size_t>();
    fga::RationalMatrix m(rows, cols);
    const json& entries = j.at("entries");
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t c = 0; c < cols; ++c) m.at(i, c) = rational_from_json(entries[i][c]);
    return m;
}

json to_json(const fga::FgaGroup& g) {
    return json{{"free_rank", g.free_rank()},
                {"invariant_factors", int_vector_to_json(g.invariant_factors())}};
}

fga::FgaGroup fga_group_from_json(const json& j) {
    if (j.is_array()) return fga::FgaGroup(0, int_vector_from_json(j));  // bare factor list
    return fga::FgaGroup(j.at("free_rank").get<std::size_t>(),
                         int_vector_from_json(j.at("invariant_factors")));
}

json to_json(const ab::Element& e) {
    json j;
    j["free"] = int_vector_to_json(e.free_part());
    j["torsion"] = int_vector_to_json(e.torsion_part());
    j["pic0"] = rational_vector_to_json(e.circle_part());
    if (!e.line_part().empty()) j["line"] = rational_vector_to_json(e.line_part());
    return j;
}

ab::Element element_from_json(const json& j, const ab::Shape& shape) {
    std::vector<Int> free(shape.free_rank, Int(0));
    std::vector<Rational> circle(shape.circle_rank, Rational(0));
    std::vector<Int> torsion(shape.torsion_rank(), Int(0));
    std::vector<Rational> line(shape.line_rank, Rational(0));
    if (j.contains("free")) free = int_vector_from_json(j["free"]);
    if (j.contains("torsion")) torsion = int_vector_from_json(j["torsion"]);
    if (j.contains("pic0")) circle = rational_vector_from_json(j["pic0"]);
    if (j.contains("circle")) circle = rational_vector_from_json(j["circle"]);
    if (j.contains("line")) line = rational_vector_from_json(j["line"]);
    return ab::Element(shape, std::move(free), std::move(circle), std::move(torsion),
                       std::move(line));
}

json to_json(const picard::ManifoldDescriptor& m) {
    json j;
    j["name"] = m.name;
    j["dim"] = m.dim;
    j["kahler"] = m.kahler;
    j["ns_free_rank"] = m.ns_free_rank;
    j["ns_torsion"] = int_vector_to_json(m.ns_torsion.invariant_factors());
    j["pic0_dim"] = m.pic0_dim;
    j["pi1_free_rank"] = m.pi1_ab.free_rank();
    j["pi1_torsion"] = int_vector_to_json(m.pi1_ab.invariant_factors());
    j["omega1c_dim"] = m.omega1c_dim;
    j["canonical"] = to_json(m.canonical_class);
    return j;
}

picard::ManifoldDescriptor manifold_from_json(const json& j) {
    picard::ManifoldDescriptor m;
    m.name = j.at("name").get<std::string>();
    m.dim = j.at("dim").get<std::size_t>();
    m.kahler = j.at("kahler").get<bool>();
    m.ns_free_rank = j.at("ns_free_rank").get<std::size_t>();
    m.ns_torsion = fga::FgaGroup(0, int_vector_from_json(j.at("ns_torsion")));
    m.pic0_dim = j.at("pic0_dim").get<std::size_t>();
    m.pi1_ab = fga::FgaGroup(j.at("pi1_free_rank").get<std::size_t>(),
                             int_vector_from_json(j.at("pi1_torsion")));
    m.omega1c_dim = j.at("omega1c_dim").get<std::size_t>();
    m.canonical_class = element_from_json(j.at("canonical"), m.pic_shape());
    return m;
}

json to_json(const toric::Fan& f) {
    json rays = json::array();
    for (const auto& r : f.rays) rays.push_back(int_vector_to_json(r));
    json cones = json::array();
    for (const auto& c : f.max_cones) cones.push_back(c);
    return json{{"dim", f.dim}, {"rays", rays}, {"max_cones", cones}};
}

toric::Fan fan_from_json(const json& j) {
    toric::Fan f;
    f.dim = j.at("dim").get<std::size_t>();
    for (const auto& r : j.at("rays")) f.rays.push_back(int_vector_from_json(r));
    for (const auto& c : j.at("max_cones"))
        f.max_cones.push_back(c.get<std::vector<std::size_t>>());
    return f;
}

json to_json(const rm::RmGroup& g) {
    return json{{"torus_rank", g.torus_rank},
                {"vector_rank", g.vector_rank},
                {"cousin_dim", g.cousin_dim}};
}

rm::RmGroup rm_group_from_json(const json& j) {
    rm::RmGroup g;
    g.torus_rank = j.at("torus_rank").get<std::size_t>();
    g.vector_rank = j.at("vector_rank").get<std::size_t>();
    g.cousin_dim = j.value("cousin_dim", std::size_t{0});
    return g;
}

json to_json(const bundles::StructureGroupDesc& g) {
    json j;
    j["torus_rank"] = g.torus_rank;
    j["vector_rank"] = g.vector_rank;
    j["cousin_dim"] = g.cousin_dim;
    if (g.pi1_factor) j["pi1"] = to_json(*g.pi1_factor);
    return j;
}

bundles::StructureGroupDesc group_desc_from_json(const json& j) {
    bundles::StructureGroupDesc g;
    g.torus_rank = j.value("torus_rank", std::size_t{0});
    g.vector_rank = j.value("vector_rank", std::size_t{0});
    g.cousin_dim = j.value("cousin_dim", std::size_t{0});
    if (j.contains("pi1")) g.pi1_factor = fga_group_from_json(j["pi1"]);
    return g;
}

json to_json(const bundles::CharacterMap& cm) {
    const auto& b = cm.map.blocks();
    json j;
    j["free_block"] = to_json(b.free_free);
    j["torsion_free_block"] = to_json(b.torsion_free);
    j["torsion_torsion_block"] = to_json(b.torsion_torsion);
    j["pic0_free_block"] = to_json(b.circle_free);
    j["pic0_circle_block"] = to_json(b.circle_circle);
    j["pic0_torsion_block"] = to_json(b.circle_torsion);
    j["pic0_line_block"] = to_json(b.circle_line);
    j["continuous_kernel_dim"] = cm.continuous_kernel_dim;
    return j;
}

json to_json(const bundles::PrincipalBundle& b) {
    json j;
    j["name"] = b.name;
    j["group"] = to_json(b.group);
    j["base"] = to_json(b.base);
    j["char_map"] = to_json(b.char_map);
    j["provenance"] = json{{"kind", b.provenance.kind}, {"detail", b.provenance.detail}};
    return j;
}

namespace {

picard::ManifoldDescriptor base_from_json(const json& j) {
    if (j.is_string()) {
        auto m = picard::catalog_lookup(j.get<std::string>());
        if (!m) throw std::invalid_argument("unknown catalog manifold: " + j.get<std::string>());
        return *m;
    }
    return manifold_from_json(j);
}

}  // namespace

bundles::PrincipalBundle bundle_from_json(const json& j) {
    picard::ManifoldDescriptor base = base_from_json(j.at("base"));
    if (j.contains("classes")) {  // whitney shorthand
        std::vector<picard::PicElement> classes;
        for (const auto& c : j.at("classes"))
            classes.push_back(element_from_json(c, base.pic_shape()));
        return bundles::whitney_sum_bundle(base, classes, j.value("name", "whitney"));
    }
    bundles::StructureGroupDesc group = group_desc_from_json(j.at("group"));
    ab::Shape src = group.character_shape();
    ab::Shape tgt = base.pic_shape();
    const json& cm = j.at("char_map");
    auto imat = [&](const char* key, std::size_t rows, std::size_t cols) {
        if (!cm.contains(key)) return fga::IntMatrix::zero(rows, cols);
        fga::IntMatrix m = int_matrix_from_json(cm[key]);
        if (m.rows() != rows || m.cols() != cols)
            throw std::invalid_argument(std::string("char_map block ") + key + " has wrong shape");
        return m;
    };
    auto rmat = [&](const char* key, std::size_t rows, std::size_t cols) {
        if (!cm.contains(key)) return fga::RationalMatrix::zero(rows, cols);
        fga::RationalMatrix m = rational_matrix_from_json(cm[key]);
        if (m.rows() != rows || m.cols() != cols)
            throw std::invalid_argument(std::string("char_map block ") + key + " has wrong shape");
        return m;
    };
    ab::Hom::Blocks blocks{
        imat("free_block", tgt.free_rank, src.free_rank),
        rmat("pic0_free_block", tgt.circle_rank, src.free_rank),
        imat("torsion_free_block", tgt.torsion_rank(), src.free_rank),
        fga::RationalMatrix::zero(tgt.line_rank, src.free_rank),
        imat("pic0_circle_block", tgt.circle_rank, src.circle_rank),
        rmat("pic0_torsion_block", tgt.circle_rank, src.torsion_rank()),
        imat("torsion_torsion_block", tgt.torsion_rank(), src.torsion_rank()),
        rmat("pic0_line_block", tgt.circle_rank, src.line_rank),
        fga::RationalMatrix::zero(tgt.line_rank, src.line_rank)};
    bundles::CharacterMap map = bundles::make_character_map(
        group, base, ab::Hom(src, tgt, std::move(blocks)),
        cm.value("continuous_kernel_dim", std::size_t{0}));
    bundles::Provenance prov{"custom", ""};
    if (j.contains("provenance")) {
        prov.kind = j["provenance"].value("kind", "custom");
        prov.detail = j["provenance"].value("detail", "");
    }
    return bundles::PrincipalBundle{j.value("name", "bundle"), group, base, std::move(map), prov};
}

json to_json(const ab::KernelDescription& k) {
    json gens = json::array();
    for (const auto& g : k.discrete_generators) gens.push_back(to_json(g));
    return json{{"discrete_generators", gens}, {"divisible_nullity", k.divisible_nullity}};
}

json to_json(const bundles::CyStructureSet& cy) {
    json j;
    j["solvable"] = cy.solvable;
    if (cy.particular) j["particular"] = to_json(*cy.particular);
    j["kernel"] = to_json(cy.kernel);
    j["continuous_kernel_dim"] = cy.continuous_kernel_dim;
    return j;
}

json to_json(const bundles::RigidityResult& r) {
    json j;
    switch (r.status) {
        case bundles::RigidityStatus::found: j["status"] = "found"; break;
        case bundles::RigidityStatus::absent: j["status"] = "absent"; break;
        case bundles::RigidityStatus::undecided: j["status"] = "undecided"; break;
        case bundles::RigidityStatus::unsupported: j["status"] = "unsupported"; break;
    }
    if (r.xi) j["xi"] = to_json(*r.xi);
    if (r.xi_dual) j["xi_dual"] = to_json(*r.xi_dual);
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

json to_json(const bundles::SurjectivityCertificate& c) {
    auto wlist = [](const std::vector<bundles::PreimageWitness>& v) {
        json a = json::array();
        for (const auto& w : v)
            a.push_back(json{{"target", to_json(w.target)},
                             {"preimage", to_json(w.preimage)},
                             {"verified", w.verified}});
        return a;
    };
    return json{{"ns_free_generators", wlist(c.ns_free_generators)},
                {"ns_torsion_generators", wlist(c.ns_torsion_generators)},
                {"pic0_samples", wlist(c.pic0_samples)},
                {"continuous_kernel_dim", c.continuous_kernel_dim},
                {"all_verified", c.all_verified()}};
}

json to_json(const toric::FanReport& r) {
    return json{{"well_formed", r.well_formed},
                {"simplicial_supported", r.simplicial_supported},
                {"smooth", r.smooth},
                {"complete", r.complete},
                {"failures", r.failures}};
}

json to_json(const toric::CoxData& c) {
    return json{{"class_group", to_json(c.class_group)},
                {"quotient_matrix", to_json(c.quotient_map.matrix())},
                {"canonical_class",
                 json{{"free", int_vector_to_json(c.canonical_class.free_part())},
                      {"torsion", int_vector_to_json(c.canonical_class.torsion_part())}}},
                {"h_dim", c.h_dim}};
}

json to_json(const toric::AudinCoxCertificate& c) {
    return json{{"lambda_surjective", c.lambda_surjective},
                {"kernel_is_divisor_relations", c.kernel_is_divisor_relations},
                {"canonical_in_image", c.canonical_in_image},
                {"rigidity_identity", c.rigidity_identity},
                {"all_pass", c.all_pass()}};
}

json to_json(const rm::SufficiencyVerdict& v) {
    json j;
    switch (v.status) {
        case rm::Sufficiency::sufficient: j["status"] = "sufficient"; break;
        case rm::Sufficiency::insufficient: j["status"] = "insufficient"; break;
        case rm::Sufficiency::unknown: j["status"] = "unknown"; break;
    }
    j["reason"] = v.reason;
    return j;
}

json to_json(const bundles::Rank1Roots& r) {
    json j;
    j["all_integers"] = r.all_integers;
    json roots = json::array();
    for (const auto& root : r.roots)
        roots.push_back(json{{"k", int_to_json(root.k)},
                             {"root", int_to_json(root.root_coordinate)}});
    j["roots"] = roots;
    return j;
}

}  // namespace cybundle::io
