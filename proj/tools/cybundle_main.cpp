// cybundle: exact calculator for character maps of principal bundles.
//
// Subcommands: catalog, validate, obstruct, cy-structures, rigidity,
// construct-surjective, toric-cox, rm-check, roots. Exit codes: 0 success,
// 1 domain error (structured JSON on stderr), 2 usage error.

#include "cybundle/json_io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace cybundle;
using io::json;

namespace {

struct DomainError : std::runtime_error {
    std::string type;
    DomainError(std::string t, const std::string& message)
        : std::runtime_error(message), type(std::move(t)) {}
};

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("io", "cannot open file: " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw DomainError("json-parse", path + ": " + e.what());
    }
}

picard::ManifoldDescriptor resolve_manifold(const std::string& spec) {
    if (auto m = picard::catalog_lookup(spec)) return *m;
    if (spec.find('.') == std::string::npos && spec.find('/') == std::string::npos)
        throw DomainError("lookup", "unknown catalog manifold: " + spec);
    return io::manifold_from_json(load_json_file(spec));
}

bundles::PrincipalBundle resolve_bundle(const std::string& path,
                                        const std::optional<picard::ManifoldDescriptor>& base) {
    json j = load_json_file(path);
    if (!j.contains("base")) {
        if (!base)
            throw DomainError("bundle",
                              path + " has no base; pass --manifold to supply one");
        j["base"] = io::to_json(*base);
    }
    bundles::PrincipalBundle b = io::bundle_from_json(j);
    if (base && b.base != *base)
        throw DomainError("bundle", "bundle base disagrees with --manifold " + base->name);
    return b;
}

struct Output {
    bool as_json = false;
    std::ostringstream text;

    void emit(const json& j) {
        if (as_json)
            std::cout << j.dump(2) << std::endl;
        else
            std::cout << text.str();
    }
};

std::string show(const ab::Element& e) { return e.to_string(); }

std::size_t rigidity_radius(std::size_t flag_value, bool flag_set) {
    if (flag_set) return flag_value;
    if (const char* env = std::getenv("CYBUNDLE_SEARCH_RADIUS")) {
        std::istringstream is(env);
        std::size_t v = 0;
        if (is >> v && v > 0) return v;
    }
    return 10;
}

int run(int argc, char** argv) {
    CLI::App app{"exact character-map calculator for principal bundles"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    std::string manifold_spec, bundle_path, other_path, fan_path, group_path, output_path;
    std::size_t radius = 10;
    bool do_build = false;

    auto subcommand = [&app](const char* name, const char* desc) {
        CLI::App* s = app.add_subcommand(name, desc);
        s->fallthrough();  // let --format after the subcommand reach the parent
        return s;
    };

    CLI::App* cat = subcommand("catalog", "list the built-in manifold descriptors");

    CLI::App* val = subcommand("validate", "check a manifold descriptor's invariants");
    val->add_option("--manifold", manifold_spec, "catalog name or JSON file")->required();

    CLI::App* obs = subcommand("obstruct", "decide whether a bundle admits a CY structure");
    obs->add_option("--manifold", manifold_spec, "base manifold (optional if the file has one)");
    obs->add_option("--bundle", bundle_path, "bundle JSON file")->required();

    CLI::App* cys = subcommand("cy-structures",
                               "classify all CY structures (particular + kernel coset)");
    cys->add_option("--manifold", manifold_spec, "base manifold (optional if the file has one)");
    cys->add_option("--bundle", bundle_path, "bundle JSON file")->required();

    CLI::App* rig = subcommand("rigidity",
                               "solve lambda_N . xi = lambda_M for an automorphism xi");
    rig->add_option("--manifold", manifold_spec, "base manifold (optional if the files have one)");
    rig->add_option("--bundle", bundle_path, "bundle M JSON file")->required();
    rig->add_option("--other", other_path, "bundle N JSON file")->required();
    CLI::Option* radius_opt =
        rig->add_option("--radius", radius, "kernel coset search radius (default 10, or "
                                            "CYBUNDLE_SEARCH_RADIUS)");

    CLI::App* surj = subcommand("construct-surjective",
                                "build the CY bundle with surjective character map");
    surj->add_option("--manifold", manifold_spec, "Kahler base manifold")->required();
    surj->add_option("--output", output_path, "write the bundle JSON here");

    CLI::App* cox = subcommand("toric-cox",
                               "class group, canonical class and quotient bundle of a fan");
    cox->add_option("--fan", fan_path, "fan JSON file")->required();
    cox->add_option("--manifold", manifold_spec, "target descriptor (default: from the fan)");

    CLI::App* rmc = subcommand("rm-check",
                               "sufficiency of an abelian group for a surjective CY bundle");
    rmc->add_option("--group", group_path, "group JSON file {torus_rank, vector_rank, cousin_dim}")
        ->required();
    rmc->add_option("--manifold", manifold_spec, "Kahler base manifold")->required();
    rmc->add_flag("--build", do_build, "also build the bundle when sufficient");

    CLI::App* roots = subcommand("roots", "integer roots of the canonical class (rank 1)");
    roots->add_option("--manifold", manifold_spec, "base manifold")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    Output out;
    out.as_json = format == "json";

    if (cat->parsed()) {
        json list = json::array();
        for (const auto& m : picard::catalog()) {
            list.push_back(io::to_json(m));
            out.text << m.name << ": dim " << m.dim << (m.kahler ? ", Kahler" : "")
                     << ", NS rank " << m.ns_free_rank;
            if (!m.ns_torsion.is_trivial())
                out.text << " + torsion " << m.ns_torsion.to_string();
            out.text << ", Pic0 dim " << m.pic0_dim << ", K = "
                     << show(m.canonical_class) << "\n";
        }
        out.emit(json{{"catalog", list}});
        return 0;
    }

    if (val->parsed()) {
        picard::ManifoldDescriptor m = resolve_manifold(manifold_spec);
        auto violations = picard::validate(m);
        out.text << m.name << ": " << (violations.empty() ? "valid" : "INVALID") << "\n";
        for (const auto& v : violations) out.text << "  violation: " << v << "\n";
        out.emit(json{{"name", m.name}, {"valid", violations.empty()},
                      {"violations", violations}});
        return violations.empty() ? 0 : 1;
    }

    if (obs->parsed() || cys->parsed()) {
        std::optional<picard::ManifoldDescriptor> base;
        if (!manifold_spec.empty()) base = resolve_manifold(manifold_spec);
        bundles::PrincipalBundle b = resolve_bundle(bundle_path, base);
        bundles::CyStructureSet cy = bundles::obstruction_check(b);
        out.text << "bundle " << b.name << " over " << b.base.name << " (group "
                 << b.group.to_string() << ")\n";
        out.text << "CY structure exists: " << (cy.solvable ? "yes" : "no") << "\n";
        if (cy.solvable && cys->parsed()) {
            out.text << "particular character: " << show(*cy.particular) << "\n";
            if (cy.kernel.discrete_generators.empty())
                out.text << "kernel: trivial on the discrete part\n";
            for (const auto& g : cy.kernel.discrete_generators)
                out.text << "kernel generator: " << show(g) << "\n";
            out.text << "continuous kernel dimension: " << cy.continuous_kernel_dim << "\n";
            out.text << "solution set: particular + kernel\n";
        } else if (cy.solvable) {
            out.text << "adjunction character: "
                     << show(bundles::adjunction_character(b, cy)) << "\n";
        }
        out.emit(io::to_json(cy));
        return 0;
    }

    if (rig->parsed()) {
        std::optional<picard::ManifoldDescriptor> base;
        if (!manifold_spec.empty()) base = resolve_manifold(manifold_spec);
        bundles::PrincipalBundle m = resolve_bundle(bundle_path, base);
        bundles::PrincipalBundle n = resolve_bundle(other_path, base);
        std::size_t r = rigidity_radius(radius, radius_opt->count() > 0);
        bundles::RigidityResult res = bundles::rigidity_solve(m, n, r);
        switch (res.status) {
            case bundles::RigidityStatus::found: out.text << "status: found\n"; break;
            case bundles::RigidityStatus::absent: out.text << "status: absent\n"; break;
            case bundles::RigidityStatus::undecided: out.text << "status: undecided\n"; break;
            case bundles::RigidityStatus::unsupported: out.text << "status: unsupported\n"; break;
        }
        if (res.xi) {
            out.text << "xi (character lattice):";
            for (std::size_t i = 0; i < res.xi->rows(); ++i) {
                out.text << " [";
                for (std::size_t j = 0; j < res.xi->cols(); ++j)
                    out.text << (j ? " " : "") << res.xi->at(i, j);
                out.text << "]";
            }
            out.text << "\n";
        }
        if (!res.note.empty()) out.text << "note: " << res.note << "\n";
        out.emit(io::to_json(res));
        return res.status == bundles::RigidityStatus::found ||
                       res.status == bundles::RigidityStatus::absent
                   ? 0
                   : 1;
    }

    if (surj->parsed()) {
        picard::ManifoldDescriptor m = resolve_manifold(manifold_spec);
        bundles::PrincipalBundle b = bundles::construct_surjective_bundle(m);
        bundles::SurjectivityCertificate cert = bundles::certify_surjectivity(b);
        out.text << "bundle " << b.name << " with group " << b.group.to_string() << "\n";
        out.text << "surjectivity certificate: "
                 << (cert.all_verified() ? "all preimages verified" : "FAILED") << "\n";
        out.text << "continuous kernel dimension: " << cert.continuous_kernel_dim << "\n";
        json j{{"bundle", io::to_json(b)}, {"certificate", io::to_json(cert)}};
        if (!output_path.empty()) {
            std::ofstream fout(output_path);
            fout << io::to_json(b).dump(2) << std::endl;
            out.text << "bundle written to " << output_path << "\n";
        }
        out.emit(j);
        return cert.all_verified() ? 0 : 1;
    }

    if (cox->parsed()) {
        toric::Fan fan = io::fan_from_json(load_json_file(fan_path));
        toric::FanReport rep = toric::check_smooth_complete(fan);
        out.text << "fan: " << fan.ray_count() << " rays in dimension " << fan.dim << "\n";
        out.text << "smooth: " << (rep.smooth ? "yes" : "no") << ", complete: "
                 << (rep.complete ? "yes" : "no") << "\n";
        for (const auto& f : rep.failures) out.text << "  " << f << "\n";
        if (!rep.accepted()) {
            out.emit(json{{"report", io::to_json(rep)}});
            return 1;
        }
        picard::ManifoldDescriptor target = manifold_spec.empty()
                                                ? toric::descriptor_from_fan(fan, "toric")
                                                : resolve_manifold(manifold_spec);
        toric::AudinCoxResult r = toric::audin_cox_bundle(fan, target);
        out.text << "class group: " << r.cox.class_group.to_string() << "\n";
        out.text << "K = " << r.cox.canonical_class.to_string() << "\n";
        out.text << "quotient subgroup dimension (t - d): " << r.cox.h_dim << "\n";
        out.text << "certificate: " << (r.certificate.all_pass() ? "all-pass" : "FAILED") << "\n";
        out.emit(json{{"report", io::to_json(rep)},
                      {"cox", io::to_json(r.cox)},
                      {"certificate", io::to_json(r.certificate)},
                      {"bundle", io::to_json(r.bundle)}});
        return r.certificate.all_pass() ? 0 : 1;
    }

    if (rmc->parsed()) {
        rm::RmGroup g = io::rm_group_from_json(load_json_file(group_path));
        picard::ManifoldDescriptor m = resolve_manifold(manifold_spec);
        rm::SufficiencyVerdict v = rm::sufficiency_check(g, m);
        const char* status = v.status == rm::Sufficiency::sufficient ? "sufficient"
                             : v.status == rm::Sufficiency::insufficient ? "insufficient"
                                                                         : "unknown";
        out.text << "group (C*)^" << g.torus_rank << " x C^" << g.vector_rank;
        if (g.cousin_dim > 0) out.text << " x G0(dim " << g.cousin_dim << ")";
        out.text << " over " << m.name << ": " << status << "\n";
        out.text << "reason: " << v.reason << "\n";
        json j{{"verdict", io::to_json(v)}};
        if (do_build && v.status == rm::Sufficiency::sufficient) {
            bundles::PrincipalBundle b = rm::build_abelian_cy_bundle(g, m);
            bundles::SurjectivityCertificate cert = bundles::certify_surjectivity(b);
            out.text << "bundle built; certificate "
                     << (cert.all_verified() ? "all preimages verified" : "FAILED") << "\n";
            j["bundle"] = io::to_json(b);
            j["certificate"] = io::to_json(cert);
        }
        out.emit(j);
        return 0;
    }

    if (roots->parsed()) {
        picard::ManifoldDescriptor m = resolve_manifold(manifold_spec);
        bundles::Rank1Roots r = bundles::rank1_roots(m);
        if (r.all_integers) {
            out.text << m.name << ": K = 0, every integer k works (trivial root class)\n";
        } else {
            out.text << "roots of K over " << m.name << " (K = "
                     << m.canonical_class.free_part()[0] << "): k in {";
            for (std::size_t i = 0; i < r.roots.size(); ++i)
                out.text << (i ? ", " : "") << r.roots[i].k;
            out.text << "}\n";
            for (const auto& root : r.roots)
                out.text << "  k = " << root.k << ": root class L = " << root.root_coordinate
                         << "\n";
        }
        out.emit(io::to_json(r));
        return 0;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const DomainError& e) {
        json err{{"error", {{"type", e.type}, {"message", e.what()}}}};
        std::cerr << err.dump() << std::endl;
        return 1;
    } catch (const std::exception& e) {
        json err{{"error", {{"type", "domain"}, {"message", e.what()}}}};
        std::cerr << err.dump() << std::endl;
        return 1;
    }
}
