#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "homhopf/catalog.hpp"
#include "homhopf/errors.hpp"
#include "homhopf/io.hpp"

using namespace homhopf;

namespace {

// Exit taxonomy: 0 = pass / nonempty / certified, 1 = the math says no,
// 2 = broken input, 3 = theorem hypotheses unmet.
constexpr int kExitPass = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;
constexpr int kExitHypotheses = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& bytes) {
    if (path.empty() || path == "-") {
        std::cout << bytes;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path);
    out << bytes;
}

void print_report(const AxiomReport& report, bool as_json) {
    std::cout << (as_json ? report_to_json(report) : report_to_text(report) + "\n");
}

struct CommonOpts {
    bool json = false;
    std::string out;
};

int cmd_check(const std::string& file, const std::string& convention, bool as_json) {
    StructureFile s = parse_structure_file(read_file(file));
    Convention conv = s.convention;
    if (convention == "categorical") conv = Convention::categorical;
    if (convention == "printed") conv = Convention::printed;

    AxiomReport report = check_hom_hopf(s.hopf, conv);
    if (s.coaction) {
        ComoduleAlgebra a = s.comodule_algebra();
        report.merge(check_hom_comodule(a.comodule_part(), s.hopf.coalgebra()));
        AxiomReport full = check_comodule_algebra(a, s.hopf, conv);
        for (const auto& v : full.violations)
            if (v.axiom == "coaction-multiplicative" || v.axiom == "coaction-unital")
                report.violations.push_back(v);
    }
    print_report(report, as_json);
    return report.pass() ? kExitPass : kExitNegative;
}

int cmd_builtin(const std::string& name, const std::string& field_str, const CommonOpts& opts) {
    FieldSpec field =
        field_str.empty() ? FieldSpec::rationals() : FieldSpec::parse(field_str);
    Bundle b = builtin(name, field);
    StructureFile s;
    s.hopf = b.hopf;
    s.coaction = b.algebra.coaction;
    write_output(opts.out, serialize_structure_file(s));
    return kExitPass;
}

int cmd_twist(const std::string& file, const std::string& aut_file, bool bundle,
              const CommonOpts& opts) {
    StructureFile s = parse_structure_file(read_file(file));
    Matrix aut = parse_matrix_file(read_file(aut_file), s.hopf.field());
    ClassicalHopfSpec spec{file, s.hopf};
    StructureFile out;
    out.hopf = yau_twist(spec, aut);
    if (bundle) out.coaction = out.hopf.comult;
    write_output(opts.out, serialize_structure_file(out));
    return kExitPass;
}

int cmd_integral(const std::string& file, const std::string& verify, const CommonOpts& opts) {
    StructureFile s = parse_structure_file(read_file(file));
    ComoduleAlgebra a = s.comodule_algebra();
    if (!verify.empty()) {
        Matrix phi = parse_integral(read_file(verify), s.hopf.field());
        AxiomReport report = check_total_integral(phi, a, s.hopf);
        print_report(report, opts.json);
        return report.pass() ? kExitPass : kExitNegative;
    }
    AffineSolutionSet sol = solve_total_integral(a, s.hopf);
    if (opts.json || !opts.out.empty())
        write_output(opts.out, serialize_integral_solutions(sol, a.dim(), s.hopf.dim));
    if (!opts.json)
        std::cout << (sol.consistent()
                          ? "total integrals exist; affine dimension " +
                                std::to_string(sol.nullspace.size())
                          : std::string("none"))
                  << "\n";
    return sol.consistent() ? kExitPass : kExitNegative;
}

int cmd_normalized(const std::string& file, const std::string& verify,
                   const std::string& from_integral, const CommonOpts& opts) {
    StructureFile s = parse_structure_file(read_file(file));
    ComoduleAlgebra a = s.comodule_algebra();
    if (!verify.empty()) {
        Tensor3 theta = parse_normalized(read_file(verify), s.hopf.field());
        AxiomReport report = check_normalized_integral(theta, a, s.hopf);
        print_report(report, opts.json);
        return report.pass() ? kExitPass : kExitNegative;
    }
    if (!from_integral.empty()) {
        Matrix phi_mat = parse_integral(read_file(from_integral), s.hopf.field());
        AxiomReport phi_report = check_total_integral(phi_mat, a, s.hopf);
        if (!phi_report.pass()) {
            print_report(phi_report, opts.json);
            return kExitNegative;
        }
        NormalizedIntegral theta =
            normalized_from_integral(TotalIntegral{phi_mat, true}, a, s.hopf);
        write_output(opts.out, serialize_normalized(theta.theta));
        return kExitPass;
    }
    AffineSolutionSet sol = solve_normalized_integral(a, s.hopf);
    if (opts.json || !opts.out.empty())
        write_output(opts.out, serialize_normalized_solutions(sol, s.hopf.dim, a.dim()));
    if (!opts.json)
        std::cout << (sol.consistent() ? "normalized integrals exist; affine dimension " +
                                             std::to_string(sol.nullspace.size())
                                       : std::string("none"))
                  << "\n";
    return sol.consistent() ? kExitPass : kExitNegative;
}

int cmd_separability(const std::string& file, const CommonOpts& opts) {
    StructureFile s = parse_structure_file(read_file(file));
    ComoduleAlgebra a = s.comodule_algebra();
    AffineSolutionSet sol = solve_normalized_integral(a, s.hopf);
    bool separable = sol.consistent();
    if (separable) {
        // certify the verdict: nu retracts the adjunction unit on the
        // regular relative module
        Tensor3 theta(s.hopf.field(), s.hopf.dim, s.hopf.dim, a.dim());
        for (std::size_t g = 0; g < s.hopf.dim; ++g)
            for (std::size_t h = 0; h < s.hopf.dim; ++h)
                for (std::size_t x = 0; x < a.dim(); ++x)
                    theta.at(g, h, x) = (*sol.particular)[(g * s.hopf.dim + h) * a.dim() + x];
        NormalizedIntegral ni = NormalizedIntegral::make(theta, a, s.hopf);
        RelativeHopfModule reg = regular_relative_module(a);
        Matrix nu = nu_map(reg, ni, a, s.hopf);
        if (nu * unit_map(reg) != Matrix::identity(s.hopf.field(), reg.dim))
            throw InternalInconsistency("solver output does not retract the unit");
    }
    if (opts.json)
        std::cout << std::string("{\n  \"separable\": ") + (separable ? "true" : "false") +
                         "\n}\n";
    else
        std::cout << "coaction-forgetting functor separable: " << (separable ? "yes" : "no")
                  << "\n";
    return separable ? kExitPass : kExitNegative;
}

int cmd_maschke(const std::string& file, const CommonOpts& opts) {
    MaschkeBundleFile b = parse_maschke_bundle(read_file(file));
    ComoduleAlgebra a = b.algebra.comodule_algebra();
    AxiomReport seq_report = check_short_exact(b.sequence, a, b.algebra.hopf);
    if (!seq_report.pass()) {
        print_report(seq_report, opts.json);
        return kExitNegative;
    }
    TotalIntegral phi = TotalIntegral::make(b.phi, a, b.algebra.hopf);
    MaschkeSplitting split = maschke_split(b.sequence, phi, a, b.algebra.hopf);
    write_output(opts.out, serialize_splitting(split));
    if (!opts.json && !opts.out.empty()) std::cout << "splitting certified\n";
    return kExitPass;
}

int cmd_extend(const std::string& file, const CommonOpts& opts) {
    ExtendBundleFile b = parse_extend_bundle(read_file(file));
    ComoduleAlgebra a = b.algebra.comodule_algebra();
    TotalIntegral phi = TotalIntegral::make(b.phi, a, b.algebra.hopf);
    Matrix e = extend_comodule_map(b.f, b.incl, b.v, b.w, b.m, phi, a, b.algebra.hopf);
    write_output(opts.out, serialize_matrix_file(e));
    return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact structure-constant toolkit for monoidal Hom-Hopf algebras"};
    app.require_subcommand(1);

    std::string file, aut_file, verify, from_integral, convention, field_str, name;
    CommonOpts opts;
    bool bundle = false;

    auto add_common = [&](CLI::App* c, bool with_out = true) {
        c->add_flag("--json", opts.json, "machine-readable output");
        if (with_out) c->add_option("-o,--output", opts.out, "write result to this file");
    };

    CLI::App* check = app.add_subcommand("check", "verify every axiom of a structure file");
    check->add_option("file", file)->required();
    check->add_option("--convention", convention, "coassociativity convention override")
        ->check(CLI::IsMember({"categorical", "printed"}));
    add_common(check, false);

    CLI::App* builtin_cmd = app.add_subcommand("builtin", "emit a built-in certified bundle");
    builtin_cmd->add_option("name", name)->required();
    builtin_cmd->add_option("--field", field_str, "coefficient field, \"Q\" or \"GF(p)\"");
    add_common(builtin_cmd);

    CLI::App* twist = app.add_subcommand("twist", "twist a classical Hopf algebra by an automorphism");
    twist->add_option("file", file)->required();
    twist->add_option("--aut", aut_file, "automorphism matrix file")->required();
    twist->add_flag("--bundle", bundle, "attach the regular coaction to the output");
    add_common(twist);

    CLI::App* integral = app.add_subcommand("integral", "solve for or verify total integrals");
    integral->add_option("file", file)->required();
    integral->add_option("--verify", verify, "certificate file to verify instead of solving");
    add_common(integral);

    CLI::App* normalized =
        app.add_subcommand("normalized-integral", "solve for, verify, or convert normalized integrals");
    normalized->add_option("file", file)->required();
    normalized->add_option("--verify", verify, "certificate file to verify instead of solving");
    normalized->add_option("--from-integral", from_integral,
                           "convert a total integral (requires central image)");
    add_common(normalized);

    CLI::App* separability =
        app.add_subcommand("separability", "decide separability of the coaction-forgetting functor");
    separability->add_option("file", file)->required();
    add_common(separability, false);

    CLI::App* maschke = app.add_subcommand("maschke", "average an A-linear splitting into a relative one");
    maschke->add_option("file", file)->required();
    add_common(maschke);

    CLI::App* extend = app.add_subcommand("extend", "extend a colinear map along a subcomodule inclusion");
    extend->add_option("file", file)->required();
    add_common(extend);

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return cmd_check(file, convention, opts.json);
        if (builtin_cmd->parsed()) return cmd_builtin(name, field_str, opts);
        if (twist->parsed()) return cmd_twist(file, aut_file, bundle, opts);
        if (integral->parsed()) return cmd_integral(file, verify, opts);
        if (normalized->parsed()) return cmd_normalized(file, verify, from_integral, opts);
        if (separability->parsed()) return cmd_separability(file, opts);
        if (maschke->parsed()) return cmd_maschke(file, opts);
        if (extend->parsed()) return cmd_extend(file, opts);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const HypothesesNotMet& e) {
        std::cerr << "hypotheses not met [" << e.condition << "]: " << e.what() << "\n";
        return kExitHypotheses;
    } catch (const NoEquivariantRetraction& e) {
        std::cerr << "hypotheses not met [equivariant-retraction]: " << e.what() << "\n";
        return kExitHypotheses;
    } catch (const NotInvertible& e) {
        std::cerr << "hypotheses not met [invertibility]: " << e.what() << "\n";
        return kExitHypotheses;
    } catch (const InternalInconsistency& e) {
        std::cerr << "internal inconsistency (library bug): " << e.what() << "\n";
        return 70;
    }
    return kExitInput;
}
