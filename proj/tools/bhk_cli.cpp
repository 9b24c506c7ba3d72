// Command-line front end: parse model files, run the duality and the
// certificate checks, emit canonical JSON (default) or aligned text.
//
// Exit codes: 0 success / verified, 1 verified-false or failed hypothesis,
// 2 input or usage error.

#include "bhk/errors.hpp"
#include "bhk/serialize.hpp"
#include "bhk/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace bhk;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

QuotientLGModel load_model(const std::string& path) {
    return build_model(parse_model_file(read_input(path)));
}

// ---- text rendering ------------------------------------------------------

std::string matrix_table(const IntMatrix& m, const std::string& indent) {
    std::vector<std::size_t> width(m.cols(), 0);
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i)
            width[j] = std::max(width[j], m(i, j).str().size());
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out += indent + "[";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const std::string s = m(i, j).str();
            out += std::string(width[j] - s.size(), ' ') + s;
            if (j + 1 < m.cols()) out += "  ";
        }
        out += "]\n";
    }
    return out;
}

std::string vector_line(const IntVector& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        out += v[i].str();
        if (i + 1 < v.size()) out += ", ";
    }
    return out + ")";
}

std::string rat_vector_line(const RatVector& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        out += rat_to_string(v[i]);
        if (i + 1 < v.size()) out += ", ";
    }
    return out + ")";
}

std::string group_text(const DiagonalGroup& g, const std::string& indent) {
    std::string out;
    out += indent + "order: " + g.order().str() + "\n";
    out += indent + "elementary divisors: ";
    const auto divs = g.elementary_divisors();
    if (divs.empty()) out += "(trivial)";
    for (std::size_t i = 0; i < divs.size(); ++i) {
        out += divs[i].str();
        if (i + 1 < divs.size()) out += " | ";
    }
    out += "\n";
    for (const RatVector& gen : g.generators_mod1())
        out += indent + "generator: " + rat_vector_line(gen) + "\n";
    return out;
}

std::string kernel_text(const KernelGroup& g, const std::string& indent) {
    std::string out;
    out += indent + "torus rank: " + std::to_string(g.torus_rank) + "\n";
    out += indent + "finite order: " + g.finite_order().str() + "\n";
    out += indent + "finite divisors: ";
    if (g.finite_divisors.empty()) out += "(none)";
    for (std::size_t i = 0; i < g.finite_divisors.size(); ++i) {
        out += g.finite_divisors[i].str();
        if (i + 1 < g.finite_divisors.size()) out += " | ";
    }
    out += "\n";
    for (const RatVector& gen : g.torsion_generators)
        out += indent + "generator: " + rat_vector_line(gen) + "\n";
    return out;
}

std::string model_text(const QuotientLGModel& m) {
    std::string out;
    out += "polynomial: " + m.exponents().polynomial_string() + "\n";
    out += "variables:";
    for (const std::string& v : m.exponents().variables()) out += " " + v;
    out += "\nexponent matrix:\n" + matrix_table(m.matrix(), "  ");
    out += "group:\n" + group_text(m.group(), "  ");
    for (const std::string& name : m.exponents().unused_variables())
        out += "warning: variable '" + name + "' appears in no monomial\n";
    return out;
}

std::string certificate_text(const Certificate& cert) {
    std::string out;
    out += "theorem: " + cert.theorem_id + "\n";
    out += "verdict: " + std::string(cert.pass ? "pass" : "fail") + "\n";
    for (const std::string& d : cert.diagnostics) out += "diagnostic: " + d + "\n";
    if (cert.witnesses.contains("factor_matrix")) {
        out += "common factor matrix:\n";
        const auto& fm = cert.witnesses["factor_matrix"];
        for (const auto& row : fm) {
            out += "  [";
            for (std::size_t j = 0; j < row.size(); ++j) {
                out += row[j].dump();
                if (j + 1 < row.size()) out += "  ";
            }
            out += "]\n";
        }
    }
    if (cert.witnesses.contains("weight_generator"))
        out += "weight generator: " + cert.witnesses["weight_generator"].dump() + "\n";
    if (cert.witnesses.contains("normalized_generator"))
        out += "normalized generator: " + cert.witnesses["normalized_generator"].dump() + "\n";
    return out;
}

// ---- command bodies ------------------------------------------------------

struct Options {
    std::string format = "json";
    std::uint64_t seed = 0;
    long long cap = 1000000;
    VerifyOptions verify() const { return VerifyOptions{seed, Int(cap)}; }
};

void emit(const Options& opt, const Json& j, const std::string& text) {
    if (opt.format == "text")
        std::cout << text;
    else
        std::cout << dump_canonical(j);
}

int cmd_parse(const Options& opt, const std::string& path) {
    const QuotientLGModel model = load_model(path);
    emit(opt, json_of(model), model_text(model));
    return 0;
}

int cmd_dual(const Options& opt, const std::string& path) {
    const QuotientLGModel model = load_model(path);
    const DualModel dual = dualize(model);
    Json j{{"atau", json_of(dual.atau)},
           {"b", json_of(dual.b)},
           {"gt", json_of(dual.gt)},
           {"ptau", json_of(dual.ptau)}};
    std::string text;
    text += "transposed exponent matrix:\n" + matrix_table(dual.ptau, "  ");
    text += "dual group (kernel):\n" + kernel_text(dual.gt, "  ");
    emit(opt, j, text);
    return 0;
}

int cmd_krawitz(const Options& opt, const std::string& path) {
    const QuotientLGModel model = load_model(path);
    const DiagonalGroup dual = krawitz_dual(model.matrix(), model.group());
    emit(opt, json_of(dual), "transpose-side dual group:\n" + group_text(dual, "  "));
    return 0;
}

int cmd_cy(const Options& opt, const std::string& path) {
    const QuotientLGModel model = load_model(path);
    const CyReport report = is_calabi_yau(model.matrix());
    std::string text;
    text += "square: " + std::string(report.square ? "yes" : "no") + "\n";
    text += "det: " + report.determinant.str() + "\n";
    text += "weights row: " + vector_line(report.weights_row) + "\n";
    text += "sign uniform: " + std::string(report.sign_uniform ? "yes" : "no") + "\n";
    text += "sum matches det: " + std::string(report.sum_matches_det ? "yes" : "no") + "\n";
    text += "Calabi-Yau: " + std::string(report.calabi_yau() ? "yes" : "no") + "\n";
    emit(opt, json_of(report), text);
    return 0;
}

int cmd_weights(const Options& opt, const std::string& path, const std::string& side) {
    const QuotientLGModel model = load_model(path);
    const Factorization f = model.factorize();
    const CharacterSum monomials = side == "dual"
                                       ? CharacterSum::from_rows(f.a, TorusTag::QuotientFmTau)
                                       : quotient_superpotential(f);
    const WeightLattice w = weight_lattice(monomials);
    Json j = json_of(w);
    j["side"] = side;
    std::string text = "side: " + side + "\nrank: " + std::to_string(w.rank()) + "\n";
    if (w.rank() == 1) {
        const IntVector q0 = normalize_weight_generator(w, monomials);
        j["generator"] = json_of(q0);
        text += "generator: " + vector_line(q0) + "\n";
    } else {
        for (std::size_t i = 0; i < w.basis_rows.rows(); ++i)
            text += "basis: " + vector_line(w.basis_rows.row(i)) + "\n";
    }
    emit(opt, j, text);
    return 0;
}

int cmd_verify(const Options& opt, const std::string& path_a, const std::string& path_b,
               const std::string& theorem) {
    const QuotientLGModel a = load_model(path_a);
    const QuotientLGModel b = load_model(path_b);
    Certificate cert;
    if (theorem == "equal-sups")
        cert = verify_equal_sups(a, b, opt.verify());
    else if (theorem == "cy-corollary")
        cert = verify_cy_corollary(a, b, opt.verify());
    else
        cert = verify_main(a, b, opt.verify());
    emit(opt, cert.to_json(), certificate_text(cert));
    return cert.pass ? 0 : 1;
}

int cmd_selftest(const Options& opt) {
    const SelftestReport report = selftest(opt.seed, Int(opt.cap));
    std::string text = "checks: " + std::to_string(report.checks) + "\n";
    text += "passed: " + std::to_string(report.passed) + "\n";
    for (const std::string& f : report.failures) text += "failed: " + f + "\n";
    text += "verdict: " + std::string(report.pass() ? "pass" : "fail") + "\n";
    emit(opt, report.to_json(), text);
    return report.pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact duality and certificates for quotient Landau-Ginzburg models"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    app.add_option("--seed", opt.seed, "Seed for the randomized sanity layers")
        ->capture_default_str();
    app.add_option("--cap", opt.cap, "Enumeration guard (max elements per sweep)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    std::string path_a, path_b, side = "primal", theorem = "main";

    CLI::App* parse = app.add_subcommand("parse", "Parse a model file and print its canonical form");
    parse->add_option("path", path_a, "model file ('-' for stdin)")->required();

    CLI::App* dual = app.add_subcommand("dual", "Construct the dual quotient model");
    dual->add_option("path", path_a, "model file ('-' for stdin)")->required();

    CLI::App* krawitz = app.add_subcommand("krawitz", "Closed-form transpose-side dual group");
    krawitz->add_option("path", path_a, "model file ('-' for stdin)")->required();

    CLI::App* cy = app.add_subcommand("cy", "Calabi-Yau test report");
    cy->add_option("path", path_a, "model file ('-' for stdin)")->required();

    CLI::App* weights = app.add_subcommand("weights", "Weight lattice of the model or its dual");
    weights->add_option("path", path_a, "model file ('-' for stdin)")->required();
    weights->add_option("--side", side, "primal or dual")
        ->check(CLI::IsMember({"primal", "dual"}))
        ->capture_default_str();

    CLI::App* verify = app.add_subcommand("verify", "Certify a theorem on a pair of models");
    verify->add_option("path_a", path_a, "first model file")->required();
    verify->add_option("path_b", path_b, "second model file")->required();
    verify->add_option("--theorem", theorem, "main, equal-sups or cy-corollary")
        ->check(CLI::IsMember({"main", "equal-sups", "cy-corollary"}))
        ->capture_default_str();

    CLI::App* selftest_cmd = app.add_subcommand("selftest", "Run the full invariant suite");

    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (parse->parsed()) return cmd_parse(opt, path_a);
        if (dual->parsed()) return cmd_dual(opt, path_a);
        if (krawitz->parsed()) return cmd_krawitz(opt, path_a);
        if (cy->parsed()) return cmd_cy(opt, path_a);
        if (weights->parsed()) return cmd_weights(opt, path_a, side);
        if (verify->parsed()) return cmd_verify(opt, path_a, path_b, theorem);
        if (selftest_cmd->parsed()) return cmd_selftest(opt);
    } catch (const bhk::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
