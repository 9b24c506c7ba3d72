// Acceptance suite: one pass/fail line per criterion, exact arithmetic
// everywhere except the explicitly numeric sanity layer. Criterion 9 drives
// the installed CLI binary; pass its path and the data directory as
// arguments.

#include "bhk/errors.hpp"
#include "bhk/serialize.hpp"
#include "bhk/verify.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace bhk;

namespace {

int g_failures = 0;

void criterion(int number, bool ok, const std::string& description) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion-" << number << ": " << description
              << "\n";
    if (!ok) ++g_failures;
}

void extra(bool ok, const std::string& description) {
    std::cout << (ok ? "PASS" : "FAIL") << " extra: " << description << "\n";
    if (!ok) ++g_failures;
}

RatVector rv(std::initializer_list<Rat> entries) { return RatVector(entries); }

const std::vector<std::string> xyz{"x", "y", "z"};
const RatVector kThird{Rat(1, 3), Rat(1, 3), Rat(1, 3)};

QuotientLGModel model(const std::string& poly, std::initializer_list<RatVector> gens,
                      const std::vector<std::string>& vars = xyz) {
    return QuotientLGModel(ExponentMatrix::parse(poly, vars),
                           DiagonalGroup::from_generators(vars.size(), gens));
}

struct CliResult {
    int exit_code = -1;
    std::string output;
};

CliResult run_cli(const std::string& command) {
    CliResult result;
    FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
    if (!pipe) return result;
    char buffer[4096];
    std::size_t n = 0;
    while ((n = fread(buffer, 1, sizeof(buffer), pipe)) > 0) result.output.append(buffer, n);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

// ---- criterion bodies ------------------------------------------------------

void criterion_1_dual_group() {
    const QuotientLGModel m = model("x^3+y^3+z^3", {kThird});
    const DualModel dual = dualize(m);
    bool ok = dual.gt.is_finite();
    ok = ok && dual.gt.as_group().order() == 9;
    ok = ok && dual.gt.finite_divisors == std::vector<Int>{3, 3};
    // 27 candidate classes swept, matched element for element
    const IntMatrix btau = dual.b.transpose();
    const auto brute = oracle_kernel_bruteforce(btau, Int(3));
    ok = ok && brute.size() == 9 && brute == dual.gt.as_group().elements(Int(1000000));
    criterion(1, ok, "cubic/diagonal-thirds dual group has order 9, divisors [3,3], "
                     "matching the 27-candidate kernel sweep");
}

void criterion_2_boundary_groups() {
    bool ok = true;
    const QuotientLGModel fermat = model("x^3+y^3+z^3", {});
    const QuotientLGModel loop = model("x^2*y + y^2*z + z^2*x", {});
    const DualModel d_fermat = dualize(fermat);
    const DualModel d_loop = dualize(loop);
    ok = ok && d_fermat.gt.is_finite() && d_fermat.gt.as_group().order() == 27;
    ok = ok && d_loop.gt.is_finite() && d_loop.gt.as_group().order() == 9;
    for (const QuotientLGModel& m : {fermat, loop}) {
        const DiagonalGroup gmax = symmetry_group(m.matrix());
        const DualModel d = dualize(m.matrix(), gmax);
        ok = ok && d.gt.is_finite() && d.gt.as_group().order() == 1;
    }
    criterion(2, ok, "trivial group dualizes to order |det P| (27 and 9); maximal group "
                     "dualizes to the trivial group");
}

void criterion_3_three_routes() {
    std::size_t models_checked = 0;
    std::size_t groups_checked = 0;
    std::size_t agreed = 0;
    for (const CorpusEntry& entry : corpus()) {
        const ExponentMatrix w = ExponentMatrix::parse(entry.polynomial, entry.variables);
        ++models_checked;
        const DiagonalGroup gmax = symmetry_group(w.matrix());
        for (const DiagonalGroup& g : all_subgroups(gmax, Int(81))) {
            ++groups_checked;
            if (verify_krawitz_equivalence(QuotientLGModel(w, g)).pass) ++agreed;
        }
    }
    const bool ok = models_checked >= 20 && groups_checked > models_checked &&
                    agreed == groups_checked;
    std::ostringstream desc;
    desc << "closed form, brute-forced condition and kernel route agree on " << agreed << "/"
         << groups_checked << " invariant subgroups across " << models_checked << " models";
    criterion(3, ok, desc.str());
}

void criterion_4_main_certificates() {
    const QuotientLGModel fermat = model("x^3+y^3+z^3", {kThird});
    const QuotientLGModel loop = model("x^2*y + y^2*z + z^2*x", {kThird});
    const QuotientLGModel fermat_xyz = model("x^3+y^3+z^3+x*y*z", {kThird});

    bool ok = true;
    for (const QuotientLGModel* other : {&loop, &fermat_xyz}) {
        const Certificate cert = verify_main(fermat, *other);
        ok = ok && cert.pass;
        ok = ok && cert.witnesses["factor_matrices_equal"] == true;
        ok = ok && cert.witnesses["restricted_superpotentials_equal"] == true;
        ok = ok && cert.witnesses["weight_lattices_equal"] == true;
        ok = ok && cert.witnesses["weight_generator"] == Json::parse("[1,1,-1]");
    }
    criterion(4, ok, "main-theorem certificates for cubic vs cycle and vs cubic+xyz "
                     "(different monomial counts), shared weight generator (1,1,-1)");
}

void criterion_5_cy_predicate() {
    bool ok = true;
    const CyReport cubic = is_calabi_yau(IntMatrix::diagonal({3, 3, 3}));
    ok = ok && cubic.calabi_yau() && cubic.weights_row == IntVector{9, 9, 9} &&
         cubic.determinant == 27;
    const CyReport loop = is_calabi_yau(IntMatrix::from_rows({{2, 0, 1}, {1, 2, 0}, {0, 1, 2}}));
    ok = ok && loop.calabi_yau() && loop.weights_row == IntVector{3, 3, 3} &&
         loop.determinant == 9;
    const CyReport mixed = is_calabi_yau(IntMatrix::diagonal({2, 3}));
    ok = ok && !mixed.calabi_yau() && mixed.weights_row == IntVector{3, 2} &&
         mixed.determinant == 6 && !mixed.sum_matches_det;
    criterion(5, ok, "Calabi-Yau predicate: diag(3,3,3) and the 3-cycle pass, diag(2,3) "
                     "fails on 5 != 6");
}

void criterion_6_cyclic_weights() {
    std::size_t pairs = 0;
    std::size_t cyclic = 0;
    std::vector<std::pair<ExponentMatrix, std::vector<DiagonalGroup>>> cy_models;
    for (const CorpusEntry& entry : corpus()) {
        ExponentMatrix w = ExponentMatrix::parse(entry.polynomial, entry.variables);
        if (!is_calabi_yau(w.matrix()).calabi_yau()) continue;
        const DiagonalGroup gmax = symmetry_group(w.matrix());
        cy_models.emplace_back(std::move(w), all_subgroups(gmax, Int(81)));
    }
    for (std::size_t i = 0; i < cy_models.size(); ++i)
        for (std::size_t j = i; j < cy_models.size(); ++j) {
            if (cy_models[i].first.variable_count() != cy_models[j].first.variable_count())
                continue;
            for (const DiagonalGroup& g : cy_models[i].second) {
                if (!is_invariant(cy_models[j].first.matrix(), g)) continue;
                ++pairs;
                const Certificate cert = verify_cy_corollary(
                    QuotientLGModel(cy_models[i].first, g), QuotientLGModel(cy_models[j].first, g));
                if (cert.pass && cert.witnesses["weight_rank_one"] == true) ++cyclic;
            }
        }
    std::ostringstream desc;
    desc << "dual weight lattice is cyclic (rank 1) for " << cyclic << "/" << pairs
         << " Calabi-Yau corpus pairs sharing a group";
    criterion(6, pairs >= 4 && cyclic == pairs, desc.str());
}

void criterion_7_involution() {
    std::size_t checked = 0;
    std::size_t passed = 0;
    for (const CorpusEntry& entry : corpus()) {
        const ExponentMatrix w = ExponentMatrix::parse(entry.polynomial, entry.variables);
        const DiagonalGroup gmax = symmetry_group(w.matrix());
        for (const DiagonalGroup& g : all_subgroups(gmax, Int(81))) {
            ++checked;
            if (verify_involution(QuotientLGModel(w, g)).pass) ++passed;
        }
    }
    std::ostringstream desc;
    desc << "double dual restores (P, G) and order(G) * order(dual) = |det P| on " << passed
         << "/" << checked << " corpus models";
    criterion(7, checked > 0 && passed == checked, desc.str());
}

void criterion_8_numeric_layer() {
    bool ok = true;

    // certified-equal pairs agree numerically on the common torus
    const QuotientLGModel fermat = model("x^3+y^3+z^3", {kThird});
    const QuotientLGModel loop = model("x^2*y + y^2*z + z^2*x", {kThird});
    const QuotientLGModel fermat_xyz = model("x^3+y^3+z^3+x*y*z", {kThird});
    for (const QuotientLGModel* other : {&loop, &fermat_xyz}) {
        const Factorization fa = fermat.factorize();
        const Factorization fb = other->factorize();
        const CharacterSum sa = CharacterSum::from_rows(fa.a, TorusTag::QuotientFmTau);
        const CharacterSum sb = CharacterSum::from_rows(fb.a, TorusTag::QuotientFmTau);
        const auto points = random_torus_points(20, 3, 20260810);
        for (const auto& pt : points) {
            const auto va = oracle_numeric_superpotential(sa, pt);
            const auto vb = oracle_numeric_superpotential(sb, pt);
            ok = ok && std::abs(va - vb) < 1e-9;
        }
    }

    // invariance flag against the numeric orbit comparison, both polarities
    const ExponentMatrix w = ExponentMatrix::parse("x^3+y^3+z^3", xyz);
    const std::vector<DiagonalGroup> groups{
        DiagonalGroup::from_generators(3, {kThird}),
        DiagonalGroup::from_generators(3, {rv({Rat(1, 2), Rat(0), Rat(0)})}),
        DiagonalGroup::from_generators(3, {rv({Rat(1, 3), Rat(2, 3), Rat(0)})}),
    };
    constexpr double kTau = 6.283185307179586476925286766559;
    const auto points = random_torus_points(20, 3, 918273);
    for (const DiagonalGroup& g : groups) {
        bool numeric_invariant = true;
        for (const RatVector& gen : g.generators_mod1())
            for (const auto& pt : points) {
                std::vector<std::complex<double>> moved(pt.size());
                for (std::size_t i = 0; i < pt.size(); ++i) {
                    const double phase = kTau *
                                         static_cast<double>(num(gen[i]).convert_to<long long>()) /
                                         static_cast<double>(den(gen[i]).convert_to<long long>());
                    moved[i] = pt[i] * std::polar(1.0, phase);
                }
                if (std::abs(numeric_superpotential(w.matrix(), moved) -
                             numeric_superpotential(w.matrix(), pt)) >= 1e-9)
                    numeric_invariant = false;
            }
        ok = ok && numeric_invariant == is_invariant(w.matrix(), g);
    }
    criterion(8, ok, "numeric sanity layer: certified-equal pairs agree within 1e-9 at 20 "
                     "unit-modulus points; invariance flag matches numeric orbits");
}

void criterion_9_determinism(const std::string& cli, const std::string& data_dir) {
    bool ok = true;

    const std::vector<std::string> commands{
        cli + " parse " + data_dir + "/fermat_j.json",
        cli + " parse " + data_dir + "/chain_322.toml",
        cli + " dual " + data_dir + "/fermat_j.json",
        cli + " dual " + data_dir + "/loop_j.json",
        cli + " krawitz " + data_dir + "/fermat_j.json",
        cli + " cy " + data_dir + "/x2y3.json",
        cli + " cy " + data_dir + "/loop_trivial.json",
        cli + " weights --side dual " + data_dir + "/fermat_j.json",
        cli + " weights --side primal " + data_dir + "/fermat_trivial.json",
        cli + " verify " + data_dir + "/fermat_j.json " + data_dir + "/loop_j.json",
        cli + " verify --theorem cy-corollary " + data_dir + "/fermat_j.json " + data_dir +
            "/loop_j.json",
        cli + " verify --theorem equal-sups " + data_dir + "/fermat_trivial.json " + data_dir +
            "/loop_trivial.json",
        cli + " selftest --seed 7",
        cli + " --format text parse " + data_dir + "/fermat_j.json",
        cli + " --format text verify " + data_dir + "/fermat_j.json " + data_dir +
            "/fermat_xyz_j.json",
    };
    for (const std::string& command : commands) {
        const CliResult first = run_cli(command);
        const CliResult second = run_cli(command);
        const bool same = first.exit_code == second.exit_code && first.output == second.output &&
                          !first.output.empty() && first.exit_code == 0;
        if (!same) std::cout << "  nondeterministic or failing: " << command << "\n";
        ok = ok && same;
    }

    criterion(9, ok, "every CLI command is byte-deterministic across runs; "
                     "selftest --seed 7 exits 0");
}

void extra_cli_contract(const std::string& cli, const std::string& data_dir) {
    // exit code 1: verified-false (hypothesis violation)
    const CliResult mismatch =
        run_cli(cli + " verify " + data_dir + "/fermat_j.json " + data_dir + "/fermat_trivial.json");
    extra(mismatch.exit_code == 1 &&
              mismatch.output.find("\"verdict\": \"fail\"") != std::string::npos &&
              mismatch.output.find("groups differ") != std::string::npos,
          "verify with mismatched groups exits 1 with 'groups differ'");

    // exit code 2: malformed input
    const CliResult dup = run_cli(cli + " parse " + data_dir + "/bad_duplicate.json");
    extra(dup.exit_code == 2, "duplicate-monomial model file exits 2");
    const CliResult missing = run_cli(cli + " parse " + data_dir + "/does_not_exist.json");
    extra(missing.exit_code == 2, "missing file exits 2");

    // cy on a non-CY model still exits 0 and reports the failing clause
    const CliResult cy = run_cli(cli + " cy " + data_dir + "/x2y3.json");
    extra(cy.exit_code == 0 && cy.output.find("\"sum_matches_det\": false") != std::string::npos,
          "cy on a non-Calabi-Yau model exits 0 with sum_matches_det=false");

    // stdin via '-'
    const CliResult stdin_parse =
        run_cli("cat " + data_dir + "/fermat_j.json | " + cli + " parse -");
    extra(stdin_parse.exit_code == 0 &&
              stdin_parse.output.find("\"order\": 3") != std::string::npos,
          "parse reads from stdin with '-'");
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: acceptance <cli-binary> <data-dir>\n";
        return 2;
    }
    const std::string cli = argv[1];
    const std::string data_dir = argv[2];

    try {
        criterion_1_dual_group();
        criterion_2_boundary_groups();
        criterion_3_three_routes();
        criterion_4_main_certificates();
        criterion_5_cy_predicate();
        criterion_6_cyclic_weights();
        criterion_7_involution();
        criterion_8_numeric_layer();
        criterion_9_determinism(cli, data_dir);
        extra_cli_contract(cli, data_dir);
    } catch (const std::exception& e) {
        std::cout << "FAIL exception: " << e.what() << "\n";
        ++g_failures;
    }

    std::cout << (g_failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << " ("
              << g_failures << " failing)\n";
    return g_failures == 0 ? 0 : 1;
}
