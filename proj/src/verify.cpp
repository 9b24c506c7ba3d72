#include "bhk/verify.hpp"

#include "bhk/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <set>

namespace bhk {

namespace {

constexpr double kNumericTolerance = 1e-9;
constexpr std::size_t kNumericPoints = 20;

Json conventions_note() {
    return Json{{"lattice_basis",
                 "column hermite form, positive pivots, entries left of each pivot reduced into [0, pivot)"},
                {"weight_generator_sign",
                 "positive pairing with the defining monomials when uniform, else lexicographic"}};
}

std::string format_deviation(double dev) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3e", dev);
    return buf;
}

std::complex<double> complex_int_pow(std::complex<double> z, const Int& e) {
    const bool negative = e < 0;
    Int n = negative ? Int(-e) : e;
    std::complex<double> result = 1.0;
    std::complex<double> base = z;
    while (n > 0) {
        if ((n & 1) != 0) result *= base;
        base *= base;
        n >>= 1;
    }
    return negative ? 1.0 / result : result;
}

double max_charsum_deviation(const CharacterSum& a, const CharacterSum& b,
                             const std::vector<std::vector<std::complex<double>>>& points) {
    double worst = 0.0;
    for (const auto& pt : points) {
        const std::complex<double> va = oracle_numeric_superpotential(a, pt);
        const std::complex<double> vb = oracle_numeric_superpotential(b, pt);
        worst = std::max(worst, std::abs(va - vb));
    }
    return worst;
}

Json numeric_layer_json(double max_deviation) {
    return Json{{"agrees", max_deviation < kNumericTolerance},
                {"max_deviation", format_deviation(max_deviation)},
                {"points", kNumericPoints},
                {"tolerance", format_deviation(kNumericTolerance)}};
}

std::string cy_failure_clause(const CyReport& r) {
    if (!r.square) return "matrix is not square";
    if (!r.invertible) return "determinant is zero";
    Int sum = 0;
    for (const Int& w : r.weights_row) sum += w;
    if (!r.sign_uniform) return "weights row is not of uniform sign";
    if (!r.sum_matches_det)
        return "weight sum " + sum.str() + " != det " + r.determinant.str();
    return "";
}

RatVector to_rat(const IntVector& v) {
    RatVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
    return out;
}

// All classes w = k/e in [0,1)^N with p*w integral, each tested against
// every group element v through the literal pairing (p*w) . ((p^T)^-1 (p^T v)).
std::vector<RatVector> brute_force_dual_elements(const IntMatrix& p, const DiagonalGroup& g,
                                                 const Int& cap) {
    const std::size_t n = p.rows();
    const Int e = snf_exponent(p);
    Int candidates = 1;
    for (std::size_t i = 0; i < n; ++i) {
        candidates *= e;
        if (candidates > cap)
            throw cap_error("brute-force dual sweep needs cap >= " + candidates.str() +
                            " (exponent " + e.str() + ", rank " + std::to_string(n) + ")");
    }

    const std::vector<RatVector> elements = g.elements(cap);
    const IntMatrix pt = p.transpose();
    const IntMatrix adj_pt = adjugate(pt);
    const Rat det_pt = Rat(det(pt));
    std::vector<RatVector> pairing_vectors;
    pairing_vectors.reserve(elements.size());
    for (const RatVector& v : elements) {
        RatVector a(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a[i] += Rat(pt(i, j)) * v[j];
        for (const Rat& entry : a)
            if (!is_integral(entry))
                throw invariant_error("group element has a non-integral exponent pairing");
        RatVector s(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) s[i] += Rat(adj_pt(i, j)) * a[j];
            s[i] /= det_pt;
        }
        pairing_vectors.push_back(std::move(s));
    }

    std::vector<RatVector> accepted;
    std::vector<Int> k(n, 0);
    for (;;) {
        IntVector u(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) u[i] += p(i, j) * k[j];
        bool integral = true;
        for (const Int& ui : u)
            if (ui % e != 0) {
                integral = false;
                break;
            }
        if (integral) {
            RatVector r(n);
            for (std::size_t i = 0; i < n; ++i) r[i] = Rat(u[i] / e);
            bool ok = true;
            for (const RatVector& s : pairing_vectors) {
                if (!is_integral(dot(r, s))) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                RatVector w(n);
                for (std::size_t i = 0; i < n; ++i) w[i] = Rat(k[i], e);
                accepted.push_back(std::move(w));
            }
        }
        std::size_t pos = 0;
        while (pos < n && ++k[pos] == e) k[pos++] = 0;
        if (pos == n) break;
    }
    std::sort(accepted.begin(), accepted.end());
    return accepted;
}

} // namespace

Json Certificate::to_json() const {
    Json diag = Json::array();
    for (const std::string& d : diagnostics) diag.push_back(d);
    return Json{{"conventions", conventions_note()},
                {"diagnostics", std::move(diag)},
                {"inputs", inputs},
                {"seed", seed},
                {"theorem", theorem_id},
                {"verdict", pass ? "pass" : "fail"},
                {"witnesses", witnesses}};
}

std::complex<double> oracle_numeric_superpotential(const CharacterSum& sum,
                                                   const std::vector<std::complex<double>>& point) {
    if (point.size() != sum.ambient) throw dimension_error("point dimension != character length");
    for (const auto& z : point)
        if (z == std::complex<double>(0.0, 0.0))
            throw precondition_error("superpotential evaluation at a zero coordinate");
    std::complex<double> total = 0.0;
    for (const IntVector& c : sum.characters) {
        std::complex<double> term = 1.0;
        for (std::size_t i = 0; i < c.size(); ++i) term *= complex_int_pow(point[i], c[i]);
        total += term;
    }
    return total;
}

std::complex<double> numeric_superpotential(const IntMatrix& p,
                                            const std::vector<std::complex<double>>& point) {
    return oracle_numeric_superpotential(CharacterSum::from_columns(p, TorusTag::Source), point);
}

std::vector<std::vector<std::complex<double>>> random_torus_points(std::size_t count,
                                                                   std::size_t dim,
                                                                   std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    constexpr double kTwoPi = 6.283185307179586476925286766559;
    std::vector<std::vector<std::complex<double>>> points(count);
    for (auto& pt : points) {
        pt.resize(dim);
        for (auto& z : pt) {
            // 53 uniform bits -> phase in [0, 2*pi)
            const double t = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            z = std::polar(1.0, kTwoPi * t);
        }
    }
    return points;
}

Certificate verify_equal_sups(const QuotientLGModel& a, const QuotientLGModel& b,
                              const VerifyOptions& opts) {
    if (a.group().ambient_rank() != b.group().ambient_rank())
        throw dimension_error("models live on tori of different rank");
    Certificate cert;
    cert.theorem_id = "equal-sups";
    cert.seed = opts.seed;
    cert.inputs = Json{{"model_a", json_of(a)}, {"model_b", json_of(b)}};

    const bool groups_equal = group_equal(a.group(), b.group());
    cert.witnesses["groups_equal"] = groups_equal;
    if (!groups_equal) {
        cert.pass = false;
        cert.diagnostics.push_back("groups differ");
        return cert;
    }

    const Factorization fa = a.factorize();
    const Factorization fb = b.factorize();
    const bool same_a = fa.a == fb.a;
    const CharacterSum restricted_a = CharacterSum::from_rows(fa.a, TorusTag::QuotientFmTau);
    const CharacterSum restricted_b = CharacterSum::from_rows(fb.a, TorusTag::QuotientFmTau);

    cert.witnesses["factor_matrix"] = json_of(fa.a);
    cert.witnesses["factor_matrices_equal"] = same_a;
    cert.witnesses["restricted_superpotential"] = json_of(restricted_a);
    cert.witnesses["restricted_superpotentials_equal"] = restricted_a == restricted_b;

    const auto points = random_torus_points(kNumericPoints, fa.a.rows(), opts.seed);
    const double dev = max_charsum_deviation(restricted_a, restricted_b, points);
    cert.witnesses["numeric_layer"] = numeric_layer_json(dev);

    cert.pass = same_a && restricted_a == restricted_b;
    if (!same_a) cert.diagnostics.push_back("canonical factor matrices differ");
    if (cert.pass && dev >= kNumericTolerance)
        cert.diagnostics.push_back("numeric sanity layer deviates by " + format_deviation(dev));
    return cert;
}

Certificate verify_main(const QuotientLGModel& a, const QuotientLGModel& b,
                        const VerifyOptions& opts) {
    Certificate cert = verify_equal_sups(a, b, opts);
    cert.theorem_id = "main";
    if (!cert.pass) return cert;

    const Factorization fa = a.factorize();
    const Factorization fb = b.factorize();
    const CharacterSum mon_a = CharacterSum::from_rows(fa.a, TorusTag::QuotientFmTau);
    const CharacterSum mon_b = CharacterSum::from_rows(fb.a, TorusTag::QuotientFmTau);
    const WeightLattice wa = weight_lattice(mon_a);
    const WeightLattice wb = weight_lattice(mon_b);
    const bool lattices_equal = wa == wb;

    cert.witnesses["torus_dimension"] = fa.a.rows();
    cert.witnesses["weight_lattice"] = json_of(wa);
    cert.witnesses["weight_lattices_equal"] = lattices_equal;
    if (wa.rank() == 1)
        cert.witnesses["weight_generator"] = json_of(normalize_weight_generator(wa, mon_a));

    cert.pass = cert.pass && lattices_equal;
    if (!lattices_equal) cert.diagnostics.push_back("dual weight lattices differ");
    return cert;
}

Certificate verify_cy_corollary(const QuotientLGModel& a, const QuotientLGModel& b,
                                const VerifyOptions& opts) {
    const CyReport ra = is_calabi_yau(a.matrix());
    const CyReport rb = is_calabi_yau(b.matrix());
    if (!ra.calabi_yau() || !rb.calabi_yau()) {
        Certificate cert;
        cert.theorem_id = "cy-corollary";
        cert.seed = opts.seed;
        cert.inputs = Json{{"model_a", json_of(a)}, {"model_b", json_of(b)}};
        cert.witnesses["cy_report_a"] = json_of(ra);
        cert.witnesses["cy_report_b"] = json_of(rb);
        cert.pass = false;
        if (!ra.calabi_yau())
            cert.diagnostics.push_back("model_a not Calabi-Yau: " + cy_failure_clause(ra));
        if (!rb.calabi_yau())
            cert.diagnostics.push_back("model_b not Calabi-Yau: " + cy_failure_clause(rb));
        return cert;
    }

    Certificate cert = verify_main(a, b, opts);
    cert.theorem_id = "cy-corollary";
    cert.witnesses["cy_report_a"] = json_of(ra);
    cert.witnesses["cy_report_b"] = json_of(rb);
    if (!cert.pass) return cert;

    const Factorization fa = a.factorize();
    const CharacterSum mon_a = CharacterSum::from_rows(fa.a, TorusTag::QuotientFmTau);
    const WeightLattice wa = weight_lattice(mon_a);
    const bool rank_one = wa.rank() == 1;
    cert.witnesses["weight_rank_one"] = rank_one;
    if (rank_one)
        cert.witnesses["normalized_generator"] = json_of(normalize_weight_generator(wa, mon_a));
    cert.pass = cert.pass && rank_one;
    if (!rank_one)
        cert.diagnostics.push_back("dual weight lattice has rank " + std::to_string(wa.rank()));
    return cert;
}

Certificate verify_krawitz_equivalence(const QuotientLGModel& model, const VerifyOptions& opts) {
    const IntMatrix& p = model.matrix();
    if (!p.is_square()) throw precondition_error("exponent matrix must be square");
    if (det(p) == 0) throw precondition_error("exponent matrix is singular");

    Certificate cert;
    cert.theorem_id = "krawitz-equivalence";
    cert.seed = opts.seed;
    cert.inputs = Json{{"model", json_of(model)}};

    const DualModel dual = dualize(p, model.group());
    const DiagonalGroup& kernel_route = dual.gt.as_group();
    const DiagonalGroup closed_form = krawitz_dual(p, model.group());
    const std::vector<RatVector> brute = brute_force_dual_elements(p, model.group(), opts.cap);

    const bool kernel_matches = group_equal(closed_form, kernel_route);
    const std::vector<RatVector> closed_elements = closed_form.elements(opts.cap);
    const bool brute_matches = closed_elements == brute;

    cert.witnesses["closed_form_group"] = json_of(closed_form);
    cert.witnesses["kernel_group"] = json_of(dual.gt);
    cert.witnesses["kernel_matches_closed_form"] = kernel_matches;
    cert.witnesses["bruteforce_matches_closed_form"] = brute_matches;
    cert.witnesses["bruteforce_order"] = brute.size();

    cert.pass = kernel_matches && brute_matches;
    if (!kernel_matches) cert.diagnostics.push_back("kernel route disagrees with closed form");
    if (!brute_matches) cert.diagnostics.push_back("brute-force route disagrees with closed form");
    return cert;
}

Certificate verify_involution(const QuotientLGModel& model, const VerifyOptions& opts) {
    const IntMatrix& p = model.matrix();
    if (!p.is_square()) throw precondition_error("exponent matrix must be square");
    const Int dp = det(p);
    if (dp == 0) throw precondition_error("exponent matrix is singular");

    Certificate cert;
    cert.theorem_id = "involution";
    cert.seed = opts.seed;
    cert.inputs = Json{{"model", json_of(model)}};

    const DualModel first = dualize(p, model.group());
    const DiagonalGroup& gt = first.gt.as_group();
    const DualModel second = dualize(first.ptau, gt);

    const bool matrix_restored = second.ptau == p;
    const bool group_restored =
        second.gt.is_finite() && group_equal(second.gt.as_group(), model.group());
    const Int abs_det = dp < 0 ? Int(-dp) : dp;
    const bool order_product = model.group().order() * gt.order() == abs_det;

    cert.witnesses["double_dual_matrix_equal"] = matrix_restored;
    cert.witnesses["double_dual_group_equal"] = group_restored;
    cert.witnesses["order_product_matches_det"] = order_product;
    cert.witnesses["abs_det"] = to_i64(abs_det);
    cert.witnesses["dual_order"] = to_i64(gt.order());

    cert.pass = matrix_restored && group_restored && order_product;
    if (!matrix_restored) cert.diagnostics.push_back("double dual changed the exponent matrix");
    if (!group_restored) cert.diagnostics.push_back("double dual changed the group");
    if (!order_product) cert.diagnostics.push_back("order product does not match |det P|");
    return cert;
}

std::vector<RatVector> oracle_kernel_bruteforce(const IntMatrix& btau, const Int& denom,
                                                const Int& cap) {
    if (denom < 1) throw precondition_error("denominator must be >= 1");
    const std::size_t m = btau.cols();
    Int count = 1;
    for (std::size_t i = 0; i < m; ++i) {
        count *= denom;
        if (count > cap)
            throw cap_error("kernel sweep needs cap >= " + count.str() + " (denominator " +
                            denom.str() + "^" + std::to_string(m) + ")");
    }
    std::vector<RatVector> accepted;
    std::vector<Int> k(m, 0);
    for (;;) {
        bool integral = true;
        for (std::size_t i = 0; i < btau.rows() && integral; ++i) {
            Int num = 0;
            for (std::size_t j = 0; j < m; ++j) num += btau(i, j) * k[j];
            integral = num % denom == 0;
        }
        if (integral) {
            RatVector w(m);
            for (std::size_t j = 0; j < m; ++j) w[j] = Rat(k[j], denom);
            accepted.push_back(std::move(w));
        }
        std::size_t pos = 0;
        while (pos < m && ++k[pos] == denom) k[pos++] = 0;
        if (pos == m) break;
    }
    std::sort(accepted.begin(), accepted.end());
    return accepted;
}

DiagonalGroup symmetry_group(const IntMatrix& p) {
    if (!p.is_square()) throw precondition_error("symmetry group needs a square exponent matrix");
    if (det(p) == 0) throw precondition_error("exponent matrix is singular");
    const RatMatrix pt_inv = rat_inverse(RatMatrix::from_int(p.transpose()));
    std::vector<RatVector> gens;
    gens.reserve(p.cols());
    for (std::size_t j = 0; j < pt_inv.cols(); ++j) gens.push_back(pt_inv.col(j));
    return DiagonalGroup::from_generators(p.rows(), gens);
}

namespace {

std::string group_key(const DiagonalGroup& g) {
    std::string key;
    const RatMatrix& b = g.lattice_basis();
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            key += rat_to_string(b(i, j));
            key += ',';
        }
    return key;
}

} // namespace

namespace {

std::string element_set_key(const std::vector<RatVector>& elems) {
    std::string key;
    for (const RatVector& e : elems)
        for (const Rat& x : e) {
            key += rat_to_string(x);
            key += ',';
        }
    return key;
}

} // namespace

std::vector<DiagonalGroup> all_subgroups(const DiagonalGroup& g, const Int& order_cap,
                                         const Int& element_cap) {
    const std::vector<RatVector> elements = g.elements(element_cap);
    const std::size_t n = g.ambient_rank();

    // Breadth-first join closure over sorted element sets; the abelian join
    // <S, e> is {s + k*e} with k running over the cyclic part added by e.
    std::map<std::string, std::vector<RatVector>> found;
    const std::vector<RatVector> trivial{RatVector(n)};
    found.emplace(element_set_key(trivial), trivial);
    std::vector<std::vector<RatVector>> frontier{trivial};

    while (!frontier.empty()) {
        std::vector<std::vector<RatVector>> next;
        for (const std::vector<RatVector>& s : frontier) {
            for (const RatVector& e : elements) {
                if (std::binary_search(s.begin(), s.end(), e)) continue;
                std::set<RatVector> closure(s.begin(), s.end());
                RatVector multiple = e;
                const RatVector zero(n);
                while (multiple != zero) {
                    for (const RatVector& base : s) {
                        RatVector sum(n);
                        for (std::size_t i = 0; i < n; ++i)
                            sum[i] = frac_mod1(base[i] + multiple[i]);
                        closure.insert(std::move(sum));
                    }
                    RatVector bumped(n);
                    for (std::size_t i = 0; i < n; ++i)
                        bumped[i] = frac_mod1(multiple[i] + e[i]);
                    multiple = std::move(bumped);
                }
                if (Int(closure.size()) > order_cap) continue;
                std::vector<RatVector> t(closure.begin(), closure.end());
                const std::string key = element_set_key(t);
                if (found.find(key) != found.end()) continue;
                found.emplace(key, t);
                next.push_back(std::move(t));
            }
        }
        frontier = std::move(next);
    }

    std::vector<DiagonalGroup> out;
    out.reserve(found.size());
    for (const auto& [key, elems] : found)
        out.push_back(DiagonalGroup::from_generators(n, elems));
    std::sort(out.begin(), out.end(), [](const DiagonalGroup& a, const DiagonalGroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return group_key(a) < group_key(b);
    });
    return out;
}

Int snf_exponent(const IntMatrix& m) {
    const SnfDecomposition s = snf(m);
    Int exponent = 0;
    for (const Int& d : s.diagonal())
        if (d != 0) exponent = d;
    return exponent;
}

Json SelftestReport::to_json() const {
    Json fails = Json::array();
    for (const std::string& f : failures) fails.push_back(f);
    return Json{{"checks", checks},
                {"failures", std::move(fails)},
                {"passed", passed},
                {"seed", seed},
                {"verdict", pass() ? "pass" : "fail"}};
}

namespace {

struct Recorder {
    SelftestReport report;
    void check(bool ok, const std::string& label) {
        ++report.checks;
        if (ok)
            ++report.passed;
        else
            report.failures.push_back(label);
    }
};

// A deterministic draw of a finite group of order <= 27 in rank 3 together
// with two invariant exponent matrices over a shared monomial pool.
struct RandomPair {
    QuotientLGModel a;
    QuotientLGModel b;
};

std::optional<RandomPair> draw_random_pair(std::mt19937_64& rng,
                                           const std::vector<std::string>& vars) {
    const std::size_t n = vars.size();
    const auto rand_below = [&](std::size_t k) { return static_cast<std::size_t>(rng() % k); };

    std::vector<RatVector> gens;
    const std::size_t gen_count = 1 + rand_below(2);
    for (std::size_t i = 0; i < gen_count; ++i) {
        const long long d = 2 + static_cast<long long>(rand_below(2)); // denominator 2 or 3
        RatVector v(n);
        for (std::size_t j = 0; j < n; ++j) v[j] = Rat(static_cast<long long>(rand_below(d)), d);
        gens.push_back(std::move(v));
    }
    DiagonalGroup g = DiagonalGroup::from_generators(n, gens);
    if (g.order() > 27) return std::nullopt;

    // invariant monomial pool with entries <= 4
    std::vector<IntVector> pool;
    IntVector c(n, Int(0));
    for (;;) {
        std::size_t pos = 0;
        while (pos < n && ++c[pos] == 5) c[pos++] = 0;
        if (pos == n) break;
        RatVector cr = to_rat(c);
        bool invariant = true;
        for (std::size_t bcol = 0; bcol < g.lattice_basis().cols() && invariant; ++bcol)
            invariant = is_integral(dot(g.lattice_basis().col(bcol), cr));
        if (invariant) pool.push_back(c);
    }
    if (pool.size() < 2) return std::nullopt;

    const auto draw_matrix = [&]() -> std::optional<ExponentMatrix> {
        const std::size_t want = 2 + rand_below(std::min<std::size_t>(3, pool.size() - 1));
        std::set<std::size_t> picked;
        while (picked.size() < want) picked.insert(rand_below(pool.size()));
        std::vector<IntVector> cols;
        for (std::size_t idx : picked) cols.push_back(pool[idx]);
        return ExponentMatrix::from_matrix(IntMatrix::from_column_vectors(cols, n), vars, true);
    };

    auto wa = draw_matrix();
    auto wb = draw_matrix();
    if (!wa || !wb) return std::nullopt;
    return RandomPair{QuotientLGModel(std::move(*wa), g), QuotientLGModel(std::move(*wb), g)};
}

} // namespace

SelftestReport selftest(std::uint64_t seed, const Int& cap) {
    Recorder rec;
    rec.report.seed = seed;
    const VerifyOptions opts{seed, cap};
    const Int subgroup_order_cap = 81;
    const Int kernel_sweep_budget = 100000;

    struct ModelData {
        const CorpusEntry* entry = nullptr;
        ExponentMatrix exponents;
        DiagonalGroup gmax;
        std::vector<DiagonalGroup> subgroups;
        bool calabi_yau = false;
    };
    std::vector<ModelData> models;

    for (const CorpusEntry& entry : corpus()) {
        ExponentMatrix w = ExponentMatrix::parse(entry.polynomial, entry.variables);
        const IntMatrix& p = w.matrix();
        const Int dp = det(p);
        rec.check(p.is_square() && dp != 0, entry.name + ": square invertible");

        DiagonalGroup gmax = symmetry_group(p);
        const Int abs_det = dp < 0 ? Int(-dp) : dp;
        rec.check(gmax.order() == abs_det, entry.name + ": symmetry group order = |det P|");

        std::vector<DiagonalGroup> subgroups = all_subgroups(gmax, subgroup_order_cap, cap);
        rec.check(!subgroups.empty(), entry.name + ": subgroup sweep nonempty");

        for (const DiagonalGroup& g : subgroups) {
            QuotientLGModel model(w, g);
            const std::string tag = entry.name + "/order-" + g.order().str();

            const Certificate kraw = verify_krawitz_equivalence(model, opts);
            rec.check(kraw.pass, tag + ": three dual-group routes agree");

            const Certificate inv = verify_involution(model, opts);
            rec.check(inv.pass, tag + ": involution and order product");

            const DualModel dual = dualize(p, g);
            const IntMatrix btau = dual.b.transpose();

            // reconstruct the kernel from its Smith divisors and compare
            const SnfDecomposition s = snf(btau);
            std::vector<RatVector> snf_gens;
            for (std::size_t t = 0; t < s.rank(); ++t) {
                const Int& d = s.d(t, t);
                if (d <= 1) continue;
                RatVector gen(btau.cols());
                for (std::size_t i = 0; i < btau.cols(); ++i) gen[i] = Rat(s.v(i, t), d);
                snf_gens.push_back(std::move(gen));
            }
            const DiagonalGroup from_divisors =
                DiagonalGroup::from_generators(btau.cols(), snf_gens);
            rec.check(group_equal(from_divisors, dual.gt.as_group()),
                      tag + ": divisor reconstruction matches kernel lattice");

            // exhaustive kernel oracle when the sweep is small enough
            const Int denom = snf_exponent(btau) == 0 ? Int(1) : snf_exponent(btau);
            Int sweep = 1;
            bool affordable = true;
            for (std::size_t i = 0; i < btau.cols() && affordable; ++i) {
                sweep *= denom;
                affordable = sweep <= kernel_sweep_budget;
            }
            if (affordable && dual.gt.finite_order() <= 10000) {
                const auto brute = oracle_kernel_bruteforce(btau, denom, cap);
                const auto direct = dual.gt.as_group().elements(cap);
                rec.check(brute == direct, tag + ": kernel brute force matches element set");
            }
        }

        // boundary groups
        {
            QuotientLGModel trivial_model(w, DiagonalGroup::from_generators(p.rows(), {}));
            const DualModel d0 = dualize(p, trivial_model.group());
            rec.check(d0.gt.is_finite() && d0.gt.as_group().order() == abs_det,
                      entry.name + ": trivial group dualizes to order |det P|");
            const DualModel dmax = dualize(p, gmax);
            rec.check(dmax.gt.is_finite() && dmax.gt.as_group().order() == 1,
                      entry.name + ": maximal group dualizes to the trivial group");
        }

        const bool cy = is_calabi_yau(p).calabi_yau();
        models.push_back(
            ModelData{&entry, std::move(w), std::move(gmax), std::move(subgroups), cy});
    }

    // Calabi-Yau pairs sharing an invariant group: cyclic dual weight lattice
    for (std::size_t i = 0; i < models.size(); ++i) {
        if (!models[i].calabi_yau) continue;
        for (std::size_t j = i; j < models.size(); ++j) {
            if (!models[j].calabi_yau) continue;
            if (models[i].exponents.variable_count() != models[j].exponents.variable_count())
                continue;
            for (const DiagonalGroup& g : models[i].subgroups) {
                if (!is_invariant(models[j].exponents.matrix(), g)) continue;
                QuotientLGModel ma(models[i].exponents, g);
                QuotientLGModel mb(models[j].exponents, g);
                const Certificate cert = verify_cy_corollary(ma, mb, opts);
                rec.check(cert.pass,
                          models[i].entry->name + " ~ " + models[j].entry->name + "/order-" +
                              g.order().str() + ": cyclic weight lattice certificate");
            }
        }
    }

    // randomized certified pairs (seeded)
    {
        std::mt19937_64 rng(seed);
        const std::vector<std::string> vars{"x", "y", "z"};
        std::size_t produced = 0;
        std::size_t attempts = 0;
        while (produced < 4 && attempts < 200) {
            ++attempts;
            auto pair = draw_random_pair(rng, vars);
            if (!pair) continue;
            ++produced;
            const Certificate cert = verify_main(pair->a, pair->b, opts);
            rec.check(cert.pass, "random pair #" + std::to_string(produced) +
                                     " (order " + pair->a.group().order().str() + ")");
        }
        rec.check(produced == 4, "random pair generation produced 4 pairs");
    }

    // byte determinism of certificates
    {
        const auto fermat_it =
            std::find_if(corpus().begin(), corpus().end(),
                         [](const CorpusEntry& e) { return e.name == "fermat-333"; });
        const CorpusEntry& fermat = *fermat_it;
        ExponentMatrix w = ExponentMatrix::parse(fermat.polynomial, fermat.variables);
        DiagonalGroup j3 = DiagonalGroup::from_generators(
            3, {RatVector{Rat(1, 3), Rat(1, 3), Rat(1, 3)}});
        QuotientLGModel m(w, j3);
        const std::string once = dump_canonical(verify_krawitz_equivalence(m, opts).to_json());
        const std::string twice = dump_canonical(verify_krawitz_equivalence(m, opts).to_json());
        rec.check(once == twice, "certificate serialization is deterministic");
    }

    return rec.report;
}

} // namespace bhk
