#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "swappoly/constructions.hpp"
#include "swappoly/error.hpp"
#include "swappoly/evaluate.hpp"
#include "swappoly/identity_testing.hpp"
#include "swappoly/poincare.hpp"
#include "swappoly/polytext.hpp"
#include "swappoly/rng.hpp"
#include "swappoly/two_by_two.hpp"
#include "swappoly/verify.hpp"
#include "swappoly/weingarten.hpp"

using namespace swappoly;

namespace {

struct GlobalOpts {
    std::string format = "human";
    std::uint64_t seed = 0;
    int threads = 1;
    int trials = 5;
    unsigned long long budget = 10'000'000ULL;
};

VerifyOptions make_opts(const GlobalOpts& g, int d) {
    VerifyOptions o;
    o.d = d;
    o.trials = g.trials;
    o.seed = g.seed;
    o.threads = g.threads;
    o.budget.max_monomial_evals = g.budget;
    return o;
}

int emit(const ReportList& reports, const GlobalOpts& g) {
    std::cout << render(reports, g.format);
    return all_passed(reports) ? 0 : 1;
}

CheckReport flag_report(const std::string& id, const std::string& anchor, bool ok,
                        const std::string& note, std::uint64_t seed, const char* prov = "PAPER") {
    CheckReport r{id, anchor, ok ? "pass" : "fail", seed, {}, {}, {{"exact", prov}}, note};
    return r;
}

ReportList even_swap_reports(int d, const GlobalOpts& g) {
    ReportList out;
    const auto an = even_swap_analytic(d);
    CheckReport coeffs{"even-swap.coefficients", "thm:swaa", "pass", g.seed, {}, {}, {}, ""};
    coeffs.measured = {"a1=" + an.a1.str(), "b1=" + an.b1.str(), "a2=" + an.a2.str(),
                       "b2=" + an.b2.str(), "value=" + an.value_coeff.str()};
    coeffs.expected = {{"solved from tr constraints with a_hh, a_d", "DERIVED"}};
    out.push_back(coeffs);

    if (d == 2) {
        Rng rng(g.seed ^ 0xE5E5ULL);
        auto cert = even_swap_certificate(2, rng, std::max(3, g.trials),
                                          {g.budget}, g.threads);
        out.push_back(flag_report("even-swap.trace-constraints", "eq:ilcon0", cert.trace_constraints_ok,
                                  "tr G_i and tr((1,2)G_i) against a_hh, a_d", g.seed));
        out.push_back(flag_report("even-swap.components", "eq:ilcon", cert.components_ok,
                                  "decomposed (a_i, b_i) match the solved values", g.seed, "DERIVED"));
        out.push_back(flag_report("even-swap.combination", "eq:cott", cert.combination_is_swap,
                                  "a-part exactly 0 at every point", g.seed));
        CheckReport ratio{"even-swap.det-ratio", "sec:even-d.numerics", cert.ratio_constant ? "pass" : "fail",
                          g.seed, {}, {"ratio=" + cert.det_ratio.str()},
                          {{"constant across points", "DERIVED"}}, ""};
        out.push_back(ratio);
        CheckReport finding{"even-swap.printed-lines", "sec:even-d.numerics", "finding", g.seed, {}, {}, {}, ""};
        finding.measured = {"4G1-5G2 = " + (Rational(-36) * an.value_coeff).str() + " * TT * t",
                            "(8/3)G1-(10/3)G2 = " + (Rational(-24) * an.value_coeff).str() + " * TT * t"};
        finding.expected = {{"-48 D(X)D(Y) t printed", "PAPER"}, {"-8/9 TT t printed", "PAPER"}};
        finding.note = "exact constants differ from the printed lines; TT = 36 D(X)D(Y)";
        out.push_back(finding);
    } else {
        CheckReport analytic{"even-swap.analytic-only", "thm:swaa", "pass", g.seed, {}, {}, {}, ""};
        analytic.measured = {"combination (" + an.combo_g1.str() + ")*G1 + (" + an.combo_g2.str() + ")*G2",
                             "value " + an.value_coeff.str() + " * TT * t"};
        analytic.expected = {{"streaming evaluation out of budget for d >= 4", "DERIVED"}};
        analytic.note = "coefficients and predicted value only; no evaluation certificate";
        out.push_back(analytic);
        if (d == 4) {
            CheckReport f{"even-swap.printed-line-d4", "sec:even-d.numerics", "finding", g.seed, {}, {}, {}, ""};
            f.measured = {"27G2-22G1 = " + ((Rational(22) / an.a2) * an.value_coeff).str() + " * TT * t"};
            f.expected = {{"22*20/(3*15*16^2) = 11/288, printed simplified to 11/480", "PAPER"}};
            f.note = "printed constant internally inconsistent; exact value 11/8064";
            out.push_back(f);
        }
        if (d == 6) {
            CheckReport f{"even-swap.printed-line-d6", "sec:even-d.numerics", "finding", g.seed, {}, {}, {}, ""};
            f.measured = {"direction (1800, -2094), 1800G1-2094G2 = " +
                          ((Rational(-1800) / an.combo_g1) * an.value_coeff).str() + " * TT * t"};
            f.expected = {{"800 G1 - 2094 G2 = -43/3395700 TT t printed", "PAPER"}};
            f.note = "printed combination is not swap-valued; 1800 restores proportionality";
            out.push_back(f);
        }
    }
    return out;
}

ReportList odd_swap_reports(int d, const GlobalOpts& g) {
    if (d != 3) throw PreconditionError("odd-swap evaluation is implemented for d = 3");
    Rng rng(g.seed ^ 0x0DD3ULL);
    auto res = odd_swap_d3(rng, std::max(3, g.trials), {g.budget}, g.threads);
    ReportList out;
    out.push_back(flag_report("odd-swap.tr-g1-zero", "sec:odd-d", res.tr_g1_zero, "tr G1 = 0 exactly", g.seed));
    out.push_back(flag_report("odd-swap.tr-swap-g1", "thm:teF.cycle", res.tr_swap_g1_matches,
                              "tr((1,2)G1) = TT * " + res.a3.str(), g.seed));
    out.push_back(flag_report("odd-swap.g1-components", "sec:odd-d", res.g1_components_ok,
                              "(a,b) = (" + res.a1.str() + ", " + res.b1.str() + ")", g.seed, "DERIVED"));
    out.push_back(flag_report("odd-swap.lemma-sem", "lem:sem", res.lemma_sem_ok,
                              "exactly the four listed sigma cases are nonzero", g.seed));
    out.push_back(flag_report("odd-swap.altz-signs", "eq:altz", res.altz_signs_ok,
                              "the stated +-T values", g.seed));
    out.push_back(flag_report("odd-swap.almu-operators", "eq:almu0", res.almu_identities_ok,
                              "Alt M = T [diff] Wg(4,3) as order-4 operators", g.seed));
    CheckReport t2{"odd-swap.tr-g2", "eq:nzc", res.tr_g2_matches ? "pass" : "fail", g.seed, {}, {}, {}, ""};
    t2.measured = {"(4!)^2 (-b_{1^4}+b_{3,1}) = " + (Rational(576) * res.t2).str()};
    t2.expected = {{"-64/5", "PAPER"}};
    out.push_back(t2);
    out.push_back(flag_report("odd-swap.tr-swap-g2-zero", "sec:odd-d", res.tr_swap_g2_zero,
                              "tr((1,2)G2) = 0 exactly", g.seed));
    out.push_back(flag_report("odd-swap.g2-components", "sec:odd-d", res.g2_components_ok,
                              "(a,b) = (" + res.a2.str() + ", " + res.b2.str() + ")", g.seed, "DERIVED"));
    out.push_back(flag_report("odd-swap.combination", "eq:cott", res.combination_is_swap,
                              "value coefficient " + res.combo_value_coeff.str(), g.seed, "DERIVED"));
    return out;
}

ReportList construct_poly_reports(const std::string& which, const GlobalOpts& g, bool want_text) {
    ReportList out;
    VerifyOptions opt = make_opts(g, 2);
    TensorPoly2 poly;
    std::string anchor;
    if (which == "p") {
        poly = P_xy();
        anchor = "eq:unsw";
    } else if (which == "q") {
        poly = Q_xy();
        anchor = "eq:qab";
    } else if (which == "q-prime") {
        poly = balanced_Q_prime();
        anchor = "thm:teo";
    } else if (which == "capelli-swap") {
        poly = capelli_route_d2().H;
        anchor = "eq:adua";
    } else {
        throw PreconditionError("unknown construction '" + which + "'");
    }
    if (want_text) std::cout << print_poly(poly);
    out.push_back(verify_swap(poly, "construct." + which + ".swap", anchor, opt));
    out.push_back(verify_central(poly, "construct." + which + ".central", "thm:cca", opt));
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact swap-polynomial engine"};
    app.set_help_flag("--help", "print usage");
    app.require_subcommand(0, 1);
    GlobalOpts g;
    app.add_option("--format", g.format, "output format: json|tsv|human")->check(CLI::IsMember({"json", "tsv", "human"}));
    app.add_option("--threads", g.threads, "worker count (results are identical for any value)")
        ->check(CLI::PositiveNumber);
    app.add_option("--budget", g.budget, "work budget in monomial evaluations");
    bool list = false;
    app.add_flag("--list-checks", list, "enumerate check ids and anchors");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
    std::string selector = "all";
    int verify_d = 2;
    verify_cmd->add_option("selector", selector, "all|swap|central|identities|goldman|weingarten");
    verify_cmd->add_option("--d", verify_d, "matrix size")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--seed", g.seed, "random seed")->required();
    verify_cmd->add_option("--trials", g.trials, "evaluation points per check");

    // construct
    auto* construct_cmd = app.add_subcommand("construct", "build catalog polynomials and certificates");
    std::string which;
    int cons_d = 2;
    bool print_flag = false;
    int esss_h = 1, esss_k = 0;
    std::string esss_traces = "yy", esss_quads;
    construct_cmd->add_option("which", which, "p|q|q-prime|regev|even-swap|odd-swap|capelli-swap|esss")->required();
    construct_cmd->add_option("--d", cons_d, "matrix size");
    construct_cmd->add_option("--seed", g.seed, "random seed")->required();
    construct_cmd->add_option("--trials", g.trials, "evaluation points");
    construct_cmd->add_flag("--print-poly", print_flag, "print the polynomial in the text format");
    construct_cmd->add_option("--h", esss_h, "esss: number of degree-1 factor pairs");
    construct_cmd->add_option("--k", esss_k, "esss: number of degree-2 factors");
    construct_cmd->add_option("--traces", esss_traces, "esss: 2h trace picks, e.g. xy");
    construct_cmd->add_option("--quads", esss_quads, "esss: k picks from {detx,dety,trxy}, comma separated");

    // weingarten
    auto* wg_cmd = app.add_subcommand("weingarten", "print the Weingarten class function");
    int wg_n = 2, wg_d = 2;
    bool wg_scaled = false;
    wg_cmd->add_option("--n", wg_n, "symmetric group degree")->required()->check(CLI::PositiveNumber);
    wg_cmd->add_option("--d", wg_d, "matrix size")->required()->check(CLI::PositiveNumber);
    wg_cmd->add_flag("--scaled", wg_scaled, "multiply by (n!)^2");

    // two-by-two
    auto* tbt_cmd = app.add_subcommand("two-by-two", "structure checks for two 2x2 generic matrices");
    std::string tbt_which;
    int maxdeg = 7;
    tbt_cmd->add_option("which", tbt_which, "verify-identities|q-check|rewrite-teo|poincare|gram")->required();
    tbt_cmd->add_option("--maxdeg", maxdeg, "total degree bound for the series check");
    tbt_cmd->add_option("--seed", g.seed, "random seed")->required();
    tbt_cmd->add_option("--trials", g.trials, "evaluation points");

    // odd-coefficient
    auto* oc_cmd = app.add_subcommand("odd-coefficient", "tau_h coefficient for odd d = 2h-1");
    std::string h_range = "2..3";
    oc_cmd->add_option("--h-range", h_range, "inclusive range A..B")->required();

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "evaluate a polynomial file at a matrix assignment");
    std::string poly_file, at_file;
    eval_cmd->add_option("--poly", poly_file, "polynomial in the text format")->required();
    eval_cmd->add_option("--at", at_file, "matrix file: header 'd k', then k row-major matrices")->required();

    for (auto* sc : app.get_subcommands(nullptr)) sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return 0; // --help
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (list) {
            for (const auto& [id, anchor] : list_checks()) std::cout << id << "\t" << anchor << "\n";
            return 0;
        }
        if (*verify_cmd) {
            return emit(run_checks(selector, make_opts(g, verify_d)), g);
        }
        if (*construct_cmd) {
            if (which == "regev") {
                if (cons_d < 2 || cons_d > 3)
                    throw BudgetError("regev evaluation feasible for d in {2,3}", 0, g.budget);
                Rng rng = Rng::for_check(g.seed, "cli.regev");
                ReportList out;
                bool ok = true;
                std::string mult;
                for (int t = 0; t < std::max(1, g.trials); ++t) {
                    std::vector<Matrix> xs, ys;
                    for (int i = 0; i < cons_d * cons_d; ++i) xs.push_back(random_int_matrix(rng, cons_d));
                    for (int i = 0; i < cons_d * cons_d; ++i) ys.push_back(random_int_matrix(rng, cons_d));
                    auto res = regev_F_value(cons_d, xs, ys, {g.budget}, g.threads);
                    ok = ok && res.matches_predicted;
                    mult = res.multiplier.str();
                }
                CheckReport rep{"regev.value", "eq:RFaFF", ok ? "pass" : "fail", g.seed, {}, {"multiplier=" + mult},
                                {{"(-1)^(d-1)/(d!^2 (2d-1)) * TT * Id", "PAPER"}}, ""};
                out.push_back(rep);
                return emit(out, g);
            }
            if (which == "even-swap") return emit(even_swap_reports(cons_d, g), g);
            if (which == "odd-swap") return emit(odd_swap_reports(cons_d, g), g);
            if (which == "esss") {
                EsssChoices ch;
                for (char c : esss_traces) ch.traces.push_back(c == 'x' ? 0 : 1);
                std::istringstream qs(esss_quads);
                std::string tok;
                while (std::getline(qs, tok, ',')) {
                    if (tok.empty()) continue;
                    ch.quads.push_back(tok == "detx" ? 0 : (tok == "dety" ? 1 : 2));
                }
                const TensorPoly2 t = esss_family(esss_h, esss_k, ch);
                if (print_flag) std::cout << print_poly(t);
                ReportList out;
                out.push_back(verify_swap(t, "construct.esss.swap", "thm:esss", make_opts(g, 2)));
                return emit(out, g);
            }
            return emit(construct_poly_reports(which, g, print_flag), g);
        }
        if (*wg_cmd) {
            const ClassFunction wg = weingarten(wg_n, wg_d);
            Rational scale(1);
            if (wg_scaled) {
                const Integer f = Integer::factorial(wg_n);
                scale = Rational(f * f);
            }
            for (const auto& [mu, v] : wg.values()) std::cout << mu.str() << "\t" << (scale * v).str() << "\n";
            return 0;
        }
        if (*tbt_cmd) {
            VerifyOptions opt = make_opts(g, 2);
            if (tbt_which == "verify-identities") return emit(identity_suite(opt), g);
            if (tbt_which == "q-check") {
                ReportList out;
                out.push_back(verify_swap(Q_xy(), "two-by-two.q.swap", "eq:qab", opt));
                out.push_back(verify_central(Q_xy(), "two-by-two.q.central", "thm:cca", opt));
                CheckReport val{"two-by-two.q.value", "eq:val", "", g.seed, {}, {}, {}, ""};
                const bool exact =
                    [&] {
                        const auto entries = gen2::eval_tensor(Q_xy());
                        const CommPoly c = gen2::bracket_square_scalar();
                        const CommPoly ty = gen2::trace(gen2::generic_y());
                        const CommPoly scalar = ty * ty * c * c;
                        const TensorOperator sw = swap_operator(2);
                        for (int i = 0; i < 4; ++i)
                            for (int j = 0; j < 4; ++j)
                                if (!(entries[i * 4 + j] ==
                                      (sw.matrix().at(i, j).is_zero() ? CommPoly(8) : scalar)))
                                    return false;
                        return true;
                    }();
                val.status = exact ? "pass" : "fail";
                val.expected = {{"tr(y)^2 det([x,y])^2 t, proved on generic matrices", "PAPER"}};
                out.push_back(val);
                return emit(out, g);
            }
            if (tbt_which == "rewrite-teo") {
                ReportList out;
                out.push_back(verify_swap(balanced_Q_prime(), "two-by-two.q-prime.swap", "thm:teo", opt));
                CheckReport f{"two-by-two.q-prime-vs-q", "thm:teo.remark", "finding", g.seed, {}, {}, {}, ""};
                const bool same = is_tpi_generic_2x2(balanced_Q_prime() - Q_xy());
                f.measured = {same ? "equal as identities" : "different polynomials with equal values"};
                f.expected = {{"left open", "PAPER"}};
                out.push_back(f);
                return emit(out, g);
            }
            if (tbt_which == "poincare") {
                Rng rng = Rng::for_check(g.seed, "poincare");
                auto rep = poincare_check(maxdeg, rng);
                ReportList out;
                for (const auto& cell : rep.cells) {
                    CheckReport c{"poincare." + std::to_string(cell.i) + "." + std::to_string(cell.j),
                                  "eq:poin", cell.matches ? "pass" : "fail", g.seed, {},
                                  {"dim=" + std::to_string(cell.dim_r), "idcodim=" + std::to_string(cell.id_codim)},
                                  {{cell.series_r.str(), "PAPER"}, {cell.series_id.str(), "PAPER"}},
                                  ""};
                    out.push_back(c);
                }
                return emit(out, g);
            }
            if (tbt_which == "gram") {
                Rng rng = Rng::for_check(g.seed, "gram");
                ReportList out;
                bool det_ok = true, dual_ok = true, lambda_all = true;
                for (int t = 0; t < std::max(3, g.trials); ++t) {
                    auto rep = trace_gram(random_int_matrix(rng, 2), random_int_matrix(rng, 2));
                    det_ok = det_ok && rep.det_matches;
                    if (!rep.singular) dual_ok = dual_ok && rep.dual_basis_is_swap && rep.scaled_matches_P;
                    lambda_all = lambda_all && rep.lambda_as_printed;
                }
                out.push_back(flag_report("gram.determinant", "prop:Pdb", det_ok, "det D = -[x,y]^4", g.seed));
                out.push_back(flag_report("gram.dual-basis", "eq:ledua", dual_ok,
                                          "sum b_i ox b_i* = t; scaled copy equals P", g.seed));
                CheckReport lam{"gram.lambda-as-printed", "prop:Pdb", "finding", g.seed, {},
                                {lambda_all ? "matches" : "differs"},
                                {{"printed cofactor table", "PAPER"}},
                                "the printed entry table does not reproduce adj(D)/[x,y]^2"};
                out.push_back(lam);
                return emit(out, g);
            }
            throw PreconditionError("unknown two-by-two action '" + tbt_which + "'");
        }
        if (*oc_cmd) {
            const auto dots = h_range.find("..");
            if (dots == std::string::npos) throw PreconditionError("--h-range expects A..B");
            const int lo = std::stoi(h_range.substr(0, dots));
            const int hi = std::stoi(h_range.substr(dots + 2));
            ReportList out;
            for (int h = lo; h <= hi; ++h) {
                auto res = odd_coefficient(h);
                CheckReport rep{"odd-coefficient.h" + std::to_string(h), "eq:tau-h",
                                res.nonzero ? "pass" : "fail", g.seed, {}, {}, {}, ""};
                rep.measured = {"raw=" + res.sigma_route.str(),
                                "x(d+1)!^2=" + res.sigma_scaled_n.str(),
                                "xd!^2=" + res.sigma_scaled_d.str()};
                rep.expected = {{"nonzero", "DERIVED"}};
                if (res.label_defined && !res.routes_agree)
                    rep.note = "printed class-label formula gives " + res.label_scaled_n.str() +
                               " x(d+1)!^2 (degenerate cycle structure at this h)";
                out.push_back(rep);
            }
            return emit(out, g);
        }
        if (*eval_cmd) {
            std::ifstream pf(poly_file);
            if (!pf) throw Error("cannot open " + poly_file);
            std::stringstream buf;
            buf << pf.rdbuf();
            auto parsed = parse_poly(buf.str());
            std::ifstream mf(at_file);
            if (!mf) throw Error("cannot open " + at_file);
            const auto mats = parse_matrices(mf);
            const int d = mats.empty() ? 0 : mats[0].rows();
            Assignment a(d);
            std::set<Letter> vars = std::holds_alternative<NcPoly>(parsed)
                                        ? std::get<NcPoly>(parsed).variables()
                                        : std::get<TensorPoly2>(parsed).variables();
            if (vars.size() != mats.size())
                throw PreconditionError("matrix count differs from the polynomial's variable count");
            size_t i = 0;
            for (const auto& v : vars) a.set(v, mats[i++]);
            if (std::holds_alternative<NcPoly>(parsed)) {
                std::cout << eval(std::get<NcPoly>(parsed), a).str() << "\n";
            } else {
                std::cout << eval_tensor(std::get<TensorPoly2>(parsed), a).matrix().str() << "\n";
            }
            return 0;
        }
        std::cerr << "no subcommand given; see --help\n";
        return 2;
    } catch (const BudgetError& e) {
        std::cerr << "budget refusal: " << e.what() << "\n";
        return 3;
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
