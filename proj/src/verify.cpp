#include "swappoly/verify.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "swappoly/character.hpp"
#include "swappoly/constructions.hpp"
#include "swappoly/error.hpp"
#include "swappoly/evaluate.hpp"
#include "swappoly/identity_testing.hpp"
#include "swappoly/rng.hpp"
#include "swappoly/two_by_two.hpp"
#include "swappoly/weingarten.hpp"

namespace swappoly {

namespace {

Assignment random_point(Rng& rng, int d, const std::set<Letter>& vars) {
    Assignment a(d);
    for (const auto& v : vars) a.set(v, random_int_matrix(rng, d));
    return a;
}

void set_status(CheckReport& r, bool ok) { r.status = ok ? "pass" : "fail"; }

} // namespace

CheckReport verify_swap(const TensorPoly2& t, const std::string& id, const std::string& anchor,
                        const VerifyOptions& opt) {
    if (opt.trials < 3) throw PreconditionError("verify_swap needs trials >= 3");
    CheckReport rep;
    rep.check = id;
    rep.anchor = anchor;
    rep.seed = opt.seed;
    Rng rng = Rng::for_check(opt.seed, id);
    const auto vars = t.variables();
    bool ok = true, some_b = false;
    for (int i = 0; i < opt.trials; ++i) {
        Assignment a = random_point(rng, opt.d, vars);
        const auto dec = decompose_sigma2(eval_tensor(t, a));
        rep.points.push_back("p" + std::to_string(i));
        rep.measured.push_back("b=" + dec.b.str());
        if (!dec.a.is_zero() || !dec.residual_zero) {
            ok = false;
            rep.note += "non-swap value at point " + std::to_string(i) + " (a=" + dec.a.str() + "); ";
        }
        if (!dec.b.is_zero()) some_b = true;
    }
    rep.expected.push_back({"a=0, residual=0, b!=0 somewhere", "PAPER"});
    set_status(rep, ok && some_b);
    if (ok && !some_b) rep.note += "vanished at every sampled point; ";
    return rep;
}

CheckReport verify_central(const TensorPoly2& t, const std::string& id, const std::string& anchor,
                           const VerifyOptions& opt) {
    if (opt.trials < 3) throw PreconditionError("verify_central needs trials >= 3");
    CheckReport rep;
    rep.check = id;
    rep.anchor = anchor;
    rep.seed = opt.seed;
    Rng rng = Rng::for_check(opt.seed, id);
    const Letter zeta = lzeta(1);
    const NcPoly central = t.insert_between(zeta);
    auto vars = t.variables();
    bool ok = true;
    for (int i = 0; i < opt.trials; ++i) {
        Assignment a = random_point(rng, opt.d, vars);
        a.set(zeta, random_int_matrix(rng, opt.d));
        const Matrix v = eval(central, a);
        rep.points.push_back("p" + std::to_string(i));
        if (!v.is_scalar()) {
            ok = false;
            rep.note += "non-scalar value at point " + std::to_string(i) + "; ";
        }
        rep.measured.push_back("scalar=" + v.at(0, 0).str());
        for (int k = 0; k < 10; ++k) {
            a.set(zeta, random_traceless_matrix(rng, opt.d));
            if (!eval(central, a).is_zero()) {
                ok = false;
                rep.note += "nonzero on a traceless argument at point " + std::to_string(i) + "; ";
                break;
            }
        }
    }
    rep.expected.push_back({"scalar matrix; 0 on traceless arguments", "PAPER"});
    set_status(rep, ok);
    return rep;
}

ReportList goldman_properties(const VerifyOptions& opt) {
    ReportList out;
    const int d = opt.d;
    Rng rng = Rng::for_check(opt.seed, "goldman");
    const TensorOperator sw = swap_operator(d);
    const TensorOperator id2 = TensorOperator::identity(d, 2);

    CheckReport square{"goldman.square", "eq:Gol1", "", opt.seed, {}, {}, {{"t^2 = 1", "PAPER"}}, ""};
    set_status(square, sw * sw == id2);
    out.push_back(square);

    CheckReport conj{"goldman.conjugation", "eq:Gol1", "", opt.seed, {}, {}, {{"t(a ox b)t = b ox a", "PAPER"}}, ""};
    bool ok = true;
    for (int i = 0; i < opt.trials; ++i) {
        const Matrix a = random_int_matrix(rng, d), b = random_int_matrix(rng, d);
        const TensorOperator ab = kron(TensorOperator::from_matrix(a), TensorOperator::from_matrix(b));
        const TensorOperator ba = kron(TensorOperator::from_matrix(b), TensorOperator::from_matrix(a));
        ok = ok && sw * ab * sw == ba;
        conj.points.push_back("p" + std::to_string(i));
    }
    set_status(conj, ok);
    out.push_back(conj);

    CheckReport amb{"goldman.sign-ambiguity", "rem:nou", "", opt.seed, {}, {},
                    {{"-t satisfies both relations", "PAPER"}}, ""};
    const TensorOperator msw = Rational(-1) * sw;
    bool amb_ok = msw * msw == id2;
    {
        const Matrix a = random_int_matrix(rng, d), b = random_int_matrix(rng, d);
        const TensorOperator ab = kron(TensorOperator::from_matrix(a), TensorOperator::from_matrix(b));
        const TensorOperator ba = kron(TensorOperator::from_matrix(b), TensorOperator::from_matrix(a));
        amb_ok = amb_ok && msw * ab * msw == ba;
    }
    set_status(amb, amb_ok);
    out.push_back(amb);

    CheckReport tr{"goldman.trace", "eq:Gol1", "", opt.seed, {}, {"tr=" + sw.trace().str()},
                   {{std::to_string(d), "TRIVIAL"}}, ""};
    set_status(tr, sw.trace() == Rational(d));
    out.push_back(tr);
    return out;
}

ReportList identity_suite(const VerifyOptions& opt) {
    ReportList out;
    Rng rng = Rng::for_check(opt.seed, "identities");
    const int pts = std::max(5, opt.trials);

    auto run = [&](const std::string& id, const std::string& anchor, auto&& fn, const char* prov = "PAPER") {
        CheckReport rep{id, anchor, "", opt.seed, {}, {}, {{"exact equality", prov}}, ""};
        bool ok = true;
        for (int i = 0; i < pts; ++i) {
            if (!fn(rng)) {
                ok = false;
                rep.note += "failed at point " + std::to_string(i) + "; ";
            }
            rep.points.push_back("p" + std::to_string(i));
        }
        set_status(rep, ok);
        out.push_back(rep);
    };

    auto pair2 = [](Rng& rng) {
        return std::make_pair(random_int_matrix(rng, 2), random_int_matrix(rng, 2));
    };

    run("ii.bracket-x", "eq:ii", [&](Rng& g) {
        auto [x, y] = pair2(g);
        const Matrix z = x * y - y * x;
        return z * x == x.trace() * z - x * z;
    });
    run("ii.bracket-y", "eq:ii", [&](Rng& g) {
        auto [x, y] = pair2(g);
        const Matrix z = x * y - y * x;
        return z * y == y.trace() * z - y * z;
    });
    run("ii.det-x", "eq:ii", [&](Rng& g) {
        auto [x, y] = pair2(g);
        const Matrix z = x * y - y * x;
        return x.det() * z == x * z * x;
    });
    run("ii.det-y", "eq:ii", [&](Rng& g) {
        auto [x, y] = pair2(g);
        const Matrix z = x * y - y * x;
        return y.det() * z == y * z * y;
    });
    run("ii.trace-xy", "eq:ii", [&](Rng& g) {
        auto [x, y] = pair2(g);
        const Matrix z = x * y - y * x;
        return (x * y).trace() * z == x * y * x * y - y * x * y * x;
    });
    run("cayley-hamilton.square", "eq:polCH", [&](Rng& g) {
        auto [x, y] = pair2(g);
        return x * x == x.trace() * x - x.det() * Matrix::identity(2) &&
               y * y == y.trace() * y - y.det() * Matrix::identity(2);
    });
    run("cayley-hamilton.product", "eq:polCH", [&](Rng& g) {
        auto [x, y] = pair2(g);
        return y * x == Rational(-1) * (x * y) + x.trace() * y + y.trace() * x +
                            ((x * y).trace() - x.trace() * y.trace()) * Matrix::identity(2);
    });
    run("cayley-hamilton.degenerate", "eq:polCH", [&](Rng& g) {
        const Matrix x = random_int_matrix(g, 2);
        // x = y: both sides reduce consistently
        return x * x == Rational(-1) * (x * x) + Rational(2) * x.trace() * x +
                            ((x * x).trace() - x.trace() * x.trace()) * Matrix::identity(2);
    }, "TRIVIAL");
    run("assotr0", "eq:assotr0", [&](Rng& g) {
        const Matrix z = random_int_matrix(g, 2), x1 = random_int_matrix(g, 2),
                     x2 = random_int_matrix(g, 2), x3 = random_int_matrix(g, 2);
        const Matrix c12 = x1 * x2 - x2 * x1;
        const Matrix lhs = (z * c12 + c12 * z) * x3 - x3 * (z * c12 + c12 * z);
        const Matrix rhs = z.trace() * (c12 * x3 - x3 * c12);
        return lhs == rhs;
    });
    run("assotr0.identity-z", "eq:assotr0", [&](Rng& g) {
        const Matrix x1 = random_int_matrix(g, 2), x2 = random_int_matrix(g, 2),
                     x3 = random_int_matrix(g, 2);
        const Matrix c12 = x1 * x2 - x2 * x1;
        const Matrix lhs = (c12 + c12) * x3 - x3 * (c12 + c12); // z = Id
        return lhs == Rational(2) * (c12 * x3 - x3 * c12);
    }, "TRIVIAL");
    run("assotr", "eq:assotr", [&](Rng& g) {
        const Matrix z = random_int_matrix(g, 2), x = random_int_matrix(g, 2),
                     y = random_int_matrix(g, 2);
        const Matrix c = x * y - y * x;
        const Matrix t1 = z * x * c + x * c * z;
        const Matrix m1 = t1 * y - y * t1;
        const Matrix t2 = z * c + c * z;
        const Matrix m2 = x * (t2 * y - y * t2);
        const Matrix lhs = z.trace() * (c * c);
        const Matrix expand = z * x * c * y - y * z * x * c - x * z * c * y + x * y * z * c + c * c * z;
        return lhs == m1 - m2 && lhs == expand;
    });
    run("conductor.regev-d2", "thm:teF.conductor", [&](Rng& g) {
        std::vector<Matrix> xs, ys;
        for (int i = 0; i < 4; ++i) xs.push_back(random_int_matrix(g, 2));
        for (int i = 0; i < 4; ++i) ys.push_back(random_int_matrix(g, 2));
        return regev_conductor_identity(random_int_matrix(g, 2), xs, ys, opt.budget, opt.threads);
    });
    run("qzer", "rem:qzer", [&](Rng& g) {
        // tr(a Id + b t) = a d^2 + b d vanishes iff b = -d a, and
        // tr(t (a Id + b t)) = a d + b d^2 vanishes iff a = -d b (the printed
        // remark states these two conditions transposed, see the finding)
        const int d = opt.d;
        const Rational a(g.uniform(-20, 20), g.uniform(1, 7));
        const TensorOperator T =
            a * TensorOperator::identity(d, 2) + (Rational(-d) * a) * swap_operator(d);
        const TensorOperator U =
            (Rational(-d) * a) * TensorOperator::identity(d, 2) + a * swap_operator(d);
        return T.trace().is_zero() && (swap_operator(d) * U).trace().is_zero();
    });
    {
        CheckReport f{"qzer.printed-conditions", "rem:qzer", "finding", opt.seed, {}, {},
                      {{"tr = 0 iff a = -d b; tr(t .) = 0 iff b = -d a", "PAPER"}},
                      "the two printed conditions are transposed: tr(a Id + b t) = a d^2 + b d = 0 "
                      "forces b = -d a, and tr(t(a Id + b t)) = 0 forces a = -d b"};
        out.push_back(f);
    }
    run("dual-basis.d2", "eq:ledua", [&](Rng& g) {
        Assignment a(2);
        a.set(lx(1), random_int_matrix(g, 2));
        a.set(ly(1), random_int_matrix(g, 2));
        const std::vector<Word> mon = {Word(), Word::of({lx(1)}), Word::of({ly(1)}),
                                       Word::of({lx(1), ly(1)})};
        auto cert = dual_basis_swap(mon, a);
        return cert.gram_singular || cert.identity_ok; // singular points are resampled by density
    });
    run("dual-basis.d3", "eq:ledua", [&](Rng& g) {
        Assignment a(3);
        a.set(lx(1), random_int_matrix(g, 3));
        a.set(ly(1), random_int_matrix(g, 3));
        const std::vector<Word> mon = {Word(),
                                       Word::of({lx(1)}),
                                       Word::of({ly(1)}),
                                       Word::of({lx(1), lx(1)}),
                                       Word::of({lx(1), ly(1)}),
                                       Word::of({ly(1), lx(1)}),
                                       Word::of({ly(1), ly(1)}),
                                       Word::of({lx(1), lx(1), ly(1)}),
                                       Word::of({lx(1), ly(1), ly(1)})};
        auto cert = dual_basis_swap(mon, a);
        return cert.gram_singular || cert.identity_ok;
    });
    return out;
}

ReportList weingarten_checks(const VerifyOptions& opt) {
    ReportList out;

    {
        CheckReport rep{"weingarten.small-values", "eq:wein", "", opt.seed, {}, {}, {}, ""};
        const ClassFunction wg = weingarten(2, 2);
        rep.measured = {wg.at(Partition({1, 1})).str(), wg.at(Partition({2})).str()};
        rep.expected = {{"1/3", "PAPER"}, {"-1/6", "PAPER"}};
        set_status(rep, wg.at(Partition({1, 1})) == Rational(1, 3) && wg.at(Partition({2})) == Rational(-1, 6));
        out.push_back(rep);
    }
    {
        CheckReport rep{"weingarten.inverse", "eq:CW", "", opt.seed, {}, {}, {{"op(Phi(1) * Wg) = Id", "PAPER"}}, ""};
        bool ok = true;
        for (int n = 2; n <= 4; ++n)
            for (int d = 2; d <= 4; ++d) {
                if (!acts_as_identity(phi_of_identity(n, d) * class_to_algebra(weingarten(n, d)), d)) {
                    ok = false;
                    rep.note += "failed at (n,d)=(" + std::to_string(n) + "," + std::to_string(d) + "); ";
                }
            }
        set_status(rep, ok);
        out.push_back(rep);
    }
    {
        // informational comparison against the printed (d+1)!^2 rows
        CheckReport rep{"weingarten.printed-tables", "tables:b-lambda", "finding", opt.seed, {}, {}, {}, ""};
        const ClassFunction wg = weingarten(6, 5);
        const Rational scale{Integer::factorial(6) * Integer::factorial(6)};
        const Rational got = scale * wg.at(Partition({1, 1, 1, 1, 1, 1}));
        rep.measured = {got.str()};
        rep.expected = {{"5227/168", "PAPER"}};
        rep.note = "computed " + got.str() +
                   "; the printed 5227/168 duplicates the d=4 row's 1^5 entry; the computed class "
                   "function passes op(Phi(1) Wg)=Id at (n,d)=(6,5)";
        out.push_back(rep);
    }
    return out;
}

namespace {

TensorPoly2 st5_slot_poly() {
    TensorPoly2 t;
    const NcPoly st5 = standard_poly(5);
    for (const auto& [w, c] : st5.terms()) t.add_term(w, Word(), c);
    return t;
}

} // namespace

ReportList swap_catalog_checks(const VerifyOptions& opt) {
    ReportList out;
    out.push_back(verify_swap(P_xy(), "swap.P", "eq:unsw", opt));
    out.push_back(verify_swap(Q_xy(), "swap.Q", "eq:qab", opt));
    out.push_back(verify_swap(balanced_Q_prime(), "swap.Q-prime", "thm:teo", opt));
    out.push_back(verify_swap(capelli_route_d2().H, "swap.capelli-H", "eq:adua", opt));
    out.push_back(verify_swap(esss_family(1, 2, EsssChoices{{0, 1}, {0, 2}}), "swap.esss-1-2", "thm:esss", opt));
    {
        // the TPI verdict on Q' - Q, decided exactly on generic matrices
        CheckReport rep{"swap.q-prime-vs-q", "thm:teo.remark", "finding", opt.seed, {}, {}, {}, ""};
        const bool same = is_tpi_generic_2x2(balanced_Q_prime() - Q_xy());
        rep.measured = {same ? "Q' - Q is a tensor polynomial identity" : "Q' differs from Q as a polynomial"};
        rep.expected = {{"either outcome (left open)", "PAPER"}};
        out.push_back(rep);
    }
    {
        // a deliberately non-swap polynomial must fail
        TensorPoly2 bad;
        bad.add_term(Word::of({lx(1)}), Word::of({lx(1)}), Rational(1));
        CheckReport rep = verify_swap(bad, "swap.negative-control", "def:swa", opt);
        const bool failed = rep.status == "fail";
        rep.status = failed ? "pass" : "fail";
        rep.expected = {{"detected as non-swap", "TRIVIAL"}};
        rep.note = failed ? "witness found as expected" : "non-swap polynomial slipped through";
        out.push_back(rep);
    }
    return out;
}

ReportList central_catalog_checks(const VerifyOptions& opt) {
    ReportList out;
    out.push_back(verify_central(P_xy(), "central.P", "thm:cca", opt));
    out.push_back(verify_central(Q_xy(), "central.Q", "thm:cca", opt));
    out.push_back(verify_central(balanced_Q_prime(), "central.Q-prime", "thm:cca", opt));
    out.push_back(verify_central(capelli_route_d2().H, "central.capelli-H", "eq:adua0", opt));
    {
        // a multilinear identity evaluates to a swap polynomial with b = 0;
        // the central companion of St5 ox 1 must vanish identically
        CheckReport rep{"central.st5-identity", "eq:st", "", opt.seed, {}, {},
                        {{"proved identity", "DERIVED"}}, ""};
        auto verdict = is_tpi(st5_slot_poly(), 2, opt.trials, opt.seed);
        rep.measured = {to_string(verdict.status)};
        set_status(rep, verdict.status == TpiStatus::ProvedIdentity);
        out.push_back(rep);
    }
    return out;
}

ReportList run_checks(const std::string& selector, const VerifyOptions& opt) {
    ReportList out;
    auto want = [&](const std::string& s) { return selector == "all" || selector == s; };
    if (want("goldman")) {
        auto r = goldman_properties(opt);
        out.insert(out.end(), r.begin(), r.end());
    }
    if (want("identities")) {
        auto r = identity_suite(opt);
        out.insert(out.end(), r.begin(), r.end());
    }
    if (want("weingarten")) {
        auto r = weingarten_checks(opt);
        out.insert(out.end(), r.begin(), r.end());
    }
    if (want("swap")) {
        auto r = swap_catalog_checks(opt);
        out.insert(out.end(), r.begin(), r.end());
    }
    if (want("central")) {
        auto r = central_catalog_checks(opt);
        out.insert(out.end(), r.begin(), r.end());
    }
    if (out.empty()) throw PreconditionError("unknown check selector '" + selector + "'");
    std::sort(out.begin(), out.end(), [](const CheckReport& a, const CheckReport& b) { return a.check < b.check; });
    return out;
}

std::vector<std::pair<std::string, std::string>> list_checks() {
    return {
        {"central.P", "thm:cca"},
        {"central.Q", "thm:cca"},
        {"central.Q-prime", "thm:cca"},
        {"central.capelli-H", "eq:adua0"},
        {"central.st5-identity", "eq:st"},
        {"goldman.conjugation", "eq:Gol1"},
        {"goldman.sign-ambiguity", "rem:nou"},
        {"goldman.square", "eq:Gol1"},
        {"goldman.trace", "eq:Gol1"},
        {"ii.bracket-x", "eq:ii"},
        {"ii.bracket-y", "eq:ii"},
        {"ii.det-x", "eq:ii"},
        {"ii.det-y", "eq:ii"},
        {"ii.trace-xy", "eq:ii"},
        {"cayley-hamilton.square", "eq:polCH"},
        {"cayley-hamilton.product", "eq:polCH"},
        {"cayley-hamilton.degenerate", "eq:polCH"},
        {"assotr0", "eq:assotr0"},
        {"assotr0.identity-z", "eq:assotr0"},
        {"assotr", "eq:assotr"},
        {"conductor.regev-d2", "thm:teF.conductor"},
        {"qzer", "rem:qzer"},
        {"qzer.printed-conditions", "rem:qzer"},
        {"dual-basis.d2", "eq:ledua"},
        {"dual-basis.d3", "eq:ledua"},
        {"swap.P", "eq:unsw"},
        {"swap.Q", "eq:qab"},
        {"swap.Q-prime", "thm:teo"},
        {"swap.capelli-H", "eq:adua"},
        {"swap.esss-1-2", "thm:esss"},
        {"swap.q-prime-vs-q", "thm:teo.remark"},
        {"swap.negative-control", "def:swa"},
        {"weingarten.small-values", "eq:wein"},
        {"weingarten.inverse", "eq:CW"},
        {"weingarten.printed-tables", "tables:b-lambda"},
    };
}

bool all_passed(const ReportList& reports) {
    for (const auto& r : reports)
        if (r.status == "fail") return false;
    return true;
}

std::string to_json(const ReportList& reports) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) {
        nlohmann::json j;
        j["check"] = r.check;
        j["anchor"] = r.anchor;
        j["status"] = r.status;
        j["seed"] = r.seed;
        j["points"] = r.points;
        j["measured"] = r.measured;
        nlohmann::json ex = nlohmann::json::array();
        for (const auto& e : r.expected) ex.push_back({{"value", e.value}, {"provenance", e.provenance}});
        j["expected"] = ex;
        j["note"] = r.note;
        arr.push_back(j);
    }
    return arr.dump(2) + "\n";
}

std::string to_tsv(const ReportList& reports) {
    std::ostringstream os;
    os << "check\tanchor\tstatus\tseed\tmeasured\texpected\tnote\n";
    for (const auto& r : reports) {
        os << r.check << "\t" << r.anchor << "\t" << r.status << "\t" << r.seed << "\t";
        for (size_t i = 0; i < r.measured.size(); ++i) os << (i ? ";" : "") << r.measured[i];
        os << "\t";
        for (size_t i = 0; i < r.expected.size(); ++i)
            os << (i ? ";" : "") << r.expected[i].value << "[" << r.expected[i].provenance << "]";
        os << "\t" << r.note << "\n";
    }
    return os.str();
}

std::string to_human(const ReportList& reports) {
    std::ostringstream os;
    for (const auto& r : reports) {
        std::string tag = r.status == "pass" ? "PASS" : (r.status == "fail" ? "FAIL" : "NOTE");
        os << "[" << tag << "] " << r.check << " (" << r.anchor << ")";
        if (!r.measured.empty()) {
            os << "  measured:";
            for (const auto& m : r.measured) os << " " << m;
        }
        if (!r.expected.empty()) {
            os << "  expected:";
            for (const auto& e : r.expected) os << " " << e.value << "[" << e.provenance << "]";
        }
        if (!r.note.empty()) os << "  -- " << r.note;
        os << "\n";
    }
    return os.str();
}

std::string render(const ReportList& reports, const std::string& format) {
    if (format == "json") return to_json(reports);
    if (format == "tsv") return to_tsv(reports);
    if (format == "human") return to_human(reports);
    throw PreconditionError("unknown output format '" + format + "'");
}

} // namespace swappoly
