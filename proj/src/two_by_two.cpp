#include "swappoly/two_by_two.hpp"

#include <mutex>

#include "swappoly/error.hpp"
#include "swappoly/evaluate.hpp"
#include "swappoly/rng.hpp"

namespace swappoly {

namespace gen2 {

namespace {
CommPoly cvar(int i) { return CommPoly::variable(8, i); }
CommPoly czero() { return CommPoly(8); }
CommPoly cone() { return CommPoly::constant(8, Rational(1)); }
} // namespace

Mat generic_x() { return {{cvar(0), cvar(1), cvar(2), cvar(3)}}; }
Mat generic_y() { return {{cvar(4), cvar(5), cvar(6), cvar(7)}}; }
Mat identity() { return {{cone(), czero(), czero(), cone()}}; }

Mat add(const Mat& a, const Mat& b) {
    Mat r;
    for (int i = 0; i < 4; ++i) r.e[i] = a.e[i] + b.e[i];
    return r;
}

Mat sub(const Mat& a, const Mat& b) {
    Mat r;
    for (int i = 0; i < 4; ++i) r.e[i] = a.e[i] - b.e[i];
    return r;
}

Mat mul(const Mat& a, const Mat& b) {
    Mat r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r.e[i * 2 + j] = a.e[i * 2] * b.e[j] + a.e[i * 2 + 1] * b.e[2 + j];
    return r;
}

Mat scale(const CommPoly& c, const Mat& a) {
    Mat r;
    for (int i = 0; i < 4; ++i) r.e[i] = c * a.e[i];
    return r;
}

CommPoly trace(const Mat& a) { return a.e[0] + a.e[3]; }

bool equal(const Mat& a, const Mat& b) {
    for (int i = 0; i < 4; ++i)
        if (!(a.e[i] == b.e[i])) return false;
    return true;
}

Mat eval_word(const Word& w) {
    static std::mutex mtx;
    static std::map<Word, Mat> memo;
    {
        std::scoped_lock lock(mtx);
        if (auto it = memo.find(w); it != memo.end()) return it->second;
    }
    Mat m = identity();
    if (!w.empty()) {
        // recurse on the prefix so shared prefixes are computed once
        std::vector<Letter> pre(w.letters().begin(), w.letters().end() - 1);
        const Letter last = w.letters().back();
        m = eval_word(Word(std::move(pre)));
        if (last == lx(1))
            m = mul(m, generic_x());
        else if (last == ly(1))
            m = mul(m, generic_y());
        else
            throw Error("generic evaluation accepts only the letters x1 and y1");
    }
    std::scoped_lock lock(mtx);
    return memo.emplace(w, std::move(m)).first->second;
}

std::array<CommPoly, 16> eval_tensor(const TensorPoly2& t) {
    std::array<CommPoly, 16> acc;
    acc.fill(czero());
    for (const auto& [k, c] : t.terms()) {
        const Mat a = eval_word(k.first);
        const Mat b = eval_word(k.second);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int p = 0; p < 2; ++p)
                    for (int q = 0; q < 2; ++q) {
                        const int row = i * 2 + p, col = j * 2 + q;
                        acc[row * 4 + col] = acc[row * 4 + col] + c * (a.e[i * 2 + j] * b.e[p * 2 + q]);
                    }
    }
    return acc;
}

CommPoly bracket_square_scalar() {
    static std::mutex m;
    static CommPoly cached;
    static bool have = false;
    std::scoped_lock lock(m);
    if (!have) {
        const Mat X = generic_x(), Y = generic_y();
        const Mat z = sub(mul(X, Y), mul(Y, X));
        const Mat z2 = mul(z, z);
        if (!(z2.e[1].is_zero() && z2.e[2].is_zero()) || !(z2.e[0] == z2.e[3]))
            throw Error("[x,y]^2 is not scalar over generic matrices");
        cached = z2.e[0];
        have = true;
    }
    return cached;
}

} // namespace gen2

bool is_tpi_generic_2x2(const TensorPoly2& t) {
    const auto entries = gen2::eval_tensor(t);
    for (const auto& e : entries)
        if (!e.is_zero()) return false;
    return true;
}

namespace {

NcPoly nx() { return NcPoly(Word::of({lx(1)})); }
NcPoly ny() { return NcPoly(Word::of({ly(1)})); }
NcPoly none_() { return NcPoly(Word()); }
NcPoly nz() { return nx() * ny() - ny() * nx(); }

} // namespace

TensorPoly2 P_xy() {
    const NcPoly z = nz();
    const NcPoly v1 = z * z + nx() * z * ny();
    TensorPoly2 p = TensorPoly2::simple(none_(), v1);
    p = p - TensorPoly2::simple(ny(), nx() * z);
    p = p - TensorPoly2::simple(nx(), z * ny());
    p = p + TensorPoly2::simple(nx() * ny(), z);
    return p;
}

TensorPoly2 Q_xy() {
    struct Term {
        int sign;
        const char* a;
        const char* b;
    };
    static const Term terms[] = {
        {+1, "xyyxy", "xyyxy"}, {-1, "xyyxy", "yyxxy"}, {-1, "xyyyx", "xyyxy"}, {+1, "xyyyx", "xyyyx"},
        {+1, "xyyyx", "yxyxy"}, {-1, "xyyyx", "yyxyx"}, {-1, "xyyyy", "xyxyx"}, {+1, "xyyyy", "yxxyx"},
        {-1, "yxyyx", "xyyxy"}, {-1, "yxyyx", "xyyyx"}, {+1, "yxyyx", "yxyxy"}, {+1, "yxyyx", "yyyxx"},
        {-1, "yxyyy", "xyxyx"}, {+1, "yxyyy", "xyyxx"}, {+1, "yxyyy", "yxyxx"}, {-1, "yxyyy", "yyxxx"},
        {+1, "yyxyx", "xyyxy"}, {-1, "yyxyx", "xyyyx"}, {-1, "yyxyx", "yxyxy"}, {+1, "yyxyx", "yxyyx"},
        {-1, "yyxyy", "xyxxy"}, {+1, "yyxyy", "xyxyx"}, {+1, "yyxyy", "yxxxy"}, {-1, "yyxyy", "yxxyx"},
        {+1, "yyyxx", "xyyyx"}, {-1, "yyyxx", "yxyxy"}, {+1, "yyyxx", "yyxxy"}, {-1, "yyyxx", "yyyxx"},
        {+1, "yyyxy", "xyxyx"}, {-1, "yyyxy", "xyyxx"}, {-1, "yyyxy", "yxyxx"}, {+1, "yyyxy", "yyxxx"},
        {-1, "yyyyx", "xxyyx"}, {+1, "yyyyx", "xyxxy"}, {+1, "yyyyx", "xyxyx"}, {-1, "yyyyx", "yxxxy"},
        {-1, "yyyyx", "yxyxx"}, {+1, "yyyyx", "yyxxx"}, {+1, "yyyyy", "xxyxx"}, {-1, "yyyyy", "xyxxx"},
    };
    TensorPoly2 q;
    for (const auto& t : terms) q.add_term(Word::from_xy(t.a), Word::from_xy(t.b), Rational(t.sign));
    return q;
}

namespace {

// bracket form of v1 = [x,y]^2 + x[x,y]y
BracketForm bracket_v1() {
    BracketForm f = bracket_z2_times(Word());
    f.add_term(Word::of({lx(1)}), Word::of({ly(1)}), Rational(1));
    return f;
}

std::array<int, 5> trace_exps(int trace_choice, int count = 1) {
    std::array<int, 5> e{0, 0, 0, 0, 0};
    e[trace_choice == 0 ? 0 : 2] = count;
    return e;
}

// All words in x, y with the given bidegree.
std::vector<Word> words_of_bidegree(int nx_, int ny_) {
    std::vector<Word> out;
    const int n = nx_ + ny_;
    std::vector<Letter> w(n, ly(1));
    auto rec = [&](auto&& self, int pos, int left_x) -> void {
        if (n - pos < left_x) return;
        if (pos == n) {
            if (left_x == 0) out.emplace_back(w);
            return;
        }
        if (left_x > 0) {
            w[pos] = lx(1);
            self(self, pos + 1, left_x - 1);
        }
        w[pos] = ly(1);
        self(self, pos + 1, left_x);
    };
    rec(rec, 0, nx_);
    return out;
}

// Particular exact solution of the underdetermined system
//   sum_i lambda_i * val(basis_i) == target value at every 2x2 pair.
// Solved from fixed integer points, then certified on generic matrices by
// the caller. Free variables are pinned to zero, so the output is a
// well-defined constant polynomial.
TensorPoly2 solve_balanced_completion(int trace_a, int trace_b) {
    // bidegrees: tr(a) tr(b) z^2 xy ox z
    int bx = 2 + 1 + 1 + (trace_a == 0) + (trace_b == 0);
    int by = 2 + 1 + 1 + (trace_a == 1) + (trace_b == 1);
    std::vector<std::pair<Word, Word>> basis;
    for (int i = 0; i <= 5; ++i) {
        const int j = 5 - i;            // left slot bidegree (i, j)
        const int ri = bx - i, rj = by - j;
        if (j < 0 || ri < 0 || rj < 0 || ri + rj != 5) continue;
        for (const auto& w : words_of_bidegree(i, j))
            for (const auto& w2 : words_of_bidegree(ri, rj)) basis.emplace_back(w, w2);
    }

    // Few points suffice (the caller certifies on generic matrices anyway);
    // entries stay small [-3,3] to keep the elimination light.
    Rng rng(0xE5517C0DEULL); // construction-internal, independent of user seeds
    const int npoints = 10;
    const int rows = npoints * 16;
    Matrix A(rows, static_cast<int>(basis.size()));
    Matrix rhs(rows, 1);
    const NcPoly zp = nz();
    const NcPoly xyp = nx() * ny();
    for (int p = 0; p < npoints; ++p) {
        Assignment a(2);
        a.set(lx(1), random_int_matrix(rng, 2, -3, 3));
        a.set(ly(1), random_int_matrix(rng, 2, -3, 3));
        const Matrix X = a.at(lx(1)), Y = a.at(ly(1));
        const Matrix z = X * Y - Y * X;
        const Rational c = -z.det();
        const Rational tra = (trace_a == 0 ? X : Y).trace();
        const Rational trb = (trace_b == 0 ? X : Y).trace();
        const Matrix target = (tra * trb * c) * kron(eval(xyp, a), eval(zp, a));
        for (size_t t = 0; t < basis.size(); ++t) {
            const Matrix k = kron(eval(basis[t].first, a), eval(basis[t].second, a));
            for (int i = 0; i < 16; ++i) A.at(p * 16 + i, static_cast<int>(t)) = k.at(i / 4, i % 4);
        }
        for (int i = 0; i < 16; ++i) rhs.at(p * 16 + i, 0) = target.at(i / 4, i % 4);
    }
    auto sol = A.solve_any(rhs);
    if (!sol) throw Error("balanced completion system inconsistent");
    TensorPoly2 e;
    for (size_t t = 0; t < basis.size(); ++t) e.add_term(basis[t].first, basis[t].second, sol->at(static_cast<int>(t), 0));
    return e;
}

// the displayed summands 1..3 (correct scalar placements), traces absorbed
TensorPoly2 absorbed_first_three(int trace_a, int trace_b) {
    std::array<int, 5> both{0, 0, 0, 0, 0};
    ++both[trace_a == 0 ? 0 : 2];
    ++both[trace_b == 0 ? 0 : 2];

    const NcPoly t1l = absorb_invariant(trace_exps(trace_a), bracket_z2_times(Word()));
    const NcPoly t1r = absorb_invariant(trace_exps(trace_b), bracket_v1());
    const NcPoly t2l = bracket_z2_times(Word::of({ly(1)})).expand();
    const NcPoly t2r = absorb_invariant(both, BracketForm::single(Word::of({lx(1)}), Word()));
    const NcPoly t3l = bracket_z2_times(Word::of({lx(1)})).expand();
    const NcPoly t3r = absorb_invariant(both, BracketForm::single(Word(), Word::of({ly(1)})));

    TensorPoly2 out = TensorPoly2::simple(t1l, t1r);
    out = out - TensorPoly2::simple(t2l, t2r);
    out = out - TensorPoly2::simple(t3l, t3r);
    return out;
}

// generic certification: value == tr(a)tr(b) c^2 * swap
void certify_degree10(const TensorPoly2& t, int trace_a, int trace_b) {
    const CommPoly c = gen2::bracket_square_scalar();
    const CommPoly tra = gen2::trace(trace_a == 0 ? gen2::generic_x() : gen2::generic_y());
    const CommPoly trb = gen2::trace(trace_b == 0 ? gen2::generic_x() : gen2::generic_y());
    const CommPoly scalar = tra * trb * c * c;
    const auto entries = gen2::eval_tensor(t);
    const TensorOperator sw = swap_operator(2);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const CommPoly want = sw.matrix().at(i, j).is_zero() ? CommPoly(8) : scalar;
            if (!(entries[i * 4 + j] == want))
                throw Error("balanced degree-10 rewrite failed generic certification");
        }
}

} // namespace

TensorPoly2 teo_displayed_split() {
    // all four summands exactly as displayed; the last one moves a bracket
    // factor across the tensor sign, which is not value-preserving
    TensorPoly2 out = absorbed_first_three(1, 1);
    const NcPoly t4l = absorb_invariant(trace_exps(1), BracketForm::single(Word(), Word::of({lx(1), ly(1)})));
    const NcPoly t4r = absorb_invariant(trace_exps(1), bracket_z2_times(Word()));
    out = out + TensorPoly2::simple(t4l, t4r);
    return out;
}

TensorPoly2 balanced_degree10(int trace_a, int trace_b) {
    static std::mutex mtx;
    static std::map<std::pair<int, int>, TensorPoly2> memo;
    {
        std::scoped_lock lock(mtx);
        if (auto it = memo.find({trace_a, trace_b}); it != memo.end()) return it->second;
    }
    TensorPoly2 out = absorbed_first_three(trace_a, trace_b) + solve_balanced_completion(trace_a, trace_b);
    certify_degree10(out, trace_a, trace_b);
    std::scoped_lock lock(mtx);
    return memo.emplace(std::make_pair(trace_a, trace_b), std::move(out)).first->second;
}

const TensorPoly2& balanced_Q_prime() {
    static const TensorPoly2 qp = balanced_degree10(1, 1);
    return qp;
}

TPoly esss_invariant(const EsssChoices& choices) {
    TPoly a = TPoly::one();
    for (int t : choices.traces) a = a * TPoly::generator(t == 0 ? 0 : 2);
    for (int q : choices.quads) a = a * TPoly::generator(q == 0 ? 1 : (q == 1 ? 3 : 4));
    return a;
}

TensorPoly2 esss_family(int h, int k, const EsssChoices& choices) {
    if (h < 1) throw PreconditionError("esss: need 2h > 0 degree-1 factors");
    if (!(k % 2 == 0 || h >= 2))
        throw PreconditionError("esss: hypotheses require k even, or k odd with h >= 2");
    if (static_cast<int>(choices.traces.size()) != 2 * h || static_cast<int>(choices.quads.size()) != k)
        throw PreconditionError("esss: choice lists must have sizes 2h and k");

    if (h == 1 && k == 0) return balanced_degree10(choices.traces[0], choices.traces[1]);

    // general case: [x,y]^2 seeds the left bracket whole; the invariant
    // factors split greedily (quadratics first) to even out the degrees
    struct PTerm {
        Word u;
        BracketForm v;
        int sign;
    };
    const std::vector<PTerm> pterms = {
        {Word(), bracket_v1(), +1},
        {Word::of({ly(1)}), BracketForm::single(Word::of({lx(1)}), Word()), -1},
        {Word::of({lx(1)}), BracketForm::single(Word(), Word::of({ly(1)})), -1},
        {Word::of({lx(1), ly(1)}), bracket_z(), +1},
    };

    TensorPoly2 out;
    for (const auto& pt : pterms) {
        const int deg_u = pt.u.degree();
        int target = h + k - deg_u; // degree of invariant factors joining the left slot
        if (target < 0) throw Error("esss: infeasible degree split");
        std::array<int, 5> left{0, 0, 0, 0, 0}, right{0, 0, 0, 0, 0};
        for (int q : choices.quads) {
            const int gi = q == 0 ? 1 : (q == 1 ? 3 : 4);
            if (target >= 2) {
                ++left[gi];
                target -= 2;
            } else {
                ++right[gi];
            }
        }
        for (int t : choices.traces) {
            const int gi = t == 0 ? 0 : 2;
            if (target >= 1) {
                ++left[gi];
                target -= 1;
            } else {
                ++right[gi];
            }
        }
        if (target != 0) throw Error("esss: degree split failed");
        const NcPoly lhs = absorb_invariant(left, bracket_z2_times(pt.u));
        const NcPoly rhs = absorb_invariant(right, pt.v);
        if (pt.sign > 0)
            out = out + TensorPoly2::simple(lhs, rhs);
        else
            out = out - TensorPoly2::simple(lhs, rhs);
    }
    return out;
}

TraceGramReport trace_gram(const Matrix& X, const Matrix& Y) {
    if (X.rows() != 2 || Y.rows() != 2) throw DimensionError("trace_gram works on 2x2 pairs");
    TraceGramReport rep{Matrix(4, 4), Rational(0), Rational(0), false, Matrix(4, 4),
                        false, false, false, false};
    const Matrix XY = X * Y;
    const std::array<Matrix, 4> b = {Matrix::identity(2), X, Y, XY};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) rep.gram.at(i, j) = (b[i] * b[j]).trace();
    rep.det = rep.gram.det();
    const Matrix z = XY - Y * X;
    rep.bracket_square = -z.det();
    rep.det_matches = rep.det == -(rep.bracket_square * rep.bracket_square);
    rep.adjugate = rep.gram.adjugate();

    // Lambda as printed, with the printed quantity A
    const auto gv = TPoly::generator_values(X, Y);
    const Rational g1 = gv[0], g2 = gv[1], g3 = gv[2], g4 = gv[3], g5 = gv[4];
    const Rational A = g2 * g3 * g3 - g5 * g1 * g3 + g1 * g1 * g4 - Rational(2) * g2 * g4 + g5 * g5;
    Matrix lam(4, 4);
    const Rational vals[4][4] = {
        {Rational(2) * A, -g1 * g4, -g2 * g3, g1 * g3 - g5},
        {-g1 * g4, Rational(2) * g4, g5, -g3},
        {-g2 * g3, g5, Rational(2) * g2, -g1},
        {g1 * g3 - g5, -g3, -g1, Rational(2)},
    };
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) lam.at(i, j) = vals[i][j];
    rep.lambda_as_printed = rep.adjugate == rep.bracket_square * lam;

    rep.singular = rep.det.is_zero();
    if (!rep.singular) {
        const auto inv = rep.gram.inverse();
        TensorOperator acc(2, 2);
        for (int i = 0; i < 4; ++i) {
            Matrix dual(2, 2);
            for (int k2 = 0; k2 < 4; ++k2) dual += inv->at(i, k2) * b[k2];
            acc = acc + kron(TensorOperator::from_matrix(b[i]), TensorOperator::from_matrix(dual));
        }
        rep.dual_basis_is_swap = acc == swap_operator(2);
        Assignment a(2);
        a.set(lx(1), X);
        a.set(ly(1), Y);
        rep.scaled_matches_P = rep.bracket_square * acc == eval_tensor(P_xy(), a);
    }
    return rep;
}

} // namespace swappoly
