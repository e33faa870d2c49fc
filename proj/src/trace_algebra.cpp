#include "swappoly/trace_algebra.hpp"

#include <sstream>

#include "swappoly/error.hpp"

namespace swappoly {

TPoly::TPoly(CommPoly p) : p_(std::move(p)) {
    if (p_.nvars() != 5) throw Error("TPoly lives in 5 generators");
}

TPoly TPoly::monomial(const std::array<int, 5>& exps, const Rational& c) {
    CommPoly p(5);
    p.add_term(std::vector<int>(exps.begin(), exps.end()), c);
    return TPoly(std::move(p));
}

std::vector<Rational> TPoly::generator_values(const Matrix& X, const Matrix& Y) {
    return {X.trace(), X.det(), Y.trace(), Y.det(), (X * Y).trace()};
}

Rational TPoly::eval(const Matrix& X, const Matrix& Y) const { return p_.eval(generator_values(X, Y)); }

std::pair<long, long> TPoly::bidegree_bound() const {
    const std::vector<long> wx = {1, 2, 0, 0, 1};
    const std::vector<long> wy = {0, 0, 1, 2, 1};
    return {p_.weighted_degree(wx), p_.weighted_degree(wy)};
}

std::string TPoly::str() const { return p_.str({"tr(x)", "det(x)", "tr(y)", "det(y)", "tr(xy)"}); }

SElement SElement::one() { return basis(0); }

SElement SElement::basis(int i) {
    SElement e;
    e.c_[i] = TPoly::one();
    return e;
}

SElement SElement::from_tpoly(const TPoly& t) {
    SElement e;
    e.c_[0] = t;
    return e;
}

SElement operator+(const SElement& a, const SElement& b) {
    SElement r;
    for (int i = 0; i < 4; ++i) r.c_[i] = a.c_[i] + b.c_[i];
    return r;
}

SElement operator-(const SElement& a, const SElement& b) {
    SElement r;
    for (int i = 0; i < 4; ++i) r.c_[i] = a.c_[i] - b.c_[i];
    return r;
}

SElement operator*(const TPoly& t, const SElement& a) {
    SElement r;
    for (int i = 0; i < 4; ++i) r.c_[i] = t * a.c_[i];
    return r;
}

SElement operator*(const Rational& c, const SElement& a) {
    SElement r;
    for (int i = 0; i < 4; ++i) r.c_[i] = c * a.c_[i];
    return r;
}

bool SElement::operator==(const SElement& o) const {
    for (int i = 0; i < 4; ++i)
        if (!(c_[i] == o.c_[i])) return false;
    return true;
}

Matrix SElement::eval(const Matrix& X, const Matrix& Y) const {
    Matrix acc(2, 2);
    acc += c_[0].eval(X, Y) * Matrix::identity(2);
    acc += c_[1].eval(X, Y) * X;
    acc += c_[2].eval(X, Y) * Y;
    acc += c_[3].eval(X, Y) * (X * Y);
    return acc;
}

std::string SElement::str() const {
    std::ostringstream os;
    const char* names[] = {"1", "x", "y", "xy"};
    bool first = true;
    for (int i = 0; i < 4; ++i) {
        if (c_[i].is_zero()) continue;
        os << (first ? "" : " + ") << "(" << c_[i].str() << ")*" << names[i];
        first = false;
    }
    return first ? "0" : os.str();
}

namespace {

TPoly g(int i) { return TPoly::generator(i); } // 0: tr x, 1: det x, 2: tr y, 3: det y, 4: tr xy

} // namespace

SElement s_right_mul_x(const SElement& a) {
    // basis times x, reduced by Cayley-Hamilton:
    //   1*x  = x
    //   x*x  = tr(x) x - det(x)
    //   y*x  = -xy + tr(x) y + tr(y) x + (tr(xy) - tr(x)tr(y))
    //   xy*x = tr(xy) x + det(x) y - det(x) tr(y)
    SElement r;
    const TPoly t = a.coeff(0), cx = a.coeff(1), cy = a.coeff(2), cxy = a.coeff(3);
    r.coeff(0) = Rational(-1) * (g(1) * cx) + (g(4) - g(0) * g(2)) * cy + Rational(-1) * (g(1) * g(2) * cxy);
    r.coeff(1) = t + g(0) * cx + g(2) * cy + g(4) * cxy;
    r.coeff(2) = g(0) * cy + g(1) * cxy;
    r.coeff(3) = Rational(-1) * cy;
    return r;
}

SElement s_right_mul_y(const SElement& a) {
    //   1*y  = y
    //   x*y  = xy
    //   y*y  = tr(y) y - det(y)
    //   xy*y = tr(y) xy - det(y) x
    SElement r;
    const TPoly t = a.coeff(0), cx = a.coeff(1), cy = a.coeff(2), cxy = a.coeff(3);
    r.coeff(0) = Rational(-1) * (g(3) * cy);
    r.coeff(1) = Rational(-1) * (g(3) * cxy);
    r.coeff(2) = t + g(2) * cy;
    r.coeff(3) = cx + g(2) * cxy;
    return r;
}

SElement s_multiply(const SElement& a, const SElement& b) {
    // a * (b0 + b1 x + b2 y + b3 xy) with each basis word folded on the right
    SElement ax = s_right_mul_x(a);
    SElement ay = s_right_mul_y(a);
    SElement axy = s_right_mul_y(ax);
    SElement r = b.coeff(0) * a + b.coeff(1) * ax + b.coeff(2) * ay + b.coeff(3) * axy;
    return r;
}

SElement nc_to_s(const NcPoly& p) {
    SElement acc;
    for (const auto& [w, c] : p.terms()) {
        SElement cur = SElement::one();
        for (const auto& l : w.letters()) {
            if (l == lx(1))
                cur = s_right_mul_x(cur);
            else if (l == ly(1))
                cur = s_right_mul_y(cur);
            else
                throw Error("nc_to_s accepts only the letters x1 and y1, got " + l.str());
        }
        acc = acc + c * cur;
    }
    return acc;
}

TPoly bracket_square_invariant() {
    const NcPoly x(Word::of({lx(1)})), y(Word::of({ly(1)}));
    const NcPoly z = x * y - y * x;
    const SElement s = nc_to_s(z * z);
    if (!s.is_t_multiple()) throw Error("[x,y]^2 did not reduce to a T-multiple");
    return s.coeff(0);
}

} // namespace swappoly
