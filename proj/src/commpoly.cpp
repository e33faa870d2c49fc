#include "swappoly/commpoly.hpp"

#include <sstream>

#include "swappoly/error.hpp"

namespace swappoly {

CommPoly CommPoly::constant(int nvars, const Rational& c) {
    CommPoly p(nvars);
    p.add_term(std::vector<int>(nvars, 0), c);
    return p;
}

CommPoly CommPoly::variable(int nvars, int i) {
    if (i < 0 || i >= nvars) throw Error("commpoly variable index out of range");
    CommPoly p(nvars);
    std::vector<int> e(nvars, 0);
    e[i] = 1;
    p.add_term(e, Rational(1));
    return p;
}

bool CommPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first == std::vector<int>(nvars_, 0);
}

void CommPoly::add_term(const std::vector<int>& exps, const Rational& c) {
    if (static_cast<int>(exps.size()) != nvars_) throw Error("commpoly exponent arity mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

CommPoly operator+(const CommPoly& a, const CommPoly& b) {
    if (a.nvars_ != b.nvars_) throw Error("commpoly arity mismatch");
    CommPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

CommPoly operator-(const CommPoly& a, const CommPoly& b) {
    if (a.nvars_ != b.nvars_) throw Error("commpoly arity mismatch");
    CommPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
}

CommPoly operator*(const CommPoly& a, const CommPoly& b) {
    if (a.nvars_ != b.nvars_) throw Error("commpoly arity mismatch");
    CommPoly r(a.nvars_);
    std::vector<int> e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

CommPoly operator*(const Rational& c, const CommPoly& a) {
    CommPoly r(a.nvars_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : a.terms_) r.add_term(e, c * v);
    return r;
}

CommPoly CommPoly::operator-() const { return Rational(-1) * *this; }

Rational CommPoly::eval(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != nvars_) throw Error("commpoly eval arity mismatch");
    Rational acc;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < nvars_; ++i)
            for (int k = 0; k < e[i]; ++k) t *= point[i];
        acc += t;
    }
    return acc;
}

CommPoly CommPoly::pow(int e) const {
    CommPoly r = CommPoly::constant(nvars_, Rational(1));
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

long CommPoly::weighted_degree(const std::vector<long>& weights) const {
    long best = 0;
    for (const auto& [e, c] : terms_) {
        long w = 0;
        for (int i = 0; i < nvars_; ++i) w += weights[i] * e[i];
        if (w > best) best = w;
    }
    return best;
}

bool CommPoly::weighted_homogeneous(const std::vector<long>& weights, long degree) const {
    for (const auto& [e, c] : terms_) {
        long w = 0;
        for (int i = 0; i < nvars_; ++i) w += weights[i] * e[i];
        if (w != degree) return false;
    }
    return true;
}

std::string CommPoly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        os << (first ? "" : " + ") << c.str();
        for (int i = 0; i < nvars_; ++i) {
            for (int k = 0; k < e[i]; ++k) os << "*" << names[i];
        }
        first = false;
    }
    return os.str();
}

} // namespace swappoly
