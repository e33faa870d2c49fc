#include "swappoly/ncpoly.hpp"

#include <algorithm>
#include <sstream>

#include "swappoly/error.hpp"
#include "swappoly/permutation.hpp"

namespace swappoly {

NcPoly NcPoly::constant(const Rational& c) {
    NcPoly p;
    p.add_term(Word(), c);
    return p;
}

void NcPoly::add_term(const Word& w, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

NcPoly operator+(const NcPoly& a, const NcPoly& b) {
    NcPoly r = a;
    for (const auto& [w, c] : b.terms_) r.add_term(w, c);
    return r;
}

NcPoly operator-(const NcPoly& a, const NcPoly& b) {
    NcPoly r = a;
    for (const auto& [w, c] : b.terms_) r.add_term(w, -c);
    return r;
}

NcPoly operator*(const NcPoly& a, const NcPoly& b) {
    NcPoly r;
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) r.add_term(wa * wb, ca * cb);
    return r;
}

NcPoly operator*(const Rational& c, const NcPoly& a) {
    NcPoly r;
    if (c.is_zero()) return r;
    for (const auto& [w, v] : a.terms_) r.add_term(w, c * v);
    return r;
}

NcPoly NcPoly::operator-() const { return Rational(-1) * *this; }

std::set<Letter> NcPoly::variables() const {
    std::set<Letter> vs;
    for (const auto& [w, c] : terms_)
        for (const auto& l : w.letters()) vs.insert(l);
    return vs;
}

bool NcPoly::multilinear_in(const std::vector<Letter>& vars) const {
    for (const auto& [w, c] : terms_) {
        auto md = w.multidegree();
        for (const auto& v : vars) {
            auto it = md.find(v);
            if (it == md.end() || it->second != 1) return false;
        }
    }
    return true;
}

NcPoly NcPoly::rename(const std::map<Letter, Letter>& sub) const {
    NcPoly r;
    for (const auto& [w, c] : terms_) {
        std::vector<Letter> ls = w.letters();
        for (auto& l : ls)
            if (auto it = sub.find(l); it != sub.end()) l = it->second;
        r.add_term(Word(std::move(ls)), c);
    }
    return r;
}

std::string NcPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        os << (first ? "" : " + ") << c.str() << "*" << w.str();
        first = false;
    }
    return os.str();
}

void TensorPoly2::add_term(const Word& a, const Word& b, const Rational& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(a, b);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

TensorPoly2 TensorPoly2::simple(const NcPoly& a, const NcPoly& b) {
    TensorPoly2 r;
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) r.add_term(wa, wb, ca * cb);
    return r;
}

TensorPoly2 operator+(const TensorPoly2& a, const TensorPoly2& b) {
    TensorPoly2 r = a;
    for (const auto& [k, c] : b.terms_) r.add_term(k.first, k.second, c);
    return r;
}

TensorPoly2 operator-(const TensorPoly2& a, const TensorPoly2& b) {
    TensorPoly2 r = a;
    for (const auto& [k, c] : b.terms_) r.add_term(k.first, k.second, -c);
    return r;
}

TensorPoly2 operator*(const Rational& c, const TensorPoly2& a) {
    TensorPoly2 r;
    if (c.is_zero()) return r;
    for (const auto& [k, v] : a.terms_) r.add_term(k.first, k.second, c * v);
    return r;
}

std::set<Letter> TensorPoly2::variables() const {
    std::set<Letter> vs;
    for (const auto& [k, c] : terms_) {
        for (const auto& l : k.first.letters()) vs.insert(l);
        for (const auto& l : k.second.letters()) vs.insert(l);
    }
    return vs;
}

bool TensorPoly2::multilinear_in(const std::vector<Letter>& vars) const {
    for (const auto& [k, c] : terms_) {
        auto md = (k.first * k.second).multidegree();
        for (const auto& v : vars) {
            auto it = md.find(v);
            if (it == md.end() || it->second != 1) return false;
        }
    }
    return true;
}

TensorPoly2 TensorPoly2::rename(const std::map<Letter, Letter>& sub) const {
    TensorPoly2 r;
    auto ren = [&](const Word& w) {
        std::vector<Letter> ls = w.letters();
        for (auto& l : ls)
            if (auto it = sub.find(l); it != sub.end()) l = it->second;
        return Word(std::move(ls));
    };
    for (const auto& [k, c] : terms_) r.add_term(ren(k.first), ren(k.second), c);
    return r;
}

std::optional<int> TensorPoly2::balanced_degree() const {
    std::optional<int> deg;
    for (const auto& [k, c] : terms_) {
        if (k.first.degree() != k.second.degree()) return std::nullopt;
        if (!deg)
            deg = k.first.degree();
        else if (*deg != k.first.degree())
            return std::nullopt;
    }
    return terms_.empty() ? std::optional<int>(0) : deg;
}

NcPoly TensorPoly2::slotwise_product() const {
    NcPoly r;
    for (const auto& [k, c] : terms_) r.add_term(k.first * k.second, c);
    return r;
}

NcPoly TensorPoly2::insert_between(const Letter& zeta) const {
    NcPoly r;
    const Word z(std::vector<Letter>{zeta});
    for (const auto& [k, c] : terms_) r.add_term(k.first * z * k.second, c);
    return r;
}

std::string TensorPoly2::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        os << (first ? "" : " + ") << c.str() << "*" << k.first.str() << "|" << k.second.str();
        first = false;
    }
    return os.str();
}

namespace {

unsigned long long factorial_u64(size_t n) {
    unsigned long long r = 1;
    for (size_t i = 2; i <= n; ++i) r *= i;
    return r;
}

template <class Poly>
Poly alternate_impl(const Poly& p, const std::vector<Letter>& vars, unsigned long long term_cap) {
    if (!p.multilinear_in(vars))
        throw Error("alternate: polynomial is not multilinear in the alternation set");
    if (vars.size() > 13 || factorial_u64(vars.size()) * static_cast<unsigned long long>(p.num_terms()) > term_cap)
        throw BudgetError("alternate: symbolic expansion too large",
                          vars.size() > 13 ? term_cap + 1 : factorial_u64(vars.size()) * p.num_terms(),
                          term_cap);
    Poly out;
    for (const auto& sigma : all_permutations(static_cast<int>(vars.size()))) {
        std::map<Letter, Letter> sub;
        for (int i = 1; i <= sigma.size(); ++i) sub[vars[i - 1]] = vars[sigma(i) - 1];
        out = out + Rational(sigma.sign()) * p.rename(sub);
    }
    return out;
}

} // namespace

NcPoly alternate(const NcPoly& p, const std::vector<Letter>& vars, unsigned long long term_cap) {
    return alternate_impl(p, vars, term_cap);
}

TensorPoly2 alternate(const TensorPoly2& p, const std::vector<Letter>& vars, unsigned long long term_cap) {
    return alternate_impl(p, vars, term_cap);
}

NcPoly standard_poly(int k, unsigned long long term_cap) {
    std::vector<Letter> vars;
    std::vector<Letter> word;
    for (int i = 1; i <= k; ++i) {
        vars.push_back(lx(i));
        word.push_back(lx(i));
    }
    return alternate(NcPoly(Word(word)), vars, term_cap);
}

NcPoly capelli_poly(int m, unsigned long long term_cap) {
    std::vector<Letter> vars;
    std::vector<Letter> word;
    for (int i = 1; i <= m; ++i) {
        vars.push_back(lx(i));
        word.push_back(lx(i));
        if (i < m) word.push_back(ly(i));
    }
    return alternate(NcPoly(Word(word)), vars, term_cap);
}

} // namespace swappoly
