#include "swappoly/weingarten.hpp"

#include "swappoly/character.hpp"
#include "swappoly/error.hpp"

namespace swappoly {

ClassFunction::ClassFunction(int n) : n_(n) {
    for (const auto& mu : partitions(n)) vals_.emplace(mu, Rational(0));
}

const Rational& ClassFunction::at(const Partition& mu) const {
    auto it = vals_.find(mu);
    if (it == vals_.end()) throw Error("class function not defined at " + mu.str());
    return it->second;
}

void ClassFunction::set(const Partition& mu, Rational v) {
    if (mu.n() != n_) throw Error("class function: partition size mismatch");
    vals_[mu] = std::move(v);
}

Rational ClassFunction::at_permutation(const Permutation& s) const {
    return at(Partition(s.cycle_type()));
}

ClassFunction ClassFunction::scaled(const Rational& c) const {
    ClassFunction r(n_);
    for (const auto& [mu, v] : vals_) r.set(mu, c * v);
    return r;
}

void GroupAlgebraElement::add(const Permutation& s, const Rational& c) {
    if (s.size() != n_) throw Error("group algebra: permutation size mismatch");
    auto it = coeffs_.find(s);
    if (it == coeffs_.end()) {
        if (!c.is_zero()) coeffs_.emplace(s, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
}

GroupAlgebraElement operator+(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    GroupAlgebraElement r = a;
    for (const auto& [s, c] : b.coeffs_) r.add(s, c);
    return r;
}

GroupAlgebraElement operator-(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    GroupAlgebraElement r = a;
    for (const auto& [s, c] : b.coeffs_) r.add(s, -c);
    return r;
}

GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    if (a.n_ != b.n_) throw Error("group algebra: degree mismatch");
    GroupAlgebraElement r(a.n_);
    for (const auto& [s, cs] : a.coeffs_)
        for (const auto& [t, ct] : b.coeffs_) r.add(s * t, cs * ct);
    return r;
}

GroupAlgebraElement GroupAlgebraElement::scaled(const Rational& c) const {
    GroupAlgebraElement r(n_);
    if (c.is_zero()) return r;
    for (const auto& [s, v] : coeffs_) r.add(s, c * v);
    return r;
}

bool GroupAlgebraElement::operator==(const GroupAlgebraElement& o) const {
    return n_ == o.n_ && coeffs_ == o.coeffs_;
}

ClassFunction weingarten(int n, int d) {
    if (n < 1 || d < 1) throw Error("weingarten needs n, d >= 1");
    ClassFunction wg(n);
    const Rational norm = Rational(1) / Rational(Integer::factorial(n) * Integer::factorial(n));
    for (const auto& mu : partitions(n)) {
        Rational s;
        for (const auto& lambda : partitions(n)) {
            if (lambda.height() > d) continue;
            const Integer dim = sn_dimension(lambda);
            s += Rational(dim * dim * character(lambda, mu), gl_dimension(lambda, d));
        }
        wg.set(mu, norm * s);
    }
    return wg;
}

GroupAlgebraElement phi_transform(const TensorOperator& A) {
    const int n = A.order();
    GroupAlgebraElement out(n);
    for (const auto& s : all_permutations(n)) out.add(s.inverse(), trace_with_perm(s, A));
    return out;
}

GroupAlgebraElement phi_of_identity(int n, int d) {
    GroupAlgebraElement out(n);
    for (const auto& s : all_permutations(n))
        out.add(s.inverse(), Rational(Integer::pow(Integer(d), s.num_cycles())));
    return out;
}

GroupAlgebraElement class_to_algebra(const ClassFunction& c) {
    GroupAlgebraElement out(c.n());
    for (const auto& s : all_permutations(c.n())) {
        const Rational& v = c.at_permutation(s);
        if (!v.is_zero()) out.add(s, v);
    }
    return out;
}

TensorOperator algebra_to_operator(const GroupAlgebraElement& g, int d) {
    if (g.n() < 1) throw Error("algebra_to_operator: empty element");
    TensorOperator acc(d, g.n());
    for (const auto& [s, c] : g.coeffs()) acc = acc + c * perm_operator(s, d);
    return acc;
}

bool acts_as_identity(const GroupAlgebraElement& g, int d) {
    const int n = g.n();
    long N = 1;
    for (int i = 0; i < n; ++i) N *= d;
    std::vector<int> digits(n);
    // coefficient accumulation per input tuple: op(g) e_t = sum_s c_s e_{s.t}
    std::vector<Rational> acc(N);
    std::vector<std::vector<int>> invs;
    std::vector<Rational> cs;
    for (const auto& [s, c] : g.coeffs()) {
        const Permutation inv = s.inverse();
        std::vector<int> iv(n);
        for (int k = 1; k <= n; ++k) iv[k - 1] = inv(k) - 1;
        invs.push_back(std::move(iv));
        cs.push_back(c);
    }
    std::vector<long> touched;
    for (long t = 0; t < N; ++t) {
        long x = t;
        for (int k = n - 1; k >= 0; --k) {
            digits[k] = static_cast<int>(x % d);
            x /= d;
        }
        touched.clear();
        for (size_t m = 0; m < invs.size(); ++m) {
            long target = 0;
            for (int k = 0; k < n; ++k) target = target * d + digits[invs[m][k]];
            touched.push_back(target);
            acc[target] += cs[m];
        }
        bool ok = false; // the diagonal entry must appear and equal 1
        for (long idx : touched) {
            const Rational want = (idx == t) ? Rational(1) : Rational(0);
            if (acc[idx] != want) {
                ok = false;
                break;
            }
            if (idx == t) ok = true;
        }
        for (long idx : touched) acc[idx] = Rational(0); // reset for next tuple
        if (!ok) return false;
    }
    return true;
}

} // namespace swappoly
