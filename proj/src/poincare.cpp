#include "swappoly/poincare.hpp"

#include "swappoly/error.hpp"
#include "swappoly/evaluate.hpp"
#include "swappoly/rng.hpp"

namespace swappoly {

Series2 Series2::one(int cap) { return monomial(cap, 0, 0); }

Series2 Series2::monomial(int cap, int i, int j, const Rational& c) {
    Series2 s(cap);
    s.set(i, j, c);
    return s;
}

Rational Series2::coeff(int i, int j) const {
    auto it = c_.find({i, j});
    return it == c_.end() ? Rational(0) : it->second;
}

void Series2::set(int i, int j, const Rational& c) {
    if (i + j > cap_ || c.is_zero()) {
        c_.erase({i, j});
        return;
    }
    c_[{i, j}] = c;
}

Series2 operator+(const Series2& a, const Series2& b) {
    Series2 r = a;
    for (const auto& [k, c] : b.c_) r.set(k.first, k.second, r.coeff(k.first, k.second) + c);
    return r;
}

Series2 operator-(const Series2& a, const Series2& b) {
    Series2 r = a;
    for (const auto& [k, c] : b.c_) r.set(k.first, k.second, r.coeff(k.first, k.second) - c);
    return r;
}

Series2 operator*(const Series2& a, const Series2& b) {
    Series2 r(a.cap_);
    for (const auto& [ka, ca] : a.c_)
        for (const auto& [kb, cb] : b.c_) {
            const int i = ka.first + kb.first, j = ka.second + kb.second;
            if (i + j > a.cap_) continue;
            r.set(i, j, r.coeff(i, j) + ca * cb);
        }
    return r;
}

Series2 Series2::inverse() const {
    const Rational a0 = coeff(0, 0);
    if (a0.is_zero()) throw Error("series inverse needs an invertible constant term");
    Series2 inv(cap_);
    inv.set(0, 0, a0.inverse());
    // by induction on total degree
    for (int deg = 1; deg <= cap_; ++deg) {
        for (int i = 0; i <= deg; ++i) {
            const int j = deg - i;
            Rational s;
            for (const auto& [k, av] : c_) {
                if (k.first == 0 && k.second == 0) continue;
                const int bi = i - k.first, bj = j - k.second;
                if (bi < 0 || bj < 0) continue;
                s += av * inv.coeff(bi, bj);
            }
            inv.set(i, j, -(a0.inverse()) * s);
        }
    }
    return inv;
}

namespace {

Series2 one_minus(int cap, int i, int j) { return Series2::one(cap) - Series2::monomial(cap, i, j); }

} // namespace

Series2 series_invariants(int cap) {
    return (one_minus(cap, 1, 0) * one_minus(cap, 0, 1) * one_minus(cap, 2, 0) * one_minus(cap, 0, 2) *
            one_minus(cap, 1, 1))
        .inverse();
}

Series2 series_trace_ring(int cap) {
    Series2 f = Series2::one(cap) + Series2::monomial(cap, 1, 0) + Series2::monomial(cap, 0, 1) +
                Series2::monomial(cap, 1, 1);
    return f * series_invariants(cap);
}

Series2 series_algebra(int cap) {
    Series2 head = (one_minus(cap, 1, 0) * one_minus(cap, 0, 1)).inverse();
    return head + Series2::monomial(cap, 1, 1) * series_trace_ring(cap);
}

Series2 series_center(int cap) {
    return Series2::one(cap) + Series2::monomial(cap, 2, 2) * series_invariants(cap);
}

Series2 series_identities(int cap) {
    Series2 num = Series2::monomial(cap, 3, 2) + Series2::monomial(cap, 2, 3) -
                  Series2::monomial(cap, 3, 3);
    Series2 den = one_minus(cap, 1, 0) * one_minus(cap, 1, 0) * one_minus(cap, 0, 1) *
                  one_minus(cap, 0, 1) * one_minus(cap, 1, 1) *
                  (Series2::one(cap) - Series2::monomial(cap, 1, 0) - Series2::monomial(cap, 0, 1));
    return num * den.inverse();
}

Series2 series_free(int cap) {
    return (Series2::one(cap) - Series2::monomial(cap, 1, 0) - Series2::monomial(cap, 0, 1)).inverse();
}

namespace {

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

long rank_at_points(const std::vector<Word>& words, const std::vector<std::pair<Matrix, Matrix>>& pts) {
    Matrix m(static_cast<int>(words.size()), static_cast<int>(4 * pts.size()));
    for (size_t wi = 0; wi < words.size(); ++wi)
        for (size_t pi = 0; pi < pts.size(); ++pi) {
            Assignment a(2);
            a.set(lx(1), pts[pi].first);
            a.set(ly(1), pts[pi].second);
            const Matrix v = eval(words[wi], a);
            for (int k = 0; k < 4; ++k) m.at(static_cast<int>(wi), static_cast<int>(4 * pi + k)) = v.at(k / 2, k % 2);
        }
    return m.rank();
}

} // namespace

PoincareReport poincare_check(int maxdeg, Rng& rng, int base_points) {
    PoincareReport rep;
    rep.maxdeg = maxdeg;
    const Series2 pr = series_algebra(maxdeg);
    const Series2 pid = series_identities(maxdeg);

    std::vector<std::pair<Matrix, Matrix>> pts;
    for (int p = 0; p < base_points; ++p)
        pts.emplace_back(random_int_matrix(rng, 2), random_int_matrix(rng, 2));

    for (int deg = 0; deg <= maxdeg; ++deg) {
        for (int i = 0; i <= deg; ++i) {
            const int j = deg - i;
            const auto words = words_of_bidegree(i, j);
            long rank = rank_at_points(words, pts);
            for (;;) { // grow points until one extra point leaves the rank unchanged
                auto more = pts;
                more.emplace_back(random_int_matrix(rng, 2), random_int_matrix(rng, 2));
                const long r2 = rank_at_points(words, more);
                if (r2 == rank) break;
                pts = std::move(more);
                rank = r2;
            }
            PoincareCell cell;
            cell.i = i;
            cell.j = j;
            cell.words = static_cast<long>(words.size());
            cell.dim_r = rank;
            cell.series_r = pr.coeff(i, j);
            cell.id_codim = cell.words - rank;
            cell.series_id = pid.coeff(i, j);
            cell.matches = Rational(cell.dim_r) == cell.series_r && Rational(cell.id_codim) == cell.series_id;
            rep.all_match = rep.all_match && cell.matches;
            rep.cells.push_back(cell);
        }
    }
    return rep;
}

} // namespace swappoly
