#include "swappoly/bracket.hpp"

#include "swappoly/error.hpp"

namespace swappoly {

BracketForm BracketForm::single(const Word& w, const Word& wp, const Rational& c) {
    BracketForm f;
    f.add_term(w, wp, c);
    return f;
}

void BracketForm::add_term(const Word& w, const Word& wp, const Rational& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(w, wp);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

BracketForm operator+(const BracketForm& a, const BracketForm& b) {
    BracketForm r = a;
    for (const auto& [k, c] : b.terms_) r.add_term(k.first, k.second, c);
    return r;
}

BracketForm operator*(const Rational& c, const BracketForm& a) {
    BracketForm r;
    if (c.is_zero()) return r;
    for (const auto& [k, v] : a.terms_) r.add_term(k.first, k.second, c * v);
    return r;
}

NcPoly BracketForm::expand() const {
    const Word xw = Word::of({lx(1)});
    const Word yw = Word::of({ly(1)});
    NcPoly out;
    for (const auto& [k, c] : terms_) {
        out.add_term(k.first * xw * yw * k.second, c);
        out.add_term(k.first * yw * xw * k.second, -c);
    }
    return out;
}

BracketForm absorb_generator(int gen, const BracketForm& f) {
    const Word xw = Word::of({lx(1)});
    const Word yw = Word::of({ly(1)});
    BracketForm out;
    for (const auto& [k, c] : f.terms()) {
        const Word& w = k.first;
        const Word& wp = k.second;
        switch (gen) {
            case 0: // tr(x)
                out.add_term(w, xw * wp, c);
                out.add_term(w * xw, wp, c);
                break;
            case 2: // tr(y)
                out.add_term(w, yw * wp, c);
                out.add_term(w * yw, wp, c);
                break;
            case 1: // det(x)
                out.add_term(w * xw, xw * wp, c);
                break;
            case 3: // det(y)
                out.add_term(w * yw, yw * wp, c);
                break;
            case 4: // tr(xy)
                out.add_term(w * xw * yw, wp, c);
                out.add_term(w, yw * xw * wp, c);
                break;
            default: throw Error("absorb_generator: generator index out of range");
        }
    }
    return out;
}

NcPoly absorb_invariant(const std::array<int, 5>& exps, const BracketForm& f) {
    BracketForm cur = f;
    // fixed stripping order
    for (int gen : {2, 4, 1, 3, 0})
        for (int k = 0; k < exps[gen]; ++k) cur = absorb_generator(gen, cur);
    return cur.expand();
}

NcPoly absorb_invariant(const TPoly& t, const BracketForm& f) {
    NcPoly out;
    for (const auto& [e, c] : t.poly().terms()) {
        std::array<int, 5> exps;
        for (int i = 0; i < 5; ++i) exps[i] = e[i];
        out = out + c * absorb_invariant(exps, f);
    }
    return out;
}

BracketForm bracket_z() { return BracketForm::single(Word(), Word()); }

BracketForm bracket_z2_times(const Word& u) {
    const Word xy = Word::of({lx(1), ly(1)});
    const Word yx = Word::of({ly(1), lx(1)});
    BracketForm f;
    f.add_term(xy, u, Rational(1));
    f.add_term(yx, u, Rational(-1));
    return f;
}

} // namespace swappoly
