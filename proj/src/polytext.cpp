#include "swappoly/polytext.hpp"

#include <istream>
#include <sstream>

#include "swappoly/error.hpp"
#include "swappoly/evaluate.hpp"

namespace swappoly {

std::string print_poly(const NcPoly& p) {
    std::ostringstream os;
    for (const auto& [w, c] : p.terms()) os << c.str() << " " << w.str() << "\n";
    return os.str();
}

std::string print_poly(const TensorPoly2& t) {
    std::ostringstream os;
    for (const auto& [k, c] : t.terms())
        os << c.str() << " " << k.first.str() << " | " << k.second.str() << "\n";
    return os.str();
}

Letter parse_letter(const std::string& s) {
    size_t i = 0;
    while (i < s.size() && !isdigit(static_cast<unsigned char>(s[i]))) ++i;
    const std::string fam = s.substr(0, i);
    const std::string idx = s.substr(i);
    if (idx.empty()) throw ParseError("letter without index: '" + s + "'");
    int index;
    try {
        index = std::stoi(idx);
    } catch (...) {
        throw ParseError("bad letter index in '" + s + "'");
    }
    if (index < 1) throw ParseError("letter index must be >= 1 in '" + s + "'");
    if (fam == "x") return {Family::X, index};
    if (fam == "y") return {Family::Y, index};
    if (fam == "z") return {Family::Z, index};
    if (fam == "zeta") return {Family::Zeta, index};
    throw ParseError("unknown variable family '" + fam + "'");
}

Word parse_word(const std::string& s) {
    if (s == "1") return Word();
    std::vector<Letter> ls;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, '.')) {
        if (cur.empty()) throw ParseError("empty letter in word '" + s + "'");
        ls.push_back(parse_letter(cur));
    }
    if (ls.empty()) throw ParseError("empty word token");
    return Word(std::move(ls));
}

ParsedPoly parse_poly(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    NcPoly plain;
    TensorPoly2 tensor;
    bool saw_tensor = false, saw_plain = false;
    while (std::getline(in, line)) {
        // strip comments and blank lines
        if (auto pos = line.find('#'); pos != std::string::npos) line.resize(pos);
        std::istringstream ls(line);
        std::string coeff;
        if (!(ls >> coeff)) continue;
        std::string w1, bar, w2;
        if (!(ls >> w1)) throw ParseError("term without word: '" + line + "'");
        const Rational c = Rational::from_string(coeff);
        if (ls >> bar) {
            if (bar != "|" || !(ls >> w2)) throw ParseError("malformed tensor term: '" + line + "'");
            std::string extra;
            if (ls >> extra) throw ParseError("trailing tokens: '" + line + "'");
            tensor.add_term(parse_word(w1), parse_word(w2), c);
            saw_tensor = true;
        } else {
            plain.add_term(parse_word(w1), c);
            saw_plain = true;
        }
    }
    if (saw_tensor && saw_plain) throw ParseError("mixed plain and tensor terms in one file");
    if (saw_tensor) return tensor;
    return plain;
}

std::vector<Matrix> parse_matrices(std::istream& in) {
    int d, k;
    if (!(in >> d >> k) || d < 1 || k < 0) throw ParseError("matrix file must start with 'd k'");
    std::vector<Matrix> out;
    for (int m = 0; m < k; ++m) {
        Matrix mat(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                std::string tok;
                if (!(in >> tok)) throw ParseError("matrix file truncated");
                mat.at(i, j) = Rational::from_string(tok);
            }
        out.push_back(std::move(mat));
    }
    return out;
}

} // namespace swappoly
