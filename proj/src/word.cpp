#include "swappoly/word.hpp"

#include <sstream>

#include "swappoly/error.hpp"

namespace swappoly {

std::string family_name(Family f) {
    switch (f) {
        case Family::X: return "x";
        case Family::Y: return "y";
        case Family::Z: return "z";
        case Family::Zeta: return "zeta";
    }
    throw Error("unknown family");
}

Word Word::from_xy(const std::string& pattern) {
    std::vector<Letter> ls;
    ls.reserve(pattern.size());
    for (char c : pattern) {
        if (c == 'x')
            ls.push_back(lx(1));
        else if (c == 'y')
            ls.push_back(ly(1));
        else
            throw Error("from_xy accepts only 'x' and 'y'");
    }
    return Word(std::move(ls));
}

int Word::degree_in(Family f) const {
    int n = 0;
    for (const auto& l : letters_) n += l.fam == f;
    return n;
}

std::map<Letter, int> Word::multidegree() const {
    std::map<Letter, int> m;
    for (const auto& l : letters_) ++m[l];
    return m;
}

Word operator*(const Word& a, const Word& b) {
    std::vector<Letter> ls = a.letters_;
    ls.insert(ls.end(), b.letters_.begin(), b.letters_.end());
    return Word(std::move(ls));
}

std::string Word::str() const {
    if (letters_.empty()) return "1";
    std::ostringstream os;
    for (size_t i = 0; i < letters_.size(); ++i) os << (i ? "." : "") << letters_[i].str();
    return os.str();
}

} // namespace swappoly
