#ifndef SWAPPOLY_WORD_HPP
#define SWAPPOLY_WORD_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace swappoly {

enum class Family : std::uint8_t { X = 0, Y = 1, Z = 2, Zeta = 3 };

std::string family_name(Family f);

// Indexed variable; canonical order is family, then index.
struct Letter {
    Family fam;
    int index; // >= 1

    auto operator<=>(const Letter&) const = default;
    std::string str() const { return family_name(fam) + std::to_string(index); }
};

inline Letter lx(int i) { return {Family::X, i}; }
inline Letter ly(int i) { return {Family::Y, i}; }
inline Letter lz(int i) { return {Family::Z, i}; }
inline Letter lzeta(int i) { return {Family::Zeta, i}; }

// Monomial of the free algebra; the empty word denotes 1.
class Word {
  public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
    static Word of(std::initializer_list<Letter> ls) { return Word(std::vector<Letter>(ls)); }
    // shorthand for two-variable words: "xyyx" -> x1.y1.y1.x1
    static Word from_xy(const std::string& pattern);

    const std::vector<Letter>& letters() const { return letters_; }
    int degree() const { return static_cast<int>(letters_.size()); }
    bool empty() const { return letters_.empty(); }
    int degree_in(Family f) const;
    std::map<Letter, int> multidegree() const;

    friend Word operator*(const Word& a, const Word& b); // concatenation

    // canonical term order: degree first, then lexicographic on letters
    std::strong_ordering operator<=>(const Word& o) const {
        if (auto c = letters_.size() <=> o.letters_.size(); c != 0) return c;
        return letters_ <=> o.letters_;
    }
    bool operator==(const Word& o) const = default;

    std::string str() const; // "x1.y2.x1", "1" for the empty word

  private:
    std::vector<Letter> letters_;
};

} // namespace swappoly

#endif
