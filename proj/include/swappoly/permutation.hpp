#ifndef SWAPPOLY_PERMUTATION_HPP
#define SWAPPOLY_PERMUTATION_HPP

#include <compare>
#include <string>
#include <vector>

namespace swappoly {

// Permutation of {1..n}, stored as the image sequence sigma(1),...,sigma(n).
// Products compose as functions: (a*b)(i) = a(b(i)).
class Permutation {
  public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);
    // from disjoint (or not) cycles, applied right-to-left like a product
    static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[i - 1]; } // 1-based

    Permutation inverse() const;
    friend Permutation operator*(const Permutation& a, const Permutation& b);

    int sign() const;
    std::vector<int> cycle_type() const; // weakly decreasing
    int num_cycles() const;

    bool operator==(const Permutation& o) const = default;
    auto operator<=>(const Permutation& o) const = default;

    const std::vector<int>& images() const { return img_; }
    std::string str() const; // cycle notation

  private:
    std::vector<int> img_;
};

// all n! permutations, lexicographic by image sequence
std::vector<Permutation> all_permutations(int n);

} // namespace swappoly

#endif
