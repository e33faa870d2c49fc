#ifndef SWAPPOLY_PARTITION_HPP
#define SWAPPOLY_PARTITION_HPP

#include <compare>
#include <string>
#include <vector>

#include "swappoly/rational.hpp"

namespace swappoly {

// Integer partition, parts weakly decreasing.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    int n() const { return n_; }
    int height() const { return static_cast<int>(parts_.size()); }
    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    Partition conjugate() const;

    bool operator==(const Partition& o) const = default;
    auto operator<=>(const Partition& o) const = default;

    std::string str() const; // "3,1,1" ; "-" for the empty partition

  private:
    std::vector<int> parts_;
    int n_ = 0;
};

// All partitions of n in reverse-lexicographic order ((n) first, (1^n) last).
// This is the canonical table order used throughout.
std::vector<Partition> partitions(int n);

// |conjugacy class| of the given cycle type in S_n: n! / prod(parts * multiplicities!)
Integer conjugacy_class_size(const Partition& type);

// Dimension of the GL(d) irrep with highest weight lambda (hook content
// formula); 0 when height(lambda) > d.
Integer gl_dimension(const Partition& lambda, int d);

} // namespace swappoly

#endif
