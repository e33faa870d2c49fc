#ifndef SWAPPOLY_CHARACTER_HPP
#define SWAPPOLY_CHARACTER_HPP

#include "swappoly/partition.hpp"

namespace swappoly {

// chi_lambda(mu): irreducible S_n character value at cycle type mu, via the
// Murnaghan-Nakayama border-strip recursion. Memoized process-wide behind a
// mutex; callers may share it across threads.
Integer character(const Partition& lambda, const Partition& mu);

// chi_lambda(1^n)
Integer sn_dimension(const Partition& lambda);

} // namespace swappoly

#endif
