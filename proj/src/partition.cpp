#include "swappoly/partition.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "swappoly/error.hpp"

namespace swappoly {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw Error("partition parts must be positive");
        if (i && parts_[i] > parts_[i - 1]) throw Error("partition parts must be weakly decreasing");
        n_ += parts_[i];
    }
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> c(parts_[0]);
    for (int j = 0; j < parts_[0]; ++j)
        c[j] = static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [&](int p) { return p > j; }));
    return Partition(std::move(c));
}

std::string Partition::str() const {
    if (parts_.empty()) return "-";
    std::ostringstream os;
    for (size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    return os.str();
}

namespace {

void gen(int n, int maxpart, std::vector<int>& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int k = std::min(n, maxpart); k >= 1; --k) {
        cur.push_back(k);
        gen(n - k, k, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions(int n) {
    if (n < 0) throw Error("partitions of negative n");
    std::vector<Partition> out;
    std::vector<int> cur;
    gen(n, n, cur, out);
    return out;
}

Integer conjugacy_class_size(const Partition& type) {
    // n! / (prod parts * prod mult!)
    Integer denom(1);
    std::map<int, int> mult;
    for (int p : type.parts()) {
        denom *= Integer(p);
        ++mult[p];
    }
    for (auto& [p, m] : mult) denom *= Integer::factorial(m);
    return Integer::div_exact(Integer::factorial(type.n()), denom);
}

Integer gl_dimension(const Partition& lambda, int d) {
    if (lambda.height() > d) return Integer(0);
    Rational dim(1);
    const Partition conj = lambda.conjugate();
    for (int i = 0; i < lambda.height(); ++i) {
        for (int j = 0; j < lambda.parts()[i]; ++j) {
            const int hook = lambda.parts()[i] - j + conj.parts()[j] - i - 1;
            dim *= Rational(d + j - i, hook);
        }
    }
    if (!dim.is_integer()) throw Error("hook content dimension not integral");
    return dim.numerator();
}

} // namespace swappoly
