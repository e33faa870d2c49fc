#include "swappoly/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "swappoly/error.hpp"

namespace swappoly {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
        if (v < 1 || v > size() || seen[v - 1]) throw Error("not a permutation of 1..n");
        seen[v - 1] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    return Permutation(std::move(img));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    Permutation p = identity(n);
    for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
        std::vector<int> img(n);
        std::iota(img.begin(), img.end(), 1);
        const auto& c = *it;
        for (size_t k = 0; k < c.size(); ++k) img[c[k] - 1] = c[(k + 1) % c.size()];
        p = Permutation(std::move(img)) * p;
    }
    return p;
}

Permutation Permutation::inverse() const {
    std::vector<int> img(size());
    for (int i = 1; i <= size(); ++i) img[img_[i - 1] - 1] = i;
    return Permutation(std::move(img));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw Error("permutation sizes differ");
    std::vector<int> img(a.size());
    for (int i = 1; i <= a.size(); ++i) img[i - 1] = a(b(i));
    return Permutation(std::move(img));
}

int Permutation::sign() const {
    int s = 1;
    std::vector<bool> seen(img_.size(), false);
    for (int i = 0; i < size(); ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = img_[j] - 1;
            ++len;
        }
        if (len % 2 == 0) s = -s;
    }
    return s;
}

std::vector<int> Permutation::cycle_type() const {
    std::vector<int> type;
    std::vector<bool> seen(img_.size(), false);
    for (int i = 0; i < size(); ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = img_[j] - 1;
            ++len;
        }
        type.push_back(len);
    }
    std::sort(type.rbegin(), type.rend());
    return type;
}

int Permutation::num_cycles() const { return static_cast<int>(cycle_type().size()); }

std::string Permutation::str() const {
    std::ostringstream os;
    std::vector<bool> seen(img_.size(), false);
    bool any = false;
    for (int i = 0; i < size(); ++i) {
        if (seen[i] || img_[i] == i + 1) {
            seen[i] = true;
            continue;
        }
        os << "(";
        int j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            os << (first ? "" : ",") << j + 1;
            first = false;
            j = img_[j] - 1;
        }
        os << ")";
        any = true;
    }
    return any ? os.str() : "e";
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

} // namespace swappoly
