#include "swappoly/character.hpp"

#include <map>
#include <mutex>

#include "swappoly/error.hpp"

namespace swappoly {

namespace {

Integer mn(const std::vector<int>& lam, const std::vector<int>& mu,
           std::map<std::pair<std::vector<int>, std::vector<int>>, Integer>& memo) {
    if (lam.empty()) return Integer(1);
    auto key = std::make_pair(lam, mu);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    // remove a border strip of size mu[0] ending in each possible row range
    const int k = mu[0];
    const std::vector<int> rest(mu.begin() + 1, mu.end());
    const int r = static_cast<int>(lam.size());
    Integer total(0);
    for (int i = 0; i < r; ++i) {
        for (int j = i; j < r; ++j) {
            std::vector<int> nl = lam;
            for (int t = i; t < j; ++t) nl[t] = lam[t + 1] - 1;
            nl[j] = lam[i] - k + (j - i);
            bool ok = nl[j] >= 0;
            for (int t = i; ok && t < j; ++t) ok = nl[t] >= 0;
            for (size_t t = 0; ok && t + 1 < nl.size(); ++t) ok = nl[t] >= nl[t + 1];
            if (!ok) continue;
            while (!nl.empty() && nl.back() == 0) nl.pop_back();
            Integer sub = mn(nl, rest, memo);
            if ((j - i) % 2 != 0) sub = -sub;
            total += sub;
        }
    }
    memo.emplace(std::move(key), total);
    return total;
}

std::mutex memo_mutex;
std::map<std::pair<std::vector<int>, std::vector<int>>, Integer> memo_table;

} // namespace

Integer character(const Partition& lambda, const Partition& mu) {
    if (lambda.n() != mu.n()) throw Error("character: |lambda| != |mu|");
    std::scoped_lock lock(memo_mutex);
    return mn(lambda.parts(), mu.parts(), memo_table);
}

Integer sn_dimension(const Partition& lambda) {
    return character(lambda, Partition(std::vector<int>(lambda.n(), 1)));
}

} // namespace swappoly
