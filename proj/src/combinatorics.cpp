#include "parhitchin/combinatorics.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace parhitchin {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw Error("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw Error("partition parts must be nonincreasing");
        rank_ += parts_[i];
    }
}

LeviType::LeviType(std::vector<int> multiplicities) : m_(std::move(multiplicities)) {
    if (m_.empty()) throw Error("Levi type must have at least one block");
    for (int v : m_) {
        if (v < 1) throw Error("Levi multiplicities must be positive");
        rank_ += v;
    }
}

LevelFunction::LevelFunction(std::vector<int> values) : v_(std::move(values)) {
    if (v_.empty()) throw Error("level function must be nonempty");
    if (v_[0] != 1) throw Error("level function must start at 1");
    for (size_t j = 0; j < v_.size(); ++j) {
        if (j > 0 && v_[j] < v_[j - 1]) throw Error("level function must be nondecreasing");
        if (v_[j] > int(j) + 1) throw Error("level function must satisfy gamma_j <= j");
    }
}

Partition conjugate(const Partition& p) {
    if (p.size() == 0) return Partition(std::vector<int>{});
    std::vector<int> mu(size_t(p.part(0)), 0);
    for (int j = 1; j <= p.part(0); ++j)
        for (int part : p.parts())
            if (part >= j) ++mu[size_t(j - 1)];
    return Partition(std::move(mu));
}

LevelFunction level_function(const Partition& p) {
    Partition mu = conjugate(p);
    std::vector<int> gamma;
    gamma.reserve(size_t(p.rank()));
    for (int l = 1; l <= mu.size(); ++l)
        for (int k = 0; k < mu.part(l - 1); ++k) gamma.push_back(l);
    return LevelFunction(std::move(gamma));
}

Partition sort_to_partition(const LeviType& lt) {
    std::vector<int> parts = lt.multiplicities();
    std::sort(parts.rbegin(), parts.rend());
    return Partition(std::move(parts));
}

int flag_dimension(const LeviType& lt) {
    long long sq = 0;
    for (int v : lt.multiplicities()) sq += 1LL * v * v;
    long long r = lt.rank();
    return int((r * r - sq) / 2);
}

BigInt weyl_coset_count(const LeviType& lt) {
    BigInt num = 1;
    for (int i = 2; i <= lt.rank(); ++i) num *= i;
    for (int v : lt.multiplicities())
        for (int i = 2; i <= v; ++i) num /= i;
    return num;
}

BigInt min_pair_sum(const Partition& mu) {
    BigInt s = 0;
    for (int i = 0; i < mu.size(); ++i)
        for (int j = i + 1; j < mu.size(); ++j) s += std::min(mu.part(i), mu.part(j));
    return s;
}

long long to_int64(const BigInt& v) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw OverflowError("exact integer does not fit in 64 bits");
    return v.convert_to<long long>();
}

std::vector<Partition> all_partitions(int r) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int maxpart) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int next = std::min(remaining, maxpart); next >= 1; --next) {
            cur.push_back(next);
            self(self, remaining - next, next);
            cur.pop_back();
        }
    };
    rec(rec, r, r);
    return out;
}

std::vector<LeviType> all_compositions(int r) {
    std::vector<LeviType> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int next = 1; next <= remaining; ++next) {
            cur.push_back(next);
            self(self, remaining - next);
            cur.pop_back();
        }
    };
    rec(rec, r);
    return out;
}

}  // namespace parhitchin
