#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "parhitchin/errors.hpp"

namespace parhitchin {

using BigInt = boost::multiprecision::cpp_int;

// Partition of r: parts nonincreasing, all >= 1. Canonical (sorted) by
// construction; reordering a Levi type is an explicit conversion.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int rank() const { return rank_; }
    int size() const { return int(parts_.size()); }
    int part(int i) const { return parts_[size_t(i)]; }

    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
    int rank_ = 0;
};

// Flag jump dimensions at a marked point, in the order given there.
class LeviType {
public:
    LeviType() = default;
    explicit LeviType(std::vector<int> multiplicities);

    const std::vector<int>& multiplicities() const { return m_; }
    int rank() const { return rank_; }
    int length() const { return int(m_.size()); }  // sigma

    bool operator==(const LeviType&) const = default;

private:
    std::vector<int> m_;
    int rank_ = 0;
};

// gamma_1..gamma_r: column index of box j when the Young diagram is filled
// column by column. Nondecreasing, gamma_1 = 1, gamma_j <= j, gamma_r = n_1.
class LevelFunction {
public:
    LevelFunction() = default;
    explicit LevelFunction(std::vector<int> values);

    const std::vector<int>& values() const { return v_; }
    int length() const { return int(v_.size()); }
    int at(int j) const { return v_[size_t(j - 1)]; }  // 1-based, as in formulas

    bool operator==(const LevelFunction&) const = default;

private:
    std::vector<int> v_;
};

Partition conjugate(const Partition& p);
LevelFunction level_function(const Partition& p);
Partition sort_to_partition(const LeviType& lt);

// dim(G/P) = (r^2 - sum m_j^2) / 2 for the standard parabolic of this type.
int flag_dimension(const LeviType& lt);

// |W / W_L| = r! / prod m_j!  (coset representatives of the Weyl group)
BigInt weyl_coset_count(const LeviType& lt);

// sum over pairs i < j of min(mu_i, mu_j)
BigInt min_pair_sum(const Partition& mu);

// Exact conversion helpers; OverflowError instead of wrapping.
long long to_int64(const BigInt& v);

std::vector<Partition> all_partitions(int r);
std::vector<LeviType> all_compositions(int r);

}  // namespace parhitchin
