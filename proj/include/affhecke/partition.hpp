#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace aff {

// Partitions and compositions as vectors of parts (no trailing zeros unless
// a fixed length is wanted by the caller).
using Partition = std::vector<int>;
using Composition = std::vector<int>;

bool is_partition(const Partition& p);
int weight(const Composition& p);  // sum of parts
Partition conjugate(const Partition& p);
Partition sorted_decreasing(const Composition& c);
Partition strip_zeros(Partition p);

// n(lambda) = sum_i (i-1) lambda_i
long n_stat(const Partition& p);

// dominance order: a >= b (both partitions of the same weight)
bool dominates(const Partition& a, const Partition& b);

std::vector<Partition> partitions_of(int n);
// compositions of n with exactly k positive parts / with any number of parts
std::vector<Composition> compositions_of(int n);

boost::multiprecision::cpp_int multinomial(int n, const Partition& parts);

// partial sums l_j = eta_1 + ... + eta_{j-1}, j = 1..len+1
std::vector<int> partial_sums(const Composition& eta);

std::string part_str(const Partition& p);

}  // namespace aff
