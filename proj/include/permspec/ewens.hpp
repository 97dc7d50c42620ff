// Cycle types of Ewens(theta) random permutations: Chinese-restaurant
// sampler, exact sampling-formula pmf, and partition enumeration.

#pragma once

#include "permspec/numeric.hpp"
#include "permspec/rng.hpp"

#include <map>
#include <string>
#include <vector>

namespace permspec {

struct EwensParams {
    long n = 1;      // permutation size, n >= 1
    Rat theta = 1;   // Ewens parameter, > 0
};

struct CycleType {
    std::map<long, long> counts;  // cycle length j -> count c_j > 0
    long n = 0;                   // sum over j of j * c_j

    // The r largest cycle lengths, descending, repeated per count; fewer
    // than r entries when the permutation has fewer cycles.
    std::vector<long> largest(size_t r) const;

    long cycle_count() const;

    // {"n": n, "cycles": {"j": c_j, ...}}
    std::string to_json() const;

    friend bool operator==(const CycleType&, const CycleType&) = default;
    friend auto operator<=>(const CycleType&, const CycleType&) = default;
};

// Sequential-insertion sampler: element i opens a new cycle with probability
// theta/(theta+i-1), otherwise it is inserted after a uniformly chosen
// already-placed element.  The cycle type then follows the Ewens sampling
// formula.
CycleType sample_cycle_type(const EwensParams& params, Rng& rng);

// Exact mass n!/(theta)_n * prod_j (theta/j)^{c_j} / c_j! of ct under
// params; 0 when the counts do not form a cycle type of S_n.
Rat cycle_type_pmf(const EwensParams& params, const CycleType& ct);

// All cycle types of S_n, i.e. the integer partitions of n.
std::vector<CycleType> all_cycle_types(long n);

}  // namespace permspec
