// Ewens cycle-type distribution: exact pmf values, enumeration counts, and
// sampler agreement with the pmf.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "permspec/ewens.hpp"
#include "permspec/numeric.hpp"
#include "permspec/stats.hpp"

#include <map>
#include <vector>

using namespace permspec;

namespace {

CycleType make_ct(std::map<long, long> counts) {
    CycleType ct;
    ct.counts = std::move(counts);
    for (const auto& [j, c] : ct.counts) ct.n += j * c;
    return ct;
}

// Permutations of S_n with the given cycle type: n! / prod_j j^{c_j} c_j!.
Int conjugacy_class_size(const CycleType& ct) {
    Int denom = 1;
    for (const auto& [j, c] : ct.counts)
        denom *= pow_int(Int(j), static_cast<unsigned>(c)) * factorial(static_cast<unsigned>(c));
    return factorial(static_cast<unsigned>(ct.n)) / denom;
}

}  // namespace

TEST_CASE("pmf matches hand-computed values at n = 2 and 3") {
    CHECK(cycle_type_pmf({2, Rat(1)}, make_ct({{2, 1}})) == Rat(1, 2));
    CHECK(cycle_type_pmf({2, Rat(3)}, make_ct({{2, 1}})) == Rat(1, 4));
    CHECK(cycle_type_pmf({3, Rat(1)}, make_ct({{3, 1}})) == Rat(1, 3));
    CHECK(cycle_type_pmf({3, Rat(1)}, make_ct({{1, 1}, {2, 1}})) == Rat(1, 2));
    CHECK(cycle_type_pmf({3, Rat(1)}, make_ct({{1, 3}})) == Rat(1, 6));
    CHECK(cycle_type_pmf({3, Rat(1, 2)}, make_ct({{3, 1}})) == Rat(8, 15));
}

TEST_CASE("theta = 1 pmf equals the conjugacy class proportion") {
    for (long n = 1; n <= 9; ++n) {
        for (const auto& ct : all_cycle_types(n)) {
            Rat expected = Rat(conjugacy_class_size(ct)) / Rat(factorial(static_cast<unsigned>(n)));
            CHECK(cycle_type_pmf({n, Rat(1)}, ct) == expected);
        }
    }
}

TEST_CASE("pmf sums to one over all cycle types") {
    for (Rat theta : {Rat(1, 2), Rat(1), Rat(5, 3)}) {
        for (long n = 1; n <= 12; ++n) {
            Rat total = 0;
            for (const auto& ct : all_cycle_types(n)) total += cycle_type_pmf({n, theta}, ct);
            CHECK(total == Rat(1));
        }
    }
}

TEST_CASE("pmf of a mismatched cycle type is zero") {
    CHECK(cycle_type_pmf({4, Rat(1)}, make_ct({{3, 1}})) == Rat(0));
    CHECK(cycle_type_pmf({3, Rat(2)}, make_ct({{2, 2}})) == Rat(0));
}

TEST_CASE("enumeration counts equal the partition numbers") {
    const long expected[] = {1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
    for (long n = 1; n <= 12; ++n)
        CHECK(all_cycle_types(n).size() == static_cast<size_t>(expected[n - 1]));
}

TEST_CASE("cycle type accessors") {
    CycleType ct = make_ct({{1, 2}, {3, 1}});
    CHECK(ct.n == 5);
    CHECK(ct.cycle_count() == 3);
    CHECK(ct.largest(2) == std::vector<long>{3, 1});
    CHECK(ct.largest(5) == std::vector<long>{3, 1, 1});
    CHECK(ct.to_json().find("\"n\"") != std::string::npos);
}

TEST_CASE("sampler output is always a valid cycle type") {
    Rng rng(31);
    EwensParams params{7, Rat(2, 3)};
    for (int i = 0; i < 2000; ++i) {
        CycleType ct = sample_cycle_type(params, rng);
        long total = 0;
        for (const auto& [j, c] : ct.counts) {
            CHECK(c > 0);
            total += j * c;
        }
        CHECK(total == 7);
        CHECK(ct.n == 7);
    }
}

namespace {

void sampler_pmf_agreement(long n, Rat theta, int reps, uint64_t seed) {
    auto types = all_cycle_types(n);
    std::map<CycleType, size_t> index;
    for (size_t i = 0; i < types.size(); ++i) index[types[i]] = i;
    std::vector<double> observed(types.size(), 0.0), expected(types.size(), 0.0);
    EwensParams params{n, theta};
    for (int rep = 0; rep < reps; ++rep) {
        Rng rng = Rng::for_replicate(seed, static_cast<uint64_t>(rep));
        observed[index.at(sample_cycle_type(params, rng))] += 1.0;
    }
    for (size_t i = 0; i < types.size(); ++i)
        expected[i] = to_double(cycle_type_pmf(params, types[i])) * reps;
    CHECK(chi_square_gof_p(observed, expected) > 1e-4);
}

}  // namespace

TEST_CASE("sampler frequencies match the pmf") {
    sampler_pmf_agreement(3, Rat(1), 30000, 11);
    sampler_pmf_agreement(6, Rat(1), 30000, 12);
    sampler_pmf_agreement(6, Rat(2), 30000, 13);
    sampler_pmf_agreement(8, Rat(1, 2), 30000, 14);
}

TEST_CASE("invalid parameters are rejected") {
    CHECK_THROWS_AS(all_cycle_types(0), std::invalid_argument);
    Rng rng(1);
    CHECK_THROWS_AS(sample_cycle_type({0, Rat(1)}, rng), std::invalid_argument);
    CHECK_THROWS_AS(sample_cycle_type({3, Rat(0)}, rng), std::invalid_argument);
    CHECK_THROWS_AS(sample_cycle_type({3, Rat(-1)}, rng), std::invalid_argument);
    CHECK_THROWS_AS(cycle_type_pmf({3, Rat(-1, 2)}, make_ct({{3, 1}})), std::invalid_argument);
}
