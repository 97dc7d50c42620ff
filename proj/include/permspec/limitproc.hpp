// Simulation of the limiting windowed eigenangle processes: GEM stick
// sampling, sparse geometric prime-exponent arrays, and per-subset lattice
// points with k!*g_k multiplicities.

#pragma once

#include "permspec/rng.hpp"

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace permspec {

// Raised when a requested tolerance cannot be met by the configured stick
// truncation.
struct TruncationTooSmall : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct StickSample {
    std::vector<double> sticks;  // V_j in generation order
    double residual = 1.0;       // prod (1 - U_i); equals 1 - sum V_j
    double theta = 1.0;
};

// r sticks of GEM(theta): U_j i.i.d. with density theta (1-x)^(theta-1),
// V_j = U_j prod_{i<j} (1 - U_i).
StickSample sample_gem(double theta, size_t r, Rng& rng);

// Sticks until residual < eps_residual, at most r_cap of them; throws
// TruncationTooSmall if the cap is hit first.
StickSample sample_gem_adaptive(double theta, double eps_residual, size_t r_cap, Rng& rng);

// Density of the largest Poisson-Dirichlet(theta) part at x in (1/2, 1),
// where at most one part can exceed 1/2: theta (1-x)^(theta-1) / x.
double pd_largest_density(double theta, double x);

// Sparse geometric prime-exponent columns: column i lists (prime index m,
// exponent X_{m,i}) with X >= 1, ascending in m, under
// P{X_{m,i} = a} = (1 - 1/p_m) p_m^{-a}.  Indices m > prime_cutoff are
// treated as exponent 0.
struct PrimeExponentArray {
    std::vector<std::vector<std::pair<uint32_t, uint32_t>>> columns;
    size_t prime_cutoff = 0;
};

// Precomputed activation data for sampling a whole r_cap-column array by
// skipping directly between primes that hit at least one column.  Prime m is
// active with probability beta_m = 1 - (1 - 1/p_m)^r_cap; the walk uses unit
// exponential steps through the cumulative hazards -ln(1 - beta_m).
// Immutable after construction; share read-only across threads.
struct SkipTable {
    size_t r_cap = 0;
    size_t prime_cutoff = 0;
    std::vector<uint32_t> primes;      // p_1..p_L, local copy for lock-free reads
    std::vector<double> cum_hazard;    // running sum of r_cap * -log1p(-1/p_m)
    std::vector<double> beta;          // activation probability per prime
    double tail_risk = 0.0;            // bound on P{any column pair shares a prime > p_L}
};

SkipTable build_skip_table(size_t r_cap, size_t prime_cutoff);

// One exact draw of all columns i = 1..r (subsampled from the r_cap-column
// array so the draw order does not depend on r).
PrimeExponentArray sample_prime_exponents(const SkipTable& table, size_t r, Rng& rng);

struct TruncationParams {
    double eps_residual = 1e-3;  // stop GEM once residual mass is below this
    size_t r_cap = 64;           // hard cap on sticks per replicate
    size_t prime_cutoff = 10000; // treat primes beyond p_L as absent
    double bias_tol = 0.05;      // cap on the omitted-intensity bound
};

struct LimitParams {
    int k = 1;
    double theta = 1.0;
    // Angle kind: t = 0 simulates the irrational-angle limit; t >= 1 the
    // rational-angle limit with denominator t.  t = 1 doubles as the
    // integer-angle case, which shares the same point set.
    uint64_t t = 0;
    double window_lo = 0.0;
    double window_hi = 1.0;
    TruncationParams trunc;
};

struct LimitPoint {
    double position;
    uint64_t multiplicity;  // k! * g_k of the generating subset
};

struct LimitWindowSample {
    std::vector<LimitPoint> points;  // ascending by position
    bool atom_at_zero = false;       // rational kinds: infinite mass sits at 0
    size_t r_used = 0;
};

// Shared immutable state for replicated window simulation.  For each
// k-subset S = {i_1 < ... < i_k} of the first r sticks, points sit at
// (q + U_S) g_k(S) / (L_{i_1}...L_{i_k}) for integer q, with multiplicity
// k! g_k(S); U_S is uniform on [0,1] (t = 0), or V_S/t with V_S from the
// unit-group product formula (t >= 1).  Exact-zero positions of the
// rational kinds are excluded and reported as the atom marker.
class LimitSimulator {
  public:
    explicit LimitSimulator(const LimitParams& params);

    LimitWindowSample replicate(Rng& rng) const;

    const LimitParams& params() const { return params_; }
    const SkipTable& table() const { return table_; }

    // k^2 * width * eps_residual: certified bound on the expected
    // multiplicity-weighted mass lost to the stick truncation.
    double omitted_intensity_bound() const;

  private:
    LimitParams params_;
    SkipTable table_;
    bool need_primes_ = false;
    size_t m_low_ = 0;  // index of the largest prime factor of t (0 if t <= 1)
};

// Convenience wrapper building the simulator afresh; prefer LimitSimulator
// when drawing many replicates.
LimitWindowSample simulate_limit_window(const LimitParams& params, Rng& rng);

}  // namespace permspec
