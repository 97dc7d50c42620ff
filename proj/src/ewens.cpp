#include "permspec/ewens.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace permspec {

std::vector<long> CycleType::largest(size_t r) const {
    std::vector<long> out;
    for (auto it = counts.rbegin(); it != counts.rend() && out.size() < r; ++it)
        for (long c = 0; c < it->second && out.size() < r; ++c) out.push_back(it->first);
    return out;
}

long CycleType::cycle_count() const {
    long k = 0;
    for (const auto& [j, c] : counts) k += c;
    return k;
}

std::string CycleType::to_json() const {
    std::ostringstream os;
    os << "{\"n\": " << n << ", \"cycles\": {";
    bool first = true;
    for (const auto& [j, c] : counts) {
        if (!first) os << ", ";
        first = false;
        os << "\"" << j << "\": " << c;
    }
    os << "}}";
    return os.str();
}

CycleType sample_cycle_type(const EwensParams& params, Rng& rng) {
    if (params.n < 1) throw std::invalid_argument("n must be >= 1");
    if (params.theta <= 0) throw std::invalid_argument("theta must be > 0");
    const double theta = to_double(params.theta);
    const size_t n = static_cast<size_t>(params.n);

    std::vector<long> cycle_size;            // by cycle id, in creation order
    std::vector<uint32_t> seat_cycle(n, 0);  // element index -> cycle id
    cycle_size.push_back(1);                 // element 1 always opens a cycle
    for (size_t i = 2; i <= n; ++i) {
        double p_new = theta / (theta + static_cast<double>(i - 1));
        if (rng.uniform01() < p_new) {
            seat_cycle[i - 1] = static_cast<uint32_t>(cycle_size.size());
            cycle_size.push_back(1);
        } else {
            uint32_t c = seat_cycle[rng.below(i - 1)];
            seat_cycle[i - 1] = c;
            ++cycle_size[c];
        }
    }

    CycleType ct;
    ct.n = params.n;
    for (long s : cycle_size) ++ct.counts[s];
    return ct;
}

Rat cycle_type_pmf(const EwensParams& params, const CycleType& ct) {
    if (params.n < 1) throw std::invalid_argument("n must be >= 1");
    if (params.theta <= 0) throw std::invalid_argument("theta must be > 0");
    long total = 0;
    for (const auto& [j, c] : ct.counts) {
        if (j < 1 || c < 0) return 0;
        total += j * c;
    }
    if (total != params.n || ct.n != params.n) return 0;

    Rat mass = factorial(static_cast<unsigned>(params.n));
    Rat rising = 1;
    for (long i = 0; i < params.n; ++i) rising *= params.theta + i;
    mass /= rising;
    for (const auto& [j, c] : ct.counts) {
        if (c == 0) continue;
        Rat term = params.theta / j;
        for (long u = 0; u < c; ++u) mass *= term;
        mass /= factorial(static_cast<unsigned>(c));
    }
    return mass;
}

namespace {

void emit_partitions(long remaining, long max_part, CycleType& work, std::vector<CycleType>& out) {
    if (remaining == 0) {
        out.push_back(work);
        return;
    }
    for (long part = std::min(remaining, max_part); part >= 1; --part) {
        ++work.counts[part];
        emit_partitions(remaining - part, part, work, out);
        if (--work.counts[part] == 0) work.counts.erase(part);
    }
}

}  // namespace

std::vector<CycleType> all_cycle_types(long n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    std::vector<CycleType> out;
    CycleType work;
    work.n = n;
    emit_partitions(n, n, work, out);
    return out;
}

}  // namespace permspec
