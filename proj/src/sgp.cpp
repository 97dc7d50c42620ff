#include "permspec/sgp.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>

namespace permspec {

namespace {

using Poly = std::vector<Int>;  // coefficient of q^i at index i

Poly poly_one() { return Poly{Int(1)}; }

void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_add(const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    poly_trim(out);
    return out;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    poly_trim(out);
    return out;
}

// p(q) * q^e
Poly poly_shift(Poly p, unsigned e) {
    if (p.empty()) return p;
    p.insert(p.begin(), e, Int(0));
    return p;
}

// p(q) * (1 - q^a)
Poly poly_mul_cyclo(const Poly& p, unsigned a) {
    Poly out(p.size() + a, Int(0));
    for (size_t i = 0; i < p.size(); ++i) {
        out[i] += p[i];
        out[i + a] -= p[i];
    }
    poly_trim(out);
    return out;
}

// f + q^e * g over the merged factored denominator.
SgRational add_shifted(const SgRational& f, const SgRational& g, unsigned e) {
    SgRational out;
    out.den = f.den;
    for (const auto& [a, c] : g.den) {
        auto it = out.den.find(a);
        if (it == out.den.end())
            out.den[a] = c;
        else
            it->second = std::max(it->second, c);
    }
    Poly fn = f.num;
    Poly gn = poly_shift(g.num, e);
    for (const auto& [a, c] : out.den) {
        auto fit = f.den.find(a);
        auto git = g.den.find(a);
        unsigned fc = fit == f.den.end() ? 0 : fit->second;
        unsigned gc = git == g.den.end() ? 0 : git->second;
        for (unsigned i = fc; i < c; ++i) fn = poly_mul_cyclo(fn, a);
        for (unsigned i = gc; i < c; ++i) gn = poly_mul_cyclo(gn, a);
    }
    out.num = poly_add(fn, gn);
    return out;
}

SgRational component_s(const Hypergraph& comp) {
    int v = comp.num_vertices;
    if (v > 14) throw std::length_error("s_g_symbolic: component exceeds resource guard");

    std::vector<std::uint32_t> edge_masks;
    edge_masks.reserve(comp.edges.size());
    for (const auto& e : comp.edges) {
        std::uint32_t m = 0;
        for (int w : e) m |= 1u << (w - 1);
        edge_masks.push_back(m);
    }

    std::uint32_t full = v == 0 ? 0 : (1u << v) - 1;
    std::vector<unsigned> expo(static_cast<size_t>(full) + 1, 0);
    for (std::uint32_t u = 0; u <= full; ++u) {
        unsigned e = static_cast<unsigned>(std::popcount(u));
        for (std::uint32_t em : edge_masks) {
            unsigned hit = static_cast<unsigned>(std::popcount(em & u));
            if (hit > 0) e += hit - 1;
        }
        expo[u] = e;
        if (u == full) break;
    }

    std::vector<SgRational> table(static_cast<size_t>(full) + 1);
    table[0] = SgRational{poly_one(), {}};
    for (std::uint32_t u = 1; u <= full; ++u) {
        SgRational acc{Poly{}, {}};
        std::uint32_t w = (u - 1) & u;
        while (true) {
            acc = add_shifted(acc, table[w], expo[w]);
            if (w == 0) break;
            w = (w - 1) & u;
        }
        acc.den[expo[u]] += 1;
        table[u] = std::move(acc);
        if (u == full) break;
    }
    return table[full];
}

}  // namespace

SgRational s_g_symbolic(const Hypergraph& g) {
    g.validate();
    SgRational out{poly_one(), {}};
    for (const Hypergraph& comp : connected_components(g)) {
        SgRational part = component_s(comp);
        out.num = poly_mul(out.num, part.num);
        for (const auto& [a, c] : part.den) out.den[a] += c;
    }
    return out;
}

Rat evaluate(const SgRational& f, const Rat& q) {
    Rat num = 0;
    for (size_t i = f.num.size(); i-- > 0;) num = num * q + Rat(f.num[i]);
    Rat den = 1;
    for (const auto& [a, c] : f.den) {
        Rat qa(pow_int(numerator(q), a), pow_int(denominator(q), a));
        Rat factor = Rat(1) - qa;
        for (unsigned i = 0; i < c; ++i) den *= factor;
    }
    return num / den;
}

Rat s_g_p(const Hypergraph& g, const Rat& q) {
    if (q <= 0 || q >= 1) throw std::domain_error("s_g_p: q must lie in (0, 1)");
    return evaluate(s_g_symbolic(g), q);
}

Rat s_g_p_direct(const Hypergraph& g, const Rat& q, unsigned max_weight) {
    g.validate();
    if (q <= 0 || q >= 1) throw std::domain_error("s_g_p_direct: q must lie in (0, 1)");
    size_t v = static_cast<size_t>(g.num_vertices);

    unsigned max_expo = 0;
    for (const auto& e : g.edges) max_expo += static_cast<unsigned>(e.size() - 1);
    max_expo = (max_expo + static_cast<unsigned>(v)) * max_weight;
    std::vector<Rat> qpow(max_expo + 1);
    qpow[0] = 1;
    for (unsigned i = 1; i <= max_expo; ++i) qpow[i] = qpow[i - 1] * q;

    std::vector<unsigned> w(v, 0);
    Rat total = 0;
    while (true) {
        unsigned phi = 0;
        for (unsigned x : w) phi += x;
        for (const auto& e : g.edges) {
            unsigned sum = 0, mx = 0;
            for (int vert : e) {
                unsigned x = w[static_cast<size_t>(vert - 1)];
                sum += x;
                mx = std::max(mx, x);
            }
            phi += sum - mx;
        }
        total += qpow[phi];

        size_t i = 0;
        while (i < v && w[i] == max_weight) w[i++] = 0;
        if (i == v) break;
        ++w[i];
    }
    return total;
}

}  // namespace permspec
