#include "permspec/hypergraph.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace permspec {

void Hypergraph::validate() const {
    if (num_vertices < 0 || num_vertices > 31)
        throw std::invalid_argument("hypergraph: vertex count out of range");
    for (const auto& e : edges) {
        if (e.empty()) throw std::invalid_argument("hypergraph: empty edge");
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 1 || e[i] > num_vertices)
                throw std::invalid_argument("hypergraph: vertex label out of range");
            if (i > 0 && e[i] <= e[i - 1])
                throw std::invalid_argument("hypergraph: edge not strictly sorted");
        }
    }
    if (!std::is_sorted(edges.begin(), edges.end()))
        throw std::invalid_argument("hypergraph: edge list not sorted");
}

std::vector<int> degree_sequence(const Hypergraph& g) {
    std::vector<int> deg(static_cast<size_t>(g.num_vertices), 0);
    for (const auto& e : g.edges)
        for (int v : e) ++deg[static_cast<size_t>(v - 1)];
    return deg;
}

namespace {

// Relabel the vertices listed in keep (ascending original labels) to
// 1..keep.size() and rewrite every edge through the map; edges that lose all
// vertices are dropped when drop_empty is set.
Hypergraph relabel_onto(const Hypergraph& g, const std::vector<int>& keep) {
    std::vector<int> new_label(static_cast<size_t>(g.num_vertices) + 1, 0);
    for (size_t i = 0; i < keep.size(); ++i)
        new_label[static_cast<size_t>(keep[i])] = static_cast<int>(i + 1);
    Hypergraph out;
    out.num_vertices = static_cast<int>(keep.size());
    for (const auto& e : g.edges) {
        std::vector<int> cut;
        for (int v : e)
            if (new_label[static_cast<size_t>(v)] != 0)
                cut.push_back(new_label[static_cast<size_t>(v)]);
        if (!cut.empty()) {
            std::sort(cut.begin(), cut.end());
            out.edges.push_back(std::move(cut));
        }
    }
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

}  // namespace

std::vector<Hypergraph> connected_components(const Hypergraph& g) {
    int n = g.num_vertices;
    std::vector<int> parent(static_cast<size_t>(n) + 1);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) {
        while (parent[static_cast<size_t>(v)] != v) {
            parent[static_cast<size_t>(v)] = parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
            v = parent[static_cast<size_t>(v)];
        }
        return v;
    };
    for (const auto& e : g.edges)
        for (size_t i = 1; i < e.size(); ++i) {
            int a = find(e[0]), b = find(e[i]);
            if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
        }

    std::vector<std::vector<int>> members(static_cast<size_t>(n) + 1);
    for (int v = 1; v <= n; ++v) members[static_cast<size_t>(find(v))].push_back(v);

    std::vector<Hypergraph> out;
    for (int root = 1; root <= n; ++root) {
        const auto& keep = members[static_cast<size_t>(root)];
        if (keep.empty()) continue;
        out.push_back(relabel_onto(g, keep));
    }
    return out;
}

Hypergraph induced(const Hypergraph& g, std::uint32_t mask) {
    std::vector<int> keep;
    for (int v = 1; v <= g.num_vertices; ++v)
        if (mask & (1u << (v - 1))) keep.push_back(v);
    return relabel_onto(g, keep);
}

namespace {

std::string encode(const Hypergraph& g) {
    std::string key;
    key.push_back(static_cast<char>(g.num_vertices));
    for (const auto& e : g.edges) {
        key.push_back(static_cast<char>(e.size()));
        for (int v : e) key.push_back(static_cast<char>(v));
    }
    return key;
}

}  // namespace

std::string canonical_key(const Hypergraph& g) {
    int n = g.num_vertices;
    if (n > 10) throw std::length_error("canonical_key: too many vertices");
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::string best;
    do {
        Hypergraph h;
        h.num_vertices = n;
        h.edges.reserve(g.edges.size());
        for (const auto& e : g.edges) {
            std::vector<int> mapped;
            mapped.reserve(e.size());
            for (int v : e) mapped.push_back(perm[static_cast<size_t>(v - 1)]);
            std::sort(mapped.begin(), mapped.end());
            h.edges.push_back(std::move(mapped));
        }
        std::sort(h.edges.begin(), h.edges.end());
        std::string key = encode(h);
        if (best.empty() || key < best) best = std::move(key);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::vector<Hypergraph> enumerate_hypergraphs(int k, int m) {
    if (k < 1 || m < 1) throw std::invalid_argument("enumerate_hypergraphs: k and m must be positive");
    if (k * m > 12) throw std::length_error("enumerate_hypergraphs: k*m exceeds resource guard");

    std::vector<Hypergraph> out;
    for (int r = k; r <= k * m; ++r) {
        // Universe of k-subsets of {1..r} in lexicographic order.
        std::vector<std::vector<int>> universe;
        std::vector<int> pick(static_cast<size_t>(k));
        std::iota(pick.begin(), pick.end(), 1);
        while (true) {
            universe.push_back(pick);
            int i = k - 1;
            while (i >= 0 && pick[static_cast<size_t>(i)] == r - (k - 1 - i)) --i;
            if (i < 0) break;
            ++pick[static_cast<size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
        }
        if (static_cast<size_t>(m) > universe.size()) continue;

        // Choose m distinct edges; keep selections covering every vertex.
        std::vector<size_t> idx(static_cast<size_t>(m));
        std::iota(idx.begin(), idx.end(), 0);
        size_t u = universe.size();
        while (true) {
            std::uint32_t covered = 0;
            for (size_t i : idx)
                for (int v : universe[i]) covered |= 1u << (v - 1);
            if (covered == (r >= 32 ? ~0u : (1u << r) - 1)) {
                Hypergraph g;
                g.num_vertices = r;
                for (size_t i : idx) g.edges.push_back(universe[i]);
                out.push_back(std::move(g));
            }
            int i = m - 1;
            while (i >= 0 && idx[static_cast<size_t>(i)] == u - static_cast<size_t>(m - i)) --i;
            if (i < 0) break;
            ++idx[static_cast<size_t>(i)];
            for (int j = i + 1; j < m; ++j)
                idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
        }
    }
    return out;
}

}  // namespace permspec
