// Labeled hypergraphs on vertex sets {1..r}: enumeration of the k-uniform
// covering families that index gap-series coefficients, induced
// subhypergraphs (which may carry repeated and shrunken edges), connected
// components, and a canonical key that identifies isomorphism classes.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace permspec {

struct Hypergraph {
    int num_vertices = 0;                 // labels 1..num_vertices
    std::vector<std::vector<int>> edges;  // each sorted ascending; list kept sorted; repeats allowed

    bool operator==(const Hypergraph&) const = default;

    // Throws std::invalid_argument on out-of-range labels, repeated vertices
    // inside an edge, empty edges, or an unsorted edge list.
    void validate() const;
};

// Number of edges containing each vertex, in label order (index v-1).
std::vector<int> degree_sequence(const Hypergraph& g);

// Connected components in ascending order of their smallest vertex, each
// relabeled 1..|component| preserving the original label order.
std::vector<Hypergraph> connected_components(const Hypergraph& g);

// Induced subhypergraph on the vertex subset encoded by mask (bit v-1 set
// keeps vertex v): every edge meeting the subset contributes its
// intersection, so the result may have repeated edges and mixed edge sizes.
// Vertices are relabeled 1..popcount(mask) preserving label order.
Hypergraph induced(const Hypergraph& g, std::uint32_t mask);

// Smallest edge-list encoding over all vertex relabelings; two hypergraphs
// get the same key exactly when they are isomorphic.  Cost grows with
// num_vertices! so this is intended for small graphs only.
std::string canonical_key(const Hypergraph& g);

// All labeled hypergraphs with m pairwise-distinct k-element edges and no
// isolated vertex, over every vertex count r with k <= r <= k*m.  Throws
// std::length_error when k*m exceeds the built-in resource guard.
std::vector<Hypergraph> enumerate_hypergraphs(int k, int m);

}  // namespace permspec
