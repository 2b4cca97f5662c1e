#pragma once

#include "rch/chain.hpp"
#include "rch/poly.hpp"
#include "rch/states.hpp"

#include <vector>

namespace rch {

// Adjacency of the circles of a state: one node per circle, one edge per
// smoothing site joining the circles of its two arcs. For a blowup this is
// the face-adjacency multigraph of the state surface.
struct CircleMultigraph {
    int nodes = 0;
    std::vector<std::pair<int, int>> edges;
};

CircleMultigraph circle_multigraph(const CircleDecomposition& dec);
CircleMultigraph circle_multigraph(const PMDiagram& pm, const StateIndex& alpha);

// Number of maps nodes -> {0..n-1} with distinct values across every edge;
// zero as soon as a loop is present. Deletion-contraction with multi-edges
// collapsed first and a cache keyed on the simplified edge list.
Int proper_coloring_count(const CircleMultigraph& g, int n);

// Plain enumeration (<= 10 nodes) used to cross-check the counter above.
Int brute_force_coloring_count(const CircleMultigraph& g, int n);

// Bracket evaluation by resolving one matching edge at a time, maintaining
// the open-strand pairing of the partially smoothed diagram. Must agree with
// the state-sum path.
LaurentPoly bracket_recursion(const PMDiagram& pm, int n, const Caps& caps = {});

// Proper 3-edge-colorings of a trivalent graph by backtracking.
Int edge_coloring_count(const RibbonDiagram& g, int colors = 3);

// Labelings of edges by nonzero elements of the Klein group Z_2^j (k = 2^j)
// with zero sum at every vertex; loops contribute nothing to their vertex.
Int nowhere_zero_flow_count(const RibbonDiagram& g, int k);

// Homology dimension of one block recomputed densely; the sparse path must
// agree.
long dense_homology_check(const ChainComplex& cx, int i, int key);

}  // namespace rch
