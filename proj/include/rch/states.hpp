#pragma once

#include "rch/diagram.hpp"

#include <array>
#include <cstdint>
#include <mutex>
#include <functional>
#include <stdexcept>
#include <vector>

namespace rch {

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Caps {
    uint64_t maxStates = 1ull << 16;
    uint64_t maxGeneratorsPerBlock = 5'000'000;
};

// A vertex of the hypercube: one bit per matching edge in matching order.
struct StateIndex {
    uint32_t bits = 0;
    int len = 0;
    int weight() const { return __builtin_popcount(bits); }
    bool bit(int i) const { return (bits >> i) & 1u; }
    StateIndex flipped(int i) const { return {bits ^ (1u << i), len}; }
    bool operator==(const StateIndex& o) const { return bits == o.bits && len == o.len; }
    std::string str() const;
};

// The immersed circles of one state. Matched edges contribute two smoothing
// arcs; every non-matching edge carries one strand of a circle. Circle ids
// are assigned by ascending smallest visited dart.
struct CircleDecomposition {
    int k = 0;       // circles including vertex-free ones
    int traced = 0;  // circles found by the walk; free circles get the top ids
    // Per matching-order position: ids of the circles through the two arcs at
    // the smoothing site (arc at the rotation-successor of end 0 first).
    std::vector<std::array<int, 2>> site;
    // Per edge: the circles along it. Non-matching: the through-circle twice.
    // Matched: same pair as `site`.
    std::vector<std::array<int, 2>> along;
    // Circle containing each non-matching dart (dart id = 2e+end), -1 at
    // matched darts.
    std::vector<int> portCircle;
};

CircleDecomposition trace_circles(const PMDiagram& pm, const StateIndex& alpha);

enum class EdgeKind { Merge, Split, SelfTouch };

struct HyperEdge {
    StateIndex source;
    int pos = 0;  // matching-order position of the flipped edge
    EdgeKind kind = EdgeKind::Merge;
    int sign = +1;  // (-1)^{number of 1 bits left of pos}
    // Correspondence for circles untouched at the smoothing site (-1 marks a
    // changed circle).
    std::vector<int> srcToTgt;
    std::array<int, 2> srcChanged{-1, -1};  // Merge: both used; else first only
    std::array<int, 2> tgtChanged{-1, -1};  // Split: both used; else first only
};

HyperEdge classify_edge(const PMDiagram& pm, const StateIndex& alpha, int pos);

// All states of the hypercube with their decompositions and hyperedges.
class Hypercube {
public:
    Hypercube(const PMDiagram& pm, const Caps& caps = {});

    const PMDiagram& pm() const { return pm_; }
    int ell() const { return ell_; }
    uint64_t size() const { return 1ull << ell_; }
    const std::vector<int>& matchingOrder() const { return morder_; }
    StateIndex state(uint32_t bits) const { return {bits, ell_}; }
    const CircleDecomposition& decomposition(uint32_t bits) const { return st_[bits]; }
    // Hyperedges leaving `bits` (one per zero bit), classified lazily as a whole.
    const std::vector<HyperEdge>& edgesFrom(uint32_t bits) const;

    enum class Order { Lexicographic, GrayCode };
    void forEachState(const std::function<void(const StateIndex&, const CircleDecomposition&)>& f,
                      Order order = Order::Lexicographic) const;

private:
    PMDiagram pm_;
    std::vector<int> morder_;
    int ell_;
    std::vector<CircleDecomposition> st_;
    mutable std::vector<std::vector<HyperEdge>> out_;
    mutable std::vector<char> outBuilt_;
    mutable std::mutex outMx_;
};

// Stats of the state graph: the signed diagram obtained by contracting the
// non-matching 2-factor cycles to vertices and flipping matched-edge signs
// where the state bit is one.
SurfaceStats state_surface(const PMDiagram& pm, const StateIndex& alpha);

}  // namespace rch
