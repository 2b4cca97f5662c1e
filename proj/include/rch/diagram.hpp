#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace rch {

// One end of an edge: edge index into RibbonDiagram::edges plus end in {0,1}.
struct Dart {
    int e = -1;
    int end = 0;
    bool operator==(const Dart& o) const { return e == o.e && end == o.end; }
    bool operator<(const Dart& o) const { return e != o.e ? e < o.e : end < o.end; }
};

// A signed rotation system: vertices carry a cyclic order of their incident
// half-edges, edges carry a sign (+1 flat band, -1 half-twisted band).
// Vertex-free circles are tracked as a bare count.
struct RibbonDiagram {
    std::string name;
    std::vector<std::string> vertexNames;
    struct Edge {
        std::string name;
        int u = -1, v = -1;  // endpoint vertex indices (u == v for a loop)
        int sign = +1;
    };
    std::vector<Edge> edges;
    std::vector<std::vector<Dart>> rotation;  // per vertex, cyclic order
    int freeCircles = 0;

    int numVertices() const { return static_cast<int>(vertexNames.size()); }
    int numEdges() const { return static_cast<int>(edges.size()); }
    int vertexOf(Dart d) const { return d.end == 0 ? edges[d.e].u : edges[d.e].v; }
    Dart mate(Dart d) const { return {d.e, 1 - d.end}; }
    int valence(int v) const { return static_cast<int>(rotation[v].size()); }

    int addVertex(const std::string& n) {
        vertexNames.push_back(n);
        rotation.emplace_back();
        return numVertices() - 1;
    }
    int addEdge(const std::string& n, int u, int v, int sign = +1) {
        edges.push_back({n, u, v, sign});
        return numEdges() - 1;
    }

    // Position of each dart inside its vertex rotation; built on demand.
    struct DartIndex {
        std::vector<int> vertex, pos;  // indexed by dart id = 2*e + end
    };
    DartIndex buildDartIndex() const;

    Dart rotSucc(const DartIndex& ix, Dart d) const {
        int v = ix.vertex[d.e * 2 + d.end], p = ix.pos[d.e * 2 + d.end];
        const auto& r = rotation[v];
        return r[(p + 1) % r.size()];
    }
    Dart rotPred(const DartIndex& ix, Dart d) const {
        int v = ix.vertex[d.e * 2 + d.end], p = ix.pos[d.e * 2 + d.end];
        const auto& r = rotation[v];
        return r[(p + r.size() - 1) % r.size()];
    }

    bool connected() const;

    // Normalized text form: vertices/edges in index order, each rotation
    // shifted to its lexicographically least cyclic representative. Two
    // diagrams that differ only by cyclic shifts of rotations normalize
    // identically.
    std::string canonicalText() const;
    uint64_t fingerprint() const;

    // Structural equality up to cyclic shifts of the rotations.
    bool equivalentTo(const RibbonDiagram& o) const {
        return canonicalText() == o.canonicalText();
    }
};

struct PMDiagram {
    RibbonDiagram d;
    std::set<int> matching;  // edge indices

    std::vector<int> matchingOrder() const { return {matching.begin(), matching.end()}; }
};

struct ValidationReport {
    std::vector<std::string> issues;
    bool valid() const { return issues.empty(); }
    std::string str() const;
};

ValidationReport validate(const RibbonDiagram& d);
ValidationReport validate(const PMDiagram& pm);

// Throwing wrapper used by operations whose precondition is a valid diagram.
void requireValid(const RibbonDiagram& d);
void requireValid(const PMDiagram& pm);

// Replace every vertex of valence k by a cycle of k trivalent vertices joined
// by k positive rim edges (a single vertex with a loop rim when k == 1); the
// original edges become the perfect matching and keep their signs.
PMDiagram blowup(const RibbonDiagram& d);

// Reverse the rotation at v and negate the sign of each incident edge (a loop
// twice, leaving it unchanged). Represents the same ribbon surface.
RibbonDiagram vertex_flip(const RibbonDiagram& d, int v);

struct SurfaceStats {
    int faces = 0;
    int eulerCharacteristic = 0;
    bool orientable = true;
    int genus = 0;     // meaningful when orientable
    int crosscaps = 0; // meaningful when non-orientable
    bool operator==(const SurfaceStats& o) const {
        return faces == o.faces && eulerCharacteristic == o.eulerCharacteristic &&
               orientable == o.orientable && genus == o.genus && crosscaps == o.crosscaps;
    }
};

// Every cycle has positive sign product (checked by spanning-tree sign
// propagation); equivalent to orientability of the band surface.
bool signsBalanced(const RibbonDiagram& d);

// Implemented in states.cpp: faces come from the all-zero state of the blowup.
SurfaceStats surface_stats(const RibbonDiagram& d);

}  // namespace rch
