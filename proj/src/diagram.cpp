#include "rch/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rch {

RibbonDiagram::DartIndex RibbonDiagram::buildDartIndex() const {
    DartIndex ix;
    ix.vertex.assign(edges.size() * 2, -1);
    ix.pos.assign(edges.size() * 2, -1);
    for (int v = 0; v < numVertices(); ++v) {
        for (size_t p = 0; p < rotation[v].size(); ++p) {
            Dart d = rotation[v][p];
            ix.vertex[d.e * 2 + d.end] = v;
            ix.pos[d.e * 2 + d.end] = static_cast<int>(p);
        }
    }
    return ix;
}

bool RibbonDiagram::connected() const {
    if (freeCircles > 0 && numVertices() > 0) return false;
    if (numVertices() == 0) return freeCircles <= 1;
    std::vector<int> parent(numVertices());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto& e : edges) parent[find(e.u)] = find(e.v);
    int root = find(0);
    for (int v = 1; v < numVertices(); ++v)
        if (find(v) != root) return false;
    return true;
}

std::string RibbonDiagram::canonicalText() const {
    std::ostringstream os;
    os << "v " << numVertices() << " e " << numEdges() << " c " << freeCircles << "\n";
    for (auto& e : edges) os << "e " << e.u << " " << e.v << " " << e.sign << "\n";
    for (int v = 0; v < numVertices(); ++v) {
        // least cyclic shift of the dart sequence
        const auto& r = rotation[v];
        size_t best = 0;
        auto less_from = [&](size_t a, size_t b) {
            for (size_t i = 0; i < r.size(); ++i) {
                const Dart &da = r[(a + i) % r.size()], &db = r[(b + i) % r.size()];
                if (da < db) return true;
                if (db < da) return false;
            }
            return false;
        };
        for (size_t s = 1; s < r.size(); ++s)
            if (less_from(s, best)) best = s;
        os << "r";
        for (size_t i = 0; i < r.size(); ++i) {
            const Dart& d = r[(best + i) % r.size()];
            os << " " << d.e << "." << d.end;
        }
        os << "\n";
    }
    return os.str();
}

uint64_t RibbonDiagram::fingerprint() const {
    uint64_t h = 1469598103934665603ULL;  // FNV-1a
    for (unsigned char c : canonicalText()) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string ValidationReport::str() const {
    if (issues.empty()) return "valid";
    std::string s;
    for (auto& i : issues) s += i + "\n";
    return s;
}

ValidationReport validate(const RibbonDiagram& d) {
    ValidationReport rep;
    if (d.freeCircles < 0) rep.issues.push_back("negative vertex-free circle count");
    for (int i = 0; i < d.numEdges(); ++i) {
        const auto& e = d.edges[i];
        if (e.u < 0 || e.u >= d.numVertices() || e.v < 0 || e.v >= d.numVertices())
            rep.issues.push_back("edge " + e.name + " has an unknown endpoint");
        if (e.sign != 1 && e.sign != -1)
            rep.issues.push_back("edge " + e.name + " has sign outside {+1,-1}");
    }
    if (static_cast<int>(d.rotation.size()) != d.numVertices()) {
        rep.issues.push_back("rotation table size does not match vertex count");
        return rep;
    }
    std::vector<int> seen(d.numEdges() * 2, 0);
    for (int v = 0; v < d.numVertices(); ++v) {
        for (const Dart& dart : d.rotation[v]) {
            if (dart.e < 0 || dart.e >= d.numEdges() || (dart.end != 0 && dart.end != 1)) {
                rep.issues.push_back("rotation at " + d.vertexNames[v] + " lists an unknown half-edge");
                continue;
            }
            ++seen[dart.e * 2 + dart.end];
            if (d.vertexOf(dart) != v)
                rep.issues.push_back("rotation at " + d.vertexNames[v] + " lists half-edge " +
                                     d.edges[dart.e].name + "." + std::to_string(dart.end) +
                                     " which is not incident to it");
        }
    }
    for (int e = 0; e < d.numEdges(); ++e)
        for (int end = 0; end < 2; ++end)
            if (seen[e * 2 + end] != 1)
                rep.issues.push_back("half-edge " + d.edges[e].name + "." + std::to_string(end) +
                                     (seen[e * 2 + end] == 0 ? " is never placed" : " is placed more than once"));
    return rep;
}

ValidationReport validate(const PMDiagram& pm) {
    ValidationReport rep = validate(pm.d);
    std::vector<int> cover(pm.d.numVertices(), 0);
    for (int e : pm.matching) {
        if (e < 0 || e >= pm.d.numEdges()) {
            rep.issues.push_back("matching references an unknown edge");
            continue;
        }
        if (pm.d.edges[e].u == pm.d.edges[e].v) {
            rep.issues.push_back("matched edge " + pm.d.edges[e].name + " is a loop");
            continue;
        }
        ++cover[pm.d.edges[e].u];
        ++cover[pm.d.edges[e].v];
    }
    for (int v = 0; v < pm.d.numVertices(); ++v)
        if (cover[v] != 1)
            rep.issues.push_back("not a perfect matching: vertex " + pm.d.vertexNames[v] +
                                 (cover[v] == 0 ? " is uncovered" : " is covered more than once"));
    for (int e = 0; e < pm.d.numEdges(); ++e)
        if (!pm.matching.count(e) && pm.d.edges[e].sign != +1)
            rep.issues.push_back("non-matching edge " + pm.d.edges[e].name + " has negative sign");
    return rep;
}

void requireValid(const RibbonDiagram& d) {
    auto rep = validate(d);
    if (!rep.valid()) throw std::invalid_argument("invalid diagram:\n" + rep.str());
}

void requireValid(const PMDiagram& pm) {
    auto rep = validate(pm);
    if (!rep.valid()) throw std::invalid_argument("invalid perfect matching diagram:\n" + rep.str());
}

PMDiagram blowup(const RibbonDiagram& d) {
    requireValid(d);
    PMDiagram out;
    out.d.name = d.name.empty() ? "blowup" : d.name + "-blowup";
    out.d.freeCircles = d.freeCircles;

    // One new trivalent vertex per dart of the original diagram, arranged
    // around the old vertex in rotation order.
    std::vector<int> dartVertex(d.numEdges() * 2, -1);
    for (int v = 0; v < d.numVertices(); ++v) {
        int k = d.valence(v);
        if (k == 0) throw std::invalid_argument("blowup: isolated vertex " + d.vertexNames[v]);
        std::vector<int> ring(k);
        for (int i = 0; i < k; ++i) {
            const Dart& dart = d.rotation[v][i];
            ring[i] = out.d.addVertex(d.vertexNames[v] + "_" + std::to_string(i));
            dartVertex[dart.e * 2 + dart.end] = ring[i];
        }
        if (k == 1) {
            int r = out.d.addEdge("rim_" + d.vertexNames[v] + "_0", ring[0], ring[0], +1);
            out.d.rotation[ring[0]] = {Dart{-1, 0}, Dart{r, 0}, Dart{r, 1}};  // original filled below
        } else {
            std::vector<int> rim(k);
            for (int i = 0; i < k; ++i)
                rim[i] = out.d.addEdge("rim_" + d.vertexNames[v] + "_" + std::to_string(i),
                                       ring[i], ring[(i + 1) % k], +1);
            for (int i = 0; i < k; ++i) {
                int prev = rim[(i + k - 1) % k];
                out.d.rotation[ring[i]] = {Dart{-1, 0}, Dart{rim[i], 0}, Dart{prev, 1}};
            }
        }
    }

    // Original edges become the matching, signs retained.
    for (int e = 0; e < d.numEdges(); ++e) {
        int u2 = dartVertex[e * 2 + 0];
        int v2 = dartVertex[e * 2 + 1];
        int ne = out.d.addEdge(d.edges[e].name, u2, v2, d.edges[e].sign);
        out.matching.insert(ne);
        out.d.rotation[u2][0] = Dart{ne, 0};
        out.d.rotation[v2][0] = Dart{ne, 1};
    }
    requireValid(out);
    return out;
}

RibbonDiagram vertex_flip(const RibbonDiagram& d, int v) {
    if (v < 0 || v >= d.numVertices()) throw std::invalid_argument("vertex_flip: unknown vertex");
    RibbonDiagram out = d;
    std::reverse(out.rotation[v].begin(), out.rotation[v].end());
    for (auto& e : out.edges) {
        int cnt = (e.u == v) + (e.v == v);
        if (cnt == 1) e.sign = -e.sign;  // a loop is negated twice, i.e. unchanged
    }
    return out;
}

bool signsBalanced(const RibbonDiagram& d) {
    // Spanning-tree sign propagation: assign each vertex +-1 so that every
    // tree edge is consistent, then check the remaining edges.
    int n = d.numVertices();
    std::vector<int> mark(n, 0);
    std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbor, sign)
    for (auto& e : d.edges) {
        if (e.u == e.v) {
            if (e.sign < 0) return false;  // negative loop is an unbalanced cycle
            continue;
        }
        adj[e.u].push_back({e.v, e.sign});
        adj[e.v].push_back({e.u, e.sign});
    }
    for (int s = 0; s < n; ++s) {
        if (mark[s] != 0) continue;
        mark[s] = 1;
        std::vector<int> stack = {s};
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (auto [y, sg] : adj[x]) {
                int want = mark[x] * sg;
                if (mark[y] == 0) {
                    mark[y] = want;
                    stack.push_back(y);
                } else if (mark[y] != want) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace rch
