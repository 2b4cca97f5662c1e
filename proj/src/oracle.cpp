#include "rch/oracle.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

namespace rch {

CircleMultigraph circle_multigraph(const CircleDecomposition& dec) {
    CircleMultigraph g;
    g.nodes = dec.k;
    for (auto& s : dec.site) g.edges.push_back({std::min(s[0], s[1]), std::max(s[0], s[1])});
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

CircleMultigraph circle_multigraph(const PMDiagram& pm, const StateIndex& alpha) {
    return circle_multigraph(trace_circles(pm, alpha));
}

namespace {

struct SimpleGraph {
    int nodes = 0;
    std::vector<std::pair<int, int>> edges;  // sorted, simple, no loops
    bool operator<(const SimpleGraph& o) const {
        return nodes != o.nodes ? nodes < o.nodes : edges < o.edges;
    }
};

Int countColorings(const SimpleGraph& g, int n, std::map<SimpleGraph, Int>& memo) {
    if (g.edges.empty()) return ipow(n, g.nodes);
    auto it = memo.find(g);
    if (it != memo.end()) return it->second;

    // delete-contract on the first edge
    auto [a, b] = g.edges.front();
    SimpleGraph del{g.nodes, {g.edges.begin() + 1, g.edges.end()}};

    SimpleGraph con;
    con.nodes = g.nodes - 1;
    std::set<std::pair<int, int>> es;
    bool contractionHasLoop = false;
    for (size_t k = 1; k < g.edges.size(); ++k) {
        auto [x, y] = g.edges[k];
        auto relabel = [&](int v) {
            if (v == b) v = a;  // contract b into a
            if (v > b) --v;     // close the index gap
            return v;
        };
        int x2 = relabel(x), y2 = relabel(y);
        if (x2 == y2) {
            contractionHasLoop = true;  // parallel edge became a loop: zero colorings
            break;
        }
        es.insert({std::min(x2, y2), std::max(x2, y2)});
    }
    Int result = countColorings(del, n, memo);
    if (!contractionHasLoop) {
        con.edges.assign(es.begin(), es.end());
        result -= countColorings(con, n, memo);
    }
    memo[g] = result;
    return result;
}

std::mutex memoMx;
std::map<std::pair<SimpleGraph, int>, Int> globalMemo;

}  // namespace

Int proper_coloring_count(const CircleMultigraph& g, int n) {
    if (n < 1) throw std::invalid_argument("coloring count needs n >= 1");
    SimpleGraph s;
    s.nodes = g.nodes;
    std::set<std::pair<int, int>> es;
    for (auto& [a, b] : g.edges) {
        if (a == b) return 0;
        es.insert({std::min(a, b), std::max(a, b)});
    }
    s.edges.assign(es.begin(), es.end());
    {
        std::lock_guard<std::mutex> lk(memoMx);
        auto it = globalMemo.find({s, n});
        if (it != globalMemo.end()) return it->second;
    }
    std::map<SimpleGraph, Int> memo;
    Int r = countColorings(s, n, memo);
    {
        std::lock_guard<std::mutex> lk(memoMx);
        globalMemo[{s, n}] = r;
    }
    return r;
}

Int brute_force_coloring_count(const CircleMultigraph& g, int n) {
    if (g.nodes > 10) throw std::invalid_argument("brute-force counter is capped at 10 nodes");
    std::vector<int> color(g.nodes, 0);
    Int count = 0;
    for (;;) {
        bool ok = true;
        for (auto& [a, b] : g.edges) ok = ok && (a != b) && (color[a] != color[b]);
        if (ok) ++count;
        int pos = 0;
        while (pos < g.nodes && color[pos] == n - 1) color[pos++] = 0;
        if (pos == g.nodes) break;
        ++color[pos];
    }
    return g.nodes == 0 ? Int(1) : count;
}

namespace {

LaurentPoly circleValue(const AlgebraSpec& spec) {
    LaurentPoly v;
    for (int e : qdim_exponents(spec)) v.add(e, 1);
    return v;
}

// Open-strand tracker for the recursive bracket: other[p] is the far end of
// the open path starting at port p, or -1 once p was consumed by an arc.
struct Strands {
    std::vector<int> other;
    int closed = 0;

    // connect ports p and q; returns entries to restore on backtracking
    void connect(int p, int q, std::vector<std::pair<int, int>>& undo) {
        int pe = other[p], qe = other[q];
        undo.push_back({p, pe});
        undo.push_back({q, qe});
        if (pe == q) {  // the path already runs from p to q: a circle closes
            ++closed;
            other[p] = -1;
            other[q] = -1;
            return;
        }
        undo.push_back({pe, other[pe]});
        undo.push_back({qe, other[qe]});
        other[pe] = qe;
        other[qe] = pe;
        other[p] = -1;
        other[q] = -1;
    }
};

}  // namespace

LaurentPoly bracket_recursion(const PMDiagram& pm, int n, const Caps& caps) {
    AlgebraSpec spec = algebra_spec(n, Rat(0));
    requireValid(pm);
    auto morder = pm.matchingOrder();
    if (morder.size() > 24 || (1ull << morder.size()) > caps.maxStates)
        throw CapExceeded("bracket recursion depth over the state cap");
    for (int v = 0; v < pm.d.numVertices(); ++v)
        if (pm.d.valence(v) != 3)
            throw std::invalid_argument("bracket recursion requires a trivalent diagram");

    auto ix = pm.d.buildDartIndex();
    // per matching position and smoothing choice: the two arcs as port pairs
    std::vector<std::array<std::array<std::array<int, 2>, 2>, 2>> arcs(morder.size());
    for (size_t p = 0; p < morder.size(); ++p) {
        int e = morder[p];
        Dart h0{e, 0}, h1{e, 1};
        int a = 2 * pm.d.rotSucc(ix, h0).e + pm.d.rotSucc(ix, h0).end;
        int b = 2 * pm.d.rotPred(ix, h0).e + pm.d.rotPred(ix, h0).end;
        int c = 2 * pm.d.rotSucc(ix, h1).e + pm.d.rotSucc(ix, h1).end;
        int d = 2 * pm.d.rotPred(ix, h1).e + pm.d.rotPred(ix, h1).end;
        int flip = pm.d.edges[e].sign < 0 ? 1 : 0;
        arcs[p][0 ^ flip] = {{{a, d}, {b, c}}};
        arcs[p][1 ^ flip] = {{{a, c}, {b, d}}};
    }

    Strands st;
    st.other.assign(pm.d.numEdges() * 2, -1);
    for (int e = 0; e < pm.d.numEdges(); ++e)
        if (!pm.matching.count(e)) {
            st.other[2 * e] = 2 * e + 1;
            st.other[2 * e + 1] = 2 * e;
        }

    LaurentPoly circ = circleValue(spec);
    LaurentPoly acc;
    // explicit recursion with undo
    std::function<void(size_t, int)> rec = [&](size_t pos, int weight) {
        if (pos == morder.size()) {
            int k = st.closed + pm.d.freeCircles;
            LaurentPoly term = circ.pow(k);
            for (auto& [e, c] : term.terms()) acc.add(e + spec.m * weight, (weight % 2) ? -c : c);
            return;
        }
        for (int s = 0; s < 2; ++s) {
            std::vector<std::pair<int, int>> undo;
            int closed0 = st.closed;
            st.connect(arcs[pos][s][0][0], arcs[pos][s][0][1], undo);
            st.connect(arcs[pos][s][1][0], arcs[pos][s][1][1], undo);
            rec(pos + 1, weight + s);
            for (auto it = undo.rbegin(); it != undo.rend(); ++it) st.other[it->first] = it->second;
            st.closed = closed0;
        }
    };
    rec(0, 0);
    return acc;
}

Int edge_coloring_count(const RibbonDiagram& g, int colors) {
    for (int v = 0; v < g.numVertices(); ++v)
        if (g.valence(v) != 3) throw std::invalid_argument("edge coloring counter needs a trivalent graph");
    for (auto& e : g.edges)
        if (e.u == e.v) return 0;  // a loop meets itself at its vertex
    if (g.numEdges() > 30) throw std::invalid_argument("edge coloring counter capped at 30 edges");

    std::vector<std::vector<int>> atVertex(g.numVertices());
    for (int e = 0; e < g.numEdges(); ++e) {
        atVertex[g.edges[e].u].push_back(e);
        atVertex[g.edges[e].v].push_back(e);
    }
    std::vector<int> color(g.numEdges(), -1);
    Int count = 0;
    std::function<void(int)> rec = [&](int e) {
        if (e == g.numEdges()) {
            ++count;
            return;
        }
        for (int c = 0; c < colors; ++c) {
            bool ok = true;
            for (int v : {g.edges[e].u, g.edges[e].v})
                for (int e2 : atVertex[v]) ok = ok && (e2 == e || color[e2] != c);
            if (!ok) continue;
            color[e] = c;
            rec(e + 1);
            color[e] = -1;
        }
    };
    rec(0);
    return count;
}

Int nowhere_zero_flow_count(const RibbonDiagram& g, int k) {
    if (k < 2 || (k & (k - 1)) != 0)
        throw std::invalid_argument("flow counter handles Klein groups only (k a power of two)");
    if (g.numEdges() > 24) throw std::invalid_argument("flow counter capped at 24 edges");
    std::vector<int> acc(g.numVertices(), 0);  // xor of incident labels, loops excluded
    // Last edge index touching each vertex, for pruning as soon as a vertex
    // is fully labeled.
    std::vector<int> lastEdge(g.numVertices(), -1);
    for (int e = 0; e < g.numEdges(); ++e) {
        lastEdge[g.edges[e].u] = std::max(lastEdge[g.edges[e].u], e);
        lastEdge[g.edges[e].v] = std::max(lastEdge[g.edges[e].v], e);
    }
    for (int v = 0; v < g.numVertices(); ++v)
        if (lastEdge[v] < 0) throw std::invalid_argument("flow counter: isolated vertex");
    Int count = 0;
    std::function<void(int)> rec = [&](int e) {
        if (e == g.numEdges()) {
            ++count;
            return;
        }
        int u = g.edges[e].u, v = g.edges[e].v;
        for (int x = 1; x < k; ++x) {
            if (u != v) {
                acc[u] ^= x;
                acc[v] ^= x;
            }
            bool ok = (lastEdge[u] != e || acc[u] == 0) && (lastEdge[v] != e || acc[v] == 0);
            if (ok) rec(e + 1);
            if (u != v) {
                acc[u] ^= x;
                acc[v] ^= x;
            }
        }
    };
    rec(0);
    return count;
}

long dense_homology_check(const ChainComplex& cx, int i, int key) {
    const GradedBlock* blk = cx.block(i, key);
    if (!blk) return 0;
    if (blk->dim() > 2000) throw std::invalid_argument("dense check capped at dimension 2000");
    long out = dense_rank(cx.differential(i, key));
    long in = (i == 0) ? 0 : dense_rank(cx.differential(i - 1, key));
    return blk->dim() - out - in;
}

}  // namespace rch
