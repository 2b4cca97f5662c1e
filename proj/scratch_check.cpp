// Throwaway convention check (deleted before commit).
#include "rch/diagram.hpp"
#include "rch/states.hpp"

#include <cstdio>

using namespace rch;

static RibbonDiagram theta(bool plane = true) {
    RibbonDiagram d;
    d.name = "theta";
    int u = d.addVertex("u"), v = d.addVertex("v");
    int e1 = d.addEdge("e1", u, v), e2 = d.addEdge("e2", u, v), e3 = d.addEdge("e3", u, v);
    d.rotation[u] = {{e1, 0}, {e2, 0}, {e3, 0}};
    if (plane)
        d.rotation[v] = {{e1, 1}, {e3, 1}, {e2, 1}};
    else
        d.rotation[v] = {{e1, 1}, {e2, 1}, {e3, 1}};
    return d;
}

static RibbonDiagram loopDiagram(int sign) {
    RibbonDiagram d;
    d.name = "loop";
    int v = d.addVertex("v");
    int e = d.addEdge("e", v, v, sign);
    d.rotation[v] = {{e, 0}, {e, 1}};
    return d;
}

static RibbonDiagram bouquet2(bool interleaved, int s1, int s2) {
    RibbonDiagram d;
    int v = d.addVertex("v");
    int a = d.addEdge("a", v, v, s1), b = d.addEdge("b", v, v, s2);
    if (interleaved)
        d.rotation[v] = {{a, 0}, {b, 0}, {a, 1}, {b, 1}};
    else
        d.rotation[v] = {{a, 0}, {a, 1}, {b, 0}, {b, 1}};
    return d;
}

static RibbonDiagram k33() {
    RibbonDiagram d;
    int a0 = d.addVertex("a0"), a1 = d.addVertex("a1"), a2 = d.addVertex("a2");
    int b0 = d.addVertex("b0"), b1 = d.addVertex("b1"), b2 = d.addVertex("b2");
    int as[3] = {a0, a1, a2}, bs[3] = {b0, b1, b2};
    int e[3][3];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) e[i][j] = d.addEdge("e" + std::to_string(i) + std::to_string(j), as[i], bs[j]);
    for (int i = 0; i < 3; ++i) d.rotation[as[i]] = {{e[i][0], 0}, {e[i][1], 0}, {e[i][2], 0}};
    for (int j = 0; j < 3; ++j) d.rotation[bs[j]] = {{e[0][j], 1}, {e[1][j], 1}, {e[2][j], 1}};
    return d;
}

int main() {
    {
        RibbonDiagram th = theta();
        PMDiagram pm{th, {0}};
        auto c0 = trace_circles(pm, {0, 1});
        auto c1 = trace_circles(pm, {1, 1});
        printf("theta-pm: k0=%d (want 2) k1=%d (want 1)\n", c0.k, c1.k);
        auto he = classify_edge(pm, {0, 1}, 0);
        printf("theta-pm edge kind=%d (0=Merge) sign=%d\n", (int)he.kind, he.sign);
    }
    {
        PMDiagram b = blowup(loopDiagram(+1));
        printf("blowup(loop): V=%d E=%d |M|=%zu (want 2,3,1)\n", b.d.numVertices(), b.d.numEdges(),
               b.matching.size());
        auto c0 = trace_circles(b, {0, 1});
        auto c1 = trace_circles(b, {1, 1});
        printf("loop blowup: k0=%d (want 2) k1=%d (want 1)\n", c0.k, c1.k);
        auto st = surface_stats(loopDiagram(+1));
        printf("loop stats: f=%d chi=%d orient=%d genus=%d (want 2,2,1,0)\n", st.faces,
               st.eulerCharacteristic, (int)st.orientable, st.genus);
    }
    {
        auto st = surface_stats(loopDiagram(-1));
        printf("neg loop: f=%d chi=%d orient=%d crosscap=%d (want 1,1,0,1)\n", st.faces,
               st.eulerCharacteristic, (int)st.orientable, st.crosscaps);
    }
    {
        auto st = surface_stats(theta());
        printf("plane theta: f=%d chi=%d genus=%d (want 3,2,0)\n", st.faces, st.eulerCharacteristic,
               st.genus);
        auto st2 = surface_stats(theta(false));
        printf("torus theta: f=%d chi=%d genus=%d (want 1,0,1)\n", st2.faces, st2.eulerCharacteristic,
               st2.genus);
    }
    {
        auto st = surface_stats(bouquet2(true, 1, 1));
        printf("B2t: f=%d chi=%d orient=%d genus=%d (want 1,0,1,1)\n", st.faces,
               st.eulerCharacteristic, (int)st.orientable, st.genus);
        auto st2 = surface_stats(bouquet2(true, 1, -1));
        printf("B2k: f=%d chi=%d orient=%d crosscap=%d (want 1,0,0,2)\n", st2.faces,
               st2.eulerCharacteristic, (int)st2.orientable, st2.crosscaps);
        auto st3 = surface_stats(bouquet2(false, 1, -1));
        printf("B2p: f=%d chi=%d orient=%d crosscap=%d (want 2,1,0,1)\n", st3.faces,
               st3.eulerCharacteristic, (int)st3.orientable, st3.crosscaps);
    }
    {
        auto st = surface_stats(k33());
        printf("k33 std: f=%d chi=%d orient=%d genus=%d (want 3,0,1,1)\n", st.faces,
               st.eulerCharacteristic, (int)st.orientable, st.genus);
    }
    {
        // Penrose sanity for the negative loop: sum over blowup states.
        for (int sign : {+1, -1}) {
            PMDiagram b = blowup(loopDiagram(sign));
            long p2 = 0;  // evaluate at n=2: sum (-1)^w 2^k
            Hypercube hc(b);
            hc.forEachState([&](const StateIndex& a, const CircleDecomposition& c) {
                p2 += (a.weight() % 2 ? -1 : 1) * (1L << c.k);
            });
            printf("P(loop sign=%+d, 2) = %ld (want %s)\n", sign, p2, sign > 0 ? "2" : "-2");
        }
    }
    return 0;
}
