#include "rch/states.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace rch {

std::string StateIndex::str() const {
    std::string s = "0b";
    for (int i = len - 1; i >= 0; --i) s += bit(i) ? '1' : '0';
    return s;
}

namespace {

struct SiteDarts {
    Dart a, b, c, d;  // a = succ of end 0, b = pred of end 0, c/d same at end 1
};

SiteDarts siteDarts(const RibbonDiagram& d, const RibbonDiagram::DartIndex& ix, int e) {
    Dart h0{e, 0}, h1{e, 1};
    return {d.rotSucc(ix, h0), d.rotPred(ix, h0), d.rotSucc(ix, h1), d.rotPred(ix, h1)};
}

int dartId(Dart d) { return d.e * 2 + d.end; }

void checkTraceable(const PMDiagram& pm) {
    requireValid(pm);
    for (int v = 0; v < pm.d.numVertices(); ++v)
        if (pm.d.valence(v) != 3)
            throw std::invalid_argument("state tracing requires a trivalent diagram; vertex " +
                                        pm.d.vertexNames[v] + " has valence " +
                                        std::to_string(pm.d.valence(v)));
}

}  // namespace

CircleDecomposition trace_circles(const PMDiagram& pm, const StateIndex& alpha) {
    checkTraceable(pm);
    const RibbonDiagram& d = pm.d;
    auto morder = pm.matchingOrder();
    if (alpha.len != static_cast<int>(morder.size()))
        throw std::invalid_argument("state length does not match matching size");
    auto ix = d.buildDartIndex();

    int nd = d.numEdges() * 2;
    std::vector<int> link(nd, -1);  // arc pairing on non-matching darts
    std::vector<char> isPort(nd, 0);
    for (int e = 0; e < d.numEdges(); ++e)
        if (!pm.matching.count(e)) isPort[e * 2] = isPort[e * 2 + 1] = 1;

    std::vector<std::array<Dart, 2>> arcPorts(morder.size());  // first dart of each arc
    for (size_t p = 0; p < morder.size(); ++p) {
        int e = morder[p];
        SiteDarts sd = siteDarts(d, ix, e);
        // Effective smoothing: a negative band starts out half-twisted, so the
        // roles of the two pictures swap.
        int s = static_cast<int>(alpha.bit(static_cast<int>(p))) ^ (d.edges[e].sign < 0 ? 1 : 0);
        Dart x = sd.a, y = (s == 0) ? sd.d : sd.c;
        Dart x2 = sd.b, y2 = (s == 0) ? sd.c : sd.d;
        link[dartId(x)] = dartId(y);
        link[dartId(y)] = dartId(x);
        link[dartId(x2)] = dartId(y2);
        link[dartId(y2)] = dartId(x2);
        arcPorts[p] = {x, x2};
    }

    CircleDecomposition out;
    out.portCircle.assign(nd, -1);
    // Circles alternate strand (to the mate dart) and smoothing arc steps;
    // starting darts ascend, which fixes the circle ids.
    for (int start = 0; start < nd; ++start) {
        if (!isPort[start] || out.portCircle[start] >= 0) continue;
        int id = out.traced++;
        int cur = start;
        while (out.portCircle[cur] < 0) {
            out.portCircle[cur] = id;
            int mate = (cur ^ 1);
            out.portCircle[mate] = id;
            cur = link[mate];
        }
    }
    out.k = out.traced + d.freeCircles;
    out.site.resize(morder.size());
    for (size_t p = 0; p < morder.size(); ++p)
        out.site[p] = {out.portCircle[dartId(arcPorts[p][0])], out.portCircle[dartId(arcPorts[p][1])]};
    out.along.assign(d.numEdges(), {-1, -1});
    for (int e = 0; e < d.numEdges(); ++e)
        if (!pm.matching.count(e)) {
            int c = out.portCircle[e * 2];
            out.along[e] = {c, c};
        }
    for (size_t p = 0; p < morder.size(); ++p) out.along[morder[p]] = out.site[p];
    return out;
}

namespace {

HyperEdge classifyFrom(const PMDiagram& pm, const std::vector<int>& morder,
                       const RibbonDiagram::DartIndex& ix, const StateIndex& alpha, int pos,
                       const CircleDecomposition& src, const CircleDecomposition& tgt) {
    HyperEdge he;
    he.source = alpha;
    he.pos = pos;
    int ones = 0;
    for (int i = 0; i < pos; ++i) ones += alpha.bit(i);
    he.sign = (ones % 2 == 0) ? +1 : -1;

    SiteDarts sd = siteDarts(pm.d, ix, morder[pos]);
    std::array<int, 4> ports = {dartId(sd.a), dartId(sd.b), dartId(sd.c), dartId(sd.d)};

    std::vector<char> srcTouched(src.traced, 0), tgtTouched(tgt.traced, 0);
    for (int p : ports) {
        srcTouched[src.portCircle[p]] = 1;
        tgtTouched[tgt.portCircle[p]] = 1;
    }
    int nSrc = static_cast<int>(std::count(srcTouched.begin(), srcTouched.end(), 1));
    int nTgt = static_cast<int>(std::count(tgtTouched.begin(), tgtTouched.end(), 1));
    if (nSrc == 2 && nTgt == 1)
        he.kind = EdgeKind::Merge;
    else if (nSrc == 1 && nTgt == 2)
        he.kind = EdgeKind::Split;
    else if (nSrc == 1 && nTgt == 1)
        he.kind = EdgeKind::SelfTouch;
    else
        throw std::logic_error("impossible circle change at a smoothing site");

    int ci = 0;
    for (int c = 0; c < src.traced; ++c)
        if (srcTouched[c]) he.srcChanged[ci++] = c;
    ci = 0;
    for (int c = 0; c < tgt.traced; ++c)
        if (tgtTouched[c]) he.tgtChanged[ci++] = c;

    // Untouched circles keep their dart sets; match them by any member dart.
    he.srcToTgt.assign(src.k, -1);
    for (int p = 0; p < static_cast<int>(src.portCircle.size()); ++p) {
        int c = src.portCircle[p];
        if (c < 0 || srcTouched[c] || he.srcToTgt[c] >= 0) continue;
        he.srcToTgt[c] = tgt.portCircle[p];
    }
    for (int f = 0; f < pm.d.freeCircles; ++f) he.srcToTgt[src.traced + f] = tgt.traced + f;
    return he;
}

}  // namespace

HyperEdge classify_edge(const PMDiagram& pm, const StateIndex& alpha, int pos) {
    if (alpha.bit(pos)) throw std::invalid_argument("classify_edge: bit already set");
    auto morder = pm.matchingOrder();
    auto ix = pm.d.buildDartIndex();
    CircleDecomposition src = trace_circles(pm, alpha);
    CircleDecomposition tgt = trace_circles(pm, alpha.flipped(pos));
    return classifyFrom(pm, morder, ix, alpha, pos, src, tgt);
}

Hypercube::Hypercube(const PMDiagram& pm, const Caps& caps) : pm_(pm) {
    checkTraceable(pm_);
    morder_ = pm_.matchingOrder();
    ell_ = static_cast<int>(morder_.size());
    if (ell_ > 30 || (1ull << ell_) > caps.maxStates)
        throw CapExceeded("hypercube with 2^" + std::to_string(ell_) +
                          " states exceeds the state cap");
    st_.resize(1ull << ell_);
    for (uint64_t b = 0; b < st_.size(); ++b)
        st_[b] = trace_circles(pm_, {static_cast<uint32_t>(b), ell_});
    out_.resize(st_.size());
    outBuilt_.assign(st_.size(), 0);
}

const std::vector<HyperEdge>& Hypercube::edgesFrom(uint32_t bits) const {
    std::lock_guard<std::mutex> lock(outMx_);
    if (!outBuilt_[bits]) {
        auto ix = pm_.d.buildDartIndex();
        StateIndex a{bits, ell_};
        std::vector<HyperEdge> v;
        for (int p = 0; p < ell_; ++p) {
            if (a.bit(p)) continue;
            v.push_back(classifyFrom(pm_, morder_, ix, a, p, st_[bits], st_[bits ^ (1u << p)]));
        }
        out_[bits] = std::move(v);
        outBuilt_[bits] = 1;
    }
    return out_[bits];
}

void Hypercube::forEachState(
    const std::function<void(const StateIndex&, const CircleDecomposition&)>& f,
    Order order) const {
    for (uint64_t i = 0; i < st_.size(); ++i) {
        uint32_t bits = order == Order::GrayCode ? static_cast<uint32_t>(i ^ (i >> 1))
                                                 : static_cast<uint32_t>(i);
        f(StateIndex{bits, ell_}, st_[bits]);
    }
}

SurfaceStats state_surface(const PMDiagram& pm, const StateIndex& alpha) {
    checkTraceable(pm);
    if (pm.d.freeCircles > 0)
        throw std::invalid_argument("state_surface requires a diagram without free circles");
    const RibbonDiagram& d = pm.d;

    // Contract the cycles of the non-matching 2-factor.
    std::vector<int> parent(d.numVertices());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int e = 0; e < d.numEdges(); ++e)
        if (!pm.matching.count(e)) parent[find(d.edges[e].u)] = find(d.edges[e].v);
    std::map<int, int> compId;
    for (int v = 0; v < d.numVertices(); ++v) compId.emplace(find(v), static_cast<int>(compId.size()));

    int vG = static_cast<int>(compId.size());
    int eG = static_cast<int>(pm.matching.size());
    int k = trace_circles(pm, alpha).k;

    RibbonDiagram contracted;  // only signs and incidences matter for balance
    for (int i = 0; i < vG; ++i) contracted.addVertex("c" + std::to_string(i));
    auto morder = pm.matchingOrder();
    for (size_t p = 0; p < morder.size(); ++p) {
        const auto& e = d.edges[morder[p]];
        int sign = e.sign * (alpha.bit(static_cast<int>(p)) ? -1 : +1);
        contracted.addEdge(e.name, compId[find(e.u)], compId[find(e.v)], sign);
    }

    SurfaceStats s;
    s.faces = k;
    s.eulerCharacteristic = vG - eG + k;
    s.orientable = signsBalanced(contracted);
    if (s.orientable)
        s.genus = (2 - s.eulerCharacteristic) / 2;
    else
        s.crosscaps = 2 - s.eulerCharacteristic;
    return s;
}

SurfaceStats surface_stats(const RibbonDiagram& d) {
    requireValid(d);
    if (d.numVertices() == 0) throw std::invalid_argument("surface_stats requires vertices");
    if (!d.connected()) throw std::invalid_argument("surface_stats requires a connected diagram");
    PMDiagram b = blowup(d);
    int f = trace_circles(b, {0, static_cast<int>(b.matching.size())}).k;
    SurfaceStats s;
    s.faces = f;
    s.eulerCharacteristic = d.numVertices() - d.numEdges() + f;
    s.orientable = signsBalanced(d);
    if (s.orientable)
        s.genus = (2 - s.eulerCharacteristic) / 2;
    else
        s.crosscaps = 2 - s.eulerCharacteristic;
    return s;
}

}  // namespace rch
