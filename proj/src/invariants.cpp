#include "rch/invariants.hpp"

#include "rch/oracle.hpp"
#include "rch/threads.hpp"

#include <algorithm>
#include <set>

namespace rch {

namespace {

// (weight, circles) histogram of the hypercube; every state sum below reads
// off this table.
std::map<std::pair<int, int>, long> stateHistogram(const PMDiagram& pm, const Caps& caps) {
    Hypercube hc(pm, caps);
    std::map<std::pair<int, int>, long> hist;
    hc.forEachState(
        [&](const StateIndex& a, const CircleDecomposition& c) { ++hist[{a.weight(), c.k}]; },
        Hypercube::Order::GrayCode);
    return hist;
}

void rejectSmallN(int n) {
    if (n < 2) throw std::invalid_argument("color invariants need n >= 2");
}

}  // namespace

LaurentPoly n_color_polynomial(const PMDiagram& pm, int n, const Caps& caps) {
    rejectSmallN(n);
    requireValid(pm);
    AlgebraSpec spec = algebra_spec(n, Rat(0));
    LaurentPoly qdim;
    for (int e : qdim_exponents(spec)) qdim.add(e, 1);

    if (pm.d.numVertices() == 0 && pm.d.freeCircles == 0) return LaurentPoly(Int(1));
    if (pm.d.numVertices() == 0) return qdim.pow(pm.d.freeCircles);

    auto hist = stateHistogram(pm, caps);
    int maxK = 0;
    for (auto& [wk, cnt] : hist) maxK = std::max(maxK, wk.second);
    std::vector<LaurentPoly> qpow(maxK + 1);
    qpow[0] = LaurentPoly(Int(1));
    for (int k = 1; k <= maxK; ++k) qpow[k] = qpow[k - 1] * qdim;

    LaurentPoly acc;
    for (auto& [wk, cnt] : hist) {
        auto [w, k] = wk;
        for (auto& [e, c] : qpow[k].terms())
            acc.add(e + spec.m * w, (w % 2 ? -c : c) * cnt);
    }
    return acc;
}

Rat n_color_number(const PMDiagram& pm, int n, const Caps& caps) {
    return n_color_polynomial(pm, n, caps).eval(Rat(1));
}

VarPoly penrose_polynomial(const RibbonDiagram& d, const Caps& caps) {
    if (!d.connected()) throw std::invalid_argument("Penrose polynomial requires a connected diagram");
    PMDiagram b = blowup(d);
    auto hist = stateHistogram(b, caps);
    VarPoly p('n');
    for (auto& [wk, cnt] : hist) p.add(wk.second, Rat((wk.first % 2 ? -1 : 1) * cnt));
    return p;
}

BiPoly two_variable_penrose(const PMDiagram& pm, const Caps& caps) {
    if (!pm.d.connected()) throw std::invalid_argument("two-variable Penrose requires a connected diagram");
    if (pm.d.numVertices() == 0) {
        BiPoly p('q', 'n');
        p.add(0, pm.d.freeCircles, Rat(1));
        return p;
    }
    auto hist = stateHistogram(pm, caps);
    BiPoly p('q', 'n');
    for (auto& [wk, cnt] : hist) p.add(wk.first, wk.second, Rat((wk.first % 2 ? -1 : 1) * cnt));
    return p;
}

VarPoly total_face_color_at(const RibbonDiagram& d, int n, TfcPath path, const Caps& caps) {
    rejectSmallN(n);
    if (!d.connected()) throw std::invalid_argument("total face color requires a connected diagram");
    PMDiagram b = blowup(d);
    VarPoly p('t');
    if (path == TfcPath::LinearAlgebra) {
        FilteredTable t = filtered_homology(b, n, caps);
        for (auto& [i, dim] : t) p.add(i, Rat(dim));
        return p;
    }
    Hypercube hc(b, caps);
    std::vector<Int> counts(hc.size());
    parallel_for(hc.size(), [&](size_t bits) {
        counts[bits] =
            proper_coloring_count(circle_multigraph(hc.decomposition(static_cast<uint32_t>(bits))), n);
    });
    for (uint64_t bits = 0; bits < hc.size(); ++bits)
        if (counts[bits] != 0)
            p.add(__builtin_popcount(static_cast<uint32_t>(bits)), Rat(counts[bits]));
    return p;
}

BiPoly total_face_color_interpolated(const RibbonDiagram& d, const Caps& caps) {
    if (!d.connected()) throw std::invalid_argument("total face color requires a connected diagram");
    PMDiagram b = blowup(d);
    Hypercube hc(b, caps);
    int maxK = 0;
    hc.forEachState([&](const StateIndex&, const CircleDecomposition& c) { maxK = std::max(maxK, c.k); });

    // Chromatic counts per state are degree <= maxK polynomials in n with
    // roots at 0 and 1, so maxK - 1 sample points pin each t-coefficient and
    // one more point checks them.
    int lastSample = std::max(2, maxK);          // samples at n = 2..lastSample
    int heldOut = lastSample + 1;
    std::map<int, std::vector<std::pair<Rat, Rat>>> samples;  // t-degree -> (n, value/n(n-1))
    std::map<int, VarPoly> tCoeffAtN;
    for (int n = 2; n <= heldOut; ++n) tCoeffAtN[n] = total_face_color_at(d, n, TfcPath::Oracle, caps);

    std::set<int> tDegrees;
    for (auto& [n, poly] : tCoeffAtN)
        for (auto& [i, c] : poly.terms()) tDegrees.insert(i);

    BiPoly out('n', 't');
    for (int i : tDegrees) {
        std::vector<std::pair<Rat, Rat>> pts;
        for (int n = 2; n <= lastSample; ++n)
            pts.push_back({Rat(n), tCoeffAtN[n].coeff(i) / Rat(n * (n - 1))});
        VarPoly g = poly_interpolate(pts, 'n');
        // n(n-1) * g
        VarPoly full('n');
        for (auto& [e, c] : g.terms()) {
            full.add(e + 2, c);
            full.add(e + 1, -c);
        }
        if (full.eval(Rat(heldOut)) != tCoeffAtN[heldOut].coeff(i))
            throw std::runtime_error("interpolation failed its held-out check at t^" +
                                     std::to_string(i));
        for (auto& [e, c] : full.terms()) out.add(e, i, c);
    }
    return out;
}

BiPoly tsharp(const PMDiagram& pm, int n, const Caps& caps) {
    rejectSmallN(n);
    BigradedTable t = bigraded_homology(pm, n, caps);
    BiPoly p('t', 'q');
    for (auto& [ij, dim] : t) p.add(ij.first, ij.second, Rat(dim));
    return p;
}

EulerCheck euler_check(const PMDiagram& pm, int n, const Caps& caps) {
    EulerCheck ec;
    BigradedTable t = bigraded_homology(pm, n, caps);
    for (auto& [ij, dim] : t) ec.fromHomology.add(ij.second, (ij.first % 2 ? -dim : dim));
    ec.statePolynomial = n_color_polynomial(pm, n, caps);
    ec.match = ec.fromHomology == ec.statePolynomial;
    return ec;
}

VarPoly penrose_abstract(const RibbonDiagram& d, const Caps& caps) {
    for (int v = 0; v < d.numVertices(); ++v)
        if (d.valence(v) != 3)
            throw std::invalid_argument("abstract Penrose normalization needs a trivalent diagram");
    if (d.numVertices() > 14)
        throw std::invalid_argument("abstract Penrose normalization capped at 14 vertices");
    VarPoly best('n');
    bool haveNonzero = false;
    for (uint32_t mask = 0; mask < (1u << d.numVertices()); ++mask) {
        // Reversing a rotation without the sign change picks the other cyclic
        // order, a genuinely different ribbon structure (unlike vertex_flip,
        // which preserves the surface).
        RibbonDiagram cur = d;
        for (int v = 0; v < d.numVertices(); ++v)
            if ((mask >> v) & 1) std::reverse(cur.rotation[v].begin(), cur.rotation[v].end());
        VarPoly p = penrose_polynomial(cur, caps);
        if (p.isZero()) continue;
        haveNonzero = true;
        if (p.terms().rbegin()->second > 0) return p;
        best = p;
    }
    if (!haveNonzero) return VarPoly('n');
    // Every representative had a negative leading coefficient; vertex flips
    // only realize one sign class here, so report the sign-corrected one.
    VarPoly flipped('n');
    for (auto& [e, c] : best.terms()) flipped.add(e, -c);
    return flipped;
}

nlohmann::json InvariantReport::toJson() const {
    return {{"diagram", diagram},
            {"fingerprint", fingerprint},
            {"invariant", invariant},
            {"params", params},
            {"value", value}};
}

}  // namespace rch
