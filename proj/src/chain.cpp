#include "rch/chain.hpp"

#include <algorithm>
#include <sstream>

namespace rch {

AlgebraSpec algebra_spec(int n, const Rat& t) {
    if (n < 2) throw std::invalid_argument("algebra requires n >= 2");
    AlgebraSpec s;
    s.n = n;
    s.m = (n % 2 == 0) ? n / 2 : (n - 1) / 2;
    s.t = t;
    return s;
}

std::vector<int> qdim_exponents(const AlgebraSpec& s) {
    std::vector<int> e;
    for (int k = 0; k < s.n; ++k) e.push_back(s.m - k);
    return e;
}

std::vector<EdgeMapEntry> edge_map_table(EdgeKind kind, const AlgebraSpec& s) {
    std::vector<EdgeMapEntry> out;
    const int n = s.n, m = s.m;
    const QuadExt one{Rat(1)};
    const QuadExt tval{s.t};
    const QuadExt rootN = QuadExt::sqrt_of(n);
    switch (kind) {
        case EdgeKind::Merge:
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    if (a + b < n)
                        out.push_back({{a, b}, {a + b}, one});
                    else if (s.t != 0)
                        out.push_back({{a, b}, {a + b - n}, tval});
                }
            break;
        case EdgeKind::Split:
            for (int k = 0; k < n; ++k) {
                for (int i = 0; i < n; ++i) {
                    int j = k + 2 * m - i;
                    if (j >= 0 && j < n) out.push_back({{k}, {i, j}, one});
                }
                if (s.t != 0)
                    for (int i = 0; i < n; ++i) {
                        int j = k + 2 * m - n - i;
                        if (j >= 0 && j < n) out.push_back({{k}, {i, j}, tval});
                    }
            }
            break;
        case EdgeKind::SelfTouch:
            for (int k = 0; k < n; ++k) {
                if (k + m < n)
                    out.push_back({{k}, {k + m}, rootN});
                else if (s.t != 0)
                    out.push_back({{k}, {k + m - n}, tval * rootN});
            }
            break;
    }
    return out;
}

namespace {

// Reindex the table by input labels for fast application.
std::vector<std::vector<EdgeMapEntry>> bucketize(const std::vector<EdgeMapEntry>& tab, int n,
                                                 int arity) {
    std::vector<std::vector<EdgeMapEntry>> by(arity == 2 ? n * n : n);
    for (auto& e : tab) {
        int ix = arity == 2 ? e.in[0] * n + e.in[1] : e.in[0];
        by[ix].push_back(e);
    }
    return by;
}

}  // namespace

ChainComplex::ChainComplex(const PMDiagram& pm, const AlgebraSpec& spec, const Caps& caps)
    : pm_(pm), spec_(spec), hc_(pm, caps) {
    mergeTab_ = bucketize(edge_map_table(EdgeKind::Merge, spec_), spec_.n, 2);
    splitTab_ = bucketize(edge_map_table(EdgeKind::Split, spec_), spec_.n, 1);
    etaTab_ = bucketize(edge_map_table(EdgeKind::SelfTouch, spec_), spec_.n, 1);
    buildBlocks(caps);
}

int ChainComplex::jOf(const Generator& g) const {
    int deg = 0;
    for (uint8_t l : g.labels) deg += spec_.m - l;
    return deg + spec_.m * __builtin_popcount(g.state);
}

int ChainComplex::keyOf(const Generator& g) const {
    int j = jOf(g);
    if (bigraded()) return j;
    int r = j % spec_.n;
    return r < 0 ? r + spec_.n : r;
}

void ChainComplex::buildBlocks(const Caps& caps) {
    // Guard the materialized size per homological degree before enumerating.
    for (int i = 0; i <= ell(); ++i) {
        Int total = 0;
        for (uint64_t b = 0; b < hc_.size(); ++b)
            if (__builtin_popcount(static_cast<uint32_t>(b)) == i)
                total += ipow(spec_.n, hc_.decomposition(static_cast<uint32_t>(b)).k);
        if (total > Int(static_cast<unsigned long>(caps.maxGeneratorsPerBlock)))
            throw CapExceeded("degree " + std::to_string(i) + " holds " + to_string(total) +
                              " generators, over the generator cap");
    }
    for (uint64_t b = 0; b < hc_.size(); ++b) {
        uint32_t bits = static_cast<uint32_t>(b);
        int i = __builtin_popcount(bits);
        const auto& dec = hc_.decomposition(bits);
        Generator g;
        g.state = bits;
        g.labels.assign(dec.k, 0);
        // odometer over label tuples
        for (;;) {
            int key = keyOf(g);
            auto& blk = blocks_[{i, key}];
            blk.i = i;
            blk.key = key;
            blk.index.emplace(g, blk.dim());
            blk.gens.push_back(g);
            int pos = 0;
            while (pos < dec.k && g.labels[pos] == spec_.n - 1) g.labels[pos++] = 0;
            if (pos == dec.k) break;
            ++g.labels[pos];
        }
        if (dec.k == 0) {  // single generator with no circles
            int key = keyOf(g);
            auto& blk = blocks_[{i, key}];
            blk.i = i;
            blk.key = key;
            if (blk.index.emplace(g, blk.dim()).second) blk.gens.push_back(g);
        }
    }
}

std::vector<int> ChainComplex::keysAt(int i) const {
    std::vector<int> keys;
    for (auto& [k, blk] : blocks_)
        if (k.first == i) keys.push_back(k.second);
    return keys;
}

const GradedBlock* ChainComplex::block(int i, int key) const {
    auto it = blocks_.find({i, key});
    return it == blocks_.end() ? nullptr : &it->second;
}

long ChainComplex::dimAt(int i) const {
    long d = 0;
    for (auto& [k, blk] : blocks_)
        if (k.first == i) d += blk.dim();
    return d;
}

SparseMat ChainComplex::assembleMatrix(int i, int key) const {
    const GradedBlock* src = block(i, key);
    const GradedBlock* tgt = block(i + 1, key);  // same j (t = 0) or same residue
    SparseMat m;
    m.cols = src ? src->dim() : 0;
    m.rows = tgt ? tgt->dim() : 0;
    if (!src || !tgt) return m;

    for (int col = 0; col < src->dim(); ++col) {
        const Generator& g = src->gens[col];
        for (const HyperEdge& he : hc_.edgesFrom(g.state)) {
            const auto& tdec = hc_.decomposition(g.state | (1u << he.pos));
            Generator img;
            img.state = g.state | (1u << he.pos);
            img.labels.assign(tdec.k, 0);
            for (size_t c = 0; c < he.srcToTgt.size(); ++c)
                if (he.srcToTgt[c] >= 0) img.labels[he.srcToTgt[c]] = g.labels[c];

            const std::vector<EdgeMapEntry>* terms = nullptr;
            switch (he.kind) {
                case EdgeKind::Merge: {
                    int a = g.labels[he.srcChanged[0]], b = g.labels[he.srcChanged[1]];
                    terms = &mergeTab_[a * spec_.n + b];
                    break;
                }
                case EdgeKind::Split:
                    terms = &splitTab_[g.labels[he.srcChanged[0]]];
                    break;
                case EdgeKind::SelfTouch:
                    terms = &etaTab_[g.labels[he.srcChanged[0]]];
                    break;
            }
            for (const EdgeMapEntry& t : *terms) {
                Generator out = img;
                out.labels[he.tgtChanged[0]] = static_cast<uint8_t>(t.out[0]);
                if (t.out.size() == 2) out.labels[he.tgtChanged[1]] = static_cast<uint8_t>(t.out[1]);
                auto it = tgt->index.find(out);
                if (it == tgt->index.end()) {
                    if (bigraded()) continue;  // lands in a different j-block
                    throw std::logic_error("differential left its residue block");
                }
                QuadExt coeff = he.sign < 0 ? -t.coeff : t.coeff;
                m.add(it->second, col, coeff);
            }
        }
    }
    m.compress();
    return m;
}

const SparseMat& ChainComplex::differential(int i, int key) const {
    std::lock_guard<std::mutex> lock(dcacheMx_);
    auto it = dcache_.find({i, key});
    if (it == dcache_.end()) it = dcache_.emplace(std::make_pair(i, key), assembleMatrix(i, key)).first;
    return it->second;
}

std::string VerifyReport::str() const {
    if (ok) return "d^2 = 0 holds on every block";
    std::string s;
    for (auto& f : failures) s += f + "\n";
    return s;
}

VerifyReport verify_complex(const ChainComplex& cx) {
    VerifyReport rep;
    for (int i = 0; i + 2 <= cx.ell(); ++i) {
        for (int key : cx.keysAt(i)) {
            const SparseMat& d0 = cx.differential(i, key);
            if (d0.rows == 0) continue;
            const SparseMat& d1 = cx.differential(i + 1, key);
            if (d1.rows == 0 && d1.cols == 0) continue;
            SparseMat sq = multiply(d1, d0);
            sq.compress();
            if (!sq.entries.empty()) {
                rep.ok = false;
                auto& e = sq.entries.front();
                std::ostringstream os;
                os << "d^2 != 0 at i=" << i << " key=" << key << ": entry (" << e.r << "," << e.c
                   << ") = " << e.v.str() << " [" << sq.entries.size() << " nonzero entries]";
                rep.failures.push_back(os.str());
            }
        }
    }
    return rep;
}

namespace {

// For the bigraded check in psi_class: the t=0 edge-map image of the psi
// labels under one hyperedge, accumulated into a map keyed by generator.
void applyEdgeToPsi(const Hypercube& hc, const AlgebraSpec& spec, const Generator& g,
                    const HyperEdge& he, std::map<Generator, QuadExt>& acc) {
    const auto& tdec = hc.decomposition(g.state | (1u << he.pos));
    Generator img;
    img.state = g.state | (1u << he.pos);
    img.labels.assign(tdec.k, 0);
    for (size_t c = 0; c < he.srcToTgt.size(); ++c)
        if (he.srcToTgt[c] >= 0) img.labels[he.srcToTgt[c]] = g.labels[c];
    for (const EdgeMapEntry& t : edge_map_table(he.kind, spec)) {
        bool match = t.in.size() == 2
                         ? (t.in[0] == g.labels[he.srcChanged[0]] && t.in[1] == g.labels[he.srcChanged[1]])
                         : t.in[0] == g.labels[he.srcChanged[0]];
        if (!match) continue;
        Generator out = img;
        out.labels[he.tgtChanged[0]] = static_cast<uint8_t>(t.out[0]);
        if (t.out.size() == 2) out.labels[he.tgtChanged[1]] = static_cast<uint8_t>(t.out[1]);
        QuadExt c = he.sign < 0 ? -t.coeff : t.coeff;
        auto [it, fresh] = acc.emplace(out, c);
        if (!fresh) it->second += c;
    }
}

}  // namespace

PsiClass psi_class(const PMDiagram& pm, const AlgebraSpec& spec) {
    if (spec.t != 0) throw std::invalid_argument("psi_class lives in the t = 0 theory");
    Hypercube hc(pm);
    const auto& dec = hc.decomposition(0);
    PsiClass psi;
    psi.gen.state = 0;
    psi.gen.labels.assign(dec.k, static_cast<uint8_t>(spec.n - 1));
    int deg = dec.k * (spec.m - (spec.n - 1));
    psi.j = deg;
    psi.expectedJ = (spec.n % 2 == 0) ? Rat(2 - spec.n, 2) * dec.k : Rat(1 - spec.n, 2) * dec.k;

    bool orientable = state_surface(pm, {0, hc.ell()}).orientable;
    psi.asserted = (spec.n % 2 == 0) || orientable;

    std::map<Generator, QuadExt> image;
    for (const HyperEdge& he : hc.edgesFrom(0)) applyEdgeToPsi(hc, spec, psi.gen, he, image);
    psi.boundaryIsZero = true;
    for (auto& [g, c] : image)
        if (!c.isZero()) psi.boundaryIsZero = false;
    return psi;
}

}  // namespace rch
