#include "rch/homology.hpp"

#include "rch/oracle.hpp"
#include "rch/threads.hpp"

#include <mutex>

namespace rch {

BigradedTable bigraded_homology(const ChainComplex& cx) {
    if (!cx.bigraded()) throw std::invalid_argument("bigraded homology needs the t = 0 complex");
    // Collect block keys, compute ranks in parallel, then take
    // dim - rank(out) - rank(in) per block.
    std::vector<std::pair<int, int>> keys;
    for (int i = 0; i <= cx.ell(); ++i)
        for (int j : cx.keysAt(i)) keys.push_back({i, j});
    std::vector<long> rk(keys.size(), 0);
    parallel_for(keys.size(), [&](size_t ix) {
        rk[ix] = rank(cx.differential(keys[ix].first, keys[ix].second));
    });
    std::map<std::pair<int, int>, long> rankOut;
    for (size_t ix = 0; ix < keys.size(); ++ix) rankOut[keys[ix]] = rk[ix];

    BigradedTable table;
    for (size_t ix = 0; ix < keys.size(); ++ix) {
        auto [i, j] = keys[ix];
        long dim = cx.block(i, j)->dim();
        long out = rk[ix];
        auto in = rankOut.find({i - 1, j});
        long d = dim - out - (in == rankOut.end() ? 0 : in->second);
        if (d != 0) table[{i, j}] = d;
    }
    return table;
}

BigradedTable bigraded_homology(const PMDiagram& pm, int n, const Caps& caps) {
    ChainComplex cx(pm, algebra_spec(n, Rat(0)), caps);
    return bigraded_homology(cx);
}

FilteredTable filtered_homology(const ChainComplex& cx) {
    if (cx.bigraded()) throw std::invalid_argument("filtered homology needs a deformed complex");
    std::vector<std::pair<int, int>> keys;
    for (int i = 0; i <= cx.ell(); ++i)
        for (int r : cx.keysAt(i)) keys.push_back({i, r});
    std::vector<long> rk(keys.size(), 0);
    parallel_for(keys.size(), [&](size_t ix) {
        rk[ix] = rank(cx.differential(keys[ix].first, keys[ix].second));
    });
    std::map<std::pair<int, int>, long> rankOut;
    for (size_t ix = 0; ix < keys.size(); ++ix) rankOut[keys[ix]] = rk[ix];

    FilteredTable table;
    for (size_t ix = 0; ix < keys.size(); ++ix) {
        auto [i, r] = keys[ix];
        long dim = cx.block(i, r)->dim();
        auto in = rankOut.find({i - 1, r});
        long d = dim - rk[ix] - (in == rankOut.end() ? 0 : in->second);
        if (d != 0) table[i] += d;
    }
    for (auto it = table.begin(); it != table.end();)
        it = it->second == 0 ? table.erase(it) : std::next(it);
    return table;
}

FilteredTable filtered_homology(const PMDiagram& pm, int n, const Caps& caps) {
    ChainComplex cx(pm, algebra_spec(n, Rat(1)), caps);
    return filtered_homology(cx);
}

namespace {

// One residue class of the filtered complex, flattened: the spectral
// sequence of the j-filtration splits across residues since the
// differential preserves j mod n.
struct ResidueComplex {
    int n = 0;
    std::vector<std::vector<int>> jval;        // per degree i, per column
    std::vector<SparseMat> d;                  // d[i] : C^i -> C^{i+1}
    std::vector<std::vector<Generator>> gens;  // column order, for witnesses
    int jmin = 0, jmax = 0;

    int dim(int i) const {
        return i < 0 || i >= static_cast<int>(jval.size()) ? 0 : static_cast<int>(jval[i].size());
    }
};

ResidueComplex makeResidue(const ChainComplex& cx, int res) {
    ResidueComplex rc;
    rc.n = cx.spec().n;
    rc.jval.resize(cx.ell() + 1);
    rc.gens.resize(cx.ell() + 1);
    rc.d.resize(cx.ell() + 1);
    bool any = false;
    for (int i = 0; i <= cx.ell(); ++i) {
        const GradedBlock* b = cx.block(i, res);
        if (!b) {
            rc.d[i] = SparseMat{};
            continue;
        }
        for (const Generator& g : b->gens) {
            int j = cx.jOf(g);
            rc.jval[i].push_back(j);
            rc.gens[i].push_back(g);
            if (!any || j < rc.jmin) rc.jmin = j;
            if (!any || j > rc.jmax) rc.jmax = j;
            any = true;
        }
        rc.d[i] = cx.differential(i, res);
    }
    for (int i = 0; i <= cx.ell(); ++i) {
        if (rc.d[i].cols == 0) rc.d[i].cols = rc.dim(i);
        if (rc.d[i].rows == 0) rc.d[i].rows = rc.dim(i + 1);
    }
    return rc;
}

// Basis of Z_s^{p,i} = { x in F^p C^i : dx in F^{p+s} C^{i+1} } as full
// coordinate vectors on C^i.
std::vector<std::vector<QuadExt>> zBasis(const ResidueComplex& rc, int i, int p, int s) {
    int dimI = rc.dim(i);
    if (i < 0 || dimI == 0) return {};
    std::vector<int> cols;  // allowed columns: j >= p
    std::vector<int> colPos(dimI, -1);
    for (int c = 0; c < dimI; ++c)
        if (rc.jval[i][c] >= p) {
            colPos[c] = static_cast<int>(cols.size());
            cols.push_back(c);
        }
    if (cols.empty()) return {};

    // Constraint rows: components of dx with target j < p + s must vanish.
    SparseMat a;
    a.cols = static_cast<int>(cols.size());
    std::vector<int> rowKeep;
    if (i < static_cast<int>(rc.jval.size()) - 1 && rc.dim(i + 1) > 0) {
        std::vector<int> rowPos(rc.dim(i + 1), -1);
        for (int r = 0; r < rc.dim(i + 1); ++r)
            if (rc.jval[i + 1][r] < p + s) {
                rowPos[r] = static_cast<int>(rowKeep.size());
                rowKeep.push_back(r);
            }
        a.rows = static_cast<int>(rowKeep.size());
        for (auto& e : rc.d[i].entries)
            if (colPos[e.c] >= 0 && rowPos[e.r] >= 0) a.add(rowPos[e.r], colPos[e.c], e.v);
    }
    auto kb = kernel_basis(a);
    std::vector<std::vector<QuadExt>> out;
    for (auto& v : kb) {
        std::vector<QuadExt> full(dimI);
        for (size_t c = 0; c < cols.size(); ++c) full[cols[c]] = v[c];
        out.push_back(std::move(full));
    }
    return out;
}

std::vector<QuadExt> applyD(const ResidueComplex& rc, int i, const std::vector<QuadExt>& x) {
    std::vector<QuadExt> y(rc.dim(i + 1));
    for (auto& e : rc.d[i].entries)
        if (!x[e.c].isZero()) y[e.r] += e.v * x[e.c];
    return y;
}

// dim E_s^{p,i} (standard indexing: d_s raises filtration by s).
long eDim(const ResidueComplex& rc, int i, int p, int s) {
    auto z = zBasis(rc, i, p, s);
    if (z.empty()) return 0;
    auto denom = zBasis(rc, i, p + 1, s - 1);
    for (auto& v : zBasis(rc, i - 1, p - s + 1, s - 1)) {
        auto dv = applyD(rc, i - 1, v);
        bool nz = false;
        for (auto& q : dv) nz = nz || !q.isZero();
        if (nz) denom.push_back(std::move(dv));
    }
    long zd = span_dim(z);
    long dd = span_dim(denom);
    if (dd == 0) return zd;
    // dim(Z + D) - dim(D) subtracted from dim Z gives dim Z - dim(Z cap D);
    // D is contained in Z here, so this is just zd - dd.
    std::vector<std::vector<QuadExt>> both = z;
    both.insert(both.end(), denom.begin(), denom.end());
    return zd - (dd - (span_dim(both) - zd));
}

int stdIndex(const ResidueComplex& rc, int r) { return (r - 1) * rc.n + 1; }

int pageStabilized(const ResidueComplex& rc) {
    // Past this many pages every differential leaves the occupied j-range.
    return (rc.jmax - rc.jmin) / rc.n + 2;
}

}  // namespace

SpectralPage spectral_page(const PMDiagram& pm, int n, int r, const Caps& caps) {
    if (r < 0) throw std::invalid_argument("page index must be nonnegative");
    ChainComplex cx(pm, algebra_spec(n, Rat(1)), caps);
    SpectralPage page;
    page.r = r;

    std::vector<int> residues = cx.keysAt(0);
    for (int i = 1; i <= cx.ell(); ++i)
        for (int k : cx.keysAt(i))
            if (std::find(residues.begin(), residues.end(), k) == residues.end())
                residues.push_back(k);
    std::sort(residues.begin(), residues.end());

    std::mutex mx;
    parallel_for(residues.size(), [&](size_t ri) {
        ResidueComplex rc = makeResidue(cx, residues[ri]);
        std::map<std::pair<int, int>, long> dims, dimsNext;
        for (int i = 0; i <= cx.ell(); ++i) {
            std::set<int> ps(rc.jval[i].begin(), rc.jval[i].end());
            for (int p : ps) {
                long d, dn;
                if (r == 0) {
                    d = static_cast<long>(std::count(rc.jval[i].begin(), rc.jval[i].end(), p));
                    dn = eDim(rc, i, p, 1);
                } else {
                    d = eDim(rc, i, p, stdIndex(rc, r));
                    dn = eDim(rc, i, p, stdIndex(rc, r + 1));
                }
                if (d != 0) dims[{i, p}] = d;
                if (dn != 0) dimsNext[{i, p}] = dn;
            }
        }
        // rank of d_r out of (i,p) from the page drop: next-page dim equals
        // dim minus ranks out and in, and the rank into (i,p) is the rank out
        // of (i-1, p - rn) (p - 1 at the chain level page).
        int shift = r == 0 ? 0 : r * rc.n;
        std::map<std::pair<int, int>, long> rankOut;
        std::set<std::pair<int, int>> keys;
        for (auto& [k, v] : dims) keys.insert(k);
        for (auto& [k, v] : dimsNext) keys.insert(k);
        for (auto& [i, p] : keys) {
            long d = dims.count({i, p}) ? dims[{i, p}] : 0;
            long dn = dimsNext.count({i, p}) ? dimsNext[{i, p}] : 0;
            long in = rankOut.count({i - 1, p - shift}) ? rankOut[{i - 1, p - shift}] : 0;
            rankOut[{i, p}] = d - dn - in;
        }
        std::lock_guard<std::mutex> g(mx);
        for (auto& [k, v] : dims) page.dims[k] = v;
        for (auto& [k, v] : rankOut)
            if (v != 0) page.rankOut[k] = v;
    });
    return page;
}

int spectral_invariant(const PMDiagram& pm, int n, const Caps& caps) {
    ChainComplex cx(pm, algebra_spec(n, Rat(1)), caps);
    std::vector<int> residues;
    for (int i = 0; i <= cx.ell(); ++i)
        for (int k : cx.keysAt(i))
            if (std::find(residues.begin(), residues.end(), k) == residues.end())
                residues.push_back(k);

    int answer = 0;
    std::mutex mx;
    parallel_for(residues.size(), [&](size_t ri) {
        ResidueComplex rc = makeResidue(cx, residues[ri]);
        int rstab = pageStabilized(rc);
        int sInf = stdIndex(rc, rstab);
        // E_infinity dims per (i,p)
        std::map<std::pair<int, int>, long> einf;
        for (int i = 0; i <= cx.ell(); ++i) {
            std::set<int> ps(rc.jval[i].begin(), rc.jval[i].end());
            for (int p : ps) {
                long d = eDim(rc, i, p, sInf);
                if (d != 0) einf[{i, p}] = d;
            }
        }
        int local = 0;
        for (int r = 0; r <= rstab; ++r) {
            std::map<std::pair<int, int>, long> dims;
            for (int i = 0; i <= cx.ell(); ++i) {
                std::set<int> ps(rc.jval[i].begin(), rc.jval[i].end());
                for (int p : ps) {
                    long d = r == 0
                                 ? static_cast<long>(std::count(rc.jval[i].begin(), rc.jval[i].end(), p))
                                 : eDim(rc, i, p, stdIndex(rc, r));
                    if (d != 0) dims[{i, p}] = d;
                }
            }
            if (dims == einf) {
                local = r;
                break;
            }
            local = rstab;
        }
        std::lock_guard<std::mutex> g(mx);
        answer = std::max(answer, local);
    });
    return answer;
}

PsiSurvival psi_survival(const PMDiagram& pm, int n, const Caps& caps) {
    AlgebraSpec spec1 = algebra_spec(n, Rat(1));
    ChainComplex cx(pm, spec1, caps);
    PsiClass psi0 = psi_class(pm, algebra_spec(n, Rat(0)));

    int res = ((psi0.j % n) + n) % n;
    ResidueComplex rc = makeResidue(cx, res);
    int p = psi0.j;

    // column of psi at degree 0
    int psiCol = -1;
    for (int c = 0; c < rc.dim(0); ++c)
        if (rc.gens[0][c] == psi0.gen) psiCol = c;
    if (psiCol < 0) throw std::logic_error("psi generator not found in its residue complex");

    PsiSurvival out;
    auto live = [&](int r, std::vector<QuadExt>* witness) {
        // Solve d(psi + y) = 0 below level p + rn + 1, y supported on j > p.
        std::vector<int> ycols;
        for (int c = 0; c < rc.dim(0); ++c)
            if (rc.jval[0][c] > p) ycols.push_back(c);
        std::vector<int> rows;
        for (int rr = 0; rr < rc.dim(1); ++rr)
            if (rc.jval[1][rr] < p + r * n + 1) rows.push_back(rr);
        SparseMat a;
        a.rows = static_cast<int>(rows.size());
        a.cols = static_cast<int>(ycols.size());
        std::vector<int> rowPos(rc.dim(1), -1), colPos(rc.dim(0), -1);
        for (size_t k = 0; k < rows.size(); ++k) rowPos[rows[k]] = static_cast<int>(k);
        for (size_t k = 0; k < ycols.size(); ++k) colPos[ycols[k]] = static_cast<int>(k);
        std::vector<QuadExt> b(rows.size());
        for (auto& e : rc.d[0].entries) {
            if (e.c == psiCol && rowPos[e.r] >= 0) b[rowPos[e.r]] -= e.v;
            if (colPos[e.c] >= 0 && rowPos[e.r] >= 0) a.add(rowPos[e.r], colPos[e.c], e.v);
        }
        std::vector<QuadExt> x;
        if (!solve(a, b, x)) return false;
        if (witness) {
            witness->assign(rc.dim(0), QuadExt());
            (*witness)[psiCol] = QuadExt(Rat(1));
            for (size_t k = 0; k < ycols.size(); ++k) (*witness)[ycols[k]] = x[k];
        }
        return true;
    };

    out.cycleAtE1 = live(0, nullptr);
    int rstab = pageStabilized(rc);
    for (int r = 1; r <= rstab; ++r) {
        std::vector<QuadExt> w;
        if (!live(r, &w)) {
            out.survives = false;
            out.diesAtPage = r;
            return out;
        }
        if (r == rstab) {
            out.survives = true;
            for (int c = 0; c < rc.dim(0); ++c)
                if (!w[c].isZero()) out.witness.push_back({rc.gens[0][c], w[c]});
        }
    }
    return out;
}

std::map<uint32_t, Int> harmonic_state_dims(const PMDiagram& pm, int n, const Caps& caps) {
    if (n < 2) throw std::invalid_argument("harmonic counts need n >= 2");
    Hypercube hc(pm, caps);
    std::map<uint32_t, Int> out;
    std::vector<Int> counts(hc.size());
    parallel_for(hc.size(), [&](size_t b) {
        counts[b] = proper_coloring_count(circle_multigraph(hc.decomposition(static_cast<uint32_t>(b))), n);
    });
    for (uint64_t b = 0; b < hc.size(); ++b)
        if (counts[b] != 0) out[static_cast<uint32_t>(b)] = counts[b];
    return out;
}

nlohmann::json tableToJson(const BigradedTable& t) {
    nlohmann::json rows = nlohmann::json::array();
    for (auto& [ij, d] : t) rows.push_back({ij.first, ij.second, d});
    return {{"bigraded", rows}};
}

nlohmann::json tableToJson(const FilteredTable& t) {
    nlohmann::json rows = nlohmann::json::array();
    for (auto& [i, d] : t) rows.push_back({i, d});
    return {{"filtered", rows}};
}

nlohmann::json pageToJson(const SpectralPage& p) {
    nlohmann::json rows = nlohmann::json::array();
    for (auto& [ij, d] : p.dims) rows.push_back({ij.first, ij.second, d});
    nlohmann::json ranks = nlohmann::json::array();
    for (auto& [ij, d] : p.rankOut) ranks.push_back({ij.first, ij.second, d});
    return {{"page", p.r}, {"dims", rows}, {"rank_out", ranks}};
}

}  // namespace rch
