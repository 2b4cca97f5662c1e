#include "rch/linalg.hpp"

#include <algorithm>
#include <list>
#include <sstream>
#include <unordered_map>

namespace rch {

void SparseMat::compress() {
    std::map<std::pair<int, int>, QuadExt> acc;
    for (auto& e : entries) {
        auto it = acc.find({e.r, e.c});
        if (it == acc.end())
            acc.emplace(std::make_pair(e.r, e.c), e.v);
        else
            it->second += e.v;
    }
    entries.clear();
    for (auto& [rc, v] : acc)
        if (!v.isZero()) entries.push_back({rc.first, rc.second, v});
}

SparseMat SparseMat::transposed() const {
    SparseMat t;
    t.rows = cols;
    t.cols = rows;
    for (auto& e : entries) t.entries.push_back({e.c, e.r, e.v});
    return t;
}

bool SparseMat::isZero() const {
    SparseMat c = *this;
    c.compress();
    return c.entries.empty();
}

std::string SparseMat::triplets() const {
    std::ostringstream os;
    SparseMat c = *this;
    c.compress();
    for (auto& e : c.entries)
        os << e.r << " " << e.c << " " << to_string(e.v.ratPart()) << " "
           << to_string(e.v.radPart()) << "\n";
    return os.str();
}

SparseMat multiply(const SparseMat& a, const SparseMat& b) {
    if (a.cols != b.rows) throw std::invalid_argument("matrix dimension mismatch");
    // group b by row
    std::unordered_map<int, std::vector<std::pair<int, QuadExt>>> brow;
    for (auto& e : b.entries) brow[e.r].push_back({e.c, e.v});
    SparseMat out;
    out.rows = a.rows;
    out.cols = b.cols;
    for (auto& e : a.entries) {
        auto it = brow.find(e.c);
        if (it == brow.end()) continue;
        for (auto& [c2, v2] : it->second) out.entries.push_back({e.r, c2, e.v * v2});
    }
    out.compress();
    return out;
}

namespace {

// Row-major working form for elimination.
struct WorkMat {
    int rows, cols;
    std::vector<std::map<int, QuadExt>> row;
    explicit WorkMat(const SparseMat& m) : rows(m.rows), cols(m.cols), row(m.rows) {
        SparseMat c = m;
        c.compress();
        for (auto& e : c.entries) row[e.r][e.c] = e.v;
    }
};

}  // namespace

long rank(const SparseMat& m) {
    WorkMat w(m);
    std::vector<char> rowDone(w.rows, 0);
    std::vector<int> colCount(w.cols, 0);
    std::vector<char> colDone(w.cols, 0);
    for (auto& r : w.row)
        for (auto& [c, v] : r) ++colCount[c];

    long rk = 0;
    for (;;) {
        // Sparsest active column, lowest id on ties.
        int pc = -1;
        for (int c = 0; c < w.cols; ++c)
            if (!colDone[c] && colCount[c] > 0 && (pc < 0 || colCount[c] < colCount[pc])) pc = c;
        if (pc < 0) break;
        int pr = -1;
        size_t best = 0;
        for (int r = 0; r < w.rows; ++r) {
            if (rowDone[r]) continue;
            auto it = w.row[r].find(pc);
            if (it == w.row[r].end()) continue;
            if (pr < 0 || w.row[r].size() < best) {
                pr = r;
                best = w.row[r].size();
            }
        }
        if (pr < 0) {  // stale counts
            colDone[pc] = 1;
            colCount[pc] = 0;
            continue;
        }
        ++rk;
        rowDone[pr] = 1;
        colDone[pc] = 1;
        QuadExt inv = w.row[pr].at(pc).inverse();
        for (int r = 0; r < w.rows; ++r) {
            if (rowDone[r]) continue;
            auto it = w.row[r].find(pc);
            if (it == w.row[r].end()) continue;
            QuadExt f = it->second * inv;
            for (auto& [c, v] : w.row[pr]) {
                if (c == pc) continue;
                auto jt = w.row[r].find(c);
                if (jt == w.row[r].end()) {
                    QuadExt nv = -(f * v);
                    if (!nv.isZero()) {
                        w.row[r][c] = nv;
                        ++colCount[c];
                    }
                } else {
                    jt->second -= f * v;
                    if (jt->second.isZero()) {
                        w.row[r].erase(jt);
                        --colCount[c];
                    }
                }
            }
            w.row[r].erase(pc);
            --colCount[pc];
        }
        // Pivot row leaves the active set; release its column counts.
        for (auto& [c, v] : w.row[pr])
            if (c != pc) --colCount[c];
    }
    return rk;
}

long dense_rank(const SparseMat& m) {
    std::vector<std::vector<QuadExt>> a(m.rows, std::vector<QuadExt>(m.cols));
    {
        SparseMat c = m;
        c.compress();
        for (auto& e : c.entries) a[e.r][e.c] = e.v;
    }
    long rk = 0;
    int pr = 0;
    for (int c = 0; c < m.cols && pr < m.rows; ++c) {
        int sel = -1;
        for (int r = pr; r < m.rows; ++r)
            if (!a[r][c].isZero()) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        std::swap(a[pr], a[sel]);
        QuadExt inv = a[pr][c].inverse();
        for (int r = 0; r < m.rows; ++r) {
            if (r == pr || a[r][c].isZero()) continue;
            QuadExt f = a[r][c] * inv;
            for (int c2 = c; c2 < m.cols; ++c2) a[r][c2] -= f * a[pr][c2];
        }
        ++pr;
        ++rk;
    }
    return rk;
}

std::vector<std::vector<QuadExt>> kernel_basis(const SparseMat& m) {
    std::vector<std::vector<QuadExt>> a(m.rows, std::vector<QuadExt>(m.cols));
    {
        SparseMat c = m;
        c.compress();
        for (auto& e : c.entries) a[e.r][e.c] = e.v;
    }
    std::vector<int> pivotOfCol(m.cols, -1);
    int pr = 0;
    for (int c = 0; c < m.cols && pr < m.rows; ++c) {
        int sel = -1;
        for (int r = pr; r < m.rows; ++r)
            if (!a[r][c].isZero()) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        std::swap(a[pr], a[sel]);
        QuadExt inv = a[pr][c].inverse();
        for (int c2 = c; c2 < m.cols; ++c2) a[pr][c2] = a[pr][c2] * inv;
        for (int r = 0; r < m.rows; ++r) {
            if (r == pr || a[r][c].isZero()) continue;
            QuadExt f = a[r][c];
            for (int c2 = c; c2 < m.cols; ++c2) a[r][c2] -= f * a[pr][c2];
        }
        pivotOfCol[c] = pr;
        ++pr;
    }
    std::vector<std::vector<QuadExt>> basis;
    for (int c = 0; c < m.cols; ++c) {
        if (pivotOfCol[c] >= 0) continue;
        std::vector<QuadExt> v(m.cols);
        v[c] = QuadExt(Rat(1));
        for (int c2 = 0; c2 < m.cols; ++c2)
            if (pivotOfCol[c2] >= 0) v[c2] = -a[pivotOfCol[c2]][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

long span_dim(const std::vector<std::vector<QuadExt>>& vecs) {
    if (vecs.empty()) return 0;
    SparseMat m;
    m.rows = static_cast<int>(vecs.size());
    m.cols = static_cast<int>(vecs[0].size());
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) m.add(r, c, vecs[r][c]);
    return rank(m);
}

bool solve(const SparseMat& a, const std::vector<QuadExt>& b, std::vector<QuadExt>& x) {
    std::vector<std::vector<QuadExt>> aug(a.rows, std::vector<QuadExt>(a.cols + 1));
    {
        SparseMat c = a;
        c.compress();
        for (auto& e : c.entries) aug[e.r][e.c] = e.v;
        for (int r = 0; r < a.rows; ++r) aug[r][a.cols] = b[r];
    }
    std::vector<int> pivotCol;
    int pr = 0;
    for (int c = 0; c < a.cols && pr < a.rows; ++c) {
        int sel = -1;
        for (int r = pr; r < a.rows; ++r)
            if (!aug[r][c].isZero()) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        std::swap(aug[pr], aug[sel]);
        QuadExt inv = aug[pr][c].inverse();
        for (int c2 = c; c2 <= a.cols; ++c2) aug[pr][c2] = aug[pr][c2] * inv;
        for (int r = 0; r < a.rows; ++r) {
            if (r == pr || aug[r][c].isZero()) continue;
            QuadExt f = aug[r][c];
            for (int c2 = c; c2 <= a.cols; ++c2) aug[r][c2] -= f * aug[pr][c2];
        }
        pivotCol.push_back(c);
        ++pr;
    }
    for (int r = pr; r < a.rows; ++r)
        if (!aug[r][a.cols].isZero()) return false;
    x.assign(a.cols, QuadExt());
    for (int i = 0; i < pr; ++i) x[pivotCol[i]] = aug[i][a.cols];
    return true;
}

}  // namespace rch
