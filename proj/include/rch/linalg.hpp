#pragma once

#include "rch/quadext.hpp"

#include <map>
#include <vector>

namespace rch {

// Sparse matrix over Q(sqrt(n)) in coordinate form; no explicit zeros.
struct SparseMat {
    int rows = 0, cols = 0;
    struct Entry {
        int r, c;
        QuadExt v;
    };
    std::vector<Entry> entries;

    void add(int r, int c, const QuadExt& v) {
        if (!v.isZero()) entries.push_back({r, c, v});
    }
    // Combine duplicate coordinates; drops entries that cancel.
    void compress();
    SparseMat transposed() const;
    bool isZero() const;
    std::string triplets() const;  // one `row col a b` line per entry
};

// a*b, for the d^2 = 0 checks.
SparseMat multiply(const SparseMat& a, const SparseMat& b);

// Exact rank by sparse Gaussian elimination. Pivots prefer structurally
// sparse columns (fewest active entries, then lowest column id, then
// sparsest row, then lowest row id), which keeps fill-in tolerable on the
// hypercube differentials and is deterministic.
long rank(const SparseMat& m);

// Textbook dense elimination; the independent cross-check path.
long dense_rank(const SparseMat& m);

// Basis of the right kernel as dense columns (small blocks only).
std::vector<std::vector<QuadExt>> kernel_basis(const SparseMat& m);

// Dimension of the span of a set of dense vectors.
long span_dim(const std::vector<std::vector<QuadExt>>& vecs);

// Solve A x = b exactly; returns false when inconsistent.
bool solve(const SparseMat& a, const std::vector<QuadExt>& b, std::vector<QuadExt>& x);

}  // namespace rch
