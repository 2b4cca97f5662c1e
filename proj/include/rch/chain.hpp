#pragma once

#include "rch/linalg.hpp"
#include "rch/states.hpp"

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <vector>

namespace rch {

// The algebra k[x]/(x^n - t) with quantum gradings deg(x^k) = m - k.
struct AlgebraSpec {
    int n = 2;
    int m = 1;  // n/2 for n even, (n-1)/2 for n odd
    Rat t = Rat(0);
};

AlgebraSpec algebra_spec(int n, const Rat& t = Rat(0));

inline int label_degree(const AlgebraSpec& s, int label) { return s.m - label; }

// Exponents of qdim V, i.e. {m - k : k = 0..n-1}.
std::vector<int> qdim_exponents(const AlgebraSpec& s);

struct EdgeMapEntry {
    std::vector<int> in, out;  // one or two labels on each side
    QuadExt coeff;
};

// Coefficient tables of the three edge maps. Merge is algebra multiplication
// (wrapping into a factor t past x^n), Split is the shifted comultiplication
// with its t-tail, SelfTouch multiplies by sqrt(n) x^m (again wrapping with
// t). With t = 0 these are the bigraded maps; t = 1 gives the filtered ones.
std::vector<EdgeMapEntry> edge_map_table(EdgeKind kind, const AlgebraSpec& spec);

struct Generator {
    uint32_t state = 0;
    std::vector<uint8_t> labels;  // one per circle, in circle-id order
    bool operator<(const Generator& o) const {
        return state != o.state ? state < o.state : labels < o.labels;
    }
    bool operator==(const Generator& o) const { return state == o.state && labels == o.labels; }
};

struct GradedBlock {
    int i = 0;    // homological degree
    int key = 0;  // quantum degree j (bigraded) or j mod n (filtered)
    std::vector<Generator> gens;
    std::map<Generator, int> index;
    int dim() const { return static_cast<int>(gens.size()); }
};

// The hypercube complex: generators bucketed by (i, j) when t = 0 and by
// (i, j mod n) otherwise, with sparse differentials between columns.
class ChainComplex {
public:
    ChainComplex(const PMDiagram& pm, const AlgebraSpec& spec, const Caps& caps = {});

    const AlgebraSpec& spec() const { return spec_; }
    const Hypercube& hypercube() const { return hc_; }
    bool bigraded() const { return spec_.t == 0; }
    int ell() const { return hc_.ell(); }

    int jOf(const Generator& g) const;  // deg + m|alpha|
    int keyOf(const Generator& g) const;

    std::vector<int> keysAt(int i) const;
    const GradedBlock* block(int i, int key) const;
    // Differential out of block (i, key); empty target gives a 0-row matrix.
    const SparseMat& differential(int i, int key) const;

    // Total dimension at homological degree i.
    long dimAt(int i) const;

private:
    void buildBlocks(const Caps& caps);
    SparseMat assembleMatrix(int i, int key) const;

    PMDiagram pm_;
    AlgebraSpec spec_;
    Hypercube hc_;
    std::map<std::pair<int, int>, GradedBlock> blocks_;
    mutable std::map<std::pair<int, int>, SparseMat> dcache_;
    mutable std::mutex dcacheMx_;
    std::vector<std::vector<EdgeMapEntry>> mergeTab_, splitTab_, etaTab_;  // indexed by labels
};

struct VerifyReport {
    bool ok = true;
    std::vector<std::string> failures;
    std::string str() const;
};

// Checks d(i+1,*) . d(i,*) = 0 for every block, exactly.
VerifyReport verify_complex(const ChainComplex& cx);

struct PsiClass {
    Generator gen;
    int j = 0;           // actual quantum degree of the generator
    Rat expectedJ;       // (1 - n/2) f, resp. (1/2 - n/2) f
    bool boundaryIsZero = false;
    bool asserted = false;  // false when non-orientable with n odd (warning only)
};

// The canonical class labelling every all-zero-state circle with x^{n-1}.
PsiClass psi_class(const PMDiagram& pm, const AlgebraSpec& spec);

}  // namespace rch
