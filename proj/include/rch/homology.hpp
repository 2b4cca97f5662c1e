#pragma once

#include "rch/chain.hpp"

#include "json.hpp"

#include <map>
#include <optional>

namespace rch {

using BigradedTable = std::map<std::pair<int, int>, long>;  // (i, j) -> dim, zeros omitted
using FilteredTable = std::map<int, long>;                  // i -> dim, zeros omitted

// Homology of the t = 0 complex per (i, j), by exact rank computations.
BigradedTable bigraded_homology(const PMDiagram& pm, int n, const Caps& caps = {});
BigradedTable bigraded_homology(const ChainComplex& cx);

// Homology of the t = 1 complex per homological degree.
FilteredTable filtered_homology(const PMDiagram& pm, int n, const Caps& caps = {});
FilteredTable filtered_homology(const ChainComplex& cx);

struct SpectralPage {
    int r = 0;
    BigradedTable dims;                          // (i, j) -> dim E_r
    std::map<std::pair<int, int>, long> rankOut; // rank of d_r leaving (i, j)
};

// Pages of the spectral sequence from the bigraded to the filtered theory.
// E_0 is the chain level with d_0 preserving j; d_r has bidegree (1, r n).
SpectralPage spectral_page(const PMDiagram& pm, int n, int r, const Caps& caps = {});

// Smallest r with dim E_r = dim E_infinity in every (i, j).
int spectral_invariant(const PMDiagram& pm, int n, const Caps& caps = {});

struct PsiSurvival {
    bool survives = false;
    int diesAtPage = -1;  // valid when !survives
    bool cycleAtE1 = true;
    // When the class survives: a filtered cycle whose lowest-degree part is
    // psi, as (generator, coefficient) pairs.
    std::vector<std::pair<Generator, QuadExt>> witness;
};

PsiSurvival psi_survival(const PMDiagram& pm, int n, const Caps& caps = {});

// Per-state count of colorings that are harmonic for the filtered theory,
// computed combinatorially as proper coloring counts of the circle
// multigraphs (oracle::proper_coloring_count on oracle::circle_multigraph).
std::map<uint32_t, Int> harmonic_state_dims(const PMDiagram& pm, int n, const Caps& caps = {});

nlohmann::json tableToJson(const BigradedTable& t);
nlohmann::json tableToJson(const FilteredTable& t);
nlohmann::json pageToJson(const SpectralPage& p);

}  // namespace rch
