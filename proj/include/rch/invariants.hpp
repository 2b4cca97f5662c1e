#pragma once

#include "rch/homology.hpp"
#include "rch/poly.hpp"

namespace rch {

// State sum over the hypercube: sum over states of (-q^m)^{|a|} (qdim V)^{k}.
// The empty diagram gives 1, vertex-free circles a factor (qdim V) each.
LaurentPoly n_color_polynomial(const PMDiagram& pm, int n, const Caps& caps = {});

// The polynomial evaluated at q = 1, i.e. sum of (-1)^{|a|} n^{k}.
Rat n_color_number(const PMDiagram& pm, int n, const Caps& caps = {});

// Alternating state sum of the blowup assembled symbolically in n; defined
// at any integer, negative values included.
VarPoly penrose_polynomial(const RibbonDiagram& d, const Caps& caps = {});

// Sum over states of (-q)^{|a|} n^{k} in the two variables (q, n).
BiPoly two_variable_penrose(const PMDiagram& pm, const Caps& caps = {});

// Coefficient of t^i counts the harmonic colorings in degree i of the blowup
// of d. The oracle path counts proper colorings per state; the linear
// algebra path reads the filtered homology dimensions instead.
enum class TfcPath { Oracle, LinearAlgebra };
VarPoly total_face_color_at(const RibbonDiagram& d, int n, TfcPath path = TfcPath::Oracle,
                            const Caps& caps = {});

// Evaluates the polynomial above at n = 2 .. K+1 where K is the largest
// circle count over states, interpolates each t-coefficient after dividing
// out the guaranteed n(n-1) factor, and verifies on the held-out top point.
BiPoly total_face_color_interpolated(const RibbonDiagram& d, const Caps& caps = {});

// Poincare polynomial of the bigraded table in (t, q).
BiPoly tsharp(const PMDiagram& pm, int n, const Caps& caps = {});

struct EulerCheck {
    bool match = false;
    LaurentPoly fromHomology;
    LaurentPoly statePolynomial;
};

// Graded Euler characteristic of the bigraded table against the state sum.
EulerCheck euler_check(const PMDiagram& pm, int n, const Caps& caps = {});

// Best-effort nonnegative representative over the 2^|V| per-vertex rotation
// reversals of a trivalent diagram: returns the version of the Penrose
// polynomial whose leading coefficient is positive (or the zero polynomial).
VarPoly penrose_abstract(const RibbonDiagram& d, const Caps& caps = {});

struct InvariantReport {
    uint64_t fingerprint = 0;
    std::string diagram;
    std::string invariant;
    nlohmann::json params;
    nlohmann::json value;
    nlohmann::json toJson() const;
};

}  // namespace rch
