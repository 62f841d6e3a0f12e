#pragma once

#include <iosfwd>
#include <string>

#include "yev/genmatrix.hpp"

namespace yev {

// Algebra factories. Families keep their conventional generator names so the
// expression grammar and rep files can refer to them.
AlgebraSpec::Ptr spinor_algebra(const Metric& m, const std::string& name = "c");
AlgebraSpec::Ptr heisenberg_algebra(const Metric& m, const std::string& x = "x",
                                    const std::string& d = "d");
AlgebraSpec::Ptr matrix_units_algebra(const Metric& m, const std::string& name = "E");
AlgebraSpec::Ptr free_algebra(const Metric& m, const std::string& name, int count);
AlgebraSpec::Ptr composite_algebra(const Metric& m, std::vector<Family> families);

// Defining (vector) representation over the unit-identified matrix-unit
// algebra: lowered G_{ab} = sum_c (eps eps_{bc} E_{ca} - eps_{ac} E_{cb}).
GeneratorMatrix fundamental_rep(const Metric& m);

// G^a{}_b = (eps/2) delta^a_b - c^a c_b over the spinor/oscillator algebra.
GeneratorMatrix spinor_rep(const Metric& m);
GeneratorMatrix spinor_rep_in(const Metric& m, AlgebraSpec::Ptr alg, std::size_t family);

// Bilinear realization in n Heisenberg pairs: lowered
// G_{ab} = eps (x_a d_b - eps x_b d_a); bosonic for so, fermionic for sp.
GeneratorMatrix js_rep(const Metric& m);
GeneratorMatrix js_rep_in(const Metric& m, AlgebraSpec::Ptr alg, std::size_t family);

// The fundamental R-matrix read as a quadratic operator: G = beta I + P - eps K
// and H = beta P, with the second tensor slot carried by matrix units.
struct QuadraticPair {
    GeneratorMatrix G, H;
};
QuadraticPair r_as_quadratic(const Metric& m);

// Plain-text representation file:
//   algebra: so|sp
//   n: <int>
//   families: <class> <name(s)> [, ...]
//   G[a][b] = <expr>            (all a, b in 1..n)
//   H[a][b] = <expr>            (optional block)
struct LoadedRep {
    Metric metric;
    AlgebraSpec::Ptr alg;
    GeneratorMatrix G;
    std::optional<GeneratorMatrix> H;
};
LoadedRep load_rep(const std::string& path);
LoadedRep load_rep_stream(std::istream& in);
void save_rep(std::ostream& out, const GeneratorMatrix& G, const GeneratorMatrix* H = nullptr);

} // namespace yev
