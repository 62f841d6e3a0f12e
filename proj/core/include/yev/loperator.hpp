#pragma once

#include "yev/genmatrix.hpp"

namespace yev {

// Algebra-valued matrix whose entries carry polynomial dependence on the
// spectral symbol u (and, after fusion, the shift d).
struct LOperator {
    Metric metric;
    AlgebraSpec::Ptr alg;
    int n = 0;
    std::vector<NCElement> e; // row-major, coefficients polynomial in u
    std::string label;

    LOperator() = default;
    LOperator(Metric m, AlgebraSpec::Ptr a, std::string lbl = {});

    NCElement& at(int a, int b) { return e[static_cast<std::size_t>(a * n + b)]; }
    const NCElement& at(int a, int b) const { return e[static_cast<std::size_t>(a * n + b)]; }

    int degree_in_u() const;

    // Substitute u -> value in every entry.
    LOperator shifted(const CentralPoly& value) const;

    // Embed as an operator on slot `slot` of V tensor V; entries unchanged.
    TensorOperator as_slot_op(int slot) const;
};

LOperator linear_L(const GeneratorMatrix& G);                              // uI + G
LOperator quadratic_L(const GeneratorMatrix& G, const GeneratorMatrix& H); // u^2 I + uG + H

// L(u) = L1(u) * L2(u + d): the twofold product with shifted second factor.
// Both factors must live in the same composite algebra.
LOperator fuse(const LOperator& l1, const LOperator& l2);

} // namespace yev
