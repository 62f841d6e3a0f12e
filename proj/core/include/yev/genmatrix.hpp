#pragma once

#include <string>
#include <vector>

#include "yev/algebra.hpp"
#include "yev/tensor_op.hpp"

namespace yev {

// n x n algebra-valued matrix in the G^a{}_b index convention.
struct GeneratorMatrix {
    Metric metric;
    AlgebraSpec::Ptr alg;
    int n = 0;
    std::vector<NCElement> e; // row-major
    std::string label;

    GeneratorMatrix() = default;
    GeneratorMatrix(Metric m, AlgebraSpec::Ptr a, std::string lbl = {});

    NCElement& at(int a, int b) { return e[static_cast<std::size_t>(a * n + b)]; }
    const NCElement& at(int a, int b) const { return e[static_cast<std::size_t>(a * n + b)]; }

    bool is_zero() const;

    GeneratorMatrix operator+(const GeneratorMatrix& o) const;
    GeneratorMatrix operator-(const GeneratorMatrix& o) const;
    GeneratorMatrix operator*(const GeneratorMatrix& o) const; // entrywise algebra product
    GeneratorMatrix scaled(const Rational& q) const;
    GeneratorMatrix scaled(const NCElement& central) const; // central left factor
    GeneratorMatrix plus_scalar(const NCElement& c) const;  // + c * I
    GeneratorMatrix power(int k) const;

    // M_{ab} = eps_{ac} M^c{}_b and its inverse.
    GeneratorMatrix lowered() const;
    GeneratorMatrix raised_from_lower() const;

    NCElement trace() const;      // sum_a M^a{}_a
    NCElement trace_part() const; // (1/n) trace

    // Embed as an operator acting on `slot` of V^{\otimes arity}.
    TensorOperator as_slot_op(int slot, int arity = 2) const;
};

GeneratorMatrix lower_index(const GeneratorMatrix& m); // named op alias
GeneratorMatrix raise_index(const GeneratorMatrix& lowered);

struct GradedDecomposition {
    NCElement trace_part;
    GeneratorMatrix antisym;       // graded-antisymmetric part (upper-lower indices)
    GeneratorMatrix sym_traceless; // graded-symmetric traceless part
};

// M = trace_part * I + antisym + sym_traceless, with the symmetry measured on
// lowered indices: antisym_{ab} = -eps antisym_{ba}, sym_{ab} = +eps sym_{ba}.
GradedDecomposition graded_split(const GeneratorMatrix& m);

// (1/n) sum_{ab} G^a{}_b G^b{}_a.
NCElement casimir_m2(const GeneratorMatrix& g);
// tr(G^2) = n * m2; the normalization entering the cubic characteristic
// polynomial and the resolved central values.
NCElement casimir_t2(const GeneratorMatrix& g);

// Entries as a flat generator list (for relative-centrality scopes).
std::vector<NCElement> entry_list(const GeneratorMatrix& g);

} // namespace yev
