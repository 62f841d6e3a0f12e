#pragma once

#include <map>

#include "yev/algebra.hpp"

namespace yev {

// Exact Gaussian rational a + b*i; enough for the Clifford ladder matrices.
struct Gaussian {
    Rational re, im;
    Gaussian() : re(0), im(0) {}
    Gaussian(Rational r) : re(std::move(r)), im(0) {}
    Gaussian(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    Gaussian operator+(const Gaussian& o) const { return {re + o.re, im + o.im}; }
    Gaussian operator-(const Gaussian& o) const { return {re - o.re, im - o.im}; }
    Gaussian operator*(const Gaussian& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    bool operator==(const Gaussian& o) const { return re == o.re && im == o.im; }
    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
};

using FockMatrix = std::vector<std::vector<Gaussian>>;

FockMatrix fock_zero(int dim);
FockMatrix fock_identity(int dim);
FockMatrix fock_mul(const FockMatrix& a, const FockMatrix& b);
FockMatrix fock_add(const FockMatrix& a, const FockMatrix& b);
FockMatrix fock_scale(const FockMatrix& a, const Gaussian& q);
bool fock_is_zero(const FockMatrix& a);

// Finite-dimensional exact matrix model of an AlgebraSpec:
//  - Spinor family, orthogonal even n: dim 2^{n/2} ladder construction
//    (Gaussian rational entries);
//  - Heisenberg family, fermionic (symplectic): dim 2^n, x_a = creation,
//    d_b = eps_{cb}-weighted annihilation;
//  - MatrixUnits: the n x n matrices themselves;
//  - Central family with a square rule: companion doubling;
//  - bosonic families and free generators are rejected (UnsupportedFamily).
// All defining relations are re-verified exactly during construction.
class FockBackend {
public:
    static FockBackend build(const AlgebraSpec::Ptr& spec);

    int dim() const { return dim_; }
    const FockMatrix& generator(GenId g) const;

    // Evaluate element with constant coefficients.
    FockMatrix evaluate(const NCElement& e) const;
    // Evaluate element whose coefficients are spectral polynomials: one matrix
    // per monomial exponent vector.
    std::map<CentralPoly::Exps, FockMatrix> evaluate_poly(const NCElement& e) const;

    bool is_zero(const NCElement& e) const;

private:
    AlgebraSpec::Ptr spec_;
    int dim_ = 1;
    std::map<GenId, FockMatrix> gens_;
};

// True when every family of the spec has a matrix model.
bool fock_supported(const AlgebraSpec::Ptr& spec);

} // namespace yev
