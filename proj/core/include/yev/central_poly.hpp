#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "yev/errors.hpp"
#include "yev/rational.hpp"

namespace yev {

class CentralPoly;

// Per-symbol reduction rule: symbol^degree rewrites to `value`, a polynomial
// in strictly earlier symbols of the ring.
struct PolyRelation {
    unsigned degree;
    std::shared_ptr<const CentralPoly> value;
};

// Ordered list of commuting symbols, optionally with triangular power
// relations. Immutable once created.
class PolyRing {
public:
    static std::shared_ptr<const PolyRing> create(std::vector<std::string> symbols);

    const std::vector<std::string>& symbols() const { return symbols_; }
    std::size_t size() const { return symbols_.size(); }
    int index_of(const std::string& name) const; // -1 if absent
    const std::optional<PolyRelation>& relation(std::size_t i) const { return relations_[i]; }

    // Returns a new ring with a relation installed on symbol `i`.
    // Throws NonTriangularRelations if `value` touches symbol i or later ones.
    std::shared_ptr<const PolyRing> with_relation(std::size_t i, unsigned degree,
                                                  const CentralPoly& value) const;

private:
    std::vector<std::string> symbols_;
    std::vector<std::optional<PolyRelation>> relations_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

// The shared ring for spectral parameters.
RingPtr spectral_ring(); // {u, v, d}

// Sparse multivariate polynomial over Rational with commuting symbols.
// Terms are kept reduced modulo the ring's relations; no zero coefficients.
class CentralPoly {
public:
    using Exps = std::vector<unsigned>;
    using Terms = std::map<Exps, Rational>;

    CentralPoly() : ring_(spectral_ring()) {}
    explicit CentralPoly(RingPtr ring) : ring_(std::move(ring)) {}

    static CentralPoly constant(RingPtr ring, const Rational& q);
    static CentralPoly symbol(RingPtr ring, const std::string& name, unsigned power = 1);

    const RingPtr& ring() const { return ring_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const; // 0 if zero, throws if non-constant

    CentralPoly operator+(const CentralPoly& o) const;
    CentralPoly operator-(const CentralPoly& o) const;
    CentralPoly operator*(const CentralPoly& o) const;
    CentralPoly operator-() const;
    CentralPoly scaled(const Rational& q) const;
    bool operator==(const CentralPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const CentralPoly& o) const { return !(*this == o); }
    bool operator<(const CentralPoly& o) const { return terms_ < o.terms_; }

    // Substitute symbol i -> value (value in the same ring).
    CentralPoly substituted(std::size_t i, const CentralPoly& value) const;
    // Re-express in another ring carrying at least the same symbol names.
    CentralPoly in_ring(const RingPtr& ring) const;

    unsigned degree_in(std::size_t i) const;

    // Canonical text: terms in reverse-lex exponent order, "3/2*u^2*g".
    std::string str() const;

    void add_term(const Exps& e, const Rational& q); // reduces afterwards

private:
    friend CentralPoly reduce(const CentralPoly&);
    RingPtr ring_;
    Terms terms_;
    void reduce_in_place();
};

// Apply the ring's relations until all constrained exponents are below their
// relation degree. Idempotent.
CentralPoly reduce(const CentralPoly& p);

} // namespace yev
