#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "yev/central_poly.hpp"
#include "yev/metric.hpp"

namespace yev {

class NCElement;

enum class FamilyClass {
    Spinor,      // c^1..c^n, c^a c^b + eps c^b c^a = eps^{ab}; Clifford when
                 // orthogonal, bosonic oscillator when symplectic
    Heisenberg,  // x_1..x_n, d_1..d_n, x_a d_b - eps d_b x_a = eps_{ab};
                 // bosonic when orthogonal, fermionic when symplectic
    MatrixUnits, // E_{ab}E_{cd} = delta_{bc}E_{ad}, E_{nn} identified with
                 // 1 - sum_{a<n} E_{aa}
    Free,        // named generators, no relations
    Central      // single symbol commuting with everything, optional square
};

struct Family {
    FamilyClass cls;
    int n = 0;                      // index range for Spinor/Heisenberg/MatrixUnits;
                                    // generator count for Free
    std::vector<std::string> names; // Spinor {"c"}, Heisenberg {"x","d"},
                                    // MatrixUnits {"E"}, Free {"F"}, Central {"g"}
    std::shared_ptr<const NCElement> square; // Central only: symbol^2 rewrites to this

    int generator_count() const;
};

using GenId = std::uint32_t;
using Word = std::vector<GenId>;

inline constexpr GenId kFamilyStride = 1u << 20;
inline GenId make_gen(std::size_t family, std::uint32_t code) {
    return static_cast<GenId>(family) * kFamilyStride + code;
}
inline std::size_t gen_family(GenId g) { return g / kFamilyStride; }
inline std::uint32_t gen_code(GenId g) { return g % kFamilyStride; }

enum class ReduceStrategy { Leftmost, Rightmost };

// Immutable description of the working algebra: generator families over a
// metric, plus adjoined central symbols. Central families sort before all
// others so central symbols collect at the front of normal-ordered words.
class AlgebraSpec {
public:
    using Ptr = std::shared_ptr<const AlgebraSpec>;

    static Ptr create(Metric metric, std::vector<Family> families, int degree_cap = 24);

    const Metric& metric() const { return metric_; }
    const std::vector<Family>& families() const { return families_; }
    int degree_cap() const { return degree_cap_; }

    // Total order on generators: central families first, then family index,
    // then code.
    bool precedes(GenId a, GenId b) const;

    std::vector<GenId> all_generators() const;
    std::string generator_name(GenId g) const; // e.g. "c^2", "x_1", "E_12", "g"

    // Resolve "name" (+ lower/upper index) to an element. Lowered spinor and
    // raised heisenberg generators are metric contractions, not new symbols.
    // index is 1-based; 0 means no index (central symbols).
    NCElement generator_element(Ptr self, const std::string& name, int index, bool upper) const;

    int family_of_name(const std::string& name) const; // -1 if absent

private:
    friend class NCElement;
    Metric metric_;
    std::vector<Family> families_;
    int degree_cap_ = 24;
};

struct CentralityResult {
    bool central;
    std::optional<GenId> witness_generator;
    std::optional<std::string> witness_name;
};

// Normal-ordered element: map from word to CentralPoly coefficient. Words are
// canonical under the family rewrite rules; equality is map equality.
class NCElement {
public:
    using Terms = std::map<Word, CentralPoly>;

    NCElement() = default;
    explicit NCElement(AlgebraSpec::Ptr spec) : spec_(std::move(spec)) {}

    static NCElement zero(AlgebraSpec::Ptr spec) { return NCElement(std::move(spec)); }
    static NCElement constant(AlgebraSpec::Ptr spec, const Rational& q);
    static NCElement constant(AlgebraSpec::Ptr spec, const CentralPoly& c);
    static NCElement generator(AlgebraSpec::Ptr spec, GenId g);

    const AlgebraSpec::Ptr& spec() const { return spec_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_scalar() const; // at most a multiple of the empty word
    CentralPoly scalar_part() const;

    NCElement operator+(const NCElement& o) const;
    NCElement operator-(const NCElement& o) const;
    NCElement operator*(const NCElement& o) const;
    NCElement operator-() const;
    NCElement scaled(const Rational& q) const;
    NCElement scaled(const CentralPoly& c) const;
    bool operator==(const NCElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const NCElement& o) const { return !(*this == o); }

    // Substitute the spectral symbol `sym` by `value` in every coefficient.
    NCElement substituted(const std::string& sym, const CentralPoly& value) const;

    // Reinterpret over an extended spec (same family layout prefix).
    NCElement with_spec(AlgebraSpec::Ptr spec) const;

    std::string str() const; // canonical, parseable

    void add_term(const Word& w, const CentralPoly& c); // no normalization

private:
    AlgebraSpec::Ptr spec_;
    Terms terms_;
};

// Canonical normal ordering of an arbitrary term map over `spec`.
NCElement normal_form(AlgebraSpec::Ptr spec, const NCElement::Terms& raw,
                      ReduceStrategy strategy = ReduceStrategy::Leftmost);
NCElement normal_form(const NCElement& e, ReduceStrategy strategy = ReduceStrategy::Leftmost);

// True iff e commutes with every generator of its spec; otherwise the first
// non-commuting generator is reported.
CentralityResult is_central(const NCElement& e);
// Centrality relative to a generating set (e.g. the entries of a generator
// matrix): the scope needed when adjoining central symbols whose square
// involves a Casimir element.
CentralityResult is_central_within(const NCElement& e, const std::vector<NCElement>& gens);

// New spec with an adjoined central symbol whose square rewrites to `square`.
// `scope`: generators `square` must commute with (empty = every generator).
AlgebraSpec::Ptr adjoin_central(const AlgebraSpec::Ptr& spec, const std::string& name,
                                const NCElement& square,
                                const std::vector<NCElement>& scope = {});

} // namespace yev
