#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "yev/algebra.hpp"

namespace yev {

// Operator on V^{\otimes arity} with NCElement entries, stored sparsely by
// flattened (row, column) multi-indices.
class TensorOperator {
public:
    using Index = std::uint32_t; // base-n flattened multi-index
    using Key = std::pair<Index, Index>;

    TensorOperator() = default;
    TensorOperator(int arity, int n, AlgebraSpec::Ptr spec)
        : arity_(arity), n_(n), spec_(std::move(spec)) {}

    static TensorOperator identity(int arity, int n, AlgebraSpec::Ptr spec);
    static TensorOperator identity_scaled(int arity, int n, AlgebraSpec::Ptr spec,
                                          const CentralPoly& c);

    int arity() const { return arity_; }
    int dim() const { return n_; }
    const AlgebraSpec::Ptr& spec() const { return spec_; }
    const std::map<Key, NCElement>& entries() const { return entries_; }

    Index flatten(const std::vector<int>& idx) const;
    std::vector<int> unflatten(Index i) const; // 0-based components

    const NCElement* find(Index r, Index c) const;
    void set(Index r, Index c, NCElement e);
    void add_at(Index r, Index c, const NCElement& e);

    TensorOperator operator+(const TensorOperator& o) const;
    TensorOperator operator-(const TensorOperator& o) const;
    TensorOperator operator*(const TensorOperator& o) const; // operator product
    TensorOperator scaled(const Rational& q) const;
    TensorOperator scaled(const CentralPoly& c) const;
    TensorOperator scaled(const NCElement& central) const; // left-multiply entries
    bool is_zero() const { return entries_.empty(); }
    bool operator==(const TensorOperator& o) const { return entries_ == o.entries_; }

    // Substitute spectral symbol in every entry coefficient.
    TensorOperator substituted(const std::string& sym, const CentralPoly& value) const;

    // First nonzero entry in index order: (row components, col components, entry),
    // 1-based components for reporting.
    struct EntryRef {
        std::vector<int> row, col;
        NCElement entry;
    };
    std::optional<EntryRef> first_nonzero() const;

private:
    int arity_ = 0;
    int n_ = 0;
    AlgebraSpec::Ptr spec_;
    std::map<Key, NCElement> entries_;
};

// I, P, K on V tensor V. Entries are scalars in the given spec's coefficient
// field; P swaps factors, K = eps^{a1 a2} eps_{b1 b2}.
struct StructureOps {
    TensorOperator I, P, K;
};
StructureOps make_ipk(const Metric& metric, AlgebraSpec::Ptr spec);

// Fundamental R-matrix R(u) = u(u+beta) I + (u+beta) P - eps u K.
TensorOperator make_r(const Metric& metric, AlgebraSpec::Ptr spec);

// Place an arity-k operator into chosen slots of V^{\otimes arity}, identity
// elsewhere. Slots are 0-based and distinct.
TensorOperator embed(const TensorOperator& op, const std::vector<int>& slots, int arity);

// C -> (C_s, C_a) with C_s = (C + PCP)/2, C_a = (C - PCP)/2.
std::pair<TensorOperator, TensorOperator> sym_split(const TensorOperator& c);

TensorOperator p_conjugate(const TensorOperator& c); // P C P

} // namespace yev
