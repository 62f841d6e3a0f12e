#include "yev/tensor_op.hpp"

#include <algorithm>

#include "yev/errors.hpp"

namespace yev {

TensorOperator TensorOperator::identity(int arity, int n, AlgebraSpec::Ptr spec) {
    return identity_scaled(arity, n, std::move(spec),
                           CentralPoly::constant(spectral_ring(), rat(1)));
}

TensorOperator TensorOperator::identity_scaled(int arity, int n, AlgebraSpec::Ptr spec,
                                               const CentralPoly& c) {
    TensorOperator t(arity, n, spec);
    if (c.is_zero()) return t;
    Index total = 1;
    for (int i = 0; i < arity; ++i) total *= static_cast<Index>(n);
    for (Index i = 0; i < total; ++i)
        t.entries_.emplace(Key{i, i}, NCElement::constant(spec, c));
    return t;
}

TensorOperator::Index TensorOperator::flatten(const std::vector<int>& idx) const {
    Index f = 0;
    for (int c : idx) f = f * static_cast<Index>(n_) + static_cast<Index>(c);
    return f;
}

std::vector<int> TensorOperator::unflatten(Index i) const {
    std::vector<int> out(static_cast<std::size_t>(arity_));
    for (int k = arity_ - 1; k >= 0; --k) {
        out[static_cast<std::size_t>(k)] = static_cast<int>(i % static_cast<Index>(n_));
        i /= static_cast<Index>(n_);
    }
    return out;
}

const NCElement* TensorOperator::find(Index r, Index c) const {
    auto it = entries_.find({r, c});
    return it == entries_.end() ? nullptr : &it->second;
}

void TensorOperator::set(Index r, Index c, NCElement e) {
    if (e.is_zero()) entries_.erase({r, c});
    else entries_.insert_or_assign({r, c}, std::move(e));
}

void TensorOperator::add_at(Index r, Index c, const NCElement& e) {
    if (e.is_zero()) return;
    auto it = entries_.find({r, c});
    if (it == entries_.end()) {
        entries_.emplace(Key{r, c}, e);
    } else {
        NCElement s = it->second + e;
        if (s.is_zero()) entries_.erase(it);
        else it->second = std::move(s);
    }
}

TensorOperator TensorOperator::operator+(const TensorOperator& o) const {
    TensorOperator t = *this;
    for (const auto& [k, e] : o.entries_) t.add_at(k.first, k.second, e);
    return t;
}

TensorOperator TensorOperator::operator-(const TensorOperator& o) const {
    return *this + o.scaled(rat(-1));
}

TensorOperator TensorOperator::operator*(const TensorOperator& o) const {
    // group o's entries by row for the contraction
    std::map<Index, std::vector<std::pair<Index, const NCElement*>>> rows;
    for (const auto& [k, e] : o.entries_) rows[k.first].push_back({k.second, &e});
    TensorOperator t(arity_, n_, spec_ ? spec_ : o.spec_);
    for (const auto& [k, e] : entries_) {
        auto it = rows.find(k.second);
        if (it == rows.end()) continue;
        for (const auto& [c2, e2] : it->second) t.add_at(k.first, c2, e * (*e2));
    }
    return t;
}

TensorOperator TensorOperator::scaled(const Rational& q) const {
    TensorOperator t(arity_, n_, spec_);
    if (yev::is_zero(q)) return t;
    for (const auto& [k, e] : entries_) t.entries_.emplace(k, e.scaled(q));
    return t;
}

TensorOperator TensorOperator::scaled(const CentralPoly& c) const {
    TensorOperator t(arity_, n_, spec_);
    if (c.is_zero()) return t;
    for (const auto& [k, e] : entries_) {
        NCElement s = e.scaled(c);
        if (!s.is_zero()) t.entries_.emplace(k, std::move(s));
    }
    return t;
}

TensorOperator TensorOperator::scaled(const NCElement& central) const {
    TensorOperator t(arity_, n_, spec_);
    for (const auto& [k, e] : entries_) {
        NCElement s = central * e;
        if (!s.is_zero()) t.entries_.emplace(k, std::move(s));
    }
    return t;
}

TensorOperator TensorOperator::substituted(const std::string& sym, const CentralPoly& value) const {
    TensorOperator t(arity_, n_, spec_);
    for (const auto& [k, e] : entries_) {
        NCElement s = e.substituted(sym, value);
        if (!s.is_zero()) t.entries_.emplace(k, std::move(s));
    }
    return t;
}

std::optional<TensorOperator::EntryRef> TensorOperator::first_nonzero() const {
    if (entries_.empty()) return std::nullopt;
    const auto& [k, e] = *entries_.begin();
    EntryRef ref;
    ref.row = unflatten(k.first);
    ref.col = unflatten(k.second);
    for (auto& x : ref.row) ++x;
    for (auto& x : ref.col) ++x;
    ref.entry = e;
    return ref;
}

StructureOps make_ipk(const Metric& metric, AlgebraSpec::Ptr spec) {
    const int n = metric.n;
    StructureOps s;
    s.I = TensorOperator::identity(2, n, spec);
    s.P = TensorOperator(2, n, spec);
    s.K = TensorOperator(2, n, spec);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            s.P.set(s.P.flatten({a, b}), s.P.flatten({b, a}), NCElement::constant(spec, rat(1)));
    for (int a1 = 0; a1 < n; ++a1)
        for (int a2 = 0; a2 < n; ++a2) {
            if (yev::is_zero(metric.up(a1, a2))) continue;
            for (int b1 = 0; b1 < n; ++b1)
                for (int b2 = 0; b2 < n; ++b2) {
                    Rational q = metric.up(a1, a2) * metric.lo(b1, b2);
                    if (!yev::is_zero(q))
                        s.K.set(s.K.flatten({a1, a2}), s.K.flatten({b1, b2}),
                                NCElement::constant(spec, q));
                }
        }
    return s;
}

TensorOperator make_r(const Metric& metric, AlgebraSpec::Ptr spec) {
    auto ring = spectral_ring();
    CentralPoly u = CentralPoly::symbol(ring, "u");
    CentralPoly ub = u + CentralPoly::constant(ring, metric.beta);
    auto [I, P, K] = make_ipk(metric, spec);
    return I.scaled(u * ub) + P.scaled(ub) + K.scaled(u.scaled(rat(-metric.eps)));
}

TensorOperator embed(const TensorOperator& op, const std::vector<int>& slots, int arity) {
    const int n = op.dim();
    if (static_cast<int>(slots.size()) != op.arity())
        throw DimensionMismatch("embed: slot count does not match operator arity");
    std::vector<bool> used(static_cast<std::size_t>(arity), false);
    for (int s : slots) {
        if (s < 0 || s >= arity) throw SlotOutOfRange("embed: slot out of range");
        if (used[static_cast<std::size_t>(s)]) throw SlotCollision("embed: repeated slot");
        used[static_cast<std::size_t>(s)] = true;
    }
    std::vector<int> others;
    for (int i = 0; i < arity; ++i)
        if (!used[static_cast<std::size_t>(i)]) others.push_back(i);
    TensorOperator out(arity, n, op.spec());
    std::vector<int> rr(static_cast<std::size_t>(arity)), cc(static_cast<std::size_t>(arity));
    const std::size_t rest_count = others.size();
    std::vector<int> rest(rest_count, 0);
    for (const auto& [k, e] : op.entries()) {
        auto row = op.unflatten(k.first);
        auto col = op.unflatten(k.second);
        std::fill(rest.begin(), rest.end(), 0);
        while (true) {
            for (std::size_t i = 0; i < slots.size(); ++i) {
                rr[static_cast<std::size_t>(slots[i])] = row[i];
                cc[static_cast<std::size_t>(slots[i])] = col[i];
            }
            for (std::size_t i = 0; i < rest_count; ++i)
                rr[static_cast<std::size_t>(others[i])] = cc[static_cast<std::size_t>(others[i])] = rest[i];
            out.set(out.flatten(rr), out.flatten(cc), e);
            std::size_t j = rest_count;
            while (j > 0) {
                --j;
                if (++rest[j] < n) break;
                rest[j] = 0;
                if (j == 0) { j = rest_count + 1; break; }
            }
            if (rest_count == 0 || j == rest_count + 1) break;
        }
    }
    return out;
}

TensorOperator p_conjugate(const TensorOperator& c) {
    if (c.arity() != 2) throw DimensionMismatch("p_conjugate needs arity 2");
    TensorOperator out(2, c.dim(), c.spec());
    for (const auto& [k, e] : c.entries()) {
        auto row = c.unflatten(k.first);
        auto col = c.unflatten(k.second);
        std::swap(row[0], row[1]);
        std::swap(col[0], col[1]);
        out.set(out.flatten(row), out.flatten(col), e);
    }
    return out;
}

std::pair<TensorOperator, TensorOperator> sym_split(const TensorOperator& c) {
    TensorOperator pcp = p_conjugate(c);
    TensorOperator s = (c + pcp).scaled(rat(1, 2));
    TensorOperator a = (c - pcp).scaled(rat(1, 2));
    return {std::move(s), std::move(a)};
}

} // namespace yev
