#include "yev/central_poly.hpp"

#include <algorithm>
#include <sstream>

namespace yev {

std::shared_ptr<const PolyRing> PolyRing::create(std::vector<std::string> symbols) {
    auto r = std::make_shared<PolyRing>();
    r->symbols_ = std::move(symbols);
    r->relations_.resize(r->symbols_.size());
    return r;
}

int PolyRing::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < symbols_.size(); ++i)
        if (symbols_[i] == name) return static_cast<int>(i);
    return -1;
}

std::shared_ptr<const PolyRing> PolyRing::with_relation(std::size_t i, unsigned degree,
                                                        const CentralPoly& value) const {
    if (i >= symbols_.size() || degree == 0)
        throw NonTriangularRelations("relation index/degree out of range");
    for (const auto& [e, q] : value.terms()) {
        (void)q;
        for (std::size_t j = i; j < e.size(); ++j)
            if (e[j] != 0)
                throw NonTriangularRelations("relation value uses symbol '" + symbols_[j] +
                                             "' not earlier than '" + symbols_[i] + "'");
    }
    auto r = std::make_shared<PolyRing>(*this);
    // The stored value must live in the new ring so reduction stays closed.
    auto stored = std::make_shared<CentralPoly>(CentralPoly{});
    r->relations_[i] = PolyRelation{degree, stored};
    auto ring = std::shared_ptr<const PolyRing>(r);
    *std::const_pointer_cast<CentralPoly>(stored) = value.in_ring(ring);
    return ring;
}

RingPtr spectral_ring() {
    static RingPtr ring = PolyRing::create({"u", "v", "d"});
    return ring;
}

CentralPoly CentralPoly::constant(RingPtr ring, const Rational& q) {
    CentralPoly p(std::move(ring));
    if (!yev::is_zero(q)) p.terms_[Exps(p.ring_->size(), 0)] = q;
    return p;
}

CentralPoly CentralPoly::symbol(RingPtr ring, const std::string& name, unsigned power) {
    int i = ring->index_of(name);
    if (i < 0) throw UnknownSymbol("unknown ring symbol '" + name + "'");
    CentralPoly p(std::move(ring));
    Exps e(p.ring_->size(), 0);
    e[static_cast<std::size_t>(i)] = power;
    p.terms_[e] = rat(1);
    p.reduce_in_place();
    return p;
}

bool CentralPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
}

Rational CentralPoly::constant_value() const {
    if (terms_.empty()) return rat(0);
    if (!is_constant()) throw Error("polynomial is not constant: " + str());
    return terms_.begin()->second;
}

void CentralPoly::add_term(const Exps& e, const Rational& q) {
    if (yev::is_zero(q)) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, q);
    } else {
        it->second += q;
        if (yev::is_zero(it->second)) terms_.erase(it);
    }
    reduce_in_place();
}

CentralPoly CentralPoly::operator+(const CentralPoly& o) const {
    CentralPoly r = *this;
    for (const auto& [e, q] : o.terms_) {
        auto it = r.terms_.find(e);
        if (it == r.terms_.end()) {
            r.terms_.emplace(e, q);
        } else {
            it->second += q;
            if (yev::is_zero(it->second)) r.terms_.erase(it);
        }
    }
    r.reduce_in_place();
    return r;
}

CentralPoly CentralPoly::operator-() const {
    CentralPoly r(ring_);
    for (const auto& [e, q] : terms_) r.terms_.emplace(e, -q);
    return r;
}

CentralPoly CentralPoly::operator-(const CentralPoly& o) const { return *this + (-o); }

CentralPoly CentralPoly::operator*(const CentralPoly& o) const {
    CentralPoly r(ring_);
    for (const auto& [ea, qa] : terms_) {
        for (const auto& [eb, qb] : o.terms_) {
            Exps e(ea);
            for (std::size_t i = 0; i < e.size() && i < eb.size(); ++i) e[i] += eb[i];
            Rational q = qa * qb;
            auto it = r.terms_.find(e);
            if (it == r.terms_.end()) {
                r.terms_.emplace(std::move(e), q);
            } else {
                it->second += q;
                if (yev::is_zero(it->second)) r.terms_.erase(it);
            }
        }
    }
    r.reduce_in_place();
    return r;
}

CentralPoly CentralPoly::scaled(const Rational& q) const {
    CentralPoly r(ring_);
    if (yev::is_zero(q)) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * q);
    return r;
}

void CentralPoly::reduce_in_place() {
    bool any = false;
    for (std::size_t i = 0; i < ring_->size(); ++i)
        if (ring_->relation(i)) { any = true; break; }
    if (!any) return;
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it = terms_.begin(); it != terms_.end(); ++it) {
            const Exps& e = it->first;
            for (std::size_t i = 0; i < ring_->size(); ++i) {
                const auto& rel = ring_->relation(i);
                if (!rel || e[i] < rel->degree) continue;
                Exps base(e);
                base[i] -= rel->degree;
                Rational q = it->second;
                terms_.erase(it);
                CentralPoly repl(ring_);
                repl.terms_.emplace(std::move(base), q);
                CentralPoly prod = repl * rel->value->in_ring(ring_);
                for (const auto& [pe, pq] : prod.terms_) {
                    auto jt = terms_.find(pe);
                    if (jt == terms_.end()) {
                        terms_.emplace(pe, pq);
                    } else {
                        jt->second += pq;
                        if (yev::is_zero(jt->second)) terms_.erase(jt);
                    }
                }
                changed = true;
                break;
            }
            if (changed) break;
        }
    }
}

CentralPoly reduce(const CentralPoly& p) {
    CentralPoly r = p;
    r.reduce_in_place();
    return r;
}

CentralPoly CentralPoly::substituted(std::size_t i, const CentralPoly& value) const {
    CentralPoly out(ring_);
    for (const auto& [e, q] : terms_) {
        Exps base(e);
        unsigned k = base[i];
        base[i] = 0;
        CentralPoly t(ring_);
        t.terms_.emplace(std::move(base), q);
        for (unsigned j = 0; j < k; ++j) t = t * value;
        out = out + t;
    }
    return out;
}

CentralPoly CentralPoly::in_ring(const RingPtr& ring) const {
    if (ring.get() == ring_.get()) return *this;
    std::vector<int> map(ring_->size());
    for (std::size_t i = 0; i < ring_->size(); ++i) {
        map[i] = ring->index_of(ring_->symbols()[i]);
    }
    CentralPoly out(ring);
    for (const auto& [e, q] : terms_) {
        Exps ne(ring->size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (map[i] < 0) throw UnknownSymbol("symbol '" + ring_->symbols()[i] + "' missing in target ring");
            ne[static_cast<std::size_t>(map[i])] = e[i];
        }
        out.add_term(ne, q);
    }
    return out;
}

unsigned CentralPoly::degree_in(std::size_t i) const {
    unsigned d = 0;
    for (const auto& [e, q] : terms_) {
        (void)q;
        if (i < e.size()) d = std::max(d, e[i]);
    }
    return d;
}

std::string CentralPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // reverse map order: highest exponent vectors first, stable and canonical
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, q] = *it;
        Rational a = q;
        if (first) {
            if (sgn(a) < 0) { os << "-"; a = -a; }
        } else {
            os << (sgn(a) < 0 ? " - " : " + ");
            if (sgn(a) < 0) a = -a;
        }
        first = false;
        bool any_sym = false;
        std::ostringstream mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (any_sym) mono << "*";
            mono << ring_->symbols()[i];
            if (e[i] > 1) mono << "^" << e[i];
            any_sym = true;
        }
        if (!any_sym) {
            os << to_string(a);
        } else if (a == 1) {
            os << mono.str();
        } else {
            os << to_string(a) << "*" << mono.str();
        }
    }
    return os.str();
}

} // namespace yev
