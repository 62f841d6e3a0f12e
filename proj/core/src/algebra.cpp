#include "yev/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "yev/errors.hpp"

namespace yev {

int Family::generator_count() const {
    switch (cls) {
    case FamilyClass::Spinor: return n;
    case FamilyClass::Heisenberg: return 2 * n;
    case FamilyClass::MatrixUnits: return n * n;
    case FamilyClass::Free: return n;
    case FamilyClass::Central: return 1;
    }
    return 0;
}

AlgebraSpec::Ptr AlgebraSpec::create(Metric metric, std::vector<Family> families, int degree_cap) {
    auto s = std::make_shared<AlgebraSpec>();
    s->metric_ = std::move(metric);
    s->families_ = std::move(families);
    s->degree_cap_ = degree_cap;
    for (const auto& f : s->families_) {
        if (f.names.empty()) throw Error("family needs at least one name");
        if ((f.cls == FamilyClass::Heisenberg && f.names.size() != 2) ||
            (f.cls != FamilyClass::Heisenberg && f.names.size() != 1))
            throw Error("family name count mismatch");
    }
    return s;
}

bool AlgebraSpec::precedes(GenId a, GenId b) const {
    auto rank = [&](GenId g) {
        std::size_t f = gen_family(g);
        int central = families_[f].cls == FamilyClass::Central ? 0 : 1;
        return std::tuple<int, std::size_t, std::uint32_t>(central, f, gen_code(g));
    };
    return rank(a) < rank(b);
}

std::vector<GenId> AlgebraSpec::all_generators() const {
    std::vector<GenId> out;
    for (std::size_t f = 0; f < families_.size(); ++f)
        for (int c = 0; c < families_[f].generator_count(); ++c)
            out.push_back(make_gen(f, static_cast<std::uint32_t>(c)));
    return out;
}

std::string AlgebraSpec::generator_name(GenId g) const {
    std::size_t f = gen_family(g);
    std::uint32_t c = gen_code(g);
    const Family& fam = families_[f];
    switch (fam.cls) {
    case FamilyClass::Spinor:
        return fam.names[0] + "^" + std::to_string(c + 1);
    case FamilyClass::Heisenberg:
        if (c < static_cast<std::uint32_t>(fam.n))
            return fam.names[0] + "_" + std::to_string(c + 1);
        return fam.names[1] + "_" + std::to_string(c - fam.n + 1);
    case FamilyClass::MatrixUnits:
        return fam.names[0] + "_" + std::to_string(c + 1);
    case FamilyClass::Free:
        return fam.names[0] + "_" + std::to_string(c + 1);
    case FamilyClass::Central:
        return fam.names[0];
    }
    return "?";
}

int AlgebraSpec::family_of_name(const std::string& name) const {
    for (std::size_t f = 0; f < families_.size(); ++f)
        for (const auto& nm : families_[f].names)
            if (nm == name) return static_cast<int>(f);
    return -1;
}

NCElement AlgebraSpec::generator_element(Ptr self, const std::string& name, int index,
                                         bool upper) const {
    int fi = family_of_name(name);
    if (fi < 0) throw UnknownSymbol("unknown generator family '" + name + "'");
    const Family& fam = families_[static_cast<std::size_t>(fi)];
    const Metric& M = metric_;
    auto gen = [&](int code) {
        return NCElement::generator(self, make_gen(static_cast<std::size_t>(fi),
                                                   static_cast<std::uint32_t>(code)));
    };
    switch (fam.cls) {
    case FamilyClass::Central:
        if (index != 0) throw SyntaxError("central symbol '" + name + "' takes no index", 0);
        return gen(0);
    case FamilyClass::Spinor: {
        if (index < 1 || index > fam.n) throw IndexOutOfRange(name + " index out of range");
        if (upper) return gen(index - 1);
        // c_a = eps_{ab} c^b
        NCElement e(self);
        for (int b = 0; b < fam.n; ++b)
            if (!yev::is_zero(M.lo(index - 1, b)))
                e = e + gen(b).scaled(M.lo(index - 1, b));
        return e;
    }
    case FamilyClass::Heisenberg: {
        if (index < 1 || index > fam.n) throw IndexOutOfRange(name + " index out of range");
        int base = name == fam.names[0] ? 0 : fam.n;
        if (!upper) return gen(base + index - 1);
        // x^a = eps^{ab} x_b
        NCElement e(self);
        for (int b = 0; b < fam.n; ++b)
            if (!yev::is_zero(M.up(index - 1, b)))
                e = e + gen(base + b).scaled(M.up(index - 1, b));
        return e;
    }
    case FamilyClass::MatrixUnits:
    case FamilyClass::Free: {
        if (upper) throw SyntaxError("'" + name + "' has no raised form", 0);
        int count = fam.generator_count();
        if (index < 1 || index > count) throw IndexOutOfRange(name + " index out of range");
        return normal_form(gen(index - 1));
    }
    }
    throw Error("unreachable");
}

NCElement NCElement::constant(AlgebraSpec::Ptr spec, const Rational& q) {
    NCElement e(std::move(spec));
    if (!yev::is_zero(q)) e.terms_[Word{}] = CentralPoly::constant(spectral_ring(), q);
    return e;
}

NCElement NCElement::constant(AlgebraSpec::Ptr spec, const CentralPoly& c) {
    NCElement e(std::move(spec));
    if (!c.is_zero()) e.terms_[Word{}] = c;
    return e;
}

NCElement NCElement::generator(AlgebraSpec::Ptr spec, GenId g) {
    NCElement e(std::move(spec));
    e.terms_[Word{g}] = CentralPoly::constant(spectral_ring(), rat(1));
    return e;
}

bool NCElement::is_scalar() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

CentralPoly NCElement::scalar_part() const {
    auto it = terms_.find(Word{});
    if (it == terms_.end()) return CentralPoly(spectral_ring());
    return it->second;
}

void NCElement::add_term(const Word& w, const CentralPoly& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        CentralPoly s = it->second + c;
        if (s.is_zero()) terms_.erase(it);
        else it->second = std::move(s);
    }
}

NCElement NCElement::operator+(const NCElement& o) const {
    NCElement r = *this;
    if (!r.spec_) r.spec_ = o.spec_;
    for (const auto& [w, c] : o.terms_) r.add_term(w, c);
    return r;
}

NCElement NCElement::operator-() const {
    NCElement r(spec_);
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

NCElement NCElement::operator-(const NCElement& o) const { return *this + (-o); }

NCElement NCElement::scaled(const Rational& q) const {
    NCElement r(spec_);
    if (yev::is_zero(q)) return r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, c.scaled(q));
    return r;
}

NCElement NCElement::scaled(const CentralPoly& cp) const {
    NCElement r(spec_);
    if (cp.is_zero()) return r;
    for (const auto& [w, c] : terms_) {
        CentralPoly p = c * cp;
        if (!p.is_zero()) r.terms_.emplace(w, std::move(p));
    }
    return r;
}

NCElement NCElement::operator*(const NCElement& o) const {
    NCElement raw(spec_ ? spec_ : o.spec_);
    for (const auto& [wa, ca] : terms_) {
        for (const auto& [wb, cb] : o.terms_) {
            CentralPoly c = ca * cb;
            if (c.is_zero()) continue;
            Word w;
            w.reserve(wa.size() + wb.size());
            w.insert(w.end(), wa.begin(), wa.end());
            w.insert(w.end(), wb.begin(), wb.end());
            raw.add_term(w, c);
        }
    }
    return normal_form(raw);
}

NCElement NCElement::substituted(const std::string& sym, const CentralPoly& value) const {
    NCElement r(spec_);
    for (const auto& [w, c] : terms_) {
        int i = c.ring()->index_of(sym);
        if (i < 0) throw UnknownSymbol("spectral symbol '" + sym + "' not in ring");
        CentralPoly s = c.substituted(static_cast<std::size_t>(i), value);
        if (!s.is_zero()) r.add_term(w, s);
    }
    return r;
}

NCElement NCElement::with_spec(AlgebraSpec::Ptr spec) const {
    if (spec->families().size() < spec_->families().size())
        throw UnknownAlgebraSpec("target spec does not extend the source spec");
    NCElement r(std::move(spec));
    r.terms_ = terms_;
    return r;
}

// ---------------------------------------------------------------------------
// normal ordering

namespace {

struct PairRule {
    // replacement terms: coefficient * fragment (fragment length 0..2)
    std::vector<std::pair<Rational, Word>> terms;
    const NCElement* splice = nullptr; // replace the pair by this element's terms
};

// Rule for an adjacent pair (a, b); nullopt when already in normal order.
std::optional<PairRule> pair_rule(const AlgebraSpec& spec, GenId a, GenId b) {
    std::size_t fa = gen_family(a), fb = gen_family(b);
    const auto& fams = spec.families();
    if (fa != fb) {
        if (spec.precedes(b, a)) return PairRule{{{rat(1), Word{b, a}}}, nullptr};
        return std::nullopt;
    }
    const Family& fam = fams[fa];
    const Metric& M = spec.metric();
    int eps = M.eps;
    auto ca = static_cast<int>(gen_code(a)), cb = static_cast<int>(gen_code(b));
    switch (fam.cls) {
    case FamilyClass::Free:
        return std::nullopt;
    case FamilyClass::Central:
        if (!fam.square) return std::nullopt;
        return PairRule{{}, fam.square.get()};
    case FamilyClass::Spinor: {
        // c^a c^b + eps c^b c^a = eps^{ab}
        if (ca > cb) {
            PairRule r{{{rat(-eps), Word{b, a}}}, nullptr};
            if (!yev::is_zero(M.up(ca, cb))) r.terms.push_back({M.up(ca, cb), Word{}});
            return r;
        }
        if (ca == cb && eps == 1)
            return PairRule{{{M.up(ca, ca) / 2, Word{}}}, nullptr};
        return std::nullopt;
    }
    case FamilyClass::Heisenberg: {
        int n = fam.n;
        bool da = ca >= n, db = cb >= n;
        int ia = ca % n, ib = cb % n;
        bool fermi = eps == -1;
        if (ca == cb) {
            if (fermi) return PairRule{{}, nullptr}; // square vanishes
            return std::nullopt;
        }
        if (da && !db) {
            // d_a x_b = eps x_b d_a - eps * eps_{ba}
            PairRule r{{{rat(eps), Word{b, a}}}, nullptr};
            if (!yev::is_zero(M.lo(ib, ia))) r.terms.push_back({rat(-eps) * M.lo(ib, ia), Word{}});
            return r;
        }
        if (da == db && ca > cb)
            return PairRule{{{rat(eps), Word{b, a}}}, nullptr};
        return std::nullopt;
    }
    case FamilyClass::MatrixUnits: {
        int n = fam.n;
        int i1 = ca / n, j1 = ca % n, i2 = cb / n, j2 = cb % n;
        if (j1 != i2) return PairRule{{}, nullptr}; // product vanishes
        PairRule r;
        int code = i1 * n + j2;
        r.terms.push_back({rat(1), Word{make_gen(fa, static_cast<std::uint32_t>(code))}});
        return r;
    }
    }
    return std::nullopt;
}

// Single-generator rule: E_{nn} -> 1 - sum_{a<n} E_{aa}.
std::optional<PairRule> single_rule(const AlgebraSpec& spec, GenId g) {
    const Family& fam = spec.families()[gen_family(g)];
    if (fam.cls != FamilyClass::MatrixUnits) return std::nullopt;
    int n = fam.n;
    if (static_cast<int>(gen_code(g)) != n * n - 1) return std::nullopt;
    PairRule r;
    r.terms.push_back({rat(1), Word{}});
    for (int a = 0; a < n - 1; ++a)
        r.terms.push_back({rat(-1), Word{make_gen(gen_family(g), static_cast<std::uint32_t>(a * n + a))}});
    return r;
}

} // namespace

NCElement normal_form(AlgebraSpec::Ptr spec, const NCElement::Terms& raw, ReduceStrategy strategy) {
    NCElement out(spec);
    std::vector<std::pair<Word, CentralPoly>> stack(raw.begin(), raw.end());
    const int cap = spec->degree_cap();
    while (!stack.empty()) {
        auto [w, c] = std::move(stack.back());
        stack.pop_back();
        if (c.is_zero()) continue;
        if (static_cast<int>(w.size()) > cap)
            throw DegreeCapExceeded("word length " + std::to_string(w.size()) +
                                    " exceeds degree cap " + std::to_string(cap));
        std::optional<std::pair<std::size_t, PairRule>> hit; // position, rule (span 2)
        std::optional<std::pair<std::size_t, PairRule>> hit1; // single rule (span 1)
        auto scan_at = [&](std::size_t i) -> bool {
            if (i + 1 < w.size()) {
                if (auto r = pair_rule(*spec, w[i], w[i + 1])) {
                    hit = {i, std::move(*r)};
                    return true;
                }
            }
            if (i < w.size()) {
                if (auto r = single_rule(*spec, w[i])) {
                    hit1 = {i, std::move(*r)};
                    return true;
                }
            }
            return false;
        };
        bool found = false;
        if (strategy == ReduceStrategy::Leftmost) {
            for (std::size_t i = 0; i < w.size() && !found; ++i) found = scan_at(i);
        } else {
            for (std::size_t i = w.size(); i-- > 0 && !found;) found = scan_at(i);
        }
        if (!found) {
            out.add_term(w, c);
            continue;
        }
        std::size_t pos;
        const PairRule* rule;
        std::size_t span;
        if (hit) {
            pos = hit->first;
            rule = &hit->second;
            span = 2;
        } else {
            pos = hit1->first;
            rule = &hit1->second;
            span = 1;
        }
        auto emit = [&](const Word& frag, const CentralPoly& coeff) {
            Word nw;
            nw.reserve(w.size() - span + frag.size());
            nw.insert(nw.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
            nw.insert(nw.end(), frag.begin(), frag.end());
            nw.insert(nw.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + span), w.end());
            stack.emplace_back(std::move(nw), coeff);
        };
        for (const auto& [q, frag] : rule->terms) emit(frag, c.scaled(q));
        if (rule->splice)
            for (const auto& [sw, sc] : rule->splice->terms()) emit(sw, c * sc);
    }
    return out;
}

NCElement normal_form(const NCElement& e, ReduceStrategy strategy) {
    return normal_form(e.spec(), e.terms(), strategy);
}

CentralityResult is_central(const NCElement& e) {
    const auto& spec = e.spec();
    for (GenId g : spec->all_generators()) {
        NCElement x = NCElement::generator(spec, g);
        if (!(e * x - x * e).is_zero())
            return {false, g, spec->generator_name(g)};
    }
    return {true, std::nullopt, std::nullopt};
}

CentralityResult is_central_within(const NCElement& e, const std::vector<NCElement>& gens) {
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (!(e * gens[i] - gens[i] * e).is_zero())
            return {false, std::nullopt, "generator #" + std::to_string(i + 1)};
    }
    return {true, std::nullopt, std::nullopt};
}

AlgebraSpec::Ptr adjoin_central(const AlgebraSpec::Ptr& spec, const std::string& name,
                                const NCElement& square, const std::vector<NCElement>& scope) {
    if (spec->family_of_name(name) >= 0)
        throw DuplicateSymbol("symbol '" + name + "' already in use");
    CentralityResult cr = scope.empty() ? is_central(square) : is_central_within(square, scope);
    if (!cr.central)
        throw NonCentralSquare("square of '" + name + "' is not central (witness: " +
                               cr.witness_name.value_or("?") + ")");
    std::vector<Family> fams = spec->families();
    Family f;
    f.cls = FamilyClass::Central;
    f.n = 1;
    f.names = {name};
    fams.push_back(std::move(f));
    auto out = AlgebraSpec::create(spec->metric(), std::move(fams), spec->degree_cap());
    // The square must live in the extended spec.
    auto sq = std::make_shared<NCElement>(square.with_spec(out));
    const_cast<Family&>(out->families().back()).square = sq;
    return out;
}

std::string NCElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        std::string cs = c.str();
        bool neg = cs.size() > 1 && cs[0] == '-' && cs.find(" + ") == std::string::npos &&
                   cs.find(" - ") == std::string::npos;
        if (first) {
            first = false;
        } else {
            os << (neg ? " - " : " + ");
            if (neg) cs = cs.substr(1);
        }
        bool needs_parens = cs.find(" + ") != std::string::npos || cs.find(" - ") != std::string::npos;
        if (w.empty()) {
            os << (needs_parens ? "(" + cs + ")" : cs);
            continue;
        }
        if (needs_parens) {
            os << "(" << cs << ")*";
        } else if (cs == "1") {
            // omit unit coefficient
        } else if (cs == "-1") {
            os << "-";
        } else {
            os << cs << "*";
        }
        bool firstg = true;
        for (GenId g : w) {
            if (!firstg) os << "*";
            firstg = false;
            os << spec_->generator_name(g);
        }
    }
    return os.str();
}

} // namespace yev
