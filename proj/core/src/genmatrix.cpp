#include "yev/genmatrix.hpp"

#include "yev/errors.hpp"

namespace yev {

GeneratorMatrix::GeneratorMatrix(Metric m, AlgebraSpec::Ptr a, std::string lbl)
    : metric(std::move(m)), alg(std::move(a)), n(metric.n), label(std::move(lbl)) {
    e.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), NCElement(alg));
}

bool GeneratorMatrix::is_zero() const {
    for (const auto& x : e)
        if (!x.is_zero()) return false;
    return true;
}

GeneratorMatrix GeneratorMatrix::operator+(const GeneratorMatrix& o) const {
    if (o.n != n) throw DimensionMismatch("matrix size mismatch");
    GeneratorMatrix r = *this;
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = r.e[i] + o.e[i];
    return r;
}

GeneratorMatrix GeneratorMatrix::operator-(const GeneratorMatrix& o) const {
    return *this + o.scaled(rat(-1));
}

GeneratorMatrix GeneratorMatrix::operator*(const GeneratorMatrix& o) const {
    if (o.n != n) throw DimensionMismatch("matrix size mismatch");
    GeneratorMatrix r(metric, alg, label);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            NCElement s(alg);
            for (int c = 0; c < n; ++c)
                if (!at(a, c).is_zero() && !o.at(c, b).is_zero())
                    s = s + at(a, c) * o.at(c, b);
            r.at(a, b) = std::move(s);
        }
    return r;
}

GeneratorMatrix GeneratorMatrix::scaled(const Rational& q) const {
    GeneratorMatrix r = *this;
    for (auto& x : r.e) x = x.scaled(q);
    return r;
}

GeneratorMatrix GeneratorMatrix::scaled(const NCElement& central) const {
    GeneratorMatrix r = *this;
    for (auto& x : r.e) x = central * x;
    return r;
}

GeneratorMatrix GeneratorMatrix::plus_scalar(const NCElement& c) const {
    GeneratorMatrix r = *this;
    for (int a = 0; a < n; ++a) r.at(a, a) = r.at(a, a) + c;
    return r;
}

GeneratorMatrix GeneratorMatrix::power(int k) const {
    GeneratorMatrix r(metric, alg, label);
    for (int a = 0; a < n; ++a) r.at(a, a) = NCElement::constant(alg, rat(1));
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

GeneratorMatrix GeneratorMatrix::lowered() const {
    GeneratorMatrix r(metric, alg, label);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            NCElement s(alg);
            for (int c = 0; c < n; ++c)
                if (!yev::is_zero(metric.lo(a, c)))
                    s = s + at(c, b).scaled(metric.lo(a, c));
            r.at(a, b) = std::move(s);
        }
    return r;
}

GeneratorMatrix GeneratorMatrix::raised_from_lower() const {
    GeneratorMatrix r(metric, alg, label);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            NCElement s(alg);
            for (int c = 0; c < n; ++c)
                if (!yev::is_zero(metric.up(a, c)))
                    s = s + at(c, b).scaled(metric.up(a, c));
            r.at(a, b) = std::move(s);
        }
    return r;
}

NCElement GeneratorMatrix::trace() const {
    NCElement s(alg);
    for (int a = 0; a < n; ++a) s = s + at(a, a);
    return s;
}

NCElement GeneratorMatrix::trace_part() const { return trace().scaled(rat(1, n)); }

TensorOperator GeneratorMatrix::as_slot_op(int slot, int arity) const {
    TensorOperator one(1, n, alg);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (!at(a, b).is_zero())
                one.set(static_cast<TensorOperator::Index>(a),
                        static_cast<TensorOperator::Index>(b), at(a, b));
    return embed(one, {slot}, arity);
}

GeneratorMatrix lower_index(const GeneratorMatrix& m) { return m.lowered(); }
GeneratorMatrix raise_index(const GeneratorMatrix& lowered) { return lowered.raised_from_lower(); }

GradedDecomposition graded_split(const GeneratorMatrix& m) {
    const Metric& M = m.metric;
    const int n = m.n, eps = M.eps;
    NCElement tr = m.trace_part();
    GeneratorMatrix low = m.lowered();
    GeneratorMatrix anti_low(M, m.alg), sym_low(M, m.alg);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            NCElement x = low.at(a, b) - tr.scaled(M.lo(a, b));
            NCElement xt = low.at(b, a) - tr.scaled(M.lo(b, a));
            anti_low.at(a, b) = (x - xt.scaled(rat(eps))).scaled(rat(1, 2));
            sym_low.at(a, b) = (x + xt.scaled(rat(eps))).scaled(rat(1, 2));
        }
    GradedDecomposition d;
    d.trace_part = std::move(tr);
    d.antisym = anti_low.raised_from_lower();
    d.antisym.label = m.label + ".antisym";
    d.sym_traceless = sym_low.raised_from_lower();
    d.sym_traceless.label = m.label + ".sym_traceless";
    return d;
}

NCElement casimir_m2(const GeneratorMatrix& g) { return casimir_t2(g).scaled(rat(1, g.n)); }

NCElement casimir_t2(const GeneratorMatrix& g) {
    NCElement s(g.alg);
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b)
            if (!g.at(a, b).is_zero() && !g.at(b, a).is_zero())
                s = s + g.at(a, b) * g.at(b, a);
    return s;
}

std::vector<NCElement> entry_list(const GeneratorMatrix& g) {
    std::vector<NCElement> out;
    for (const auto& x : g.e)
        if (!x.is_zero()) out.push_back(x);
    return out;
}

} // namespace yev
