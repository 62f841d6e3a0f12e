#include "yev/metric.hpp"

#include "yev/errors.hpp"

namespace yev {

std::string kind_name(AlgebraKind k) {
    return k == AlgebraKind::Orthogonal ? "so" : "sp";
}

Metric make_metric(AlgebraKind kind, int n) {
    if (n < 2) throw DimensionMismatch("metric needs n >= 2");
    if (kind == AlgebraKind::Symplectic && n % 2 != 0)
        throw OddSymplecticDimension("symplectic metric needs even n, got " + std::to_string(n));
    Metric m;
    m.kind = kind;
    m.n = n;
    m.eps = kind == AlgebraKind::Orthogonal ? 1 : -1;
    m.beta = rat(n, 2) - rat(m.eps);
    m.lower.assign(n, std::vector<Rational>(n, rat(0)));
    m.upper.assign(n, std::vector<Rational>(n, rat(0)));
    if (kind == AlgebraKind::Orthogonal) {
        for (int a = 0; a < n; ++a) m.lower[a][a] = m.upper[a][a] = rat(1);
    } else {
        int half = n / 2;
        for (int i = 0; i < half; ++i) {
            m.lower[i][i + half] = rat(1);
            m.lower[i + half][i] = rat(-1);
            m.upper[i][i + half] = rat(-1);
            m.upper[i + half][i] = rat(1);
        }
    }
    return m;
}

} // namespace yev
