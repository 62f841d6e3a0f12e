#include "yev/reps.hpp"

#include <fstream>
#include <sstream>

#include "yev/errors.hpp"
#include "yev/parse.hpp"

namespace yev {

AlgebraSpec::Ptr spinor_algebra(const Metric& m, const std::string& name) {
    return AlgebraSpec::create(m, {Family{FamilyClass::Spinor, m.n, {name}, nullptr}});
}

AlgebraSpec::Ptr heisenberg_algebra(const Metric& m, const std::string& x, const std::string& d) {
    return AlgebraSpec::create(m, {Family{FamilyClass::Heisenberg, m.n, {x, d}, nullptr}});
}

AlgebraSpec::Ptr matrix_units_algebra(const Metric& m, const std::string& name) {
    return AlgebraSpec::create(m, {Family{FamilyClass::MatrixUnits, m.n, {name}, nullptr}});
}

AlgebraSpec::Ptr free_algebra(const Metric& m, const std::string& name, int count) {
    return AlgebraSpec::create(m, {Family{FamilyClass::Free, count, {name}, nullptr}});
}

AlgebraSpec::Ptr composite_algebra(const Metric& m, std::vector<Family> families) {
    return AlgebraSpec::create(m, std::move(families));
}

GeneratorMatrix fundamental_rep(const Metric& m) {
    auto alg = matrix_units_algebra(m);
    const int n = m.n, eps = m.eps;
    auto E = [&](int i, int j) {
        return NCElement::generator(alg, make_gen(0, static_cast<std::uint32_t>(i * n + j)));
    };
    GeneratorMatrix low(m, alg, "fundamental");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            NCElement s(alg);
            for (int c = 0; c < n; ++c) {
                if (!yev::is_zero(m.lo(b, c))) s = s + E(c, a).scaled(m.lo(b, c) * eps);
                if (!yev::is_zero(m.lo(a, c))) s = s - E(c, b).scaled(m.lo(a, c));
            }
            low.at(a, b) = normal_form(s);
        }
    GeneratorMatrix up = low.raised_from_lower();
    up.label = "fundamental";
    return up;
}

GeneratorMatrix spinor_rep_in(const Metric& m, AlgebraSpec::Ptr alg, std::size_t family) {
    const int n = m.n;
    auto c = [&](int a) {
        return NCElement::generator(alg, make_gen(family, static_cast<std::uint32_t>(a)));
    };
    GeneratorMatrix g(m, alg, "spinor");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            NCElement s(alg);
            for (int d = 0; d < n; ++d)
                if (!yev::is_zero(m.lo(b, d))) s = s - (c(a) * c(d)).scaled(m.lo(b, d));
            if (a == b) s = s + NCElement::constant(alg, rat(m.eps, 2));
            g.at(a, b) = normal_form(s);
        }
    return g;
}

GeneratorMatrix spinor_rep(const Metric& m) { return spinor_rep_in(m, spinor_algebra(m), 0); }

GeneratorMatrix js_rep_in(const Metric& m, AlgebraSpec::Ptr alg, std::size_t family) {
    const int n = m.n, eps = m.eps;
    auto x = [&](int a) {
        return NCElement::generator(alg, make_gen(family, static_cast<std::uint32_t>(a)));
    };
    auto d = [&](int a) {
        return NCElement::generator(alg, make_gen(family, static_cast<std::uint32_t>(n + a)));
    };
    GeneratorMatrix low(m, alg, "js");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            NCElement s = x(a) * d(b) - (x(b) * d(a)).scaled(rat(eps));
            low.at(a, b) = normal_form(s.scaled(rat(eps)));
        }
    GeneratorMatrix up = low.raised_from_lower();
    up.label = "js";
    return up;
}

GeneratorMatrix js_rep(const Metric& m) { return js_rep_in(m, heisenberg_algebra(m), 0); }

QuadraticPair r_as_quadratic(const Metric& m) {
    auto alg = matrix_units_algebra(m);
    const int n = m.n, eps = m.eps;
    auto E = [&](int i, int j) {
        return NCElement::generator(alg, make_gen(0, static_cast<std::uint32_t>(i * n + j)));
    };
    QuadraticPair p{GeneratorMatrix(m, alg, "r-quadratic.G"), GeneratorMatrix(m, alg, "r-quadratic.H")};
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            NCElement g = E(b, a); // P slice
            if (a == b) g = g + NCElement::constant(alg, m.beta);
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    Rational q = rat(-eps) * m.up(a, c) * m.lo(b, d);
                    if (!yev::is_zero(q)) g = g + E(c, d).scaled(q); // -eps K slice
                }
            p.G.at(a, b) = normal_form(g);
            p.H.at(a, b) = normal_form(E(b, a).scaled(m.beta));
        }
    return p;
}

// ---------------------------------------------------------------------------
// rep files

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<Family> parse_families(const std::string& text) {
    std::vector<Family> fams;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::stringstream ws(trim(item));
        std::string cls;
        ws >> cls;
        Family f;
        if (cls == "clifford" || cls == "oscillator") {
            f.cls = FamilyClass::Spinor;
            std::string nm = "c";
            ws >> nm;
            f.names = {nm};
        } else if (cls == "heisenberg-bosonic" || cls == "heisenberg-fermionic" ||
                   cls == "heisenberg") {
            f.cls = FamilyClass::Heisenberg;
            std::string x = "x", d = "d";
            ws >> x >> d;
            if (x.empty()) x = "x";
            if (d.empty()) d = "d";
            f.names = {x, d};
        } else if (cls == "matrix-units") {
            f.cls = FamilyClass::MatrixUnits;
            std::string nm = "E";
            ws >> nm;
            f.names = {nm};
        } else if (cls == "free") {
            f.cls = FamilyClass::Free;
            std::string nm = "F";
            int count = 0;
            ws >> nm >> count;
            f.names = {nm};
            f.n = count;
        } else {
            throw UnknownAlgebraSpec("unknown family class '" + cls + "'");
        }
        fams.push_back(std::move(f));
    }
    if (fams.empty()) throw UnknownAlgebraSpec("families: header declares no family");
    return fams;
}

} // namespace

LoadedRep load_rep_stream(std::istream& in) {
    std::optional<AlgebraKind> kind;
    int n = 0;
    std::vector<Family> fams;
    std::string line;
    std::vector<std::tuple<char, int, int, std::string>> entries;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        auto fail = [&](const std::string& msg) {
            throw SyntaxError("rep file line " + std::to_string(lineno) + ": " + msg, 0);
        };
        if (t.rfind("algebra:", 0) == 0) {
            std::string v = trim(t.substr(8));
            if (v == "so") kind = AlgebraKind::Orthogonal;
            else if (v == "sp") kind = AlgebraKind::Symplectic;
            else fail("algebra must be so or sp");
        } else if (t.rfind("n:", 0) == 0) {
            n = std::stoi(trim(t.substr(2)));
        } else if (t.rfind("families:", 0) == 0) {
            fams = parse_families(trim(t.substr(9)));
        } else if (t[0] == 'G' || t[0] == 'H') {
            char which = t[0];
            std::size_t p = 1;
            auto read_idx = [&]() {
                if (p >= t.size() || t[p] != '[') fail("expected '['");
                ++p;
                std::size_t q = t.find(']', p);
                if (q == std::string::npos) fail("expected ']'");
                int v = std::stoi(t.substr(p, q - p));
                p = q + 1;
                return v;
            };
            int a = read_idx();
            int b = read_idx();
            while (p < t.size() && std::isspace(static_cast<unsigned char>(t[p]))) ++p;
            if (p >= t.size() || t[p] != '=') fail("expected '='");
            entries.emplace_back(which, a, b, trim(t.substr(p + 1)));
        } else {
            fail("unrecognized line '" + t + "'");
        }
    }
    if (!kind || n < 2) throw UnknownAlgebraSpec("rep file missing algebra/n header");
    Metric metric = make_metric(*kind, n);
    for (auto& f : fams)
        if (f.cls != FamilyClass::Free && f.cls != FamilyClass::Central) f.n = n;
    auto alg = AlgebraSpec::create(metric, fams);

    LoadedRep rep{metric, alg, GeneratorMatrix(metric, alg, "file"), std::nullopt};
    bool has_h = false;
    std::vector<bool> g_seen(static_cast<std::size_t>(n) * n, false);
    for (const auto& [which, a, b, expr] : entries) {
        if (a < 1 || a > n || b < 1 || b > n)
            throw DimensionMismatch("entry index " + std::to_string(a) + "," + std::to_string(b) +
                                    " outside declared n=" + std::to_string(n));
        NCElement v = parse(expr, alg);
        if (which == 'G') {
            rep.G.at(a - 1, b - 1) = std::move(v);
            g_seen[static_cast<std::size_t>((a - 1) * n + (b - 1))] = true;
        } else {
            if (!has_h) {
                rep.H = GeneratorMatrix(metric, alg, "file.H");
                has_h = true;
            }
            rep.H->at(a - 1, b - 1) = std::move(v);
        }
    }
    for (bool seen : g_seen)
        if (!seen) throw DimensionMismatch("rep file does not cover all n*n G entries");
    return rep;
}

LoadedRep load_rep(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open rep file '" + path + "'");
    return load_rep_stream(in);
}

void save_rep(std::ostream& out, const GeneratorMatrix& G, const GeneratorMatrix* H) {
    out << "algebra: " << kind_name(G.metric.kind) << "\n";
    out << "n: " << G.n << "\n";
    out << "families:";
    bool first = true;
    for (const auto& f : G.alg->families()) {
        out << (first ? " " : ", ");
        first = false;
        switch (f.cls) {
        case FamilyClass::Spinor:
            out << (G.metric.eps == 1 ? "clifford " : "oscillator ") << f.names[0];
            break;
        case FamilyClass::Heisenberg:
            out << (G.metric.eps == 1 ? "heisenberg-bosonic " : "heisenberg-fermionic ")
                << f.names[0] << " " << f.names[1];
            break;
        case FamilyClass::MatrixUnits:
            out << "matrix-units " << f.names[0];
            break;
        case FamilyClass::Free:
            out << "free " << f.names[0] << " " << f.n;
            break;
        case FamilyClass::Central:
            throw UnsupportedFamily("rep files cannot carry adjoined central symbols");
        }
    }
    out << "\n";
    for (int a = 0; a < G.n; ++a)
        for (int b = 0; b < G.n; ++b)
            out << "G[" << a + 1 << "][" << b + 1 << "] = " << G.at(a, b).str() << "\n";
    if (H)
        for (int a = 0; a < G.n; ++a)
            for (int b = 0; b < G.n; ++b)
                out << "H[" << a + 1 << "][" << b + 1 << "] = " << H->at(a, b).str() << "\n";
}

} // namespace yev
