#include "yev/fock.hpp"

#include "yev/errors.hpp"

namespace yev {

FockMatrix fock_zero(int dim) {
    return FockMatrix(static_cast<std::size_t>(dim),
                      std::vector<Gaussian>(static_cast<std::size_t>(dim)));
}

FockMatrix fock_identity(int dim) {
    FockMatrix m = fock_zero(dim);
    for (int i = 0; i < dim; ++i) m[i][i] = Gaussian(rat(1));
    return m;
}

FockMatrix fock_mul(const FockMatrix& a, const FockMatrix& b) {
    std::size_t dim = a.size();
    FockMatrix r = fock_zero(static_cast<int>(dim));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t k = 0; k < dim; ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < dim; ++j)
                if (!b[k][j].is_zero()) r[i][j] = r[i][j] + a[i][k] * b[k][j];
        }
    return r;
}

FockMatrix fock_add(const FockMatrix& a, const FockMatrix& b) {
    FockMatrix r = a;
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < r.size(); ++j) r[i][j] = r[i][j] + b[i][j];
    return r;
}

FockMatrix fock_scale(const FockMatrix& a, const Gaussian& q) {
    FockMatrix r = a;
    for (auto& row : r)
        for (auto& x : row) x = x * q;
    return r;
}

bool fock_is_zero(const FockMatrix& a) {
    for (const auto& row : a)
        for (const auto& x : row)
            if (!x.is_zero()) return false;
    return true;
}

namespace {

FockMatrix kron(const FockMatrix& a, const FockMatrix& b) {
    std::size_t da = a.size(), db = b.size();
    FockMatrix r = fock_zero(static_cast<int>(da * db));
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j) {
            if (a[i][j].is_zero()) continue;
            for (std::size_t k = 0; k < db; ++k)
                for (std::size_t l = 0; l < db; ++l)
                    if (!b[k][l].is_zero()) r[i * db + k][j * db + l] = a[i][j] * b[k][l];
        }
    return r;
}

// Jordan-Wigner ladder operators for `modes` fermionic modes: creators and
// annihilators with exact 0/1 entries.
struct Ladders {
    std::vector<FockMatrix> create, annihilate;
    int dim;
};

Ladders make_ladders(int modes) {
    FockMatrix plus = fock_zero(2), minus = fock_zero(2), z = fock_zero(2), one = fock_identity(2);
    plus[1][0] = Gaussian(rat(1));  // |1><0|
    minus[0][1] = Gaussian(rat(1)); // |0><1|
    z[0][0] = Gaussian(rat(1));
    z[1][1] = Gaussian(rat(-1));
    Ladders L;
    L.dim = 1 << modes;
    for (int k = 0; k < modes; ++k) {
        FockMatrix c = fock_identity(1), a = fock_identity(1);
        for (int j = 0; j < modes; ++j) {
            const FockMatrix& fc = j < k ? z : (j == k ? plus : one);
            const FockMatrix& fa = j < k ? z : (j == k ? minus : one);
            c = kron(c, fc);
            a = kron(a, fa);
        }
        L.create.push_back(std::move(c));
        L.annihilate.push_back(std::move(a));
    }
    return L;
}

void verify_relation(const FockMatrix& lhs, const FockMatrix& rhs, const char* what) {
    FockMatrix diff = fock_add(lhs, fock_scale(rhs, Gaussian(rat(-1))));
    if (!fock_is_zero(diff)) throw Error(std::string("fock backend relation failed: ") + what);
}

} // namespace

bool fock_supported(const AlgebraSpec::Ptr& spec) {
    for (const auto& f : spec->families()) {
        switch (f.cls) {
        case FamilyClass::Spinor:
            if (spec->metric().eps != 1 || f.n % 2 != 0) return false;
            break;
        case FamilyClass::Heisenberg:
            if (spec->metric().eps != -1) return false;
            break;
        case FamilyClass::MatrixUnits:
            break;
        case FamilyClass::Central:
            if (!f.square) return false;
            break;
        case FamilyClass::Free:
            return false;
        }
    }
    return true;
}

FockBackend FockBackend::build(const AlgebraSpec::Ptr& spec) {
    FockBackend fb;
    fb.spec_ = spec;
    const Metric& M = spec->metric();

    // matrices per family in its own space, then pad by Kronecker products
    std::vector<std::vector<FockMatrix>> per_family; // family -> generator matrices
    std::vector<int> fam_dim;
    std::vector<std::size_t> central_with_square;

    for (std::size_t fi = 0; fi < spec->families().size(); ++fi) {
        const Family& f = spec->families()[fi];
        std::vector<FockMatrix> gens;
        int dim = 1;
        switch (f.cls) {
        case FamilyClass::Spinor: {
            if (M.eps != 1)
                throw UnsupportedFamily("oscillator family has no finite matrix model");
            if (f.n % 2 != 0)
                throw UnsupportedFamily("odd-n clifford family handled symbolically only");
            int modes = f.n / 2;
            Ladders L = make_ladders(modes);
            dim = L.dim;
            for (int k = 0; k < modes; ++k) {
                // pair (2k, 2k+1): f + f^+/2 and i(f - f^+/2); squares are 1/2
                FockMatrix even = fock_add(L.annihilate[k], fock_scale(L.create[k], Gaussian(rat(1, 2))));
                FockMatrix odd = fock_scale(
                    fock_add(L.annihilate[k], fock_scale(L.create[k], Gaussian(rat(-1, 2)))),
                    Gaussian(rat(0), rat(1)));
                gens.push_back(std::move(even));
                gens.push_back(std::move(odd));
            }
            break;
        }
        case FamilyClass::Heisenberg: {
            if (M.eps != -1)
                throw UnsupportedFamily("bosonic heisenberg family has no finite matrix model");
            Ladders L = make_ladders(f.n);
            dim = L.dim;
            for (int a = 0; a < f.n; ++a) gens.push_back(L.create[a]); // x_a
            for (int b = 0; b < f.n; ++b) {                            // d_b = eps_{cb} a_c
                FockMatrix d = fock_zero(dim);
                for (int c = 0; c < f.n; ++c)
                    if (!yev::is_zero(M.lo(c, b)))
                        d = fock_add(d, fock_scale(L.annihilate[c], Gaussian(M.lo(c, b))));
                gens.push_back(std::move(d));
            }
            break;
        }
        case FamilyClass::MatrixUnits: {
            dim = f.n;
            for (int i = 0; i < f.n; ++i)
                for (int j = 0; j < f.n; ++j) {
                    FockMatrix m = fock_zero(dim);
                    m[i][j] = Gaussian(rat(1));
                    gens.push_back(std::move(m));
                }
            break;
        }
        case FamilyClass::Central:
            if (!f.square)
                throw UnsupportedFamily("free central symbol has no finite matrix model");
            central_with_square.push_back(fi);
            gens.push_back(FockMatrix{}); // placeholder, resolved after padding
            break;
        case FamilyClass::Free:
            throw UnsupportedFamily("free family has no finite matrix model");
        }
        per_family.push_back(std::move(gens));
        fam_dim.push_back(dim);
    }

    int total = 1;
    for (std::size_t fi = 0; fi < per_family.size(); ++fi) total *= fam_dim[fi];
    fb.dim_ = total;
    for (std::size_t fi = 0; fi < per_family.size(); ++fi) {
        if (spec->families()[fi].cls == FamilyClass::Central) continue;
        int left = 1, right = 1;
        for (std::size_t j = 0; j < fi; ++j) left *= fam_dim[j];
        for (std::size_t j = fi + 1; j < per_family.size(); ++j) right *= fam_dim[j];
        for (std::size_t c = 0; c < per_family[fi].size(); ++c) {
            FockMatrix m = kron(kron(fock_identity(left), per_family[fi][c]), fock_identity(right));
            fb.gens_[make_gen(fi, static_cast<std::uint32_t>(c))] = std::move(m);
        }
    }

    // companion doubling for adjoined central symbols: g = [[0, S],[I, 0]]
    for (std::size_t fi : central_with_square) {
        const Family& f = spec->families()[fi];
        FockMatrix S = fb.evaluate(f.square->with_spec(spec));
        int dprev = fb.dim_;
        int dnew = 2 * dprev;
        auto lift = [&](const FockMatrix& m) {
            FockMatrix r = fock_zero(dnew);
            for (int i = 0; i < dprev; ++i)
                for (int j = 0; j < dprev; ++j) {
                    r[i][j] = m[i][j];
                    r[i + dprev][j + dprev] = m[i][j];
                }
            return r;
        };
        for (auto& [g, m] : fb.gens_) m = lift(m);
        FockMatrix gm = fock_zero(dnew);
        for (int i = 0; i < dprev; ++i) {
            gm[i + dprev][i] = Gaussian(rat(1));
            for (int j = 0; j < dprev; ++j) gm[i][j + dprev] = S[i][j];
        }
        fb.gens_[make_gen(fi, 0)] = std::move(gm);
        fb.dim_ = dnew;
    }

    // re-verify the defining relations exactly
    for (std::size_t fi = 0; fi < spec->families().size(); ++fi) {
        const Family& f = spec->families()[fi];
        auto G = [&](int c) -> const FockMatrix& {
            return fb.gens_.at(make_gen(fi, static_cast<std::uint32_t>(c)));
        };
        if (f.cls == FamilyClass::Spinor) {
            for (int a = 0; a < f.n; ++a)
                for (int b = 0; b < f.n; ++b) {
                    FockMatrix lhs = fock_add(fock_mul(G(a), G(b)),
                                              fock_scale(fock_mul(G(b), G(a)), Gaussian(rat(M.eps))));
                    verify_relation(lhs, fock_scale(fock_identity(fb.dim_), Gaussian(M.up(a, b))),
                                    "spinor anticommutator");
                }
        } else if (f.cls == FamilyClass::Heisenberg) {
            for (int a = 0; a < f.n; ++a)
                for (int b = 0; b < f.n; ++b) {
                    FockMatrix lhs =
                        fock_add(fock_mul(G(a), G(f.n + b)),
                                 fock_scale(fock_mul(G(f.n + b), G(a)), Gaussian(rat(-M.eps))));
                    verify_relation(lhs, fock_scale(fock_identity(fb.dim_), Gaussian(M.lo(a, b))),
                                    "heisenberg pair relation");
                }
        } else if (f.cls == FamilyClass::Central && f.square) {
            const FockMatrix& g = fb.gens_.at(make_gen(fi, 0));
            verify_relation(fock_mul(g, g), fb.evaluate(f.square->with_spec(spec)),
                            "central square");
        }
    }
    return fb;
}

const FockMatrix& FockBackend::generator(GenId g) const { return gens_.at(g); }

std::map<CentralPoly::Exps, FockMatrix> FockBackend::evaluate_poly(const NCElement& e) const {
    std::map<CentralPoly::Exps, FockMatrix> out;
    for (const auto& [w, c] : e.terms()) {
        FockMatrix m = fock_identity(dim_);
        for (GenId g : w) m = fock_mul(m, gens_.at(g));
        for (const auto& [exps, q] : c.terms()) {
            auto it = out.find(exps);
            if (it == out.end()) it = out.emplace(exps, fock_zero(dim_)).first;
            it->second = fock_add(it->second, fock_scale(m, Gaussian(q)));
        }
    }
    for (auto it = out.begin(); it != out.end();) {
        if (fock_is_zero(it->second)) it = out.erase(it);
        else ++it;
    }
    return out;
}

FockMatrix FockBackend::evaluate(const NCElement& e) const {
    auto polys = evaluate_poly(e);
    if (polys.empty()) return fock_zero(dim_);
    if (polys.size() > 1 || !polys.begin()->first.empty()) {
        for (const auto& [exps, m] : polys) {
            (void)m;
            for (unsigned x : exps)
                if (x != 0) throw Error("element has spectral coefficients; use evaluate_poly");
        }
    }
    return polys.begin()->second;
}

bool FockBackend::is_zero(const NCElement& e) const { return evaluate_poly(e).empty(); }

} // namespace yev
