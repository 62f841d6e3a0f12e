#pragma once

#include <string>
#include <vector>

#include "yev/rational.hpp"

namespace yev {

enum class AlgebraKind { Orthogonal, Symplectic };

std::string kind_name(AlgebraKind k); // "so" / "sp"

// Invariant bilinear form on V plus the structural constants used everywhere:
// eps_{ab} = eps * eps_{ba}, eps_{ab} eps^{bd} = delta_a^d, beta = n/2 - eps.
struct Metric {
    AlgebraKind kind;
    int n;
    int eps; // +1 orthogonal, -1 symplectic
    Rational beta;
    std::vector<std::vector<Rational>> lower; // eps_{ab}
    std::vector<std::vector<Rational>> upper; // eps^{ab}

    const Rational& lo(int a, int b) const { return lower[a][b]; } // 0-based
    const Rational& up(int a, int b) const { return upper[a][b]; }
};

// Orthogonal: eps_{ab} = delta = eps^{ab}. Symplectic: eps_{ab} = J with
// J(i, i+m) = 1, J(i+m, i) = -1, and eps^{ab} = -J (the inverse).
Metric make_metric(AlgebraKind kind, int n);

} // namespace yev
