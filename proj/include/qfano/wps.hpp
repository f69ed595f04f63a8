#pragma once

#include <array>
#include <string>
#include <vector>

namespace qfano {

struct WeightSystem {
    std::vector<int> weights;

    int size() const { return static_cast<int>(weights.size()); }
    bool well_formed() const;
};

// 1/r(a0,a1,a2) with the weights reduced mod r.
struct QuotientSing {
    int r = 1;
    std::array<int, 3> a{0, 0, 0};

    std::string str() const;
    friend bool operator==(const QuotientSing&, const QuotientSing&) = default;
    friend auto operator<=>(const QuotientSing&, const QuotientSing&) = default;
};

struct NormalizedSing {
    QuotientSing type;  // canonical representative
    bool terminal = false;
    int unit = 1;       // u with u*(input) a permutation of the canonical weights
};

// Canonical form under permutations and multiplication by units mod r.
// Terminal types come out as 1/r(1,a,r-a) with 1 <= a <= r/2.
NormalizedSing normalize(const QuotientSing& q);
bool equivalent(const QuotientSing& a, const QuotientSing& b);
QuotientSing make_sing(int r, int a0, int a1, int a2);

struct Stratum {
    std::vector<int> coords;  // coordinate indices
    int r = 1;                // gcd of their weights
};

// Every proper coordinate subset whose weights share a factor > 1.
std::vector<Stratum> singular_strata(const WeightSystem& w);

struct IsolationNumbers {
    int a_tilde = 0;
    std::vector<int> a_j;                 // per j
    std::vector<std::vector<int>> a_jm;   // [j][m], 0 on the diagonal
    std::vector<int> b_m;                 // per m
};

IsolationNumbers isolation_numbers(const WeightSystem& w);

}  // namespace qfano
