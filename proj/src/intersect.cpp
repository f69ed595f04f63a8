#include "qfano/intersect.hpp"

#include <algorithm>
#include <stdexcept>

namespace qfano {

Rational weighted_blowup_e3(int n, const std::vector<int>& b, const Rational& mu) {
    if (mu.sign() <= 0) throw std::invalid_argument("weighted_blowup_e3: mu must be positive");
    if (b.size() != 4) throw std::invalid_argument("weighted_blowup_e3: four weights expected");
    long prod = 1;
    for (int x : b) {
        if (x <= 0) throw std::invalid_argument("weighted_blowup_e3: weights must be positive");
        prod *= x;
    }
    return mu * Rational(static_cast<long>(n) * n * n, prod);
}

BlowupNumerics kawamata_blowup(const Rational& A3, const QuotientSing& q) {
    auto k = kawamata_numbers(q);
    return {A3, k.discrepancy, k.e3};
}

BlowupNumerics extraction_numerics(const Rational& A3, const ExcDivisorModel& model) {
    return {A3, model.discrepancy(), weighted_blowup_e3(model.n, model.b, model.mu)};
}

Rational b_cubed(const BlowupNumerics& num) { return num.A3 - pow(num.c, 3) * num.E3; }

DivisorClass proper_transform_class(long b, long c, long r) {
    if (r <= 0) throw std::invalid_argument("proper_transform_class: index must be positive");
    Rational e(b - c, r);
    if (e.sign() < 0)
        throw std::invalid_argument("proper_transform_class: vanishing order " + std::to_string(c) + "/" +
                                    std::to_string(r) + " exceeds the degree " + std::to_string(b));
    return {Rational(b), e};
}

NefExclusion nef_exclusion_value(const DivisorClass& N, const BlowupNumerics& num, int r) {
    // (bB + eE) B^2 with B = A - cE and A E^2 = 0
    NefExclusion out;
    out.value = N.b * b_cubed(num) + N.e * num.c * num.c * num.E3;
    out.slope = N.b > Rational(r) * N.e;
    return out;
}

FlopCheck flop_invariance_check(const FamilyRecord& rec, const ExcDivisorModel& model, const QuotientSing& target) {
    FlopCheck out;
    out.lhs = b_cubed(extraction_numerics(anticanonical_degree(rec.weights, {rec.degree}), model));
    auto k = kawamata_numbers(target);
    const Rational AX = anticanonical_degree(rec.wci_weights, rec.wci_degrees);
    out.rhs = AX - pow(k.discrepancy, 3) * k.e3;
    out.equal = out.lhs == out.rhs;
    return out;
}

std::string definiteness_str(Definiteness d) {
    switch (d) {
        case Definiteness::NegativeDefinite: return "negative-definite";
        case Definiteness::NegativeSemidefinite: return "negative-semidefinite";
        case Definiteness::Nondegenerate: return "nondegenerate";
        case Definiteness::Degenerate: return "degenerate";
    }
    return {};
}

Definiteness neg_definite_2x2(const std::array<std::array<Rational, 2>, 2>& m) {
    if (m[0][1] != m[1][0]) throw std::invalid_argument("neg_definite_2x2: matrix is not symmetric");
    const Rational det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    if (det.is_zero()) {
        if (m[0][0].sign() < 0 || m[1][1].sign() < 0) return Definiteness::NegativeSemidefinite;
        return Definiteness::Degenerate;
    }
    if (m[0][0].sign() < 0 && det.sign() > 0) return Definiteness::NegativeDefinite;
    return Definiteness::Nondegenerate;
}

Rational dual_graph_selfint(const DualGraph& g, const Rational& k_dot_gamma) {
    if (g.n < 1 || g.k < 1 || g.k > g.n) throw std::invalid_argument("dual graph needs 1 <= k <= n");
    return Rational(-2) - k_dot_gamma + Rational(static_cast<long>(g.k) * (g.n - g.k + 1), g.n + 1);
}

Rational dual_graph_oracle(const DualGraph& g) {
    if (g.n < 1 || g.k < 1 || g.k > g.n) throw std::invalid_argument("dual graph needs 1 <= k <= n");
    const auto n = static_cast<std::size_t>(g.n);
    // Thomas algorithm on the tridiagonal Cartan system
    std::vector<Rational> diag(n, Rational(-2)), rhs(n, Rational(0));
    rhs[static_cast<std::size_t>(g.k - 1)] = Rational(-1);
    for (std::size_t i = 1; i < n; ++i) {
        if (diag[i - 1].is_zero()) throw std::logic_error("dual_graph_oracle: singular system");
        Rational f = Rational(1) / diag[i - 1];
        diag[i] -= f;
        rhs[i] -= f * rhs[i - 1];
    }
    std::vector<Rational> a(n);
    for (std::size_t i = n; i-- > 0;) {
        if (diag[i].is_zero()) throw std::logic_error("dual_graph_oracle: singular system");
        Rational r = rhs[i];
        if (i + 1 < n) r -= a[i + 1];
        a[i] = r / diag[i];
    }
    return a[static_cast<std::size_t>(g.k - 1)];
}

std::vector<Rational> low_degree_curves(const FamilyRecord& rec) {
    const Rational A3 = anticanonical_degree(rec.weights, {rec.degree});
    std::vector<Rational> out;
    for (long m = 1;; ++m) {
        Rational q(m, rec.index);
        if (q >= A3) break;
        out.push_back(q);
    }
    return out;
}

IsolationResult isolation_check(const FamilyRecord& rec) {
    IsolationResult out;
    out.strategy = rec.isolation.strategy;
    out.threshold = Rational(4) / anticanonical_degree(rec.weights, {rec.degree});
    auto nums = isolation_numbers(WeightSystem{rec.weights});
    if (out.strategy == "global") {
        out.bound = Rational(nums.a_tilde);
        out.pass = out.bound <= out.threshold;
    } else if (out.strategy == "b_m") {
        const int m = rec.ring->at(rec.isolation.m);
        out.bound = Rational(nums.b_m[static_cast<std::size_t>(m)]);
        const bool divides = rec.degree % rec.weights[static_cast<std::size_t>(m)] == 0;
        out.pass = divides && out.bound <= out.threshold;
        if (!divides) out.note = "weight of " + rec.isolation.m + " does not divide the degree";
    } else if (out.strategy == "special") {
        out.bound = Rational(rec.isolation.bound);
        out.pass = out.bound < out.threshold;
        out.note = "special argument; only the stated sub-inequality is checked";
    } else {
        out.note = "unknown strategy";
    }
    return out;
}

}  // namespace qfano
