#pragma once

#include "qfano/blowup.hpp"
#include "qfano/family.hpp"

#include <array>
#include <string>
#include <vector>

namespace qfano {

// A^3 of the base, discrepancy c and E^3 of one extraction.
struct BlowupNumerics {
    Rational A3;
    Rational c;
    Rational E3;
};

// bB + eE
struct DivisorClass {
    Rational b, e;
    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

struct DualGraph {
    int n = 1;
    int k = 1;
};

// mu n^3 / (b1 b2 b3 b4); mu is the weighted order in 1/n units.
Rational weighted_blowup_e3(int n, const std::vector<int>& b, const Rational& mu);

BlowupNumerics kawamata_blowup(const Rational& A3, const QuotientSing& q);
BlowupNumerics extraction_numerics(const Rational& A3, const ExcDivisorModel& model);

// A^3 - c^3 E^3
Rational b_cubed(const BlowupNumerics& num);

// Section of degree b vanishing to order c/r along E. Throws when e < 0.
DivisorClass proper_transform_class(long b, long c, long r);

struct NefExclusion {
    Rational value;  // (N . B^2)
    bool slope = false;  // b > r e
};

NefExclusion nef_exclusion_value(const DivisorClass& N, const BlowupNumerics& num, int r);

struct FlopCheck {
    Rational lhs, rhs;
    bool equal = false;
};

// lhs: A^3(X') - c^3 E^3 of the extraction; rhs: A^3(X) minus the Kawamata
// drop 1/(r a (r-a)) at the target point.
FlopCheck flop_invariance_check(const FamilyRecord& rec, const ExcDivisorModel& model, const QuotientSing& target);

enum class Definiteness { NegativeDefinite, NegativeSemidefinite, Nondegenerate, Degenerate };
std::string definiteness_str(Definiteness d);

Definiteness neg_definite_2x2(const std::array<std::array<Rational, 2>, 2>& m);

Rational dual_graph_selfint(const DualGraph& g, const Rational& k_dot_gamma);
// Coefficient of the k-th exceptional curve, from the A_n Cartan system.
Rational dual_graph_oracle(const DualGraph& g);

// {m/n : m >= 1, m/n < A^3}
std::vector<Rational> low_degree_curves(const FamilyRecord& rec);

struct IsolationResult {
    std::string strategy;
    Rational bound;
    Rational threshold;  // 4 / A^3
    bool pass = false;
    std::string note;
};

IsolationResult isolation_check(const FamilyRecord& rec);

}  // namespace qfano
