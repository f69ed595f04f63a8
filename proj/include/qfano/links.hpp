#pragma once

#include "qfano/family.hpp"

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qfano {

// F' does not have the shape an identity check expects.
struct StructuralError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class MidpointSide { First, Mirror };  // (e+n, e') and (e, e'+n)

struct MidpointVariety {
    RingPtr ring;  // non-w coordinates of X', then "s"
    QPoly Z;
    long degree = 0;
};

// First side: s(s x3 + f) + x2 g; mirror: s(s x2 + f) + x3 g, with x2, x3 the
// germ coordinates.
MidpointVariety midpoint(const StandardHypersurface& member, MidpointSide side);

struct IdentityResult {
    std::string name;
    bool holds = false;
    std::string note;
};

// F' = w^2 x2 x3 + w(x3 a + b) + x3^2 + x3 c + d after rescaling.
struct InvolutionCheck {
    bool proportional = false;  // mu(F') = lambda F'
    Rational lambda;
    bool involutive = false;  // mu o mu = id on x3
};

InvolutionCheck verify_involution_mu(const StandardHypersurface& member);

struct NuCheck {
    bool hypersurface = false;   // reference F~' matches the expansion
    bool involutive = false;
    bool wci_shape = false;      // reference F1, F2 equal the constructed counterpart
    bool wci_stated = false;    // x5 -> x5 + c reproduces the reference F~1, F~2
    bool wci_corrected = false;  // x5 -> x5 - c does
};

NuCheck verify_involution_nu(const StandardHypersurface& member);

enum class LadderShape { Standard, G33, G18 };

struct SectionLadder {
    LadderShape shape = LadderShape::Standard;
    QPoly F;                            // normalized F'
    std::map<std::string, QPoly> coef;  // a, b, c, ... of the decomposition
    QPoly u, v;
    std::vector<IdentityResult> identities;
    int X = -1, Y = -1;  // ladder coordinates (Standard)
};

// Families 10, 26, 48 (X the first germ coordinate) and 38, 63 (X the second).
SectionLadder build_ladder(const StandardHypersurface& member);

struct DetMCheck {
    bool divisible = false;
    int v_degree = -1;
    bool ok() const { return divisible && v_degree == 2; }
};

// corrupt != 0 perturbs entry M[0][1] by the X coordinate, for plant tests.
DetMCheck verify_detM(const SectionLadder& ladder, bool corrupt = false);

// corrupt_a9 adds x0^9 to a9 inside the w F' relation only.
SectionLadder build_ladder_g33(const StandardHypersurface& member, bool corrupt_a9 = false);

// Family 18 member in the form yz^2 + a5 z - w y^3 - b4 y^2 - c6 y + d8.
StandardHypersurface g18_member(const FamilyRecord& rec, std::uint64_t seed);

struct G18Result {
    std::vector<IdentityResult> variants;  // stated form first
    const IdentityResult* holding() const;
};

// flip_v negates the a5 b4 term of v, for plant tests.
G18Result verify_g18_model(const StandardHypersurface& member, bool flip_v = false);

}  // namespace qfano
