#pragma once

#include "qfano/family.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qfano {

struct Extraction {
    enum class Kind { Kawamata, CAn, CD3 } kind = Kind::CAn;
    QuotientSing point;           // Kawamata
    int r1 = 0, r2 = 0;           // CAn
    std::vector<int> cd_weights;  // CD3, on the X' coordinates 0..3

    static Extraction kawamata(const QuotientSing& q);
    static Extraction can(int r1, int r2);
    static Extraction cd3(std::vector<int> weights);
    std::string str() const;
    friend bool operator==(const Extraction&, const Extraction&) = default;
};

std::vector<Extraction> enumerate_extractions(const FamilyRecord& rec);

// The extraction a catalog mark refers to.
Extraction extraction_of(const FamilyRecord& rec, const ExtractionMark& mark);

// E = (g = 0) in P(b). The model ring reuses the X' coordinate names of the
// germ coordinates; `coords[k]` is the X' index of model coordinate k.
struct ExcDivisorModel {
    Extraction ext;
    int n = 1;
    std::vector<int> b;
    std::vector<int> coords;
    RingPtr ring;
    QPoly g;         // lowest-weight part
    QPoly h;         // part of weight order + n
    long order = 0;  // lowest weight in b units
    Rational mu;     // order / n

    Rational discrepancy() const;  // sum(b)/n - 1 - mu
};

// Splitting-lemma normal form of G = F'(w = 1) at the cA/n point: returns R
// with G ~ x2 x3 + R after coordinate changes of the germ coordinates,
// truncated above degree d. R only involves the two non-germ coordinates.
QPoly germ_normal_form(const StandardHypersurface& member);

ExcDivisorModel exceptional_model(const StandardHypersurface& member, const Extraction& ext);

// Cone points of E where dg and h all vanish.
ConeScan jphi_rank_scan(const ExcDivisorModel& model, std::uint32_t p);

struct ChartPoint {
    QuotientSing type;  // normalized
    int count = 1;
    bool terminal = false;
    std::string where;
};

struct ChartSingularities {
    std::vector<ChartPoint> points;  // merged by type, sorted
    std::vector<std::string> findings;
};

ChartSingularities chart_singularities(const ExcDivisorModel& model);

struct KawamataNumbers {
    Rational discrepancy;
    Rational e3;
};

// Throws std::invalid_argument for non-terminal types.
KawamataNumbers kawamata_numbers(const QuotientSing& q);

// Quotient point of X reached by a link extraction: the singularity of the
// WCI counterpart at the vertex matching the extraction.
VertexStatus link_target(const StandardHypersurface& member, const Extraction& ext);

}  // namespace qfano
