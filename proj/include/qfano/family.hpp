#pragma once

#include "qfano/poly.hpp"
#include "qfano/wps.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qfano {

struct CatalogError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Kind { cA, cD };
enum class ExtMark { None, BI, Link };

// "monomial must be present in part", optionally waived when `unless` is present.
struct RequiredMonomial {
    std::string part;
    std::string monomial;
    std::string unless;
};

struct Exclusion {
    std::vector<std::string> polys;     // primed names denote tangent sections
    std::map<std::string, int> orders;  // explicit vanishing-order numerators
    int b = 0, e = 0;                   // catalog divisor bB + eE
};

struct QuotientMark {
    std::vector<std::string> locus;  // one name: vertex; two: coordinate line
    QuotientSing type;
    int count = 1;
    std::string b3;  // "", "<0", "=0", ">0"
    std::optional<Exclusion> exclusion;
    std::string involution;  // "", "Q.I.", "E.I."
    std::string note;
};

struct ExtractionMark {
    std::optional<std::pair<int, int>> pair;  // cA/n
    std::map<std::string, int> cd_weights;    // cD/3
    ExtMark mark = ExtMark::None;
    QuotientSing target;  // catalog link target
};

// F' = sum of w^w * mult * part
struct EquationTerm {
    int w = 0;
    std::string mult;  // monomial text, "" for 1
    std::string part;  // "" for 1
};

struct Table3Point {
    QuotientSing type;
    int count = 1;
    std::optional<RequiredMonomial> condition;  // monomial in part
    bool present = true;                        // condition reads "present" or "absent"
};

struct Table3Row {
    std::pair<int, int> pair;
    std::vector<Table3Point> points;
};

struct IsolationSpec {
    std::string strategy;  // "global", "b_m", "special"
    std::string m;
    int bound = 0;
    bool listed = true;
};

struct FamilyRecord {
    int id = 0;
    Kind kind = Kind::cA;
    std::vector<std::string> names;
    std::vector<int> weights;
    int degree = 0;
    int index = 0;
    Rational A3;
    std::vector<std::string> germ;
    std::pair<int, int> germ_pair{0, 0};
    std::string slot;
    std::vector<EquationTerm> equation;
    std::vector<RequiredMonomial> required;
    std::vector<QuotientMark> quotient_points;
    std::vector<ExtractionMark> extractions;
    std::vector<int> wci_weights;
    std::vector<int> wci_degrees;
    std::optional<std::pair<int, int>> table1;
    std::vector<std::vector<int>> table2;
    std::vector<Table3Row> table3;
    IsolationSpec isolation;
    std::vector<Rational> low_degree_curves;

    // derived at load
    RingPtr ring;      // X' coordinates, w last
    RingPtr wci_ring;  // X coordinates: the four non-w ones, then s and t/u
    int w = 4;
    int slot_index = -1;         // in ring
    std::vector<int> germ_index; // in ring
    std::vector<int> h_coords;   // non-germ, non-w coordinates ordered by weight
    std::map<std::string, int> part_degree;

    std::string kind_str() const { return kind == Kind::cA ? "cA/" + std::to_string(index) : "cD/3"; }
    // coordinates of a catalog locus, in ring
    std::vector<int> locus_indices(const std::vector<std::string>& locus) const;
};

using Catalog = std::vector<FamilyRecord>;

Catalog load_catalog_text(std::string_view json_text);
Catalog load_catalog_file(const std::string& path);
const Catalog& builtin_catalog();
const FamilyRecord& find_family(const Catalog& cat, int id);  // throws std::out_of_range

Rational anticanonical_degree(const std::vector<int>& weights, const std::vector<int>& degrees);

struct StandardHypersurface {
    const FamilyRecord* family = nullptr;
    std::map<std::string, QPoly> parts;
    QPoly F;  // assembled F'
};

struct WciMember {
    const FamilyRecord* family = nullptr;
    QPoly F1, F2;  // in family->wci_ring
};

struct MemberOptions {
    std::uint32_t prime = 0;  // 0: coefficients in {-3..3}\{0}; else nonzero residues
    std::vector<RequiredMonomial> drop;  // monomials forced to zero
};

// All monomials of weighted degree deg in the given coordinates.
std::vector<Monomial> monomial_basis(const Ring& ring, const std::vector<int>& coords, long deg);

QPoly assemble(const FamilyRecord& rec, const std::map<std::string, QPoly>& parts);
StandardHypersurface random_member(const FamilyRecord& rec, std::uint64_t seed, const MemberOptions& opt = {});
StandardHypersurface member_from_poly(const FamilyRecord& rec, QPoly F);

WciMember counterpart_to_wci(const StandardHypersurface& x);
QPoly wci_to_counterpart(const WciMember& x);  // throws std::invalid_argument on shape errors

// Checks every required monomial of the catalog against the member.
std::vector<std::string> missing_required(const StandardHypersurface& x);

// ---- F_p scans of affine cones ----

struct ConeScan {
    std::vector<std::vector<std::uint32_t>> points;  // singular cone points, sorted
    std::uint64_t visited = 0;
};

// Points of the cone (eqs = 0) where the Jacobian has rank < eqs.size().
// Points whose support lies inside `ignore` are skipped. Enumerates one
// representative set per weighted C*-orbit.
ConeScan scan_cone(const std::vector<FpPoly>& eqs, const std::vector<int>& weights, std::uint32_t p,
                   const std::vector<int>& ignore = {});

// Points of the cone where every polynomial vanishes.
ConeScan scan_zeros(const std::vector<FpPoly>& polys, const std::vector<int>& weights, std::uint32_t p);

ConeScan quasismooth_scan(const StandardHypersurface& x, std::uint32_t p);
ConeScan quasismooth_scan(const WciMember& x, std::uint32_t p);

// ---- singularity classification ----

struct VertexStatus {
    enum class Kind { NotOnX, Quotient, NonQuotient, NotQuasismooth } kind = Kind::NotOnX;
    QuotientSing type;           // normalized
    bool terminal = false;
    std::vector<int> tangents;   // j with x_i^e x_j in the equation
    std::vector<int> exponents;  // matching e
};

VertexStatus vertex_singularity(const StandardHypersurface& x, int i);
VertexStatus hypersurface_vertex(const QPoly& F, int i, int distinguished = -1);
VertexStatus wci_vertex(const QPoly& F1, const QPoly& F2, int i);

struct StratumPoints {
    bool contained = false;
    int off_vertex = 0;  // with multiplicity
    int distinct = 0;
    int mult_first = 0;  // order of the form along x_first = 0
    int mult_second = 0;
    QuotientSing type;
    bool terminal = false;
};

StratumPoints stratum_singular_points(const QPoly& F, int i, int l);

}  // namespace qfano
