#include "qfano/family.hpp"

#include "qfano/univariate.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

namespace qfano {

extern const char* const kBuiltinCatalogJson;

namespace {

using nlohmann::json;

struct Ctx {
    int id;
    [[noreturn]] void fail(const std::string& field, const std::string& what) const {
        throw CatalogError("family " + std::to_string(id) + ": field '" + field + "': " + what);
    }
};

const json& need(const json& j, const char* key, const Ctx& c) {
    if (!j.contains(key)) c.fail(key, "missing");
    return j.at(key);
}

int as_int(const json& j, const std::string& field, const Ctx& c) {
    if (!j.is_number_integer()) c.fail(field, "expected integer");
    return j.get<int>();
}

std::vector<int> int_list(const json& j, const std::string& field, const Ctx& c) {
    if (!j.is_array()) c.fail(field, "expected array");
    std::vector<int> v;
    for (const auto& x : j) v.push_back(as_int(x, field, c));
    return v;
}

std::vector<std::string> str_list(const json& j, const std::string& field, const Ctx& c) {
    if (!j.is_array()) c.fail(field, "expected array");
    std::vector<std::string> v;
    for (const auto& x : j) {
        if (!x.is_string()) c.fail(field, "expected strings");
        v.push_back(x.get<std::string>());
    }
    return v;
}

Rational as_rational(const json& j, const std::string& field, const Ctx& c) {
    if (!j.is_string()) c.fail(field, "expected \"p/q\" string");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::exception&) {
        c.fail(field, "malformed rational '" + j.get<std::string>() + "'");
    }
}

QuotientSing as_sing(const json& j, const std::string& field, const Ctx& c) {
    int r = as_int(need(j, "r", c), field + ".r", c);
    auto t = int_list(need(j, "type", c), field + ".type", c);
    if (t.size() != 3 || r < 1) c.fail(field, "expected r and three weights");
    return make_sing(r, t[0], t[1], t[2]);
}

RequiredMonomial as_required(const json& j, const std::string& field, const Ctx& c) {
    RequiredMonomial m;
    m.part = need(j, "part", c).get<std::string>();
    m.monomial = need(j, "monomial", c).get<std::string>();
    if (j.contains("unless")) m.unless = j.at("unless").get<std::string>();
    (void)field;
    return m;
}

std::pair<int, int> as_pair(const json& j, const std::string& field, const Ctx& c) {
    auto v = int_list(j, field, c);
    if (v.size() != 2) c.fail(field, "expected a pair");
    return {v[0], v[1]};
}

void derive(FamilyRecord& f, const Ctx& c) {
    if (f.names.size() != 5 || f.weights.size() != 5) c.fail("weights", "expected five coordinates");
    for (int a : f.weights)
        if (a <= 0) c.fail("weights", "weights must be positive");
    if (!WeightSystem{f.weights}.well_formed()) c.fail("weights", "not well formed");
    if (f.weights[4] != f.index) c.fail("index", "must equal the weight of the last coordinate");
    int sum = std::accumulate(f.weights.begin(), f.weights.end(), 0);
    if (f.degree != sum - 1) c.fail("degree", "expected sum of weights minus one");
    f.ring = make_ring(f.names, f.weights);
    f.w = 4;

    const int n = f.index, d = f.degree;
    if (f.kind == Kind::cA) {
        if (f.germ.size() != 2) c.fail("germ", "expected two coordinates");
        for (const auto& g : f.germ) {
            int i = f.ring->index(g);
            if (i < 0 || i == f.w) c.fail("germ", "unknown coordinate " + g);
            f.germ_index.push_back(i);
        }
        if (f.weights[f.germ_index[0]] != f.germ_pair.first || f.weights[f.germ_index[1]] != f.germ_pair.second)
            c.fail("germ_pair", "does not match the germ coordinate weights");
        if (f.germ_pair.first + f.germ_pair.second != d - 2 * n) c.fail("germ_pair", "e + e' != d - 2n");
        if (n > 1 && (f.germ_pair.first + f.germ_pair.second) % n != 0) c.fail("germ_pair", "e + e' not divisible by n");
        if (f.slot.empty()) f.slot = f.germ[0];
        if (f.equation.empty())
            f.equation = {{2, f.germ[0] + "*" + f.germ[1], ""}, {1, "", "f"}, {0, "", "g"}};
    }
    f.slot_index = f.ring->index(f.slot);
    if (f.slot_index < 0 || f.slot_index == f.w) c.fail("slot", "unknown coordinate");
    if (f.equation.empty()) c.fail("equation", "missing");

    for (int i = 0; i < 4; ++i)
        if (std::find(f.germ_index.begin(), f.germ_index.end(), i) == f.germ_index.end()) f.h_coords.push_back(i);
    std::stable_sort(f.h_coords.begin(), f.h_coords.end(),
                     [&](int a, int b) { return f.weights[a] < f.weights[b]; });

    bool has_w0 = false;
    for (const auto& t : f.equation) {
        long md = 0;
        if (!t.mult.empty()) {
            Monomial m = f.ring->parse_monomial(t.mult);
            if (m[f.w]) c.fail("equation", "multiplier must not involve w");
            md = f.ring->degree(m);
        }
        long pd = d - static_cast<long>(t.w) * n - md;
        if (pd < 0) c.fail("equation", "negative part degree");
        if (t.part.empty()) {
            if (pd != 0) c.fail("equation", "term without part must have degree d");
        } else {
            f.part_degree[t.part] = static_cast<int>(pd);
        }
        if (t.w == 0) has_w0 = true;
        if (t.w >= 2 && !t.mult.empty()) {
            Monomial m = f.ring->parse_monomial(t.mult);
            if (m[f.slot_index] < t.w - 1) c.fail("equation", "w-power terms must carry slot^(k-1)");
        }
    }
    if (!has_w0) c.fail("equation", "missing the w-free part");
    for (const auto& r : f.required) {
        auto it = f.part_degree.find(r.part);
        if (it == f.part_degree.end()) c.fail("required", "unknown part " + r.part);
        for (const auto* txt : {&r.monomial, &r.unless}) {
            if (txt->empty()) continue;
            Monomial m = f.ring->parse_monomial(*txt);
            if (f.ring->degree(m) != it->second || m[f.w]) c.fail("required", "monomial " + *txt + " has the wrong degree");
        }
    }

    // X coordinates
    std::vector<std::string> xn(f.names.begin(), f.names.begin() + 4);
    std::vector<int> xw(f.weights.begin(), f.weights.begin() + 4);
    const bool t_taken = std::find(xn.begin(), xn.end(), "t") != xn.end();
    xn.push_back("s");
    xn.push_back(f.kind == Kind::cD || t_taken ? "u" : "t");
    const int as = f.weights[f.slot_index];
    xw.push_back(n + as);
    xw.push_back(d - n - as);
    f.wci_ring = make_ring(xn, xw);
    auto sorted = xw;
    std::sort(sorted.begin(), sorted.end());
    auto cat = f.wci_weights;
    std::sort(cat.begin(), cat.end());
    if (sorted != cat) c.fail("wci.weights", "do not match the counterpart ambient");
    if (f.wci_degrees.size() != 2) c.fail("wci.degrees", "expected two degrees");
    int wsum = std::accumulate(f.wci_weights.begin(), f.wci_weights.end(), 0);
    if (f.wci_degrees[0] + f.wci_degrees[1] != wsum - 1) c.fail("wci.degrees", "d1 + d2 != sum of weights - 1");
    if (f.wci_degrees[0] != d - n || f.wci_degrees[1] != d) c.fail("wci.degrees", "expected (d-n, d)");

    for (const auto& q : f.quotient_points) {
        if (q.locus.empty() || q.locus.size() > 2) c.fail("quotient_points.locus", "expected one or two coordinates");
        for (const auto& nm : q.locus)
            if (f.ring->index(nm) < 0) c.fail("quotient_points.locus", "unknown coordinate " + nm);
    }
    for (const auto& e : f.extractions) {
        if (f.kind == Kind::cA && !e.pair) c.fail("extractions", "cA/n extraction needs a pair");
        if (f.kind == Kind::cD && e.cd_weights.size() != 4) c.fail("extractions", "cD/3 extraction needs four weights");
    }
    if (f.isolation.strategy != "global" && f.isolation.strategy != "b_m" && f.isolation.strategy != "special")
        c.fail("isolation.strategy", "unknown strategy");
    if (f.isolation.strategy == "b_m" && f.ring->index(f.isolation.m) < 0) c.fail("isolation.m", "unknown coordinate");
}

FamilyRecord parse_family(const json& j) {
    Ctx c{j.contains("id") && j["id"].is_number_integer() ? j["id"].get<int>() : -1};
    FamilyRecord f;
    f.id = as_int(need(j, "id", c), "id", c);
    std::string kind = need(j, "kind", c).get<std::string>();
    if (kind == "cA") f.kind = Kind::cA;
    else if (kind == "cD") f.kind = Kind::cD;
    else c.fail("kind", "expected cA or cD");
    f.names = str_list(need(j, "names", c), "names", c);
    f.weights = int_list(need(j, "weights", c), "weights", c);
    f.degree = as_int(need(j, "degree", c), "degree", c);
    f.index = as_int(need(j, "index", c), "index", c);
    f.A3 = as_rational(need(j, "A3", c), "A3", c);
    if (f.kind == Kind::cA) {
        f.germ = str_list(need(j, "germ", c), "germ", c);
        f.germ_pair = as_pair(need(j, "germ_pair", c), "germ_pair", c);
    }
    if (j.contains("slot")) f.slot = j["slot"].get<std::string>();
    if (j.contains("equation"))
        for (const auto& t : j["equation"]) {
            EquationTerm e;
            e.w = as_int(need(t, "w", c), "equation.w", c);
            if (t.contains("mult")) e.mult = t["mult"].get<std::string>();
            if (t.contains("part")) e.part = t["part"].get<std::string>();
            f.equation.push_back(e);
        }
    if (j.contains("required"))
        for (const auto& r : j["required"]) f.required.push_back(as_required(r, "required", c));
    for (const auto& q : need(j, "quotient_points", c)) {
        QuotientMark m;
        m.locus = str_list(need(q, "locus", c), "quotient_points.locus", c);
        m.type = as_sing(q, "quotient_points", c);
        if (q.contains("count")) m.count = as_int(q["count"], "quotient_points.count", c);
        if (q.contains("b3")) {
            m.b3 = q["b3"].get<std::string>();
            if (m.b3 != "<0" && m.b3 != "=0" && m.b3 != ">0") c.fail("quotient_points.b3", "expected <0, =0 or >0");
        }
        if (q.contains("involution")) m.involution = q["involution"].get<std::string>();
        if (q.contains("note")) m.note = q["note"].get<std::string>();
        if (q.contains("exclusion")) {
            const auto& x = q["exclusion"];
            Exclusion e;
            e.polys = str_list(need(x, "polys", c), "exclusion.polys", c);
            if (x.contains("orders"))
                for (auto it = x["orders"].begin(); it != x["orders"].end(); ++it)
                    e.orders[it.key()] = as_int(it.value(), "exclusion.orders", c);
            auto dv = as_pair(need(x, "divisor", c), "exclusion.divisor", c);
            e.b = dv.first;
            e.e = dv.second;
            m.exclusion = e;
        }
        f.quotient_points.push_back(m);
    }
    for (const auto& x : need(j, "extractions", c)) {
        ExtractionMark e;
        if (x.contains("pair")) e.pair = as_pair(x["pair"], "extractions.pair", c);
        if (x.contains("weights"))
            for (auto it = x["weights"].begin(); it != x["weights"].end(); ++it)
                e.cd_weights[it.key()] = as_int(it.value(), "extractions.weights", c);
        const auto& mk = need(x, "mark", c);
        if (mk.is_string()) {
            auto s = mk.get<std::string>();
            if (s == "none") e.mark = ExtMark::None;
            else if (s == "B.I.") e.mark = ExtMark::BI;
            else c.fail("extractions.mark", "unknown mark " + s);
        } else {
            e.mark = ExtMark::Link;
            e.target = as_sing(need(mk, "link", c), "extractions.mark.link", c);
        }
        f.extractions.push_back(e);
    }
    const auto& w = need(j, "wci", c);
    f.wci_weights = int_list(need(w, "weights", c), "wci.weights", c);
    f.wci_degrees = int_list(need(w, "degrees", c), "wci.degrees", c);
    if (j.contains("table1") && !j["table1"].is_null()) f.table1 = as_pair(j["table1"], "table1", c);
    if (j.contains("table2"))
        for (const auto& t : j["table2"]) f.table2.push_back(int_list(t, "table2", c));
    if (j.contains("table3"))
        for (const auto& t : j["table3"]) {
            Table3Row row;
            row.pair = as_pair(need(t, "pair", c), "table3.pair", c);
            for (const auto& p : need(t, "points", c)) {
                Table3Point pt;
                pt.type = as_sing(p, "table3.points", c);
                if (p.contains("count")) pt.count = as_int(p["count"], "table3.count", c);
                if (p.contains("condition")) {
                    pt.condition = as_required(p["condition"], "table3.condition", c);
                    pt.present = p["condition"].value("present", true);
                }
                row.points.push_back(pt);
            }
            f.table3.push_back(row);
        }
    const auto& iso = need(j, "isolation", c);
    f.isolation.strategy = need(iso, "strategy", c).get<std::string>();
    f.isolation.m = iso.value("m", std::string{});
    f.isolation.bound = iso.value("bound", 0);
    f.isolation.listed = iso.value("listed", true);
    for (const auto& q : need(j, "low_degree_curves", c))
        f.low_degree_curves.push_back(as_rational(q, "low_degree_curves", c));
    try {
        derive(f, c);
    } catch (const CatalogError&) {
        throw;
    } catch (const std::exception& ex) {
        c.fail("equation", ex.what());
    }
    return f;
}

std::vector<int> other_coords(int size, const std::vector<int>& exclude) {
    std::vector<int> v;
    for (int i = 0; i < size; ++i)
        if (std::find(exclude.begin(), exclude.end(), i) == exclude.end()) v.push_back(i);
    return v;
}

QuotientSing residues(const Ring& ring, const std::vector<int>& coords, int r) {
    if (coords.size() != 3) return QuotientSing{r, {0, 0, 0}};
    return make_sing(r, ring.weight(coords[0]), ring.weight(coords[1]), ring.weight(coords[2]));
}

}  // namespace

std::vector<int> FamilyRecord::locus_indices(const std::vector<std::string>& locus) const {
    std::vector<int> v;
    for (const auto& n : locus) v.push_back(ring->at(n));
    std::sort(v.begin(), v.end());
    return v;
}

Catalog load_catalog_text(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw CatalogError(std::string("catalog is not valid JSON: ") + e.what());
    }
    if (!j.contains("families") || !j["families"].is_array()) throw CatalogError("catalog: missing 'families' array");
    Catalog cat;
    try {
        for (const auto& f : j["families"]) cat.push_back(parse_family(f));
    } catch (const json::exception& e) {
        throw CatalogError(std::string("catalog: ") + e.what());
    }
    std::vector<int> ids;
    for (const auto& f : cat) ids.push_back(f.id);
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) throw CatalogError("catalog: duplicate family id");
    return cat;
}

Catalog load_catalog_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CatalogError("cannot open catalog " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return load_catalog_text(ss.str());
}

const Catalog& builtin_catalog() {
    static const Catalog cat = load_catalog_text(kBuiltinCatalogJson);
    return cat;
}

const FamilyRecord& find_family(const Catalog& cat, int id) {
    for (const auto& f : cat)
        if (f.id == id) return f;
    throw std::out_of_range("no family " + std::to_string(id) + " in catalog");
}

Rational anticanonical_degree(const std::vector<int>& weights, const std::vector<int>& degrees) {
    Rational r(1);
    for (int d : degrees) r *= Rational(d);
    for (int a : weights) r /= Rational(a);
    return r;
}

std::vector<Monomial> monomial_basis(const Ring& ring, const std::vector<int>& coords, long deg) {
    std::vector<Monomial> out;
    Monomial m;
    auto rec = [&](auto&& self, std::size_t k, long left) -> void {
        if (k + 1 == coords.size()) {
            int a = ring.weight(coords[k]);
            if (left % a == 0) {
                m[coords[k]] = static_cast<std::uint16_t>(left / a);
                out.push_back(m);
                m[coords[k]] = 0;
            }
            return;
        }
        int a = ring.weight(coords[k]);
        for (long e = 0; e * a <= left; ++e) {
            m[coords[k]] = static_cast<std::uint16_t>(e);
            self(self, k + 1, left - e * a);
        }
        m[coords[k]] = 0;
    };
    if (deg < 0) return out;
    if (coords.empty()) {
        if (deg == 0) out.push_back(m);
        return out;
    }
    rec(rec, 0, deg);
    std::sort(out.begin(), out.end());
    return out;
}

QPoly assemble(const FamilyRecord& rec, const std::map<std::string, QPoly>& parts) {
    const auto& R = rec.ring;
    QPoly F(R);
    for (const auto& t : rec.equation) {
        Monomial m;
        if (!t.mult.empty()) m = R->parse_monomial(t.mult);
        m[rec.w] = static_cast<std::uint16_t>(t.w);
        QPoly term = QPoly::monomial(R, m, Rational(1));
        if (!t.part.empty()) {
            auto it = parts.find(t.part);
            if (it == parts.end()) throw std::invalid_argument("assemble: missing part " + t.part);
            term *= it->second;
        }
        F += term;
    }
    return F;
}

StandardHypersurface random_member(const FamilyRecord& rec, std::uint64_t seed, const MemberOptions& opt) {
    std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(rec.id));
    StandardHypersurface x;
    x.family = &rec;
    const std::vector<int> coords{0, 1, 2, 3};
    for (const auto& [part, deg] : rec.part_degree) {
        QPoly p(rec.ring);
        for (const auto& m : monomial_basis(*rec.ring, coords, deg)) {
            long c;
            if (opt.prime) {
                c = std::uniform_int_distribution<long>(1, static_cast<long>(opt.prime) - 1)(rng);
            } else {
                c = std::uniform_int_distribution<long>(0, 5)(rng) - 3;
                if (c >= 0) ++c;
            }
            p.add_term(m, Rational(c));
        }
        for (const auto& d : opt.drop)
            if (d.part == part) p = p.filter([&](const Monomial& mm) { return mm != rec.ring->parse_monomial(d.monomial); });
        x.parts.emplace(part, std::move(p));
    }
    x.F = assemble(rec, x.parts);
    return x;
}

StandardHypersurface member_from_poly(const FamilyRecord& rec, QPoly F) {
    StandardHypersurface x;
    x.family = &rec;
    x.F = std::move(F);
    return x;
}

std::vector<std::string> missing_required(const StandardHypersurface& x) {
    std::vector<std::string> out;
    const auto& rec = *x.family;
    for (const auto& r : rec.required) {
        auto it = x.parts.find(r.part);
        if (it == x.parts.end()) continue;
        bool has = it->second.contains(rec.ring->parse_monomial(r.monomial));
        bool waived = !r.unless.empty() && it->second.contains(rec.ring->parse_monomial(r.unless));
        if (!has && !waived) out.push_back(r.monomial + " in " + r.part);
    }
    return out;
}

WciMember counterpart_to_wci(const StandardHypersurface& x) {
    const auto& rec = *x.family;
    const auto& XR = rec.wci_ring;
    const int s = 4, u = 5, sig = rec.slot_index;
    WciMember out;
    out.family = &rec;
    out.F1 = QPoly(XR);
    out.F2 = QPoly(XR);
    for (const auto& [m, c] : x.F.terms()) {
        Monomial mm;
        for (int i = 0; i < 4; ++i) mm[i] = m[i];
        int k = m[rec.w];
        if (k == 0) {
            out.F2.add_term(mm, -c);
            continue;
        }
        if (mm[sig] < k - 1) throw std::invalid_argument("counterpart_to_wci: term not divisible by slot^(k-1)");
        mm[sig] = static_cast<std::uint16_t>(mm[sig] - (k - 1));
        mm[s] = static_cast<std::uint16_t>(k - 1);
        out.F1.add_term(mm, c);
    }
    Monomial us, usig;
    usig[u] = 1;
    usig[sig] = 1;
    us[u] = 1;
    us[s] = 1;
    out.F1.add_term(usig, Rational(1));
    out.F2.add_term(us, Rational(1));
    return out;
}

QPoly wci_to_counterpart(const WciMember& x) {
    const auto& rec = *x.family;
    const int s = 4, u = 5, sig = rec.slot_index;
    Monomial us, usig;
    usig[u] = 1;
    usig[sig] = 1;
    us[u] = 1;
    us[s] = 1;
    const Rational* c1 = x.F1.find(usig);
    const Rational* c2 = x.F2.find(us);
    if (!c1) throw std::invalid_argument("wci_to_counterpart: F1 lacks the " + x.F1.ring().monomial_str(usig) + " term");
    if (!c2) throw std::invalid_argument("wci_to_counterpart: F2 lacks the " + x.F2.ring().monomial_str(us) + " term");
    if (!(*c1 == *c2)) throw std::invalid_argument("wci_to_counterpart: unequal coefficients on the u terms");
    auto other_u = [&](const QPoly& p, const Monomial& keep) {
        for (const auto& [m, c] : p.terms())
            if (m[u] && m != keep) return true;
        return false;
    };
    if (other_u(x.F1, usig) || other_u(x.F2, us)) throw std::invalid_argument("wci_to_counterpart: u appears outside its standard terms");
    const auto& R = rec.ring;
    std::vector<QPoly> img;
    for (int i = 0; i < 4; ++i) img.push_back(QPoly::var(R, i, Rational(1)));
    img.push_back(QPoly::var(R, rec.w, Rational(1)) * QPoly::var(R, sig, Rational(1)));
    img.push_back(QPoly(R));
    QPoly wv = QPoly::var(R, rec.w, Rational(1));
    auto strip = [&](const QPoly& p, const Monomial& drop) { return p.filter([&](const Monomial& m) { return m != drop; }); };
    return wv * strip(x.F1, usig).substitute(img) - strip(x.F2, us).substitute(img);
}

// ---- scans ----

namespace {

std::uint32_t primitive_root(std::uint32_t p) {
    if (p == 2) return 1;
    std::vector<std::uint32_t> fac;
    std::uint32_t m = p - 1;
    for (std::uint32_t q = 2; q * q <= m; ++q)
        if (m % q == 0) {
            fac.push_back(q);
            while (m % q == 0) m /= q;
        }
    if (m > 1) fac.push_back(m);
    for (std::uint32_t g = 2; g < p; ++g) {
        bool ok = true;
        for (auto q : fac)
            if (Fp(g, p).pow((p - 1) / q).value() == 1) ok = false;
        if (ok) return g;
    }
    return 1;
}

}  // namespace

namespace {

// one representative set per weighted C*-orbit of nonzero points
template <class Visit>
void for_each_orbit_rep(int N, const std::vector<int>& weights, std::uint32_t p, const std::vector<int>& ignore,
                        Visit visit) {
    const std::uint32_t g = primitive_root(p);
    std::vector<std::uint32_t> x(static_cast<std::size_t>(N), 0);
    for (int i = 0; i < N; ++i) {
        const std::uint32_t k = std::gcd(static_cast<std::uint32_t>(weights[i]), p - 1);
        std::fill(x.begin(), x.end(), 0u);
        std::uint64_t total = 1;
        for (int t = i + 1; t < N; ++t) total *= p;
        Fp rep(1, p);
        for (std::uint32_t r = 0; r < k; ++r, rep *= Fp(g, p)) {
            x[i] = rep.value();
            for (std::uint64_t idx = 0; idx < total; ++idx) {
                std::uint64_t t = idx;
                for (int v = N - 1; v > i; --v) {
                    x[v] = static_cast<std::uint32_t>(t % p);
                    t /= p;
                }
                bool inside = true;
                for (int v = 0; v < N && inside; ++v)
                    if (x[v] && std::find(ignore.begin(), ignore.end(), v) == ignore.end()) inside = false;
                if (!inside) visit(x);
            }
        }
    }
}

}  // namespace

ConeScan scan_cone(const std::vector<FpPoly>& eqs, const std::vector<int>& weights, std::uint32_t p,
                   const std::vector<int>& ignore) {
    if (!is_prime(p)) throw std::invalid_argument("scan_cone: modulus is not prime");
    ConeScan out;
    if (eqs.empty()) return out;
    const int N = eqs[0].ring().size();
    std::vector<FpEvaluator> ev;
    std::vector<std::vector<FpEvaluator>> jac(eqs.size());
    for (std::size_t q = 0; q < eqs.size(); ++q) {
        ev.emplace_back(eqs[q]);
        for (int v = 0; v < N; ++v) jac[q].emplace_back(eqs[q].derivative(v));
    }
    std::vector<std::uint32_t> row0(static_cast<std::size_t>(N)), row1(static_cast<std::size_t>(N));
    for_each_orbit_rep(N, weights, p, ignore, [&](const std::vector<std::uint32_t>& x) {
        ++out.visited;
        for (auto& e : ev)
            if (e(x.data()) != 0) return;
        for (int v = 0; v < N; ++v) row0[v] = jac[0][v](x.data());
        if (eqs.size() == 1) {
            if (std::all_of(row0.begin(), row0.end(), [](std::uint32_t a) { return a == 0; })) out.points.push_back(x);
            return;
        }
        for (int v = 0; v < N; ++v) row1[v] = jac[1][v](x.data());
        for (int a = 0; a < N; ++a)
            for (int b = a + 1; b < N; ++b)
                if (std::uint64_t(row0[a]) * row1[b] % p != std::uint64_t(row0[b]) * row1[a] % p) return;
        out.points.push_back(x);
    });
    std::sort(out.points.begin(), out.points.end());
    return out;
}

ConeScan scan_zeros(const std::vector<FpPoly>& polys, const std::vector<int>& weights, std::uint32_t p) {
    if (!is_prime(p)) throw std::invalid_argument("scan_zeros: modulus is not prime");
    ConeScan out;
    if (polys.empty()) return out;
    std::vector<FpEvaluator> ev;
    for (const auto& q : polys) ev.emplace_back(q);
    for_each_orbit_rep(polys[0].ring().size(), weights, p, {}, [&](const std::vector<std::uint32_t>& x) {
        ++out.visited;
        for (auto& e : ev)
            if (e(x.data()) != 0) return;
        out.points.push_back(x);
    });
    std::sort(out.points.begin(), out.points.end());
    return out;
}

ConeScan quasismooth_scan(const StandardHypersurface& x, std::uint32_t p) {
    const auto& rec = *x.family;
    return scan_cone({reduce_mod(x.F, p)}, rec.weights, p, {rec.w});
}

ConeScan quasismooth_scan(const WciMember& x, std::uint32_t p) {
    return scan_cone({reduce_mod(x.F1, p), reduce_mod(x.F2, p)}, x.F1.ring().weights(), p);
}

// ---- singularities ----

VertexStatus hypersurface_vertex(const QPoly& F, int i, int distinguished) {
    const Ring& R = F.ring();
    VertexStatus st;
    if (i == distinguished) {
        st.kind = VertexStatus::Kind::NonQuotient;
        return st;
    }
    const int r = R.weight(i);
    if (r <= 1) throw std::invalid_argument("vertex_singularity: vertex weight must exceed 1");
    auto deg = F.weighted_degree();
    if (!deg) throw std::invalid_argument("vertex_singularity: inhomogeneous equation");
    const long d = *deg;
    if (d % r == 0) {
        Monomial m;
        m[i] = static_cast<std::uint16_t>(d / r);
        if (F.contains(m)) {
            st.kind = VertexStatus::Kind::NotOnX;
            return st;
        }
    }
    for (int j = 0; j < R.size(); ++j) {
        if (j == i || (d - R.weight(j)) % r != 0 || d - R.weight(j) < r) continue;
        Monomial m;
        m[i] = static_cast<std::uint16_t>((d - R.weight(j)) / r);
        m[j] = 1;
        if (F.contains(m)) {
            st.tangents.push_back(j);
            st.exponents.push_back(m[i]);
        }
    }
    if (st.tangents.empty()) {
        st.kind = VertexStatus::Kind::NotQuasismooth;
        return st;
    }
    auto rest = other_coords(R.size(), {i, st.tangents.front()});
    auto ns = normalize(residues(R, rest, r));
    st.kind = VertexStatus::Kind::Quotient;
    st.type = ns.type;
    st.terminal = ns.terminal;
    return st;
}

VertexStatus vertex_singularity(const StandardHypersurface& x, int i) {
    return hypersurface_vertex(x.F, i, x.family->w);
}

VertexStatus wci_vertex(const QPoly& F1, const QPoly& F2, int i) {
    const Ring& R = F1.ring();
    VertexStatus st;
    const int r = R.weight(i);
    if (r <= 1) throw std::invalid_argument("wci_vertex: vertex weight must exceed 1");
    std::vector<std::vector<Rational>> c(2, std::vector<Rational>(static_cast<std::size_t>(R.size())));
    const QPoly* eq[2] = {&F1, &F2};
    for (int q = 0; q < 2; ++q) {
        auto deg = eq[q]->weighted_degree();
        if (!deg) throw std::invalid_argument("wci_vertex: inhomogeneous equation");
        const long d = *deg;
        if (d % r == 0) {
            Monomial m;
            m[i] = static_cast<std::uint16_t>(d / r);
            if (eq[q]->contains(m)) {
                st.kind = VertexStatus::Kind::NotOnX;
                return st;
            }
        }
        for (int j = 0; j < R.size(); ++j) {
            if (j == i || (d - R.weight(j)) % r != 0 || d - R.weight(j) < r) continue;
            Monomial m;
            m[i] = static_cast<std::uint16_t>((d - R.weight(j)) / r);
            m[j] = 1;
            if (const Rational* v = eq[q]->find(m)) c[q][j] = *v;
        }
    }
    for (int j = 0; j < R.size(); ++j)
        for (int k = 0; k < R.size(); ++k) {
            if (j == k) continue;
            if ((c[0][j] * c[1][k] - c[0][k] * c[1][j]).is_zero()) continue;
            st.tangents = {j, k};
            auto rest = other_coords(R.size(), {i, j, k});
            auto ns = normalize(residues(R, rest, r));
            st.kind = VertexStatus::Kind::Quotient;
            st.type = ns.type;
            st.terminal = ns.terminal;
            return st;
        }
    st.kind = VertexStatus::Kind::NotQuasismooth;
    return st;
}

StratumPoints stratum_singular_points(const QPoly& F, int i, int l) {
    const Ring& R = F.ring();
    StratumPoints out;
    QPoly res = F.filter([&](const Monomial& m) {
        for (int v = 0; v < R.size(); ++v)
            if (v != i && v != l && m[v]) return false;
        return true;
    });
    const int ai = R.weight(i), al = R.weight(l);
    const int g = std::gcd(ai, al);
    auto rest = other_coords(R.size(), {i, l});
    auto ns = normalize(residues(R, rest, g));
    out.type = ns.type;
    out.terminal = ns.terminal;
    if (res.is_zero()) {
        out.contained = true;
        return out;
    }
    const int bp = al / g;
    int pmin = 1 << 20, pmax = -1, qmin = 1 << 20;
    for (const auto& [m, c] : res.terms()) {
        pmin = std::min<int>(pmin, m[i]);
        pmax = std::max<int>(pmax, m[i]);
        qmin = std::min<int>(qmin, m[l]);
    }
    out.mult_first = pmin;
    out.mult_second = qmin;
    out.off_vertex = (pmax - pmin) / bp;
    upoly::UPoly P(static_cast<std::size_t>(out.off_vertex + 1));
    for (const auto& [m, c] : res.terms()) P[static_cast<std::size_t>((m[i] - pmin) / bp)] += c;
    upoly::trim(P);
    out.distinct = upoly::distinct_roots(P);
    return out;
}

}  // namespace qfano
