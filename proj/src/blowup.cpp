#include "qfano/blowup.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace qfano {

Extraction Extraction::kawamata(const QuotientSing& q) {
    Extraction e;
    e.kind = Kind::Kawamata;
    e.point = q;
    return e;
}

Extraction Extraction::can(int r1, int r2) {
    if (r1 <= 0 || r2 <= 0) throw std::invalid_argument("cA/n extraction weights must be positive");
    Extraction e;
    e.kind = Kind::CAn;
    e.r1 = r1;
    e.r2 = r2;
    return e;
}

Extraction Extraction::cd3(std::vector<int> weights) {
    if (weights.size() != 4) throw std::invalid_argument("cD/3 extraction needs four weights");
    Extraction e;
    e.kind = Kind::CD3;
    e.cd_weights = std::move(weights);
    return e;
}

std::string Extraction::str() const {
    switch (kind) {
        case Kind::Kawamata:
            return "Kawamata " + point.str();
        case Kind::CAn:
            return "(" + std::to_string(r1) + "," + std::to_string(r2) + ")";
        case Kind::CD3: {
            std::string s = "cD(";
            for (std::size_t i = 0; i < cd_weights.size(); ++i) s += (i ? "," : "") + std::to_string(cd_weights[i]);
            return s + ")";
        }
    }
    return {};
}

std::vector<Extraction> enumerate_extractions(const FamilyRecord& rec) {
    std::vector<Extraction> out;
    if (rec.kind == Kind::cD) {
        for (const auto& m : rec.extractions)
            if (!m.cd_weights.empty()) return {extraction_of(rec, m)};
        return out;
    }
    const int n = rec.index, s = rec.degree - n, e = rec.germ_pair.first;
    for (int r1 = 1; r1 < s; ++r1)
        if (n == 1 || ((r1 - e) % n + n) % n == 0) out.push_back(Extraction::can(r1, s - r1));
    return out;
}

Extraction extraction_of(const FamilyRecord& rec, const ExtractionMark& mark) {
    if (mark.pair) return Extraction::can(mark.pair->first, mark.pair->second);
    std::vector<int> b;
    for (int i = 0; i < 4; ++i) {
        auto it = mark.cd_weights.find(rec.names[static_cast<std::size_t>(i)]);
        if (it == mark.cd_weights.end()) throw std::invalid_argument("cD/3 extraction misses weight of " + rec.names[i]);
        b.push_back(it->second);
    }
    return Extraction::cd3(std::move(b));
}

Rational ExcDivisorModel::discrepancy() const {
    long sum = std::accumulate(b.begin(), b.end(), 0L);
    return Rational(sum, n) - Rational(1) - mu;
}

namespace {

// Truncation commutes with multiplication since every weight is positive.
QPoly mul_trunc(const QPoly& a, const QPoly& b, long D) {
    const Ring& R = a.ring();
    QPoly r(a.ring_ptr());
    for (const auto& [ma, ca] : a.terms()) {
        const long da = R.degree(ma);
        if (da > D) continue;
        for (const auto& [mb, cb] : b.terms())
            if (da + R.degree(mb) <= D) r.add_term(ma * mb, ca * cb);
    }
    return r;
}

QPoly substitute_trunc(const QPoly& G, const std::vector<QPoly>& img, long D) {
    const auto& R = G.ring_ptr();
    QPoly out(R);
    std::vector<std::vector<QPoly>> pw(img.size());
    for (const auto& [m, c] : G.terms()) {
        QPoly t = qconst(R, c);
        for (int v = 0; v < R->size() && !t.is_zero(); ++v) {
            if (!m[v]) continue;
            auto& cache = pw[static_cast<std::size_t>(v)];
            if (cache.empty()) cache.push_back(img[static_cast<std::size_t>(v)].truncate(D));
            while (static_cast<int>(cache.size()) < m[v]) cache.push_back(mul_trunc(cache.back(), cache.front(), D));
            t = mul_trunc(t, cache[static_cast<std::size_t>(m[v] - 1)], D);
        }
        out += t;
    }
    return out;
}

QPoly localize(const StandardHypersurface& x) {
    const auto& R = x.F.ring_ptr();
    return x.F.substitute(x.family->w, qconst(R, Rational(1)));
}

}  // namespace

QPoly germ_normal_form(const StandardHypersurface& member) {
    const FamilyRecord& rec = *member.family;
    if (rec.kind != Kind::cA) throw std::invalid_argument("germ_normal_form: not a cA/n family");
    const auto& R = member.F.ring_ptr();
    const int c1 = rec.germ_index[0], c2 = rec.germ_index[1];
    Monomial m12;
    m12[c1] = 1;
    m12[c2] = 1;
    QPoly G = localize(member).truncate(rec.degree);
    if (!G.find(m12) || *G.find(m12) != Rational(1))
        throw std::invalid_argument("germ_normal_form: F' lacks the w^2 x2 x3 term");
    for (int iter = 0; iter < 64; ++iter) {
        QPoly P(R), Q(R);
        for (const auto& [m, c] : G.terms()) {
            if (m == m12) continue;
            if (m[c1]) {
                Monomial q = m;
                --q[c1];
                P.add_term(q, c);
            } else if (m[c2]) {
                Monomial q = m;
                --q[c2];
                Q.add_term(q, c);
            }
        }
        if (P.is_zero() && Q.is_zero()) {
            G.add_term(m12, Rational(-1));
            return G;
        }
        std::vector<QPoly> img;
        for (int v = 0; v < R->size(); ++v) img.push_back(QPoly::var(R, v, Rational(1)));
        img[static_cast<std::size_t>(c1)] -= Q;
        img[static_cast<std::size_t>(c2)] -= P;
        G = substitute_trunc(G, img, rec.degree);
    }
    throw std::runtime_error("germ_normal_form: splitting did not terminate");
}

ExcDivisorModel exceptional_model(const StandardHypersurface& member, const Extraction& ext) {
    const FamilyRecord& rec = *member.family;
    ExcDivisorModel M;
    M.ext = ext;
    M.n = rec.index;
    QPoly G;
    if (ext.kind == Extraction::Kind::CAn) {
        if (rec.kind != Kind::cA) throw std::invalid_argument("exceptional_model: cA/n extraction on a cD/3 family");
        if (ext.r1 + ext.r2 != rec.degree - rec.index)
            throw std::invalid_argument("exceptional_model: r1 + r2 != d - n");
        M.coords = {rec.germ_index[0], rec.germ_index[1], rec.h_coords[0], rec.h_coords[1]};
        M.b = {ext.r1, ext.r2, rec.weights[rec.h_coords[0]], rec.weights[rec.h_coords[1]]};
        G = germ_normal_form(member);
        Monomial m12;
        m12[rec.germ_index[0]] = 1;
        m12[rec.germ_index[1]] = 1;
        G.add_term(m12, Rational(1));
    } else if (ext.kind == Extraction::Kind::CD3) {
        if (rec.kind != Kind::cD) throw std::invalid_argument("exceptional_model: cD/3 extraction on a cA/n family");
        M.coords = {0, 1, 2, 3};
        M.b = ext.cd_weights;
        G = localize(member);
    } else {
        throw std::invalid_argument("exceptional_model: Kawamata blowups have no germ model");
    }
    std::vector<std::string> names;
    for (int c : M.coords) names.push_back(rec.names[static_cast<std::size_t>(c)]);
    M.ring = make_ring(names, M.b);
    QPoly L = map_by_name(G, M.ring);
    if (L.is_zero()) throw std::invalid_argument("exceptional_model: zero local equation");
    M.order = M.ring->degree(L.terms().begin()->first);
    for (const auto& [m, c] : L.terms()) M.order = std::min(M.order, M.ring->degree(m));
    M.g = L.homogeneous_part(M.order);
    M.h = L.homogeneous_part(M.order + M.n);
    M.mu = Rational(M.order, M.n);
    return M;
}

ConeScan jphi_rank_scan(const ExcDivisorModel& model, std::uint32_t p) {
    std::vector<FpPoly> polys{reduce_mod(model.g, p), reduce_mod(model.h, p)};
    for (int v = 0; v < 4; ++v) polys.push_back(reduce_mod(model.g.derivative(v), p));
    return scan_zeros(polys, model.b, p);
}

namespace {

QuotientSing chart_type(int r, const std::vector<int>& weights) {
    return make_sing(r, weights.at(0), weights.at(1), weights.at(2));
}

}  // namespace

ChartSingularities chart_singularities(const ExcDivisorModel& model) {
    const Ring& R = *model.ring;
    const auto& b = model.b;
    const long m = model.order;
    ChartSingularities out;
    std::map<QuotientSing, ChartPoint> merged;
    auto emit = [&](const QuotientSing& raw, int count, const std::string& where) {
        auto ns = normalize(raw);
        if (!ns.terminal) out.findings.push_back("non-terminal point " + raw.str() + " at " + where);
        auto [it, fresh] = merged.try_emplace(ns.type, ChartPoint{ns.type, 0, ns.terminal, where});
        it->second.count += count;
        if (!fresh) it->second.where += ", " + where;
    };
    auto others = [&](std::vector<int> skip) {
        std::vector<int> v;
        for (int k = 0; k < 4; ++k)
            if (std::find(skip.begin(), skip.end(), k) == skip.end()) v.push_back(k);
        return v;
    };

    for (int i = 0; i < 4; ++i) {
        if (b[i] <= 1) continue;
        const std::string where = "vertex " + R.name(i);
        if (m % b[i] == 0) {
            Monomial pure;
            pure[i] = static_cast<std::uint16_t>(m / b[i]);
            if (model.g.contains(pure)) continue;
        }
        int tangent = -1;
        for (int j = 0; j < 4 && tangent < 0; ++j) {
            if (j == i || (m - b[j]) % b[i] != 0 || m - b[j] < b[i]) continue;
            Monomial t;
            t[i] = static_cast<std::uint16_t>((m - b[j]) / b[i]);
            t[j] = 1;
            if (model.g.contains(t)) tangent = j;
        }
        if (tangent >= 0) {
            auto rest = others({i, tangent});
            emit(chart_type(b[i], {-model.n, b[rest[0]], b[rest[1]]}), 1, where);
            continue;
        }
        const long mh = m + model.n;
        Monomial hp;
        if (mh % b[i] == 0) hp[i] = static_cast<std::uint16_t>(mh / b[i]);
        if (mh % b[i] == 0 && model.h.contains(hp)) {
            auto rest = others({i});
            emit(chart_type(b[i], {b[rest[0]], b[rest[1]], b[rest[2]]}), 1, where);
        } else {
            out.findings.push_back("E singular at " + where + " and h vanishes there");
        }
    }

    for (const auto& st : singular_strata(WeightSystem{b})) {
        if (st.coords.size() == 2) {
            const int i = st.coords[0], l = st.coords[1];
            const std::string where = "line " + R.name(i) + R.name(l);
            auto sp = stratum_singular_points(model.g, i, l);
            if (sp.contained) {
                out.findings.push_back(where + " lies in E");
                continue;
            }
            if (sp.off_vertex == 0) continue;
            if (sp.distinct < sp.off_vertex) {
                out.findings.push_back("E singular along " + where + " (repeated root)");
                continue;
            }
            auto rest = others({i, l});
            emit(chart_type(st.r, {-model.n, b[rest[0]], b[rest[1]]}), sp.off_vertex, where);
        } else if (st.coords.size() == 3) {
            std::string where = "plane";
            for (int c : st.coords) where += " " + R.name(c);
            out.findings.push_back("E meets the singular " + where + " in a curve");
        }
    }
    for (auto& [t, p] : merged) out.points.push_back(p);
    return out;
}

KawamataNumbers kawamata_numbers(const QuotientSing& q) {
    auto ns = normalize(q);
    if (!ns.terminal) throw std::invalid_argument("kawamata_numbers: " + q.str() + " is not terminal");
    const long r = ns.type.r, a = ns.type.a[1];
    if (r == 1) throw std::invalid_argument("kawamata_numbers: smooth point");
    return {Rational(1, r), Rational(r * r, a * (r - a))};
}

VertexStatus link_target(const StandardHypersurface& member, const Extraction& ext) {
    const FamilyRecord& rec = *member.family;
    int vertex = -1;
    if (ext.kind == Extraction::Kind::CD3) {
        vertex = 5;
    } else if (ext.kind == Extraction::Kind::CAn) {
        const int n = rec.index, e = rec.germ_pair.first, e2 = rec.germ_pair.second;
        auto is = [&](int a, int c) { return (ext.r1 == a && ext.r2 == c) || (ext.r1 == c && ext.r2 == a); };
        if (is(e + n, e2))
            vertex = 5;
        else if (is(e, e2 + n))
            vertex = 4;
    }
    if (vertex < 0) throw std::invalid_argument("link_target: " + ext.str() + " is not a link extraction");
    WciMember x = counterpart_to_wci(member);
    return wci_vertex(x.F1, x.F2, vertex);
}

}  // namespace qfano
