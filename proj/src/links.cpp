#include "qfano/links.hpp"

#include <random>

namespace qfano {

namespace {

QPoly var(const RingPtr& R, int i) { return QPoly::var(R, i, Rational(1)); }

// Polynomial with the coordinate i scaled by lambda.
QPoly scale(const QPoly& P, int i, const Rational& lambda) {
    return P.substitute(i, qconst(P.ring_ptr(), lambda) * var(P.ring_ptr(), i));
}

Rational coefficient(const QPoly& P, const Monomial& m) {
    const Rational* c = P.find(m);
    return c ? *c : Rational(0);
}

Monomial mono(const Ring& R, const std::string& text) { return R.parse_monomial(text); }

RingPtr extend(const Ring& R, const std::vector<std::string>& names, const std::vector<int>& weights) {
    auto n = R.names();
    auto w = R.weights();
    n.insert(n.end(), names.begin(), names.end());
    w.insert(w.end(), weights.begin(), weights.end());
    return make_ring(n, w);
}

void require_cA(const StandardHypersurface& m, const char* what) {
    if (m.family->kind != Kind::cA) throw StructuralError(std::string(what) + ": not a cA/n family");
}

}  // namespace

MidpointVariety midpoint(const StandardHypersurface& member, MidpointSide side) {
    require_cA(member, "midpoint");
    const FamilyRecord& rec = *member.family;
    const int n = rec.index, e = rec.germ_pair.first, e2 = rec.germ_pair.second;
    const int sw = side == MidpointSide::First ? e + n : e2 + n;
    std::vector<std::string> names(rec.names.begin(), rec.names.begin() + 4);
    std::vector<int> weights(rec.weights.begin(), rec.weights.begin() + 4);
    names.push_back("s");
    weights.push_back(sw);
    MidpointVariety Z;
    Z.ring = make_ring(names, weights);
    if (member.F.degree_in(rec.w) > 2) throw StructuralError("midpoint: F' has w-degree above 2");
    QPoly f = map_by_name(member.F.coefficient_in(rec.w, 1), Z.ring);
    QPoly g = map_by_name(member.F.coefficient_in(rec.w, 0), Z.ring);
    QPoly s = var(Z.ring, 4);
    QPoly x2 = var(Z.ring, rec.germ_index[0]), x3 = var(Z.ring, rec.germ_index[1]);
    Z.Z = side == MidpointSide::First ? s * (s * x3 + f) + x2 * g : s * (s * x2 + f) + x3 * g;
    auto deg = Z.Z.weighted_degree();
    const long expected = side == MidpointSide::First ? 2L * (e + n) + e2 : 2L * (e2 + n) + e;
    if (!deg || *deg != expected) throw StructuralError("midpoint: inhomogeneous midpoint polynomial");
    Z.degree = *deg;
    return Z;
}

InvolutionCheck verify_involution_mu(const StandardHypersurface& member) {
    require_cA(member, "mu");
    const FamilyRecord& rec = *member.family;
    const auto& R = member.F.ring_ptr();
    const int w = rec.w, x2 = rec.germ_index[0], x3 = rec.germ_index[1];
    Monomial m23, m33;
    m23[w] = 2;
    m23[x2] = 1;
    m23[x3] = 1;
    m33[x3] = 2;
    const Rational alpha = coefficient(member.F, m23), kappa = coefficient(member.F, m33);
    if (alpha.is_zero() || kappa.is_zero()) throw StructuralError("mu: w^2 x2 x3 or x3^2 is missing");
    QPoly F = Rational(1) / kappa * scale(member.F, x2, kappa / alpha);
    if (F.degree_in(w) > 2) throw StructuralError("mu: F' has w-degree above 2");

    QPoly X3 = var(R, x3);
    QPoly f = F.coefficient_in(w, 1), g = F.coefficient_in(w, 0);
    QPoly b = f.coefficient_in(x3, 0), d = g.coefficient_in(x3, 0);
    auto a = (f - b).divide_exact(X3);
    auto c = (g - d - X3 * X3).divide_exact(X3);
    if (!a || !c) throw StructuralError("mu: decomposition failed");
    QPoly W = var(R, w);
    QPoly L = W * W * var(R, x2) + W * *a + *c;
    QPoly image = -X3 - L;

    InvolutionCheck out;
    QPoly muF = F.substitute(x3, image);
    if (!muF.is_zero()) {
        const auto& [m0, c0] = *F.terms().rbegin();
        out.lambda = coefficient(muF, m0) / c0;
        out.proportional = muF == out.lambda * F;
    }
    out.involutive = image.substitute(x3, image) == X3;
    return out;
}

NuCheck verify_involution_nu(const StandardHypersurface& member) {
    require_cA(member, "nu");
    const FamilyRecord& rec = *member.family;
    const auto& R = member.F.ring_ptr();
    const int w = rec.w, x2 = rec.germ_index[0], x3 = rec.germ_index[1];
    QPoly W = var(R, w), X2 = var(R, x2), X3 = var(R, x3);
    Monomial m23;
    m23[w] = 2;
    m23[x2] = 1;
    m23[x3] = 1;
    const Rational alpha = coefficient(member.F, m23);
    if (alpha.is_zero()) throw StructuralError("nu: w^2 x2 x3 is missing");
    QPoly F = member.F;
    Monomial w33;
    w33[w] = 1;
    w33[x3] = 2;
    const Rational kappa = coefficient(F, w33);
    if (kappa.is_zero()) throw StructuralError("nu: w x3^2 is missing");
    // absorb e x3^2 into the w-part
    QPoly eps = F.coefficient_in(w, 0).coefficient_in(x3, 2);
    F = F.substitute(w, W - Rational(1) / kappa * eps);
    F = Rational(1) / kappa * scale(F, x2, kappa / alpha);
    if (F.degree_in(w) > 2) throw StructuralError("nu: F' has w-degree above 2");

    QPoly f = F.coefficient_in(w, 1), g = F.coefficient_in(w, 0);
    if (!(F.coefficient_in(w, 2) == X2 * X3)) throw StructuralError("nu: w^2 part is not x2 x3");
    if (!(f.coefficient_in(x3, 2) == qconst(R, Rational(1))) || f.degree_in(x3) > 2 || g.degree_in(x3) > 1)
        throw StructuralError("nu: decomposition failed");
    QPoly a = f.coefficient_in(x3, 1), b = f.coefficient_in(x3, 0);
    QPoly c = g.coefficient_in(x3, 1), d = g.coefficient_in(x3, 0);

    NuCheck out;
    QPoly image = -X3 - W * X2 - a;
    QPoly shown = W * W * X2 * X3 + W * (X3 * X3 + X3 * a + b - X2 * c) - X3 * c + d - a * c;
    out.hypersurface = F.substitute(x3, image) == shown;
    out.involutive = image.substitute(x3, image) == X3;

    // WCI side, x4 = s and x5 the last coordinate
    const FamilyRecord& fr = rec;
    const auto& S = fr.wci_ring;
    auto to_s = [&](const QPoly& p) { return map_by_name(p, S); };
    QPoly y2 = var(S, x2), y3 = var(S, x3), y4 = var(S, 4), y5 = var(S, 5);
    QPoly A = to_s(a), B = to_s(b), C = to_s(c), D = to_s(d);
    QPoly F1 = y5 * y2 + y4 * y3 + (y3 * y3 + y3 * A + B);
    QPoly F2 = y5 * y4 - (y3 * C + D);
    WciMember built = counterpart_to_wci(member_from_poly(rec, F));
    out.wci_shape = built.F1 == F1 && built.F2 == F2;
    QPoly T1 = y5 * y2 + y4 * y3 + (y3 * y3 + y3 * A + B - y2 * C);
    QPoly T2 = y5 * y4 - (-y3 * C + D - A * C);
    auto apply = [&](const QPoly& P, int sign) {
        std::vector<QPoly> img;
        for (int i = 0; i < S->size(); ++i) img.push_back(var(S, i));
        img[static_cast<std::size_t>(x3)] = -y3 - y4 - A;
        img[5] = sign > 0 ? y5 + C : y5 - C;
        return P.substitute(img);
    };
    out.wci_stated = apply(F1, +1) == T1 && apply(F2, +1) == T2;
    out.wci_corrected = apply(F1, -1) == T1 && apply(F2, -1) == T2;
    return out;
}

SectionLadder build_ladder(const StandardHypersurface& member) {
    require_cA(member, "ladder");
    const FamilyRecord& rec = *member.family;
    const auto& R = member.F.ring_ptr();
    const bool mirrored = rec.id == 38 || rec.id == 63;
    SectionLadder L;
    L.shape = LadderShape::Standard;
    L.X = rec.germ_index[mirrored ? 1 : 0];
    L.Y = rec.germ_index[mirrored ? 0 : 1];
    const int w = rec.w, Xi = L.X, Yi = L.Y;
    Monomial mxy, mx3;
    mxy[w] = 2;
    mxy[Xi] = 1;
    mxy[Yi] = 1;
    mx3[Xi] = 3;
    const Rational alpha = coefficient(member.F, mxy), kappa = coefficient(member.F, mx3);
    if (alpha.is_zero() || kappa.is_zero()) throw StructuralError("ladder: w^2 X Y or X^3 is missing");
    QPoly F = Rational(1) / kappa * scale(member.F, Yi, kappa / alpha);
    QPoly W = var(R, w), X = var(R, Xi), Y = var(R, Yi);
    if (F.degree_in(w) > 2 || !(F.coefficient_in(w, 2) == X * Y)) throw StructuralError("ladder: bad w^2 part");
    QPoly f = F.coefficient_in(w, 1), g = F.coefficient_in(w, 0);
    if (f.degree_in(Xi) > 2 || g.degree_in(Xi) > 3 || !(g.coefficient_in(Xi, 3) == qconst(R, Rational(1))))
        throw StructuralError("ladder: decomposition failed");
    QPoly a = f.coefficient_in(Xi, 2), b = f.coefficient_in(Xi, 1), c = f.coefficient_in(Xi, 0);
    QPoly d = g.coefficient_in(Xi, 2), e = g.coefficient_in(Xi, 1), h = g.coefficient_in(Xi, 0);
    L.F = F;
    L.coef = {{"a", a}, {"b", b}, {"c", c}, {"d", d}, {"e", e}, {"h", h}};
    L.u = W * W * Y + W * (X * a + b) + X * X + X * d + e;
    L.v = W * (L.u * Y - a * c) + L.u * b - c * X - c * d - a * h;

    L.identities.push_back({"decomposition", F == X * L.u + W * c + h, "F' = X u + w c + h"});
    QPoly lhs = W * L.v - L.u * L.u + L.u * e - h * (X + d);
    auto q = lhs.divide_exact(F);
    L.identities.push_back(
        {"v relation", q && *q == -(W * a + X + d), "w v - u^2 + u e - h(X + d) = -(w a + X + d) F'"});
    const int n = rec.index, wx = rec.weights[static_cast<std::size_t>(Xi)], wy = rec.weights[static_cast<std::size_t>(Yi)];
    auto du = L.u.weighted_degree(), dv = L.v.weighted_degree();
    L.identities.push_back({"deg u", du && *du == wy + 2 * n, "deg u = wt(Y) + 2n"});
    L.identities.push_back({"deg v", dv && *dv == 4L * wx - n, "deg v = 4 wt(X) - n"});
    return L;
}

DetMCheck verify_detM(const SectionLadder& L, bool corrupt) {
    DetMCheck out;
    if (L.shape != LadderShape::Standard) return out;
    auto du = L.u.weighted_degree(), dv = L.v.weighted_degree();
    if (!du || !dv) return out;
    const Ring& R = L.F.ring();
    RingPtr E = extend(R, {"U", "V"}, {static_cast<int>(*du), static_cast<int>(*dv)});
    const int Ui = R.size(), Vi = R.size() + 1;
    auto m = [&](const char* k) { return map_by_name(L.coef.at(k), E); };
    QPoly a = m("a"), b = m("b"), c = m("c"), d = m("d"), e = m("e"), h = m("h");
    QPoly U = var(E, Ui), V = var(E, Vi), Y = var(E, L.Y), X = var(E, L.X);
    std::array<std::array<QPoly, 3>, 3> M{{
        {U, c, h},
        {-h, V, -(U * U) + U * e - h * d},
        {c, -(U * Y) + a * c, V - U * b + c * d + a * h},
    }};
    if (corrupt) M[0][1] += X;
    QPoly det = M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) - M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
                M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
    auto q = det.divide_exact(U);
    out.divisible = q.has_value();
    if (q) out.v_degree = q->degree_in(Vi);
    return out;
}

SectionLadder build_ladder_g33(const StandardHypersurface& member, bool corrupt_a9) {
    const FamilyRecord& rec = *member.family;
    if (rec.id != 33) throw StructuralError("G33 ladder: family 33 only");
    const auto& R = member.F.ring_ptr();
    const int w = rec.w, y = R->at("y"), z = R->at("z");
    QPoly W = var(R, w), Yv = var(R, y), Zv = var(R, z);
    const Rational alpha = coefficient(member.F, mono(*R, "w^2*y*z"));
    const Rational kappa = coefficient(member.F, mono(*R, "w*y^3"));
    if (alpha.is_zero() || kappa.is_zero()) throw StructuralError("G33 ladder: w^2 y z or w y^3 is missing");
    // remove y^3 from the w-free part by w -> w - b1/kappa
    QPoly b1 = member.F.coefficient_in(w, 0).coefficient_in(y, 3);
    QPoly F = member.F.substitute(w, W - Rational(1) / kappa * b1);
    const Rational zeta = coefficient(F, mono(*R, "z^2"));
    if (zeta.is_zero()) throw StructuralError("G33 ladder: z^2 is missing");
    const Rational lam = alpha * alpha / (kappa * zeta);
    const Rational gam = alpha * alpha * lam * lam / zeta;
    const Rational nu = gam / (alpha * lam);
    F = Rational(1) / gam * scale(scale(F, y, lam), z, nu);
    if (F.degree_in(w) > 2 || !(F.coefficient_in(w, 2) == Yv * Zv)) throw StructuralError("G33 ladder: bad w^2 part");
    QPoly f = F.coefficient_in(w, 1), g = F.coefficient_in(w, 0);
    QPoly fz1 = f.coefficient_in(z, 1), fz0 = f.coefficient_in(z, 0);
    QPoly gz1 = g.coefficient_in(z, 1), gz0 = g.coefficient_in(z, 0);
    const QPoly one = qconst(R, Rational(1));
    if (f.degree_in(z) > 1 || !(fz0.coefficient_in(y, 3) == one) || !(g.coefficient_in(z, 2) == one) ||
        g.degree_in(z) > 2 || !gz0.coefficient_in(y, 3).is_zero())
        throw StructuralError("G33 ladder: decomposition failed");
    QPoly a1 = fz1.coefficient_in(y, 1), a4 = fz1.coefficient_in(y, 0);
    QPoly a3 = fz0.coefficient_in(y, 2), a6 = fz0.coefficient_in(y, 1), a9 = fz0.coefficient_in(y, 0);
    QPoly b2 = gz1.coefficient_in(y, 1), b5 = gz1.coefficient_in(y, 0);
    QPoly b4 = gz0.coefficient_in(y, 2), b7 = gz0.coefficient_in(y, 1), b10 = gz0.coefficient_in(y, 0);

    SectionLadder L;
    L.shape = LadderShape::G33;
    L.F = F;
    L.coef = {{"a1", a1}, {"a3", a3}, {"a4", a4}, {"a6", a6}, {"a9", a9},
              {"b2", b2}, {"b4", b4}, {"b5", b5}, {"b7", b7}, {"b10", b10}};
    L.u = W * Zv + Zv * a1 + Yv * Yv + Yv * a3 + a6;
    L.identities.push_back({"G33 decomposition",
                            F == W * Yv * L.u + W * (Zv * a4 + a9) + Zv * Zv + Zv * Yv * b2 + Zv * b5 +
                                     Yv * Yv * b4 + Yv * b7 + b10,
                            "F' = w y u + w(z a4 + a9) + z^2 + z y b2 + z b5 + y^2 b4 + y b7 + b10"});
    QPoly t = W * a4 + Zv + b5;
    L.v = W * W * L.u - t * (Yv + a3) + b2 * (L.u - Zv * a1 - Yv * Yv - Yv * a3 - a6) + W * Yv * b4 + W * b7;
    QPoly a9c = corrupt_a9 ? a9 + var(R, 0).pow(9) : a9;
    L.identities.push_back({"G33 wF relation", W * F == Yv * L.v + W * W * a9c + t * (L.u - Zv * a1 - a6) + W * b10,
                            "w F' = y v + w^2 a9 + (w a4 + z + b5)(u - z a1 - a6) + w b10"});
    return L;
}

StandardHypersurface g18_member(const FamilyRecord& rec, std::uint64_t seed) {
    if (rec.id != 18) throw StructuralError("g18_member: family 18 only");
    const auto& R = rec.ring;
    std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + 18);
    std::uniform_int_distribution<int> pick(1, 6);
    const std::vector<int> base{R->at("x0"), R->at("x1"), rec.w};
    auto random_poly = [&](long deg) {
        QPoly p(R);
        for (const auto& m : monomial_basis(*R, base, deg)) {
            int c = pick(rng);
            p.add_term(m, Rational(c <= 3 ? c : 3 - c));
        }
        return p;
    };
    StandardHypersurface x;
    x.family = &rec;
    x.parts = {{"a5", random_poly(5)}, {"b4", random_poly(4)}, {"c6", random_poly(6)}, {"d8", random_poly(8)}};
    QPoly y = var(R, R->at("y")), z = var(R, R->at("z")), w = var(R, rec.w);
    x.F = y * z * z + x.parts["a5"] * z - w * y.pow(3) - x.parts["b4"] * y * y - x.parts["c6"] * y + x.parts["d8"];
    return x;
}

const IdentityResult* G18Result::holding() const {
    for (const auto& v : variants)
        if (v.holds) return &v;
    return nullptr;
}

G18Result verify_g18_model(const StandardHypersurface& member, bool flip_v) {
    const FamilyRecord& rec = *member.family;
    if (rec.id != 18) throw StructuralError("G18 model: family 18 only");
    const auto& R0 = member.F.ring_ptr();
    const int y = R0->at("y"), z = R0->at("z");
    const QPoly& F0 = member.F;
    // yz^2 + a5 z - w y^3 - b4 y^2 - c6 y + d8
    QPoly one = qconst(R0, Rational(1));
    QPoly z0 = F0.coefficient_in(z, 0), z1 = F0.coefficient_in(z, 1), z2 = F0.coefficient_in(z, 2);
    if (F0.degree_in(z) > 2 || !(z2 == var(R0, y)) || z1.involves(y) || z0.degree_in(y) > 3 ||
        !(z0.coefficient_in(y, 3) == -var(R0, rec.w)))
        throw StructuralError("G18 model: F' is not in the yz^2 + a5 z - w y^3 - ... form");
    // the stated equation names a6; carry it as an extra coordinate of degree 6
    RingPtr R = extend(*R0, {"a6"}, {6});
    auto m = [&](const QPoly& p) { return map_by_name(p, R); };
    QPoly F = m(F0), a5 = m(z1), b4 = -m(z0.coefficient_in(y, 2)), c6 = -m(z0.coefficient_in(y, 1)),
          d8 = m(z0.coefficient_in(y, 0));
    QPoly Y = var(R, R->at("y")), Z = var(R, R->at("z")), W = var(R, rec.w), a6 = var(R, R->at("a6"));
    QPoly u = Z * Z - W * Y * Y - b4 * Y - c6;
    QPoly v = u * Z + a5 * W * Y + (flip_v ? -(a5 * b4) : a5 * b4);
    QPoly beta = b4 * d8 + a5 * a5 * W, gamma = (-(a5 * a5 * c6) + d8 * d8) * W;
    QPoly head = -(v * v) + u * u * u + u * u * c6;
    auto member_of = [&](const QPoly& P) {
        if (P.is_zero()) return true;
        return P.divide_exact(F).has_value();
    };
    G18Result out;
    out.variants.push_back({"as stated", member_of(head + a6 * b4 * v - beta * v + gamma),
                            "-v^2 + a6 b4 v + u^3 + u^2 c6 - (b4 d8 + a5^2 w) v + (-a5^2 c6 + d8^2) w"});
    out.variants.push_back({"a6 -> a5", member_of(head + a5 * b4 * v - beta * v + gamma),
                            "-v^2 + a5 b4 v + u^3 + u^2 c6 - (b4 d8 + a5^2 w) v + (-a5^2 c6 + d8^2) w"});
    out.variants.push_back({"a6 -> a5, (b4 d8 + a5^2 w) u", member_of(head + a5 * b4 * v - beta * u + gamma),
                            "-v^2 + a5 b4 v + u^3 + u^2 c6 - (b4 d8 + a5^2 w) u + (-a5^2 c6 + d8^2) w"});
    return out;
}

}  // namespace qfano
