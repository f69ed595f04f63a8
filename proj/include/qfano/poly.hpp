#pragma once

#include "qfano/fp.hpp"
#include "qfano/rational.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qfano {

inline constexpr int kMaxVars = 12;

struct Monomial {
    std::array<std::uint16_t, kMaxVars> e{};

    std::uint16_t operator[](int i) const { return e[static_cast<std::size_t>(i)]; }
    std::uint16_t& operator[](int i) { return e[static_cast<std::size_t>(i)]; }
    auto operator<=>(const Monomial&) const = default;

    Monomial operator*(const Monomial& o) const {
        Monomial m;
        for (int i = 0; i < kMaxVars; ++i) m[i] = static_cast<std::uint16_t>(e[i] + o.e[i]);
        return m;
    }
    bool divides(const Monomial& o) const {
        for (int i = 0; i < kMaxVars; ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }
    Monomial quotient(const Monomial& d) const {
        Monomial m;
        for (int i = 0; i < kMaxVars; ++i) m[i] = static_cast<std::uint16_t>(e[i] - d.e[i]);
        return m;
    }
    int total() const {
        int t = 0;
        for (auto x : e) t += x;
        return t;
    }
};

// Coordinate names and weights; shared by every polynomial of the ring.
class Ring {
public:
    Ring(std::vector<std::string> names, std::vector<int> weights);

    int size() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<int>& weights() const { return weights_; }
    const std::string& name(int i) const { return names_.at(static_cast<std::size_t>(i)); }
    int weight(int i) const { return weights_.at(static_cast<std::size_t>(i)); }
    int index(std::string_view name) const;  // -1 when absent
    int at(std::string_view name) const;     // throws when absent
    long degree(const Monomial& m) const;

    Monomial parse_monomial(std::string_view s) const;  // "x0^2*y"
    std::string monomial_str(const Monomial& m) const;

private:
    std::vector<std::string> names_;
    std::vector<int> weights_;
};

using RingPtr = std::shared_ptr<const Ring>;
RingPtr make_ring(std::vector<std::string> names, std::vector<int> weights);

namespace detail {
inline bool is_zero(const Rational& c) { return c.is_zero(); }
inline bool is_zero(const Fp& c) { return c.is_zero(); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline Fp one_like(const Fp& c) { return Fp(1, c.modulus()); }
inline Rational times(const Rational& c, long k) { return c * Rational(k); }
inline Fp times(const Fp& c, long k) { return c * k; }
}  // namespace detail

template <class K>
class Poly {
public:
    using Terms = std::map<Monomial, K>;

    Poly() = default;  // placeholder without a ring; assign before use
    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

    static Poly constant(RingPtr ring, const K& c) {
        Poly p(std::move(ring));
        p.add_term(Monomial{}, c);
        return p;
    }
    static Poly var(RingPtr ring, int i, const K& one) {
        Monomial m;
        m[i] = 1;
        return monomial(std::move(ring), m, one);
    }
    static Poly monomial(RingPtr ring, const Monomial& m, const K& c) {
        Poly p(std::move(ring));
        p.add_term(m, c);
        return p;
    }

    const Ring& ring() const { return *ring_; }
    const RingPtr& ring_ptr() const { return ring_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    const K* find(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? nullptr : &it->second;
    }
    bool contains(const Monomial& m) const { return terms_.count(m) != 0; }

    void add_term(const Monomial& m, const K& c) {
        if (detail::is_zero(c)) return;
        auto [it, fresh] = terms_.try_emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (detail::is_zero(it->second)) terms_.erase(it);
        }
    }

    Poly& operator+=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    Poly operator-() const {
        Poly r(ring_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r(a.ring_);
        if (a.is_zero() || b.is_zero()) return r;
        const Poly& big = a.size() >= b.size() ? a : b;
        const Poly& small = a.size() >= b.size() ? b : a;
        for (const auto& [ms, cs] : small.terms_) {
            auto hint = r.terms_.begin();
            for (const auto& [mb, cb] : big.terms_) {
                Monomial m = ms * mb;
                hint = r.terms_.lower_bound(m);
                if (hint != r.terms_.end() && hint->first == m) {
                    hint->second += cs * cb;
                    if (detail::is_zero(hint->second)) r.terms_.erase(hint);
                } else {
                    K c = cs * cb;
                    if (!detail::is_zero(c)) r.terms_.emplace_hint(hint, m, std::move(c));
                }
            }
        }
        return r;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    friend Poly operator*(const K& k, const Poly& p) {
        Poly r(p.ring_);
        if (detail::is_zero(k)) return r;
        for (const auto& [m, c] : p.terms_) r.terms_.emplace(m, k * c);
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

    Poly pow(unsigned e) const {
        if (e == 0) {
            if (is_zero()) throw std::domain_error("Poly::pow: 0^0");
            return constant(ring_, detail::one_like(terms_.begin()->second));
        }
        Poly acc = *this;
        Poly base = *this;
        --e;
        for (; e; e >>= 1) {
            if (e & 1) acc *= base;
            if (e > 1) base *= base;
        }
        return acc;
    }

    // m when every term has weighted degree m; absent for 0 or inhomogeneous.
    std::optional<long> weighted_degree() const {
        if (is_zero()) return std::nullopt;
        long d = ring_->degree(terms_.begin()->first);
        for (const auto& [m, c] : terms_)
            if (ring_->degree(m) != d) return std::nullopt;
        return d;
    }
    Poly homogeneous_part(long deg) const {
        Poly r(ring_);
        for (const auto& [m, c] : terms_)
            if (ring_->degree(m) == deg) r.terms_.emplace(m, c);
        return r;
    }
    // Drops terms of weighted degree above deg.
    Poly truncate(long deg) const {
        Poly r(ring_);
        for (const auto& [m, c] : terms_)
            if (ring_->degree(m) <= deg) r.terms_.emplace(m, c);
        return r;
    }
    int degree_in(int v) const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max<int>(d, m[v]);
        return d;
    }
    bool involves(int v) const { return degree_in(v) > 0; }

    // Coefficient of v^k, as a polynomial not involving v.
    Poly coefficient_in(int v, int k) const {
        Poly r(ring_);
        for (const auto& [m, c] : terms_)
            if (m[v] == k) {
                Monomial mm = m;
                mm[v] = 0;
                r.terms_.emplace(mm, c);
            }
        return r;
    }
    // Terms whose exponents satisfy pred.
    template <class Pred>
    Poly filter(Pred pred) const {
        Poly r(ring_);
        for (const auto& [m, c] : terms_)
            if (pred(m)) r.terms_.emplace(m, c);
        return r;
    }

    Poly derivative(int v) const {
        Poly r(ring_);
        for (const auto& [m, c] : terms_) {
            if (m[v] == 0) continue;
            Monomial mm = m;
            mm[v] = static_cast<std::uint16_t>(m[v] - 1);
            r.add_term(mm, detail::times(c, m[v]));
        }
        return r;
    }

    // images[i] is the image of coordinate i; all images share the target ring.
    Poly substitute(const std::vector<Poly>& images) const {
        if (static_cast<int>(images.size()) != ring_->size())
            throw std::invalid_argument("substitute: assignment must cover every coordinate");
        RingPtr target = images.empty() ? ring_ : images.front().ring_;
        Poly r(target);
        std::vector<std::vector<Poly>> powers(images.size());
        auto power = [&](int v, int k) -> const Poly& {
            auto& cache = powers[static_cast<std::size_t>(v)];
            if (cache.empty()) cache.push_back(images[static_cast<std::size_t>(v)]);
            while (static_cast<int>(cache.size()) < k) cache.push_back(cache.back() * images[static_cast<std::size_t>(v)]);
            return cache[static_cast<std::size_t>(k - 1)];
        };
        for (const auto& [m, c] : terms_) {
            Poly t = constant(target, c);
            for (int v = 0; v < ring_->size() && !t.is_zero(); ++v)
                if (m[v] > 0) t *= power(v, m[v]);
            r += t;
        }
        return r;
    }
    // Replaces a single coordinate, keeping the ring.
    Poly substitute(int v, const Poly& image) const {
        std::vector<Poly> images;
        K one = terms_.empty() ? K{} : detail::one_like(terms_.begin()->second);
        for (int i = 0; i < ring_->size(); ++i)
            images.push_back(i == v ? image : var(ring_, i, one));
        return is_zero() ? *this : substitute(images);
    }

    // Exact quotient by d, or absent when d does not divide *this. Uses the
    // lex order on exponent vectors: if d | p then LT(p) = LT(q) LT(d).
    std::optional<Poly> divide_exact(const Poly& d) const {
        if (d.is_zero()) throw std::domain_error("divide_exact: zero divisor");
        Poly q(ring_), rem = *this;
        const auto& [ld, lc] = *d.terms_.rbegin();
        while (!rem.is_zero()) {
            const auto& [lm, c] = *rem.terms_.rbegin();
            if (!ld.divides(lm)) return std::nullopt;
            Poly t = monomial(ring_, lm.quotient(ld), c / lc);
            rem -= t * d;
            q += t;
        }
        return q;
    }

    std::string str() const;

private:
    RingPtr ring_;
    Terms terms_;
};

using QPoly = Poly<Rational>;
using FpPoly = Poly<Fp>;

// k x n matrix of partial derivatives.
template <class K>
std::vector<std::vector<Poly<K>>> jacobian(const std::vector<Poly<K>>& polys, const std::vector<int>& coords) {
    std::vector<std::vector<Poly<K>>> J;
    for (const auto& p : polys) {
        std::vector<Poly<K>> row;
        for (int v : coords) row.push_back(p.derivative(v));
        J.push_back(std::move(row));
    }
    return J;
}

QPoly parse_poly(const RingPtr& ring, std::string_view text);
FpPoly reduce_mod(const QPoly& p, std::uint32_t prime);
QPoly qvar(const RingPtr& ring, std::string_view name);
QPoly qconst(const RingPtr& ring, const Rational& c);

// Renames coordinates into another ring by name; every used coordinate must exist there.
template <class K>
Poly<K> map_by_name(const Poly<K>& p, const RingPtr& target) {
    Poly<K> r(target);
    for (const auto& [m, c] : p.terms()) {
        Monomial mm;
        for (int v = 0; v < p.ring().size(); ++v)
            if (m[v]) mm[target->at(p.ring().name(v))] = m[v];
        r.add_term(mm, c);
    }
    return r;
}

// Straight-line evaluator of a polynomial over F_p, for point scans.
class FpEvaluator {
public:
    explicit FpEvaluator(const FpPoly& p);
    FpEvaluator() = default;
    std::uint32_t operator()(const std::uint32_t* x) const;
    bool is_zero_poly() const { return coef_.empty(); }

private:
    std::uint32_t p_ = 2;
    int nvars_ = 0;
    std::vector<int> maxexp_;
    std::vector<std::uint32_t> coef_;
    std::vector<std::uint16_t> exps_;  // row-major, nvars_ per term
};

}  // namespace qfano
