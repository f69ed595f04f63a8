#include "qfano/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace qfano {

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

Ring::Ring(std::vector<std::string> names, std::vector<int> weights)
    : names_(std::move(names)), weights_(std::move(weights)) {
    if (names_.size() != weights_.size()) throw std::invalid_argument("Ring: names/weights length mismatch");
    if (names_.size() > static_cast<std::size_t>(kMaxVars)) throw std::invalid_argument("Ring: too many coordinates");
    for (std::size_t i = 0; i < names_.size(); ++i)
        for (std::size_t j = i + 1; j < names_.size(); ++j)
            if (names_[i] == names_[j]) throw std::invalid_argument("Ring: duplicate coordinate " + names_[i]);
}

int Ring::index(std::string_view name) const {
    for (int i = 0; i < size(); ++i)
        if (names_[static_cast<std::size_t>(i)] == name) return i;
    return -1;
}

int Ring::at(std::string_view name) const {
    int i = index(name);
    if (i < 0) throw std::invalid_argument("unknown coordinate '" + std::string(name) + "'");
    return i;
}

long Ring::degree(const Monomial& m) const {
    long d = 0;
    for (int i = 0; i < size(); ++i) d += static_cast<long>(m[i]) * weights_[static_cast<std::size_t>(i)];
    return d;
}

Monomial Ring::parse_monomial(std::string_view s) const {
    // Shares the polynomial grammar; must come out as a single monic term.
    auto self = std::make_shared<const Ring>(*this);
    QPoly p = parse_poly(self, s);
    if (p.size() != 1 || !(p.terms().begin()->second == Rational(1)))
        throw std::invalid_argument("not a monomial: '" + std::string(s) + "'");
    return p.terms().begin()->first;
}

std::string Ring::monomial_str(const Monomial& m) const {
    std::string out;
    for (int i = 0; i < size(); ++i) {
        if (!m[i]) continue;
        if (!out.empty()) out += '*';
        out += names_[static_cast<std::size_t>(i)];
        if (m[i] > 1) out += '^' + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

RingPtr make_ring(std::vector<std::string> names, std::vector<int> weights) {
    return std::make_shared<const Ring>(std::move(names), std::move(weights));
}

namespace {

template <class K>
std::string render(const Ring& ring, const Monomial& m, const K& c) {
    std::string cs = c.str();
    bool unit_mono = m.total() == 0;
    if (unit_mono) return cs;
    std::string ms = ring.monomial_str(m);
    if (cs == "1") return ms;
    if (cs == "-1") return "-" + ms;
    return cs + "*" + ms;
}

}  // namespace

template <class K>
std::string Poly<K>::str() const {
    if (terms_.empty()) return "0";
    std::vector<const typename Terms::value_type*> order;
    for (const auto& t : terms_) order.push_back(&t);
    // Graded by weighted degree (high first), then exponent vector descending.
    std::sort(order.begin(), order.end(), [&](auto* a, auto* b) {
        long da = ring_->degree(a->first), db = ring_->degree(b->first);
        if (da != db) return da > db;
        return a->first > b->first;
    });
    std::string out;
    for (auto* t : order) {
        std::string s = render(*ring_, t->first, t->second);
        if (out.empty())
            out = s;
        else if (s[0] == '-')
            out += " - " + s.substr(1);
        else
            out += " + " + s;
    }
    return out;
}

template class Poly<Rational>;
template class Poly<Fp>;

namespace {

class Parser {
public:
    Parser(const RingPtr& ring, std::string_view text) : ring_(ring), s_(text) {}

    QPoly run() {
        QPoly p = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("parse_poly: " + why + " at offset " + std::to_string(pos_) + " in '" +
                                    std::string(s_) + "'");
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    bool starts_factor() {
        skip();
        if (pos_ >= s_.size()) return false;
        char c = s_[pos_];
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(';
    }

    QPoly expr() {
        QPoly acc(ring_);
        bool neg = false;
        if (peek('+')) ++pos_;
        else if (peek('-')) { ++pos_; neg = true; }
        QPoly t = term();
        acc = neg ? -t : t;
        for (;;) {
            if (peek('+')) { ++pos_; acc += term(); }
            else if (peek('-')) { ++pos_; acc -= term(); }
            else return acc;
        }
    }
    QPoly term() {
        QPoly acc = factor();
        for (;;) {
            if (peek('*')) { ++pos_; acc *= factor(); }
            else if (peek('/')) {
                ++pos_;
                QPoly d = factor();
                if (d.size() != 1 || d.terms().begin()->first.total() != 0) fail("division by a non-constant");
                acc = (Rational(1) / d.terms().begin()->second) * acc;
            } else if (starts_factor()) acc *= factor();
            else return acc;
        }
    }
    QPoly factor() {
        QPoly base = primary();
        if (peek('^')) {
            ++pos_;
            skip();
            std::size_t st = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (st == pos_) fail("expected exponent");
            base = base.pow(static_cast<unsigned>(std::stoul(std::string(s_.substr(st, pos_ - st)))));
        }
        return base;
    }
    QPoly primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            QPoly p = expr();
            if (!peek(')')) fail("expected ')'");
            ++pos_;
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t st = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return QPoly::constant(ring_, Rational::parse(s_.substr(st, pos_ - st)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t st = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' ||
                                         s_[pos_] == '\''))
                ++pos_;
            std::string_view name = s_.substr(st, pos_ - st);
            int v = ring_->index(name);
            if (v < 0) fail("unknown coordinate '" + std::string(name) + "'");
            return QPoly::var(ring_, v, Rational(1));
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    RingPtr ring_;
    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

QPoly parse_poly(const RingPtr& ring, std::string_view text) { return Parser(ring, text).run(); }

QPoly qvar(const RingPtr& ring, std::string_view name) { return QPoly::var(ring, ring->at(name), Rational(1)); }

QPoly qconst(const RingPtr& ring, const Rational& c) { return QPoly::constant(ring, c); }

FpPoly reduce_mod(const QPoly& p, std::uint32_t prime) {
    FpPoly r(p.ring_ptr());
    for (const auto& [m, c] : p.terms()) {
        mpz_class num = c.num() % prime, den = c.den() % prime;
        if (num < 0) num += prime;
        if (den == 0) throw std::domain_error("reduce_mod: denominator divisible by " + std::to_string(prime));
        Fp v(num.get_si(), prime);
        r.add_term(m, v / Fp(den.get_si(), prime));
    }
    return r;
}

FpEvaluator::FpEvaluator(const FpPoly& p) : nvars_(p.ring().size()) {
    maxexp_.assign(static_cast<std::size_t>(nvars_), 0);
    for (const auto& [m, c] : p.terms()) {
        p_ = c.modulus();
        coef_.push_back(c.value());
        for (int v = 0; v < nvars_; ++v) {
            exps_.push_back(m[v]);
            maxexp_[static_cast<std::size_t>(v)] = std::max<int>(maxexp_[static_cast<std::size_t>(v)], m[v]);
        }
    }
}

std::uint32_t FpEvaluator::operator()(const std::uint32_t* x) const {
    if (coef_.empty()) return 0;
    // Power tables on the stack; exponents in the catalog stay far below 64.
    std::uint64_t pw[kMaxVars][64];
    for (int v = 0; v < nvars_; ++v) {
        int top = maxexp_[static_cast<std::size_t>(v)];
        if (top >= 64) throw std::out_of_range("FpEvaluator: exponent too large");
        pw[v][0] = 1;
        for (int k = 1; k <= top; ++k) pw[v][k] = pw[v][k - 1] * x[v] % p_;
    }
    std::uint64_t acc = 0;
    const std::uint16_t* e = exps_.data();
    for (std::size_t t = 0; t < coef_.size(); ++t, e += nvars_) {
        std::uint64_t term = coef_[t];
        for (int v = 0; v < nvars_ && term; ++v)
            if (e[v]) term = term * pw[v][e[v]] % p_;
        acc += term;
    }
    return static_cast<std::uint32_t>(acc % p_);
}

}  // namespace qfano
