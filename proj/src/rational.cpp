#include "qfano/rational.hpp"

#include <stdexcept>

namespace qfano {

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
}

Rational Rational::parse(std::string_view s) {
    std::string t(s);
    mpq_class q;
    if (t.empty() || q.set_str(t, 10) != 0) throw std::invalid_argument("Rational: cannot parse '" + t + "'");
    if (q.get_den() == 0) throw std::domain_error("Rational: zero denominator in '" + t + "'");
    q.canonicalize();
    return Rational(q);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational pow(const Rational& b, unsigned e) {
    Rational acc(1);
    for (unsigned i = 0; i < e; ++i) acc *= b;
    return acc;
}

}  // namespace qfano
