#include "cardmat/rational.hpp"

#include "cardmat/errors.hpp"

#include <cctype>

namespace cardmat {

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) fail("parse-error", "rational with zero denominator");
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) fail("parse-error", "division by zero");
    v_ /= o.v_;
    return *this;
}

namespace {

bool valid_rational_text(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = 0;
    auto digits = [&](std::size_t from, std::size_t to) {
        if (from >= to) return false;
        for (std::size_t j = from; j < to; ++j)
            if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
        return true;
    };
    if (s[i] == '-' || s[i] == '+') ++i;
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return digits(i, s.size());
    std::size_t d = slash + 1;
    if (d < s.size() && (s[d] == '-' || s[d] == '+')) ++d;
    return digits(i, slash) && digits(d, s.size());
}

} // namespace

Rational Rational::parse(std::string_view text) {
    if (!valid_rational_text(text))
        fail("parse-error", "malformed rational '" + std::string(text) + "'");
    mpq_class v;
    if (v.set_str(std::string(text), 10) != 0)
        fail("parse-error", "malformed rational '" + std::string(text) + "'");
    if (v.get_den() == 0)
        fail("parse-error", "zero denominator in '" + std::string(text) + "'");
    v.canonicalize();
    return Rational(std::move(v));
}

std::string Rational::str() const { return v_.get_str(); }

long Rational::as_long() const {
    if (!is_integer() || !v_.get_num().fits_slong_p())
        fail("parse-error", "rational " + str() + " is not a small integer");
    return v_.get_num().get_si();
}

Rational sum(const RationalVector& v) {
    Rational total;
    for (const auto& x : v) total += x;
    return total;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
    if (a.size() != b.size()) fail("dimension-mismatch", "dot of unequal lengths");
    Rational total;
    for (std::size_t i = 0; i < a.size(); ++i) total += a[i] * b[i];
    return total;
}

} // namespace cardmat
