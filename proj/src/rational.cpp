#include "orchard/rational.hpp"

#include <cctype>
#include <ostream>

namespace orchard {

mpq_class Rational::from_int64(long long n) {
  // mpq_class has no long long constructor; route through a decimal string
  // to stay exact on LP64 and LLP64 alike.
  mpq_class q(std::to_string(n), 10);
  q.canonicalize();
  return q;
}

Rational::Rational(long long num, long long den) {
  if (den == 0) throw InputError("rational: zero denominator");
  mpq_class q(std::to_string(num) + "/" + std::to_string(den), 10);
  q.canonicalize();
  v_ = q;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw InputError("rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::parse(const std::string& text) {
  // Accepted forms: [+-]digits or [+-]digits/[+-]digits.
  auto valid_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
  };
  // GMP rejects leading '+', so strip it per part after validating.
  auto strip_plus = [](std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return std::string(s);
  };
  const std::size_t slash = text.find('/');
  std::string cleaned;
  bool ok;
  if (slash == std::string::npos) {
    ok = valid_int(text);
    cleaned = strip_plus(text);
  } else {
    const std::string_view num = std::string_view(text).substr(0, slash);
    const std::string_view den = std::string_view(text).substr(slash + 1);
    ok = valid_int(num) && valid_int(den);
    cleaned = strip_plus(num) + "/" + strip_plus(den);
  }
  if (!ok) throw InputError("rational: cannot parse '" + text + "'");

  mpq_class q;
  if (q.set_str(cleaned, 10) != 0) {
    throw InputError("rational: cannot parse '" + text + "'");
  }
  if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0) {
    throw InputError("rational: zero denominator in '" + text + "'");
  }
  q.canonicalize();
  return Rational(q);
}

std::ostream& operator<<(std::ostream& os, const Rational& a) {
  return os << a.v_.get_str();
}

}  // namespace orchard
