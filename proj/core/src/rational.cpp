#include "tchains/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace tchains {

Rat rat_pow(const Rat& base, unsigned long exp) {
  Rat out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exp);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exp);
  // base is canonical, so num^e / den^e is already canonical
  return out;
}

namespace {

bool is_integer_token(const std::string& s, std::size_t from, std::size_t to) {
  if (from >= to) return false;
  std::size_t i = from;
  if (s[i] == '-') ++i;
  if (i >= to) return false;
  for (; i < to; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rat rat_from_string(const std::string& s) {
  const std::size_t slash = s.find('/');
  bool ok;
  if (slash == std::string::npos) {
    ok = is_integer_token(s, 0, s.size());
  } else {
    ok = is_integer_token(s, 0, slash) && is_integer_token(s, slash + 1, s.size()) &&
         s.find('/', slash + 1) == std::string::npos;
  }
  if (!ok) throw std::invalid_argument("malformed rational literal: '" + s + "'");
  Rat q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0) {
    throw std::invalid_argument("malformed rational literal: '" + s + "'");
  }
  if (q.get_den() == 0) throw std::invalid_argument("rational with zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

std::string rat_to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string rat_to_decimal(const Rat& q, int digits) {
  if (digits < 0) digits = 0;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  mpz_class num = q.get_num() * scale * 2;
  mpz_class den = q.get_den();
  mpz_class twice = num / den;  // truncated toward zero
  // round half away from zero
  mpz_class scaled;
  if (twice >= 0) {
    scaled = (twice + 1) / 2;
  } else {
    scaled = (twice - 1) / 2;
  }
  bool negative = scaled < 0;
  mpz_class mag = negative ? mpz_class(-scaled) : scaled;
  mpz_class whole = mag / scale;
  mpz_class frac = mag % scale;
  std::string out = negative ? "-" : "";
  out += whole.get_str();
  if (digits > 0) {
    std::string f = frac.get_str();
    out += "." + std::string(static_cast<std::size_t>(digits) - f.size(), '0') + f;
  }
  return out;
}

}  // namespace tchains
