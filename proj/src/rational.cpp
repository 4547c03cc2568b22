#include "rational.hpp"

#include <atomic>
#include <cctype>

#include "errors.hpp"

namespace cg {

namespace {
std::atomic<unsigned long> g_denom_limit_bits{0};
}

void set_denominator_limit_bits(unsigned long bits) { g_denom_limit_bits.store(bits); }
unsigned long denominator_limit_bits() { return g_denom_limit_bits.load(); }

Rational::Rational(long num, long den) {
  if (den == 0) fail(Errc::invalid_argument, "rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(const mpq_class& q) : q_(q) {
  q_.canonicalize();
  *this = checked(q_);
}

Rational Rational::checked(mpq_class q) {
  q.canonicalize();
  unsigned long limit = g_denom_limit_bits.load();
  if (limit != 0 && mpz_sizeinbase(q.get_den().get_mpz_t(), 2) > limit) {
    fail(Errc::denominator_limit,
         "denominator exceeds advisory limit of " + std::to_string(limit) + " bits");
  }
  Rational r;
  r.q_ = std::move(q);
  return r;
}

Rational Rational::operator/(const Rational& o) const {
  if (o.is_zero()) fail(Errc::invalid_argument, "division by zero");
  return checked(q_ / o.q_);
}

Rational Rational::parse(std::string_view s) {
  auto is_int = [](std::string_view t) {
    if (!t.empty() && t.front() == '-') t.remove_prefix(1);
    if (t.empty()) return false;
    for (char c : t)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  std::string num, den = "1";
  auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    num = std::string(s);
  } else {
    num = std::string(s.substr(0, slash));
    den = std::string(s.substr(slash + 1));
  }
  if (!is_int(num) || !is_int(den))
    fail(Errc::parse_error, "malformed rational '" + std::string(s) + "'");
  mpz_class n(num), d(den);
  if (d == 0) fail(Errc::parse_error, "zero denominator in '" + std::string(s) + "'");
  mpq_class q(n, d);
  q.canonicalize();
  return checked(std::move(q));
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Rational::decimal(int significant_digits) const {
  if (significant_digits < 1) fail(Errc::invalid_argument, "need at least one digit");
  if (is_zero()) return "0";
  mpz_class n = ::abs(q_.get_num()), d = q_.get_den();
  bool negative = sign() < 0;

  // exponent e with 10^e <= n/d < 10^(e+1)
  long e = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 10));
  mpz_class pow;
  auto cmp_pow10 = [&](long k) {
    // compare n/d with 10^k
    mpz_class lhs = n, rhs = d;
    if (k >= 0)
      mpz_ui_pow_ui(pow.get_mpz_t(), 10, static_cast<unsigned long>(k)), rhs *= pow;
    else
      mpz_ui_pow_ui(pow.get_mpz_t(), 10, static_cast<unsigned long>(-k)), lhs *= pow;
    return cmp(lhs, rhs);
  };
  while (cmp_pow10(e) < 0) --e;
  while (cmp_pow10(e + 1) >= 0) ++e;

  // digits = round(n/d * 10^(sig-1-e))
  long shift = significant_digits - 1 - e;
  mpz_class scaled_n = n, scaled_d = d;
  if (shift >= 0) {
    mpz_ui_pow_ui(pow.get_mpz_t(), 10, static_cast<unsigned long>(shift));
    scaled_n *= pow;
  } else {
    mpz_ui_pow_ui(pow.get_mpz_t(), 10, static_cast<unsigned long>(-shift));
    scaled_d *= pow;
  }
  mpz_class digits, rem;
  mpz_fdiv_qr(digits.get_mpz_t(), rem.get_mpz_t(), scaled_n.get_mpz_t(), scaled_d.get_mpz_t());
  if (cmp(rem * 2, scaled_d) >= 0) ++digits;
  std::string ds = digits.get_str();
  if (static_cast<int>(ds.size()) > significant_digits) {
    // rounding carried into a new leading digit
    ds.pop_back();
    ++e;
  }

  std::string out;
  if (e >= significant_digits || e < -4) {
    out = ds.substr(0, 1);
    std::string frac = ds.substr(1);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    if (!frac.empty()) out += "." + frac;
    out += "e" + std::to_string(e);
  } else if (e >= 0) {
    out = ds.substr(0, e + 1);
    std::string frac = ds.substr(e + 1);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    if (!frac.empty()) out += "." + frac;
  } else {
    out = "0.";
    out.append(static_cast<size_t>(-e - 1), '0');
    std::string frac = ds;
    while (frac.size() > 1 && frac.back() == '0') frac.pop_back();
    out += frac;
  }
  return negative ? "-" + out : out;
}

}  // namespace cg
