#include "padic/scalar.hpp"

#include <charconv>

namespace padic {

PadicScalar::PadicScalar(long prime, BigInt value)
    : prime_(prime), num_(std::move(value)), den_(1), val_(0) {
  if (prime_ < 2) throw Error("prime must be >= 2");
  canonicalize();
}

PadicScalar::PadicScalar(long prime, BigInt num, BigInt den, long val,
                         bool canonical)
    : prime_(prime), num_(std::move(num)), den_(std::move(den)), val_(val) {
  if (!canonical) canonicalize();
}

void PadicScalar::canonicalize() {
  if (den_ == 0) throw DivisionByZero();
  if (num_ == 0) {
    den_ = 1;
    val_ = 0;
    return;
  }
  if (den_ < 0) {
    den_ = -den_;
    num_ = -num_;
  }
  val_ += strip_p(num_, prime_);
  val_ -= strip_p(den_, prime_);
  BigInt g = gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

PadicScalar PadicScalar::from_mantissa_exp(long prime, BigInt mantissa,
                                           long exp) {
  return PadicScalar(prime, std::move(mantissa), 1, exp, false);
}

PadicScalar PadicScalar::from_ratio(long prime, BigInt a, BigInt b) {
  if (b == 0) throw DivisionByZero();
  return PadicScalar(prime, std::move(a), std::move(b), 0, false);
}

PadicScalar PadicScalar::from_rational(long prime, const BigRat& q) {
  return from_ratio(prime, numerator(q), denominator(q));
}

BigRat PadicScalar::to_rational() const {
  BigRat q(num_, den_);
  if (val_ >= 0) {
    q *= p_power(prime_, val_);
  } else {
    q /= p_power(prime_, -val_);
  }
  return q;
}

PadicScalar PadicScalar::operator-() const {
  return PadicScalar(prime_, -num_, den_, val_, true);
}

PadicScalar PadicScalar::operator+(const PadicScalar& o) const {
  long p = merge_prime(prime_, o.prime_);
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  // Align on the smaller exponent; the sum may gain extra factors of p.
  long v = std::min(val_, o.val_);
  BigInt a = num_ * o.den_;
  if (val_ > v) a *= p_power(p, val_ - v);
  BigInt b = o.num_ * den_;
  if (o.val_ > v) b *= p_power(p, o.val_ - v);
  return PadicScalar(p, a + b, den_ * o.den_, v, false);
}

PadicScalar PadicScalar::operator-(const PadicScalar& o) const {
  return *this + (-o);
}

PadicScalar PadicScalar::operator*(const PadicScalar& o) const {
  long p = merge_prime(prime_, o.prime_);
  if (is_zero() || o.is_zero()) return zero(p);
  // Units stay units; only the gcd reduction is needed.
  BigInt n = num_ * o.num_;
  BigInt d = den_ * o.den_;
  BigInt g = gcd(n, d);
  if (g != 1) {
    n /= g;
    d /= g;
  }
  return PadicScalar(p, std::move(n), std::move(d), val_ + o.val_, true);
}

PadicScalar PadicScalar::operator/(const PadicScalar& o) const {
  return *this * o.inverse();
}

PadicScalar PadicScalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  BigInt n = den_, d = num_;
  if (d < 0) {
    d = -d;
    n = -n;
  }
  return PadicScalar(prime_, std::move(n), std::move(d), -val_, true);
}

PadicScalar PadicScalar::pow(long n) const {
  if (n == 0) return one(prime_);
  if (is_zero()) {
    if (n < 0) throw DivisionByZero();
    return zero(prime_);
  }
  PadicScalar base = n < 0 ? inverse() : *this;
  unsigned long e = n < 0 ? static_cast<unsigned long>(-(n + 1)) + 1
                          : static_cast<unsigned long>(n);
  PadicScalar acc = one(prime_);
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

PadicScalar PadicScalar::mul_p_power(long k) const {
  if (is_zero()) return *this;
  return PadicScalar(prime_, num_, den_, val_ + k, true);
}

bool PadicScalar::operator==(const PadicScalar& o) const {
  return prime_ == o.prime_ && val_ == o.val_ && num_ == o.num_ &&
         den_ == o.den_;
}

std::string PadicScalar::to_string() const {
  std::string s = num_.str();
  if (den_ != 1) {
    s += '/';
    s += den_.str();
  }
  s += '*';
  s += std::to_string(prime_);
  s += '^';
  s += std::to_string(val_);
  return s;
}

PadicScalar PadicScalar::parse(long prime, std::string_view text) {
  auto fail = [&]() -> void {
    throw Error("cannot parse scalar: " + std::string(text));
  };
  size_t star = text.find('*');
  if (star == std::string_view::npos) fail();
  std::string_view mant = text.substr(0, star);
  std::string_view rest = text.substr(star + 1);
  size_t caret = rest.find('^');
  if (caret == std::string_view::npos) fail();
  std::string_view base = rest.substr(0, caret);
  std::string_view expo = rest.substr(caret + 1);

  long parsed_base = 0;
  auto r1 = std::from_chars(base.data(), base.data() + base.size(), parsed_base);
  if (r1.ec != std::errc() || r1.ptr != base.data() + base.size()) fail();
  if (parsed_base != prime) throw PrimeMismatch();
  long exp = 0;
  auto r2 = std::from_chars(expo.data(), expo.data() + expo.size(), exp);
  if (r2.ec != std::errc() || r2.ptr != expo.data() + expo.size()) fail();

  size_t slash = mant.find('/');
  BigInt num, den = 1;
  try {
    if (slash == std::string_view::npos) {
      num = BigInt(std::string(mant));
    } else {
      num = BigInt(std::string(mant.substr(0, slash)));
      den = BigInt(std::string(mant.substr(slash + 1)));
    }
  } catch (const std::exception&) {
    fail();
  }
  return PadicScalar(prime, std::move(num), std::move(den), exp, false);
}

}  // namespace padic
