#include "padic/interval.hpp"

namespace padic {

namespace {

// Canonical representative of x modulo p^n (n finite).
PadicScalar residue_of(const PadicScalar& x, long n) {
  if (x.is_zero() || x.val() >= n) return PadicScalar::zero(x.prime());
  long m = n - x.val();
  BigInt mod = p_power(x.prime(), m);
  BigInt r = mod_nonneg(x.unit_num(), mod);
  if (x.unit_den() != 1) r = mod_nonneg(r * mod_inverse(x.unit_den(), mod), mod);
  return PadicScalar::from_mantissa_exp(x.prime(), r, x.val());
}

// absprec + finite shift, saturating through the sentinels.
long shift_prec(long n, long v) {
  if (n == kExactPrec || n == kNoInfoPrec) return n;
  return n + v;
}

}  // namespace

PadicInterval::PadicInterval(const PadicScalar& center, long absprec)
    : center_(center), absprec_(absprec) {
  if (absprec_ == kExactPrec) return;
  if (absprec_ == kNoInfoPrec) {
    center_ = PadicScalar::zero(center.prime());
    return;
  }
  center_ = residue_of(center, absprec_);
}

long PadicInterval::rel_prec() const {
  if (is_exact()) return kExactPrec;
  if (center_.is_zero()) return 0;
  return absprec_ - center_.val();
}

PadicInterval PadicInterval::operator+(const PadicInterval& o) const {
  merge_prime(prime(), o.prime());
  long n = std::min(absprec_, o.absprec_);
  return PadicInterval(center_ + o.center_, n);
}

PadicInterval PadicInterval::operator-() const {
  return PadicInterval(-center_, absprec_);
}

PadicInterval PadicInterval::operator-(const PadicInterval& o) const {
  return *this + (-o);
}

PadicInterval PadicInterval::operator*(const PadicInterval& o) const {
  merge_prime(prime(), o.prime());
  // Exact zero absorbs everything, including no-information operands.
  if ((is_exact() && center_.is_zero()) ||
      (o.is_exact() && o.center_.is_zero()))
    return exact(PadicScalar::zero(prime()));
  // O(p^(na + val b)) + O(p^(nb + val a)); for zero-centered balls the
  // lower bound absprec stands in for the unknown valuation.
  long n = std::min(shift_prec(absprec_, o.val_lower_bound()),
                    shift_prec(o.absprec_, val_lower_bound()));
  return PadicInterval(center_ * o.center_, n);
}

PadicInterval PadicInterval::operator/(const PadicInterval& o) const {
  merge_prime(prime(), o.prime());
  if (o.is_exact()) {
    if (o.center_.is_zero()) throw DivisionByZero();
    long n = shift_prec(absprec_, -o.center_.val());
    return PadicInterval(center_ / o.center_, n);
  }
  if (!o.val_known() || o.is_zeroish()) throw IndeterminateDivision();
  long vb = o.center_.val();
  long n = std::min(shift_prec(absprec_, -vb),
                    shift_prec(shift_prec(o.absprec_, val_lower_bound()), -2 * vb));
  return PadicInterval(center_ / o.center_, n);
}

PadicInterval PadicInterval::reduce_to(long n) const {
  if (n > absprec_) throw NegativePrecision();
  return PadicInterval(center_, n);
}

bool PadicInterval::operator==(const PadicInterval& o) const {
  return absprec_ == o.absprec_ && center_ == o.center_;
}

std::string PadicInterval::to_string() const {
  std::string s = center_.to_string();
  s += " + O(";
  s += std::to_string(prime());
  s += '^';
  if (absprec_ == kExactPrec)
    s += "inf";
  else if (absprec_ == kNoInfoPrec)
    s += "-inf";
  else
    s += std::to_string(absprec_);
  s += ')';
  return s;
}

PadicInterval PadicInterval::parse(long prime, std::string_view text) {
  size_t sep = text.find(" + O(");
  if (sep == std::string_view::npos || text.back() != ')')
    throw Error("cannot parse interval: " + std::string(text));
  PadicScalar center = PadicScalar::parse(prime, text.substr(0, sep));
  std::string_view tail = text.substr(sep + 5, text.size() - sep - 6);
  size_t caret = tail.find('^');
  if (caret == std::string_view::npos)
    throw Error("cannot parse interval: " + std::string(text));
  if (std::stol(std::string(tail.substr(0, caret))) != prime)
    throw PrimeMismatch();
  std::string expo(tail.substr(caret + 1));
  long n;
  if (expo == "inf")
    n = kExactPrec;
  else if (expo == "-inf")
    n = kNoInfoPrec;
  else
    n = std::stol(expo);
  return PadicInterval(center, n);
}

PadicInterval reduce(const PadicScalar& x, long n) {
  return PadicInterval(x, n);
}

}  // namespace padic
