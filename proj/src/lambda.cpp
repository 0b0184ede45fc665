#include "ore/lambda.hpp"

#include <sstream>

namespace ore {

namespace mp = boost::multiprecision;

int lambda_arity(LambdaKind k) {
  return (k == LambdaKind::Z || k == LambdaKind::Q) ? 1 : 2;
}

bool lambda_integral(LambdaKind k) {
  return k == LambdaKind::Z || k == LambdaKind::ZZLex;
}

std::string lambda_name(LambdaKind k) {
  switch (k) {
    case LambdaKind::Z: return "Z";
    case LambdaKind::Q: return "Q";
    case LambdaKind::ZZLex: return "ZxZ-lex";
    case LambdaKind::QQLex: return "QxQ-lex";
  }
  return "?";
}

static bool rat_is_integer(const BigRat& r) { return mp::denominator(r) == 1; }

void LambdaValue::check_integral() const {
  if (!lambda_integral(kind_)) return;
  for (int i = 0; i < arity(); ++i) {
    if (!rat_is_integer(c_[i])) {
      throw std::invalid_argument("non-integral component in " + lambda_name(kind_));
    }
  }
}

LambdaValue LambdaValue::scalar(LambdaKind k, BigRat v) {
  if (lambda_arity(k) != 1) throw std::invalid_argument("scalar value for pair kind");
  LambdaValue r(k);
  r.c_[0] = std::move(v);
  r.check_integral();
  return r;
}

LambdaValue LambdaValue::pair(LambdaKind k, BigRat a, BigRat b) {
  if (lambda_arity(k) != 2) throw std::invalid_argument("pair value for scalar kind");
  LambdaValue r(k);
  r.c_[0] = std::move(a);
  r.c_[1] = std::move(b);
  r.check_integral();
  return r;
}

static void check_same(LambdaKind a, LambdaKind b) {
  if (a != b) {
    throw std::invalid_argument("mismatched Lambda instances: " + lambda_name(a) + " vs " +
                                lambda_name(b));
  }
}

LambdaValue LambdaValue::operator+(const LambdaValue& o) const {
  check_same(kind_, o.kind_);
  LambdaValue r(kind_);
  for (int i = 0; i < arity(); ++i) r.c_[i] = c_[i] + o.c_[i];
  return r;
}

LambdaValue LambdaValue::operator-(const LambdaValue& o) const { return *this + (-o); }

LambdaValue LambdaValue::operator-() const {
  LambdaValue r(kind_);
  for (int i = 0; i < arity(); ++i) r.c_[i] = -c_[i];
  return r;
}

int LambdaValue::cmp(const LambdaValue& o) const {
  check_same(kind_, o.kind_);
  for (int i = 0; i < arity(); ++i) {
    if (c_[i] < o.c_[i]) return -1;
    if (c_[i] > o.c_[i]) return 1;
  }
  return 0;
}

bool LambdaValue::is_zero() const {
  for (int i = 0; i < arity(); ++i) {
    if (c_[i] != 0) return false;
  }
  return true;
}

LambdaValue LambdaValue::times(const BigInt& k) const {
  LambdaValue r(kind_);
  for (int i = 0; i < arity(); ++i) r.c_[i] = c_[i] * BigRat(k);
  return r;
}

std::optional<LambdaValue> LambdaValue::divided_exact(const BigInt& m) const {
  if (m == 0) throw std::invalid_argument("division by zero");
  LambdaValue r(kind_);
  for (int i = 0; i < arity(); ++i) {
    r.c_[i] = c_[i] / BigRat(m);
    if (lambda_integral(kind_) && !rat_is_integer(r.c_[i])) return std::nullopt;
  }
  return r;
}

std::string rat_str(const BigRat& r) {
  std::ostringstream os;
  os << mp::numerator(r);
  if (mp::denominator(r) != 1) os << '/' << mp::denominator(r);
  return os.str();
}

std::string LambdaValue::str() const {
  if (arity() == 1) return rat_str(c_[0]);
  return "(" + rat_str(c_[0]) + ", " + rat_str(c_[1]) + ")";
}

std::optional<LambdaValue> lambda_min_positive(LambdaKind k) {
  switch (k) {
    case LambdaKind::Z: return LambdaValue::integer(k, 1);
    case LambdaKind::ZZLex: return LambdaValue::pair(k, 0, 1);
    default: return std::nullopt;
  }
}

HalfValue::HalfValue(LambdaValue num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw std::invalid_argument("invalid denominator 0");
  if (den_ < 0) {
    den_ = -den_;
    num_ = -num_;
  }
  // Cancel the largest divisor of den_ under which num_ stays in Lambda.
  if (!lambda_integral(num_.kind())) {
    auto q = num_.divided_exact(den_);
    num_ = *q;
    den_ = 1;
  } else {
    BigInt g = den_;
    for (int i = 0; i < num_.arity(); ++i) g = mp::gcd(g, mp::numerator(num_.comp(i)));
    if (g > 1) {
      num_ = *num_.divided_exact(g);
      den_ /= g;
    }
  }
}

std::optional<LambdaValue> HalfValue::in_lambda() const {
  if (den_ == 1) return num_;
  return std::nullopt;
}

HalfValue HalfValue::operator+(const HalfValue& o) const {
  // (lambda/m) + (mu/n) = (n*lambda + m*mu) / (nm)
  return HalfValue(num_.times(o.den_) + o.num_.times(den_), den_ * o.den_);
}

int HalfValue::cmp(const HalfValue& o) const {
  return num_.times(o.den_).cmp(o.num_.times(den_));
}

std::string HalfValue::str() const {
  if (den_ == 1) return num_.str();
  std::ostringstream os;
  if (num_.arity() == 1) {
    os << num_.str() << '/' << den_;
  } else {
    os << '(' << num_.str() << ")/" << den_;
  }
  return os.str();
}

BigRat rat_floor_div(const BigRat& a, const BigRat& b) {
  // floor(a/b) as a rational integer; b must be nonzero.
  BigRat q = a / b;
  BigInt n = mp::numerator(q), d = mp::denominator(q);
  BigInt f = n / d;
  if (f * d > n) f -= 1;  // round toward negative infinity
  return BigRat(f);
}

}  // namespace ore
