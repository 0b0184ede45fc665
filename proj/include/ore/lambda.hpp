#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace ore {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// The totally ordered abelian groups shipped as length/metric codomains:
/// the integers, the rationals, and their left-dominant lexicographic pairs.
enum class LambdaKind { Z, Q, ZZLex, QQLex };

int lambda_arity(LambdaKind k);
bool lambda_integral(LambdaKind k);
std::string lambda_name(LambdaKind k);

/// An element of one of the shipped ordered groups. Components are exact
/// rationals; Z-flavoured kinds additionally keep every component integral.
/// Values are immutable after construction.
class LambdaValue {
 public:
  LambdaValue() : kind_(LambdaKind::Z) {}

  static LambdaValue zero(LambdaKind k) { return LambdaValue(k); }
  static LambdaValue scalar(LambdaKind k, BigRat v);
  static LambdaValue pair(LambdaKind k, BigRat a, BigRat b);
  static LambdaValue integer(LambdaKind k, long v) { return scalar(k, BigRat(v)); }

  LambdaKind kind() const { return kind_; }
  int arity() const { return lambda_arity(kind_); }
  const BigRat& comp(int i) const { return c_[i]; }

  LambdaValue operator+(const LambdaValue& o) const;
  LambdaValue operator-(const LambdaValue& o) const;
  LambdaValue operator-() const;

  /// Trichotomous comparison; throws on mismatched kinds.
  int cmp(const LambdaValue& o) const;
  bool operator==(const LambdaValue& o) const { return cmp(o) == 0; }
  bool operator!=(const LambdaValue& o) const { return cmp(o) != 0; }
  bool operator<(const LambdaValue& o) const { return cmp(o) < 0; }
  bool operator<=(const LambdaValue& o) const { return cmp(o) <= 0; }
  bool operator>(const LambdaValue& o) const { return cmp(o) > 0; }
  bool operator>=(const LambdaValue& o) const { return cmp(o) >= 0; }

  bool is_zero() const;
  bool is_positive() const { return cmp(zero(kind_)) > 0; }
  bool is_negative() const { return cmp(zero(kind_)) < 0; }
  LambdaValue abs() const { return is_negative() ? -*this : *this; }

  LambdaValue times(const BigInt& k) const;
  /// v/m when it lands back in this group, otherwise absent.
  std::optional<LambdaValue> divided_exact(const BigInt& m) const;

  std::string str() const;

 private:
  explicit LambdaValue(LambdaKind k) : kind_(k) {}
  void check_integral() const;

  LambdaKind kind_;
  BigRat c_[2];
};

/// The smallest positive element, for discretely ordered kinds.
std::optional<LambdaValue> lambda_min_positive(LambdaKind k);

/// An element lambda/m of the rationalization of a Lambda group. Kept in the
/// canonical form where m is maximally cancelled into the numerator, so
/// membership in the base group is just m == 1.
class HalfValue {
 public:
  HalfValue(LambdaValue num, BigInt den);
  static HalfValue of(LambdaValue v) { return HalfValue(std::move(v), 1); }

  const LambdaValue& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }

  /// The equal element of the base group, when there is one.
  std::optional<LambdaValue> in_lambda() const;

  HalfValue operator+(const HalfValue& o) const;
  HalfValue operator-() const { return HalfValue(-num_, den_); }
  HalfValue operator-(const HalfValue& o) const { return *this + (-o); }

  int cmp(const HalfValue& o) const;
  bool operator==(const HalfValue& o) const { return cmp(o) == 0; }
  bool operator!=(const HalfValue& o) const { return cmp(o) != 0; }
  bool operator<(const HalfValue& o) const { return cmp(o) < 0; }
  bool operator<=(const HalfValue& o) const { return cmp(o) <= 0; }

  std::string str() const;

 private:
  LambdaValue num_;
  BigInt den_;
};

BigRat rat_floor_div(const BigRat& a, const BigRat& b);
std::string rat_str(const BigRat& r);

}  // namespace ore
