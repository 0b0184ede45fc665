#include "ore/lattice.hpp"

#include <sstream>

namespace ore {

namespace mp = boost::multiprecision;

namespace {

BigInt xgcd(const BigInt& a, const BigInt& b, BigInt& x, BigInt& y) {
  if (b == 0) {
    x = (a >= 0) ? 1 : -1;
    y = 0;
    return mp::abs(a);
  }
  BigInt x1, y1;
  BigInt g = xgcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

}  // namespace

std::vector<std::vector<BigInt>> hnf_rows(int n, std::vector<std::vector<BigInt>> gens) {
  if (n < 1 || n > 2) throw std::invalid_argument("hnf_rows supports n in {1,2}");
  std::vector<std::vector<BigInt>> rows;
  for (auto& g : gens) {
    if (static_cast<int>(g.size()) != n) throw std::invalid_argument("generator arity mismatch");
    bool zero = true;
    for (auto& c : g) zero = zero && c == 0;
    if (!zero) rows.push_back(std::move(g));
  }
  if (rows.empty()) return {};

  if (n == 1) {
    BigInt g = 0;
    for (auto& r : rows) g = mp::gcd(g, r[0]);
    return {{g}};
  }

  // Fold all rows with a nonzero first entry into a single pivot row.
  std::vector<BigInt> pivot = {0, 0};
  std::vector<std::vector<BigInt>> rest;
  for (auto& r : rows) {
    if (r[0] == 0) {
      rest.push_back(r);
      continue;
    }
    if (pivot[0] == 0) {
      pivot = r;
      continue;
    }
    BigInt x, y;
    BigInt g = xgcd(pivot[0], r[0], x, y);
    std::vector<BigInt> np = {g, x * pivot[1] + y * r[1]};
    // The combination eliminating the first column stays in the lattice.
    std::vector<BigInt> elim = {0, (pivot[0] / g) * r[1] - (r[0] / g) * pivot[1]};
    pivot = np;
    if (elim[1] != 0) rest.push_back(elim);
  }
  if (pivot[0] < 0) {
    pivot[0] = -pivot[0];
    pivot[1] = -pivot[1];
  }

  BigInt h = 0;
  for (auto& r : rest) h = mp::gcd(h, r[1]);

  std::vector<std::vector<BigInt>> out;
  if (pivot[0] != 0) {
    if (h != 0) {
      BigInt q = pivot[1] / h;
      if (q * h > pivot[1]) q -= 1;
      pivot[1] -= q * h;
    }
    out.push_back(pivot);
  }
  if (h != 0) out.push_back({BigInt(0), h});
  return out;
}

RatLattice::RatLattice(LambdaKind kind, const std::vector<LambdaValue>& gens) : kind_(kind) {
  int n = lambda_arity(kind);
  BigInt denom = 1;
  for (auto& g : gens) {
    if (g.kind() != kind) throw std::invalid_argument("H generator outside Lambda");
    for (int i = 0; i < n; ++i) denom = mp::lcm(denom, mp::denominator(g.comp(i)));
  }
  std::vector<std::vector<BigInt>> scaled;
  for (auto& g : gens) {
    std::vector<BigInt> row(n);
    for (int i = 0; i < n; ++i) {
      BigRat s = g.comp(i) * BigRat(denom);
      row[i] = mp::numerator(s);
    }
    scaled.push_back(std::move(row));
  }
  for (auto& row : hnf_rows(n, std::move(scaled))) {
    std::vector<BigRat> r(n);
    for (int i = 0; i < n; ++i) r[i] = BigRat(row[i]) / BigRat(denom);
    basis_.push_back(std::move(r));
  }
}

LambdaValue RatLattice::reduce(const LambdaValue& v) const {
  if (v.kind() != kind_) throw std::invalid_argument("reduce: value outside Lambda");
  int n = lambda_arity(kind_);
  std::vector<BigRat> c(n);
  for (int i = 0; i < n; ++i) c[i] = v.comp(i);
  int col = 0;
  for (auto& row : basis_) {
    while (col < n && row[col] == 0) ++col;
    if (col >= n) break;
    BigRat q = rat_floor_div(c[col], row[col]);
    for (int i = col; i < n; ++i) c[i] -= q * row[i];
  }
  if (n == 1) return LambdaValue::scalar(kind_, c[0]);
  return LambdaValue::pair(kind_, c[0], c[1]);
}

bool RatLattice::contains(const LambdaValue& v) const { return reduce(v).is_zero(); }

namespace {

// Does the progression c + gamma*Z meet the (possibly degenerate) interval?
// gamma may be 0, meaning the single point c. Bounds may be absent.
bool prog_meets(const BigRat& c, const BigRat& gamma, const BigRat* lo, bool open_lo,
                const BigRat* hi, bool open_hi) {
  if (gamma == 0) {
    if (lo && (open_lo ? !(c > *lo) : !(c >= *lo))) return false;
    if (hi && (open_hi ? !(c < *hi) : !(c <= *hi))) return false;
    return true;
  }
  BigRat g = gamma > 0 ? gamma : BigRat(-gamma);
  bool have_min = false, have_max = false;
  BigRat kmin, kmax;
  if (lo) {
    BigRat t = (*lo - c) / g;
    kmin = -rat_floor_div(-t, BigRat(1));  // ceil(t)
    if (open_lo && kmin == t) kmin += 1;
    have_min = true;
  }
  if (hi) {
    BigRat t = (*hi - c) / g;
    kmax = rat_floor_div(t, BigRat(1));
    if (open_hi && kmax == t) kmax -= 1;
    have_max = true;
  }
  if (have_min && have_max) return kmin <= kmax;
  return true;
}

}  // namespace

bool RatLattice::coset_meets_interval(const LambdaValue& c, const LambdaValue& lo, bool open_lo,
                                      const LambdaValue& hi, bool open_hi) const {
  if (lo.cmp(hi) > 0) return false;
  int n = lambda_arity(kind_);
  if (n == 1) {
    BigRat gamma = basis_.empty() ? BigRat(0) : basis_[0][0];
    BigRat l = lo.comp(0), h = hi.comp(0);
    return prog_meets(c.comp(0), gamma, &l, open_lo, &h, open_hi);
  }

  // Lex pairs. Split the basis into the pivot row (gamma0, delta0) with
  // gamma0 > 0, if present, and the pure second-component row (0, delta1).
  BigRat gamma0 = 0, delta0 = 0, delta1 = 0;
  for (auto& row : basis_) {
    if (row[0] != 0) {
      gamma0 = row[0];
      delta0 = row[1];
    } else {
      delta1 = row[1];
    }
  }
  BigRat lo0 = lo.comp(0), lo1 = lo.comp(1), hi0 = hi.comp(0), hi1 = hi.comp(1);
  BigRat c0 = c.comp(0), c1 = c.comp(1);

  auto second_at = [&](const BigRat& k) { return c1 + k * delta0; };

  if (gamma0 == 0) {
    if (c0 < lo0 || c0 > hi0) return false;
    if (c0 > lo0 && c0 < hi0) return true;
    if (lo0 == hi0) {
      if (c0 != lo0) return false;
      return prog_meets(c1, delta1, &lo1, open_lo, &hi1, open_hi);
    }
    if (c0 == lo0) return prog_meets(c1, delta1, &lo1, open_lo, nullptr, false);
    return prog_meets(c1, delta1, nullptr, false, &hi1, open_hi);
  }

  if (lo0 == hi0) {
    // Need c0 + k*gamma0 == lo0 exactly.
    BigRat k = (lo0 - c0) / gamma0;
    if (mp::denominator(k) != 1) return false;
    return prog_meets(second_at(k), delta1, &lo1, open_lo, &hi1, open_hi);
  }

  // Any k with the first component strictly inside works.
  if (prog_meets(c0, gamma0, &lo0, true, &hi0, true)) return true;
  // First component pinned on the lower boundary.
  BigRat kl = (lo0 - c0) / gamma0;
  if (mp::denominator(kl) == 1 &&
      prog_meets(second_at(kl), delta1, &lo1, open_lo, nullptr, false)) {
    return true;
  }
  // Or on the upper boundary.
  BigRat kh = (hi0 - c0) / gamma0;
  if (mp::denominator(kh) == 1 &&
      prog_meets(second_at(kh), delta1, nullptr, false, &hi1, open_hi)) {
    return true;
  }
  return false;
}

std::string RatLattice::str() const {
  std::ostringstream os;
  os << '<';
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (i) os << ", ";
    if (lambda_arity(kind_) == 1) {
      os << rat_str(basis_[i][0]);
    } else {
      os << '(' << rat_str(basis_[i][0]) << ", " << rat_str(basis_[i][1]) << ')';
    }
  }
  os << '>';
  return os.str();
}

}  // namespace ore
