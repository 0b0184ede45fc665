#pragma once

#include "ore/lambda.hpp"

#include <vector>

namespace ore {

/// Row-style Hermite normal form of the sublattice of Z^n spanned by the
/// given generator rows (n <= 2). Rows come back upper triangular with
/// positive pivots and reduced off-diagonal entries; zero rows are dropped.
std::vector<std::vector<BigInt>> hnf_rows(int n, std::vector<std::vector<BigInt>> gens);

/// A finitely generated subgroup H of one of the shipped Lambda groups,
/// with exact membership and canonical coset representatives. Internally the
/// generators are scaled to an integer lattice and put into Hermite normal
/// form.
class RatLattice {
 public:
  RatLattice(LambdaKind kind, const std::vector<LambdaValue>& gens);

  LambdaKind kind() const { return kind_; }
  bool trivial() const { return basis_.empty(); }
  const std::vector<std::vector<BigRat>>& basis() const { return basis_; }

  bool contains(const LambdaValue& v) const;
  /// Canonical representative of v + H (componentwise reduction against the
  /// triangular basis; representatives land in [0, pivot) per pivot row).
  LambdaValue reduce(const LambdaValue& v) const;

  /// Does (c + H) meet the interval between lo and hi? Ends are strict when
  /// the corresponding open flag is set. Lex kinds compare lexicographically.
  bool coset_meets_interval(const LambdaValue& c, const LambdaValue& lo, bool open_lo,
                            const LambdaValue& hi, bool open_hi) const;

  std::string str() const;

 private:
  LambdaKind kind_;
  std::vector<std::vector<BigRat>> basis_;  // HNF rows over the rationals
};

}  // namespace ore
