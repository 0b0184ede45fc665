#pragma once

#include "ore/lambda.hpp"
#include "ore/lattice.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace ore {

/// How the involution interacts with the shift action on labels:
/// Anti:      (s . x)* = (-s) . x*   (the single-tree setting)
/// Commuting: (s . x)* = s . x*      (the product-of-trees setting)
enum class Twist { Anti, Commuting };

/// A point of the label set X. Coset and point kinds carry a canonical coset
/// representative; atom kinds carry an index. The starred flag marks the
/// primed copy for systems that keep one.
struct Label {
  LambdaValue rep;
  int atom = -1;
  bool starred = false;

  bool operator==(const Label& o) const {
    return atom == o.atom && starred == o.starred && (atom >= 0 || rep == o.rep);
  }
  bool operator!=(const Label& o) const { return !(*this == o); }
};

/// Capability record for a shift-and-star action on a label set. All label
/// values handed out are canonical, so equality is structural.
class LabelSystem {
 public:
  virtual ~LabelSystem() = default;

  virtual Twist twist() const = 0;
  virtual LambdaKind lambda_kind() const = 0;

  virtual Label star(const Label& l) const = 0;
  virtual Label act(const LambdaValue& shift, const Label& l) const = 0;
  virtual bool stab_contains(const Label& l, const LambdaValue& shift) const = 0;

  /// Whether a block with this label and the given endpoints contains an
  /// interior reflection point, i.e. some t strictly inside with
  /// act(2t, l) == star(l). Constant false whenever the star swaps disjoint
  /// copies.
  virtual bool reflection_shift_exists(const Label& l, const LambdaValue& lo,
                                       const LambdaValue& hi) const = 0;

  /// A different label in the same copy, if the label set has one. Used by
  /// the zero-signed extension construction.
  virtual std::optional<Label> alternate(const Label& l) const = 0;

  virtual std::string format(const Label& l) const = 0;

  bool eq(const Label& a, const Label& b) const { return a == b; }
};

/// X = (Lambda/H) together with a primed copy when `primed` is set; the star
/// swaps the copies and negates (primed), or is plain negation (unprimed).
/// With no generators and primed copies this degenerates to the "rational
/// points of the line" system used by product factors.
class CosetLabels final : public LabelSystem {
 public:
  CosetLabels(LambdaKind kind, std::vector<LambdaValue> h_gens, bool primed, Twist twist);

  Twist twist() const override { return twist_; }
  LambdaKind lambda_kind() const override { return kind_; }
  Label star(const Label& l) const override;
  Label act(const LambdaValue& shift, const Label& l) const override;
  bool stab_contains(const Label& l, const LambdaValue& shift) const override;
  bool reflection_shift_exists(const Label& l, const LambdaValue& lo,
                               const LambdaValue& hi) const override;
  std::optional<Label> alternate(const Label& l) const override;
  std::string format(const Label& l) const override;

  Label make(const LambdaValue& rep, bool starred) const;
  bool primed() const { return primed_; }
  const RatLattice& subgroup() const { return h_; }

 private:
  LambdaKind kind_;
  RatLattice h_;
  bool primed_;
  Twist twist_;
};

/// Finitely many named points with the trivial shift action; the star pairs
/// each name with its starred twin, so X has 2 * |names| elements.
class AtomLabels final : public LabelSystem {
 public:
  AtomLabels(LambdaKind kind, std::vector<std::string> names, Twist twist);

  Twist twist() const override { return twist_; }
  LambdaKind lambda_kind() const override { return kind_; }
  Label star(const Label& l) const override;
  Label act(const LambdaValue& shift, const Label& l) const override;
  bool stab_contains(const Label& l, const LambdaValue& shift) const override;
  bool reflection_shift_exists(const Label& l, const LambdaValue& lo,
                               const LambdaValue& hi) const override;
  std::optional<Label> alternate(const Label& l) const override;
  std::string format(const Label& l) const override;

  Label make(int atom, bool starred) const;
  int count() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }

 private:
  LambdaKind kind_;
  std::vector<std::string> names_;
  Twist twist_;
};

}  // namespace ore
