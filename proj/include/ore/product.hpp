#pragma once

#include "ore/label_system.hpp"
#include "ore/segment.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace ore {

/// Tuples of block maps over N factor label systems, with the commuting
/// twist. Concatenation and inversion shift each factor by the action of the
/// signed outline tau through the rational action matrix M: the shift seen by
/// factor i under the vector r is (M r)_i.
class ProductOre {
 public:
  struct Element {
    std::vector<SegmentElement> factors;
    std::vector<LambdaValue> outline;
    std::vector<LambdaValue> tau;

    bool operator==(const Element& o) const { return factors == o.factors; }
  };

  ProductOre(std::vector<std::shared_ptr<const LabelSystem>> systems,
             std::vector<std::vector<BigRat>> action_matrix);

  int n_factors() const { return static_cast<int>(systems_.size()); }
  const LabelSystem& factor_labels(int i) const { return *systems_[i]; }
  const std::vector<std::vector<BigRat>>& action_matrix() const { return m_; }

  Element identity() const;
  Element make(std::vector<SegmentElement> factors) const;
  /// The tuple with f in factor i and id elsewhere.
  Element lift(int i, SegmentElement f) const;

  bool equal(const Element& a, const Element& b) const { return a == b; }
  bool leq(const Element& a, const Element& b) const;
  Element meet(const Element& a, const Element& b) const;
  Element concat(const Element& a, const Element& b) const;
  Element invert(const Element& a) const;
  LambdaValue length(const Element& a) const;
  bool is_admissible(const Element& a) const;
  Element quotient_left(const Element& prefix, const Element& whole) const;
  std::optional<Element> upper_bound(const Element& a, const Element& b) const;
  std::string format(const Element& a) const;

  /// (M r)_i for the full shift vector r.
  std::vector<LambdaValue> m_times(const std::vector<LambdaValue>& r) const;

  /// Stabilizer of the flat point x_n in factor n: {r : (M r)_n in H_n}.
  bool flat_stab_contains(const std::vector<LambdaValue>& r) const;

 private:
  void check_element(const Element& e) const;

  std::vector<std::shared_ptr<const LabelSystem>> systems_;
  std::vector<std::vector<BigRat>> m_;
};

enum class FlatClass { InFlatStabilizing, InFlatNotStabilizing, OffFlat };

/// Membership and stabilizer test for the standard flat through the
/// factor-wise constant maps with images x_n or x_n*.
FlatClass flat_stabilizer_check(const ProductOre& ore, const ProductOre::Element& f,
                                const std::vector<Label>& xs);

/// The witness g = f . f'^-1 of the irreducibility argument: f' substitutes a
/// distinct same-copy label per block, so f is a face of g, g is admissible
/// and the signed length of factor i vanishes. Throws when the label set has
/// no alternative labels.
ProductOre::Element zero_signed_extension(const ProductOre& ore, int factor,
                                          const SegmentElement& f);

/// Factor-tree distance between two factor-i elements.
LambdaValue factor_distance(const SegmentElement& a, const SegmentElement& b);

/// The lower bound d_i(f, h_i) >= len(f) for constant unstarred f and h with
/// vanishing signed length in factor i.
bool factor_distance_lower_bound_check(const ProductOre& ore, int factor,
                                       const SegmentElement& f, const ProductOre::Element& h);

}  // namespace ore
