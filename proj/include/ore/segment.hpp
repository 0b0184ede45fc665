#pragma once

#include "ore/label_system.hpp"

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ore {

struct Block {
  LambdaValue len;
  Label label;

  bool operator==(const Block& o) const { return len == o.len && label == o.label; }
};

/// A piecewise-constant map in canonical block form: no zero-length blocks,
/// adjacent blocks carry distinct labels. The canonical form is the unique
/// representative of its equivalence class among finite block lists.
class SegmentElement {
 public:
  explicit SegmentElement(LambdaKind k) : total_(LambdaValue::zero(k)) {}
  SegmentElement(std::vector<Block> blocks, LambdaValue total)
      : blocks_(std::move(blocks)), total_(std::move(total)) {}

  const std::vector<Block>& blocks() const { return blocks_; }
  const LambdaValue& length() const { return total_; }
  bool is_identity() const { return blocks_.empty(); }

  bool operator==(const SegmentElement& o) const { return blocks_ == o.blocks_; }
  bool operator!=(const SegmentElement& o) const { return !(*this == o); }

 private:
  std::vector<Block> blocks_;
  LambdaValue total_;
};

/// Canonicalize a raw block list: zero blocks dropped, equal neighbours
/// merged. Negative lengths are invalid.
SegmentElement canonical_segment(LambdaKind kind, std::vector<Block> blocks);

/// Block-level helpers shared by the single-tree and product ores.
std::vector<Block> shifted_blocks(const LabelSystem& ls, std::vector<Block> blocks,
                                  const LambdaValue& shift);
SegmentElement segment_prefix(const SegmentElement& f, const LambdaValue& t);
/// The suffix of f after t, with labels shifted so it starts at the origin.
SegmentElement segment_suffix(const LabelSystem& ls, const SegmentElement& f,
                              const LambdaValue& t, const LambdaValue& shift);
SegmentElement segment_common_prefix(const SegmentElement& f, const SegmentElement& g);
bool segment_is_prefix(const SegmentElement& f, const SegmentElement& g);
/// Signed length: unstarred block lengths minus starred ones.
LambdaValue segment_signed_length(const SegmentElement& f);
std::string format_segment(const LabelSystem& ls, const SegmentElement& f);

/// The ore of canonical block maps over a label system with the Anti twist:
/// concatenation shifts the tail by -len, inversion reverses, stars and
/// shifts, the order is restriction, and the meet is the longest common
/// prefix. Instances over coset labels are the Lambda-tree groups; atom
/// labels give the even-valence trees.
class SegmentOre {
 public:
  using Element = SegmentElement;

  explicit SegmentOre(std::shared_ptr<const LabelSystem> labels);

  const LabelSystem& labels() const { return *labels_; }
  LambdaKind lambda_kind() const { return labels_->lambda_kind(); }

  Element identity() const { return Element(lambda_kind()); }
  Element make(std::vector<Block> blocks) const {
    return canonical_segment(lambda_kind(), std::move(blocks));
  }
  Element constant(const LambdaValue& len, const Label& l) const;

  bool equal(const Element& a, const Element& b) const { return a == b; }
  bool leq(const Element& a, const Element& b) const { return segment_is_prefix(a, b); }
  Element meet(const Element& a, const Element& b) const { return segment_common_prefix(a, b); }
  Element concat(const Element& a, const Element& b) const;
  Element invert(const Element& a) const;
  LambdaValue length(const Element& a) const { return a.length(); }
  bool is_admissible(const Element& a) const;
  Element quotient_left(const Element& prefix, const Element& whole) const;
  std::optional<Element> upper_bound(const Element& a, const Element& b) const;
  std::string format(const Element& a) const { return format_segment(*labels_, a); }

  /// Split f = p . s at parameter t with the suffix re-based at the origin.
  std::pair<Element, Element> restrict(const Element& f, const LambdaValue& t) const;

  /// Whether the reduction retraction applies: the star must land in a
  /// disjoint copy so block interiors never cancel.
  bool supports_reduction() const;

 private:
  std::shared_ptr<const LabelSystem> labels_;
};

enum class AxisClass { OnAxisStabilizing, OnAxisNotStabilizing, OffAxis };

/// Standard-axis membership and stabilizer test for the axis through the
/// constant maps with image x or x*.
AxisClass axis_stabilizer_check(const SegmentOre& ore, const SegmentElement& f, const Label& x);

/// Signed position of an axis point: +len on the x side, -len on the starred
/// side. Only meaningful when f is on the axis of x.
std::optional<HalfValue> axis_position(const SegmentOre& ore, const SegmentElement& f,
                                       const Label& x);

}  // namespace ore
