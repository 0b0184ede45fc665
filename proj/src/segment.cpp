#include "ore/segment.hpp"

#include <sstream>

namespace ore {

SegmentElement canonical_segment(LambdaKind kind, std::vector<Block> blocks) {
  std::vector<Block> out;
  LambdaValue total = LambdaValue::zero(kind);
  for (auto& b : blocks) {
    if (b.len.kind() != kind) throw std::invalid_argument("block length outside Lambda");
    if (b.len.is_negative()) throw std::invalid_argument("negative block length");
    if (b.len.is_zero()) continue;
    total = total + b.len;
    if (!out.empty() && out.back().label == b.label) {
      out.back().len = out.back().len + b.len;
    } else {
      out.push_back(std::move(b));
    }
  }
  return SegmentElement(std::move(out), std::move(total));
}

std::vector<Block> shifted_blocks(const LabelSystem& ls, std::vector<Block> blocks,
                                  const LambdaValue& shift) {
  if (shift.is_zero()) return blocks;
  for (auto& b : blocks) b.label = ls.act(shift, b.label);
  return blocks;
}

SegmentElement segment_prefix(const SegmentElement& f, const LambdaValue& t) {
  LambdaKind kind = f.length().kind();
  if (t.is_negative() || t > f.length()) throw std::invalid_argument("parameter out of range");
  std::vector<Block> out;
  LambdaValue acc = LambdaValue::zero(kind);
  for (const auto& b : f.blocks()) {
    if (acc + b.len <= t) {
      out.push_back(b);
      acc = acc + b.len;
      if (acc == t) break;
    } else {
      LambdaValue part = t - acc;
      if (part.is_positive()) out.push_back({part, b.label});
      break;
    }
  }
  return SegmentElement(std::move(out), t);
}

SegmentElement segment_suffix(const LabelSystem& ls, const SegmentElement& f,
                              const LambdaValue& t, const LambdaValue& shift) {
  LambdaKind kind = f.length().kind();
  if (t.is_negative() || t > f.length()) throw std::invalid_argument("parameter out of range");
  std::vector<Block> out;
  LambdaValue acc = LambdaValue::zero(kind);
  for (const auto& b : f.blocks()) {
    LambdaValue end = acc + b.len;
    if (end > t) {
      LambdaValue start = acc < t ? t : acc;
      out.push_back({end - start, ls.act(shift, b.label)});
    }
    acc = end;
  }
  return SegmentElement(std::move(out), f.length() - t);
}

SegmentElement segment_common_prefix(const SegmentElement& f, const SegmentElement& g) {
  LambdaKind kind = f.length().kind();
  std::vector<Block> out;
  LambdaValue total = LambdaValue::zero(kind);
  std::size_t n = std::min(f.blocks().size(), g.blocks().size());
  for (std::size_t i = 0; i < n; ++i) {
    const Block& a = f.blocks()[i];
    const Block& b = g.blocks()[i];
    if (a.label != b.label) break;
    LambdaValue common = a.len <= b.len ? a.len : b.len;
    out.push_back({common, a.label});
    total = total + common;
    if (a.len != b.len) break;
  }
  return SegmentElement(std::move(out), std::move(total));
}

bool segment_is_prefix(const SegmentElement& f, const SegmentElement& g) {
  if (f.is_identity()) return true;
  if (f.blocks().size() > g.blocks().size()) return false;
  std::size_t last = f.blocks().size() - 1;
  for (std::size_t i = 0; i < last; ++i) {
    if (!(f.blocks()[i] == g.blocks()[i])) return false;
  }
  const Block& a = f.blocks()[last];
  const Block& b = g.blocks()[last];
  return a.label == b.label && a.len <= b.len;
}

LambdaValue segment_signed_length(const SegmentElement& f) {
  LambdaValue s = LambdaValue::zero(f.length().kind());
  for (const auto& b : f.blocks()) s = b.label.starred ? s - b.len : s + b.len;
  return s;
}

std::string format_segment(const LabelSystem& ls, const SegmentElement& f) {
  if (f.is_identity()) return "id";
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < f.blocks().size(); ++i) {
    if (i) os << ", ";
    os << f.blocks()[i].len.str() << ':' << ls.format(f.blocks()[i].label);
  }
  os << ']';
  return os.str();
}

SegmentOre::SegmentOre(std::shared_ptr<const LabelSystem> labels) : labels_(std::move(labels)) {
  if (labels_->twist() != Twist::Anti) {
    throw std::invalid_argument("single-tree segment ore requires the Anti twist");
  }
}

SegmentElement SegmentOre::constant(const LambdaValue& len, const Label& l) const {
  return make({{len, l}});
}

SegmentElement SegmentOre::concat(const Element& a, const Element& b) const {
  std::vector<Block> blocks = a.blocks();
  auto tail = shifted_blocks(*labels_, b.blocks(), -a.length());
  blocks.insert(blocks.end(), tail.begin(), tail.end());
  return canonical_segment(lambda_kind(), std::move(blocks));
}

SegmentElement SegmentOre::invert(const Element& a) const {
  std::vector<Block> blocks;
  blocks.reserve(a.blocks().size());
  LambdaValue shift = -a.length();
  for (auto it = a.blocks().rbegin(); it != a.blocks().rend(); ++it) {
    blocks.push_back({it->len, labels_->act(shift, labels_->star(it->label))});
  }
  return SegmentElement(std::move(blocks), a.length());
}

bool SegmentOre::is_admissible(const Element& a) const {
  LambdaKind kind = lambda_kind();
  LambdaValue t = LambdaValue::zero(kind);
  const auto& blocks = a.blocks();
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    LambdaValue end = t + blocks[i].len;
    if (labels_->reflection_shift_exists(blocks[i].label, t, end)) return false;
    if (i + 1 < blocks.size()) {
      // Reflective match across the breakpoint: star of the left value
      // against the (2t)-shifted right value.
      Label left = labels_->star(blocks[i].label);
      Label right = labels_->act(end + end, blocks[i + 1].label);
      if (left == right) return false;
    }
    t = end;
  }
  return true;
}

SegmentElement SegmentOre::quotient_left(const Element& prefix, const Element& whole) const {
  if (!leq(prefix, whole)) throw std::invalid_argument("quotient_left: not a face");
  return segment_suffix(*labels_, whole, prefix.length(), prefix.length());
}

std::optional<SegmentElement> SegmentOre::upper_bound(const Element& a, const Element& b) const {
  if (leq(a, b)) return b;
  if (leq(b, a)) return a;
  return std::nullopt;
}

std::pair<SegmentElement, SegmentElement> SegmentOre::restrict(const Element& f,
                                                               const LambdaValue& t) const {
  return {segment_prefix(f, t), segment_suffix(*labels_, f, t, t)};
}

bool SegmentOre::supports_reduction() const {
  if (auto* coset = dynamic_cast<const CosetLabels*>(labels_.get())) return coset->primed();
  return dynamic_cast<const AtomLabels*>(labels_.get()) != nullptr;
}

AxisClass axis_stabilizer_check(const SegmentOre& ore, const SegmentElement& f, const Label& x) {
  const LabelSystem& ls = ore.labels();
  Label xs = ls.star(x);
  if (!f.is_identity()) {
    if (f.blocks().size() != 1) return AxisClass::OffAxis;
    const Label& image = f.blocks()[0].label;
    if (image != x && image != xs) return AxisClass::OffAxis;
  }
  return ls.stab_contains(x, f.length()) ? AxisClass::OnAxisStabilizing
                                         : AxisClass::OnAxisNotStabilizing;
}

std::optional<HalfValue> axis_position(const SegmentOre& ore, const SegmentElement& f,
                                       const Label& x) {
  if (f.is_identity()) return HalfValue::of(LambdaValue::zero(ore.lambda_kind()));
  if (f.blocks().size() != 1) return std::nullopt;
  const Label& image = f.blocks()[0].label;
  if (image == x) return HalfValue::of(f.length());
  if (image == ore.labels().star(x)) return HalfValue::of(-f.length());
  return std::nullopt;
}

}  // namespace ore
