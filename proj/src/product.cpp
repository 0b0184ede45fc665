#include "ore/product.hpp"

#include <sstream>

namespace ore {

ProductOre::ProductOre(std::vector<std::shared_ptr<const LabelSystem>> systems,
                       std::vector<std::vector<BigRat>> action_matrix)
    : systems_(std::move(systems)), m_(std::move(action_matrix)) {
  int n = n_factors();
  if (n < 1) throw std::invalid_argument("product ore needs at least one factor");
  if (n > 8) throw std::invalid_argument("product ore supports at most 8 factors");
  for (auto& s : systems_) {
    if (s->twist() != Twist::Commuting) {
      throw std::invalid_argument("product factors use the commuting twist");
    }
    if (s->lambda_kind() != LambdaKind::Q) {
      throw std::invalid_argument("product factors are parameterized over Q");
    }
  }
  if (static_cast<int>(m_.size()) != n) throw std::invalid_argument("action matrix shape");
  for (auto& row : m_) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("action matrix shape");
  }
}

void ProductOre::check_element(const Element& e) const {
  if (static_cast<int>(e.factors.size()) != n_factors()) {
    throw std::invalid_argument("mismatched product systems");
  }
}

ProductOre::Element ProductOre::identity() const {
  std::vector<SegmentElement> fs;
  for (int i = 0; i < n_factors(); ++i) fs.emplace_back(LambdaKind::Q);
  return make(std::move(fs));
}

ProductOre::Element ProductOre::make(std::vector<SegmentElement> factors) const {
  Element e;
  e.factors = std::move(factors);
  check_element(e);
  for (auto& f : e.factors) {
    e.outline.push_back(f.length());
    e.tau.push_back(segment_signed_length(f));
  }
  return e;
}

ProductOre::Element ProductOre::lift(int i, SegmentElement f) const {
  std::vector<SegmentElement> fs;
  for (int k = 0; k < n_factors(); ++k) {
    fs.push_back(k == i ? f : SegmentElement(LambdaKind::Q));
  }
  return make(std::move(fs));
}

std::vector<LambdaValue> ProductOre::m_times(const std::vector<LambdaValue>& r) const {
  int n = n_factors();
  std::vector<LambdaValue> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    BigRat acc = 0;
    for (int j = 0; j < n; ++j) acc += m_[i][j] * r[j].comp(0);
    out.push_back(LambdaValue::scalar(LambdaKind::Q, acc));
  }
  return out;
}

bool ProductOre::leq(const Element& a, const Element& b) const {
  check_element(a);
  check_element(b);
  for (int i = 0; i < n_factors(); ++i) {
    if (!segment_is_prefix(a.factors[i], b.factors[i])) return false;
  }
  return true;
}

ProductOre::Element ProductOre::meet(const Element& a, const Element& b) const {
  check_element(a);
  check_element(b);
  std::vector<SegmentElement> fs;
  for (int i = 0; i < n_factors(); ++i) {
    fs.push_back(segment_common_prefix(a.factors[i], b.factors[i]));
  }
  return make(std::move(fs));
}

ProductOre::Element ProductOre::concat(const Element& a, const Element& b) const {
  check_element(a);
  check_element(b);
  std::vector<LambdaValue> shift = m_times(a.tau);
  std::vector<SegmentElement> fs;
  for (int i = 0; i < n_factors(); ++i) {
    std::vector<Block> blocks = a.factors[i].blocks();
    auto tail = shifted_blocks(*systems_[i], b.factors[i].blocks(), shift[i]);
    blocks.insert(blocks.end(), tail.begin(), tail.end());
    fs.push_back(canonical_segment(LambdaKind::Q, std::move(blocks)));
  }
  return make(std::move(fs));
}

ProductOre::Element ProductOre::invert(const Element& a) const {
  check_element(a);
  std::vector<LambdaValue> shift = m_times(a.tau);
  std::vector<SegmentElement> fs;
  for (int i = 0; i < n_factors(); ++i) {
    std::vector<Block> blocks;
    const auto& src = a.factors[i].blocks();
    blocks.reserve(src.size());
    for (auto it = src.rbegin(); it != src.rend(); ++it) {
      blocks.push_back({it->len, systems_[i]->act(-shift[i], systems_[i]->star(it->label))});
    }
    fs.push_back(SegmentElement(std::move(blocks), a.factors[i].length()));
  }
  return make(std::move(fs));
}

LambdaValue ProductOre::length(const Element& a) const {
  LambdaValue total = LambdaValue::zero(LambdaKind::Q);
  for (const auto& f : a.factors) total = total + f.length();
  return total;
}

bool ProductOre::is_admissible(const Element& a) const {
  check_element(a);
  for (int i = 0; i < n_factors(); ++i) {
    const auto& blocks = a.factors[i].blocks();
    for (std::size_t k = 0; k + 1 < blocks.size(); ++k) {
      // Commuting twist: the reflective match across a breakpoint carries no
      // shift, the star of the left value equals the right value.
      if (systems_[i]->star(blocks[k].label) == blocks[k + 1].label) return false;
    }
  }
  return true;
}

ProductOre::Element ProductOre::quotient_left(const Element& prefix, const Element& whole) const {
  if (!leq(prefix, whole)) throw std::invalid_argument("quotient_left: not a face");
  std::vector<LambdaValue> shift = m_times(prefix.tau);
  std::vector<SegmentElement> fs;
  for (int i = 0; i < n_factors(); ++i) {
    fs.push_back(segment_suffix(*systems_[i], whole.factors[i], prefix.outline[i], -shift[i]));
  }
  return make(std::move(fs));
}

std::optional<ProductOre::Element> ProductOre::upper_bound(const Element& a,
                                                           const Element& b) const {
  check_element(a);
  check_element(b);
  std::vector<SegmentElement> fs;
  for (int i = 0; i < n_factors(); ++i) {
    if (segment_is_prefix(a.factors[i], b.factors[i])) {
      fs.push_back(b.factors[i]);
    } else if (segment_is_prefix(b.factors[i], a.factors[i])) {
      fs.push_back(a.factors[i]);
    } else {
      return std::nullopt;
    }
  }
  return make(std::move(fs));
}

std::string ProductOre::format(const Element& a) const {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < n_factors(); ++i) {
    if (i) os << " | ";
    os << format_segment(*systems_[i], a.factors[i]);
  }
  os << ')';
  return os.str();
}

bool ProductOre::flat_stab_contains(const std::vector<LambdaValue>& r) const {
  std::vector<LambdaValue> mr = m_times(r);
  for (int i = 0; i < n_factors(); ++i) {
    auto* coset = dynamic_cast<const CosetLabels*>(systems_[i].get());
    if (!coset) throw std::invalid_argument("flat stabilizers need coset or point factors");
    if (!coset->subgroup().contains(mr[i])) return false;
  }
  return true;
}

FlatClass flat_stabilizer_check(const ProductOre& ore, const ProductOre::Element& f,
                                const std::vector<Label>& xs) {
  if (static_cast<int>(xs.size()) != ore.n_factors()) {
    throw std::invalid_argument("one flat label per factor expected");
  }
  for (int i = 0; i < ore.n_factors(); ++i) {
    const auto& blocks = f.factors[i].blocks();
    if (blocks.empty()) continue;
    if (blocks.size() > 1) return FlatClass::OffFlat;
    const Label& image = blocks[0].label;
    if (image != xs[i] && image != ore.factor_labels(i).star(xs[i])) return FlatClass::OffFlat;
  }
  return ore.flat_stab_contains(f.tau) ? FlatClass::InFlatStabilizing
                                       : FlatClass::InFlatNotStabilizing;
}

ProductOre::Element zero_signed_extension(const ProductOre& ore, int factor,
                                          const SegmentElement& f) {
  const LabelSystem& ls = ore.factor_labels(factor);
  std::vector<Block> alt;
  alt.reserve(f.blocks().size());
  for (const auto& b : f.blocks()) {
    auto l = ls.alternate(b.label);
    if (!l) throw std::invalid_argument("zero_signed_extension: no alternative label available");
    alt.push_back({b.len, *l});
  }
  SegmentElement fp = canonical_segment(LambdaKind::Q, std::move(alt));
  auto lifted = ore.lift(factor, f);
  auto g = ore.concat(lifted, ore.invert(ore.lift(factor, fp)));
  if (!ore.is_admissible(g) || !ore.leq(lifted, g) || !g.tau[factor].is_zero()) {
    throw std::logic_error("zero_signed_extension: construction failed");
  }
  return g;
}

LambdaValue factor_distance(const SegmentElement& a, const SegmentElement& b) {
  return a.length() + b.length() - segment_common_prefix(a, b).length().times(2);
}

bool factor_distance_lower_bound_check(const ProductOre& ore, int factor,
                                       const SegmentElement& f, const ProductOre::Element& h) {
  if (f.blocks().size() != 1 || f.blocks()[0].label.starred) {
    throw std::invalid_argument("expected a constant unstarred factor element");
  }
  if (!h.tau[factor].is_zero()) {
    throw std::invalid_argument("expected vanishing signed length in the chosen factor");
  }
  return factor_distance(f, h.factors[factor]).cmp(f.length()) >= 0;
}

}  // namespace ore
