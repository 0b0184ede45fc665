#pragma once

#include "ore/lambda.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ore {

struct WordLetter {
  std::uint32_t gen;
  std::int8_t sign;  // +1 or -1

  bool operator==(const WordLetter& o) const { return gen == o.gen && sign == o.sign; }
};

/// A word over a generator set and its formal inverses. No reducedness is
/// required; freely reduced words are exactly the admissible elements.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<WordLetter> letters) : letters_(std::move(letters)) {}

  const std::vector<WordLetter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  bool operator==(const Word& o) const { return letters_ == o.letters_; }
  bool operator!=(const Word& o) const { return !(*this == o); }

 private:
  std::vector<WordLetter> letters_;
};

/// Single-pass stack reduction. Structurally different from the meet-based
/// star of the ore core, so the two can cross-check each other.
Word free_reduce_oracle(const Word& w);

/// The free-group ore: concatenation, prefix order, longest-common-prefix
/// meet, reverse-with-sign-flip inversion, letter-count length.
class WordOre {
 public:
  using Element = Word;

  explicit WordOre(std::vector<std::string> generators);

  const std::vector<std::string>& generators() const { return gens_; }

  Element identity() const { return Word(); }
  Element letter(std::uint32_t gen, int sign) const;

  bool equal(const Element& a, const Element& b) const { return a == b; }
  bool leq(const Element& a, const Element& b) const;
  Element meet(const Element& a, const Element& b) const;
  Element concat(const Element& a, const Element& b) const;
  Element invert(const Element& a) const;
  LambdaValue length(const Element& a) const {
    return LambdaValue::integer(LambdaKind::Z, static_cast<long>(a.size()));
  }
  bool is_admissible(const Element& a) const;
  Element quotient_left(const Element& prefix, const Element& whole) const;
  std::optional<Element> upper_bound(const Element& a, const Element& b) const;
  std::string format(const Element& a) const;

 private:
  std::vector<std::string> gens_;
};

}  // namespace ore
