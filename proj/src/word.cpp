#include "ore/word.hpp"

#include <sstream>
#include <stdexcept>

namespace ore {

Word free_reduce_oracle(const Word& w) {
  std::vector<WordLetter> stack;
  for (const auto& l : w.letters()) {
    if (!stack.empty() && stack.back().gen == l.gen && stack.back().sign == -l.sign) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return Word(std::move(stack));
}

WordOre::WordOre(std::vector<std::string> generators) : gens_(std::move(generators)) {
  if (gens_.empty()) throw std::invalid_argument("word ore needs a nonempty generator set");
}

Word WordOre::letter(std::uint32_t gen, int sign) const {
  if (gen >= gens_.size()) throw std::invalid_argument("generator out of range");
  return Word({{gen, static_cast<std::int8_t>(sign < 0 ? -1 : 1)}});
}

bool WordOre::leq(const Element& a, const Element& b) const {
  if (a.size() > b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a.letters()[i] == b.letters()[i])) return false;
  }
  return true;
}

Word WordOre::meet(const Element& a, const Element& b) const {
  std::size_t n = std::min(a.size(), b.size());
  std::vector<WordLetter> out;
  for (std::size_t i = 0; i < n && a.letters()[i] == b.letters()[i]; ++i) {
    out.push_back(a.letters()[i]);
  }
  return Word(std::move(out));
}

Word WordOre::concat(const Element& a, const Element& b) const {
  std::vector<WordLetter> out = a.letters();
  out.insert(out.end(), b.letters().begin(), b.letters().end());
  return Word(std::move(out));
}

Word WordOre::invert(const Element& a) const {
  std::vector<WordLetter> out;
  out.reserve(a.size());
  for (auto it = a.letters().rbegin(); it != a.letters().rend(); ++it) {
    out.push_back({it->gen, static_cast<std::int8_t>(-it->sign)});
  }
  return Word(std::move(out));
}

bool WordOre::is_admissible(const Element& a) const {
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    if (a.letters()[i].gen == a.letters()[i + 1].gen &&
        a.letters()[i].sign == -a.letters()[i + 1].sign) {
      return false;
    }
  }
  return true;
}

Word WordOre::quotient_left(const Element& prefix, const Element& whole) const {
  if (!leq(prefix, whole)) throw std::invalid_argument("quotient_left: not a face");
  return Word(std::vector<WordLetter>(whole.letters().begin() + prefix.size(),
                                      whole.letters().end()));
}

std::optional<Word> WordOre::upper_bound(const Element& a, const Element& b) const {
  if (leq(a, b)) return b;
  if (leq(b, a)) return a;
  return std::nullopt;
}

std::string WordOre::format(const Element& a) const {
  if (a.empty()) return "id";
  std::ostringstream os;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) os << '.';
    os << gens_[a.letters()[i].gen];
    if (a.letters()[i].sign < 0) os << "^-";
  }
  return os.str();
}

}  // namespace ore
