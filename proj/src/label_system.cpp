#include "ore/label_system.hpp"

namespace ore {

CosetLabels::CosetLabels(LambdaKind kind, std::vector<LambdaValue> h_gens, bool primed,
                         Twist twist)
    : kind_(kind), h_(kind, h_gens), primed_(primed), twist_(twist) {
  if (!primed_ && twist_ == Twist::Commuting) {
    throw std::invalid_argument("commuting twist requires the primed copy");
  }
}

Label CosetLabels::make(const LambdaValue& rep, bool starred) const {
  if (starred && !primed_) throw std::invalid_argument("label system has no starred copy");
  Label l;
  l.rep = h_.reduce(rep);
  l.starred = starred;
  return l;
}

Label CosetLabels::star(const Label& l) const {
  if (!primed_) return make(-l.rep, false);
  if (twist_ == Twist::Commuting) {
    Label r = l;
    r.starred = !l.starred;
    return r;
  }
  return make(-l.rep, !l.starred);
}

Label CosetLabels::act(const LambdaValue& shift, const Label& l) const {
  return make(l.rep + shift, l.starred);
}

bool CosetLabels::stab_contains(const Label&, const LambdaValue& shift) const {
  return h_.contains(shift);
}

bool CosetLabels::reflection_shift_exists(const Label& l, const LambdaValue& lo,
                                          const LambdaValue& hi) const {
  if (primed_) return false;  // the star lands in the other copy
  // Anti twist, star = negation: need t strictly inside with 2t + rep = -rep
  // mod H, i.e. 2t in (-2 rep) + H. Discrete kinds need room for a positive
  // cancellation radius on both sides.
  LambdaValue a = lo, b = hi;
  bool open = true;
  if (auto mp = lambda_min_positive(kind_)) {
    a = a + *mp;
    b = b - *mp;
    open = false;
    if (a.cmp(b) > 0) return false;
  }
  LambdaValue c = -(l.rep + l.rep);
  return h_.coset_meets_interval(c, a + a, open, b + b, open);
}

std::optional<Label> CosetLabels::alternate(const Label& l) const {
  // Any shift outside H moves every coset to a different one.
  static const long probes[] = {1, 2, 3};
  for (long p : probes) {
    for (long q = 1; q <= 3; ++q) {
      LambdaValue d = lambda_arity(kind_) == 1
                          ? LambdaValue::scalar(kind_, BigRat(p, lambda_integral(kind_) ? 1 : q))
                          : LambdaValue::pair(kind_, BigRat(p), BigRat(q));
      if (lambda_integral(kind_) && q > 1) continue;
      if (!h_.contains(d)) return act(d, l);
    }
  }
  return std::nullopt;
}

std::string CosetLabels::format(const Label& l) const {
  std::string core = l.rep.str();
  if (!h_.trivial()) core += "+H";
  if (l.starred) return "(" + core + ")'";
  if (!h_.trivial() || l.rep.str().find(' ') != std::string::npos) return core;
  return core;
}

AtomLabels::AtomLabels(LambdaKind kind, std::vector<std::string> names, Twist twist)
    : kind_(kind), names_(std::move(names)), twist_(twist) {
  if (names_.empty()) throw std::invalid_argument("atom system needs at least one name");
}

Label AtomLabels::make(int atom, bool starred) const {
  if (atom < 0 || atom >= count()) throw std::invalid_argument("atom index out of range");
  Label l;
  l.atom = atom;
  l.starred = starred;
  return l;
}

Label AtomLabels::star(const Label& l) const { return make(l.atom, !l.starred); }

Label AtomLabels::act(const LambdaValue&, const Label& l) const { return l; }

bool AtomLabels::stab_contains(const Label&, const LambdaValue&) const {
  return true;  // trivial action
}

bool AtomLabels::reflection_shift_exists(const Label&, const LambdaValue&,
                                         const LambdaValue&) const {
  return false;
}

std::optional<Label> AtomLabels::alternate(const Label& l) const {
  if (count() < 2) return std::nullopt;
  return make((l.atom + 1) % count(), l.starred);
}

std::string AtomLabels::format(const Label& l) const {
  return names_[l.atom] + (l.starred ? "*" : "");
}

}  // namespace ore
