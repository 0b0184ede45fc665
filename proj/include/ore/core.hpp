#pragma once

#include "ore/lambda.hpp"
#include "ore/rng.hpp"

#include <concepts>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ore {

/// The capability record an ore instance supplies. Everything else — joins,
/// orthogonality, parallel transport, faces, the group operation, medians and
/// the metric — is derived here, uniformly from these primitives.
///
/// upper_bound must be complete: it returns some common upper bound of its
/// arguments exactly when one exists. The derived join turns any witness into
/// the least upper bound.
template <class O>
concept OreLike = requires(const O& o, const typename O::Element& e) {
  { o.identity() } -> std::same_as<typename O::Element>;
  { o.equal(e, e) } -> std::same_as<bool>;
  { o.leq(e, e) } -> std::same_as<bool>;
  { o.meet(e, e) } -> std::same_as<typename O::Element>;
  { o.concat(e, e) } -> std::same_as<typename O::Element>;
  { o.invert(e) } -> std::same_as<typename O::Element>;
  { o.length(e) } -> std::same_as<LambdaValue>;
  { o.is_admissible(e) } -> std::same_as<bool>;
  { o.quotient_left(e, e) } -> std::same_as<typename O::Element>;
  { o.upper_bound(e, e) } -> std::same_as<std::optional<typename O::Element>>;
  { o.format(e) } -> std::same_as<std::string>;
};

template <OreLike O>
using ElemT = typename O::Element;

template <OreLike O>
bool is_identity(const O& o, const ElemT<O>& f) {
  return o.equal(f, o.identity());
}

/// y with the face x removed on the left: the z with y = x . z.
template <OreLike O>
ElemT<O> face_left(const O& o, const ElemT<O>& y, const ElemT<O>& x) {
  return o.quotient_left(x, y);
}

/// y with the suffix z removed: the x with y = x . z.
template <OreLike O>
ElemT<O> face_right(const O& o, const ElemT<O>& y, const ElemT<O>& z) {
  return o.invert(o.quotient_left(o.invert(z), o.invert(y)));
}

/// Least upper bound. Any common upper bound serves as a witness; without
/// one the instance is asked for a witness and absence means no join. The
/// reduction of a witness to the least upper bound follows the constructive
/// existence proof: cancel the meet of the inverted complements.
template <OreLike O>
std::optional<ElemT<O>> join(const O& o, const ElemT<O>& f, const ElemT<O>& g,
                             const ElemT<O>* witness = nullptr) {
  ElemT<O> z = o.identity();
  if (witness) {
    z = *witness;
  } else {
    auto ub = o.upper_bound(f, g);
    if (!ub) return std::nullopt;
    z = *ub;
  }
  ElemT<O> a = o.quotient_left(f, z);
  ElemT<O> b = o.quotient_left(g, z);
  ElemT<O> c = o.meet(o.invert(a), o.invert(b));
  ElemT<O> a_prime = o.invert(o.quotient_left(c, o.invert(a)));
  return o.concat(f, a_prime);
}

template <OreLike O>
bool is_orthogonal(const O& o, const ElemT<O>& f, const ElemT<O>& g) {
  return is_identity(o, o.meet(f, g)) && o.upper_bound(f, g).has_value();
}

/// Parallel transport of x along y: the unique x' with y v x = y . x'.
template <OreLike O>
ElemT<O> transport(const O& o, const ElemT<O>& y, const ElemT<O>& x) {
  if (!is_identity(o, o.meet(y, x))) throw std::invalid_argument("transport: meet is not id");
  auto j = join(o, y, x);
  if (!j) throw std::invalid_argument("transport: join does not exist");
  return o.quotient_left(y, *j);
}

/// The group operation on admissible elements: cancel the common part
/// h = f^-1 ^ g, then concatenate geodesically.
template <OreLike O>
ElemT<O> star(const O& o, const ElemT<O>& f, const ElemT<O>& g) {
  if (!o.is_admissible(f) || !o.is_admissible(g)) {
    throw std::domain_error("star: inadmissible input");
  }
  ElemT<O> fi = o.invert(f);
  ElemT<O> h = o.meet(fi, g);
  ElemT<O> left = o.invert(o.quotient_left(h, fi));
  ElemT<O> right = o.quotient_left(h, g);
  return o.concat(left, right);
}

/// Median of three admissible elements. Evaluated from the basepoint b:
/// translating by b^-1 turns the median into the meet of the two translates,
/// and translating back is median-preserving.
template <OreLike O>
ElemT<O> median(const O& o, const ElemT<O>& a, const ElemT<O>& b, const ElemT<O>& c) {
  ElemT<O> bi = o.invert(b);
  return star(o, b, o.meet(star(o, bi, a), star(o, bi, c)));
}

/// The definitional route (a^b) v (b^c) v (a^c), evaluated with witnessed
/// joins. Returns absent when one of the joins cannot be assembled; used to
/// cross-check median() and the O4 axiom.
template <OreLike O>
std::optional<ElemT<O>> median_by_joins(const O& o, const ElemT<O>& a, const ElemT<O>& b,
                                        const ElemT<O>& c) {
  ElemT<O> ab = o.meet(a, b), bc = o.meet(b, c), ac = o.meet(a, c);
  auto u = join(o, ab, bc, &b);
  if (!u) return std::nullopt;
  ElemT<O> m = median(o, a, b, c);
  if (!o.leq(*u, m) || !o.leq(ac, m)) return std::nullopt;
  return join(o, *u, ac, &m);
}

template <OreLike O>
LambdaValue distance(const O& o, const ElemT<O>& f, const ElemT<O>& g) {
  return o.length(f) + o.length(g) - o.length(o.meet(f, g)).times(2);
}

/// Interval membership: c lies between a and b iff the translates of a and b
/// past c share no common part.
template <OreLike O>
bool in_interval(const O& o, const ElemT<O>& c, const ElemT<O>& a, const ElemT<O>& b) {
  ElemT<O> ci = o.invert(c);
  return is_identity(o, o.meet(star(o, ci, a), star(o, ci, b)));
}

/// Size of the largest pairwise-orthogonal subset, by exhaustive subset scan.
template <OreLike O>
int rank_of_family(const O& o, const std::vector<ElemT<O>>& s) {
  if (s.size() > 16) throw std::invalid_argument("rank_of_family: at most 16 elements");
  for (const auto& e : s) {
    if (is_identity(o, e)) throw std::invalid_argument("rank_of_family: identity not allowed");
  }
  int n = static_cast<int>(s.size());
  std::vector<unsigned> ok(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (is_orthogonal(o, s[i], s[j])) {
        ok[i] |= 1u << j;
        ok[j] |= 1u << i;
      }
    }
  }
  int best = 0;
  std::vector<char> valid(std::size_t(1) << n, 0);
  valid[0] = 1;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    unsigned low = mask & (~mask + 1u);
    int li = __builtin_ctz(low);
    unsigned rest = mask ^ low;
    if (valid[rest] && (ok[li] & rest) == rest) {
      valid[mask] = 1;
      best = std::max(best, __builtin_popcount(mask));
    }
  }
  return best;
}

/// Checks the three transport equalities of a pairwise-orthogonal admissible
/// triple. Returns a description of the first violation, or absent.
template <OreLike O>
std::optional<std::string> spanning_cube_violation(const O& o, const ElemT<O>& a,
                                                   const ElemT<O>& b, const ElemT<O>& c) {
  auto phi = [&](const ElemT<O>& along, const ElemT<O>& x) { return transport(o, along, x); };
  ElemT<O> ab = phi(a, b), ac = phi(a, c);
  ElemT<O> ba = phi(b, a), bc = phi(b, c);
  ElemT<O> ca = phi(c, a), cb = phi(c, b);
  if (!is_orthogonal(o, ab, ac)) return "transports along a are not orthogonal";
  if (!is_orthogonal(o, ba, bc)) return "transports along b are not orthogonal";
  if (!is_orthogonal(o, ca, cb)) return "transports along c are not orthogonal";
  if (!o.equal(phi(cb, ca), phi(bc, ba))) return "cube equality 1 fails";
  if (!o.equal(phi(ab, ac), phi(ba, bc))) return "cube equality 2 fails";
  if (!o.equal(phi(ca, cb), phi(ac, ab))) return "cube equality 3 fails";
  return std::nullopt;
}

struct AxiomCheck {
  std::string name;
  long cases = 0;
  long failures = 0;
  std::vector<std::string> notes;
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;

  AxiomCheck& at(const std::string& name) {
    for (auto& c : checks) {
      if (c.name == name) return c;
    }
    checks.push_back({name, 0, 0, {}});
    return checks.back();
  }
  bool all_pass() const {
    for (auto& c : checks) {
      if (c.failures > 0) return false;
    }
    return true;
  }
};

namespace detail {

inline void record(AxiomCheck& c, bool ok, const std::string& note) {
  ++c.cases;
  if (!ok) {
    ++c.failures;
    if (c.notes.size() < 5) c.notes.push_back(note);
  }
}

}  // namespace detail

/// Sampled verification of the ore axioms O1-O6, the length-function laws and
/// the spanning-a-cube identities. Failures are reported, never thrown.
template <OreLike O>
AxiomReport check_ore_axioms(const O& o, const std::vector<ElemT<O>>& samples, Rng& rng,
                             long tuples) {
  AxiomReport rep;
  const ElemT<O> id = o.identity();
  if (samples.empty()) return rep;
  auto pick = [&]() -> const ElemT<O>& { return samples[rng.below(samples.size())]; };

  std::vector<ElemT<O>> adm;
  for (const auto& s : samples) {
    if (o.is_admissible(s)) adm.push_back(s);
  }
  auto pick_adm = [&]() -> const ElemT<O>& { return adm[rng.below(adm.size())]; };

  auto& o1_order = rep.at("O1-partial-order");
  auto& o1_meet = rep.at("O1-meet-semilattice");
  auto& o1_bottom = rep.at("O1-bottom");
  auto& o2_monoid = rep.at("O2-monoid");
  auto& o2_cancel = rep.at("O2-cancellative");
  auto& o2_inv = rep.at("O2-involution");
  auto& o3 = rep.at("O3-order-is-divisibility");
  auto& o4 = rep.at("O4-median-semilattice");
  auto& o5 = rep.at("O5-admissible-complement");
  auto& o6 = rep.at("O6-transport-identities");
  auto& len = rep.at("length-function");
  auto& cube = rep.at("spanning-a-cube");
  auto& geo = rep.at("geodesic-concatenation");

  for (long it = 0; it < tuples; ++it) {
    const ElemT<O>&a = pick(), &b = pick(), &c = pick();

    // O1: order laws on constructed chains, meet laws, bottom element.
    detail::record(o1_order, o.leq(a, a), "not reflexive: " + o.format(a));
    if (o.leq(a, b) && o.leq(b, a)) {
      detail::record(o1_order, o.equal(a, b), "antisymmetry fails");
    }
    {
      ElemT<O> x = o.meet(a, b);
      ElemT<O> z = o.concat(b, c);
      detail::record(o1_order, !o.leq(x, b) || o.leq(x, z),
                     "transitivity fails through " + o.format(b));
      detail::record(o1_meet, o.leq(x, a) && o.leq(x, b), "meet not a lower bound");
      detail::record(o1_meet, o.equal(x, o.meet(b, a)), "meet not symmetric");
      detail::record(o1_meet, o.equal(o.meet(x, c), o.meet(a, o.meet(b, c))),
                     "meet not associative");
      ElemT<O> s = o.meet(c, a);
      if (o.leq(s, b)) {
        detail::record(o1_meet, o.leq(s, x), "meet not the greatest lower bound");
      }
    }
    detail::record(o1_bottom, o.leq(id, a), "id not the bottom element");

    // O2: monoid, cancellation, involution.
    detail::record(o2_monoid, o.equal(o.concat(o.concat(a, b), c), o.concat(a, o.concat(b, c))),
                   "concat not associative");
    detail::record(o2_monoid, o.equal(o.concat(a, id), a) && o.equal(o.concat(id, a), a),
                   "id not neutral");
    if (!o.equal(b, c)) {
      detail::record(o2_cancel, !o.equal(o.concat(a, b), o.concat(a, c)),
                     "left cancellation fails");
      detail::record(o2_cancel, !o.equal(o.concat(b, a), o.concat(c, a)),
                     "right cancellation fails");
    }
    detail::record(o2_inv, o.equal(o.invert(o.invert(a)), a), "involution not involutive");
    detail::record(o2_inv, o.equal(o.invert(o.concat(a, b)), o.concat(o.invert(b), o.invert(a))),
                   "involution not an anti-homomorphism");

    // O3 both directions.
    detail::record(o3, o.leq(a, o.concat(a, b)), "a not below a . b");
    if (o.leq(a, b)) {
      detail::record(o3, o.equal(b, o.concat(a, o.quotient_left(a, b))),
                     "divisibility witness fails");
    }

    // Length function.
    detail::record(len, o.length(id).is_zero(), "length of id nonzero");
    detail::record(len, is_identity(o, a) || o.length(a).is_positive(), "length not positive");
    detail::record(len, o.length(o.invert(a)) == o.length(a), "length not symmetric");
    detail::record(len, o.length(o.concat(a, b)) == o.length(a) + o.length(b),
                   "length not additive");
  }

  if (!adm.empty()) {
    for (long it = 0; it < tuples; ++it) {
      const ElemT<O>&a = pick_adm(), &b = pick_adm(), &c = pick_adm(), &x = pick_adm();

      // O4: both sides of the distributivity identity, with the median as
      // the join witness.
      auto m_joins = median_by_joins(o, a, b, c);
      ElemT<O> m = median(o, a, b, c);
      detail::record(o4, m_joins && o.equal(*m_joins, m),
                     "median join missing or disagrees with the derived median");
      if (m_joins) {
        ElemT<O> xab = o.meet(x, o.meet(a, b));
        ElemT<O> xbc = o.meet(x, o.meet(b, c));
        ElemT<O> xac = o.meet(x, o.meet(a, c));
        auto j1 = join(o, xab, xbc, &x);
        std::optional<ElemT<O>> lhs;
        if (j1) lhs = join(o, *j1, xac, &x);
        detail::record(o4, lhs && o.equal(*lhs, o.meet(x, *m_joins)),
                       "distributivity identity fails");
      }

      // Geodesic concatenation: star output stays admissible.
      detail::record(geo, o.is_admissible(star(o, a, b)), "star left the admissible set");

      // O5 / O6 on orthogonal pairs drawn from the samples. The pair (a
      // admissible, raw sample) exercises O5's hypothesis with possibly
      // inadmissible complement.
      const ElemT<O>& y_raw = pick();
      if (is_orthogonal(o, a, y_raw)) {
        ElemT<O> yp = transport(o, a, y_raw);
        if (o.is_admissible(yp)) {
          detail::record(o5, o.is_admissible(y_raw), "O5 fails: complement inadmissible");
        }
      }
      if (is_orthogonal(o, a, b)) {
        ElemT<O> bp = transport(o, a, b);   // y'
        ElemT<O> ap = transport(o, b, a);   // x'
        bool ok = o.is_admissible(bp) && o.is_admissible(ap);
        ElemT<O> ai = o.invert(a), bi = o.invert(b);
        ok = ok && is_orthogonal(o, ai, bp) && is_orthogonal(o, bi, ap);
        if (ok) {
          ElemT<O> lhs = o.concat(ai, b);
          ElemT<O> rhs_witness = o.concat(bi, a);
          auto j1 = join(o, ai, bp, &lhs);
          auto j2 = join(o, bi, ap, &rhs_witness);
          ok = j1 && j2 && o.equal(*j1, lhs) && o.equal(lhs, o.concat(bp, o.invert(ap))) &&
               o.equal(lhs, o.invert(*j2));
        }
        detail::record(o6, ok, "O6 fails on " + o.format(a) + " , " + o.format(b));

        // Pairwise-orthogonal triples feed the cube identities.
        if (is_orthogonal(o, a, c) && is_orthogonal(o, b, c)) {
          auto viol = spanning_cube_violation(o, a, b, c);
          detail::record(cube, !viol, viol ? *viol : "");
        }
      }
    }
  }
  return rep;
}

}  // namespace ore
