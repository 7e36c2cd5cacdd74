#pragma once

// Shared test helpers: a deterministic RNG, random field/algebra elements,
// and the standard example data built directly from code.

#include "rankone/config.hpp"
#include "rankone/ideals.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace testsupport {

using namespace rankone;

// splitmix64: tiny, seedable, good enough for test-case generation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t x = (state_ += 0x9e3779b97f4a7c15ULL);
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  // Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  long range(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::uint64_t state_;
};

inline Rational random_rational(Rng& rng) {
  return make_rational(Int(rng.range(-6, 6)), Int(rng.range(1, 4)));
}

// Random element of Q(zeta_order), occasionally zero.
inline Cyclotomic random_cyclotomic(Rng& rng, unsigned long order) {
  Cyclotomic out = Cyclotomic::zero();
  const int terms = static_cast<int>(rng.below(3));
  for (int t = 0; t < terms; ++t) {
    Cyclotomic z = Cyclotomic::root_of_unity(order, rng.range(0, static_cast<long>(order) - 1));
    out += z * Cyclotomic(random_rational(rng));
  }
  return out;
}

// Random group-algebra element over the datum's field, biased toward small
// sparse supports so interesting ideals appear often.
inline std::vector<Cyclotomic> random_kg(Rng& rng, const DatumPtr& d) {
  const int gs = d->group().size();
  std::vector<Cyclotomic> out(gs, Cyclotomic::zero());
  const int terms = 1 + static_cast<int>(rng.below(3));
  for (int t = 0; t < terms; ++t)
    out[rng.below(gs)] = random_cyclotomic(rng, d->field_order()) + Cyclotomic(rng.range(-2, 2));
  return out;
}

inline HopfElement random_hopf(Rng& rng, const DatumPtr& d) {
  HopfElement a = HopfElement::zero(d);
  const int terms = 1 + static_cast<int>(rng.below(4));
  for (int t = 0; t < terms; ++t) {
    const unsigned l = static_cast<unsigned>(rng.below(d->n()));
    const int h = static_cast<int>(rng.below(d->group().size()));
    a.set_coeff(l, h, a.coeff(l, h) + random_cyclotomic(rng, d->field_order()) +
                          Cyclotomic(rng.range(-2, 2)));
  }
  return a;
}

// The worked examples, built in code (the configs/ files mirror these).
inline DatumPtr klein_datum() {
  FiniteGroup g = FiniteGroup::abelian({2, 2}).with_labels({"1", "c", "b", "bc"});
  CharacterTable t = CharacterTable::for_abelian(g);
  return GroupDatum::validate(g, t, 3, 2, 0);
}

inline DatumPtr taft_datum(unsigned m) {
  FiniteGroup g = FiniteGroup::abelian({m});
  CharacterTable t = CharacterTable::for_abelian(g);
  return GroupDatum::validate(g, t, 1, 1, 0);
}

inline DatumPtr z4_nonnil_datum() {
  FiniteGroup g = FiniteGroup::abelian({4});
  CharacterTable t = CharacterTable::for_abelian(g);
  return GroupDatum::validate(g, t, 2, 1, 1);
}

inline DatumPtr z6_nonnil_datum() {
  FiniteGroup g = FiniteGroup::abelian({6});
  CharacterTable t = CharacterTable::for_abelian(g);
  return GroupDatum::validate(g, t, 3, 1, 1);
}

inline std::string config_path(const std::string& name) {
  return std::string(RANKONE_CONFIG_DIR) + "/" + name;
}

// Multiplicative order of chi as a character: lcm of the value orders.
inline unsigned long chi_order(const DatumPtr& d) {
  unsigned long ord = 1;
  for (int h = 0; h < d->group().size(); ++h)
    ord = lcm_ul(ord, d->chi(h).multiplicative_order());
  return ord;
}

// Independent count of the two-sided ideals of a nilpotent-type H.
//
// Every ideal decomposes by z-degree: I = sum_a z^a e_{L_a} with supports
// L_0 <= L_1 <= ... <= L_{n-1} and tau(L_a) <= L_{a+1} (left and right
// multiplication by z shift layers; group multiplication preserves them).
// Conversely every such tower is an ideal, so counting ideals is counting
// towers.  Runs over bitmasks; independent of the enumeration code.
inline unsigned long long tower_count(const DatumPtr& d) {
  const Tau tau = compute_tau(d);
  const std::size_t p = d->p();
  const unsigned n = d->n();
  const std::size_t masks = std::size_t(1) << p;
  auto tau_image = [&](std::size_t s) {
    std::size_t out = 0;
    for (std::size_t i = 0; i < p; ++i)
      if (s & (std::size_t(1) << i)) out |= std::size_t(1) << tau.perm[i];
    return out;
  };
  std::vector<unsigned long long> ways(masks, 1);  // continuations from the top layer
  for (unsigned a = 1; a < n; ++a) {
    std::vector<unsigned long long> next(masks, 0);
    for (std::size_t s = 0; s < masks; ++s) {
      const std::size_t lo = s | tau_image(s);
      for (std::size_t t = 0; t < masks; ++t)
        if ((t & lo) == lo) next[s] += ways[t];
    }
    ways.swap(next);
  }
  unsigned long long total = 0;
  for (std::size_t s = 0; s < masks; ++s) total += ways[s];
  return total;
}

}  // namespace testsupport
