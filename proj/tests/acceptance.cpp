// Acceptance suite: eight exact criteria, one verdict line each.
// Every comparison is exact; there is no tolerance anywhere.

#include "rankone/config.hpp"
#include "rankone/ideals.hpp"

#include "support.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

using namespace rankone;

namespace {

struct Failure {
  std::string message;
};

#define REQUIRE(cond)                                                              \
  do {                                                                             \
    if (!(cond))                                                                   \
      throw Failure{std::string("requirement failed: ") + #cond + " (line " +     \
                    std::to_string(__LINE__) + ")"};                               \
  } while (0)

const char* kNilpotentConfigs[] = {"klein.cfg", "taft2.cfg", "taft3.cfg", "taft4.cfg",
                                   "taft5.cfg"};
const char* kNonNilpotentConfigs[] = {"z4_nonnil.cfg", "z6_nonnil.cfg"};
const char* kAllConfigs[] = {"klein.cfg",      "taft2.cfg",      "taft3.cfg",
                             "taft4.cfg",      "taft5.cfg",      "z4_nonnil.cfg",
                             "z6_nonnil.cfg",  "s3xz2.cfg"};

DatumPtr datum(const std::string& name) {
  static std::map<std::string, DatumPtr> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, load_datum_file(testsupport::config_path(name))).first;
  return it->second;
}

const std::vector<Ideal>& klein_enumeration() {
  static const std::vector<Ideal> ideals = enumerate_ideals(datum("klein.cfg"));
  return ideals;
}

Ideal complement_ideal(const DatumPtr& d, const std::vector<std::size_t>& excluded) {
  std::vector<std::size_t> support;
  for (std::size_t t = 0; t < d->p(); ++t)
    if (std::find(excluded.begin(), excluded.end(), t) == excluded.end()) support.push_back(t);
  return ideal_from_generators(d, {idempotent_generator(d, 0, support)});
}

HopfElement z_power(const DatumPtr& d, unsigned m) {
  if (m < d->n()) return HopfElement::basis(d, m, d->group().identity());
  if (m == d->n()) {
    if (d->alpha() == 0) return HopfElement::zero(d);
    return HopfElement::basis(d, 0, d->g_pow_n()) - HopfElement::one(d);
  }
  return z_power(d, d->n()) * z_power(d, m - d->n());
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<Cyclotomic> nonzero_kg(testsupport::Rng& rng, const DatumPtr& d) {
  for (;;) {
    std::vector<Cyclotomic> kg = testsupport::random_kg(rng, d);
    for (const Cyclotomic& v : kg)
      if (!v.is_zero()) return kg;
  }
}

bool strict_superset(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  return a.size() > b.size() && std::includes(a.begin(), a.end(), b.begin(), b.end());
}

// 200 seeded trips: the chain regenerates the raw two-sided closure of the
// inputs and keeps the strict staircase shape (descending exponents,
// strictly nested supports), and lowest_term recovers its last term.
void run_round_trips(testsupport::Rng& rng, const DatumPtr& d) {
  for (int trip = 0; trip < 200; ++trip) {
    const int count = static_cast<int>(rng.range(1, 3));
    std::vector<std::pair<unsigned, std::vector<Cyclotomic>>> pairs;
    std::vector<HopfElement> gens;
    for (int g = 0; g < count; ++g) {
      const unsigned m = static_cast<unsigned>(rng.below(d->n()));
      std::vector<Cyclotomic> kg = nonzero_kg(rng, d);
      gens.push_back(HopfElement::from_group_algebra(d, kg, m));
      pairs.emplace_back(m, std::move(kg));
    }
    const Ideal I = normal_form(d, pairs);
    REQUIRE(ideal_equal(I, ideal_from_generators(d, gens)));
    REQUIRE(I.normal_form.has_value());
    const std::vector<NormalFormTerm>& chain = *I.normal_form;
    REQUIRE(!chain.empty());
    for (std::size_t s = 0; s < chain.size(); ++s) {
      REQUIRE(!chain[s].support.empty());
      REQUIRE(chain[s].exponent < d->n());
      REQUIRE(std::is_sorted(chain[s].support.begin(), chain[s].support.end()));
      if (s + 1 < chain.size()) {
        REQUIRE(chain[s].exponent > chain[s + 1].exponent);
        REQUIRE(strict_superset(chain[s].support, chain[s + 1].support));
      }
    }
    // Lowest-term invariance is a nilpotent-type fact; with z^n = g^n - 1
    // a degree-1 generator already reaches degree 0.
    if (d->kind() == DatumKind::Nilpotent) {
      const NormalFormTerm low = lowest_term(I);
      REQUIRE(low.exponent == chain.back().exponent);
      REQUIRE(low.support == chain.back().support);
    }
    REQUIRE(ideal_member(normal_form_element(I), I));
  }
}

// Criterion 1: enumeration of the Klein datum returns 49 distinct ideals
// and they are exactly the 49 expected generator expressions.
void criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  const DatumPtr d = datum("klein.cfg");

  const std::vector<Ideal>& ideals = klein_enumeration();
  REQUIRE(ideals.size() == 49);
  std::set<std::string> enumerated;
  for (const Ideal& I : ideals) enumerated.insert(subspace_key(d, I.space));
  REQUIRE(enumerated.size() == 49);

  // The expected list, in order: each entry is (z-part support, constant
  // part support), meaning the ideal (z e_Z + e_C).
  using Sup = std::vector<std::size_t>;
  const Sup full = {0, 1, 2, 3};
  const std::vector<std::pair<Sup, Sup>> expected_exprs = {
      {{}, {}},        {{}, full},      {{}, {0}},       {{}, {1}},
      {{}, {2}},       {{}, {3}},       {{}, {0, 1}},    {{}, {0, 2}},
      {{}, {0, 3}},    {{}, {1, 2}},    {{}, {1, 3}},    {{}, {2, 3}},
      {{}, {0, 1, 2}}, {{}, {0, 1, 3}}, {{}, {0, 2, 3}}, {{}, {1, 2, 3}},
      {full, {}},      {{0}, {}},       {{1}, {}},       {{2}, {}},
      {{3}, {}},       {{0, 1}, {}},    {{0, 2}, {}},    {{0, 3}, {}},
      {{1, 2}, {}},    {{1, 3}, {}},    {{2, 3}, {}},    {{0, 1, 2}, {}},
      {{0, 1, 3}, {}}, {{0, 2, 3}, {}}, {{1, 2, 3}, {}},
      {full, {0}},     {{1}, {0}},      {{2}, {0}},
      {full, {1}},     {{0}, {1}},      {{3}, {1}},
      {full, {2}},     {{0}, {2}},      {{3}, {2}},
      {full, {3}},     {{1}, {3}},      {{2}, {3}},
      {full, {0, 3}},  {{1}, {0, 3}},   {{2}, {0, 3}},
      {full, {1, 2}},  {{0}, {1, 2}},   {{3}, {1, 2}}};
  REQUIRE(expected_exprs.size() == 49);

  std::set<std::string> expected;
  for (const auto& [zsup, csup] : expected_exprs) {
    std::vector<HopfElement> gens;
    if (!zsup.empty()) gens.push_back(idempotent_generator(d, 1, zsup));
    if (!csup.empty()) gens.push_back(idempotent_generator(d, 0, csup));
    const std::string key = subspace_key(d, ideal_from_generators(d, gens).space);
    REQUIRE(enumerated.count(key) == 1);
    REQUIRE(expected.insert(key).second);
  }
  REQUIRE(expected == enumerated);
  REQUIRE(seconds_since(t0) < 10.0);
}

// Criterion 2: Ann(M(k,i)) closed form equals the linear-algebra oracle on
// every nilpotent example, every k and i.
void criterion2() {
  const auto t0 = std::chrono::steady_clock::now();
  for (const char* name : kNilpotentConfigs) {
    const DatumPtr d = datum(name);
    REQUIRE(d->kind() == DatumKind::Nilpotent);
    for (unsigned k = 1; k <= d->n(); ++k)
      for (std::size_t i = 0; i < d->p(); ++i) {
        const Ideal formula = annihilator_formula_M(d, k, i);
        const Ideal oracle = annihilator_oracle(build_M(d, k, i));
        REQUIRE(ideal_equal(formula, oracle));
      }
  }
  REQUIRE(seconds_since(t0) < 30.0);
}

// Criterion 3: same equivalence on both non-nilpotent examples, covering
// all M(k,i) with i in Lambda_0 and all P_j with j in Lambda_1.
void criterion3() {
  REQUIRE(datum("z6_nonnil.cfg")->r() >= 3);
  for (const char* name : kNonNilpotentConfigs) {
    const DatumPtr d = datum(name);
    REQUIRE(d->kind() == DatumKind::NonNilpotent);
    const IndexPartition part = partition_indices(d);
    REQUIRE(!part.lambda0.empty());
    REQUIRE(!part.lambda1.empty());
    for (unsigned k = 1; k <= d->n(); ++k)
      for (std::size_t i : part.lambda0)
        REQUIRE(ideal_equal(annihilator_formula_M(d, k, i),
                            annihilator_oracle(build_M(d, k, i))));
    for (std::size_t j : part.lambda1)
      REQUIRE(ideal_equal(annihilator_formula_P(d, j), annihilator_oracle(build_P(d, j))));
  }
}

// Criterion 4: maximal_ideals equals the predicted family (complements of
// single indices, resp. of Lambda_1 orbits), every member passes the
// quotient-based is_maximal test, and the Klein maximal ideals match their
// two-generator group-algebra presentations.
void criterion4() {
  for (const char* name : kAllConfigs) {
    const DatumPtr d = datum(name);
    const std::vector<Ideal> maxes = maximal_ideals(d);

    std::vector<std::vector<std::size_t>> excluded;
    const IndexPartition part = partition_indices(d);
    if (d->kind() == DatumKind::Nilpotent) {
      for (std::size_t i = 0; i < d->p(); ++i) excluded.push_back({i});
    } else {
      for (std::size_t i : part.lambda0) excluded.push_back({i});
      for (const auto& orbit : part.lambda1_orbits) excluded.push_back(orbit);
    }
    REQUIRE(maxes.size() == excluded.size());

    std::set<std::string> got, predicted;
    for (const Ideal& I : maxes) got.insert(subspace_key(d, I.space));
    for (const auto& ex : excluded)
      predicted.insert(subspace_key(d, complement_ideal(d, ex).space));
    REQUIRE(got == predicted);
    for (const Ideal& I : maxes) REQUIRE(is_maximal(I));
  }

  const DatumPtr d = datum("klein.cfg");
  const int b = 2, c = 1;
  auto one_plus = [&](int h, long sign) {
    HopfElement e = HopfElement::one(d);
    e.set_coeff(0, h, Cyclotomic(sign));
    return e;
  };
  struct Presentation {
    std::vector<std::size_t> support;
    long sb, sc;
  };
  const std::vector<Presentation> cor53 = {{{0, 1, 2}, 1, 1},
                                           {{0, 1, 3}, 1, -1},
                                           {{0, 2, 3}, -1, 1},
                                           {{1, 2, 3}, -1, -1}};
  for (const auto& pr : cor53) {
    const Ideal lhs = ideal_from_generators(d, {idempotent_generator(d, 0, pr.support)});
    const Ideal rhs = ideal_from_generators(d, {one_plus(b, pr.sb), one_plus(c, pr.sc)});
    REQUIRE(ideal_equal(lhs, rhs));
    REQUIRE(ideal_member(one_plus(b, pr.sb), lhs));
    REQUIRE(ideal_member(one_plus(c, pr.sc), lhs));
    REQUIRE(is_maximal(lhs));
  }
}

// Criterion 5: among the 49 Klein ideals, is_completely_prime holds for
// exactly the four maximal ideals (1 - e_i); the classical counterexample
// e_0 e_1 = 0 in (z) with neither factor inside confirms (z) is not one.
void criterion5() {
  const DatumPtr d = datum("klein.cfg");
  std::set<std::string> maximal_keys;
  for (std::size_t i = 0; i < 4; ++i)
    maximal_keys.insert(subspace_key(d, complement_ideal(d, {i}).space));
  REQUIRE(maximal_keys.size() == 4);

  std::size_t prime_count = 0;
  for (const Ideal& I : klein_enumeration()) {
    if (I.dim() == d->dim()) continue;
    const bool cp = is_completely_prime(I);
    REQUIRE(cp == (maximal_keys.count(subspace_key(d, I.space)) == 1));
    if (cp) ++prime_count;
  }
  REQUIRE(prime_count == 4);

  const HopfElement e0 = idempotent_generator(d, 0, {0});
  const HopfElement e1 = idempotent_generator(d, 0, {1});
  const Ideal zI = ideal_from_generators(d, {idempotent_generator(d, 1, {0, 1, 2, 3})});
  REQUIRE((e0 * e1).is_zero());
  REQUIRE(ideal_member(e0 * e1, zI));
  REQUIRE(!ideal_member(e0, zI));
  REQUIRE(!ideal_member(e1, zI));
}

// Criterion 6: structural suite over every shipped datum: Hopf axioms,
// idempotent partition, the tau commutation rule, the power-raising
// memberships z^{l+1} in (z^l(1-e_s)), the order of tau, the radical, and
// the Lambda partition.
void criterion6() {
  for (const char* name : kAllConfigs) {
    const DatumPtr d = datum(name);
    const std::size_t p = d->p();
    const int gs = d->group().size();

    REQUIRE(verify_hopf_axioms(d).ok);

    const std::vector<CentralIdempotent> es = central_idempotents(d);
    REQUIRE(es.size() == p);
    std::vector<Cyclotomic> total(gs, Cyclotomic::zero());
    for (std::size_t i = 0; i < p; ++i) {
      for (int h = 0; h < gs; ++h) total[h] += es[i].element[h];
      for (std::size_t j = 0; j < p; ++j) {
        const auto prod = kg_mul(d->group(), es[i].element, es[j].element);
        if (i == j) {
          REQUIRE(prod == es[i].element);
        } else {
          for (const Cyclotomic& v : prod) REQUIRE(v.is_zero());
        }
      }
    }
    for (int h = 0; h < gs; ++h)
      REQUIRE(total[h] == (h == d->group().identity() ? Cyclotomic::one() : Cyclotomic::zero()));

    const Tau tau = compute_tau(d);
    REQUIRE(tau.order == testsupport::chi_order(d));
    if (d->kind() == DatumKind::NonNilpotent) REQUIRE(tau.order == d->n());
    for (unsigned l = 0; l < d->n(); ++l) {
      const HopfElement zl = HopfElement::basis(d, l, d->group().identity());
      for (std::size_t s = 0; s < p; ++s) {
        const HopfElement lhs = zl * HopfElement::from_group_algebra(d, es[s].element);
        const HopfElement rhs =
            HopfElement::from_group_algebra(d, es[tau.apply(s, static_cast<long>(l))].element) *
            zl;
        REQUIRE(lhs == rhs);
      }
    }

    // z^{l+1} in (z^l (1 - e_s)) for every s and every 0 <= l <= n-1; at
    // l = n-1 this says z^n = alpha(g^n - 1) lies in (z^{n-1}(1 - e_s)).
    for (unsigned l = 0; l < d->n(); ++l) {
      const HopfElement next = z_power(d, l + 1);
      for (std::size_t s = 0; s < p; ++s) {
        std::vector<Cyclotomic> one_minus(gs, Cyclotomic::zero());
        one_minus[d->group().identity()] = Cyclotomic::one();
        for (int h = 0; h < gs; ++h) one_minus[h] -= es[s].element[h];
        const Ideal I =
            ideal_from_generators(d, {HopfElement::from_group_algebra(d, one_minus, l)});
        REQUIRE(ideal_member(next, I));
      }
    }

    const IndexPartition part = partition_indices(d);
    if (d->kind() == DatumKind::Nilpotent) {
      REQUIRE(part.omega0.size() == p);
      for (std::size_t i = 0; i < p; ++i) REQUIRE(part.omega0[i] == i);
      REQUIRE(part.lambda0.empty());
      REQUIRE(part.lambda1.empty());

      Ideal zero;
      zero.datum = d;
      zero.space = Subspace::zero(d->dim());
      const Ideal zI = ideal_from_generators(
          d, {HopfElement::basis(d, 1, d->group().identity())});
      REQUIRE(ideal_equal(radical_of_quotient(zero), zI));
    } else {
      std::set<std::size_t> seen;
      for (std::size_t i : part.lambda0) {
        REQUIRE(d->lambda(i) == Cyclotomic::one());
        REQUIRE(seen.insert(i).second);
      }
      for (std::size_t j : part.lambda1) {
        REQUIRE(d->lambda(j) != Cyclotomic::one());
        REQUIRE(seen.insert(j).second);
      }
      REQUIRE(seen.size() == p);
      std::set<std::size_t> in_orbits;
      for (const auto& orbit : part.lambda1_orbits) {
        REQUIRE(orbit.size() == d->n());
        std::set<std::size_t> generated;
        for (unsigned t = 0; t < d->n(); ++t)
          generated.insert(tau.apply(orbit.front(), static_cast<long>(t)));
        REQUIRE(generated == std::set<std::size_t>(orbit.begin(), orbit.end()));
        for (std::size_t j : orbit) REQUIRE(in_orbits.insert(j).second);
      }
      REQUIRE(in_orbits == std::set<std::size_t>(part.lambda1.begin(), part.lambda1.end()));
    }
  }
}

// Criterion 7: seeded normal-form round trips; the chain always regenerates
// the raw closure and has the strict staircase shape.
void criterion7() {
  testsupport::Rng rng(12345);
  for (const char* name : kNilpotentConfigs) {
    const DatumPtr d = datum(name);
    run_round_trips(rng, d);
  }
  for (const char* name : kNonNilpotentConfigs) run_round_trips(rng, datum(name));
}

// Criterion 8: the 49 Klein ideals are closed under sum, intersection and
// product, and every random principal ideal already appears in the list.
void criterion8() {
  const DatumPtr d = datum("klein.cfg");
  const std::vector<Ideal>& ideals = klein_enumeration();
  REQUIRE(ideals.size() == 49);
  std::set<std::string> keys;
  for (const Ideal& I : ideals) keys.insert(subspace_key(d, I.space));

  for (std::size_t a = 0; a < ideals.size(); ++a) {
    for (std::size_t b = a; b < ideals.size(); ++b) {
      REQUIRE(keys.count(subspace_key(d, ideal_sum(ideals[a], ideals[b]).space)) == 1);
      REQUIRE(keys.count(subspace_key(d, ideal_intersect(ideals[a], ideals[b]).space)) == 1);
    }
    for (std::size_t b = 0; b < ideals.size(); ++b)
      REQUIRE(keys.count(subspace_key(d, ideal_product(ideals[a], ideals[b]).space)) == 1);
  }

  testsupport::Rng rng(12345);
  for (int t = 0; t < 1000; ++t) {
    const HopfElement h = testsupport::random_hopf(rng, d);
    REQUIRE(keys.count(subspace_key(d, ideal_from_generators(d, {h}).space)) == 1);
  }
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    void (*body)();
  };
  const Criterion criteria[] = {
      {1, "Klein enumeration returns exactly the expected 49 ideals", criterion1},
      {2, "annihilator formula matches the oracle on all nilpotent data", criterion2},
      {3, "annihilator formula matches the oracle on all non-nilpotent data", criterion3},
      {4, "maximal ideal sets match their predicted presentations", criterion4},
      {5, "completely prime ideals are exactly the four Klein maximal ideals", criterion5},
      {6, "structural properties hold on every shipped datum", criterion6},
      {7, "normal forms round trip on seeded generator lists", criterion7},
      {8, "the Klein ideal lattice is closed and complete", criterion8},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string error;
    try {
      c.body();
    } catch (const Failure& f) {
      error = f.message;
    } catch (const std::exception& e) {
      error = e.what();
    }
    if (error.empty()) {
      std::printf("[PASS] criterion %d: %s (%.2fs)\n", c.id, c.title, seconds_since(t0));
    } else {
      std::printf("[FAIL] criterion %d: %s: %s (%.2fs)\n", c.id, c.title, error.c_str(),
                  seconds_since(t0));
      ++failed;
    }
    std::fflush(stdout);
  }
  if (failed) {
    std::printf("acceptance: %d of 8 criteria failed\n", failed);
    return 1;
  }
  std::printf("acceptance: 8/8 criteria passed\n");
  return 0;
}
