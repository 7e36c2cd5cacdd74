#include "rankone/ideals.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>

namespace rankone {

namespace {

bool all_zero(const std::vector<Cyclotomic>& v) {
  for (const Cyclotomic& c : v)
    if (!c.is_zero()) return false;
  return true;
}

// Left/right multipliers that generate H as an algebra: every group
// element and z.  Stability under these implies stability under every
// basis element z^l h.
std::vector<std::vector<Cyclotomic>> algebra_multipliers(const GroupDatum& d) {
  std::vector<std::vector<Cyclotomic>> out;
  out.reserve(d.group().size() + 1);
  for (int h = 0; h < d.group().size(); ++h) {
    std::vector<Cyclotomic> v(d.dim());
    v[d.basis_index(0, h)] = Cyclotomic::one();
    out.push_back(std::move(v));
  }
  std::vector<Cyclotomic> z(d.dim());
  z[d.basis_index(1, d.group().identity())] = Cyclotomic::one();
  out.push_back(std::move(z));
  return out;
}

void check_same_datum(const DatumPtr& a, const DatumPtr& b, const char* who) {
  if (a.get() != b.get()) throw std::invalid_argument(std::string(who) + ": datum mismatch");
}

}  // namespace

std::vector<Cyclotomic> kg_mul(const FiniteGroup& group, const std::vector<Cyclotomic>& a,
                               const std::vector<Cyclotomic>& b) {
  const int order = group.size();
  if (a.size() != static_cast<std::size_t>(order) || b.size() != static_cast<std::size_t>(order))
    throw std::invalid_argument("kg_mul: wrong coefficient count");
  std::vector<Cyclotomic> out(order, Cyclotomic::zero());
  for (int s = 0; s < order; ++s) {
    if (a[s].is_zero()) continue;
    for (int t = 0; t < order; ++t) {
      if (b[t].is_zero()) continue;
      out[group.mul(s, t)] += a[s] * b[t];
    }
  }
  return out;
}

std::vector<CentralIdempotent> central_idempotents(const DatumPtr& datum) {
  // Derived data per datum; memoized because tau, normal forms and the
  // enumeration all route through it.
  struct CacheEntry {
    std::weak_ptr<const GroupDatum> owner;
    std::vector<CentralIdempotent> value;
  };
  static std::mutex mu;
  static std::map<const GroupDatum*, CacheEntry> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(datum.get());
    if (it != cache.end()) {
      auto sp = it->second.owner.lock();
      if (sp && sp.get() == datum.get()) return it->second.value;
      cache.erase(it);
    }
  }

  const FiniteGroup& group = datum->group();
  const CharacterTable& table = datum->table();
  const std::size_t p = datum->p();
  const int order = group.size();

  std::vector<CentralIdempotent> out(p);
  for (std::size_t i = 0; i < p; ++i) {
    out[i].index = i;
    out[i].element.assign(order, Cyclotomic::zero());
    Rational sc = table.degree(i) / order;
    Cyclotomic scale(sc);
    for (int h = 0; h < order; ++h) out[i].element[group.inverse(h)] += scale * table.value(i, h);
  }

  // Orthogonality, completeness, centrality.
  std::vector<Cyclotomic> total(order, Cyclotomic::zero());
  for (std::size_t i = 0; i < p; ++i)
    for (int h = 0; h < order; ++h) total[h] += out[i].element[h];
  std::vector<Cyclotomic> unit(order, Cyclotomic::zero());
  unit[group.identity()] = Cyclotomic::one();
  if (total != unit) throw std::logic_error("central_idempotents: sum of e_i is not 1");
  const std::vector<Cyclotomic> zerovec(order, Cyclotomic::zero());
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) {
      std::vector<Cyclotomic> prod = kg_mul(group, out[i].element, out[j].element);
      if (prod != (i == j ? out[i].element : zerovec))
        throw std::logic_error("central_idempotents: orthogonality fails");
    }
  for (std::size_t i = 0; i < p; ++i)
    for (int s = 0; s < order; ++s)
      for (int u = 0; u < order; ++u)
        if (out[i].element[group.mul(group.inverse(s), u)] !=
            out[i].element[group.mul(u, group.inverse(s))])
          throw std::logic_error("central_idempotents: e_i is not central");

  std::lock_guard<std::mutex> lock(mu);
  cache[datum.get()] = CacheEntry{datum, out};
  return out;
}

std::vector<Cyclotomic> idempotent_sum(const DatumPtr& datum,
                                       const std::vector<std::size_t>& support) {
  const std::size_t p = datum->p();
  std::vector<std::size_t> s = support;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw std::invalid_argument("idempotent_sum: duplicate support index");
  if (!s.empty() && s.back() >= p)
    throw std::invalid_argument("idempotent_sum: support index out of range");
  const std::vector<CentralIdempotent> es = central_idempotents(datum);
  std::vector<Cyclotomic> out(datum->group().size(), Cyclotomic::zero());
  for (std::size_t i : s)
    for (int h = 0; h < datum->group().size(); ++h) out[h] += es[i].element[h];
  return out;
}

HopfElement idempotent_generator(const DatumPtr& datum, unsigned m,
                                 const std::vector<std::size_t>& support) {
  if (m >= datum->n()) throw std::domain_error("idempotent_generator: exponent out of range");
  return HopfElement::from_group_algebra(datum, idempotent_sum(datum, support), m);
}

Ideal ideal_from_generators(const DatumPtr& datum, const std::vector<HopfElement>& gens) {
  const GroupDatum& d = *datum;
  EchelonBuilder eb(d.dim());
  std::vector<std::vector<Cyclotomic>> work;
  for (const HopfElement& g : gens) {
    check_same_datum(g.datum(), datum, "ideal_from_generators");
    if (eb.add(g.coords())) work.push_back(g.coords());
  }
  const auto mults = algebra_multipliers(d);
  while (!work.empty()) {
    std::vector<Cyclotomic> v = std::move(work.back());
    work.pop_back();
    for (const auto& u : mults) {
      std::vector<Cyclotomic> lv = hopf_mul_coords(d, u, v);
      if (eb.add(lv)) work.push_back(std::move(lv));
      std::vector<Cyclotomic> rv = hopf_mul_coords(d, v, u);
      if (eb.add(rv)) work.push_back(std::move(rv));
    }
  }
  Ideal out;
  out.datum = datum;
  out.space = eb.subspace();
  out.generators = gens;
  return out;
}

bool subspace_is_ideal(const DatumPtr& datum, const Subspace& space) {
  const GroupDatum& d = *datum;
  if (space.ambient() != d.dim())
    throw std::invalid_argument("subspace_is_ideal: wrong ambient dimension");
  const auto mults = algebra_multipliers(d);
  for (std::size_t r = 0; r < space.dim(); ++r) {
    const std::vector<Cyclotomic> row = space.basis().row(r);
    for (const auto& u : mults) {
      if (!space.contains(hopf_mul_coords(d, u, row))) return false;
      if (!space.contains(hopf_mul_coords(d, row, u))) return false;
    }
  }
  return true;
}

bool ideal_member(const HopfElement& a, const Ideal& I) {
  check_same_datum(a.datum(), I.datum, "ideal_member");
  return I.space.contains(a.coords());
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
  check_same_datum(a.datum, b.datum, "ideal_equal");
  return a.space == b.space;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  check_same_datum(a.datum, b.datum, "ideal_sum");
  Ideal out;
  out.datum = a.datum;
  out.space = sum(a.space, b.space);
  out.generators = a.generators;
  out.generators.insert(out.generators.end(), b.generators.begin(), b.generators.end());
  return out;
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  // span{uv : u in a, v in b} is already two-sided when a and b are.
  check_same_datum(a.datum, b.datum, "ideal_product");
  const GroupDatum& d = *a.datum;
  EchelonBuilder eb(d.dim());
  for (std::size_t r = 0; r < a.space.dim(); ++r) {
    const std::vector<Cyclotomic> ar = a.space.basis().row(r);
    for (std::size_t s = 0; s < b.space.dim(); ++s)
      eb.add(hopf_mul_coords(d, ar, b.space.basis().row(s)));
  }
  Ideal out;
  out.datum = a.datum;
  out.space = eb.subspace();
  return out;
}

Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
  check_same_datum(a.datum, b.datum, "ideal_intersect");
  Ideal out;
  out.datum = a.datum;
  out.space = intersect(a.space, b.space);
  return out;
}

std::vector<std::size_t> kg_ideal_support(const DatumPtr& datum,
                                          const std::vector<std::vector<Cyclotomic>>& hs) {
  const FiniteGroup& group = datum->group();
  const std::vector<CentralIdempotent> es = central_idempotents(datum);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (const auto& h : hs) {
      if (h.size() != static_cast<std::size_t>(group.size()))
        throw std::invalid_argument("kg_ideal_support: wrong coefficient count");
      if (!all_zero(kg_mul(group, es[i].element, h))) {
        out.push_back(i);
        break;
      }
    }
  }
  return out;
}

Ideal normal_form(const DatumPtr& datum,
                  const std::vector<std::pair<unsigned, std::vector<Cyclotomic>>>& pairs) {
  const unsigned n = datum->n();
  std::map<unsigned, std::vector<std::vector<Cyclotomic>>> by_exp;
  std::vector<HopfElement> raw;
  for (const auto& [m, h] : pairs) {
    if (m >= n) throw std::domain_error("normal_form: exponent out of range");
    if (all_zero(h)) throw std::domain_error("normal_form: zero group-algebra generator");
    by_exp[m].push_back(h);
    raw.push_back(HopfElement::from_group_algebra(datum, h, m));
  }

  // Equal exponents merge into one support (a kG-ideal is generated by a
  // central idempotent); then each support absorbs everything below it,
  // and terms made redundant by the absorption are dropped, leaving
  // strictly decreasing supports under strictly decreasing exponents.
  std::vector<NormalFormTerm> chain;
  for (auto it = by_exp.rbegin(); it != by_exp.rend(); ++it)
    chain.push_back(NormalFormTerm{it->first, kg_ideal_support(datum, it->second)});
  for (std::size_t s = chain.size(); s-- > 1;) {
    std::vector<std::size_t> u;
    std::set_union(chain[s - 1].support.begin(), chain[s - 1].support.end(),
                   chain[s].support.begin(), chain[s].support.end(), std::back_inserter(u));
    chain[s - 1].support = std::move(u);
  }
  std::vector<NormalFormTerm> strict;
  for (std::size_t s = 0; s < chain.size(); ++s) {
    if (s + 1 < chain.size() && chain[s].support == chain[s + 1].support) continue;
    strict.push_back(chain[s]);
  }

  std::vector<HopfElement> gens;
  gens.reserve(strict.size());
  for (const auto& t : strict) gens.push_back(idempotent_generator(datum, t.exponent, t.support));

  Ideal out;
  out.datum = datum;
  out.space = ideal_from_generators(datum, gens).space;
  out.generators = std::move(gens);
  out.normal_form = std::move(strict);

  const Ideal raw_ideal = ideal_from_generators(datum, raw);
  if (raw_ideal.space != out.space)
    throw std::logic_error("normal_form: chain does not reproduce the closure of the input");
  const Ideal single = ideal_from_generators(datum, {normal_form_element(out)});
  if (single.space != out.space)
    throw std::logic_error("normal_form: single-generator form generates a different ideal");
  return out;
}

HopfElement normal_form_element(const Ideal& I) {
  if (!I.normal_form)
    throw std::invalid_argument("normal_form_element: ideal carries no normal form");
  HopfElement out = HopfElement::zero(I.datum);
  for (const auto& t : *I.normal_form) out += idempotent_generator(I.datum, t.exponent, t.support);
  return out;
}

NormalFormTerm lowest_term(const Ideal& I) {
  if (I.dim() == 0) throw std::domain_error("lowest_term: the zero ideal has no lowest term");
  const GroupDatum& d = *I.datum;
  const int gs = d.group().size();
  const Matrix& b = I.space.basis();

  unsigned mt = d.n();
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (unsigned l = 0; l < mt; ++l) {
      bool nonzero = false;
      for (int h = 0; h < gs && !nonzero; ++h) nonzero = !b.at(r, d.basis_index(l, h)).is_zero();
      if (nonzero) {
        mt = l;
        break;
      }
    }

  std::vector<std::vector<Cyclotomic>> projections;
  for (std::size_t r = 0; r < b.rows(); ++r) {
    std::vector<Cyclotomic> h(gs);
    for (int u = 0; u < gs; ++u) h[u] = b.at(r, d.basis_index(mt, u));
    if (!all_zero(h)) projections.push_back(std::move(h));
  }
  return NormalFormTerm{mt, kg_ideal_support(I.datum, projections)};
}

Ideal annihilator_oracle(const ModuleRep& m) {
  const DatumPtr& datum = m.datum;
  const GroupDatum& d = *datum;
  const std::size_t md = m.dim;

  std::vector<Matrix> zp(d.n());
  zp[0] = Matrix::identity(md);
  for (unsigned l = 1; l < d.n(); ++l) zp[l] = zp[l - 1] * m.act_z;

  Matrix a(md * md, d.dim());
  for (unsigned l = 0; l < d.n(); ++l)
    for (int h = 0; h < d.group().size(); ++h) {
      const Matrix rho = zp[l] * m.act_group[h];
      const std::size_t col = d.basis_index(l, h);
      for (std::size_t r = 0; r < md; ++r)
        for (std::size_t c = 0; c < md; ++c) a.at(r * md + c, col) = rho.at(r, c);
    }

  Subspace ns = nullspace(a);
  if (!subspace_is_ideal(datum, ns))
    throw std::logic_error("annihilator_oracle: annihilator space is not a two-sided ideal");
  Ideal out;
  out.datum = datum;
  out.space = std::move(ns);
  return out;
}

Ideal annihilator_formula_M(const DatumPtr& datum, unsigned k, std::size_t i) {
  if (k < 1 || k > datum->n()) throw std::domain_error("annihilator_formula_M: k out of range");
  if (i >= datum->p()) throw std::domain_error("annihilator_formula_M: index out of range");
  if (datum->kind() == DatumKind::NonNilpotent && datum->lambda(i) != Cyclotomic::one())
    throw std::domain_error(
        "annihilator_formula_M: index lies in Lambda_1; M(k,i) requires lambda_i = 1");

  const Tau tau = compute_tau(datum);
  const std::size_t p = datum->p();
  std::vector<std::pair<unsigned, std::vector<Cyclotomic>>> pairs;
  std::set<std::size_t> visited;  // {i, tau(i), ..., tau^{s-1}(i)} as a set
  for (unsigned s = 1; s <= k; ++s) {
    visited.insert(tau.apply(i, static_cast<long>(s) - 1));
    std::vector<std::size_t> support;
    for (std::size_t t = 0; t < p; ++t)
      if (!visited.count(t)) support.push_back(t);
    if (support.empty()) continue;  // the product of the (1 - e) factors vanished
    pairs.emplace_back(k - s, idempotent_sum(datum, support));
  }
  return normal_form(datum, pairs);
}

Ideal annihilator_formula_P(const DatumPtr& datum, std::size_t j) {
  if (datum->kind() != DatumKind::NonNilpotent)
    throw std::domain_error("annihilator_formula_P: P_j exists only for the non-nilpotent type");
  if (j >= datum->p()) throw std::domain_error("annihilator_formula_P: index out of range");
  if (datum->lambda(j) == Cyclotomic::one())
    throw std::domain_error(
        "annihilator_formula_P: index lies in Lambda_0; P_j requires lambda_j != 1");

  const IndexPartition part = partition_indices(datum);
  const std::vector<std::size_t>* orbit = nullptr;
  for (const auto& o : part.lambda1_orbits)
    if (std::find(o.begin(), o.end(), j) != o.end()) {
      orbit = &o;
      break;
    }
  if (!orbit) throw std::logic_error("annihilator_formula_P: orbit of j not found");

  std::vector<std::size_t> support = part.lambda0;
  for (std::size_t t : part.lambda1)
    if (std::find(orbit->begin(), orbit->end(), t) == orbit->end()) support.push_back(t);
  std::sort(support.begin(), support.end());
  return normal_form(datum, {{0u, idempotent_sum(datum, support)}});
}

std::vector<Ideal> maximal_ideals(const DatumPtr& datum) {
  const std::size_t p = datum->p();
  auto one_minus = [&](std::size_t i) {
    std::vector<std::size_t> support;
    for (std::size_t t = 0; t < p; ++t)
      if (t != i) support.push_back(t);
    return normal_form(datum, {{0u, idempotent_sum(datum, support)}});
  };

  std::vector<Ideal> out;
  if (datum->kind() == DatumKind::Nilpotent) {
    for (std::size_t i = 0; i < p; ++i) out.push_back(one_minus(i));
  } else {
    const IndexPartition part = partition_indices(datum);
    for (std::size_t i : part.lambda0) out.push_back(one_minus(i));
    for (const auto& orbit : part.lambda1_orbits)
      out.push_back(annihilator_formula_P(datum, orbit.front()));
  }
  for (std::size_t a = 0; a < out.size(); ++a)
    for (std::size_t b = a + 1; b < out.size(); ++b)
      if (ideal_equal(out[a], out[b]))
        throw std::logic_error("maximal_ideals: the listed ideals are not pairwise distinct");
  return out;
}

namespace {

// H/I with a coset basis given by the non-pivot coordinates of I.
struct QuotientAlgebra {
  std::vector<std::size_t> coset;  // ambient columns indexing the coset basis
  // mt[a][b] = coordinates of (lift a)(lift b)
  std::vector<std::vector<std::vector<Cyclotomic>>> mt;
};

QuotientAlgebra build_quotient(const GroupDatum& d, const Subspace& ideal) {
  QuotientAlgebra q;
  std::vector<bool> pivot(d.dim(), false);
  for (std::size_t c : ideal.pivots()) pivot[c] = true;
  for (std::size_t c = 0; c < d.dim(); ++c)
    if (!pivot[c]) q.coset.push_back(c);
  const std::size_t qd = q.coset.size();

  auto project = [&](std::vector<Cyclotomic> v) {
    v = ideal.reduce(std::move(v));
    std::vector<Cyclotomic> out(qd);
    for (std::size_t a = 0; a < qd; ++a) out[a] = v[q.coset[a]];
    return out;
  };

  q.mt.assign(qd, std::vector<std::vector<Cyclotomic>>(qd));
  for (std::size_t a = 0; a < qd; ++a) {
    std::vector<Cyclotomic> va(d.dim());
    va[q.coset[a]] = Cyclotomic::one();
    for (std::size_t b = 0; b < qd; ++b) {
      std::vector<Cyclotomic> vb(d.dim());
      vb[q.coset[b]] = Cyclotomic::one();
      q.mt[a][b] = project(hopf_mul_coords(d, va, vb));
    }
  }
  return q;
}

// Trace form of the regular representation: gram[a][b] = tr(L_a L_b).  In
// characteristic zero its radical is the Jacobson radical.
Matrix gram_matrix(const QuotientAlgebra& q) {
  const std::size_t qd = q.coset.size();
  Matrix g(qd, qd);
  for (std::size_t a = 0; a < qd; ++a)
    for (std::size_t b = 0; b < qd; ++b) {
      Cyclotomic tr = Cyclotomic::zero();
      for (std::size_t r = 0; r < qd; ++r)
        for (std::size_t c = 0; c < qd; ++c) {
          if (q.mt[a][c][r].is_zero() || q.mt[b][r][c].is_zero()) continue;
          tr += q.mt[a][c][r] * q.mt[b][r][c];
        }
      g.at(a, b) = std::move(tr);
    }
  return g;
}

}  // namespace

bool is_maximal(const Ideal& I) {
  const GroupDatum& d = *I.datum;
  if (I.space.dim() == d.dim())
    throw std::domain_error("is_maximal: the full ideal has no quotient to test");
  const QuotientAlgebra q = build_quotient(d, I.space);
  const std::size_t qd = q.coset.size();
  if (rref(gram_matrix(q)).rank != qd) return false;  // nonzero radical

  Matrix c(qd * qd, qd);
  for (std::size_t b = 0; b < qd; ++b)
    for (std::size_t r = 0; r < qd; ++r)
      for (std::size_t x = 0; x < qd; ++x)
        c.at(b * qd + r, x) = q.mt[x][b][r] - q.mt[b][x][r];
  return nullspace(c).dim() == 1;
}

bool is_completely_prime(const Ideal& I) {
  const GroupDatum& d = *I.datum;
  if (I.space.dim() == d.dim())
    throw std::domain_error("is_completely_prime: the full ideal is excluded");
  return I.space.dim() + 1 == d.dim();
}

Ideal radical_of_quotient(const Ideal& I) {
  const GroupDatum& d = *I.datum;
  Ideal out;
  out.datum = I.datum;
  if (I.space.dim() == d.dim()) {
    out.space = I.space;
    return out;
  }
  const QuotientAlgebra q = build_quotient(d, I.space);
  const Subspace rad = nullspace(gram_matrix(q));

  std::vector<std::vector<Cyclotomic>> rows;
  for (std::size_t r = 0; r < I.space.dim(); ++r) rows.push_back(I.space.basis().row(r));
  for (std::size_t r = 0; r < rad.dim(); ++r) {
    std::vector<Cyclotomic> v(d.dim());
    for (std::size_t a = 0; a < q.coset.size(); ++a) v[q.coset[a]] = rad.basis().at(r, a);
    rows.push_back(std::move(v));
  }
  Subspace s = Subspace::span(d.dim(), rows);
  if (!subspace_is_ideal(I.datum, s))
    throw std::logic_error("radical_of_quotient: radical preimage is not a two-sided ideal");
  out.space = std::move(s);
  return out;
}

namespace {

Int binomial(unsigned long n, unsigned long k) {
  if (k > n) return Int(0);
  Int out = 1;
  for (unsigned long i = 0; i < k; ++i) {
    out *= Int(n - i);
    out /= Int(i + 1);
  }
  return out;
}

Int int_pow(const Int& base, unsigned long e) {
  Int out = 1;
  for (unsigned long i = 0; i < e; ++i) out *= base;
  return out;
}

}  // namespace

Int enumerate_candidate_count(unsigned n, std::size_t p) {
  // Chains S_1 > ... > S_t > {} correspond to maps {0..p-1} -> {0..t}
  // whose image covers {1..t} (the value of an index is the number of
  // supports containing it); inclusion-exclusion counts them.
  Int total = 1;  // the zero ideal
  const std::size_t tmax = std::min<std::size_t>(n, p);
  for (std::size_t t = 1; t <= tmax; ++t) {
    Int chains = 0;
    for (std::size_t k = 0; k <= t; ++k) {
      const Int term = binomial(t, k) * int_pow(Int(t + 1 - k), p);
      if (k % 2 == 0)
        chains += term;
      else
        chains -= term;
    }
    total += binomial(n, t) * chains;
  }
  return total;
}

std::vector<Ideal> enumerate_ideals(const DatumPtr& datum, unsigned long long cap) {
  if (datum->kind() != DatumKind::Nilpotent)
    throw std::domain_error("enumerate_ideals: enumeration requires the nilpotent type");
  const unsigned n = datum->n();
  const std::size_t p = datum->p();
  const Int count = enumerate_candidate_count(n, p);
  if (count > Int(cap)) {
    std::ostringstream os;
    os << "enumerate_ideals: " << count << " candidate presentations exceed the cap " << cap;
    throw std::domain_error(os.str());
  }
  if (n >= 64 || p >= 64) throw std::domain_error("enumerate_ideals: rank out of range");

  using Score = std::tuple<std::size_t, std::size_t, std::string>;
  struct Entry {
    Score score;
    Ideal ideal;
  };
  std::map<std::string, Entry> seen;

  auto support_of_mask = [&](unsigned long long mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < p; ++i)
      if (mask >> i & 1ull) s.push_back(i);
    return s;
  };

  auto chain_score = [](const std::vector<NormalFormTerm>& chain) {
    std::size_t weight = 0;
    std::ostringstream os;
    for (const auto& t : chain) {
      weight += t.support.size();
      os << t.exponent << ':';
      for (std::size_t i : t.support) os << i << ',';
      os << ';';
    }
    return Score(chain.size(), weight, os.str());
  };

  auto consider = [&](const std::vector<NormalFormTerm>& chain) {
    std::vector<HopfElement> gens;
    gens.reserve(chain.size());
    for (const auto& t : chain) gens.push_back(idempotent_generator(datum, t.exponent, t.support));
    Ideal ideal = ideal_from_generators(datum, gens);
    ideal.normal_form = chain;
    std::string key = subspace_key(datum, ideal.space);
    Score score = chain_score(chain);
    auto it = seen.find(key);
    if (it == seen.end())
      seen.emplace(std::move(key), Entry{std::move(score), std::move(ideal)});
    else if (score < it->second.score) {
      it->second.score = std::move(score);
      it->second.ideal = std::move(ideal);
    }
  };

  consider({});  // the zero ideal

  const unsigned long long full = (1ull << p) - 1;
  std::vector<unsigned> exps;
  std::vector<NormalFormTerm> chain;
  std::function<void(std::size_t, unsigned long long)> choose = [&](std::size_t level,
                                                                    unsigned long long prev) {
    if (level == exps.size()) {
      consider(chain);
      return;
    }
    for (unsigned long long s = prev; s; s = (s - 1) & prev) {
      if (level > 0 && s == prev) continue;  // supports must strictly decrease
      chain.push_back(NormalFormTerm{exps[level], support_of_mask(s)});
      choose(level + 1, s);
      chain.pop_back();
    }
  };
  for (unsigned long long em = 1; em < (1ull << n); ++em) {
    exps.clear();
    for (unsigned l = n; l-- > 0;)
      if (em >> l & 1ull) exps.push_back(l);
    if (exps.size() > p) continue;
    choose(0, full);
  }

  std::vector<std::pair<std::pair<std::size_t, std::string>, const Entry*>> order;
  order.reserve(seen.size());
  for (const auto& [key, entry] : seen)
    order.push_back({{entry.ideal.space.dim(), key}, &entry});
  std::sort(order.begin(), order.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Ideal> out;
  out.reserve(order.size());
  for (const auto& [rank, entry] : order) out.push_back(entry->ideal);
  return out;
}

std::string subspace_key(const DatumPtr& datum, const Subspace& space) {
  const unsigned long ambient_order = datum->field_order();
  std::ostringstream os;
  os << space.dim();
  const Matrix& b = space.basis();
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) {
      os << '|';
      const Cyclotomic v = b.at(r, c).promoted(ambient_order);
      const std::vector<Rational>& cf = v.coeffs();
      for (std::size_t k = 0; k < cf.size(); ++k) {
        if (k) os << ',';
        os << rational_str(cf[k]);
      }
    }
  return os.str();
}

namespace {

std::string support_machine(const std::vector<std::size_t>& s) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) os << '+';
    os << 'e' << s[i];
  }
  os << ')';
  return os.str();
}

}  // namespace

std::string gens_machine(const Ideal& I) {
  if (!I.normal_form) return I.dim() == 0 ? "0" : "-";
  const auto& chain = *I.normal_form;
  if (chain.empty()) return "0";
  std::ostringstream os;
  for (std::size_t s = 0; s < chain.size(); ++s) {
    if (s) os << '+';
    if (chain[s].exponent > 0) os << "z^" << chain[s].exponent << '*';
    os << support_machine(chain[s].support);
  }
  return os.str();
}

std::string gens_human(const Ideal& I) {
  if (I.normal_form) {
    const auto& chain = *I.normal_form;
    if (chain.empty()) return "0";
    const std::size_t p = I.datum->p();
    std::ostringstream os;
    for (std::size_t s = 0; s < chain.size(); ++s) {
      if (s) os << " + ";
      const unsigned m = chain[s].exponent;
      const auto& sup = chain[s].support;
      const std::string zs = m == 0 ? "" : (m == 1 ? "z" : "z^" + std::to_string(m));
      if (sup.size() == p) {
        os << (m == 0 ? std::string("1") : zs);
      } else if (sup.size() == 1) {
        os << (m == 0 ? "" : zs + "*") << 'e' << sup[0];
      } else if (m == 0) {
        for (std::size_t i = 0; i < sup.size(); ++i) {
          if (i) os << " + ";
          os << 'e' << sup[i];
        }
      } else {
        os << zs << "*(";
        for (std::size_t i = 0; i < sup.size(); ++i) {
          if (i) os << '+';
          os << 'e' << sup[i];
        }
        os << ')';
      }
    }
    return os.str();
  }
  if (!I.generators.empty()) {
    std::ostringstream os;
    for (std::size_t i = 0; i < I.generators.size(); ++i) {
      if (i) os << ", ";
      os << I.generators[i].str();
    }
    return os.str();
  }
  return I.dim() == 0 ? "0" : "-";
}

}  // namespace rankone
