#pragma once

// Two-sided ideal calculus in H: central idempotents of kG, closure of
// generating sets, the chain normal form
//   I = (z^{m_1} e_{S_1}, ..., z^{m_t} e_{S_t}),
//   n-1 >= m_1 > ... > m_t >= 0,  S_1 > S_2 > ... > S_t != {}  (strict),
// annihilator ideals of the indecomposable modules (closed formula and an
// independent linear-algebra oracle), maximal / completely prime tests,
// and exhaustive enumeration for the nilpotent type.

#include "rankone/modules.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rankone {

// Primitive central idempotent e_i = (chi_i(1)/|G|) sum_h chi_i(h) h^{-1},
// stored as |G| group-algebra coefficients.
struct CentralIdempotent {
  std::size_t index = 0;
  std::vector<Cyclotomic> element;
};

// The p primitive central orthogonal idempotents, indexed like the
// character table rows.  Orthogonality, completeness and centrality are
// verified; failure throws std::logic_error.
std::vector<CentralIdempotent> central_idempotents(const DatumPtr& datum);

// sum_{i in support} e_i as group-algebra coefficients.  support indices
// must be valid and distinct; the empty support gives 0 and the full
// support gives 1.
std::vector<Cyclotomic> idempotent_sum(const DatumPtr& datum,
                                       const std::vector<std::size_t>& support);

// Group-algebra product of two coefficient vectors.
std::vector<Cyclotomic> kg_mul(const FiniteGroup& group, const std::vector<Cyclotomic>& a,
                               const std::vector<Cyclotomic>& b);

// One term z^m e_S of a chain normal form.
struct NormalFormTerm {
  unsigned exponent = 0;
  std::vector<std::size_t> support;  // sorted ascending, nonempty
};

struct Ideal {
  DatumPtr datum;
  Subspace space = Subspace::zero(0);
  // Optional presentation data; the subspace alone is authoritative.
  std::vector<HopfElement> generators;
  std::optional<std::vector<NormalFormTerm>> normal_form;

  std::size_t dim() const { return space.dim(); }
};

// z^m * sum_{i in support} e_i as an element of H.
HopfElement idempotent_generator(const DatumPtr& datum, unsigned m,
                                 const std::vector<std::size_t>& support);

// Two-sided ideal generated by gens: the span of all u a v with u, v basis
// elements, iterated to a fixpoint.
Ideal ideal_from_generators(const DatumPtr& datum, const std::vector<HopfElement>& gens);

// Whether the subspace is stable under left and right multiplication by
// every basis element of H.
bool subspace_is_ideal(const DatumPtr& datum, const Subspace& space);

bool ideal_member(const HopfElement& a, const Ideal& I);
bool ideal_equal(const Ideal& a, const Ideal& b);
Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_intersect(const Ideal& a, const Ideal& b);

// Support of the kG-ideal generated by hs: S = {i : e_i h != 0 for some h
// in hs}; then the kG-ideal equals (sum_{i in S} e_i).
std::vector<std::size_t> kg_ideal_support(const DatumPtr& datum,
                                          const std::vector<std::vector<Cyclotomic>>& hs);

// Chain normal form of the ideal generated by {z^m h} for the given
// (m, h) pairs, h a group-algebra element.  Constructive: equal exponents
// merge via kg_ideal_support, lower supports absorb upward until the chain
// is strictly decreasing.  The result carries normal_form, generators
// (one z^{m_s} e_{S_s} per chain term) and a space verified equal to the
// raw closure of the input; the single element sum_s z^{m_s} e_{S_s} is
// also verified to generate it.  Throws std::domain_error on an exponent
// outside [0, n-1] or a zero h.
Ideal normal_form(const DatumPtr& datum,
                  const std::vector<std::pair<unsigned, std::vector<Cyclotomic>>>& pairs);

// sum_s z^{m_s} e_{S_s}: the one-element generating set of a normal form.
HopfElement normal_form_element(const Ideal& I);

// The pair (m_t, S_t) of a nonzero ideal, recovered from the subspace
// alone: m_t is the least z-degree met by I, and S_t the support of the
// kG-ideal of z^{m_t}-layer projections.  In the nilpotent type this is an
// invariant: any chain presentation of I ends in exactly this term.  In
// the non-nilpotent type z^n = g^n - 1 lets higher-degree generators reach
// degree 0, so the chain may end strictly above (m_t, S_t).
NormalFormTerm lowest_term(const Ideal& I);

// Ann(M) = {a in H : rho(a) = 0}, as the nullspace of a |M|^2 x dim(H)
// coefficient matrix.  The result is checked to be a two-sided ideal.
Ideal annihilator_oracle(const ModuleRep& m);

// Closed form for Ann(M(k,i)):
//   (z^{k-1}(1-e_i), z^{k-2}(1-e_i)(1-e_{tau(i)}), ...,
//    (1-e_i)(1-e_{tau(i)}) ... (1-e_{tau^{k-1}(i)})).
// Index preconditions are those of build_M (but no representation
// matrices are needed).
Ideal annihilator_formula_M(const DatumPtr& datum, unsigned k, std::size_t i);

// Closed form for Ann(P_j), non-nilpotent type, j in Lambda_1:
//   (sum_{i in Lambda_0} e_i + sum_{j' in Lambda_1 - Orb(j)} e_{j'}).
Ideal annihilator_formula_P(const DatumPtr& datum, std::size_t j);

// Nilpotent type: {(1-e_i) : all i}.  Non-nilpotent type:
// {(1-e_i) : i in Lambda_0} together with one Ann(P_j) per Lambda_1
// orbit.  Pairwise distinctness is verified.
std::vector<Ideal> maximal_ideals(const DatumPtr& datum);

// H/I simple, tested as radical(H/I) = 0 (trace form of the regular
// representation; characteristic zero) and dim center(H/I) = 1.
// Throws std::domain_error when I = H.
bool is_maximal(const Ideal& I);

// Codimension-1 test: a one-dimensional quotient is a field, hence has no
// zero divisors.  Throws std::domain_error when I = H.
bool is_completely_prime(const Ideal& I);

// Jacobson radical of H/I (trace-form criterion), returned as its full
// preimage in H; the quotient is semisimple exactly when the result
// equals I.  With I = 0 this is the radical of H itself.
Ideal radical_of_quotient(const Ideal& I);

// Number of candidate chain presentations enumerate_ideals would build
// for given n and p (zero ideal included).
Int enumerate_candidate_count(unsigned n, std::size_t p);

// Every two-sided ideal of a nilpotent-type H: builds each candidate
// chain, deduplicates by canonical subspace, keeps the smallest chain
// seen for each ideal, and returns the list sorted by (dimension,
// canonical basis).  Throws std::domain_error on a non-nilpotent datum or
// when the candidate count exceeds cap.
std::vector<Ideal> enumerate_ideals(const DatumPtr& datum, unsigned long long cap = 1000000);

// Canonical serialization of the subspace (RREF basis with coefficients
// written in the datum's ambient cyclotomic order); equal ideals give
// equal strings.
std::string subspace_key(const DatumPtr& datum, const Subspace& space);

// Generator strings.  Human form follows the z^m e_S shorthand
// ("z*e3 + e1 + e2", full support printed as z^m or 1); machine form is
// the grammar  term ("+" term)*  with  term = "z^m*(" support ")" or
// "(" support ")"  and  support = "e<i>" ("+" "e<i>")*;  generators are
// joined by ";".  Ideals without presentation data print "0" when zero
// and "-" otherwise.
std::string gens_human(const Ideal& I);
std::string gens_machine(const Ideal& I);

}  // namespace rankone
