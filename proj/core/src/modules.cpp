#include "rankone/modules.hpp"

#include "rankone/ideals.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rankone {

std::size_t Tau::apply(std::size_t i, long power) const {
  long m = power % static_cast<long>(order);
  if (m < 0) m += static_cast<long>(order);
  std::size_t out = i;
  for (long s = 0; s < m; ++s) out = perm[out];
  return out;
}

Tau compute_tau(const DatumPtr& datum) {
  const CharacterTable& table = datum->table();
  const FiniteGroup& group = datum->group();
  const std::size_t p = table.count();
  const std::vector<Cyclotomic>& chi = table.values(datum->chi_index());

  Tau tau;
  tau.perm.resize(p);
  tau.inv.resize(p);
  for (std::size_t i = 0; i < p; ++i) {
    std::vector<Cyclotomic> target(group.size());
    for (int h = 0; h < group.size(); ++h)
      target[h] = chi[group.inverse(h)] * table.value(i, h);  // chi^{-1}(h) chi_i(h)
    int row = table.find_row(target);
    if (row < 0)
      throw std::domain_error("compute_tau: chi^{-1} chi_i is not a row of the character table");
    tau.perm[i] = static_cast<std::size_t>(row);
  }
  for (std::size_t i = 0; i < p; ++i) tau.inv[tau.perm[i]] = i;

  // Independent derivation: z e_s = e_{tau(s)} z under hopf_mul.
  std::vector<CentralIdempotent> es = central_idempotents(datum);
  HopfElement z = HopfElement::basis(datum, 1, group.identity());
  for (std::size_t s = 0; s < p; ++s) {
    HopfElement lhs = z * HopfElement::from_group_algebra(datum, es[s].element);
    HopfElement rhs = HopfElement::from_group_algebra(datum, es[tau.perm[s]].element) * z;
    if (lhs != rhs)
      throw std::logic_error("compute_tau: character-table tau disagrees with z e_s = e_tau(s) z");
  }

  // Order of the permutation: lcm of cycle lengths.
  tau.order = 1;
  std::vector<bool> seen(p, false);
  for (std::size_t i = 0; i < p; ++i) {
    if (seen[i]) continue;
    std::size_t len = 0, cur = i;
    do {
      seen[cur] = true;
      cur = tau.perm[cur];
      ++len;
    } while (cur != i);
    tau.order = std::lcm(tau.order, len);
  }

  return tau;
}

IndexPartition partition_indices(const DatumPtr& datum) {
  IndexPartition out;
  out.kind = datum->kind();
  const std::size_t p = datum->p();
  if (datum->kind() == DatumKind::Nilpotent) {
    out.omega0.resize(p);
    for (std::size_t i = 0; i < p; ++i) out.omega0[i] = i;
    return out;
  }
  for (std::size_t i = 0; i < p; ++i) {
    if (datum->lambda(i) == Cyclotomic::one()) out.lambda0.push_back(i);
    else out.lambda1.push_back(i);
  }
  Tau tau = compute_tau(datum);
  std::vector<bool> seen(p, false);
  for (std::size_t j : out.lambda1) {
    if (seen[j]) continue;
    std::vector<std::size_t> orbit;
    std::size_t cur = j;
    do {
      orbit.push_back(cur);
      seen[cur] = true;
      cur = tau.perm[cur];
    } while (cur != j);
    std::sort(orbit.begin(), orbit.end());
    if (orbit.size() != datum->n())
      throw std::logic_error("partition_indices: a Lambda_1 orbit does not have size n");
    for (std::size_t t : orbit) {
      bool in_lambda1 = std::find(out.lambda1.begin(), out.lambda1.end(), t) != out.lambda1.end();
      if (!in_lambda1)
        throw std::logic_error("partition_indices: tau does not preserve Lambda_1");
    }
    out.lambda1_orbits.push_back(std::move(orbit));
  }
  for (std::size_t i : out.lambda0)
    if (datum->lambda(tau.perm[i]) != Cyclotomic::one())
      throw std::logic_error("partition_indices: tau does not preserve Lambda_0");
  return out;
}

Matrix ModuleRep::act_basis(unsigned l, int h) const {
  return act_z.pow(l) * act_group[h];
}

Matrix ModuleRep::act_element(const HopfElement& a) const {
  Matrix out(dim, dim);
  // Accumulate act_z^l (sum_h c_{l,h} act_group[h]) over l.
  Matrix zp = Matrix::identity(dim);
  for (unsigned l = 0; l < datum->n(); ++l) {
    Matrix layer(dim, dim);
    bool any = false;
    for (int h = 0; h < datum->group().size(); ++h) {
      const Cyclotomic& c = a.coeff(l, h);
      if (c.is_zero()) continue;
      layer = layer + act_group[h].scaled(c);
      any = true;
    }
    if (any) out = out + zp * layer;
    if (l + 1 < datum->n()) zp = zp * act_z;
  }
  return out;
}

namespace {

ModuleRep build_blocks(const DatumPtr& datum, unsigned k, std::size_t i, bool wrap,
                       std::string label) {
  const std::vector<Matrix>* rep = datum->irrep(i);
  if (!rep)
    throw std::invalid_argument("module: no representation matrices available for character " +
                                std::to_string(i));
  const std::size_t d = static_cast<std::size_t>(datum->simple_dim(i));
  ModuleRep m;
  m.datum = datum;
  m.label = std::move(label);
  m.dim = k * d;

  m.act_group.reserve(datum->group().size());
  for (int s = 0; s < datum->group().size(); ++s) {
    Matrix ms(m.dim, m.dim);
    for (unsigned l = 0; l < k; ++l) {
      const Cyclotomic& scale = datum->chi_pow_neg(l, s);  // chi^{-l}(s)
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) {
          const Cyclotomic& v = (*rep)[s].at(r, c);
          if (v.is_zero()) continue;
          ms.at(l * d + r, l * d + c) = scale * v;
        }
    }
    m.act_group.push_back(std::move(ms));
  }

  m.act_z = Matrix(m.dim, m.dim);
  for (unsigned l = 0; l + 1 < k; ++l)
    for (std::size_t r = 0; r < d; ++r) m.act_z.at((l + 1) * d + r, l * d + r) = Cyclotomic::one();
  if (wrap) {
    Cyclotomic scale = datum->lambda(i) - Cyclotomic::one();
    for (std::size_t r = 0; r < d; ++r) m.act_z.at(r, (k - 1) * d + r) = scale;
  }
  return m;
}

}  // namespace

ModuleRep build_M(const DatumPtr& datum, unsigned k, std::size_t i) {
  if (k < 1 || k > datum->n()) throw std::invalid_argument("build_M: k out of range");
  if (i >= datum->p()) throw std::invalid_argument("build_M: character index out of range");
  if (datum->kind() == DatumKind::NonNilpotent && datum->lambda(i) != Cyclotomic::one())
    throw std::invalid_argument("build_M: index lies in Lambda_1; M(k,i) requires lambda_i = 1");
  std::ostringstream label;
  label << "M(" << k << "," << i << ")";
  return build_blocks(datum, k, i, false, label.str());
}

ModuleRep build_P(const DatumPtr& datum, std::size_t j) {
  if (datum->kind() != DatumKind::NonNilpotent)
    throw std::invalid_argument("build_P: P_j exists only for the non-nilpotent type");
  if (j >= datum->p()) throw std::invalid_argument("build_P: character index out of range");
  if (datum->lambda(j) == Cyclotomic::one())
    throw std::invalid_argument("build_P: index lies in Lambda_0; P_j requires lambda_j != 1");
  std::ostringstream label;
  label << "P(" << j << ")";
  return build_blocks(datum, datum->n(), j, true, label.str());
}

ModuleRep regular_module(const DatumPtr& datum) {
  const std::size_t dim = datum->dim();
  const int gs = datum->group().size();
  ModuleRep m;
  m.datum = datum;
  m.label = "H";
  m.dim = dim;
  std::vector<BasisTerm> terms;
  for (int s = 0; s < gs; ++s) {
    Matrix ms(dim, dim);
    for (std::size_t col = 0; col < dim; ++col) {
      terms.clear();
      datum->mul_basis(0, s, static_cast<unsigned>(col / gs), static_cast<int>(col % gs), terms);
      for (const BasisTerm& t : terms) ms.at(datum->basis_index(t.l, t.h), col) = t.coeff;
    }
    m.act_group.push_back(std::move(ms));
  }
  m.act_z = Matrix(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    terms.clear();
    datum->mul_basis(1, datum->group().identity(), static_cast<unsigned>(col / gs),
                     static_cast<int>(col % gs), terms);
    for (const BasisTerm& t : terms) m.act_z.at(datum->basis_index(t.l, t.h), col) = t.coeff;
  }
  return m;
}

CheckReport module_verify(const ModuleRep& m) {
  CheckReport report;
  const GroupDatum& d = *m.datum;
  const FiniteGroup& g = d.group();

  if (m.act_group.size() != static_cast<std::size_t>(g.size())) {
    report.fail("wrong number of group-action matrices");
    return report;
  }
  if (!m.act_group[g.identity()].is_identity())
    report.fail("identity does not act as the identity matrix");
  for (int x = 0; x < g.size(); ++x)
    for (int y = 0; y < g.size(); ++y)
      if (m.act_group[x] * m.act_group[y] != m.act_group[g.mul(x, y)]) {
        std::ostringstream s;
        s << "group action is not a homomorphism at (" << g.label(x) << ", " << g.label(y) << ")";
        report.fail(s.str());
      }

  for (int s = 0; s < g.size(); ++s) {
    if (m.act_z * m.act_group[s] != (m.act_group[s] * m.act_z).scaled(d.chi(s))) {
      report.fail("commutation relation z s = chi(s) s z fails at " + g.label(s));
    }
  }

  Matrix zn = m.act_z.pow(d.n());
  Matrix expected(m.dim, m.dim);
  if (d.alpha() == 1)
    expected = m.act_group[d.g_element()].pow(d.n()) - Matrix::identity(m.dim);
  if (zn != expected) report.fail("z^n relation fails");

  return report;
}

}  // namespace rankone
