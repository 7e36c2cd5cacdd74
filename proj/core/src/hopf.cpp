#include "rankone/hopf.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace rankone {

namespace {

void require_same_datum(const DatumPtr& a, const DatumPtr& b) {
  if (a != b) throw std::invalid_argument("cross-datum arithmetic is not allowed");
}

}  // namespace

GroupDatum::GroupDatum(FiniteGroup group, CharacterTable table)
    : group_(std::move(group)), table_(std::move(table)) {}

DatumPtr GroupDatum::validate(FiniteGroup group, CharacterTable table, int chi_index, int g_index,
                              int alpha, std::map<std::size_t, std::vector<Matrix>> irreps) {
  if (table.group().size() != group.size())
    throw std::invalid_argument("datum: character table belongs to a different group");
  for (int x = 0; x < group.size(); ++x)
    for (int y = 0; y < group.size(); ++y)
      if (table.group().mul(x, y) != group.mul(x, y))
        throw std::invalid_argument("datum: character table belongs to a different group");

  CheckReport table_report = table.validate();
  if (!table_report.ok)
    throw std::invalid_argument("datum: invalid character table: " + table_report.problems[0]);

  const std::size_t p = table.count();
  if (chi_index < 0 || static_cast<std::size_t>(chi_index) >= p)
    throw std::invalid_argument("datum: chi index out of range");
  if (!table.is_linear(chi_index))
    throw std::invalid_argument("datum: chi must be a degree-1 character");
  if (g_index < 0 || g_index >= group.size())
    throw std::invalid_argument("datum: g index out of range");
  if (alpha != 0 && alpha != 1) throw std::invalid_argument("datum: alpha must be 0 or 1");

  const std::vector<Cyclotomic>& chi = table.values(chi_index);
  for (int x = 0; x < group.size(); ++x) {
    if (chi[x].is_zero()) throw std::invalid_argument("datum: chi vanishes on a group element");
    for (int y = 0; y < group.size(); ++y)
      if (chi[x] * chi[y] != chi[group.mul(x, y)])
        throw std::invalid_argument("datum: chi is not multiplicative");
  }

  for (int y = 0; y < group.size(); ++y)
    if (group.mul(g_index, y) != group.mul(y, g_index))
      throw std::invalid_argument("datum: g is not central");

  std::shared_ptr<GroupDatum> d(new GroupDatum(std::move(group), std::move(table)));
  d->chi_index_ = chi_index;
  d->g_ = g_index;
  d->q_ = chi[g_index];
  if (d->q_ == Cyclotomic::one())
    throw std::invalid_argument("datum rejected: n = 1 (chi(g) = 1)");
  d->n_ = static_cast<unsigned>(d->q_.multiplicative_order());
  d->g_pow_n_ = d->group_.power(g_index, d->n_);

  if (alpha == 0 || d->g_pow_n_ == d->group_.identity()) {
    d->kind_ = DatumKind::Nilpotent;
    d->alpha_ = 0;
    d->r_ = 0;
  } else {
    for (int x = 0; x < d->group_.size(); ++x)
      if (d->chi(x).pow(d->n_) != Cyclotomic::one())
        throw std::invalid_argument(
            "datum rejected: alpha(g^n - 1) != 0 and chi^n is not trivial");
    d->kind_ = DatumKind::NonNilpotent;
    d->alpha_ = 1;
    unsigned order_g = d->group_.element_order(g_index);
    if (order_g % d->n_ != 0)
      throw std::logic_error("datum: order of g is not a multiple of n");
    d->r_ = order_g / d->n_;
  }

  unsigned long fo = 1;
  for (std::size_t i = 0; i < p; ++i)
    for (const Cyclotomic& v : d->table_.values(i)) fo = lcm_ul(fo, v.order());
  for (const auto& [i, mats] : irreps)
    for (const Matrix& m : mats)
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) fo = lcm_ul(fo, m.at(r, c).order());
  d->field_order_ = fo;

  d->chi_pow_.assign(d->n_, std::vector<Cyclotomic>(d->group_.size()));
  d->chi_pow_neg_.assign(d->n_, std::vector<Cyclotomic>(d->group_.size()));
  for (int h = 0; h < d->group_.size(); ++h) {
    const Cyclotomic& v = d->chi(h);
    Cyclotomic vinv = d->chi(d->group_.inverse(h));
    Cyclotomic pos = Cyclotomic::one(), neg = Cyclotomic::one();
    for (unsigned m = 0; m < d->n_; ++m) {
      d->chi_pow_[m][h] = pos;
      d->chi_pow_neg_[m][h] = neg;
      pos *= v;
      neg *= vinv;
    }
  }

  d->degree_.resize(p);
  d->gamma_.resize(p);
  d->lambda_.resize(p);
  d->irreps_.resize(p);
  for (std::size_t i = 0; i < p; ++i) {
    Rational deg = d->table_.degree(i);
    d->degree_[i] = static_cast<long>(boost::multiprecision::numerator(deg));
    Cyclotomic inv_deg = Cyclotomic(deg).inverse();
    d->gamma_[i] = d->table_.value(i, g_index) * inv_deg;
    d->lambda_[i] = d->table_.value(i, d->g_pow_n_) * inv_deg;
    if (d->lambda_[i] != d->gamma_[i].pow(d->n_))
      throw std::logic_error("datum: lambda_i != gamma_i^n (g does not act as a scalar)");

    if (d->degree_[i] == 1) {
      std::vector<Matrix> rep(d->group_.size(), Matrix(1, 1));
      for (int h = 0; h < d->group_.size(); ++h) rep[h].at(0, 0) = d->table_.value(i, h);
      d->irreps_[i] = std::move(rep);
    } else if (auto it = irreps.find(i); it != irreps.end()) {
      const std::vector<Matrix>& rep = it->second;
      const std::size_t dd = static_cast<std::size_t>(d->degree_[i]);
      if (rep.size() != static_cast<std::size_t>(d->group_.size()))
        throw std::invalid_argument("irrep " + std::to_string(i) + ": wrong matrix count");
      for (const Matrix& m : rep)
        if (m.rows() != dd || m.cols() != dd)
          throw std::invalid_argument("irrep " + std::to_string(i) + ": wrong matrix size");
      if (!rep[d->group_.identity()].is_identity())
        throw std::invalid_argument("irrep " + std::to_string(i) + ": identity matrix missing");
      for (int x = 0; x < d->group_.size(); ++x) {
        if (rep[x].trace() != d->table_.value(i, x))
          throw std::invalid_argument("irrep " + std::to_string(i) +
                                      ": trace does not match the character");
        for (int y = 0; y < d->group_.size(); ++y)
          if (rep[x] * rep[y] != rep[d->group_.mul(x, y)])
            throw std::invalid_argument("irrep " + std::to_string(i) + ": not a homomorphism");
      }
      if (rep[g_index] != Matrix::identity(dd).scaled(d->gamma_[i]))
        throw std::invalid_argument("irrep " + std::to_string(i) +
                                    ": g does not act by the scalar gamma_i");
      d->irreps_[i] = rep;
    }
  }

  return d;
}

const std::vector<Matrix>* GroupDatum::irrep(std::size_t i) const {
  if (i >= irreps_.size() || !irreps_[i]) return nullptr;
  return &*irreps_[i];
}

void GroupDatum::mul_basis(unsigned a, int h, unsigned b, int h2,
                           std::vector<BasisTerm>& out) const {
  // (z^a h)(z^b h') = chi(h)^{-b} z^{a+b} (h h'), then z^{a+b} reduces via
  // z^n = alpha (g^n - 1); a + b <= 2n - 2, so the reduction fires at most
  // once.
  const Cyclotomic& c = chi_pow_neg_[b][h];
  unsigned l = a + b;
  int hh = group_.mul(h, h2);
  if (l < n_) {
    out.push_back({l, hh, c});
  } else if (alpha_ == 1) {
    out.push_back({l - n_, group_.mul(g_pow_n_, hh), c});
    out.push_back({l - n_, hh, -c});
  }
}

std::string GroupDatum::basis_label(unsigned l, int h) const {
  std::ostringstream s;
  if (l == 0) {
    s << group_.label(h);
    return s.str();
  }
  s << "z";
  if (l > 1) s << "^" << l;
  if (h != group_.identity()) s << "*" << group_.label(h);
  return s.str();
}

HopfElement::HopfElement(DatumPtr datum)
    : datum_(std::move(datum)), c_(datum_->dim(), Cyclotomic::zero()) {}

HopfElement HopfElement::one(const DatumPtr& datum) {
  return basis(datum, 0, datum->group().identity());
}

HopfElement HopfElement::basis(const DatumPtr& datum, unsigned l, int h) {
  if (l >= datum->n() || h < 0 || h >= datum->group().size())
    throw std::invalid_argument("basis: index out of range");
  HopfElement e(datum);
  e.c_[datum->basis_index(l, h)] = Cyclotomic::one();
  return e;
}

HopfElement HopfElement::from_group_algebra(const DatumPtr& datum,
                                            const std::vector<Cyclotomic>& kg, unsigned z_power) {
  if (static_cast<int>(kg.size()) != datum->group().size())
    throw std::invalid_argument("from_group_algebra: coefficient count mismatch");
  if (z_power >= datum->n()) throw std::invalid_argument("from_group_algebra: z power too large");
  HopfElement e(datum);
  for (int h = 0; h < datum->group().size(); ++h) e.c_[datum->basis_index(z_power, h)] = kg[h];
  return e;
}

bool HopfElement::is_zero() const {
  for (const Cyclotomic& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

HopfElement HopfElement::operator-() const {
  HopfElement out = *this;
  for (Cyclotomic& c : out.c_) c = -c;
  return out;
}

HopfElement& HopfElement::operator+=(const HopfElement& rhs) {
  require_same_datum(datum_, rhs.datum_);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += rhs.c_[i];
  return *this;
}

HopfElement& HopfElement::operator-=(const HopfElement& rhs) {
  require_same_datum(datum_, rhs.datum_);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= rhs.c_[i];
  return *this;
}

HopfElement HopfElement::scaled(const Cyclotomic& c) const {
  HopfElement out = *this;
  for (Cyclotomic& v : out.c_) v *= c;
  return out;
}

HopfElement HopfElement::pow(unsigned long e) const {
  HopfElement result = HopfElement::one(datum_);
  HopfElement base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

std::string HopfElement::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  const unsigned n = datum_->n();
  const int gs = datum_->group().size();
  for (unsigned l = 0; l < n; ++l) {
    for (int h = 0; h < gs; ++h) {
      const Cyclotomic& c = coeff(l, h);
      if (c.is_zero()) continue;
      std::string label = datum_->basis_label(l, h);
      bool inline_sign = c.is_rational();
      Cyclotomic abs = c;
      bool negative = false;
      if (inline_sign && c.rational_value() < 0) {
        negative = true;
        abs = -c;
      }
      if (first) {
        if (negative) out << "-";
        first = false;
      } else {
        out << (negative ? " - " : " + ");
      }
      bool is_unit = abs == Cyclotomic::one();
      bool trivial_basis = (l == 0 && h == datum_->group().identity());
      if (is_unit) {
        out << label;
      } else {
        std::string cs = abs.str();
        bool composite = cs.find(' ') != std::string::npos;
        if (composite) out << "(" << cs << ")";
        else out << cs;
        if (!trivial_basis) out << "*" << label;
      }
    }
  }
  return out.str();
}

HopfElement operator+(HopfElement a, const HopfElement& b) { return a += b; }
HopfElement operator-(HopfElement a, const HopfElement& b) { return a -= b; }

std::vector<Cyclotomic> hopf_mul_coords(const GroupDatum& d, const std::vector<Cyclotomic>& a,
                                        const std::vector<Cyclotomic>& b) {
  std::vector<Cyclotomic> out(d.dim(), Cyclotomic::zero());
  const int gs = d.group().size();
  std::vector<BasisTerm> terms;
  for (unsigned la = 0; la < d.n(); ++la) {
    for (int ha = 0; ha < gs; ++ha) {
      const Cyclotomic& ca = a[d.basis_index(la, ha)];
      if (ca.is_zero()) continue;
      for (unsigned lb = 0; lb < d.n(); ++lb) {
        for (int hb = 0; hb < gs; ++hb) {
          const Cyclotomic& cb = b[d.basis_index(lb, hb)];
          if (cb.is_zero()) continue;
          Cyclotomic c = ca * cb;
          terms.clear();
          d.mul_basis(la, ha, lb, hb, terms);
          for (const BasisTerm& t : terms) out[d.basis_index(t.l, t.h)] += c * t.coeff;
        }
      }
    }
  }
  return out;
}

HopfElement operator*(const HopfElement& a, const HopfElement& b) {
  require_same_datum(a.datum(), b.datum());
  HopfElement out(a.datum());
  std::vector<Cyclotomic> coords = hopf_mul_coords(*a.datum(), a.coords(), b.coords());
  for (unsigned l = 0; l < a.datum()->n(); ++l)
    for (int h = 0; h < a.datum()->group().size(); ++h)
      out.set_coeff(l, h, coords[a.datum()->basis_index(l, h)]);
  return out;
}

bool operator==(const HopfElement& a, const HopfElement& b) {
  if (a.datum() != b.datum()) return false;
  for (std::size_t i = 0; i < a.coords().size(); ++i)
    if (a.coords()[i] != b.coords()[i]) return false;
  return true;
}

bool operator!=(const HopfElement& a, const HopfElement& b) { return !(a == b); }

std::vector<Cyclotomic> sigma(const GroupDatum& d, const std::vector<Cyclotomic>& kg, long m) {
  if (static_cast<int>(kg.size()) != d.group().size())
    throw std::invalid_argument("sigma: coefficient count mismatch");
  std::vector<Cyclotomic> out(kg.size(), Cyclotomic::zero());
  for (int h = 0; h < d.group().size(); ++h) {
    if (kg[h].is_zero()) continue;
    out[h] = kg[h] * d.chi(h).pow(m);
  }
  return out;
}

TensorElement TensorElement::tensor(const HopfElement& a, const HopfElement& b) {
  require_same_datum(a.datum(), b.datum());
  TensorElement out(a.datum());
  for (std::size_t i = 0; i < a.coords().size(); ++i) {
    if (a.coords()[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coords().size(); ++j) {
      if (b.coords()[j].is_zero()) continue;
      out.add(i, j, a.coords()[i] * b.coords()[j]);
    }
  }
  return out;
}

void TensorElement::add(std::size_t i, std::size_t j, const Cyclotomic& c) {
  if (c.is_zero()) return;
  std::size_t key = i * datum_->dim() + j;
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

TensorElement& TensorElement::operator+=(const TensorElement& rhs) {
  require_same_datum(datum_, rhs.datum_);
  const std::size_t d = datum_->dim();
  for (const auto& [key, c] : rhs.terms_) add(key / d, key % d, c);
  return *this;
}

TensorElement operator*(const TensorElement& a, const TensorElement& b) {
  require_same_datum(a.datum(), b.datum());
  const GroupDatum& d = *a.datum();
  const std::size_t dim = d.dim();
  const int gs = d.group().size();
  TensorElement out(a.datum());
  std::vector<BasisTerm> left, right;
  for (const auto& [ka, ca] : a.terms()) {
    const std::size_t i1 = ka / dim, j1 = ka % dim;
    for (const auto& [kb, cb] : b.terms()) {
      const std::size_t i2 = kb / dim, j2 = kb % dim;
      Cyclotomic c = ca * cb;
      left.clear();
      right.clear();
      d.mul_basis(static_cast<unsigned>(i1 / gs), static_cast<int>(i1 % gs),
                  static_cast<unsigned>(i2 / gs), static_cast<int>(i2 % gs), left);
      d.mul_basis(static_cast<unsigned>(j1 / gs), static_cast<int>(j1 % gs),
                  static_cast<unsigned>(j2 / gs), static_cast<int>(j2 % gs), right);
      for (const BasisTerm& tl : left)
        for (const BasisTerm& tr : right)
          out.add(d.basis_index(tl.l, tl.h), d.basis_index(tr.l, tr.h),
                  c * tl.coeff * tr.coeff);
    }
  }
  return out;
}

bool operator==(const TensorElement& a, const TensorElement& b) {
  if (a.datum() != b.datum()) return false;
  if (a.terms().size() != b.terms().size()) return false;
  auto it = a.terms().begin();
  auto jt = b.terms().begin();
  for (; it != a.terms().end(); ++it, ++jt) {
    if (it->first != jt->first || it->second != jt->second) return false;
  }
  return true;
}

bool operator!=(const TensorElement& a, const TensorElement& b) { return !(a == b); }

TensorElement delta(const HopfElement& a) {
  const DatumPtr& d = a.datum();
  const int gs = d->group().size();
  // Delta(z^l h) = Delta(z)^l (h (x) h); powers of Delta(z) are built
  // incrementally rather than via the q-binomial expansion.
  TensorElement dz(d);
  dz.add(d->basis_index(1, d->group().identity()), d->basis_index(0, d->g_element()),
         Cyclotomic::one());
  dz.add(d->basis_index(0, d->group().identity()), d->basis_index(1, d->group().identity()),
         Cyclotomic::one());
  TensorElement out(d);
  TensorElement dz_pow(d);  // Delta(z)^l, starting at l = 0
  dz_pow.add(d->basis_index(0, d->group().identity()), d->basis_index(0, d->group().identity()),
             Cyclotomic::one());
  for (unsigned l = 0; l < d->n(); ++l) {
    for (int h = 0; h < gs; ++h) {
      const Cyclotomic& c = a.coeff(l, h);
      if (c.is_zero()) continue;
      TensorElement hh(d);
      hh.add(d->basis_index(0, h), d->basis_index(0, h), c);
      out += dz_pow * hh;
    }
    if (l + 1 < d->n()) dz_pow = dz_pow * dz;
  }
  return out;
}

Cyclotomic counit(const HopfElement& a) {
  Cyclotomic out = Cyclotomic::zero();
  for (int h = 0; h < a.datum()->group().size(); ++h) out += a.coeff(0, h);
  return out;
}

HopfElement antipode(const HopfElement& a) {
  const DatumPtr& d = a.datum();
  // S is an anti-algebra map: S(z^l h) = S(h) S(z)^l = h^{-1} (-z g^{-1})^l.
  HopfElement sz(d);
  sz.set_coeff(1, d->group().inverse(d->g_element()), Cyclotomic(-1));
  HopfElement out(d);
  HopfElement sz_pow = HopfElement::one(d);
  for (unsigned l = 0; l < d->n(); ++l) {
    for (int h = 0; h < d->group().size(); ++h) {
      const Cyclotomic& c = a.coeff(l, h);
      if (c.is_zero()) continue;
      out += (HopfElement::basis(d, 0, d->group().inverse(h)) * sz_pow).scaled(c);
    }
    if (l + 1 < d->n()) sz_pow = sz_pow * sz;
  }
  return out;
}

CheckReport verify_hopf_axioms(const DatumPtr& datum) {
  CheckReport report;
  const GroupDatum& d = *datum;
  const std::size_t dim = d.dim();
  const int gs = d.group().size();

  std::vector<TensorElement> delta_basis;
  std::vector<HopfElement> antipode_basis;
  std::vector<Cyclotomic> counit_basis;
  delta_basis.reserve(dim);
  antipode_basis.reserve(dim);
  counit_basis.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    HopfElement b = HopfElement::basis(datum, static_cast<unsigned>(i / gs),
                                       static_cast<int>(i % gs));
    delta_basis.push_back(delta(b));
    antipode_basis.push_back(antipode(b));
    counit_basis.push_back(counit(b));
  }

  const HopfElement unit = HopfElement::one(datum);

  for (std::size_t i = 0; i < dim; ++i) {
    const std::string label = d.basis_label(static_cast<unsigned>(i / gs),
                                            static_cast<int>(i % gs));
    const TensorElement& dx = delta_basis[i];

    // Coassociativity in the triple tensor, sparse over flat keys.
    std::map<std::size_t, Cyclotomic> lhs, rhs;
    auto acc = [](std::map<std::size_t, Cyclotomic>& m, std::size_t k, const Cyclotomic& c) {
      auto it = m.find(k);
      if (it == m.end()) {
        if (!c.is_zero()) m.emplace(k, c);
        return;
      }
      it->second += c;
      if (it->second.is_zero()) m.erase(it);
    };
    for (const auto& [key, c] : dx.terms()) {
      std::size_t u = key / dim, v = key % dim;
      for (const auto& [key2, c2] : delta_basis[u].terms()) {
        std::size_t a = key2 / dim, b = key2 % dim;
        acc(lhs, (a * dim + b) * dim + v, c * c2);
      }
      for (const auto& [key2, c2] : delta_basis[v].terms()) {
        std::size_t a = key2 / dim, b = key2 % dim;
        acc(rhs, (u * dim + a) * dim + b, c * c2);
      }
    }
    if (lhs != rhs) report.fail("coassociativity fails at " + label);

    // Counit laws: (eps (x) id) Delta = id = (id (x) eps) Delta.
    HopfElement left(datum), right(datum);
    for (const auto& [key, c] : dx.terms()) {
      std::size_t u = key / dim, v = key % dim;
      left += HopfElement::basis(datum, static_cast<unsigned>(v / gs), static_cast<int>(v % gs))
                  .scaled(c * counit_basis[u]);
      right += HopfElement::basis(datum, static_cast<unsigned>(u / gs), static_cast<int>(u % gs))
                   .scaled(c * counit_basis[v]);
    }
    HopfElement self = HopfElement::basis(datum, static_cast<unsigned>(i / gs),
                                          static_cast<int>(i % gs));
    if (left != self) report.fail("left counit law fails at " + label);
    if (right != self) report.fail("right counit law fails at " + label);

    // Antipode law: m(S (x) id) Delta = eps(.) 1 = m(id (x) S) Delta.
    HopfElement s_left(datum), s_right(datum);
    for (const auto& [key, c] : dx.terms()) {
      std::size_t u = key / dim, v = key % dim;
      HopfElement bu = HopfElement::basis(datum, static_cast<unsigned>(u / gs),
                                          static_cast<int>(u % gs));
      HopfElement bv = HopfElement::basis(datum, static_cast<unsigned>(v / gs),
                                          static_cast<int>(v % gs));
      s_left += (antipode_basis[u] * bv).scaled(c);
      s_right += (bu * antipode_basis[v]).scaled(c);
    }
    HopfElement expected = unit.scaled(counit_basis[i]);
    if (s_left != expected) report.fail("antipode law (S (x) id) fails at " + label);
    if (s_right != expected) report.fail("antipode law (id (x) S) fails at " + label);
  }

  // Delta and eps are algebra maps on every pair of basis elements.
  std::vector<BasisTerm> terms;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      terms.clear();
      d.mul_basis(static_cast<unsigned>(i / gs), static_cast<int>(i % gs),
                  static_cast<unsigned>(j / gs), static_cast<int>(j % gs), terms);
      TensorElement dprod(datum);
      Cyclotomic eprod = Cyclotomic::zero();
      for (const BasisTerm& t : terms) {
        std::size_t k = d.basis_index(t.l, t.h);
        for (const auto& [key, c] : delta_basis[k].terms())
          dprod.add(key / dim, key % dim, c * t.coeff);
        eprod += counit_basis[k] * t.coeff;
      }
      TensorElement lhs = delta_basis[i] * delta_basis[j];
      if (lhs != dprod)
        report.fail("Delta is not multiplicative at pair (" +
                    d.basis_label(static_cast<unsigned>(i / gs), static_cast<int>(i % gs)) + ", " +
                    d.basis_label(static_cast<unsigned>(j / gs), static_cast<int>(j % gs)) + ")");
      if (counit_basis[i] * counit_basis[j] != eprod)
        report.fail("eps is not multiplicative at pair (" +
                    d.basis_label(static_cast<unsigned>(i / gs), static_cast<int>(i % gs)) + ", " +
                    d.basis_label(static_cast<unsigned>(j / gs), static_cast<int>(j % gs)) + ")");
    }
  }

  return report;
}

}  // namespace rankone
