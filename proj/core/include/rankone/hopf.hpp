#pragma once

// The Hopf algebra H attached to a group datum D = (G, chi, g, alpha):
// basis {z^l h | 0 <= l <= n-1, h in G} with relations
//   z^n = alpha (g^n - 1),   z s = chi(s) s z,
// comultiplication Delta(z) = z (x) g + 1 (x) z, Delta(s) = s (x) s,
// counit eps(z) = 0, eps(s) = 1, antipode S(z) = -z g^{-1}, S(s) = s^{-1}.
//
// n is the multiplicative order of q = chi(g).  A datum is nilpotent when
// alpha (g^n - 1) = 0 (normalized to alpha = 0, so z^n = 0) and
// non-nilpotent when alpha = 1, g^n != 1 and chi^n is trivial (then the
// order of g is n r with r > 1).

#include "rankone/group.hpp"
#include "rankone/linalg.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace rankone {

enum class DatumKind { Nilpotent, NonNilpotent };

class GroupDatum;
using DatumPtr = std::shared_ptr<const GroupDatum>;

// One term of a basis-pair product; a product (z^a h)(z^b h') expands to
// at most two basis terms (the z-power reduction fires at most once).
struct BasisTerm {
  unsigned l;
  int h;
  Cyclotomic coeff;
};

class GroupDatum {
 public:
  // Validates and normalizes the datum; throws std::invalid_argument with
  // the rejection reason.  irreps supplies representation matrices for
  // characters of degree > 1 (degree-1 rows get automatic 1x1 matrices);
  // they are needed only for module construction.
  static DatumPtr validate(FiniteGroup group, CharacterTable table, int chi_index, int g_index,
                           int alpha,
                           std::map<std::size_t, std::vector<Matrix>> irreps = {});

  const FiniteGroup& group() const { return group_; }
  const CharacterTable& table() const { return table_; }
  int chi_index() const { return chi_index_; }
  int g_element() const { return g_; }
  int alpha() const { return alpha_; }
  DatumKind kind() const { return kind_; }
  unsigned n() const { return n_; }
  unsigned r() const { return r_; }  // 0 for nilpotent type
  const Cyclotomic& q() const { return q_; }

  std::size_t p() const { return table_.count(); }
  std::size_t dim() const { return static_cast<std::size_t>(n_) * group_.size(); }
  std::size_t basis_index(unsigned l, int h) const {
    return static_cast<std::size_t>(l) * group_.size() + h;
  }

  // Common cyclotomic order containing every character value; canonical
  // ambient field for serialization and ordering.
  unsigned long field_order() const { return field_order_; }

  const Cyclotomic& chi(int h) const { return table_.values(chi_index_)[h]; }
  // chi(h)^m and chi(h)^{-m}, cached for 0 <= m <= n-1.
  const Cyclotomic& chi_pow(unsigned m, int h) const { return chi_pow_[m][h]; }
  const Cyclotomic& chi_pow_neg(unsigned m, int h) const { return chi_pow_neg_[m][h]; }

  // Simple-module data per character index.
  long simple_dim(std::size_t i) const { return degree_[i]; }
  const Cyclotomic& gamma(std::size_t i) const { return gamma_[i]; }    // g scalar
  const Cyclotomic& lambda(std::size_t i) const { return lambda_[i]; }  // g^n scalar
  // Irrep matrices for V_i, or nullptr when unavailable.
  const std::vector<Matrix>* irrep(std::size_t i) const;

  int g_pow_n() const { return g_pow_n_; }

  // (z^a h)(z^b h2) as one or two basis terms appended to out.
  void mul_basis(unsigned a, int h, unsigned b, int h2, std::vector<BasisTerm>& out) const;

  std::string basis_label(unsigned l, int h) const;

 private:
  GroupDatum(FiniteGroup group, CharacterTable table);
  FiniteGroup group_;
  CharacterTable table_;
  int chi_index_ = 0;
  int g_ = 0;
  int alpha_ = 0;
  DatumKind kind_ = DatumKind::Nilpotent;
  unsigned n_ = 0;
  unsigned r_ = 0;
  Cyclotomic q_;
  unsigned long field_order_ = 1;
  int g_pow_n_ = 0;
  std::vector<std::vector<Cyclotomic>> chi_pow_, chi_pow_neg_;
  std::vector<long> degree_;
  std::vector<Cyclotomic> gamma_, lambda_;
  std::vector<std::optional<std::vector<Matrix>>> irreps_;
};

class HopfElement {
 public:
  explicit HopfElement(DatumPtr datum);

  static HopfElement zero(DatumPtr datum) { return HopfElement(std::move(datum)); }
  static HopfElement one(const DatumPtr& datum);
  static HopfElement basis(const DatumPtr& datum, unsigned l, int h);
  // z^z_power * (group-algebra element given by |G| coefficients)
  static HopfElement from_group_algebra(const DatumPtr& datum, const std::vector<Cyclotomic>& kg,
                                        unsigned z_power = 0);

  const DatumPtr& datum() const { return datum_; }
  const Cyclotomic& coeff(unsigned l, int h) const { return c_[datum_->basis_index(l, h)]; }
  void set_coeff(unsigned l, int h, Cyclotomic v) { c_[datum_->basis_index(l, h)] = std::move(v); }
  const std::vector<Cyclotomic>& coords() const { return c_; }

  bool is_zero() const;

  HopfElement operator-() const;
  HopfElement& operator+=(const HopfElement& rhs);
  HopfElement& operator-=(const HopfElement& rhs);
  HopfElement scaled(const Cyclotomic& c) const;
  HopfElement pow(unsigned long e) const;

  std::string str() const;

 private:
  DatumPtr datum_;
  std::vector<Cyclotomic> c_;
};

HopfElement operator+(HopfElement a, const HopfElement& b);
HopfElement operator-(HopfElement a, const HopfElement& b);
HopfElement operator*(const HopfElement& a, const HopfElement& b);  // hopf_mul
bool operator==(const HopfElement& a, const HopfElement& b);
bool operator!=(const HopfElement& a, const HopfElement& b);

// Raw coordinate-vector product in the z^l h basis; the workhorse behind
// operator* and the ideal closure loops.
std::vector<Cyclotomic> hopf_mul_coords(const GroupDatum& d, const std::vector<Cyclotomic>& a,
                                        const std::vector<Cyclotomic>& b);

// sigma^m applied to a group-algebra element: sigma(h) = chi(h) h on group
// elements, extended linearly.  Satisfies z^m h = sigma^m(h) z^m.
std::vector<Cyclotomic> sigma(const GroupDatum& d, const std::vector<Cyclotomic>& kg, long m);

// Sparse element of H (x) H, keyed by basis-pair index i*dim+j.
class TensorElement {
 public:
  explicit TensorElement(DatumPtr datum) : datum_(std::move(datum)) {}

  static TensorElement tensor(const HopfElement& a, const HopfElement& b);

  const DatumPtr& datum() const { return datum_; }
  const std::map<std::size_t, Cyclotomic>& terms() const { return terms_; }
  void add(std::size_t i, std::size_t j, const Cyclotomic& c);

  TensorElement& operator+=(const TensorElement& rhs);

 private:
  DatumPtr datum_;
  std::map<std::size_t, Cyclotomic> terms_;  // zero coefficients are erased
};

TensorElement operator*(const TensorElement& a, const TensorElement& b);
bool operator==(const TensorElement& a, const TensorElement& b);
bool operator!=(const TensorElement& a, const TensorElement& b);

TensorElement delta(const HopfElement& a);
Cyclotomic counit(const HopfElement& a);
HopfElement antipode(const HopfElement& a);

// Exhaustive audit over all basis elements and basis pairs:
// coassociativity, counit laws, antipode law, Delta/eps multiplicativity.
CheckReport verify_hopf_axioms(const DatumPtr& datum);

}  // namespace rankone
