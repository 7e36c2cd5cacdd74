#include "rankone/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace rankone {

namespace {

using Poly = std::vector<Rational>;  // ascending degree

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_add(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  trim(out);
  return out;
}

Poly poly_scale(const Poly& a, const Rational& c) {
  Poly out(a.size(), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * c;
  trim(out);
  return out;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

// a = q*b + r with deg r < deg b; b must be nonzero.
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
  trim(a);
  Poly q;
  if (a.size() < b.size()) return {q, a};
  q.assign(a.size() - b.size() + 1, Rational(0));
  const Rational lead = b.back();
  while (a.size() >= b.size()) {
    Rational c = a.back() / lead;
    std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    trim(a);
    if (a.empty()) break;
  }
  return {q, a};
}

Poly int_to_poly(const std::vector<Int>& p) {
  Poly out;
  out.reserve(p.size());
  for (const Int& c : p) out.emplace_back(c);
  return out;
}

// Reduce p mod Phi_n in place; result has exactly phi(n) coefficients.
std::vector<Rational> reduce_mod_phi(Poly p, unsigned long n) {
  const std::vector<Int>& phi = cyclotomic_polynomial(n);
  const std::size_t deg = phi.size() - 1;  // == euler_phi(n), phi is monic
  while (p.size() > deg) {
    Rational c = p.back();
    std::size_t shift = p.size() - phi.size();
    if (c != 0) {
      for (std::size_t i = 0; i < phi.size(); ++i) p[shift + i] -= c * Rational(phi[i]);
    }
    p.pop_back();
    while (!p.empty() && p.size() > deg && p.back() == 0) p.pop_back();
  }
  p.resize(deg, Rational(0));
  return p;
}

}  // namespace

Rational make_rational(Int num, Int den) {
  if (den == 0) throw std::domain_error("make_rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

std::string rational_str(const Rational& r) {
  Int num = boost::multiprecision::numerator(r);
  Int den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

unsigned long gcd_ul(unsigned long a, unsigned long b) { return std::gcd(a, b); }
unsigned long lcm_ul(unsigned long a, unsigned long b) { return std::lcm(a, b); }

unsigned long euler_phi(unsigned long n) {
  if (n == 0) throw std::domain_error("euler_phi(0)");
  unsigned long result = n;
  unsigned long m = n;
  for (unsigned long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

// Exact division by a monic integer polynomial; the remainder must vanish.
std::vector<Int> monic_div(const std::vector<Int>& num, const std::vector<Int>& div) {
  std::vector<Int> q(num.size() - div.size() + 1, Int(0));
  std::vector<Int> rem = num;
  for (std::size_t shift = q.size(); shift-- > 0;) {
    Int c = rem[shift + div.size() - 1];
    if (c != 0) {
      q[shift] = c;
      for (std::size_t i = 0; i < div.size(); ++i) rem[shift + i] -= c * div[i];
    }
  }
  for (const Int& c : rem)
    if (c != 0) throw std::logic_error("monic_div: division not exact");
  return q;
}

const std::vector<Int>& cyclo_impl(unsigned long n,
                                   std::map<unsigned long, std::vector<Int>>& cache) {
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d.
  std::vector<Int> num(n + 1, Int(0));
  num[0] = -1;
  num[n] = 1;
  for (unsigned long d = 1; d < n; ++d) {
    if (n % d == 0) num = monic_div(num, cyclo_impl(d, cache));
  }
  return cache.emplace(n, std::move(num)).first->second;
}

}  // namespace

const std::vector<Int>& cyclotomic_polynomial(unsigned long n) {
  if (n == 0) throw std::domain_error("cyclotomic_polynomial(0)");
  static std::map<unsigned long, std::vector<Int>> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  return cyclo_impl(n, cache);
}

Cyclotomic::Cyclotomic() : order_(1), coeffs_{Rational(0)} {}

Cyclotomic::Cyclotomic(const Rational& r) : order_(1), coeffs_{r} {}

Cyclotomic::Cyclotomic(long v) : order_(1), coeffs_{Rational(v)} {}

Cyclotomic::Cyclotomic(unsigned long order, std::vector<Rational> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  if (order_ == 0) throw std::domain_error("Cyclotomic: order must be positive");
  if (coeffs_.size() != euler_phi(order_))
    throw std::invalid_argument("Cyclotomic: coefficient count must equal phi(order)");
}

Cyclotomic Cyclotomic::root_of_unity(unsigned long n, long k) {
  if (n == 0) throw std::domain_error("root_of_unity: order must be positive");
  long km = k % static_cast<long>(n);
  if (km < 0) km += static_cast<long>(n);
  Poly p(static_cast<std::size_t>(km) + 1, Rational(0));
  p.back() = 1;
  return Cyclotomic(n, reduce_mod_phi(std::move(p), n));
}

bool Cyclotomic::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) throw std::domain_error("rational_value: element is irrational");
  return coeffs_[0];
}

Cyclotomic Cyclotomic::promoted(unsigned long n) const {
  if (n == order_) return *this;
  if (n % order_ != 0) throw std::domain_error("promoted: target order not a multiple");
  const unsigned long step = n / order_;
  Poly p;
  p.resize((coeffs_.size() - 1) * step + 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) p[i * step] = coeffs_[i];
  return Cyclotomic(n, reduce_mod_phi(std::move(p), n));
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (Rational& c : out.coeffs_) c = -c;
  return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
  unsigned long n = lcm_ul(order_, rhs.order_);
  Cyclotomic a = promoted(n);
  Cyclotomic b = rhs.promoted(n);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
  *this = std::move(a);
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) {
  *this += -rhs;
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) {
  unsigned long n = lcm_ul(order_, rhs.order_);
  Cyclotomic a = promoted(n);
  Cyclotomic b = rhs.promoted(n);
  Poly prod = poly_mul(a.coeffs_, b.coeffs_);
  *this = Cyclotomic(n, reduce_mod_phi(std::move(prod), n));
  return *this;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  // Extended Euclid in Q[x] against Phi_n, which is irreducible, so the
  // gcd is a nonzero constant and s(x) / gcd inverts this element.
  Poly r0 = int_to_poly(cyclotomic_polynomial(order_));
  Poly r1 = coeffs_;
  trim(r1);
  Poly s0 = {};            // coefficient of this element in r0
  Poly s1 = {Rational(1)};
  while (true) {
    auto [q, r2] = poly_divmod(r0, r1);
    if (r2.empty()) break;
    Poly s2 = poly_add(s0, poly_scale(poly_mul(q, s1), Rational(-1)));
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.size() != 1)
    throw std::domain_error("inverse: gcd with the cyclotomic polynomial is non-constant");
  Poly inv = poly_scale(s1, Rational(1) / r1[0]);
  return Cyclotomic(order_, reduce_mod_phi(std::move(inv), order_));
}

Cyclotomic Cyclotomic::pow(long e) const {
  Cyclotomic base = *this;
  if (e < 0) {
    base = base.inverse();
    e = -e;
  }
  Cyclotomic result = Cyclotomic::one();
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

unsigned long Cyclotomic::multiplicative_order() const {
  if (is_zero()) throw std::domain_error("multiplicative_order of zero");
  // Roots of unity in Q(zeta_N) have order dividing N (2N for odd N).
  unsigned long bound = (order_ % 2 == 0) ? order_ : 2 * order_;
  Cyclotomic p = *this;
  const Cyclotomic unity = Cyclotomic::one();
  for (unsigned long d = 1; d <= bound; ++d) {
    if (p == unity) return d;
    p *= *this;
  }
  throw std::domain_error("multiplicative_order: element is not a root of unity");
}

std::string Cyclotomic::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    Rational abs = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    bool unit_coeff = (abs == 1);
    if (k == 0) {
      out << rational_str(abs);
    } else {
      if (!unit_coeff) out << rational_str(abs) << "*";
      out << "zeta(" << order_ << ")";
      if (k > 1) out << "^" << k;
    }
  }
  return out.str();
}

Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  unsigned long n = lcm_ul(a.order(), b.order());
  return a.promoted(n).coeffs() == b.promoted(n).coeffs();
}

bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

Cyclotomic conj(const Cyclotomic& a) {
  Cyclotomic out = Cyclotomic::zero();
  const unsigned long n = a.order();
  for (std::size_t k = 0; k < a.coeffs().size(); ++k) {
    if (a.coeffs()[k] == 0) continue;
    out += Cyclotomic(a.coeffs()[k]) * Cyclotomic::root_of_unity(n, -static_cast<long>(k));
  }
  return out.promoted(lcm_ul(out.order(), n));
}

int compare_at(unsigned long n, const Cyclotomic& a, const Cyclotomic& b) {
  Cyclotomic pa = a.promoted(n);
  Cyclotomic pb = b.promoted(n);
  for (std::size_t i = 0; i < pa.coeffs().size(); ++i) {
    if (pa.coeffs()[i] < pb.coeffs()[i]) return -1;
    if (pa.coeffs()[i] > pb.coeffs()[i]) return 1;
  }
  return 0;
}

}  // namespace rankone
