#include "rankone/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rankone {

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table,
                                    std::vector<std::string> labels) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw std::invalid_argument("group: empty multiplication table");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("group: multiplication table is not square");
    for (int v : row)
      if (v < 0 || v >= n) throw std::invalid_argument("group: table entry out of range");
  }

  int identity = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = table[e][x] == x && table[x][e] == x;
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0) throw std::invalid_argument("group: no identity element");

  std::vector<int> inverse(n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (table[x][y] == identity && table[y][x] == identity) {
        inverse[x] = y;
        break;
      }
    }
    if (inverse[x] < 0) throw std::invalid_argument("group: element without inverse");
  }

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (table[table[x][y]][z] != table[x][table[y][z]])
          throw std::invalid_argument("group: multiplication is not associative");

  if (labels.empty()) {
    labels.resize(n);
    for (int x = 0; x < n; ++x) labels[x] = (x == identity) ? "1" : "g" + std::to_string(x);
  }
  if (static_cast<int>(labels.size()) != n)
    throw std::invalid_argument("group: label count mismatch");
  {
    std::set<std::string> seen(labels.begin(), labels.end());
    if (static_cast<int>(seen.size()) != n)
      throw std::invalid_argument("group: duplicate labels");
  }

  FiniteGroup g;
  g.table_ = std::move(table);
  g.labels_ = std::move(labels);
  g.inverse_ = std::move(inverse);
  g.identity_ = identity;
  return g;
}

FiniteGroup FiniteGroup::abelian(const std::vector<unsigned>& factors) {
  if (factors.empty()) throw std::invalid_argument("abelian: empty factor list");
  long long size = 1;
  for (unsigned f : factors) {
    if (f == 0) throw std::invalid_argument("abelian: zero factor");
    size *= f;
    if (size > 4096) throw std::invalid_argument("abelian: group too large");
  }
  const int n = static_cast<int>(size);
  const std::size_t m = factors.size();

  auto digits = [&](int x) {
    std::vector<unsigned> d(m);
    for (std::size_t j = m; j-- > 0;) {
      d[j] = static_cast<unsigned>(x) % factors[j];
      x /= static_cast<int>(factors[j]);
    }
    return d;
  };
  auto index = [&](const std::vector<unsigned>& d) {
    int x = 0;
    for (std::size_t j = 0; j < m; ++j) x = x * static_cast<int>(factors[j]) + static_cast<int>(d[j]);
    return x;
  };

  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x) {
    std::vector<unsigned> dx = digits(x);
    for (int y = 0; y < n; ++y) {
      std::vector<unsigned> dy = digits(y);
      std::vector<unsigned> dz(m);
      for (std::size_t j = 0; j < m; ++j) dz[j] = (dx[j] + dy[j]) % factors[j];
      table[x][y] = index(dz);
    }
  }

  std::vector<std::string> labels(n);
  for (int x = 0; x < n; ++x) {
    if (x == 0) {
      labels[x] = "1";
      continue;
    }
    std::vector<unsigned> d = digits(x);
    std::ostringstream s;
    s << "g(";
    for (std::size_t j = 0; j < m; ++j) s << (j ? "," : "") << d[j];
    s << ")";
    labels[x] = s.str();
  }

  FiniteGroup g = from_table(std::move(table), std::move(labels));
  g.factors_ = factors;
  return g;
}

FiniteGroup FiniteGroup::with_labels(std::vector<std::string> labels) const {
  if (static_cast<int>(labels.size()) != size())
    throw std::invalid_argument("group: label count mismatch");
  std::set<std::string> seen(labels.begin(), labels.end());
  if (static_cast<int>(seen.size()) != size())
    throw std::invalid_argument("group: duplicate labels");
  for (const std::string& s : labels)
    if (s.empty()) throw std::invalid_argument("group: empty label");
  FiniteGroup g = *this;
  g.labels_ = std::move(labels);
  return g;
}

int FiniteGroup::power(int x, long e) const {
  int base = x;
  if (e < 0) {
    base = inverse_[x];
    e = -e;
  }
  int result = identity_;
  while (e > 0) {
    if (e & 1) result = table_[result][base];
    base = table_[base][base];
    e >>= 1;
  }
  return result;
}

unsigned FiniteGroup::element_order(int x) const {
  unsigned ord = 1;
  int p = x;
  while (p != identity_) {
    p = table_[p][x];
    ++ord;
  }
  return ord;
}

unsigned FiniteGroup::exponent() const {
  unsigned e = 1;
  for (int x = 0; x < size(); ++x) e = static_cast<unsigned>(std::lcm(e, element_order(x)));
  return e;
}

bool FiniteGroup::is_abelian() const {
  for (int x = 0; x < size(); ++x)
    for (int y = x + 1; y < size(); ++y)
      if (table_[x][y] != table_[y][x]) return false;
  return true;
}

std::vector<int> FiniteGroup::center() const {
  std::vector<int> out;
  for (int x = 0; x < size(); ++x) {
    bool central = true;
    for (int y = 0; y < size() && central; ++y) central = table_[x][y] == table_[y][x];
    if (central) out.push_back(x);
  }
  return out;
}

std::vector<std::vector<int>> FiniteGroup::conjugacy_classes() const {
  std::vector<bool> seen(size(), false);
  std::vector<std::vector<int>> classes;
  for (int x = 0; x < size(); ++x) {
    if (seen[x]) continue;
    std::set<int> cls;
    for (int y = 0; y < size(); ++y) cls.insert(table_[table_[y][x]][inverse_[y]]);
    std::vector<int> v(cls.begin(), cls.end());
    for (int z : v) seen[z] = true;
    classes.push_back(std::move(v));
  }
  return classes;
}

int FiniteGroup::index_of_label(const std::string& s) const {
  for (int x = 0; x < size(); ++x)
    if (labels_[x] == s) return x;
  return -1;
}

CharacterTable::CharacterTable(FiniteGroup group, std::vector<std::vector<Cyclotomic>> rows)
    : group_(std::move(group)), rows_(std::move(rows)) {
  if (rows_.empty()) throw std::invalid_argument("character table: no rows");
  for (const auto& row : rows_)
    if (static_cast<int>(row.size()) != group_.size())
      throw std::invalid_argument("character table: row length must equal group order");
}

CharacterTable CharacterTable::for_abelian(const FiniteGroup& group) {
  const std::vector<unsigned>& factors = group.abelian_factors();
  if (factors.empty())
    throw std::invalid_argument("for_abelian: group was not built from a factor list");
  const int n = group.size();
  const std::size_t m = factors.size();

  auto digits = [&](int x) {
    std::vector<unsigned> d(m);
    for (std::size_t j = m; j-- > 0;) {
      d[j] = static_cast<unsigned>(x) % factors[j];
      x /= static_cast<int>(factors[j]);
    }
    return d;
  };

  std::vector<std::vector<Cyclotomic>> rows(n);
  for (int i = 0; i < n; ++i) {
    std::vector<unsigned> di = digits(i);
    rows[i].reserve(n);
    for (int h = 0; h < n; ++h) {
      std::vector<unsigned> dh = digits(h);
      Cyclotomic v = Cyclotomic::one();
      for (std::size_t j = 0; j < m; ++j) {
        if (factors[j] == 1) continue;
        v *= Cyclotomic::root_of_unity(factors[j],
                                       static_cast<long>(di[j]) * static_cast<long>(dh[j]));
      }
      rows[i].push_back(std::move(v));
    }
  }
  return CharacterTable(group, std::move(rows));
}

Rational CharacterTable::degree(std::size_t i) const {
  const Cyclotomic& d = rows_[i][group_.identity()];
  if (!d.is_rational()) throw std::domain_error("character degree is irrational");
  return d.rational_value();
}

bool CharacterTable::is_linear(std::size_t i) const {
  return rows_[i][group_.identity()] == Cyclotomic::one();
}

int CharacterTable::find_row(const std::vector<Cyclotomic>& values) const {
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (rows_[i] == values) return static_cast<int>(i);
  return -1;
}

CheckReport CharacterTable::validate() const {
  CheckReport report;
  const int n = group_.size();
  const std::size_t p = rows_.size();

  auto classes = group_.conjugacy_classes();
  if (p != classes.size()) {
    std::ostringstream s;
    s << "row count " << p << " does not match " << classes.size() << " conjugacy classes";
    report.fail(s.str());
  }

  Rational degree_square_sum(0);
  for (std::size_t i = 0; i < p; ++i) {
    const Cyclotomic& d = rows_[i][group_.identity()];
    if (!d.is_rational() || boost::multiprecision::denominator(d.rational_value()) != 1 ||
        d.rational_value() <= 0) {
      report.fail("character " + std::to_string(i) + ": degree is not a positive integer");
      continue;
    }
    degree_square_sum += d.rational_value() * d.rational_value();
  }
  if (degree_square_sum != Rational(n))
    report.fail("sum of squared degrees does not equal the group order");

  for (std::size_t i = 0; i < p; ++i) {
    for (const auto& cls : classes) {
      for (std::size_t k = 1; k < cls.size(); ++k) {
        if (rows_[i][cls[k]] != rows_[i][cls[0]]) {
          report.fail("character " + std::to_string(i) + ": not constant on a conjugacy class");
          k = cls.size();
        }
      }
    }
  }

  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = i; j < p; ++j) {
      Cyclotomic s = Cyclotomic::zero();
      for (int h = 0; h < n; ++h) s += rows_[i][h] * conj(rows_[j][h]);
      Cyclotomic expected = (i == j) ? Cyclotomic(Rational(n)) : Cyclotomic::zero();
      if (s != expected) {
        std::ostringstream msg;
        msg << "row orthogonality fails for characters " << i << " and " << j;
        report.fail(msg.str());
      }
    }
  }

  if (p == classes.size()) {
    for (std::size_t a = 0; a < classes.size(); ++a) {
      for (std::size_t b = a; b < classes.size(); ++b) {
        Cyclotomic s = Cyclotomic::zero();
        for (std::size_t i = 0; i < p; ++i)
          s += rows_[i][classes[a][0]] * conj(rows_[i][classes[b][0]]);
        Cyclotomic expected = (a == b)
            ? Cyclotomic(make_rational(Int(n), Int(classes[a].size())))
            : Cyclotomic::zero();
        if (s != expected) {
          std::ostringstream msg;
          msg << "column orthogonality fails for classes " << a << " and " << b;
          report.fail(msg.str());
        }
      }
    }
  }

  return report;
}

}  // namespace rankone
