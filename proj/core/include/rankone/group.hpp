#pragma once

// Finite groups as validated multiplication tables, plus character tables.
// Elements are indices 0..|G|-1.  Abelian groups built from a factor list
// [n1, ..., nm] index both elements and characters big-endian in mixed
// radix, so element i is the tuple (i_1, ..., i_m) with i_1 the most
// significant digit.

#include "rankone/field.hpp"

#include <string>
#include <vector>

namespace rankone {

struct CheckReport {
  bool ok = true;
  std::vector<std::string> problems;
  void fail(std::string msg) {
    ok = false;
    problems.push_back(std::move(msg));
  }
};

class FiniteGroup {
 public:
  // Validates the table: closure, identity, inverses, associativity.
  // Throws std::invalid_argument with a reason on rejection.
  static FiniteGroup from_table(std::vector<std::vector<int>> table,
                                std::vector<std::string> labels = {});

  // Direct product Z_{n1} x ... x Z_{nm}; every n_j >= 1.
  static FiniteGroup abelian(const std::vector<unsigned>& factors);

  int size() const { return static_cast<int>(table_.size()); }
  int mul(int x, int y) const { return table_[x][y]; }
  int identity() const { return identity_; }
  int inverse(int x) const { return inverse_[x]; }
  int power(int x, long e) const;
  unsigned element_order(int x) const;
  unsigned exponent() const;  // lcm of element orders

  bool is_abelian() const;
  std::vector<int> center() const;
  std::vector<std::vector<int>> conjugacy_classes() const;

  const std::string& label(int x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }
  int index_of_label(const std::string& s) const;  // -1 if absent

  // Same group with new element labels (count and uniqueness checked).
  FiniteGroup with_labels(std::vector<std::string> labels) const;

  // Factor list when built via abelian(); empty otherwise.
  const std::vector<unsigned>& abelian_factors() const { return factors_; }

 private:
  FiniteGroup() = default;
  std::vector<std::vector<int>> table_;
  std::vector<std::string> labels_;
  std::vector<int> inverse_;
  std::vector<unsigned> factors_;
  int identity_ = 0;
};

class CharacterTable {
 public:
  // User-supplied rows; each row has one value per group element.
  CharacterTable(FiniteGroup group, std::vector<std::vector<Cyclotomic>> rows);

  // All irreducible characters of a group built via FiniteGroup::abelian,
  // indexed big-endian in the same mixed radix as the elements.
  static CharacterTable for_abelian(const FiniteGroup& group);

  const FiniteGroup& group() const { return group_; }
  std::size_t count() const { return rows_.size(); }
  const std::vector<Cyclotomic>& values(std::size_t i) const { return rows_[i]; }
  const Cyclotomic& value(std::size_t i, int element) const { return rows_[i][element]; }

  // chi_i(1); validated to be a positive rational integer.
  Rational degree(std::size_t i) const;
  bool is_linear(std::size_t i) const;

  int find_row(const std::vector<Cyclotomic>& values) const;  // -1 if absent

  // Degrees, class constancy, row count, both orthogonality relations.
  CheckReport validate() const;

 private:
  FiniteGroup group_;
  std::vector<std::vector<Cyclotomic>> rows_;
};

}  // namespace rankone
