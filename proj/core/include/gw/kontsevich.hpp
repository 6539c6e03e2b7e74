#pragma once

#include <vector>

#include "gw/arith.hpp"

namespace gw {

/// Memoized rational-curve counts n_1, n_2, ..., n_k, where n_d is the
/// number of rational plane curves of degree d through 3d - 1 general
/// points. Entries are appended in increasing degree; n_1 is always 1 and
/// every entry is positive.
class NdTable {
 public:
  /// The table {1: 1}.
  NdTable();

  /// Adopts n_1, ..., n_k as given. Throws DomainError if the list is
  /// empty, values[0] != 1, or any value is not positive. Used to feed
  /// perturbed tables into the associativity checks.
  static NdTable from_values(std::vector<Integer> values);

  int max_degree() const { return static_cast<int>(values_.size()); }
  bool contains(int d) const { return d >= 1 && d <= max_degree(); }

  /// n_d. Throws DomainError if d is not in the table.
  const Integer& at(int d) const;

  /// Appends n_{max_degree()+1}. Throws DomainError unless value > 0.
  void append(Integer value);

  const std::vector<Integer>& values() const { return values_; }

  friend bool operator==(const NdTable&, const NdTable&) = default;

 private:
  std::vector<Integer> values_;
};

/// One summand of f: n_{d1} n_{d2} d1 d2^3 C(3d-4, 3d2-1), with d2 = d - d1.
Integer f_summand(int d, int d1, const NdTable& table);

/// One summand of g: n_{d1} n_{d2} d1^2 d2^2 C(3d-4, 3d2-2), with d2 = d - d1.
Integer g_summand(int d, int d1, const NdTable& table);

/// f(n_1, ..., n_{d-1}) summed over d1 + d2 = d, d1, d2 >= 1.
/// Throws DomainError for d < 2 or if the table stops short of d - 1.
Integer f_sum(int d, const NdTable& table);

/// g(n_1, ..., n_{d-1}), same conventions as f_sum.
Integer g_sum(int d, const NdTable& table);

/// n_d = g - f, extending the table in increasing degree as needed.
/// Throws DomainError for d <= 0.
const Integer& n_d(int d, NdTable& table);

/// Table holding n_1 .. n_{d_max} from the closed-form sums.
NdTable kontsevich_table(int d_max);

}  // namespace gw
