#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "gw/arith.hpp"

namespace gw {

/// Shape of a divisor on a line, written as its multiplicity vector
/// [l_1, l_2, ..., l_r]: l_i blocks of size i.
///
/// Trailing zeros are stripped on construction, so two partitions compare
/// equal exactly when they have the same blocks. The empty vector is the
/// empty partition.
///
/// Ordering is the enumeration order used throughout the library: shorter
/// multiplicity vectors first, then lexicographic.
class Partition {
 public:
  Partition() = default;

  /// Throws DomainError if any multiplicity is negative.
  explicit Partition(std::vector<int> multiplicities);
  Partition(std::initializer_list<int> multiplicities)
      : Partition(std::vector<int>(multiplicities)) {}

  /// l_1 copies of size-1 blocks, i.e. [count].
  static Partition simple(int count);

  std::span<const int> multiplicities() const { return mult_; }

  /// l_i for block size i >= 1; zero past the end of the vector.
  int count(int block_size) const;

  /// Largest block size present (0 for the empty partition).
  int length() const { return static_cast<int>(mult_.size()); }

  bool empty() const { return mult_.empty(); }

  /// |p| = sum i * l_i.
  int weight() const;

  /// s(p) = sum l_i, the number of blocks.
  int size() const;

  /// m(p) = prod i^{l_i}.
  Integer mult_m() const;

  /// n(p) = s(p)! / prod l_i!, the number of distinct orderings of blocks.
  Integer perm_count_n() const;

  /// sum (i - 1) l_i: the node count carried by tangency blocks.
  int tangency_excess() const { return weight() - size(); }

  /// True when every block has size 1.
  bool all_simple() const { return mult_.size() <= 1; }

  /// Bracket notation, e.g. "[0,1]" or "[]".
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a,
                                          const Partition& b);

 private:
  std::vector<int> mult_;
};

/// Blockwise l_i(a) <= l_i(b) for every i.
bool leq(const Partition& a, const Partition& b);

/// p - sub = [l_i(p) - l_i(sub)]. Throws DomainError naming the first
/// offending block size if sub is not <= p.
Partition complement(const Partition& p, const Partition& sub);

/// Blockwise sum [l_i(a) + l_i(b)].
Partition operator+(const Partition& a, const Partition& b);

/// Every partition of weight w, each once, in enumeration order.
std::vector<Partition> partitions_of_weight(int w);

/// Every q with leq(q, p), each once, in enumeration order. There are
/// prod (l_i + 1) of them.
std::vector<Partition> subpartitions(const Partition& p);

}  // namespace gw
