#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gw/arith.hpp"
#include "gw/kontsevich.hpp"

namespace gw::quantum {

/// Cohomology basis of the plane: T_0 the fundamental class, T_1 the line
/// class, T_2 the point class. The enumerator value is the complex degree.
enum class BasisClass : int { Fundamental = 0, Line = 1, Point = 2 };

constexpr int degree_of(BasisClass c) { return static_cast<int>(c); }

/// Throws DomainError unless index is 0, 1 or 2.
BasisClass basis_class(int index);

/// How the four distinguished insertions T_i T_j T_k T_l are split across
/// the two components of the degenerate source curve.
struct PairGrouping {
  std::array<BasisClass, 2> first;
  std::array<BasisClass, 2> second;

  /// (T_2 T_2 | T_1 T_1): two points on one side, two lines on the other.
  static PairGrouping points_lines();
  /// (T_2 T_1 | T_2 T_1).
  static PairGrouping mixed();

  /// Parses "pp,ll", "pp|ll", "pl,pl", "pl|pl" (and any other two-letter
  /// pairs over {f,l,p}). Returns nullopt on anything else.
  static std::optional<PairGrouping> parse(std::string_view spec);

  /// "pp|ll" style name.
  std::string name() const;

  friend bool operator==(const PairGrouping&, const PairGrouping&) = default;
};

/// Insertion data of a reduced genus-0 invariant: degree plus the number of
/// T_2, T_1 and T_0 insertions.
struct InvariantKey {
  int degree = 0;
  int points = 0;
  int lines = 0;
  int fundamentals = 0;

  int insertions() const { return points + lines + fundamentals; }
};

/// Degree-0 three-point invariant: 1 when the classes' degrees add up to 2.
Integer classical_triple(BasisClass a, BasisClass b, BasisClass c);

struct KunnethTerm {
  BasisClass e;
  BasisClass f;
  Integer coefficient;
};

/// Nonzero terms of the diagonal class sum g^{e,f} T_e (x) T_f of the
/// plane, ordered by e.
std::vector<KunnethTerm> kunneth_pairs();

/// Genus-0 invariant of the plane reduced to the table of n_d:
///  - degree 0: the classical triple when there are exactly three
///    insertions, zero otherwise;
///  - degree d >= 1: zero with any T_0 insertion (fundamental class axiom)
///    or unless points == 3d - 1; otherwise d^lines * n_d (divisor axiom).
Integer reduced_invariant(const InvariantKey& key, const NdTable& table);

/// Right-hand side of the four-point splitting relation:
///
///   sum over d1 + d2 = d, n1 + n2 = n (weight C(n, n1)), (e, f) of
///     I_{d1}(gamma^{n1} T_i T_j T_e) * I_{d2}(gamma^{n2} T_k T_l T_f) g^{e,f}
///
/// Splits with d1 == 0 or d2 == 0 are included only if include_degenerate.
Integer four_point_sum(int d, int n, const PairGrouping& grouping,
                       const NdTable& table, bool include_degenerate);

/// four_point_sum over (pp|ll) minus (pl|pl) with n = 3d - 4 point
/// insertions. Zero for every d exactly when the table is associative.
Integer wdvv_residual(int d, const NdTable& table);

/// Builds n_1 .. n_{d_max} by solving the four-point relation for the one
/// degenerate contribution, n_d, in increasing degree. Independent of the
/// closed-form sums in kontsevich.hpp.
NdTable n_d_via_wdvv(int d_max);

}  // namespace gw::quantum
