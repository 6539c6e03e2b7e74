#pragma once

#include <string>
#include <vector>

#include "gw/arith.hpp"
#include "gw/aux_provider.hpp"
#include "gw/partition.hpp"

namespace gw::severi {

/// Number of ways to route delta1 rulings of the bottom curve: j of them
/// through the fixed_simple simple points of the free part on the axis,
/// the remaining delta1 - j through the `interior` points,
///
///   sum_j C(fixed_simple, j) C(interior, delta1 - j),
///
/// with j restricted to max(0, delta1 - free_simple) <= j <= min(fixed_simple,
/// delta1): a ruling not passing through one of the fixed_simple points
/// must land in one of the free_simple simple slots of the complementary
/// shape. Returns 0 on an empty range. All arguments must be >= 0.
Integer ruling_placements(int fixed_simple, int delta1, int free_simple,
                          int interior);

/// One summand of formula (5) for a split (pi, pi') of the axis divisor.
struct SplitTerm {
  Partition pi;            ///< outer shape, |pi| = d - 1
  Partition pi_free;       ///< pi', located freely
  Partition pi_fixed_top;  ///< pi - pi', fixed on the top curve
  int delta1 = 0;          ///< nodes on the bottom curve, s(pi - pi')
  int delta2 = 0;          ///< nodes on the top curve
  Integer placement;       ///< ruling_placements factor
  Integer m_outer;         ///< m(pi)
  Integer m_comp;          ///< m(pi - pi')
  Integer n_comp;          ///< n(pi - pi')
  AuxKey aux;
  Integer aux_value;
  Integer product;  ///< m_outer * m_comp * n_comp * placement * aux_value

  friend bool operator==(const SplitTerm&, const SplitTerm&) = default;
};

enum class DropReason { NegativeDelta2, EmptyPlacement, ZeroAux };

const char* to_string(DropReason reason);

/// A (pi, pi') candidate that contributes nothing. Fields after the reason
/// are filled as far as evaluation got.
struct DroppedCandidate {
  Partition pi;
  Partition pi_free;
  int delta1 = 0;
  int delta2 = 0;
  DropReason reason = DropReason::NegativeDelta2;

  friend bool operator==(const DroppedCandidate&,
                         const DroppedCandidate&) = default;
};

struct Formula5Evaluation {
  int d = 0;
  int delta = 0;
  std::vector<SplitTerm> terms;
  std::vector<DroppedCandidate> dropped;
  Integer total;
};

/// Evaluates formula (5) for N_{d,delta} with d + 1 points on the bottom
/// component. Candidates are visited in enumeration order (pi over
/// partitions_of_weight(d - 1), pi' over subpartitions(pi)).
///
/// Throws DomainError unless d >= 2 and 0 <= delta < d, and
/// MissingAuxError when a contributing candidate needs an unknown key.
Formula5Evaluation evaluate_formula5(int d, int delta,
                                     const AuxProvider& aux);

std::vector<SplitTerm> formula5_terms(int d, int delta,
                                      const AuxProvider& aux);

Integer formula5(int d, int delta, const AuxProvider& aux);

struct LedgerEntry {
  std::string label;
  Integer value;

  friend bool operator==(const LedgerEntry&, const LedgerEntry&) = default;
};

/// Labelled contributions with a running total.
class ComponentLedger {
 public:
  void add(std::string label, Integer value);

  const std::vector<LedgerEntry>& entries() const { return entries_; }
  const Integer& total() const { return total_; }

  /// Value of the entry with this label. Throws DomainError if absent.
  const Integer& value(const std::string& label) const;

  friend bool operator==(const ComponentLedger&,
                         const ComponentLedger&) = default;

 private:
  std::vector<LedgerEntry> entries_;
  Integer total_ = 0;
};

/// Groups terms into limit components, one per (pi, delta1), in the order
/// the components first occur. Labels read "V[pi](delta1,delta2)".
ComponentLedger group_components(const std::vector<SplitTerm>& terms);

/// Roberts' count of 2-nodal degree-d curves,
/// 9/2 d^4 - 18 d^3 + 6 d^2 + 81/2 d - 33. Requires d >= 3.
Integer roberts_closed(int d);

/// 18 d^3 - 81 d^2 + 84 d + 12, the step N_{d,2} - N_{d-1,2}. Requires d >= 4.
Integer delta2_difference(int d);

/// Limit components A..G of N_{d,2}, d >= 4, as closed polynomials in d.
/// A is N_{d-1,2}; G uses 16 C(d-3, 2).
ComponentLedger delta2_components(int d);

/// Components A..G of N_{4,3}, computed from formula5_terms(4, 3, aux)
/// grouped by limit component. Defaults to paper_aux().
ComponentLedger quartic_components();
ComponentLedger quartic_components(const AuxProvider& aux);

/// Irreducible rational quartics through 11 points: N_{4,3} minus the
/// C(11, 2) cubic-plus-line configurations.
Integer irreducible_rational_quartics();
Integer irreducible_rational_quartics(const AuxProvider& aux);

}  // namespace gw::severi
