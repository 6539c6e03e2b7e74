#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>

#include "gw/arith.hpp"
#include "gw/partition.hpp"

namespace gw::severi {

/// Index of an auxiliary degree N_{e, delta, fixed, free}: the number of
/// delta-nodal degree-e curves (through the right number of general points)
/// meeting a fixed line in a divisor of shape `fixed` at fixed location plus
/// a divisor of shape `free` at free location.
///
/// A plain Severi degree N_{e, delta} is the key with both shapes empty.
struct AuxKey {
  int e = 0;
  int delta = 0;
  Partition fixed;
  Partition free;

  /// Collapses keys that impose no condition on the line: an empty fixed
  /// shape together with an all-simple free shape is the plain degree.
  AuxKey normalized() const;

  bool is_plain() const { return fixed.empty() && free.empty(); }

  /// "N{3,1,[2],[1]}"
  std::string to_string() const;

  friend bool operator==(const AuxKey&, const AuxKey&) = default;
  friend auto operator<=>(const AuxKey&, const AuxKey&) = default;
};

/// Thrown when formula (5) needs an auxiliary degree no provider knows.
class MissingAuxError : public std::runtime_error {
 public:
  explicit MissingAuxError(AuxKey key);
  const AuxKey& key() const noexcept { return key_; }

 private:
  AuxKey key_;
};

/// Lookup contract for auxiliary degrees. Implementations must be
/// deterministic and safe for concurrent const access.
class AuxProvider {
 public:
  virtual ~AuxProvider() = default;

  /// The value for `key` (normalization already applied by the caller is
  /// not assumed), or nullopt when unknown.
  virtual std::optional<Integer> lookup(const AuxKey& key) const = 0;
};

/// Finite table of auxiliary degrees. Keys are stored normalized.
class TableAuxProvider : public AuxProvider {
 public:
  /// Throws DomainError if the normalized key is already present.
  void insert(const AuxKey& key, Integer value);

  std::optional<Integer> lookup(const AuxKey& key) const override;

  std::size_t size() const { return entries_.size(); }
  const std::map<AuxKey, Integer>& entries() const { return entries_; }

 private:
  std::map<AuxKey, Integer> entries_;
};

/// Consults `overlay` first and falls back to `base`.
class LayeredAuxProvider : public AuxProvider {
 public:
  LayeredAuxProvider(std::shared_ptr<const AuxProvider> overlay,
                     std::shared_ptr<const AuxProvider> base);

  std::optional<Integer> lookup(const AuxKey& key) const override;

 private:
  std::shared_ptr<const AuxProvider> overlay_;
  std::shared_ptr<const AuxProvider> base_;
};

/// Auxiliary degrees read off or solved from the two worked examples, plus
/// the closed families they imply:
///
///   N{3,3}               = 15        N{3,2,[1],[2]}       = 21
///   N{3,1,[2],[1]}       = 12        N{3,1,[0,1],[1]}     = 10
///   N{3,1,[1],[0,1]}     = 16        N{3,2,[],[1,1]}      = 30
///   N{3,1,[],[0,0,1]}    = 21
///   N{e,2}               = Roberts' quartic in e, e >= 3
///   N{e,1,[1],[e-1]}     = 3 (e-1)^2
///   N{e,1,[],[e-2,1]}    = 6 e (e-1) (e-2)
///   N{e,0,fixed,free}    = m(free) n(free)   (fixed + free of weight e)
///
/// The last line is the degree of the locus of divisors of shape `free` on
/// the line; with no nodes to impose that is the whole condition.
std::shared_ptr<const AuxProvider> paper_aux();

}  // namespace gw::severi
