#include "gw/arith.hpp"

#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

#include "gw/error.hpp"

namespace gw {
namespace {

class BinomialTable {
 public:
  Integer get(std::int64_t n, std::int64_t k) {
    {
      std::shared_lock lock(mutex_);
      if (n < static_cast<std::int64_t>(rows_.size())) {
        return rows_[n][k];
      }
    }
    std::unique_lock lock(mutex_);
    grow_to(n);
    return rows_[n][k];
  }

 private:
  // Row n holds C(n, 0..n).
  void grow_to(std::int64_t n) {
    if (rows_.empty()) rows_.push_back({Integer(1)});
    while (static_cast<std::int64_t>(rows_.size()) <= n) {
      const auto& prev = rows_.back();
      std::vector<Integer> row(prev.size() + 1);
      row.front() = 1;
      row.back() = 1;
      for (std::size_t k = 1; k + 1 < row.size(); ++k) {
        row[k] = prev[k - 1] + prev[k];
      }
      rows_.push_back(std::move(row));
    }
  }

  std::shared_mutex mutex_;
  std::vector<std::vector<Integer>> rows_;
};

BinomialTable& binomial_table() {
  static BinomialTable table;
  return table;
}

}  // namespace

Integer binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) {
    throw DomainError("binomial: n must be non-negative, got " +
                      std::to_string(n));
  }
  if (k < 0 || k > n) return 0;
  return binomial_table().get(n, k);
}

Integer factorial(std::int64_t n) {
  if (n < 0) {
    throw DomainError("factorial: n must be non-negative, got " +
                      std::to_string(n));
  }
  Integer result = 1;
  for (std::int64_t i = 2; i <= n; ++i) result *= i;
  return result;
}

Integer ipow(std::int64_t base, unsigned exponent) {
  return boost::multiprecision::pow(Integer(base), exponent);
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  // cpp_rational rejects a negative denominator outright.
  if (den < 0) return Rational(Integer(-num), Integer(-den));
  return Rational(num, den);
}

Integer require_integral(const Rational& value) {
  const Integer den = boost::multiprecision::denominator(value);
  if (den != 1) {
    throw InternalError("expected an integral value, got " + value.str());
  }
  return boost::multiprecision::numerator(value);
}

}  // namespace gw
