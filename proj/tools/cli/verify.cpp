#include "cli/verify.hpp"

#include <functional>
#include <sstream>

#include "gw/error.hpp"
#include "gw/kontsevich.hpp"
#include "gw/partition.hpp"
#include "gw/quantum.hpp"
#include "gw/severi.hpp"

namespace gw::cli {
namespace {

// Failure detail; empty string means the check passed.
using Check = std::function<std::string()>;

template <typename A, typename B>
std::string expect_eq(const std::string& what, const A& actual,
                      const B& expected) {
  if (actual == expected) return {};
  std::ostringstream os;
  os << what << ": got " << actual << ", expected " << expected;
  return os.str();
}

template <typename... Details>
std::string first_failure(Details&&... details) {
  std::string out;
  ((out.empty() ? void(out = std::forward<Details>(details)) : void()), ...);
  return out;
}

// Number of nonincreasing positive sequences summing to `remaining` with
// parts <= max_part.
long long count_nonincreasing(int remaining, int max_part) {
  if (remaining == 0) return 1;
  long long total = 0;
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    total += count_nonincreasing(remaining - part, part);
  }
  return total;
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  if (options.max_degree < 4) {
    throw DomainError("verify: max degree must be >= 4");
  }
  const int max_d = options.max_degree;
  const auto aux = options.aux ? options.aux : severi::paper_aux();
  const NdTable table = kontsevich_table(max_d);

  std::vector<std::pair<std::string, Check>> checks;
  checks.reserve(16);

  checks.emplace_back("kontsevich n_1, n_3, n_4", [&] {
    return first_failure(expect_eq("n_1", table.at(1), 1),
                          expect_eq("n_3", table.at(3), 12),
                          expect_eq("n_4", table.at(4), 620));
  });
  checks.emplace_back("kontsevich f(4), g(4) and summands", [&] {
    return first_failure(
        expect_eq("f(4)", f_sum(4, table), 2228),
        expect_eq("g(4)", g_sum(4, table), 2848),
        expect_eq("f(4) d1=3", f_summand(4, 3, table), 1008),
        expect_eq("f(4) d1=2", f_summand(4, 2, table), 896),
        expect_eq("f(4) d1=1", f_summand(4, 1, table), 324),
        expect_eq("g(4) d1=3", g_summand(4, 3, table), 864),
        expect_eq("g(4) d1=2", g_summand(4, 2, table), 1120),
        expect_eq("g(4) d1=1", g_summand(4, 1, table), 864));
  });
  checks.emplace_back(
      "closed-form n_d == four-point n_d, d <= " + std::to_string(max_d), [&] {
        const NdTable via_wdvv = quantum::n_d_via_wdvv(max_d);
        for (int d = 2; d <= max_d; ++d) {
          if (auto e = expect_eq("n_" + std::to_string(d), via_wdvv.at(d),
                                 table.at(d));
              !e.empty()) {
            return e;
          }
        }
        return std::string{};
      });
  checks.emplace_back(
      "associativity residuals vanish, d <= " + std::to_string(max_d), [&] {
        for (int d = 2; d <= max_d; ++d) {
          if (auto e = expect_eq("residual(" + std::to_string(d) + ")",
                                 quantum::wdvv_residual(d, table), 0);
              !e.empty()) {
            return e;
          }
        }
        return std::string{};
      });
  checks.emplace_back("associativity detects corrupted n_d", [&] {
    for (int corrupt = 2; corrupt <= max_d; ++corrupt) {
      auto values = table.values();
      values[corrupt - 1] += 1;
      const auto bad = NdTable::from_values(std::move(values));
      bool detected = false;
      for (int d = 2; d <= max_d && !detected; ++d) {
        detected = quantum::wdvv_residual(d, bad) != 0;
      }
      if (!detected) {
        return "corrupting n_" + std::to_string(corrupt) + " went unnoticed";
      }
    }
    return std::string{};
  });
  checks.emplace_back("N_{4,3} = 675 with components A..G", [&] {
    const auto ledger = severi::quartic_components(*aux);
    const std::vector<int> expected = {15, 147, 180, 10, 200, 60, 63};
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (auto e = expect_eq("component " + ledger.entries()[i].label,
                             ledger.entries()[i].value, expected[i]);
          !e.empty()) {
        return e;
      }
    }
    return first_failure(expect_eq("N_{4,3}", ledger.total(), 675),
                          expect_eq("formula5(4,3)",
                                    severi::formula5(4, 3, *aux), 675));
  });
  checks.emplace_back("irreducible rational quartics = 620 = n_4", [&] {
    const Integer quartics = severi::irreducible_rational_quartics(*aux);
    return first_failure(expect_eq("irreducible quartics", quartics, 620),
                          expect_eq("n_4", table.at(4), quartics));
  });
  checks.emplace_back("formula5(4,2) = Roberts(4) = 225", [&] {
    return first_failure(
        expect_eq("roberts(4)", severi::roberts_closed(4), 225),
         expect_eq("formula5(4,2)", severi::formula5(4, 2, *aux),
                   severi::roberts_closed(4)));
  });
  checks.emplace_back("Roberts N_{3,2} = 21 and components telescope", [&] {
    if (auto e = expect_eq("roberts(3)", severi::roberts_closed(3), 21);
        !e.empty()) {
      return e;
    }
    for (int d = 4; d <= 50; ++d) {
      const auto ledger = severi::delta2_components(d);
      const Integer step = ledger.total() - ledger.value("A");
      const Integer diff = severi::delta2_difference(d);
      const std::string at = "(" + std::to_string(d) + ")";
      if (auto e = first_failure(
              expect_eq("components B..G" + at, step, diff),
               expect_eq("roberts step" + at,
                         severi::roberts_closed(d) -
                             severi::roberts_closed(d - 1),
                         diff));
          !e.empty()) {
        return e;
      }
    }
    return std::string{};
  });
  checks.emplace_back("capped ruling placement (1,1,0,5) = 1", [&] {
    return expect_eq("ruling_placements(1,1,0,5)",
                     severi::ruling_placements(1, 1, 0, 5), 1);
  });
  checks.emplace_back("partition counts match brute force, w <= 20", [&] {
    for (int w = 0; w <= 20; ++w) {
      if (auto e = expect_eq(
              "p(" + std::to_string(w) + ")",
              static_cast<long long>(partitions_of_weight(w).size()),
              count_nonincreasing(w, w));
          !e.empty()) {
        return e;
      }
    }
    return std::string{};
  });
  checks.emplace_back("binomial matches factorial quotient, n <= 25", [&] {
    for (int n = 0; n <= 25; ++n) {
      for (int k = 0; k <= n; ++k) {
        const Integer q = factorial(n) / (factorial(k) * factorial(n - k));
        if (binomial(n, k) != q) {
          return "C(" + std::to_string(n) + "," + std::to_string(k) + ")";
        }
      }
    }
    return std::string{};
  });

  std::vector<CheckResult> results;
  for (auto& [name, check] : checks) {
    CheckResult r{name, false, {}};
    try {
      r.detail = check();
      r.passed = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = e.what();
    }
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace gw::cli
