#pragma once

#include <algorithm>
#include <exception>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "ratcat/bijection.hpp"
#include "ratcat/paths.hpp"
#include "ratcat/qt_poly.hpp"
#include "ratcat/rank_words.hpp"
#include "ratcat/statistics.hpp"

namespace ratcat {

using PathStatistic = std::function<int(const DyckPath&)>;

struct VerifyOptions {
  int max_n = 31;   // largest n for the (3,n) checks
  int max_mn = 16;  // largest m + n for the general (m,n) checks

  // Statistic implementations under test; replaced only to exercise the harness.
  PathStatistic area_of = [](const DyckPath& p) { return area(p); };
  PathStatistic dinv_of = [](const DyckPath& p) { return dinv(p); };
  PathStatistic skips_of = [](const DyckPath& p) { return skips(p); };
};

struct CheckResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::string first_counterexample;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.failed == 0; });
  }
};

namespace detail {

class CheckBook {
 public:
  // Runs one case of a named check. The body returns an empty string on
  // success or a description of the failure; exceptions count as failures.
  template <class Body>
  void run(const std::string& name, const std::string& subject, Body&& body) {
    CheckResult& result = slot(name);
    std::string failure;
    try {
      failure = body();
    } catch (const std::exception& e) {
      failure = std::string("threw ") + e.what();
    }
    if (failure.empty()) {
      ++result.passed;
      return;
    }
    if (result.failed++ == 0) result.first_counterexample = subject + ": " + failure;
  }

  VerifyReport finish() && { return VerifyReport{std::move(checks_)}; }

 private:
  CheckResult& slot(const std::string& name) {
    auto [it, inserted] = index_.try_emplace(name, checks_.size());
    if (inserted) checks_.push_back(CheckResult{name, 0, 0, {}});
    return checks_[it->second];
  }

  std::vector<CheckResult> checks_;
  std::map<std::string, std::size_t> index_;
};

inline std::string describe(const DyckPath& p) {
  return "(" + std::to_string(p.m()) + "," + std::to_string(p.n()) + ") " + render_path(p);
}

inline std::string describe(const StatTriple& t) {
  return "(" + std::to_string(t.area) + "," + std::to_string(t.skips) + "," + std::to_string(t.dinv) + ")";
}

}  // namespace detail

/**
 * Exhaustive check of the (3,n) theory and of the general (m,n) facts it
 * rests on, over every path up to the configured sizes. Every check is run to
 * completion; each reports pass/fail counts and its first counterexample.
 */
inline VerifyReport verify(const VerifyOptions& opt) {
  detail::CheckBook book;
  const auto& area_of = opt.area_of;
  const auto& dinv_of = opt.dinv_of;
  const auto& skips_of = opt.skips_of;
  auto triple_of = [&](const DyckPath& p) { return StatTriple{area_of(p), skips_of(p), dinv_of(p)}; };
  using detail::describe;

  // General (m,n): counts, transpose, m <-> n symmetry.
  for (int total = 2; total <= opt.max_mn; ++total) {
    for (int m = 1; m < total; ++m) {
      const int n = total - m;
      if (std::gcd(m, n) != 1) continue;
      const std::string pair = "(" + std::to_string(m) + "," + std::to_string(n) + ")";
      const auto paths = enumerate_paths(m, n);

      book.run("path-count", pair, [&]() -> std::string {
        const auto expected = rational_catalan_number(m, n);
        if (paths.size() == expected) return {};
        return "enumerated " + std::to_string(paths.size()) + ", expected " + std::to_string(expected);
      });

      for (const auto& p : paths) {
        book.run("transpose", describe(p), [&]() -> std::string {
          const DyckPath t = transpose(p);
          if (transpose(t) != p) return "transpose is not an involution";
          if (area_of(t) != area_of(p)) return "area changed under transpose";
          if (dinv_of(t) != dinv_of(p)) return "dinv changed under transpose";
          return {};
        });
      }

      book.run("mn-symmetry", pair, [&]() -> std::string {
        if (generating_polynomial(m, n, dinv_of, area_of) == generating_polynomial(n, m, dinv_of, area_of)) {
          return {};
        }
        return "C(m,n) != C(n,m)";
      });
    }
  }

  // (3,n) theory.
  for (int n = 1; n <= opt.max_n; ++n) {
    if (n % 3 == 0) continue;
    const std::string label = "n=" + std::to_string(n);
    const auto paths = enumerate_paths(3, n);
    std::set<StatTriple> triples_seen;

    for (const auto& p : paths) {
      const std::string who = describe(p);

      book.run("cell-classification", who, [&]() -> std::string {
        int non_contributing = 0;
        for (const Cell& x : cells_above(p).cells()) {
          const CellLabel label_x = classify_nondinv_cell(p, x);
          if (x.column == 2 && label_x != CellLabel::Contributes) return "second-column cell does not contribute";
          if (label_x != CellLabel::Contributes) ++non_contributing;
        }
        if (non_contributing != skips_of(p)) {
          return std::to_string(non_contributing) + " non-contributing cells but skips=" + std::to_string(skips_of(p));
        }
        return {};
      });

      StatTriple triple;
      try {
        triple = triple_of(p);
      } catch (const std::exception& e) {
        book.run("statistics", who, [&]() -> std::string { return std::string("threw ") + e.what(); });
        continue;
      }

      book.run("sum-identity", who, [&]() -> std::string {
        const int sum = triple.area + triple.skips + triple.dinv;
        if (sum == n - 1) return {};
        return "area+skips+dinv=" + std::to_string(sum) + ", expected " + std::to_string(n - 1);
      });

      book.run("inequalities", who, [&]() -> std::string {
        const int s = triple.skips;
        if (s < 0 || 3 * s >= n) return "skips out of [0, n/3)";
        if (s > triple.dinv || triple.dinv > n - 1 - 2 * s) return "dinv out of [skips, n-1-2 skips]";
        if (s > triple.area || triple.area > n - 1 - 2 * s) return "area out of [skips, n-1-2 skips]";
        return {};
      });

      book.run("area-unboxed", who, [&]() -> std::string {
        const MarkedRankWord word = mark_from_path(p);
        if (static_cast<int>(word.unboxed_count()) != triple.area) return "area != unboxed entries";
        if (count_skips(word) != triple.skips) return "skips != skips of marked word";
        return {};
      });

      book.run("triple-uniqueness", who, [&]() -> std::string {
        if (triples_seen.insert(triple).second) return {};
        return "triple " + describe(triple) + " already realized";
      });

      book.run("omega-reconstruction", who, [&]() -> std::string {
        if (omega(triple.area, triple.skips, triple.dinv) == mark_from_path(p)) return {};
        return "omega" + describe(triple) + " differs from the marked word";
      });

      book.run("word-round-trip", who, [&]() -> std::string {
        if (path_from_word(mark_from_path(p)) == p) return {};
        return "path_from_word(mark_from_path(p)) != p";
      });

      book.run("involution", who, [&]() -> std::string {
        const DyckPath image = involution(p);
        const StatTriple mapped = triple_of(image);
        if (mapped != StatTriple{triple.dinv, triple.skips, triple.area}) {
          return "image has triple " + describe(mapped) + ", expected swap of " + describe(triple);
        }
        if (involution(image) != p) return "not an involution";
        return {};
      });
    }

    book.run("closed-form", label, [&]() -> std::string {
      if (generating_polynomial(3, n, dinv_of, area_of) == catalan3_closed_form(n)) return {};
      return "brute-force polynomial differs from the closed form";
    });

    book.run("qt-symmetry", label, [&]() -> std::string {
      if (!is_qt_symmetric(catalan3_closed_form(n))) return "closed form not symmetric";
      if (!is_qt_symmetric(generating_polynomial(3, n, dinv_of, area_of))) return "brute force not symmetric";
      return {};
    });
  }

  // Valid triples are exactly the realized ones.
  std::map<int, std::set<StatTriple>> realized;
  for (int n = 1; n <= opt.max_n; ++n) {
    if (n % 3 == 0) continue;
    for (const auto& p : enumerate_paths(3, n)) {
      try {
        realized[n].insert(triple_of(p));
      } catch (const std::exception&) {
        // reported by the per-path checks above
      }
    }
  }
  for (int a = 0; a < opt.max_n; ++a) {
    for (int s = 0; a + s < opt.max_n; ++s) {
      for (int d = 0; a + s + d + 1 <= opt.max_n; ++d) {
        const StatTriple t{a, s, d};
        book.run("valid-triples", describe(t), [&]() -> std::string {
          const int n = a + s + d + 1;
          const bool valid = is_valid_triple(a, s, d);
          const bool seen = realized.count(n) != 0 && realized[n].count(t) != 0;
          if (valid == seen) return {};
          return valid ? "valid but not realized by any path" : "realized but reported invalid";
        });
      }
    }
  }

  return std::move(book).finish();
}

}  // namespace ratcat
