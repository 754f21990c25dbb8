#pragma once

// Brute-force reference implementations used only by the tests. They work
// from the raw step word and an explicit cell grid and share no code with the
// library beyond what is needed to compare results.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

// Pascal's triangle, exact for the small sizes used in the tests.
inline std::uint64_t binomial(int n, int k) {
  std::vector<std::vector<std::uint64_t>> row(n + 1, std::vector<std::uint64_t>(n + 1, 0));
  for (int i = 0; i <= n; ++i) {
    row[i][0] = 1;
    for (int j = 1; j <= i; ++j) row[i][j] = row[i - 1][j - 1] + row[i - 1][j];
  }
  return row[n][k];
}

// Every lattice point (x, y) visited must satisfy y/x >= n/m, i.e. m y >= n x.
inline bool stays_weakly_above(int m, int n, const std::string& word) {
  long x = 0;
  long y = 0;
  for (char c : word) {
    (c == 'E' ? x : y) += 1;
    if (static_cast<long>(m) * y < static_cast<long>(n) * x) return false;
  }
  return true;
}

// All monotone words with m E's and n N's, filtered by the diagonal rule.
inline std::vector<std::string> all_dyck_words(int m, int n) {
  std::string word = std::string(static_cast<std::size_t>(m), 'E') + std::string(static_cast<std::size_t>(n), 'N');
  std::sort(word.begin(), word.end());
  std::vector<std::string> out;
  do {
    if (stays_weakly_above(m, n, word)) out.push_back(word);
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

// grid[a][b] (1-indexed column a, row b) is true when the cell lies above the path.
struct Grid {
  int m = 0;
  int n = 0;
  std::vector<std::vector<bool>> above;

  bool at(int a, int b) const { return above[a][b]; }
};

inline Grid grid_of(const std::string& word) {
  Grid g;
  for (char c : word) (c == 'E' ? g.m : g.n) += 1;
  g.above.assign(g.m + 2, std::vector<bool>(g.n + 2, false));
  // Walk the path; the east step at height y leaves rows y+1..n of that column above it.
  int x = 0;
  int y = 0;
  for (char c : word) {
    if (c == 'N') {
      ++y;
      continue;
    }
    ++x;
    for (int b = y + 1; b <= g.n; ++b) g.above[x][b] = true;
  }
  return g;
}

// A cell counts toward area if it is below the path and all four corners
// lie on or above the diagonal.
inline int area(const std::string& word) {
  const Grid g = grid_of(word);
  int count = 0;
  for (int a = 1; a <= g.m; ++a) {
    for (int b = 1; b <= g.n; ++b) {
      if (g.at(a, b)) continue;
      bool inside = true;
      for (int dx : {a - 1, a}) {
        for (int dy : {b - 1, b}) {
          if (static_cast<long>(g.m) * dy < static_cast<long>(g.n) * dx) inside = false;
        }
      }
      if (inside) ++count;
    }
  }
  return count;
}

struct Fraction {
  long num;
  long den;  // den >= 0; den == 0 means +infinity
};

inline bool less(Fraction l, Fraction r) {
  if (l.den == 0) return false;
  if (r.den == 0) return true;
  return l.num * r.den < r.num * l.den;
}

inline std::pair<int, int> arm_leg(const Grid& g, int a, int b) {
  int arm = 0;
  for (int c = a + 1; c <= g.m; ++c) arm += g.at(c, b) ? 1 : 0;
  int leg = 0;
  for (int r = 1; r < b; ++r) leg += g.at(a, r) ? 1 : 0;
  return {arm, leg};
}

inline int dinv(const std::string& word) {
  const Grid g = grid_of(word);
  const Fraction slope{g.m, g.n};
  int count = 0;
  for (int a = 1; a <= g.m; ++a) {
    for (int b = 1; b <= g.n; ++b) {
      if (!g.at(a, b)) continue;
      const auto [arm, leg] = arm_leg(g, a, b);
      if (less(Fraction{arm, leg + 1}, slope) && less(slope, Fraction{arm + 1, leg})) ++count;
    }
  }
  return count;
}

// Rank word of a (3,n)-path as a string of 'B' (boxed) / 'U' (unboxed),
// listing all positive ranks -a n + 3 (b - 1) in increasing order.
inline std::string box_pattern(const std::string& word) {
  const Grid g = grid_of(word);
  std::vector<std::pair<int, bool>> ranks;
  for (int a = 1; a <= g.m; ++a) {
    for (int b = 1; b <= g.n; ++b) {
      const int r = -a * g.n + 3 * (b - 1);
      if (r > 0) ranks.emplace_back(r, g.at(a, b));
    }
  }
  std::sort(ranks.begin(), ranks.end());
  std::string out;
  for (const auto& [r, boxed] : ranks) out.push_back(boxed ? 'B' : 'U');
  return out;
}

// Strip unbounded runs at both ends, then count the remaining U-runs.
inline int skips(const std::string& word) {
  std::string p = box_pattern(word);
  const auto first = p.find('B');
  if (first == std::string::npos) return 0;
  p = p.substr(first, p.rfind('B') - first + 1);
  int runs = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 'U' && (i == 0 || p[i - 1] != 'U')) ++runs;
  }
  return runs;
}

// (dinv, area) -> multiplicity
inline std::map<std::pair<int, int>, std::uint64_t> catalan_terms(int m, int n) {
  std::map<std::pair<int, int>, std::uint64_t> terms;
  for (const auto& w : all_dyck_words(m, n)) ++terms[{dinv(w), area(w)}];
  return terms;
}

inline int gcd(int a, int b) { return b == 0 ? a : gcd(b, a % b); }

}  // namespace oracle
