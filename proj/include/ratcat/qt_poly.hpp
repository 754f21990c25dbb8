#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "ratcat/error.hpp"
#include "ratcat/paths.hpp"
#include "ratcat/rank_words.hpp"
#include "ratcat/statistics.hpp"

namespace ratcat {

struct Exponents {
  int q = 0;
  int t = 0;

  friend bool operator==(const Exponents&, const Exponents&) = default;
};

// Total degree descending, then q-degree descending.
struct GradedLex {
  bool operator()(const Exponents& lhs, const Exponents& rhs) const noexcept {
    const int dl = lhs.q + lhs.t;
    const int dr = rhs.q + rhs.t;
    if (dl != dr) return dl > dr;
    return lhs.q > rhs.q;
  }
};

struct Term {
  Exponents exponents;
  std::uint64_t coefficient = 0;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial in q and t with nonnegative integer coefficients.
/// Zero coefficients are never stored; additions are overflow-checked.
class QtPolynomial {
 public:
  QtPolynomial() = default;

  static QtPolynomial monomial(int q_exp, int t_exp, std::uint64_t coefficient = 1) {
    QtPolynomial p;
    p.add_term(q_exp, t_exp, coefficient);
    return p;
  }

  void add_term(int q_exp, int t_exp, std::uint64_t amount) {
    if (q_exp < 0 || t_exp < 0) {
      throw Error(ErrorKind::OutOfBounds, "negative exponent in q^" + std::to_string(q_exp) +
                                              " t^" + std::to_string(t_exp));
    }
    if (amount == 0) return;
    const Exponents key{q_exp, t_exp};
    std::uint64_t sum = 0;
    if (__builtin_add_overflow(coefficient(q_exp, t_exp), amount, &sum)) {
      throw Error(ErrorKind::CoefficientOverflow,
                  "q^" + std::to_string(q_exp) + " t^" + std::to_string(t_exp));
    }
    terms_[key] = sum;
  }

  std::uint64_t coefficient(int q_exp, int t_exp) const {
    auto it = terms_.find(Exponents{q_exp, t_exp});
    return it == terms_.end() ? 0 : it->second;
  }

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  // Terms in graded-lex order.
  std::vector<Term> terms() const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [e, c] : terms_) out.push_back(Term{e, c});
    return out;
  }

  // The polynomial with q and t exchanged.
  QtPolynomial swapped() const {
    QtPolynomial out;
    for (const auto& [e, c] : terms_) out.add_term(e.t, e.q, c);
    return out;
  }

  QtPolynomial& operator+=(const QtPolynomial& other) {
    for (const auto& [e, c] : other.terms_) add_term(e.q, e.t, c);
    return *this;
  }

  friend QtPolynomial operator+(QtPolynomial lhs, const QtPolynomial& rhs) {
    lhs += rhs;
    return lhs;
  }

  friend bool operator==(const QtPolynomial& lhs, const QtPolynomial& rhs) {
    return lhs.terms_ == rhs.terms_;
  }

 private:
  std::map<Exponents, std::uint64_t, GradedLex> terms_;
};

inline bool is_qt_symmetric(const QtPolynomial& p) {
  for (const Term& term : p.terms()) {
    if (p.coefficient(term.exponents.t, term.exponents.q) != term.coefficient) return false;
  }
  return true;
}

inline std::int64_t evaluate(const QtPolynomial& p, std::int64_t q0, std::int64_t t0) {
  auto overflow = [] { return Error(ErrorKind::CoefficientOverflow, "evaluation overflow"); };
  auto power = [&](std::int64_t base, int exp) {
    std::int64_t acc = 1;
    for (int i = 0; i < exp; ++i) {
      if (__builtin_mul_overflow(acc, base, &acc)) throw overflow();
    }
    return acc;
  };
  std::int64_t total = 0;
  for (const Term& term : p.terms()) {
    if (term.coefficient > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
      throw overflow();
    }
    std::int64_t value = static_cast<std::int64_t>(term.coefficient);
    if (__builtin_mul_overflow(value, power(q0, term.exponents.q), &value)) throw overflow();
    if (__builtin_mul_overflow(value, power(t0, term.exponents.t), &value)) throw overflow();
    if (__builtin_add_overflow(total, value, &total)) throw overflow();
  }
  return total;
}

/// e.g. "q^4 + q^3 t + 2 q t + 1"; the zero polynomial renders as "0".
inline std::string render(const QtPolynomial& p) {
  if (p.is_zero()) return "0";
  auto factor = [](char var, int exp) -> std::string {
    if (exp == 0) return {};
    if (exp == 1) return std::string(1, var);
    return std::string(1, var) + "^" + std::to_string(exp);
  };
  std::string out;
  for (const Term& term : p.terms()) {
    std::vector<std::string> parts;
    const bool constant = term.exponents.q == 0 && term.exponents.t == 0;
    if (term.coefficient != 1 || constant) parts.push_back(std::to_string(term.coefficient));
    if (auto f = factor('q', term.exponents.q); !f.empty()) parts.push_back(f);
    if (auto f = factor('t', term.exponents.t); !f.empty()) parts.push_back(f);
    if (!out.empty()) out += " + ";
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) out += ' ';
      out += parts[i];
    }
  }
  return out;
}

/// Sum of q^dinv_of(p) t^area_of(p) over all (m,n)-Dyck paths.
template <class DinvFn, class AreaFn>
QtPolynomial generating_polynomial(int m, int n, DinvFn&& dinv_of, AreaFn&& area_of) {
  QtPolynomial out;
  for_each_path(m, n, [&](const DyckPath& p) { out.add_term(dinv_of(p), area_of(p), 1); });
  return out;
}

inline QtPolynomial catalan_bruteforce(int m, int n) {
  return generating_polynomial(
      m, n, [](const DyckPath& p) { return dinv(p); }, [](const DyckPath& p) { return area(p); });
}

/// sum_{s=0}^{floor(n/3)} sum_{a=s}^{n-2s-1} q^{n-a-s-1} t^a
inline QtPolynomial catalan3_closed_form(int n) {
  require_residue(n);
  QtPolynomial out;
  for (int s = 0; s <= n / 3; ++s) {
    for (int a = s; a <= n - 2 * s - 1; ++a) out.add_term(n - a - s - 1, a, 1);
  }
  return out;
}

}  // namespace ratcat
