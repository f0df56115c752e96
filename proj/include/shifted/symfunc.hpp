#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "shifted/partition.hpp"
#include "shifted/tableau.hpp"

namespace shifted {

// Multivariate polynomial with big-integer coefficients, stored as
// exponent vector -> coefficient; zero coefficients are never kept.
class SparsePoly {
 public:
  explicit SparsePoly(int nvars = 0) : nvars_(nvars) {}

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::vector<int>, mpz_class>& terms() const { return terms_; }

  mpz_class coeff(const std::vector<int>& expo) const;
  void add_term(const std::vector<int>& expo, const mpz_class& c);

  SparsePoly& operator+=(const SparsePoly& other);
  SparsePoly& operator-=(const SparsePoly& other);
  SparsePoly operator*(const SparsePoly& other) const;
  SparsePoly& operator*=(const mpz_class& scalar);

  friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

  // Lines "coef  e1 e2 ... en", sorted by exponent vector.
  std::string dump() const;

 private:
  int nvars_;
  std::map<std::vector<int>, mpz_class> terms_;
};

// Truncated tableau generating polynomials: one monomial x^content per
// valid filling with bases <= nvars.
SparsePoly schur_p(const SkewShape& delta, int nvars);
SparsePoly schur_q(const SkewShape& delta, int nvars);

struct PolyVerdict {
  bool equal = true;
  // A monomial where the two sides differ, with (lhs - rhs) coefficient.
  std::optional<std::pair<std::vector<int>, mpz_class>> first_difference;
};

// Exactness of the product expansion P_mu P_nu = sum f P_lambda in
// |mu|+|nu| variables, with the coefficient table supplied by the caller.
PolyVerdict verify_lr1(const StrictPartition& mu, const StrictPartition& nu,
                       const std::map<StrictPartition, std::int64_t>& f_table);

// Exactness of Q_{lambda/mu} = sum f Q_nu in |lambda| variables.
PolyVerdict verify_lr2(const SkewShape& shape,
                       const std::map<StrictPartition, std::int64_t>& f_table);

// Expands p over the P-basis by repeatedly stripping the dominance-maximal
// partition monomial.  p must be homogeneous of degree `weight` and lie in
// the span of P_lambda with lambda strict of that weight; otherwise throws
// std::invalid_argument.
std::map<StrictPartition, mpz_class> peel_expand(SparsePoly p, int weight, int nvars);

// b is dominated by a: every prefix sum of a is >= that of b.  Both
// weakly decreasing, same total.
bool dominates(const std::vector<int>& a, const std::vector<int>& b);

}  // namespace shifted
