#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "shifted/labeling.hpp"
#include "shifted/tableau.hpp"

namespace shifted {

using Rational = mpq_class;

// Exponents attached to the boxes of a shape.  Exact evaluation requires
// non-negative integer values; the approximate path takes any rationals.
using ExponentTableau = ShiftedTableau<Rational>;

ExponentTableau parse_exponent_tableau(const SkewShape& shape, std::string_view text);
std::string to_text(const ExponentTableau& t);
std::string to_string(const Rational& q);

// Sum of 1 / prod |m_ij|^{v_ij} over all valid fillings with bases <= N.
Rational zeta_truncated(Kind kind, const ExponentTableau& exps, int truncation);

struct ApproxValue {
  double value = 0.0;
  double error_bound = 0.0;  // accumulated rounding estimate
};

ApproxValue zeta_truncated_approx(Kind kind, const ExponentTableau& exps, int truncation);

enum class DomainContext { WQ, TheoremMain, TheoremSkew };

struct DomainViolation {
  Cell cell;
  Rational value;
  std::string requirement;
};

// Membership checks for the convergence domains: WQ requires >= 1 off
// corners and > 1 on corners; TheoremMain requires > 1 everywhere;
// TheoremSkew relaxes to >= 1 exactly on the row-1 boxes from the start
// of the arm up to column outer_1 - 1.
std::vector<DomainViolation> validate_domain(const ExponentTableau& exps, DomainContext context);

struct TheoremReport {
  Rational lhs = 0;
  Rational rhs = 0;
  bool equal = false;
  int truncation = 0;
  unsigned long long group_order = 1;
  std::size_t distinct_evaluations = 0;
  std::vector<DomainViolation> domain_warnings;  // advisory only
};

struct ApproxTheoremReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_difference = 0.0;
  int truncation = 0;
  unsigned long long group_order = 1;
};

// Symmetrized product expansion check: sums over all permutations of the
// variables of s and t together, comparing the product of P-zetas against
// the coefficient-weighted P-zetas over g_p(mu, nu).  u_arrangements maps
// each shape to the slot assignment of its boxes (row-major); slots
// 0..|mu|-1 are the boxes of s, the rest the boxes of t.  Throws when the
// variable count exceeds `guard`.
TheoremReport verify_theorem_main(
    const StrictPartition& mu, const StrictPartition& nu, const ExponentTableau& s,
    const ExponentTableau& t, int truncation, int guard = 8,
    const std::optional<std::map<StrictPartition, std::vector<int>>>& u_arrangements =
        std::nullopt);

// Skew expansion check: sums over permutations of the body variables only
// (the arm stays fixed), comparing the skew Q-zeta against the
// coefficient-weighted Q-zetas over g_q evaluated on transported variable
// tableaux.  Throws when the body size exceeds `guard`.
TheoremReport verify_theorem_skew(
    const SkewShape& shape, const ExponentTableau& v, int truncation, int guard = 8,
    const std::optional<std::map<StrictPartition, VariableTableau>>& representatives =
        std::nullopt);

ApproxTheoremReport verify_theorem_main_approx(
    const StrictPartition& mu, const StrictPartition& nu, const ExponentTableau& s,
    const ExponentTableau& t, int truncation, int guard = 8);

ApproxTheoremReport verify_theorem_skew_approx(const SkewShape& shape, const ExponentTableau& v,
                                               int truncation, int guard = 8);

// Worker count for distinct zeta evaluations, from SHIFTED_THREADS
// (default 1, capped at 32).
int zeta_thread_count();

}  // namespace shifted
