#pragma once

#include <cstdint>
#include <map>

#include "shifted/jdt.hpp"
#include "shifted/tableau.hpp"

namespace shifted {

// The tableau of shape nu whose i-th row is filled with unmarked i.
MarkedTableau superstandard(const StrictPartition& nu);

// The structure constant of the shifted Littlewood-Richardson expansion,
// computed as the number of fillings of lambda/mu rectifying to the
// superstandard tableau of shape nu.  Zero whenever the weights do not
// match or mu is not contained in lambda.
std::int64_t lr_coefficient(const StrictPartition& mu, const StrictPartition& nu,
                            const StrictPartition& lambda);

// All lambda with positive coefficient for the pair (mu, nu).
std::map<StrictPartition, std::int64_t> g_p(const StrictPartition& mu,
                                            const StrictPartition& nu);

// All nu with positive coefficient for the skew shape lambda/mu.
std::map<StrictPartition, std::int64_t> g_q(const SkewShape& shape);

// Occurrence tables by content and their comparison.
struct CountIdentityRow {
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
};

struct CountIdentityReport {
  std::map<Content, CountIdentityRow> rows;
  bool all_equal = true;
};

// Per content n with bases <= max_base, compares the number of pairs
// (M0, M1) of P-tableaux of shapes mu, nu with joint content n against
// the coefficient-weighted number of P-tableaux of content n over all
// shapes of matching weight.
CountIdentityReport count_identity_check(const StrictPartition& mu, const StrictPartition& nu,
                                         int max_base);

// Skew analogue: Q-tableaux of lambda/mu against coefficient-weighted
// Q-tableaux over the shapes in g_q.
CountIdentityReport skew_count_identity_check(const SkewShape& shape, int max_base);

}  // namespace shifted
