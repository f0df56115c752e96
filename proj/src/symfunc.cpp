#include "shifted/symfunc.hpp"

#include <algorithm>
#include <sstream>

namespace shifted {

mpz_class SparsePoly::coeff(const std::vector<int>& expo) const {
  auto it = terms_.find(expo);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void SparsePoly::add_term(const std::vector<int>& expo, const mpz_class& c) {
  if (static_cast<int>(expo.size()) != nvars_)
    throw std::invalid_argument("exponent vector length " + std::to_string(expo.size()) +
                                " does not match variable count " + std::to_string(nvars_));
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(expo, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& other) {
  if (other.nvars_ != nvars_) throw std::invalid_argument("variable count mismatch");
  for (const auto& [expo, c] : other.terms_) add_term(expo, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& other) {
  if (other.nvars_ != nvars_) throw std::invalid_argument("variable count mismatch");
  for (const auto& [expo, c] : other.terms_) add_term(expo, -c);
  return *this;
}

SparsePoly SparsePoly::operator*(const SparsePoly& other) const {
  if (other.nvars_ != nvars_) throw std::invalid_argument("variable count mismatch");
  SparsePoly out(nvars_);
  std::vector<int> expo(static_cast<std::size_t>(nvars_));
  for (const auto& [e0, c0] : terms_)
    for (const auto& [e1, c1] : other.terms_) {
      for (std::size_t i = 0; i < expo.size(); ++i) expo[i] = e0[i] + e1[i];
      out.add_term(expo, c0 * c1);
    }
  return out;
}

SparsePoly& SparsePoly::operator*=(const mpz_class& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [expo, c] : terms_) c *= scalar;
  return *this;
}

std::string SparsePoly::dump() const {
  std::ostringstream out;
  for (const auto& [expo, c] : terms_) {
    out << c.get_str() << " ";
    for (std::size_t i = 0; i < expo.size(); ++i) out << ' ' << expo[i];
    out << '\n';
  }
  return out.str();
}

namespace {

SparsePoly tableau_polynomial(Kind kind, const SkewShape& delta, int nvars) {
  SparsePoly out(nvars);
  std::vector<int> expo(static_cast<std::size_t>(nvars));
  enumerate(kind, delta, nvars, std::nullopt, [&](const MarkedTableau& t) {
    std::fill(expo.begin(), expo.end(), 0);
    for (MarkedLetter l : t.entries()) expo[static_cast<std::size_t>(l.base) - 1] += 1;
    out.add_term(expo, 1);
    return true;
  });
  return out;
}

SparsePoly combination(Kind kind, const std::map<StrictPartition, std::int64_t>& f_table,
                       int nvars) {
  SparsePoly out(nvars);
  for (const auto& [shape, f] : f_table) {
    SparsePoly term = tableau_polynomial(kind, SkewShape(shape), nvars);
    term *= mpz_class(f);
    out += term;
  }
  return out;
}

PolyVerdict compare(const SparsePoly& lhs, const SparsePoly& rhs) {
  PolyVerdict verdict;
  SparsePoly diff = lhs;
  diff -= rhs;
  if (!diff.is_zero()) {
    verdict.equal = false;
    verdict.first_difference = *diff.terms().begin();
  }
  return verdict;
}

}  // namespace

SparsePoly schur_p(const SkewShape& delta, int nvars) {
  return tableau_polynomial(Kind::P, delta, nvars);
}

SparsePoly schur_q(const SkewShape& delta, int nvars) {
  return tableau_polynomial(Kind::Q, delta, nvars);
}

PolyVerdict verify_lr1(const StrictPartition& mu, const StrictPartition& nu,
                       const std::map<StrictPartition, std::int64_t>& f_table) {
  int nvars = mu.weight() + nu.weight();
  SparsePoly lhs = schur_p(SkewShape(mu), nvars) * schur_p(SkewShape(nu), nvars);
  return compare(lhs, combination(Kind::P, f_table, nvars));
}

PolyVerdict verify_lr2(const SkewShape& shape,
                       const std::map<StrictPartition, std::int64_t>& f_table) {
  int nvars = shape.outer().weight();
  SparsePoly lhs = schur_q(shape, nvars);
  return compare(lhs, combination(Kind::Q, f_table, nvars));
}

bool dominates(const std::vector<int>& a, const std::vector<int>& b) {
  int pa = 0, pb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    pa += a[i];
    pb += b[i];
    if (pa < pb) return false;
  }
  return true;
}

std::map<StrictPartition, mpz_class> peel_expand(SparsePoly p, int weight, int nvars) {
  for (const auto& [expo, c] : p.terms()) {
    int degree = 0;
    for (int e : expo) degree += e;
    if (degree != weight)
      throw std::invalid_argument("input is not homogeneous of degree " +
                                  std::to_string(weight));
  }

  std::map<StrictPartition, SparsePoly> basis_cache;
  std::map<StrictPartition, mpz_class> out;
  // Dominance strictly decreases each round, so the strict partitions of
  // the weight bound the number of rounds.
  std::size_t round_guard = strict_partitions_of(weight).size() + 1;
  while (!p.is_zero()) {
    if (round_guard-- == 0)
      throw std::invalid_argument("peeling does not terminate; input is not in the span");
    // Partition-shaped monomials that no other one dominates.
    std::vector<const std::vector<int>*> candidates;
    for (const auto& [expo, c] : p.terms())
      if (std::is_sorted(expo.begin(), expo.end(), std::greater<int>()))
        candidates.push_back(&expo);
    const std::vector<int>* lead = nullptr;
    for (const std::vector<int>* cand : candidates) {
      bool maximal = true;
      for (const std::vector<int>* other : candidates)
        if (other != cand && *other != *cand && dominates(*other, *cand)) {
          maximal = false;
          break;
        }
      if (!maximal) continue;
      if (!lead || *cand > *lead) lead = cand;  // lexicographic tie-break
    }
    if (!lead)
      throw std::invalid_argument("no partition-shaped leading monomial; input is not in "
                                  "the span");
    std::vector<int> parts;
    for (int e : *lead)
      if (e > 0) parts.push_back(e);
    for (std::size_t i = 1; i < parts.size(); ++i)
      if (parts[i] >= parts[i - 1])
        throw std::invalid_argument("leading monomial is not a strict partition; input is "
                                    "not in the span");
    StrictPartition lambda{std::move(parts)};
    mpz_class c = p.coeff(*lead);
    auto it = basis_cache.find(lambda);
    if (it == basis_cache.end())
      it = basis_cache.emplace(lambda, schur_p(SkewShape(lambda), nvars)).first;
    SparsePoly scaled = it->second;
    scaled *= c;
    p -= scaled;
    out[lambda] += c;
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace shifted
