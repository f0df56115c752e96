#include "shifted/mzf.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <thread>

#include "shifted/lr.hpp"

namespace shifted {

ExponentTableau parse_exponent_tableau(const SkewShape& shape, std::string_view text) {
  std::vector<Rational> values;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && (text[pos] == ',' || text[pos] == ';' || text[pos] == ' ')) ++pos;
  };
  for (int k = 0; k < shape.cell_count(); ++k) {
    skip();
    std::size_t begin = pos;
    while (pos < text.size() && text[pos] != ',' && text[pos] != ';' && text[pos] != ' ') ++pos;
    if (begin == pos) throw ParseError("expected exponent value", begin);
    std::string token(text.substr(begin, pos - begin));
    try {
      Rational q(token);
      if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
      q.canonicalize();
      values.push_back(q);
    } catch (const std::invalid_argument&) {
      throw ParseError("malformed rational '" + token + "'", begin);
    }
  }
  skip();
  if (pos != text.size()) throw ParseError("trailing characters after exponent tableau", pos);
  return ExponentTableau(shape, std::move(values));
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_text(const ExponentTableau& t) {
  std::string out;
  int row = 1;
  for (std::size_t k = 0; k < t.entries().size(); ++k) {
    Cell c = t.shape().cells()[k];
    if (k > 0 && c.row == row) out += ',';
    for (; row < c.row; ++row) out += ';';
    out += t.entries()[k].get_str();
  }
  return out;
}

namespace {

std::vector<unsigned long> integer_exponents(const ExponentTableau& exps) {
  std::vector<unsigned long> out;
  out.reserve(exps.entries().size());
  for (const Rational& v : exps.entries()) {
    if (v.get_den() != 1 || v < 0 || !v.get_num().fits_ulong_p())
      throw std::domain_error("exact evaluation requires non-negative integer exponents, got " +
                              v.get_str());
    out.push_back(v.get_num().get_ui());
  }
  return out;
}

Rational zeta_exact(Kind kind, const SkewShape& shape, const std::vector<unsigned long>& exps,
                    int truncation) {
  Rational sum = 0;
  mpz_class den, factor;
  enumerate(kind, shape, truncation, std::nullopt, [&](const MarkedTableau& m) {
    den = 1;
    for (std::size_t k = 0; k < exps.size(); ++k) {
      mpz_ui_pow_ui(factor.get_mpz_t(), static_cast<unsigned long>(m.entries()[k].base),
                    exps[k]);
      den *= factor;
    }
    sum += Rational(mpz_class(1), den);
    return true;
  });
  return sum;
}

}  // namespace

Rational zeta_truncated(Kind kind, const ExponentTableau& exps, int truncation) {
  return zeta_exact(kind, exps.shape(), integer_exponents(exps), truncation);
}

ApproxValue zeta_truncated_approx(Kind kind, const ExponentTableau& exps, int truncation) {
  std::vector<double> values;
  values.reserve(exps.entries().size());
  for (const Rational& v : exps.entries()) values.push_back(v.get_d());
  constexpr double eps = std::numeric_limits<double>::epsilon();
  ApproxValue out;
  enumerate(kind, exps.shape(), truncation, std::nullopt, [&](const MarkedTableau& m) {
    double term = 1.0;
    for (std::size_t k = 0; k < values.size(); ++k)
      term /= std::pow(static_cast<double>(m.entries()[k].base), values[k]);
    out.value += term;
    // One rounding per power/divide plus one per accumulation.
    out.error_bound += eps * (std::abs(term) * (2.0 * values.size() + 1.0) + std::abs(out.value));
    return true;
  });
  return out;
}

std::vector<DomainViolation> validate_domain(const ExponentTableau& exps,
                                             DomainContext context) {
  const SkewShape& shape = exps.shape();
  std::vector<DomainViolation> out;

  std::vector<Cell> strict_cells;  // need > 1; the rest need >= 1
  std::vector<Cell> relaxed_cells;
  switch (context) {
    case DomainContext::WQ: {
      strict_cells = shape.corners();
      for (Cell c : shape.cells())
        if (!std::count(strict_cells.begin(), strict_cells.end(), c)) relaxed_cells.push_back(c);
      break;
    }
    case DomainContext::TheoremMain:
      strict_cells = shape.cells();
      break;
    case DomainContext::TheoremSkew: {
      int lo = shape.arm_m() + shape.inner().part(1) + 1;
      int hi = shape.outer().part(1) - 1;
      for (Cell c : shape.cells()) {
        if (c.row == 1 && c.col >= lo && c.col <= hi)
          relaxed_cells.push_back(c);
        else
          strict_cells.push_back(c);
      }
      break;
    }
  }
  for (Cell c : strict_cells)
    if (!(exps.at(c) > 1))
      out.push_back({c, exps.at(c), "requires real part > 1"});
  for (Cell c : relaxed_cells)
    if (!(exps.at(c) >= 1))
      out.push_back({c, exps.at(c), "requires real part >= 1"});
  std::sort(out.begin(), out.end(),
            [](const DomainViolation& a, const DomainViolation& b) { return a.cell < b.cell; });
  return out;
}

int zeta_thread_count() {
  const char* env = std::getenv("SHIFTED_THREADS");
  if (!env) return 1;
  int n = std::atoi(env);
  return std::clamp(n, 1, 32);
}

namespace {

using ValueKey = std::vector<Rational>;

// Distinct value assignments per shape with orbit multiplicities; the
// factorial sweep touches few distinct keys when exponents repeat.
struct OrbitTable {
  SkewShape shape;
  std::map<ValueKey, unsigned long long> counts;
};

// Evaluates all distinct zetas, optionally on several threads, and keeps
// results keyed for a deterministic reduction.
class ZetaEvaluator {
 public:
  ZetaEvaluator(Kind kind, int truncation) : kind_(kind), truncation_(truncation) {}

  void require(const OrbitTable& table) {
    auto& slot = results_[table.shape.to_string()];
    slot.shape = table.shape;
    for (const auto& [key, count] : table.counts) slot.values.emplace(key, Rational(0));
  }

  void evaluate() {
    struct Job {
      const SkewShape* shape;
      const ValueKey* key;
      Rational* result;
    };
    std::vector<Job> jobs;
    for (auto& [name, slot] : results_)
      for (auto& [key, value] : slot.values) jobs.push_back({&slot.shape, &key, &value});

    int threads = std::min<int>(zeta_thread_count(), static_cast<int>(jobs.size()));
    auto run = [&](std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) {
        std::vector<unsigned long> exps;
        exps.reserve(jobs[i].key->size());
        for (const Rational& v : *jobs[i].key) exps.push_back(v.get_num().get_ui());
        *jobs[i].result = zeta_exact(kind_, *jobs[i].shape, exps, truncation_);
      }
    };
    if (threads <= 1) {
      run(0, jobs.size());
    } else {
      std::vector<std::thread> pool;
      std::size_t chunk = (jobs.size() + threads - 1) / static_cast<std::size_t>(threads);
      for (int t = 0; t < threads; ++t) {
        std::size_t begin = static_cast<std::size_t>(t) * chunk;
        std::size_t end = std::min(jobs.size(), begin + chunk);
        if (begin < end) pool.emplace_back(run, begin, end);
      }
      for (std::thread& t : pool) t.join();
    }
    total_ = jobs.size();
  }

  const Rational& value(const SkewShape& shape, const ValueKey& key) const {
    return results_.at(shape.to_string()).values.at(key);
  }

  std::size_t distinct_evaluations() const { return total_; }

 private:
  struct ShapeSlot {
    SkewShape shape;
    std::map<ValueKey, Rational> values;
  };
  Kind kind_;
  int truncation_;
  std::map<std::string, ShapeSlot> results_;
  std::size_t total_ = 0;
};

void check_integer_values(const ExponentTableau& t) { (void)integer_exponents(t); }

unsigned long long factorial(std::size_t n) {
  unsigned long long out = 1;
  for (std::size_t i = 2; i <= n; ++i) out *= i;
  return out;
}

std::map<StrictPartition, std::vector<int>> default_arrangements(
    const std::map<StrictPartition, std::int64_t>& f_table, int slots) {
  std::map<StrictPartition, std::vector<int>> out;
  std::vector<int> identity(static_cast<std::size_t>(slots));
  for (int i = 0; i < slots; ++i) identity[static_cast<std::size_t>(i)] = i;
  for (const auto& [lambda, f] : f_table) out.emplace(lambda, identity);
  return out;
}

}  // namespace

TheoremReport verify_theorem_main(
    const StrictPartition& mu, const StrictPartition& nu, const ExponentTableau& s,
    const ExponentTableau& t, int truncation, int guard,
    const std::optional<std::map<StrictPartition, std::vector<int>>>& u_arrangements) {
  if (s.shape() != SkewShape(mu) || t.shape() != SkewShape(nu))
    throw std::invalid_argument("exponent tableaux must live on the given shapes");
  check_integer_values(s);
  check_integer_values(t);
  const int n_mu = s.shape().cell_count();
  const int slots = n_mu + t.shape().cell_count();
  if (slots > guard)
    throw std::invalid_argument("variable count " + std::to_string(slots) +
                                " exceeds the symmetrization guard " + std::to_string(guard));

  std::vector<Rational> values;
  for (const Rational& v : s.entries()) values.push_back(v);
  for (const Rational& v : t.entries()) values.push_back(v);

  const auto f_table = g_p(mu, nu);
  auto arrangements = u_arrangements.value_or(default_arrangements(f_table, slots));
  for (const auto& [lambda, f] : f_table) {
    auto it = arrangements.find(lambda);
    if (it == arrangements.end())
      throw std::invalid_argument("no slot arrangement for shape " + lambda.to_string());
    std::vector<int> sorted = it->second;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < slots; ++i)
      if (sorted[static_cast<std::size_t>(i)] != i)
        throw std::invalid_argument("slot arrangement for " + lambda.to_string() +
                                    " is not a permutation of all variables");
  }

  // Orbit collection over the full symmetric group.
  std::map<std::pair<ValueKey, ValueKey>, unsigned long long> lhs_orbits;
  OrbitTable mu_orbit{SkewShape(mu), {}};
  OrbitTable nu_orbit{SkewShape(nu), {}};
  std::map<StrictPartition, OrbitTable> rhs_orbits;
  for (const auto& [lambda, f] : f_table) rhs_orbits.emplace(lambda, OrbitTable{SkewShape(lambda), {}});

  std::vector<int> perm(static_cast<std::size_t>(slots));
  for (int i = 0; i < slots; ++i) perm[static_cast<std::size_t>(i)] = i;
  do {
    ValueKey key_mu(static_cast<std::size_t>(n_mu)), key_nu(values.size() - n_mu);
    for (int i = 0; i < n_mu; ++i)
      key_mu[static_cast<std::size_t>(i)] = values[static_cast<std::size_t>(perm[i])];
    for (std::size_t i = static_cast<std::size_t>(n_mu); i < values.size(); ++i)
      key_nu[i - static_cast<std::size_t>(n_mu)] = values[static_cast<std::size_t>(perm[i])];
    lhs_orbits[{key_mu, key_nu}] += 1;
    mu_orbit.counts[key_mu] += 1;
    nu_orbit.counts[key_nu] += 1;
    for (auto& [lambda, table] : rhs_orbits) {
      const std::vector<int>& arr = arrangements.at(lambda);
      ValueKey key(values.size());
      for (std::size_t c = 0; c < key.size(); ++c)
        key[c] = values[static_cast<std::size_t>(perm[static_cast<std::size_t>(arr[c])])];
      table.counts[key] += 1;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  ZetaEvaluator eval(Kind::P, truncation);
  eval.require(mu_orbit);
  eval.require(nu_orbit);
  for (const auto& [lambda, table] : rhs_orbits) eval.require(table);
  eval.evaluate();

  TheoremReport report;
  report.truncation = truncation;
  report.group_order = factorial(static_cast<std::size_t>(slots));
  report.distinct_evaluations = eval.distinct_evaluations();
  for (const auto& [keys, count] : lhs_orbits)
    report.lhs += Rational(static_cast<unsigned long>(count)) * eval.value(mu_orbit.shape, keys.first) *
                  eval.value(nu_orbit.shape, keys.second);
  for (const auto& [lambda, table] : rhs_orbits) {
    Rational sum = 0;
    for (const auto& [key, count] : table.counts)
      sum += Rational(static_cast<unsigned long>(count)) * eval.value(table.shape, key);
    report.rhs += Rational(f_table.at(lambda)) * sum;
  }
  report.equal = report.lhs == report.rhs;
  for (DomainViolation& v : validate_domain(s, DomainContext::TheoremMain))
    report.domain_warnings.push_back(std::move(v));
  for (DomainViolation& v : validate_domain(t, DomainContext::TheoremMain))
    report.domain_warnings.push_back(std::move(v));
  return report;
}

TheoremReport verify_theorem_skew(
    const SkewShape& shape, const ExponentTableau& v, int truncation, int guard,
    const std::optional<std::map<StrictPartition, VariableTableau>>& representatives) {
  if (v.shape() != shape)
    throw std::invalid_argument("exponent tableau must live on " + shape.to_string());
  check_integer_values(v);

  std::vector<Cell> body = shape.body();
  if (static_cast<int>(body.size()) > guard)
    throw std::invalid_argument("body size " + std::to_string(body.size()) +
                                " exceeds the symmetrization guard " + std::to_string(guard));
  std::vector<int> body_slots;  // indices into cells(), row-major
  for (Cell c : body) body_slots.push_back(shape.index_of(c));
  std::sort(body_slots.begin(), body_slots.end());

  const auto f_table = g_q(shape);
  auto reps = representatives.value_or(u_representatives(shape, identity_variables(shape)));
  for (const auto& [nu, f] : f_table)
    if (!reps.count(nu))
      throw std::invalid_argument("no representative for shape " + nu.to_string());

  std::map<ValueKey, unsigned long long> lhs_orbits;
  std::map<StrictPartition, OrbitTable> rhs_orbits;
  for (const auto& [nu, f] : f_table) rhs_orbits.emplace(nu, OrbitTable{SkewShape(nu), {}});

  std::vector<int> perm(body_slots.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  std::vector<Rational> assigned(v.entries());
  do {
    for (std::size_t p = 0; p < perm.size(); ++p)
      assigned[static_cast<std::size_t>(body_slots[p])] =
          v.entries()[static_cast<std::size_t>(body_slots[static_cast<std::size_t>(perm[p])])];
    lhs_orbits[assigned] += 1;
    for (auto& [nu, table] : rhs_orbits) {
      const VariableTableau& u = reps.at(nu);
      ValueKey key(u.entries().size());
      for (std::size_t c = 0; c < key.size(); ++c)
        key[c] = assigned[static_cast<std::size_t>(shape.index_of(u.entries()[c].source))];
      table.counts[key] += 1;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  ZetaEvaluator eval(Kind::Q, truncation);
  OrbitTable lhs_table{shape, lhs_orbits};
  eval.require(lhs_table);
  for (const auto& [nu, table] : rhs_orbits) eval.require(table);
  eval.evaluate();

  TheoremReport report;
  report.truncation = truncation;
  report.group_order = factorial(body.size());
  report.distinct_evaluations = eval.distinct_evaluations();
  for (const auto& [key, count] : lhs_orbits)
    report.lhs += Rational(static_cast<unsigned long>(count)) * eval.value(shape, key);
  for (const auto& [nu, table] : rhs_orbits) {
    Rational sum = 0;
    for (const auto& [key, count] : table.counts)
      sum += Rational(static_cast<unsigned long>(count)) * eval.value(table.shape, key);
    report.rhs += Rational(f_table.at(nu)) * sum;
  }
  report.equal = report.lhs == report.rhs;
  report.domain_warnings = validate_domain(v, DomainContext::TheoremSkew);
  return report;
}

namespace {

double zeta_approx_value(Kind kind, const SkewShape& shape, const ValueKey& key,
                         int truncation) {
  double out = 0.0;
  std::vector<double> exps;
  exps.reserve(key.size());
  for (const Rational& v : key) exps.push_back(v.get_d());
  enumerate(kind, shape, truncation, std::nullopt, [&](const MarkedTableau& m) {
    double term = 1.0;
    for (std::size_t k = 0; k < exps.size(); ++k)
      term /= std::pow(static_cast<double>(m.entries()[k].base), exps[k]);
    out += term;
    return true;
  });
  return out;
}

}  // namespace

ApproxTheoremReport verify_theorem_main_approx(const StrictPartition& mu,
                                               const StrictPartition& nu,
                                               const ExponentTableau& s,
                                               const ExponentTableau& t, int truncation,
                                               int guard) {
  const int n_mu = s.shape().cell_count();
  const int slots = n_mu + t.shape().cell_count();
  if (slots > guard)
    throw std::invalid_argument("variable count exceeds the symmetrization guard");
  std::vector<Rational> values;
  for (const Rational& q : s.entries()) values.push_back(q);
  for (const Rational& q : t.entries()) values.push_back(q);
  const auto f_table = g_p(mu, nu);

  ApproxTheoremReport report;
  report.truncation = truncation;
  report.group_order = factorial(static_cast<std::size_t>(slots));
  std::vector<int> perm(static_cast<std::size_t>(slots));
  for (int i = 0; i < slots; ++i) perm[static_cast<std::size_t>(i)] = i;
  do {
    ValueKey key_mu, key_nu;
    for (int i = 0; i < n_mu; ++i) key_mu.push_back(values[static_cast<std::size_t>(perm[i])]);
    for (std::size_t i = static_cast<std::size_t>(n_mu); i < values.size(); ++i)
      key_nu.push_back(values[static_cast<std::size_t>(perm[i])]);
    report.lhs += zeta_approx_value(Kind::P, SkewShape(mu), key_mu, truncation) *
                  zeta_approx_value(Kind::P, SkewShape(nu), key_nu, truncation);
    ValueKey key_all = key_mu;
    key_all.insert(key_all.end(), key_nu.begin(), key_nu.end());
    for (const auto& [lambda, f] : f_table)
      report.rhs += static_cast<double>(f) *
                    zeta_approx_value(Kind::P, SkewShape(lambda), key_all, truncation);
  } while (std::next_permutation(perm.begin(), perm.end()));
  report.abs_difference = std::abs(report.lhs - report.rhs);
  return report;
}

ApproxTheoremReport verify_theorem_skew_approx(const SkewShape& shape, const ExponentTableau& v,
                                               int truncation, int guard) {
  std::vector<Cell> body = shape.body();
  if (static_cast<int>(body.size()) > guard)
    throw std::invalid_argument("body size exceeds the symmetrization guard");
  std::vector<int> body_slots;
  for (Cell c : body) body_slots.push_back(shape.index_of(c));
  std::sort(body_slots.begin(), body_slots.end());
  const auto f_table = g_q(shape);
  const auto reps = u_representatives(shape, identity_variables(shape));

  ApproxTheoremReport report;
  report.truncation = truncation;
  report.group_order = factorial(body.size());
  std::vector<int> perm(body_slots.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  std::vector<Rational> assigned(v.entries());
  do {
    for (std::size_t p = 0; p < perm.size(); ++p)
      assigned[static_cast<std::size_t>(body_slots[p])] =
          v.entries()[static_cast<std::size_t>(body_slots[static_cast<std::size_t>(perm[p])])];
    report.lhs += zeta_approx_value(Kind::Q, shape, assigned, truncation);
    for (const auto& [nu, f] : f_table) {
      const VariableTableau& u = reps.at(nu);
      ValueKey key;
      for (const VariableId& id : u.entries())
        key.push_back(assigned[static_cast<std::size_t>(shape.index_of(id.source))]);
      report.rhs +=
          static_cast<double>(f) * zeta_approx_value(Kind::Q, SkewShape(nu), key, truncation);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  report.abs_difference = std::abs(report.lhs - report.rhs);
  return report;
}

}  // namespace shifted
