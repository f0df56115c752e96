#include "shifted/lr.hpp"

namespace shifted {

MarkedTableau superstandard(const StrictPartition& nu) {
  std::vector<MarkedLetter> entries;
  for (int i = 1; i <= nu.length(); ++i)
    for (int c = 0; c < nu.part(i); ++c) entries.push_back({i, false});
  return MarkedTableau(SkewShape(nu), std::move(entries));
}

std::int64_t lr_coefficient(const StrictPartition& mu, const StrictPartition& nu,
                            const StrictPartition& lambda) {
  if (mu.weight() + nu.weight() != lambda.weight()) return 0;
  if (!lambda.contains(mu)) return 0;
  SkewShape shape(lambda, mu);
  if (nu.empty()) return shape.cell_count() == 0 ? 1 : 0;

  const MarkedTableau target = superstandard(nu);
  const Content content(nu.parts());
  std::int64_t count = 0;
  enumerate(Kind::Q, shape, nu.length(), content, [&](const MarkedTableau& filling) {
    if (rectify(filling).tableau == target) ++count;
    return true;
  });
  return count;
}

std::map<StrictPartition, std::int64_t> g_p(const StrictPartition& mu,
                                            const StrictPartition& nu) {
  std::map<StrictPartition, std::int64_t> out;
  for (const StrictPartition& lambda : strict_partitions_of(mu.weight() + nu.weight()))
    if (std::int64_t f = lr_coefficient(mu, nu, lambda); f > 0) out.emplace(lambda, f);
  return out;
}

std::map<StrictPartition, std::int64_t> g_q(const SkewShape& shape) {
  std::map<StrictPartition, std::int64_t> out;
  for (const StrictPartition& nu : strict_partitions_of(shape.cell_count()))
    if (std::int64_t f = lr_coefficient(shape.inner(), nu, shape.outer()); f > 0)
      out.emplace(nu, f);
  return out;
}

namespace {

using ContentHistogram = std::map<Content, std::int64_t>;

ContentHistogram content_histogram(Kind kind, const SkewShape& shape, int max_base) {
  ContentHistogram out;
  enumerate(kind, shape, max_base, std::nullopt, [&](const MarkedTableau& t) {
    out[content_of(t)] += 1;
    return true;
  });
  return out;
}

CountIdentityReport compare_histograms(const ContentHistogram& lhs, const ContentHistogram& rhs) {
  CountIdentityReport report;
  for (const auto& [content, n] : lhs) report.rows[content].lhs = n;
  for (const auto& [content, n] : rhs) report.rows[content].rhs = n;
  for (const auto& [content, row] : report.rows)
    if (row.lhs != row.rhs) report.all_equal = false;
  return report;
}

}  // namespace

CountIdentityReport count_identity_check(const StrictPartition& mu, const StrictPartition& nu,
                                         int max_base) {
  ContentHistogram hist_mu = content_histogram(Kind::P, SkewShape(mu), max_base);
  ContentHistogram hist_nu = content_histogram(Kind::P, SkewShape(nu), max_base);
  ContentHistogram lhs;
  for (const auto& [c0, n0] : hist_mu)
    for (const auto& [c1, n1] : hist_nu) lhs[c0 + c1] += n0 * n1;

  ContentHistogram rhs;
  for (const auto& [lambda, f] : g_p(mu, nu))
    for (const auto& [content, n] : content_histogram(Kind::P, SkewShape(lambda), max_base))
      rhs[content] += f * n;

  return compare_histograms(lhs, rhs);
}

CountIdentityReport skew_count_identity_check(const SkewShape& shape, int max_base) {
  ContentHistogram lhs = content_histogram(Kind::Q, shape, max_base);
  ContentHistogram rhs;
  for (const auto& [nu, f] : g_q(shape))
    for (const auto& [content, n] : content_histogram(Kind::Q, SkewShape(nu), max_base))
      rhs[content] += f * n;
  return compare_histograms(lhs, rhs);
}

}  // namespace shifted
