// Command-line front end: shifted-tableau combinatorics, coefficient
// tables, and exact truncated zeta verifications.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "shifted/io_json.hpp"
#include "shifted/jdt.hpp"
#include "shifted/labeling.hpp"
#include "shifted/lr.hpp"
#include "shifted/mzf.hpp"
#include "shifted/symfunc.hpp"
#include "shifted/tableau.hpp"
#include "shifted/word.hpp"

namespace {

using namespace shifted;

constexpr int kExitVerified = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string mu, nu, lambda, shape, entries, w0, w1, word, s, t, v, content, kind = "Q";
  int max_base = 4;
  int truncate = 4;
  int guard = 8;
  std::uint64_t seed = 20240001;
  bool json = false;
  bool labeled = false;
  bool trace = false;
  bool count_only = false;
  bool approx = false;
  bool inverse = false;
  bool random_strategy = false;
  bool random_u = false;
};

Kind parse_kind(const std::string& text) {
  if (text == "P" || text == "p") return Kind::P;
  if (text == "Q" || text == "q") return Kind::Q;
  throw ParseError("kind must be P or Q", 0);
}

std::string frame_text(const TraceFrame<LabeledLetter>& frame) {
  std::string out;
  int row = 1;
  bool first = true;
  for (Cell c : frame.shape.cells()) {
    if (!first && c.row == row) out += ',';
    for (; row < c.row; ++row) out += ';';
    first = false;
    if (frame.dot && *frame.dot == c)
      out += '*';
    else
      out += to_string(frame.entries.at(c));
  }
  return out;
}

int run_lr(const Options& opt) {
  auto f = lr_coefficient(StrictPartition::parse(opt.mu), StrictPartition::parse(opt.nu),
                          StrictPartition::parse(opt.lambda));
  if (opt.json)
    std::cout << json{{"coefficient", f}}.dump() << "\n";
  else
    std::cout << f << "\n";
  return kExitVerified;
}

int run_gp(const Options& opt) {
  auto table = g_p(StrictPartition::parse(opt.mu), StrictPartition::parse(opt.nu));
  if (opt.json) {
    std::cout << to_json(table).dump() << "\n";
  } else {
    for (const auto& [lambda, f] : table) std::cout << lambda.to_string() << " " << f << "\n";
  }
  return kExitVerified;
}

int run_gq(const Options& opt) {
  auto table = g_q(SkewShape::parse(opt.shape));
  if (opt.json) {
    std::cout << to_json(table).dump() << "\n";
  } else {
    for (const auto& [nu, f] : table) std::cout << nu.to_string() << " " << f << "\n";
  }
  return kExitVerified;
}

int run_enumerate(const Options& opt) {
  SkewShape shape = SkewShape::parse(opt.shape);
  std::optional<Content> content;
  if (!opt.content.empty()) content = Content::parse(opt.content);
  Kind kind = parse_kind(opt.kind);
  std::size_t n = 0;
  json items = json::array();
  enumerate(kind, shape, opt.max_base, content, [&](const MarkedTableau& t) {
    ++n;
    if (!opt.count_only) {
      if (opt.json)
        items.push_back(to_json(t));
      else
        std::cout << to_text(t) << "\n";
    }
    return true;
  });
  if (opt.json)
    std::cout << json{{"count", n}, {"tableaux", items}}.dump() << "\n";
  else
    std::cout << "count " << n << "\n";
  return kExitVerified;
}

int run_rectify(const Options& opt) {
  SkewShape shape = SkewShape::parse(opt.shape);
  CornerStrategy strategy =
      opt.random_strategy ? random_corner_strategy(opt.seed) : default_corner_strategy();

  // Labeled rectification also applies when plain entries are given with
  // --labeled: the tableau is subscripted first.
  LabeledTableau start = [&] {
    if (opt.entries.find('_') != std::string::npos)
      return parse_labeled_tableau(shape, opt.entries);
    MarkedTableau plain = parse_marked_tableau(shape, opt.entries);
    if (auto violation = validate(Kind::Q, plain))
      throw std::invalid_argument("input is not a valid tableau: " +
                                  to_string(violation->rule) + " at " +
                                  to_string(violation->cell));
    if (opt.labeled) return phi_t(plain);
    // Keep plain letters as labeled ones with subscript 1 so one code path
    // serves both; marks and bases are untouched.
    std::vector<LabeledLetter> lifted;
    for (MarkedLetter l : plain.entries()) lifted.push_back({l.base, 1, l.marked});
    return LabeledTableau(shape, std::move(lifted));
  }();

  std::vector<TraceFrame<LabeledLetter>> frames;
  RectifyResult<LabeledLetter> result =
      rectify(start, strategy, opt.trace ? &frames : nullptr);

  bool plain_output = !opt.labeled && opt.entries.find('_') == std::string::npos;
  auto tableau_text = [&](const LabeledTableau& t) {
    if (!plain_output) return to_text(t);
    std::vector<MarkedLetter> dropped;
    for (LabeledLetter l : t.entries()) dropped.push_back({l.base, l.marked});
    return to_text(MarkedTableau(t.shape(), std::move(dropped)));
  };

  if (opt.json) {
    json out{{"shape", to_json(result.tableau.shape())},
             {"tableau", tableau_text(result.tableau)},
             {"positions", to_json(result.positions)}};
    if (opt.trace) {
      json jframes = json::array();
      for (const auto& frame : frames)
        jframes.push_back(json{{"shape", to_json(frame.shape)}, {"rows", frame_text(frame)}});
      out["frames"] = jframes;
    }
    std::cout << out.dump() << "\n";
  } else {
    if (opt.trace)
      for (const auto& frame : frames)
        std::cout << frame.shape.to_string() << ": " << frame_text(frame) << "\n";
    std::cout << result.tableau.shape().to_string() << ": " << tableau_text(result.tableau)
              << "\n";
    std::cout << "positions " << to_json(result.positions).dump() << "\n";
  }
  return kExitVerified;
}

int run_knuth(const Options& opt) {
  auto report = [&](auto w0, auto w1) {
    auto step = knuth_step(w0, w1);
    bool equivalent = knuth_equivalent(w0, w1);
    auto p0 = canonical_tableau(w0);
    auto p1 = canonical_tableau(w1);
    if (opt.json) {
      json out{{"step", step ? json(to_string(*step)) : json(nullptr)},
               {"equivalent", equivalent},
               {"canonical_w0", to_text(p0)},
               {"canonical_w1", to_text(p1)}};
      std::cout << out.dump() << "\n";
    } else {
      std::cout << "step " << (step ? to_string(*step) : "none") << "\n";
      std::cout << "equivalent " << (equivalent ? "yes" : "no") << "\n";
      std::cout << "canonical w0 " << p0.shape().to_string() << ": " << to_text(p0) << "\n";
      std::cout << "canonical w1 " << p1.shape().to_string() << ": " << to_text(p1) << "\n";
    }
    return kExitVerified;
  };
  bool labeled =
      opt.w0.find('_') != std::string::npos || opt.w1.find('_') != std::string::npos;
  if (labeled) return report(parse_labeled_word(opt.w0), parse_labeled_word(opt.w1));
  return report(parse_marked_word(opt.w0), parse_marked_word(opt.w1));
}

int run_phi(const Options& opt) {
  if (opt.word.empty() && (opt.shape.empty() || opt.entries.empty()))
    throw std::invalid_argument("phi needs --word, or --shape with --entries");
  if (!opt.word.empty()) {
    LabeledWord image = phi_w(parse_marked_word(opt.word));
    if (opt.json)
      std::cout << json{{"word", to_string(image)}}.dump() << "\n";
    else
      std::cout << to_string(image) << "\n";
    return kExitVerified;
  }
  SkewShape shape = SkewShape::parse(opt.shape);
  if (opt.inverse) {
    MarkedTableau plain = phi_t_inverse(parse_labeled_tableau(shape, opt.entries));
    if (opt.json)
      std::cout << to_json(plain).dump() << "\n";
    else
      std::cout << to_text(plain) << "\n";
    return kExitVerified;
  }
  MarkedTableau plain = parse_marked_tableau(shape, opt.entries);
  if (auto violation = validate(Kind::Q, plain))
    throw std::invalid_argument("input is not a valid tableau: " + to_string(violation->rule) +
                                " at " + to_string(violation->cell));
  LabeledTableau image = phi_t(plain);
  if (opt.json)
    std::cout << to_json(image).dump() << "\n";
  else
    std::cout << to_text(image) << "\n";
  return kExitVerified;
}

int run_verify_lr1(const Options& opt) {
  StrictPartition mu = StrictPartition::parse(opt.mu);
  StrictPartition nu = StrictPartition::parse(opt.nu);
  auto table = g_p(mu, nu);
  PolyVerdict verdict = verify_lr1(mu, nu, table);
  if (opt.json) {
    json out{{"equal", verdict.equal}, {"coefficients", to_json(table)}};
    if (verdict.first_difference) {
      out["difference_monomial"] = verdict.first_difference->first;
      out["difference_coefficient"] = verdict.first_difference->second.get_str();
    }
    std::cout << out.dump() << "\n";
  } else {
    std::cout << (verdict.equal ? "equal" : "NOT equal") << "\n";
    if (verdict.first_difference) {
      std::cout << "difference " << verdict.first_difference->second.get_str() << " at";
      for (int e : verdict.first_difference->first) std::cout << ' ' << e;
      std::cout << "\n";
    }
  }
  return verdict.equal ? kExitVerified : kExitFailed;
}

int run_verify_lr2(const Options& opt) {
  SkewShape shape = SkewShape::parse(opt.shape);
  auto table = g_q(shape);
  PolyVerdict verdict = verify_lr2(shape, table);
  if (opt.json) {
    json out{{"equal", verdict.equal}, {"coefficients", to_json(table)}};
    if (verdict.first_difference) {
      out["difference_monomial"] = verdict.first_difference->first;
      out["difference_coefficient"] = verdict.first_difference->second.get_str();
    }
    std::cout << out.dump() << "\n";
  } else {
    std::cout << (verdict.equal ? "equal" : "NOT equal") << "\n";
    if (verdict.first_difference) {
      std::cout << "difference " << verdict.first_difference->second.get_str() << " at";
      for (int e : verdict.first_difference->first) std::cout << ' ' << e;
      std::cout << "\n";
    }
  }
  return verdict.equal ? kExitVerified : kExitFailed;
}


std::map<StrictPartition, std::vector<int>> random_arrangements(const StrictPartition& mu,
                                                                const StrictPartition& nu,
                                                                std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::map<StrictPartition, std::vector<int>> out;
  int slots = mu.weight() + nu.weight();
  for (const auto& [lambda, f] : g_p(mu, nu)) {
    std::vector<int> arr(static_cast<std::size_t>(slots));
    for (int i = 0; i < slots; ++i) arr[static_cast<std::size_t>(i)] = i;
    std::shuffle(arr.begin(), arr.end(), rng);
    out.emplace(lambda, std::move(arr));
  }
  return out;
}

int run_verify_theorem1(const Options& opt) {
  StrictPartition mu = StrictPartition::parse(opt.mu);
  StrictPartition nu = StrictPartition::parse(opt.nu);
  ExponentTableau s = parse_exponent_tableau(SkewShape(mu), opt.s);
  ExponentTableau t = parse_exponent_tableau(SkewShape(nu), opt.t);
  if (opt.approx) {
    ApproxTheoremReport report =
        verify_theorem_main_approx(mu, nu, s, t, opt.truncate, opt.guard);
    std::cout << to_json(report).dump() << "\n";
    return kExitVerified;
  }
  std::optional<std::map<StrictPartition, std::vector<int>>> u;
  if (opt.random_u) u = random_arrangements(mu, nu, opt.seed);
  TheoremReport report = verify_theorem_main(mu, nu, s, t, opt.truncate, opt.guard, u);
  if (opt.json)
    std::cout << to_json(report).dump() << "\n";
  else
    std::cout << "lhs " << report.lhs.get_str() << "\nrhs " << report.rhs.get_str() << "\n"
              << (report.equal ? "equal" : "NOT equal") << "\n";
  return report.equal ? kExitVerified : kExitFailed;
}

int run_verify_theorem2(const Options& opt) {
  SkewShape shape = SkewShape::parse(opt.shape);
  ExponentTableau v = parse_exponent_tableau(shape, opt.v);
  if (opt.approx) {
    ApproxTheoremReport report = verify_theorem_skew_approx(shape, v, opt.truncate, opt.guard);
    std::cout << to_json(report).dump() << "\n";
    return kExitVerified;
  }
  TheoremReport report = verify_theorem_skew(shape, v, opt.truncate, opt.guard);
  if (opt.json)
    std::cout << to_json(report).dump() << "\n";
  else
    std::cout << "lhs " << report.lhs.get_str() << "\nrhs " << report.rhs.get_str() << "\n"
              << (report.equal ? "equal" : "NOT equal") << "\n";
  return report.equal ? kExitVerified : kExitFailed;
}

int run_count_check(const Options& opt) {
  if (opt.shape.empty() && opt.mu.empty() && opt.nu.empty())
    throw std::invalid_argument("count-check needs --shape, or --mu with --nu");
  CountIdentityReport report =
      opt.shape.empty()
          ? count_identity_check(StrictPartition::parse(opt.mu),
                                 StrictPartition::parse(opt.nu), opt.max_base)
          : skew_count_identity_check(SkewShape::parse(opt.shape), opt.max_base);
  if (opt.json) {
    std::cout << to_json(report).dump() << "\n";
  } else {
    for (const auto& [content, row] : report.rows)
      std::cout << content.to_string() << " lhs " << row.lhs << " rhs " << row.rhs << "\n";
    std::cout << (report.all_equal ? "equal" : "NOT equal") << "\n";
  }
  return report.all_equal ? kExitVerified : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shifted-tableau calculus and truncated Schur P/Q zeta verifications"};
  app.require_subcommand(1);
  Options opt;

  auto* lr_cmd = app.add_subcommand("lr", "One structure coefficient");
  lr_cmd->add_option("--mu", opt.mu)->required();
  lr_cmd->add_option("--nu", opt.nu)->required();
  lr_cmd->add_option("--lambda", opt.lambda)->required();
  lr_cmd->add_flag("--json", opt.json);

  auto* gp_cmd = app.add_subcommand("gp", "Expansion table of a product of two P-shapes");
  gp_cmd->add_option("--mu", opt.mu)->required();
  gp_cmd->add_option("--nu", opt.nu)->required();
  gp_cmd->add_flag("--json", opt.json);

  auto* gq_cmd = app.add_subcommand("gq", "Expansion table of a skew Q-shape");
  gq_cmd->add_option("--shape", opt.shape)->required();
  gq_cmd->add_flag("--json", opt.json);

  auto* enum_cmd = app.add_subcommand("enumerate", "List valid fillings");
  enum_cmd->add_option("--kind", opt.kind, "P or Q");
  enum_cmd->add_option("--shape", opt.shape)->required();
  enum_cmd->add_option("--max-base", opt.max_base)->required();
  enum_cmd->add_option("--content", opt.content);
  enum_cmd->add_flag("--count-only", opt.count_only);
  enum_cmd->add_flag("--json", opt.json);

  auto* rect_cmd = app.add_subcommand("rectify", "Jeu de taquin rectification");
  rect_cmd->add_option("--shape", opt.shape)->required();
  rect_cmd->add_option("--entries", opt.entries)->required();
  rect_cmd->add_flag("--labeled", opt.labeled, "subscript the entries first");
  rect_cmd->add_flag("--trace", opt.trace, "print every intermediate frame");
  rect_cmd->add_flag("--random-strategy", opt.random_strategy);
  rect_cmd->add_option("--seed", opt.seed);
  rect_cmd->add_flag("--json", opt.json);

  auto* knuth_cmd = app.add_subcommand("knuth", "Single-step tag and equivalence of two words");
  knuth_cmd->add_option("--w0", opt.w0)->required();
  knuth_cmd->add_option("--w1", opt.w1)->required();
  knuth_cmd->add_flag("--json", opt.json);

  auto* phi_cmd = app.add_subcommand("phi", "Subscript labeling of a tableau or word");
  phi_cmd->add_option("--shape", opt.shape);
  phi_cmd->add_option("--entries", opt.entries);
  phi_cmd->add_option("--word", opt.word);
  phi_cmd->add_flag("--inverse", opt.inverse, "strip subscripts instead");
  phi_cmd->add_flag("--json", opt.json);

  auto* lr1_cmd = app.add_subcommand("verify-lr1", "Product expansion as polynomials");
  lr1_cmd->add_option("--mu", opt.mu)->required();
  lr1_cmd->add_option("--nu", opt.nu)->required();
  lr1_cmd->add_flag("--json", opt.json);

  auto* lr2_cmd = app.add_subcommand("verify-lr2", "Skew expansion as polynomials");
  lr2_cmd->add_option("--shape", opt.shape)->required();
  lr2_cmd->add_flag("--json", opt.json);

  auto* th1_cmd = app.add_subcommand("verify-theorem1", "Symmetrized product of two P-zetas");
  th1_cmd->add_option("--mu", opt.mu)->required();
  th1_cmd->add_option("--nu", opt.nu)->required();
  th1_cmd->add_option("--s", opt.s)->required();
  th1_cmd->add_option("--t", opt.t)->required();
  th1_cmd->add_option("--truncate", opt.truncate)->required();
  th1_cmd->add_option("--guard", opt.guard);
  th1_cmd->add_flag("--exact", [](std::int64_t) {}, "exact rational mode (default)");
  th1_cmd->add_flag("--approx", opt.approx, "floating mode, reports |lhs-rhs|");
  th1_cmd->add_flag("--random-u", opt.random_u, "random slot arrangements");
  th1_cmd->add_option("--seed", opt.seed);
  th1_cmd->add_flag("--json", opt.json);

  auto* th2_cmd = app.add_subcommand("verify-theorem2", "Symmetrized skew Q-zeta expansion");
  th2_cmd->add_option("--shape", opt.shape)->required();
  th2_cmd->add_option("--v", opt.v)->required();
  th2_cmd->add_option("--truncate", opt.truncate)->required();
  th2_cmd->add_option("--guard", opt.guard);
  th2_cmd->add_flag("--exact", [](std::int64_t) {}, "exact rational mode (default)");
  th2_cmd->add_flag("--approx", opt.approx, "floating mode, reports |lhs-rhs|");
  th2_cmd->add_flag("--json", opt.json);

  auto* cc_cmd = app.add_subcommand("count-check", "Content-by-content counting identity");
  cc_cmd->add_option("--mu", opt.mu);
  cc_cmd->add_option("--nu", opt.nu);
  cc_cmd->add_option("--shape", opt.shape);
  cc_cmd->add_option("--max-base", opt.max_base)->required();
  cc_cmd->add_flag("--json", opt.json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (lr_cmd->parsed()) return run_lr(opt);
    if (gp_cmd->parsed()) return run_gp(opt);
    if (gq_cmd->parsed()) return run_gq(opt);
    if (enum_cmd->parsed()) return run_enumerate(opt);
    if (rect_cmd->parsed()) return run_rectify(opt);
    if (knuth_cmd->parsed()) return run_knuth(opt);
    if (phi_cmd->parsed()) return run_phi(opt);
    if (lr1_cmd->parsed()) return run_verify_lr1(opt);
    if (lr2_cmd->parsed()) return run_verify_lr2(opt);
    if (th1_cmd->parsed()) return run_verify_theorem1(opt);
    if (th2_cmd->parsed()) return run_verify_theorem2(opt);
    if (cc_cmd->parsed()) return run_count_check(opt);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
