// Command-line front end: Frobenius numbers, experiment scans and identity suites.
#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "frobmean/acceptance.hpp"
#include "frobmean/asymptotics.hpp"
#include "frobmean/frobenius.hpp"
#include "frobmean/lambda.hpp"
#include "frobmean/meanvalue.hpp"
#include "frobmean/parallel.hpp"

using namespace frobmean;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  if (out.empty()) throw UsageError("empty list");
  return out;
}

std::vector<std::int64_t> parse_ints(const std::string& text, const char* what) {
  std::vector<std::int64_t> out;
  for (const auto& s : split(text)) {
    const Rational r = [&] {
      try {
        return Rational::parse(s);
      } catch (const std::exception&) {
        throw UsageError(std::string(what) + ": '" + s + "' is not an integer");
      }
    }();
    if (!r.is_integer()) throw UsageError(std::string(what) + ": '" + s + "' is not an integer");
    out.push_back(r.num());
  }
  return out;
}

std::vector<Rational> parse_rationals(const std::string& text, const char* what) {
  std::vector<Rational> out;
  for (const auto& s : split(text)) {
    try {
      out.push_back(Rational::parse(s));
    } catch (const std::exception&) {
      throw UsageError(std::string(what) + ": '" + s + "' is not of the form p/q");
    }
    if (out.back().sign() <= 0) throw UsageError(std::string(what) + " must be positive");
  }
  return out;
}

/// CSV to --out when given, else to stdout.
class CsvSink {
 public:
  explicit CsvSink(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw UsageError("cannot write '" + path + "'");
    }
    out().precision(17);
  }
  std::ostream& out() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

struct Summary {
  bool all_pass = true;
  void line(bool pass, const std::string& text) {
    std::cout << (pass ? "PASS  " : "FAIL  ") << text << '\n';
    all_pass &= pass;
  }
  int status() const { return all_pass ? 0 : 1; }
};

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(4) << v;
  return os.str();
}

struct Options {
  unsigned workers = 0;
  std::string out;
  // frob
  std::string gens;
  // mean-scan / fixed-a-scan
  std::string n_grid = "40,80,160,320";
  std::string a_grid = "101,401,1601,6401";
  std::string box = "1,1,1";
  std::string pair_box = "1,1";
  // lambda-asym
  std::string r_grid = "200,800";
  std::string deltas = "1,2,3,6";
  std::string alphas = "1/2,2/3,3/2";
  std::string rule = "unbounded";
  std::int64_t sigma_r = 10000;
  std::string sigma_deltas = "1,2,6";
  // partition-check
  std::string part_r = "50,80,100";
  std::string part_alpha = "2/7,3/5,5/3";
  // asym-consts
  std::string items = "all";
  std::string item_r = "1000,10000,100000";
  std::string b_grid = "500,1000,2000";
  // identities / self-test
  std::string criteria;
};

int run_frob(const Options& o) {
  const auto gens = parse_ints(o.gens, "--gens");
  for (auto g : gens) {
    if (g < 1) throw UsageError("generators must be positive");
  }
  const GeneratorSet set(gens);
  if (set.gcd() != 1) throw UsageError("gcd != 1");
  FrobeniusResult r;
  if (set.normalized().size() == 3 && !set.has_duplicates()) {
    r = f_three(gens[0], gens[1], gens[2]);
  } else {
    r = oracle_frobenius(set);
  }
  std::cout << "g=" << r.g << " f=" << r.f << " method=" << to_string(r.method) << '\n';
  return 0;
}

void decay_checks(Summary& sum, const std::vector<std::pair<double, double>>& points,
                  const std::vector<double>& values, double lo, double hi, bool halving) {
  if (points.size() < 2) return;
  const int inv = adjacent_inversions(values);
  sum.line(inv <= 1, "decrease with at most one inversion (" + std::to_string(inv) + ")");
  if (halving) {
    const bool ok = std::fabs(values.back()) < std::fabs(values.front()) / 2;
    sum.line(ok, "last |E| below half of first (" + fmt(std::fabs(values.back())) + " vs " +
                     fmt(std::fabs(values.front())) + ")");
  }
  const double slope = decay_fit(points).slope;
  sum.line(slope >= lo && slope <= hi, "slope " + fmt(slope) + " in [" + fmt(lo) + ", " + fmt(hi) + "]");
}

int run_mean_scan(const Options& o) {
  const auto ns = parse_ints(o.n_grid, "--N");
  const auto x = parse_rationals(o.box, "--x");
  if (x.size() != 3) throw UsageError("--x needs three ratios");
  CsvSink csv(o.out);
  csv.out() << "N,F,G,E,slope_so_far\n";
  std::vector<std::pair<double, double>> points;
  std::vector<double> values;
  for (const auto N : ns) {
    if (N < 1) throw UsageError("--N values must be positive");
    const BoxSpec box{x[0], x[1], x[2], N};
    for (int i = 1; i <= 3; ++i) {
      try {
        box.bound(i);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }
    const auto rep = box_sums(box, o.workers);
    points.emplace_back(static_cast<double>(N), std::fabs(rep.E));
    values.push_back(rep.E);
    csv.out() << N << ',' << to_string(rep.F) << ',' << rep.G << ',' << rep.E << ',';
    if (points.size() >= 2 && rep.E != 0) csv.out() << decay_fit(points).slope;
    csv.out() << '\n';
  }
  Summary sum;
  decay_checks(sum, points, values, -0.9, -0.25, true);
  return sum.status();
}

int run_fixed_a_scan(const Options& o) {
  const auto as = parse_ints(o.a_grid, "--a");
  const auto x = parse_rationals(o.pair_box, "--x");
  if (x.size() != 2) throw UsageError("--x needs two ratios");
  CsvSink csv(o.out);
  csv.out() << "a,pairs,error,slope_so_far\n";
  std::vector<std::pair<double, double>> points;
  std::vector<double> values;
  for (const auto a : as) {
    if (a < 2) throw UsageError("--a values must be at least 2");
    const auto rep = fixed_a_error(a, x[0], x[1], o.workers);
    points.emplace_back(static_cast<double>(a), std::fabs(rep.error));
    values.push_back(rep.error);
    csv.out() << a << ',' << rep.pair_count << ',' << rep.error << ',';
    if (points.size() >= 2 && rep.error != 0) csv.out() << decay_fit(points).slope;
    csv.out() << '\n';
  }
  Summary sum;
  decay_checks(sum, points, values, -0.5, -0.05, false);
  return sum.status();
}

std::vector<int> parse_criteria(const std::string& text, std::vector<int> fallback) {
  if (text.empty()) return fallback;
  std::vector<int> ids;
  for (const auto v : parse_ints(text, "--criteria")) {
    if (v < 1 || v > static_cast<std::int64_t>(acceptance_criteria().size())) {
      throw UsageError("no criterion " + std::to_string(v));
    }
    ids.push_back(static_cast<int>(v));
  }
  return ids;
}

int run_criteria(const std::vector<int>& ids, const Options& o) {
  CsvSink csv(o.out);
  csv.out() << "criterion,name,pass,seconds,detail\n";
  Summary sum;
  for (const int id : ids) {
    const auto r = run_criterion(id, o.workers);
    csv.out() << r.id << ',' << r.name << ',' << (r.pass ? "true" : "false") << ',' << r.seconds << ",\""
              << r.detail << "\"\n";
    if (!o.out.empty()) csv.out().flush();
    sum.line(r.pass, std::to_string(r.id) + "  " + r.name + "  " + r.detail);
  }
  return sum.status();
}

DiagonalRule parse_rule(const std::string& s) {
  if (s == "unbounded") return DiagonalRule::unbounded;
  if (s == "cross-multiplied") return DiagonalRule::cross_multiplied;
  throw UsageError("--rule must be unbounded or cross-multiplied");
}

int run_lambda_asym(const Options& o) {
  const auto rs = parse_ints(o.r_grid, "--R");
  const auto deltas = parse_ints(o.deltas, "--delta");
  const auto alphas = parse_rationals(o.alphas, "--alpha");
  const auto sigma_deltas = parse_ints(o.sigma_deltas, "--sigma-delta");
  const auto rule = parse_rule(o.rule);
  for (auto d : deltas) {
    if (d < 1 || d > rs.front()) throw UsageError("need R >= delta >= 1");
  }
  CsvSink csv(o.out);
  csv.out() << "kind,R,delta,alpha,lhs,main,rel_err\n";
  Summary sum;
  for (const auto& al : alphas) {
    for (const auto d : deltas) {
      std::vector<double> errs;
      for (const auto R : rs) {
        const auto rep = lambda_mean_check(R, d, al, rule, o.workers);
        errs.push_back(rep.rel_err);
        csv.out() << "lambda," << R << ',' << d << ',' << al.str() << ',' << rep.lhs.str() << ',' << rep.main << ','
                  << rep.rel_err << '\n';
      }
      const bool ok = errs.back() < 0.10 && (errs.size() < 2 || errs.back() < errs.front());
      sum.line(ok, "lambda alpha=" + al.str() + " delta=" + std::to_string(d) + " rel err " + fmt(errs.front()) +
                       " -> " + fmt(errs.back()));
    }
  }
  if (o.sigma_r > 0) {
    for (const auto d : sigma_deltas) {
      if (d < 1 || d > o.sigma_r) throw UsageError("need sigma R >= delta >= 1");
      const auto rep = sigma_weighted_check(o.sigma_r, d);
      csv.out() << "sigma," << o.sigma_r << ',' << d << ",," << rep.lhs << ',' << rep.main << ',' << rep.rel_err
                << '\n';
      sum.line(rep.rel_err < 0.01, "sigma delta=" + std::to_string(d) + " rel err " + fmt(rep.rel_err));
    }
  }
  return sum.status();
}

int run_partition(const Options& o) {
  const auto rs = parse_ints(o.part_r, "--R");
  const auto alphas = parse_rationals(o.part_alpha, "--alpha");
  if (rs.size() != alphas.size()) throw UsageError("--R and --alpha must have the same length");
  CsvSink csv(o.out);
  csv.out() << "R,alpha,scanned,in_region,mismatches\n";
  Summary sum;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    if (rs[i] < 1) throw UsageError("--R values must be positive");
    const auto rep = partition_scan(rs[i], alphas[i], o.workers);
    csv.out() << rs[i] << ',' << alphas[i].str() << ',' << rep.scanned << ',' << rep.in_region << ','
              << rep.mismatches << '\n';
    sum.line(rep.ok(), "partition R=" + std::to_string(rs[i]) + " alpha=" + alphas[i].str() + " " +
                           std::to_string(rep.mismatches) + " mismatches");
  }
  return sum.status();
}

int run_asym_consts(const Options& o) {
  std::vector<const AsymptoticItem*> chosen;
  if (o.items == "all") {
    for (const auto& it : asymptotic_items()) chosen.push_back(&it);
  } else {
    for (const auto& id : split(o.items)) {
      try {
        chosen.push_back(&find_item(id));
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }
  }
  const auto rs = parse_ints(o.item_r, "--R");
  for (auto R : rs) {
    if (R < 10) throw UsageError("--R values must be at least 10");
  }
  const auto bs = parse_ints(o.b_grid, "--b");
  for (auto b : bs) {
    if (b < 10) throw UsageError("--b values must be at least 10");
  }
  CsvSink csv(o.out);
  csv.out() << "item,R,S,main,remainder_ratio\n";
  Summary sum;
  for (const auto* item : chosen) {
    double first = 0, worst = 0, rel = 0;
    for (std::size_t i = 0; i < rs.size(); ++i) {
      const auto rep = item_check(*item, rs[i]);
      csv.out() << item->id << ',' << rs[i] << ',' << rep.S << ',' << rep.main << ',' << rep.remainder_ratio << '\n';
      if (i == 0) first = rep.remainder_ratio;
      worst = std::max(worst, rep.remainder_ratio);
      if (!item->main_coeff.is_zero()) rel = std::fabs(rep.S - rep.main) / std::fabs(rep.main);
    }
    sum.line(worst <= 3 * first && rel <= 0.01,
             "item " + item->id + " ratio growth " + fmt(first > 0 ? worst / first : 1.0) + ", rel err " + fmt(rel));
  }
  const auto c = const_combination();
  csv.out() << "combination,,"  << c.value << ',' << c.target << ',' << std::fabs(c.value - c.target) << '\n';
  sum.line(std::fabs(c.value - c.target) < 1e-12, "constant combination |diff| " + fmt(std::fabs(c.value - c.target)));
  const auto ratios = s1_growth_check(bs);
  for (std::size_t i = 0; i < bs.size(); ++i) csv.out() << "s1," << bs[i] << ',' << ratios[i] << ",,\n";
  const auto [lo, hi] = std::minmax_element(ratios.begin(), ratios.end());
  sum.line(*hi / *lo < 3, "s1 growth spread " + fmt(*hi / *lo));
  return sum.status();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frobenius numbers of three generators and their mean values"};
  app.require_subcommand(0, 1);
  Options o;
  bool self_test = false;
  app.add_option("--workers", o.workers, "worker threads (default: FROBMEAN_WORKERS or hardware concurrency)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--self-test", self_test, "run the acceptance suite");
  app.add_option("--criteria", o.criteria, "with --self-test: comma-separated criterion numbers");
  app.add_option("--out", o.out, "CSV output path (default stdout)");

  auto* frob = app.add_subcommand("frob", "Frobenius number of a generator list");
  frob->add_option("--gens", o.gens, "comma-separated generators")->required();

  auto* mean = app.add_subcommand("mean-scan", "box sums of f against (8/pi) sqrt(abc)");
  mean->add_option("--N", o.n_grid, "box sizes")->capture_default_str();
  mean->add_option("--x", o.box, "three box ratios p/q")->capture_default_str();
  mean->add_option("--out", o.out, "CSV output path");

  auto* fixed = app.add_subcommand("fixed-a-scan", "normalized mean error with the first generator fixed");
  fixed->add_option("--a", o.a_grid, "values of a")->capture_default_str();
  fixed->add_option("--x", o.pair_box, "two ratios p/q bounding b and c")->capture_default_str();
  fixed->add_option("--out", o.out, "CSV output path");

  auto* ident = app.add_subcommand("identities", "exact identity suites (criteria 1-7 by default)");
  ident->add_option("--criteria", o.criteria, "comma-separated criterion numbers");
  ident->add_option("--out", o.out, "CSV output path");

  auto* lasym = app.add_subcommand("lambda-asym", "mean value of lambda and the sigma-weighted sum");
  lasym->add_option("--R", o.r_grid, "values of R; the error must drop from the first to the last")
      ->capture_default_str();
  lasym->add_option("--delta", o.deltas, "divisibility moduli")->capture_default_str();
  lasym->add_option("--alpha", o.alphas, "ratios p/q")->capture_default_str();
  lasym->add_option("--rule", o.rule, "diagonal rule: unbounded or cross-multiplied")->capture_default_str();
  lasym->add_option("--sigma-R", o.sigma_r, "R for the sigma-weighted sum (0 skips it)")->capture_default_str();
  lasym->add_option("--sigma-delta", o.sigma_deltas, "moduli for the sigma-weighted sum")->capture_default_str();
  lasym->add_option("--out", o.out, "CSV output path");

  auto* part = app.add_subcommand("partition-check", "exhaustive signed five-case partition scan");
  part->add_option("--R", o.part_r, "values of R")->capture_default_str();
  part->add_option("--alpha", o.part_alpha, "ratios p/q, paired with --R")->capture_default_str();
  part->add_option("--out", o.out, "CSV output path");

  auto* consts = app.add_subcommand("asym-consts", "closed-form sums, the 4pi/15 combination and s1 growth");
  consts->add_option("--items", o.items, "item ids (a1..a3, b1..b3, c..s) or all")->capture_default_str();
  consts->add_option("--R", o.item_r, "values of R")->capture_default_str();
  consts->add_option("--b", o.b_grid, "values of b for the s1 growth check")->capture_default_str();
  consts->add_option("--out", o.out, "CSV output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (o.workers == 0) o.workers = default_workers();
    if (self_test) {
      std::vector<int> all;
      for (const auto& c : acceptance_criteria()) all.push_back(c.id);
      return run_criteria(parse_criteria(o.criteria, all), o);
    }
    if (*frob) return run_frob(o);
    if (*mean) return run_mean_scan(o);
    if (*fixed) return run_fixed_a_scan(o);
    if (*ident) return run_criteria(parse_criteria(o.criteria, {1, 2, 3, 4, 5, 6, 7}), o);
    if (*lasym) return run_lambda_asym(o);
    if (*part) return run_partition(o);
    if (*consts) return run_asym_consts(o);
    std::cerr << app.help();
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const InfiniteGapsError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
}
