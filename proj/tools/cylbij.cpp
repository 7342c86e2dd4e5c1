// cylbij: verify, map, unmap, series, hooks, local-rule, render.
// Exit codes: 0 success, 1 counterexample, 2 usage or input error.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "cylbij/bijection.hpp"
#include "cylbij/error.hpp"
#include "cylbij/growth_diagram.hpp"
#include "cylbij/io.hpp"
#include "cylbij/local_rule.hpp"
#include "cylbij/series.hpp"

using namespace cylbij;

namespace {

constexpr int kOk = 0;
constexpr int kCounterexample = 1;
constexpr int kUsage = 2;

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::parse_error, "cannot open input file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::parse_error, "cannot write output file '" + path + "'");
  out << text;
}

Profile cylindric_profile(const std::string& text) {
  return Profile::parse_cylindric(text);
}

struct Counterexample {
  std::string what;
};

int cmd_verify(const std::string& profile_text, int order, int bound, bool json) {
  const Profile p = cylindric_profile(profile_text);
  if (bound < 0) bound = std::min(order, 8);
  const auto lhs = enumerate_cpp_series(p, order);
  const auto pairs = enumerate_pairs_series(p, order);
  const auto rhs = borodin_rhs_series(p, order);

  std::ostringstream report;
  bool ok = true;
  std::string failure;
  if (int i = first_mismatch(lhs, rhs); i >= 0) {
    ok = false;
    failure = "series mismatch at z^" + std::to_string(i) + ": lhs " +
              lhs[i].str() + ", rhs " + rhs[i].str();
  } else if (int k = first_mismatch(pairs, rhs); k >= 0) {
    ok = false;
    failure = "series mismatch at z^" + std::to_string(k) + ": pairs " +
              pairs[k].str() + ", rhs " + rhs[k].str();
  }

  std::map<long, long> cpp_counts, pair_counts;
  if (ok) {
    try {
      for_each_cpp(p, bound, [&](const CylindricPlanePartition& c) {
        ++cpp_counts[cpp_weight(c)];
        auto [gamma, d] = phi(c);
        if (psi(gamma, d) != c)
          throw Counterexample{"psi(phi(c)) != c for " + cpp_to_json(c)};
      });
      for_each_pair(p, bound, [&](const Partition& gamma, const LabelledCylindricDiagram& d) {
        ++pair_counts[p.length() * gamma.weight() + alcd_weight(d)];
        const auto c = psi(gamma, d);
        auto back = phi(c);
        if (back.first != gamma || back.second != d)
          throw Counterexample{"phi(psi(x)) != x for " + pair_to_json(gamma, d)};
      });
    } catch (const Counterexample& e) {
      ok = false;
      failure = e.what;
    } catch (const Error& e) {
      if (!e.is_internal()) throw;
      ok = false;
      failure = e.what();
    }
  }

  if (json) {
    report << "{\"profile\":\"" << to_string(p) << "\",\"order\":" << order
           << ",\"round_trip_bound\":" << bound << ",\"status\":\""
           << (ok ? "PASS" : "FAIL") << "\",\"lhs\":" << series_to_json(lhs)
           << ",\"pairs\":" << series_to_json(pairs)
           << ",\"rhs\":" << series_to_json(rhs);
    if (!ok) report << ",\"counterexample\":" << json_quote(failure);
    report << "}\n";
  } else {
    report << "profile " << to_string(p) << ", order " << order
           << ", round-trip bound " << bound << '\n';
    report << "coefficients " << to_string(lhs) << '\n';
    report << "weight  cpps  pairs\n";
    for (long w = 0; w <= bound; ++w)
      report << std::setw(6) << w << std::setw(6) << cpp_counts[w] << std::setw(7)
             << pair_counts[w] << '\n';
    report << (ok ? "PASS" : "FAIL: " + failure) << '\n';
  }
  std::cout << report.str();
  return ok ? kOk : kCounterexample;
}

int cmd_map(const std::string& in, const std::string& out) {
  const auto pair = pair_from_json(read_input(in));
  write_output(out, cpp_to_json(psi(pair.gamma, pair.alcd)) + "\n");
  return kOk;
}

int cmd_unmap(const std::string& in, const std::string& out) {
  const auto c = cpp_from_json(read_input(in));
  auto [gamma, d] = phi(c);
  write_output(out, pair_to_json(gamma, d) + "\n");
  return kOk;
}

int cmd_series(const std::string& profile_text, int order,
               const std::string& side, bool json) {
  const Profile p = Profile::parse(profile_text);
  std::vector<std::pair<std::string, TruncatedSeries>> rows;
  auto want = [&](const char* s) { return side == "all" || side == s; };
  if (side == "rpp" || side == "stanley") {
    if (side == "rpp") rows.emplace_back("rpp", enumerate_rpp_series(p, order));
    if (side == "stanley") rows.emplace_back("stanley", stanley_rhs_series(p, order));
  } else {
    require_cylindric(p);
    if (want("lhs")) rows.emplace_back("lhs", enumerate_cpp_series(p, order));
    if (want("pairs")) rows.emplace_back("pairs", enumerate_pairs_series(p, order));
    if (want("rhs")) rows.emplace_back("rhs", borodin_rhs_series(p, order));
  }
  std::ostringstream os;
  if (json) {
    os << "{\"profile\":\"" << to_string(p) << "\",\"order\":" << order;
    for (const auto& [name, s] : rows) os << ",\"" << name << "\":" << series_to_json(s);
    os << "}\n";
  } else {
    std::size_t width = 4;
    for (const auto& [name, s] : rows)
      for (const auto& c : s.coeffs()) width = std::max(width, c.str().size() + 1);
    os << std::setw(8) << "z^";
    for (int i = 0; i <= order; ++i) os << std::setw(static_cast<int>(width)) << i;
    os << '\n';
    for (const auto& [name, s] : rows) {
      os << std::setw(8) << name;
      for (const auto& c : s.coeffs()) os << std::setw(static_cast<int>(width)) << c.str();
      os << '\n';
    }
  }
  std::cout << os.str();
  return kOk;
}

int cmd_hooks(const std::string& profile_text, long order) {
  std::cout << render_hooks(cylindric_profile(profile_text), order);
  return kOk;
}

int cmd_local_rule(const std::string& alpha, const std::string& beta,
                   const std::string& lambda, long ell, const std::string& nu) {
  const auto a = parse_partition(alpha);
  const auto b = parse_partition(beta);
  if (!lambda.empty()) {
    const auto out = burge_down(a, b, parse_partition(lambda));
    std::cout << "down: ell=" << out.label << " nu=" << to_string(out.nu) << '\n';
  } else {
    const auto out = burge_up(a, b, ell, parse_partition(nu));
    std::cout << "up: lambda=" << to_string(out) << '\n';
  }
  return kOk;
}

int cmd_render(const std::string& in) {
  const auto object = object_from_json(read_input(in));
  if (const auto* c = std::get_if<CylindricPlanePartition>(&object)) {
    std::cout << render_cpp(*c) << '\n' << render(CylindricGrowthDiagram::from_cpp(*c));
  } else if (const auto* pr = std::get_if<PairInput>(&object)) {
    std::cout << render_alcd(pr->alcd) << '\n'
              << render(CylindricGrowthDiagram::from_pair(pr->gamma, pr->alcd));
  } else {
    std::cout << render_alcd(std::get<LabelledCylindricDiagram>(object));
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cylindric plane partitions: hook-product identity and its bijection"};
  app.require_subcommand(1);

  std::string profile, in, out, side = "all", alpha, beta, lambda, nu;
  int order = 10;
  int bound = -1;
  long ell = 0;
  bool json = false;

  auto* verify = app.add_subcommand("verify", "Check the identity and the bijection up to order N");
  verify->add_option("-p,--profile", profile, "0/1 profile")->required();
  verify->add_option("-N,--order", order, "Truncation order")->check(CLI::NonNegativeNumber);
  verify->add_option("--round-trip", bound, "Weight bound for the round trip (default min(N,8))");
  verify->add_flag("--json", json, "JSON report");

  auto* map = app.add_subcommand("map", "Apply psi to a pair {profile,gamma,alcd}");
  map->add_option("-i,--input", in, "Input file (default stdin)");
  map->add_option("-o,--output", out, "Output file (default stdout)");

  auto* unmap = app.add_subcommand("unmap", "Apply phi to a CPP {profile,slices}");
  unmap->add_option("-i,--input", in, "Input file (default stdin)");
  unmap->add_option("-o,--output", out, "Output file (default stdout)");

  auto* series = app.add_subcommand("series", "Print truncated series");
  series->add_option("-p,--profile", profile, "0/1 profile")->required();
  series->add_option("-N,--order", order, "Truncation order")->check(CLI::NonNegativeNumber);
  series->add_option("--side", side, "lhs, pairs, rhs, all, rpp or stanley")
      ->check(CLI::IsMember({"lhs", "pairs", "rhs", "all", "rpp", "stanley"}));
  series->add_flag("--json", json, "JSON output");

  auto* hooks = app.add_subcommand("hooks", "Hook lengths of boxes with hook <= N");
  hooks->add_option("-p,--profile", profile, "0/1 profile")->required();
  hooks->add_option("-N,--order", order, "Largest hook")->check(CLI::NonNegativeNumber);

  auto* local = app.add_subcommand("local-rule", "Apply burge_down (--lambda) or burge_up (--ell, --nu)");
  local->add_option("--alpha", alpha, "Partition, e.g. [6,5,5,3]")->required();
  local->add_option("--beta", beta, "Partition")->required();
  auto* lam = local->add_option("--lambda", lambda, "Top partition");
  auto* l = local->add_option("--ell", ell, "Face label")->check(CLI::NonNegativeNumber);
  auto* n = local->add_option("--nu", nu, "Bottom partition");
  lam->excludes(l)->excludes(n);
  l->needs(n);
  n->needs(l);

  auto* rend = app.add_subcommand("render", "Draw a CPP, pair or ALCD given as JSON");
  rend->add_option("-i,--input", in, "Input file (default stdin)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*verify) return cmd_verify(profile, order, bound, json);
    if (*map) return cmd_map(in, out);
    if (*unmap) return cmd_unmap(in, out);
    if (*series) return cmd_series(profile, order, side, json);
    if (*hooks) return cmd_hooks(profile, order);
    if (*local) {
      if (lambda.empty() && !*n) {
        std::cerr << "local-rule: give --lambda, or --ell with --nu\n";
        return kUsage;
      }
      return cmd_local_rule(alpha, beta, lambda, ell, nu);
    }
    if (*rend) return cmd_render(in);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return e.is_internal() ? kCounterexample : kUsage;
  }
  return kUsage;
}
