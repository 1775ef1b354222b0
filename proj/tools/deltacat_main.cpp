// deltacat: exact verification of the Hadamard product structure on the
// simplex category and its geometric realization. All arithmetic is exact.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "deltacat/json_io.hpp"
#include "deltacat/realization.hpp"
#include "deltacat/suites.hpp"

namespace {

using namespace deltacat;

struct VerifyArgs {
  std::string suite = "all";
  std::uint64_t max_dim = 3;
  std::uint64_t grid_denominator = 4;
  std::uint64_t seed = 0;
  std::uint64_t counterexample_limit = 10;
  bool deep = false;
  std::string format = "text";
};

int run_verify(const VerifyArgs& args) {
  SuiteConfig config;
  config.suite = args.suite;
  config.max_dim = args.max_dim;
  config.grid_denominator = args.grid_denominator;
  config.sample_seed = args.seed;
  config.deep = args.deep;
  config.counterexample_limit = args.counterexample_limit;
  if (config.grid_denominator < 1)
    raise(Errc::parameter_out_of_range, "grid denominator must be at least 1");
  SuiteReport report = run_suite(config);
  if (args.format == "json")
    std::cout << render_json(report);
  else
    std::cout << format_text(report);
  return report.ok() ? 0 : 1;
}

struct ProbeArgs {
  std::uint64_t n = 1;
  std::uint64_t m = 1;
  std::string alpha;
  std::uint64_t grid_denominator = 4;
};

int run_probe(const ProbeArgs& args) {
  Ordinal n{Natural(args.n)};
  Ordinal m{Natural(args.m)};
  MonotoneMap alpha = parse_map(args.alpha, n);
  if (alpha.source() != m)
    raise(Errc::source_mismatch, "alpha literal has " + std::to_string(args.m + 1) +
                                     " entries expected, got " +
                                     std::to_string(alpha.source().table_size()));
  if (args.grid_denominator < 1)
    raise(Errc::parameter_out_of_range, "grid denominator must be at least 1");
  DeviationReport report = compare_on_grid(n, m, alpha, args.grid_denominator);
  std::cout << "alpha: " << report.alpha_literal << "\n";
  std::cout << "grid-denominator: " << report.grid_denominator.str() << "\n";
  std::cout << "points: " << report.points << "\n";
  std::cout << "max-deviation: " << format_rational(report.max_deviation) << "\n";
  if (report.witness) {
    std::cout << "witness: " << format_prism_point(*report.witness) << "\n";
    std::cout << "affine-value: " << report.witness_affine << "\n";
    std::cout << "contraction-value: " << report.witness_contraction << "\n";
  } else {
    std::cout << "witness: none\n";
  }
  std::cout << "vertex-agreement: " << (report.vertex_agreement ? "exact" : "BROKEN") << "\n";
  std::cout << "end-slice-agreement: " << (report.slice_agreement ? "exact" : "BROKEN") << "\n";
  for (const std::string& note : report.notes) std::cout << "note: " << note << "\n";
  return 0;
}

void print_map(const MonotoneMap& f) { std::cout << format_map(f) << "\n"; }

// Deduce the codomain of a map literal when no explicit target is given:
// the smallest ordinal containing every value.
Ordinal deduced_target(const std::vector<Natural>& values) {
  Natural top = 0;
  for (const Natural& v : values)
    if (v > top) top = v;
  return Ordinal(top);
}

MonotoneMap map_from_literal(const std::string& text, std::int64_t target) {
  std::vector<Natural> values = parse_naturals(text);
  Ordinal source(Natural(values.size()) - 1);
  Ordinal tgt = target < 0 ? deduced_target(values) : Ordinal(Natural(target));
  return MonotoneMap(source, tgt, values);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact checks for the Hadamard product on the simplex category"};
  app.require_subcommand(1);

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", verify_args.suite, "core|kernel|coherence|hadamard|homotopy|realization|all")
      ->check(CLI::IsMember({"core", "kernel", "coherence", "hadamard", "homotopy",
                             "realization", "all"}));
  verify->add_option("--max-dim", verify_args.max_dim, "largest ordinal index exercised");
  verify->add_option("--grid-denominator", verify_args.grid_denominator,
                     "denominator of the rational grid");
  verify->add_option("--seed", verify_args.seed, "phase for deterministic sampling");
  verify->add_option("--counterexample-limit", verify_args.counterexample_limit,
                     "most counterexamples to keep");
  verify->add_flag("--deep", verify_args.deep, "raise coherence composite bounds to 2");
  verify->add_option("--format", verify_args.format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  ProbeArgs probe_args;
  CLI::App* probe = app.add_subcommand(
      "probe-discrepancy", "measure the gap to the straight-line contraction");
  probe->add_option("--n", probe_args.n, "target ordinal index");
  probe->add_option("--m", probe_args.m, "source ordinal index");
  probe->add_option("--alpha", probe_args.alpha, "map literal, e.g. 0,1")->required();
  probe->add_option("--grid-denominator", probe_args.grid_denominator,
                    "denominator of the rational grid");

  CLI::App* evaluate = app.add_subcommand("evaluate", "evaluate one operation on literals");
  evaluate->require_subcommand(1);

  std::string ev_alpha, ev_beta, ev_gamma, ev_f, ev_g, ev_w, ev_t, ev_u;
  std::int64_t ev_p = -1, ev_q = -1, ev_n = -1;

  CLI::App* ev_hadamard = evaluate->add_subcommand("hadamard", "pointwise product of two maps");
  ev_hadamard->add_option("--alpha", ev_alpha, "first map literal")->required();
  ev_hadamard->add_option("--beta", ev_beta, "second map literal")->required();
  ev_hadamard->add_option("--p", ev_p, "target of alpha (deduced when omitted)");
  ev_hadamard->add_option("--q", ev_q, "target of beta (deduced when omitted)");

  CLI::App* ev_delta = evaluate->add_subcommand("delta", "product composite of a kernel class");
  ev_delta->add_option("--alpha", ev_alpha, "first leg literal")->required();
  ev_delta->add_option("--beta", ev_beta, "second leg literal")->required();
  ev_delta->add_option("--gamma", ev_gamma, "structure map literal")->required();
  ev_delta->add_option("--p", ev_p, "target of alpha (deduced when omitted)");
  ev_delta->add_option("--q", ev_q, "target of beta (deduced when omitted)");

  CLI::App* ev_theta = evaluate->add_subcommand("theta", "comparison map on a Day class");
  ev_theta->add_option("--f", ev_f, "first canonical leg literal")->required();
  ev_theta->add_option("--g", ev_g, "second canonical leg literal")->required();
  ev_theta->add_option("--alpha", ev_alpha, "first factor literal")->required();
  ev_theta->add_option("--beta", ev_beta, "second factor literal")->required();
  ev_theta->add_option("--p", ev_p, "target of alpha (deduced when omitted)");
  ev_theta->add_option("--q", ev_q, "target of beta (deduced when omitted)");

  CLI::App* ev_homotopy = evaluate->add_subcommand("homotopy-point", "realized homotopy value");
  ev_homotopy->add_option("--alpha", ev_alpha, "map literal")->required();
  ev_homotopy->add_option("--beta", ev_beta, "interval map literal")->required();
  ev_homotopy->add_option("--u", ev_u, "barycentric point literal")->required();
  ev_homotopy->add_option("--n", ev_n, "target of alpha (deduced when omitted)");

  CLI::App* ev_contraction =
      evaluate->add_subcommand("contraction", "straight-line contraction value");
  ev_contraction->add_option("--w", ev_w, "barycentric point literal")->required();
  ev_contraction->add_option("--t", ev_t, "time parameter, e.g. 1/2")->required();

  std::uint64_t en_m = 0, en_n = 0;
  CLI::App* enumerate = app.add_subcommand("enumerate", "list all monotone maps [m] -> [n]");
  enumerate->add_option("m", en_m, "source ordinal index")->required();
  enumerate->add_option("n", en_n, "target ordinal index")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (verify->parsed()) return run_verify(verify_args);
    if (probe->parsed()) return run_probe(probe_args);
    if (enumerate->parsed()) {
      Ordinal m{Natural(en_m)};
      Ordinal n{Natural(en_n)};
      std::vector<MonotoneMap> maps = enumerate_maps(m, n);
      for (const MonotoneMap& f : maps) print_map(f);
      std::cout << "count: " << maps.size() << "\n";
      return Natural(maps.size()) == count_maps(m, n) ? 0 : 1;
    }
    if (ev_hadamard->parsed()) {
      print_map(hadamard(map_from_literal(ev_alpha, ev_p), map_from_literal(ev_beta, ev_q)));
      return 0;
    }
    if (ev_delta->parsed()) {
      MonotoneMap alpha = map_from_literal(ev_alpha, ev_p);
      MonotoneMap beta = map_from_literal(ev_beta, ev_q);
      MonotoneMap gamma = map_from_literal(ev_gamma, std::int64_t(alpha.source().value()));
      print_map(delta(KernelClass(alpha, beta, gamma)));
      return 0;
    }
    if (ev_theta->parsed()) {
      MonotoneMap alpha = map_from_literal(ev_alpha, ev_p);
      MonotoneMap beta = map_from_literal(ev_beta, ev_q);
      MonotoneMap f = map_from_literal(ev_f, std::int64_t(alpha.source().value()));
      MonotoneMap g = map_from_literal(ev_g, std::int64_t(beta.source().value()));
      if (f.source() != g.source())
        raise(Errc::source_mismatch, "canonical legs must share a source");
      print_map(theta(DayClass(eta_inverse(f, g), alpha, beta)));
      return 0;
    }
    if (ev_homotopy->parsed()) {
      MonotoneMap alpha = map_from_literal(ev_alpha, ev_n);
      MonotoneMap beta = map_from_literal(ev_beta, 1);
      BaryPoint u = parse_bary(ev_u);
      std::cout << format_bary(homotopy_point(alpha, beta, u)) << "\n";
      return 0;
    }
    if (ev_contraction->parsed()) {
      BaryPoint w = parse_bary(ev_w);
      ExactRational t = parse_rational(ev_t);
      std::cout << format_bary(standard_contraction(w, t)) << "\n";
      return 0;
    }
  } catch (const DomainError& e) {
    std::cerr << "error [" << errc_name(e.code()) << "]: " << e.what() << "\n"
              << "run with --help for usage\n";
    return 2;
  }
  return 2;
}
