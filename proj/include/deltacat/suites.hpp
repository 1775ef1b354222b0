#pragma once

// Verification suites: exhaustive (or deterministically sampled) law checks
// over bounded ranges, aggregated into CLI-facing suite reports.

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "deltacat/coherence.hpp"
#include "deltacat/hadamard.hpp"
#include "deltacat/promonoidal.hpp"
#include "deltacat/realization.hpp"
#include "deltacat/report.hpp"
#include "deltacat/simplex.hpp"

namespace deltacat {

struct SuiteConfig {
  std::string suite = "all";
  Natural max_dim = 3;
  Natural grid_denominator = 4;
  Natural sample_seed = 0;
  bool deep = false;
  std::size_t counterexample_limit = 10;
};

struct SuiteReport {
  std::string suite;
  SuiteConfig config;
  std::uint64_t instances = 0;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::vector<Counterexample> counterexamples;
  std::vector<std::string> notes;

  [[nodiscard]] bool ok() const noexcept { return failed == 0; }
};

[[nodiscard]] inline std::vector<std::string> suite_names() {
  return {"core", "kernel", "coherence", "hadamard", "homotopy", "realization"};
}

namespace detail {

[[nodiscard]] inline Natural cap(const Natural& pinned, const Natural& d) {
  return d < pinned ? d : pinned;
}

inline void absorb(SuiteReport& suite, const CheckReport& part) {
  suite.instances += part.instances;
  suite.failed += part.failed;
  suite.passed += part.instances - part.failed;
  for (const Counterexample& cx : part.counterexamples) {
    if (suite.counterexamples.size() >= suite.config.counterexample_limit) break;
    suite.counterexamples.push_back(cx);
  }
  for (const std::string& note : part.notes) suite.notes.push_back(part.name + ": " + note);
}

inline void absorb(SuiteReport& suite, const BijectionReport& part) {
  CheckReport sizes;
  sizes.name = part.name;
  sizes.counterexample_limit = suite.config.counterexample_limit;
  check(sizes, part.left_size == part.expected && part.right_size == part.expected, [&] {
    return Counterexample{part.name, "canonical-form counts", part.expected.str(),
                          "left=" + part.left_size.str() + " right=" + part.right_size.str()};
  });
  absorb(suite, sizes);
  absorb(suite, part.checks);
}

// Deterministic thinning of an instance stream down to roughly `budget`
// checks: every stride-th instance, with the phase set by the seed.
class Sampler {
 public:
  Sampler(const Natural& total, std::uint64_t budget, const Natural& seed) {
    if (budget > 0 && total > budget) stride_ = to_index(total / Natural(budget) + 1);
    offset_ = to_index(seed % Natural(stride_));
  }

  [[nodiscard]] bool take() {
    bool selected = (counter_ % stride_) == offset_;
    ++counter_;
    return selected;
  }

 private:
  std::uint64_t stride_ = 1;
  std::uint64_t offset_ = 0;
  std::uint64_t counter_ = 0;
};

[[nodiscard]] inline SuiteReport fresh_report(const std::string& name,
                                              const SuiteConfig& config) {
  SuiteReport report;
  report.suite = name;
  report.config = config;
  return report;
}

[[nodiscard]] inline CheckReport fresh_check(const std::string& name,
                                             const SuiteConfig& config) {
  CheckReport report;
  report.name = name;
  report.counterexample_limit = config.counterexample_limit;
  return report;
}

}  // namespace detail

// --------------------------------------------------------------------------
// core: simplex combinatorics.

[[nodiscard]] inline SuiteReport run_core(const SuiteConfig& config) {
  SuiteReport suite = detail::fresh_report("core", config);
  const Natural& d = config.max_dim;

  CheckReport counts = detail::fresh_check("hom-set-counts", config);
  for (Natural mv = 0; mv <= d; ++mv) {
    for (Natural nv = 0; nv <= d; ++nv) {
      Ordinal m(mv), n(nv);
      std::vector<MonotoneMap> maps = enumerate_maps(m, n);
      bool sorted = true;
      for (std::size_t i = 1; i < maps.size(); ++i)
        if (!(maps[i - 1] < maps[i])) sorted = false;
      bool counted = Natural(maps.size()) == count_maps(m, n);
      check(counts, sorted && counted, [&] {
        return Counterexample{"enumerate_maps", "m=" + mv.str() + " n=" + nv.str(),
                              count_maps(m, n).str() + " lex-sorted distinct maps",
                              std::to_string(maps.size()) + (sorted ? "" : ", unsorted")};
      });
    }
  }
  detail::absorb(suite, counts);

  const Natural law_bound = detail::cap(3, d);
  CheckReport assoc = detail::fresh_check("composition-associativity", config);
  CheckReport ident = detail::fresh_check("identity-laws", config);
  for (Natural av = 0; av <= law_bound; ++av) {
    for (Natural bv = 0; bv <= law_bound; ++bv) {
      Ordinal a(av), b(bv);
      std::vector<MonotoneMap> fs = enumerate_maps(a, b);
      for (const MonotoneMap& f : fs) {
        bool laws = compose(identity(b), f) == f && compose(f, identity(a)) == f;
        check(ident, laws, [&] {
          return Counterexample{"identity-laws", "f=" + format_map(f), format_map(f),
                                "identity composite differs"};
        });
      }
      for (Natural cv = 0; cv <= law_bound; ++cv) {
        Ordinal c(cv);
        std::vector<MonotoneMap> gs = enumerate_maps(b, c);
        for (Natural ev = 0; ev <= law_bound; ++ev) {
          std::vector<MonotoneMap> hs = enumerate_maps(c, Ordinal(ev));
          for (const MonotoneMap& f : fs)
            for (const MonotoneMap& g : gs)
              for (const MonotoneMap& h : hs) {
                MonotoneMap lhs = compose(h, compose(g, f));
                MonotoneMap rhs = compose(compose(h, g), f);
                check(assoc, lhs == rhs, [&] {
                  return Counterexample{"compose-associativity",
                                        "f=" + format_map(f) + " g=" + format_map(g) +
                                            " h=" + format_map(h),
                                        format_map(rhs), format_map(lhs)};
                });
              }
        }
      }
    }
  }
  detail::absorb(suite, assoc);
  detail::absorb(suite, ident);

  CheckReport terminal = detail::fresh_check("terminal-uniqueness", config);
  for (Natural mv = 0; mv <= d; ++mv) {
    for (Natural nv = 0; nv <= d; ++nv) {
      Ordinal m(mv), n(nv);
      for (const MonotoneMap& f : enumerate_maps(m, n)) {
        check(terminal, compose(terminal_map(n), f) == terminal_map(m), [&] {
          return Counterexample{"terminal-uniqueness", "f=" + format_map(f),
                                format_map(terminal_map(m)), "terminal composite differs"};
        });
      }
    }
  }
  detail::absorb(suite, terminal);

  CheckReport vertex = detail::fresh_check("vertex-constants", config);
  for (Natural mv = 0; mv <= d; ++mv) {
    Ordinal m(mv);
    for (Natural eps = 0; eps <= 1; ++eps) {
      MonotoneMap lhs = compose(vertex_map(eps), terminal_map(m));
      MonotoneMap rhs = constant_map(m, 1, eps);
      check(vertex, lhs == rhs, [&] {
        return Counterexample{"vertex-constants", "m=" + mv.str() + " eps=" + eps.str(),
                              format_map(rhs), format_map(lhs)};
      });
    }
  }
  detail::absorb(suite, vertex);
  return suite;
}

// --------------------------------------------------------------------------
// kernel: the promonoidal kernel, canonical forms, delta, theta, truncation.

[[nodiscard]] inline SuiteReport run_kernel(const SuiteConfig& config) {
  SuiteReport suite = detail::fresh_report("kernel", config);
  const Natural& d = config.max_dim;
  const Natural s2 = detail::cap(2, d);

  CheckReport eta_bij = detail::fresh_check("eta-bijection", config);
  for (Natural pv = 0; pv <= d; ++pv) {
    for (Natural qv = 0; qv <= d; ++qv) {
      for (Natural rv = 0; rv <= d; ++rv) {
        Ordinal p(pv), q(qv), r(rv);
        std::set<KernelClass> classes;
        for (const MonotoneMap& f : enumerate_maps(r, p)) {
          for (const MonotoneMap& g : enumerate_maps(r, q)) {
            KernelClass c = eta_inverse(f, g);
            auto [ef, eg] = eta(c);
            check(eta_bij, ef == f && eg == g && c.is_canonical(), [&] {
              return Counterexample{"eta-round-trip", "f=" + format_map(f) + " g=" + format_map(g),
                                    "(f,g) back from eta", "(" + format_map(ef) + "," +
                                        format_map(eg) + ")"};
            });
            classes.insert(normalize_kernel(c));
          }
        }
        Natural expected = count_maps(r, p) * count_maps(r, q);
        check(eta_bij, Natural(classes.size()) == expected, [&] {
          return Counterexample{"eta-class-count",
                                "p=" + pv.str() + " q=" + qv.str() + " r=" + rv.str(),
                                expected.str(), std::to_string(classes.size())};
        });
      }
    }
  }
  detail::absorb(suite, eta_bij);

  // The generating relation, delta's invariance along it, and idempotence
  // of normalization, over one shared enumeration.
  CheckReport relation = detail::fresh_check("relation-orbit", config);
  CheckReport delta_wd = detail::fresh_check("delta-well-definedness", config);
  for (Natural pv = 0; pv <= s2; ++pv) {
    for (Natural qv = 0; qv <= s2; ++qv) {
      Ordinal p(pv), q(qv);
      for (Natural mv = 0; mv <= s2; ++mv) {
        Ordinal m(mv);
        std::vector<MonotoneMap> alphas = enumerate_maps(m, p);
        std::vector<MonotoneMap> betas = enumerate_maps(m, q);
        for (Natural msv = 0; msv <= s2; ++msv) {
          Ordinal ms(msv);
          std::vector<MonotoneMap> fs = enumerate_maps(ms, m);
          for (Natural rv = 0; rv <= s2; ++rv) {
            Ordinal r(rv);
            std::vector<MonotoneMap> gammas = enumerate_maps(r, ms);
            for (const MonotoneMap& alpha : alphas) {
              for (const MonotoneMap& beta : betas) {
                for (const MonotoneMap& f : fs) {
                  for (const MonotoneMap& gamma : gammas) {
                    check(relation, relation_check(alpha, beta, gamma, f), [&] {
                      return Counterexample{"relation_check",
                                            "alpha=" + format_map(alpha) + " beta=" +
                                                format_map(beta) + " f=" + format_map(f) +
                                                " gamma=" + format_map(gamma),
                                            "equal canonical forms", "distinct canonical forms"};
                    });
                    KernelClass lhs(compose(alpha, f), compose(beta, f), gamma);
                    KernelClass rhs(alpha, beta, compose(f, gamma));
                    check(delta_wd, delta(lhs) == delta(rhs), [&] {
                      return Counterexample{"delta-relation",
                                            "alpha=" + format_map(alpha) + " beta=" +
                                                format_map(beta) + " f=" + format_map(f) +
                                                " gamma=" + format_map(gamma),
                                            format_map(delta(rhs)), format_map(delta(lhs))};
                    });
                    KernelClass once = normalize_kernel(lhs);
                    check(relation, normalize_kernel(once) == once, [&] {
                      return Counterexample{"normalize-idempotence", format_kernel(lhs),
                                            format_kernel(once),
                                            format_kernel(normalize_kernel(once))};
                    });
                  }
                }
              }
            }
          }
        }
      }
    }
  }
  detail::absorb(suite, relation);
  detail::absorb(suite, delta_wd);

  // delta is constant on classes: rep levels up to cap(3,d).
  CheckReport delta_inv = detail::fresh_check("delta-normalize-invariance", config);
  const Natural rep_bound = detail::cap(3, d);
  for (Natural pv = 0; pv <= s2; ++pv) {
    for (Natural qv = 0; qv <= s2; ++qv) {
      for (Natural rv = 0; rv <= s2; ++rv) {
        Ordinal p(pv), q(qv), r(rv);
        for (Natural mv = 0; mv <= rep_bound; ++mv) {
          Ordinal m(mv);
          for (const MonotoneMap& alpha : enumerate_maps(m, p)) {
            for (const MonotoneMap& beta : enumerate_maps(m, q)) {
              for (const MonotoneMap& gamma : enumerate_maps(r, m)) {
                KernelClass c(alpha, beta, gamma);
                check(delta_inv, delta(c) == delta(normalize_kernel(c)), [&] {
                  return Counterexample{"delta-normalize-invariance", format_kernel(c),
                                        format_map(delta(normalize_kernel(c))),
                                        format_map(delta(c))};
                });
              }
            }
          }
        }
      }
    }
  }
  detail::absorb(suite, delta_inv);

  CheckReport delta_nat = detail::fresh_check("delta-naturality", config);
  for (Natural pv = 0; pv <= s2; ++pv) {
    for (Natural qv = 0; qv <= s2; ++qv) {
      for (Natural rv = 0; rv <= s2; ++rv) {
        Ordinal p(pv), q(qv), r(rv);
        std::vector<DayClass> classes = day_level(p, q, r);
        for (Natural rsv = 0; rsv <= s2; ++rsv) {
          for (const MonotoneMap& h : enumerate_maps(Ordinal(rsv), r)) {
            for (const MonotoneMap& f : enumerate_maps(r, p)) {
              for (const MonotoneMap& g : enumerate_maps(r, q)) {
                KernelClass c = eta_inverse(f, g);
                check(delta_nat, delta_naturality_check(h, c), [&] {
                  return Counterexample{"delta-naturality",
                                        format_kernel(c) + " h=" + format_map(h),
                                        format_map(compose(delta(c), h)),
                                        format_map(delta(kernel_act(identity(p), identity(q), h, c)))};
                });
              }
            }
          }
        }
      }
    }
  }
  detail::absorb(suite, delta_nat);

  // Theta against the product identification, plus class counts.
  CheckReport theta_agree = detail::fresh_check("theta-agreement", config);
  CheckReport day_counts = detail::fresh_check("day-counts", config);
  for (Natural pv = 0; pv <= s2; ++pv) {
    for (Natural qv = 0; qv <= s2; ++qv) {
      for (Natural rv = 0; rv <= s2; ++rv) {
        Ordinal p(pv), q(qv), r(rv);
        std::vector<DayClass> classes = day_level(p, q, r);
        check(day_counts, Natural(classes.size()) == count_maps(r, p) * count_maps(r, q), [&] {
          return Counterexample{"day-counts", "p=" + pv.str() + " q=" + qv.str() + " r=" + rv.str(),
                                (count_maps(r, p) * count_maps(r, q)).str(),
                                std::to_string(classes.size())};
        });
        for (const DayClass& dc : classes) {
          auto [u, v] = day_identification(dc);
          check(theta_agree, theta(dc) == hadamard(u, v), [&] {
            return Counterexample{"theta-agreement", format_day(dc), format_map(hadamard(u, v)),
                                  format_map(theta(dc))};
          });
        }
      }
    }
  }
  detail::absorb(suite, theta_agree);
  detail::absorb(suite, day_counts);

  // Theta respects the Day coend relations (deterministically sampled).
  CheckReport theta_wd = detail::fresh_check("theta-well-definedness", config);
  {
    const std::uint64_t budget = 20000;
    Natural total_u = 0, total_p = 0;
    for (Natural pv = 0; pv <= s2; ++pv)
      for (Natural qv = 0; qv <= s2; ++qv)
        for (Natural rv = 0; rv <= s2; ++rv) {
          Ordinal p(pv), q(qv), r(rv);
          for (Natural xsv = 0; xsv <= s2; ++xsv)
            for (Natural xv = 0; xv <= s2; ++xv)
              for (Natural yv = 0; yv <= s2; ++yv) {
                Ordinal xs(xsv), x(xv), y(yv);
                total_u += count_maps(r, xs) * count_maps(r, y) * count_maps(xs, x) *
                           count_maps(x, p) * count_maps(y, q);
                for (Natural msv = 0; msv <= s2; ++msv)
                  total_p += count_maps(x, xs) * count_maps(y, xs) * count_maps(Ordinal(msv), xs) *
                             count_maps(r, Ordinal(msv)) * count_maps(x, p) * count_maps(y, q);
              }
        }

    detail::Sampler sample_u(total_u, budget, config.sample_seed);
    for (Natural pv = 0; pv <= s2; ++pv)
      for (Natural qv = 0; qv <= s2; ++qv)
        for (Natural rv = 0; rv <= s2; ++rv) {
          Ordinal p(pv), q(qv), r(rv);
          for (Natural xsv = 0; xsv <= s2; ++xsv)
            for (Natural xv = 0; xv <= s2; ++xv)
              for (Natural yv = 0; yv <= s2; ++yv) {
                Ordinal xs(xsv), x(xv), y(yv);
                MonotoneMap idy = identity(y), idr = identity(r);
                for (const MonotoneMap& f : enumerate_maps(r, xs))
                  for (const MonotoneMap& g : enumerate_maps(r, y))
                    for (const MonotoneMap& u : enumerate_maps(xs, x))
                      for (const MonotoneMap& alpha : enumerate_maps(x, p))
                        for (const MonotoneMap& beta : enumerate_maps(y, q)) {
                          if (!sample_u.take()) continue;
                          KernelClass pi = eta_inverse(f, g);
                          DayClass pushed(kernel_act(u, idy, idr, pi), alpha, beta);
                          DayClass pulled(pi, compose(alpha, u), beta);
                          check(theta_wd, theta(pushed) == theta(pulled), [&] {
                            return Counterexample{"theta-covariant-relation",
                                                  format_day(pulled) + " u=" + format_map(u),
                                                  format_map(theta(pulled)),
                                                  format_map(theta(pushed))};
                          });
                        }
              }
        }

    detail::Sampler sample_p(total_p, budget, config.sample_seed);
    for (Natural pv = 0; pv <= s2; ++pv)
      for (Natural qv = 0; qv <= s2; ++qv)
        for (Natural rv = 0; rv <= s2; ++rv) {
          Ordinal p(pv), q(qv), r(rv);
          for (Natural xsv = 0; xsv <= s2; ++xsv)
            for (Natural xv = 0; xv <= s2; ++xv)
              for (Natural yv = 0; yv <= s2; ++yv) {
                Ordinal xs(xsv), x(xv), y(yv);
                for (Natural msv = 0; msv <= s2; ++msv) {
                  Ordinal ms(msv);
                  for (const MonotoneMap& sx : enumerate_maps(xs, x))
                    for (const MonotoneMap& sy : enumerate_maps(xs, y))
                      for (const MonotoneMap& f : enumerate_maps(ms, xs))
                        for (const MonotoneMap& gamma : enumerate_maps(r, ms))
                          for (const MonotoneMap& alpha : enumerate_maps(x, p))
                            for (const MonotoneMap& beta : enumerate_maps(y, q)) {
                              if (!sample_p.take()) continue;
                              KernelClass low(compose(sx, f), compose(sy, f), gamma);
                              KernelClass high(sx, sy, compose(f, gamma));
                              DayClass da(low, alpha, beta);
                              DayClass db(high, alpha, beta);
                              check(theta_wd, theta(da) == theta(db), [&] {
                                return Counterexample{"theta-internal-relation",
                                                      format_day(db) + " f=" + format_map(f),
                                                      format_map(theta(db)),
                                                      format_map(theta(da))};
                              });
                            }
                }
              }
        }
  }
  detail::absorb(suite, theta_wd);

  // Action commutes with normalization (deterministically sampled).
  CheckReport act_norm = detail::fresh_check("act-normalize-commutation", config);
  {
    const std::uint64_t budget = 20000;
    Natural total = 0;
    for (Natural pv = 0; pv <= s2; ++pv)
      for (Natural qv = 0; qv <= s2; ++qv)
        for (Natural rv = 0; rv <= s2; ++rv)
          for (Natural mv = 0; mv <= s2; ++mv)
            for (Natural ppv = 0; ppv <= s2; ++ppv)
              for (Natural qqv = 0; qqv <= s2; ++qqv)
                for (Natural rrv = 0; rrv <= s2; ++rrv) {
                  Ordinal p(pv), q(qv), r(rv), m(mv);
                  total += count_maps(m, p) * count_maps(m, q) * count_maps(r, m) *
                           count_maps(p, Ordinal(ppv)) * count_maps(q, Ordinal(qqv)) *
                           count_maps(Ordinal(rrv), r);
                }
    detail::Sampler sampler(total, budget, config.sample_seed);
    for (Natural pv = 0; pv <= s2; ++pv)
      for (Natural qv = 0; qv <= s2; ++qv)
        for (Natural rv = 0; rv <= s2; ++rv)
          for (Natural mv = 0; mv <= s2; ++mv) {
            Ordinal p(pv), q(qv), r(rv), m(mv);
            for (const MonotoneMap& alpha : enumerate_maps(m, p))
              for (const MonotoneMap& beta : enumerate_maps(m, q))
                for (const MonotoneMap& gamma : enumerate_maps(r, m))
                  for (Natural ppv = 0; ppv <= s2; ++ppv)
                    for (Natural qqv = 0; qqv <= s2; ++qqv)
                      for (Natural rrv = 0; rrv <= s2; ++rrv) {
                        Ordinal pp(ppv), qq(qqv), rr(rrv);
                        for (const MonotoneMap& fp : enumerate_maps(p, pp))
                          for (const MonotoneMap& fq : enumerate_maps(q, qq))
                            for (const MonotoneMap& h : enumerate_maps(rr, r)) {
                              if (!sampler.take()) continue;
                              KernelClass c(alpha, beta, gamma);
                              KernelClass via_rep =
                                  normalize_kernel(kernel_act(fp, fq, h, c));
                              KernelClass via_canon = normalize_kernel(
                                  kernel_act(fp, fq, h, normalize_kernel(c)));
                              check(act_norm, via_rep == via_canon, [&] {
                                return Counterexample{"act-normalize-commutation",
                                                      format_kernel(c) + " fp=" + format_map(fp) +
                                                          " fq=" + format_map(fq) +
                                                          " h=" + format_map(h),
                                                      format_kernel(via_canon),
                                                      format_kernel(via_rep)};
                              });
                            }
                      }
          }
  }
  detail::absorb(suite, act_norm);

  // Symmetry: involution and compatibility with eta.
  CheckReport sym = detail::fresh_check("symmetry", config);
  for (Natural pv = 0; pv <= s2; ++pv)
    for (Natural qv = 0; qv <= s2; ++qv)
      for (Natural rv = 0; rv <= s2; ++rv) {
        Ordinal p(pv), q(qv), r(rv);
        for (const MonotoneMap& f : enumerate_maps(r, p))
          for (const MonotoneMap& g : enumerate_maps(r, q)) {
            KernelClass c = eta_inverse(f, g);
            KernelClass twice = normalize_kernel(symmetry_instance(symmetry_instance(c)));
            auto [sf, sg] = eta(symmetry_instance(c));
            check(sym, twice == normalize_kernel(c) && sf == g && sg == f, [&] {
              return Counterexample{"symmetry", format_kernel(c),
                                    "involution and swapped eta", format_kernel(twice)};
            });
          }
      }
  detail::absorb(suite, sym);

  // J stays a singleton under the contravariant action.
  CheckReport unit = detail::fresh_check("unit-singleton", config);
  for (Natural rv = 0; rv <= s2; ++rv)
    for (Natural rsv = 0; rsv <= s2; ++rsv) {
      Ordinal r(rv), rs(rsv);
      for (const MonotoneMap& h : enumerate_maps(rs, r)) {
        check(unit, unit_act(h, unit_element(r)) == unit_element(rs), [&] {
          return Counterexample{"unit-singleton", "h=" + format_map(h),
                                "the element at [" + rsv.str() + "]", "a different element"};
        });
      }
    }
  detail::absorb(suite, unit);

  // Bounded union-find quotient vs the eta count.
  CheckReport trunc = detail::fresh_check("truncation-stability", config);
  for (Natural pv = 0; pv <= s2; ++pv)
    for (Natural qv = 0; qv <= s2; ++qv)
      for (Natural rv = 0; rv <= s2; ++rv) {
        Ordinal p(pv), q(qv), r(rv);
        TruncationReport t = truncation_stability(p, q, r, rv + 2);
        check(trunc, t.stable(), [&] {
          return Counterexample{"truncation-stability",
                                "p=" + pv.str() + " q=" + qv.str() + " r=" + rv.str() +
                                    " B=" + t.bound.str(),
                                t.eta_count.str(),
                                t.classes_low.str() + " then " + t.classes_high.str()};
        });
      }
  detail::absorb(suite, trunc);
  return suite;
}

// --------------------------------------------------------------------------
// coherence: associator/unitor instances and the diagram composites.

[[nodiscard]] inline SuiteReport run_coherence(const SuiteConfig& config) {
  SuiteReport suite = detail::fresh_report("coherence", config);
  const Natural& d = config.max_dim;
  const Natural shallow = detail::cap(1, d);
  const Natural depth = config.deep ? detail::cap(2, d) : shallow;

  for (Natural pv = 0; pv <= shallow; ++pv)
    for (Natural qv = 0; qv <= shallow; ++qv)
      for (Natural rv = 0; rv <= shallow; ++rv)
        for (Natural wv = 0; wv <= shallow; ++wv)
          detail::absorb(suite, associator_instance(Ordinal(pv), Ordinal(qv), Ordinal(rv),
                                                    Ordinal(wv), wv + 1));

  const Natural unitor_bound = detail::cap(2, d);
  for (Natural qv = 0; qv <= unitor_bound; ++qv)
    for (Natural wv = 0; wv <= unitor_bound; ++wv)
      detail::absorb(suite, unitor_instance(Ordinal(qv), Ordinal(wv), wv + 1));

  detail::absorb(suite, pentagon_check(depth, config.counterexample_limit));
  detail::absorb(suite, triangle_check(detail::cap(2, d), config.counterexample_limit));
  detail::absorb(suite, hexagon_check(depth, config.counterexample_limit));

  // Braiding is an involution on elements.
  CheckReport invol = detail::fresh_check("braid-involution", config);
  for (Natural wv = 0; wv <= unitor_bound; ++wv) {
    Ordinal w(wv);
    for (Natural av = 0; av <= unitor_bound; ++av)
      for (Natural bv = 0; bv <= unitor_bound; ++bv) {
        TensorShape shape =
            TensorShape::node(TensorShape::leaf(Ordinal(av)), TensorShape::leaf(Ordinal(bv)));
        for (const TensorElem& e : enumerate_canonical(shape, w)) {
          check(invol, elem_equivalent(braid(braid(e)), e), [&] {
            return Counterexample{"braid-involution", format_elem(e),
                                  format_elem(normalize_elem(e)),
                                  format_elem(normalize_elem(braid(braid(e))))};
          });
        }
      }
  }
  detail::absorb(suite, invol);
  return suite;
}

// --------------------------------------------------------------------------
// hadamard: product laws, the simplicial-map property, factorization.

[[nodiscard]] inline SuiteReport run_hadamard(const SuiteConfig& config) {
  SuiteReport suite = detail::fresh_report("hadamard", config);
  const Natural& d = config.max_dim;
  const Natural s3 = detail::cap(3, d);
  const Natural s2 = detail::cap(2, d);

  CheckReport closure = detail::fresh_check("monotone-closure", config);
  CheckReport comm = detail::fresh_check("commutativity", config);
  CheckReport unit = detail::fresh_check("unit-law", config);
  for (Natural mv = 0; mv <= s3; ++mv) {
    Ordinal m(mv);
    MonotoneMap ones = constant_map(m, 1, 1);
    for (Natural pv = 0; pv <= s3; ++pv) {
      Ordinal p(pv);
      std::vector<MonotoneMap> alphas = enumerate_maps(m, p);
      for (const MonotoneMap& alpha : alphas) {
        check(unit, hadamard(alpha, ones) == alpha, [&] {
          return Counterexample{"unit-law", "alpha=" + format_map(alpha), format_map(alpha),
                                format_map(hadamard(alpha, ones))};
        });
      }
      for (Natural qv = 0; qv <= s3; ++qv) {
        Ordinal q(qv);
        std::vector<MonotoneMap> betas = enumerate_maps(m, q);
        for (const MonotoneMap& alpha : alphas) {
          for (const MonotoneMap& beta : betas) {
            MonotoneMap ab = hadamard(alpha, beta);
            bool valid = ab.source() == m &&
                         ab.target().value() == pv * qv;  // construction re-validated the table
            check(closure, valid, [&] {
              return Counterexample{"monotone-closure",
                                    "alpha=" + format_map(alpha) + " beta=" + format_map(beta),
                                    "map into [" + Natural(pv * qv).str() + "]", format_map(ab)};
            });
            check(comm, ab.values() == hadamard(beta, alpha).values(), [&] {
              return Counterexample{"commutativity",
                                    "alpha=" + format_map(alpha) + " beta=" + format_map(beta),
                                    format_map(ab), format_map(hadamard(beta, alpha))};
            });
          }
        }
      }
    }
  }
  detail::absorb(suite, closure);
  detail::absorb(suite, comm);
  detail::absorb(suite, unit);

  CheckReport assoc = detail::fresh_check("hadamard-associativity", config);
  for (Natural mv = 0; mv <= s2; ++mv) {
    Ordinal m(mv);
    for (Natural pv = 0; pv <= s2; ++pv)
      for (Natural qv = 0; qv <= s2; ++qv)
        for (Natural rv = 0; rv <= s2; ++rv) {
          for (const MonotoneMap& alpha : enumerate_maps(m, Ordinal(pv)))
            for (const MonotoneMap& beta : enumerate_maps(m, Ordinal(qv)))
              for (const MonotoneMap& gamma : enumerate_maps(m, Ordinal(rv))) {
                MonotoneMap lhs = hadamard(hadamard(alpha, beta), gamma);
                MonotoneMap rhs = hadamard(alpha, hadamard(beta, gamma));
                check(assoc, lhs.values() == rhs.values() && lhs.target() == rhs.target(), [&] {
                  return Counterexample{"hadamard-associativity",
                                        "alpha=" + format_map(alpha) + " beta=" +
                                            format_map(beta) + " gamma=" + format_map(gamma),
                                        format_map(rhs), format_map(lhs)};
                });
              }
        }
  }
  detail::absorb(suite, assoc);

  for (Natural pv = 0; pv <= s2; ++pv)
    for (Natural qv = 0; qv <= s2; ++qv) {
      CheckReport part =
          simplicial_map_check(Ordinal(pv), Ordinal(qv), s3, config.counterexample_limit);
      detail::absorb(suite, part);
    }

  // Factorization: the unit factor is always recovered; the witness map
  // [3,3] into [4] admits no factorization over p = q = 2.
  CheckReport factor = detail::fresh_check("factorization", config);
  for (Natural mv = 0; mv <= s2; ++mv) {
    Ordinal m(mv);
    for (Natural pv = 0; pv <= s2; ++pv) {
      for (const MonotoneMap& h : enumerate_maps(m, Ordinal(pv))) {
        auto factors = factor_hadamard(h, Ordinal(pv), 1);
        bool has_unit = false;
        for (const auto& [a, b] : factors)
          if (a == h && b == constant_map(m, 1, 1)) has_unit = true;
        check(factor, has_unit, [&] {
          return Counterexample{"factorization", "h=" + format_map(h),
                                "(h, constant 1) among factors",
                                std::to_string(factors.size()) + " factor pairs"};
        });
      }
    }
  }
  {
    MonotoneMap witness(1, 4, {3, 3});
    auto factors = factor_hadamard(witness, 2, 2);
    check(factor, factors.empty(), [&] {
      return Counterexample{"non-factorization-witness", "h=3,3 p=2 q=2", "no factor pairs",
                            std::to_string(factors.size()) + " factor pairs"};
    });
    MonotoneMap diagonal(1, 4, {0, 4});
    auto diag_factors = factor_hadamard(diagonal, 2, 2);
    bool found = false;
    for (const auto& [a, b] : diag_factors)
      if (a == MonotoneMap(1, 2, {0, 2}) && b == MonotoneMap(1, 2, {1, 2})) found = true;
    check(factor, !diag_factors.empty() && found, [&] {
      return Counterexample{"factorization", "h=0,4 p=2 q=2", "contains (0,2 ; 1,2)",
                            std::to_string(diag_factors.size()) + " factor pairs"};
    });
  }
  detail::absorb(suite, factor);
  return suite;
}

// --------------------------------------------------------------------------
// homotopy: endpoint laws and level tables.

[[nodiscard]] inline SuiteReport run_homotopy(const SuiteConfig& config) {
  SuiteReport suite = detail::fresh_report("homotopy", config);
  const Natural& d = config.max_dim;

  for (Natural nv = 0; nv <= d; ++nv) {
    CheckReport part = homotopy_endpoints(Ordinal(nv), d, config.counterexample_limit);
    detail::absorb(suite, part);
  }

  const Natural s2 = detail::cap(2, d);
  CheckReport table = detail::fresh_check("level-table", config);
  for (Natural nv = 0; nv <= s2; ++nv)
    for (Natural mv = 0; mv <= s2; ++mv) {
      Ordinal n(nv), m(mv);
      HomotopyLevel level(n, m);
      Natural expected = count_maps(m, n) * count_maps(m, 1);
      check(table, Natural(level.table().size()) == expected, [&] {
        return Counterexample{"level-table", "n=" + nv.str() + " m=" + mv.str(), expected.str(),
                              std::to_string(level.table().size())};
      });
      for (const auto& [key, value] : level.table()) {
        check(table, value == hadamard(key.first, key.second) &&
                         level.at(key.first, key.second) == value,
              [&] {
                return Counterexample{"level-table",
                                      "alpha=" + format_map(key.first) +
                                          " beta=" + format_map(key.second),
                                      format_map(hadamard(key.first, key.second)),
                                      format_map(value)};
              });
      }
    }
  detail::absorb(suite, table);

  CheckReport constants = detail::fresh_check("vertex-composites", config);
  for (Natural mv = 0; mv <= d; ++mv) {
    Ordinal m(mv);
    for (Natural eps = 0; eps <= 1; ++eps) {
      check(constants,
            compose(vertex_map(eps), terminal_map(m)) == constant_map(m, 1, eps), [&] {
              return Counterexample{"vertex-composites", "m=" + mv.str() + " eps=" + eps.str(),
                                    format_map(constant_map(m, 1, eps)), "composite differs"};
            });
    }
  }
  detail::absorb(suite, constants);
  return suite;
}

// --------------------------------------------------------------------------
// realization: exact geometry of the prism and both homotopies.

[[nodiscard]] inline SuiteReport run_realization(const SuiteConfig& config) {
  SuiteReport suite = detail::fresh_report("realization", config);
  const Natural& d = config.max_dim;
  const Natural s3 = detail::cap(3, d);
  const Natural& D = config.grid_denominator;

  CheckReport two_path = detail::fresh_check("two-path-identity", config);
  CheckReport s_cons = detail::fresh_check("s-consistency", config);
  CheckReport lower_face = detail::fresh_check("lower-face-identity", config);
  for (Natural mv = 0; mv <= s3; ++mv) {
    Ordinal m(mv);
    std::vector<BaryPoint> grid = grid_points(m, D);
    std::vector<MonotoneMap> betas = enumerate_maps(m, 1);
    for (Natural nv = 0; nv <= s3; ++nv) {
      Ordinal n(nv);
      for (const MonotoneMap& alpha : enumerate_maps(m, n)) {
        for (const MonotoneMap& beta : betas) {
          MonotoneMap product = hadamard(alpha, beta);
          StepIndex k = step_index(beta);
          for (const BaryPoint& u : grid) {
            BaryPoint via_formula = homotopy_point(alpha, beta, u);
            BaryPoint via_pushforward = realize_map(product, u);
            check(two_path, via_formula == via_pushforward, [&] {
              return Counterexample{"two-path-identity",
                                    "alpha=" + format_map(alpha) + " beta=" + format_map(beta) +
                                        " u=" + format_bary(u),
                                    format_bary(via_pushforward), format_bary(via_formula)};
            });
            ExactRational s = s_coord(beta, u);
            check(s_cons, s == realize_map(beta, u)[1], [&] {
              return Counterexample{"s-consistency",
                                    "beta=" + format_map(beta) + " u=" + format_bary(u),
                                    format_rational(realize_map(beta, u)[1]),
                                    format_rational(s)};
            });
            if (k.k >= 0) {
              Natural kk(k.k);
              PrismPoint p(u, s);
              bool inside = cell_membership(m, kk, p);
              bool same = false;
              if (inside) {
                BaryPoint affine = affine_image(alpha, cell_decompose(m, kk, p));
                same = affine == via_formula;
              }
              check(lower_face, inside && same, [&] {
                return Counterexample{"lower-face-identity",
                                      "alpha=" + format_map(alpha) + " beta=" +
                                          format_map(beta) + " " + format_prism_point(p),
                                      format_bary(via_formula),
                                      inside ? "affine image differs" : "point not in cell"};
              });
            }
          }
        }
      }
    }
  }
  detail::absorb(suite, two_path);
  detail::absorb(suite, s_cons);
  detail::absorb(suite, lower_face);

  // Cover, decomposition round-trip, and overlap gluing.
  CheckReport cover = detail::fresh_check("cover-and-roundtrip", config);
  for (Natural mv = 0; mv <= s3; ++mv) {
    Ordinal m(mv);
    for (const BaryPoint& u : grid_points(m, D)) {
      for (const ExactRational& t : grid_rationals(D)) {
        PrismPoint p(u, t);
        std::vector<Natural> ks = cover_index(p);
        check(cover, !ks.empty(), [&] {
          return Counterexample{"cover-nonempty", format_prism_point(p), "some cell contains it",
                                "cover is empty"};
        });
        for (const Natural& k : ks) {
          AffineDecomposition dec = cell_decompose(m, k, p);
          bool roundtrip = dec.reconstruct() == p && dec.t() == p.t();
          check(cover, roundtrip, [&] {
            return Counterexample{"decomposition-roundtrip",
                                  format_prism_point(p) + " k=" + k.str(),
                                  format_prism_point(p), format_decomposition(dec)};
          });
        }
      }
    }
  }
  detail::absorb(suite, cover);

  CheckReport overlap = detail::fresh_check("overlap-consistency", config);
  for (Natural mv = 0; mv <= s3; ++mv) {
    Ordinal m(mv);
    for (Natural nv = 0; nv <= s3; ++nv)
      for (const MonotoneMap& alpha : enumerate_maps(m, Ordinal(nv))) {
        CheckReport part = overlap_consistency(m, alpha, D, config.counterexample_limit);
        overlap.merge(part);
      }
  }
  detail::absorb(suite, overlap);

  // Triangulation: vertex lists and gluing against the realized homotopy.
  CheckReport tri = detail::fresh_check("prism-triangulation", config);
  for (Natural mv = 0; mv <= s3; ++mv) {
    Ordinal m(mv);
    auto cells = prism_triangulation(m);
    check(tri, Natural(cells.size()) == mv + 1, [&] {
      return Counterexample{"prism-triangulation", "m=" + mv.str(), Natural(mv + 1).str() + " cells",
                            std::to_string(cells.size())};
    });
    Ordinal top(mv + 1);
    std::vector<BaryPoint> top_grid = grid_points(top, D);
    for (std::size_t k = 0; k < cells.size(); ++k) {
      const auto& [alpha_k, beta_k] = cells[k];
      check(tri, step_index(beta_k).k == Integer(k), [&] {
        return Counterexample{"prism-triangulation", "m=" + mv.str() + " k=" + std::to_string(k),
                              "step index " + std::to_string(k), format_map(beta_k)};
      });
      std::vector<PrismPoint> expected = PrismCell(m, Natural(k)).vertices();
      bool vertices_match = true;
      for (std::size_t i = 0; i < top.table_size(); ++i) {
        BaryPoint e_i = BaryPoint::vertex(top, i);
        PrismPoint image(realize_map(alpha_k, e_i), s_coord(beta_k, e_i));
        if (!(image == expected.at(i))) vertices_match = false;
      }
      check(tri, vertices_match, [&] {
        return Counterexample{"prism-triangulation", "m=" + mv.str() + " k=" + std::to_string(k),
                              "vertex list of S_" + std::to_string(k), "realized images differ"};
      });
      for (Natural nv = 0; nv <= s3; ++nv) {
        for (const MonotoneMap& alpha : enumerate_maps(m, Ordinal(nv))) {
          MonotoneMap glued = compose(alpha, alpha_k);
          for (const BaryPoint& w : top_grid) {
            BaryPoint via_homotopy = homotopy_point(glued, beta_k, w);
            PrismPoint projected(realize_map(alpha_k, w), s_coord(beta_k, w));
            bool inside = cell_membership(m, Natural(k), projected);
            bool same = false;
            if (inside) {
              BaryPoint via_cell =
                  affine_image(alpha, cell_decompose(m, Natural(k), projected));
              same = via_cell == via_homotopy;
            }
            check(tri, inside && same, [&] {
              return Counterexample{"triangulation-gluing",
                                    "alpha=" + format_map(alpha) + " k=" + std::to_string(k) +
                                        " w=" + format_bary(w),
                                    format_bary(via_homotopy),
                                    inside ? "cell image differs" : "projected point not in cell"};
            });
          }
        }
      }
    }
  }
  detail::absorb(suite, tri);

  // Vertex and end-slice agreement with the straight-line contraction;
  // interior deviation is measured, never asserted.
  CheckReport agree = detail::fresh_check("contraction-agreement", config);
  ExactRational worst = 0;
  std::string worst_witness;
  for (Natural mv = 0; mv <= s3; ++mv) {
    Ordinal m(mv);
    for (Natural nv = 0; nv <= s3; ++nv) {
      Ordinal n(nv);
      for (const MonotoneMap& alpha : enumerate_maps(m, n)) {
        DeviationReport dev = compare_on_grid(n, m, alpha, D);
        check(agree, dev.vertex_agreement && dev.slice_agreement, [&] {
          return Counterexample{"contraction-agreement", "alpha=" + format_map(alpha),
                                "exact vertex and end-slice agreement",
                                std::string(dev.vertex_agreement ? "" : "vertex mismatch ") +
                                    (dev.slice_agreement ? "" : "slice mismatch")};
        });
        if (dev.max_deviation > worst) {
          worst = dev.max_deviation;
          worst_witness = "alpha=" + format_map(alpha) +
                          (dev.witness ? " at " + format_prism_point(*dev.witness) : "");
        }
      }
    }
  }
  if (worst != 0)
    agree.notes.push_back("max interior deviation from the straight-line contraction on this "
                          "grid: " +
                          format_rational(worst) + " (" + worst_witness +
                          "); interior coincidence is measured, not asserted");
  detail::absorb(suite, agree);
  return suite;
}

// --------------------------------------------------------------------------

[[nodiscard]] inline SuiteReport run_suite(const SuiteConfig& config) {
  if (config.suite == "core") return run_core(config);
  if (config.suite == "kernel") return run_kernel(config);
  if (config.suite == "coherence") return run_coherence(config);
  if (config.suite == "hadamard") return run_hadamard(config);
  if (config.suite == "homotopy") return run_homotopy(config);
  if (config.suite == "realization") return run_realization(config);
  if (config.suite != "all")
    raise(Errc::bad_literal, "unknown suite '" + config.suite + "'");
  SuiteReport all = detail::fresh_report("all", config);
  for (const std::string& name : suite_names()) {
    SuiteConfig sub = config;
    sub.suite = name;
    SuiteReport part = run_suite(sub);
    all.instances += part.instances;
    all.passed += part.passed;
    all.failed += part.failed;
    for (const Counterexample& cx : part.counterexamples) {
      if (all.counterexamples.size() >= all.config.counterexample_limit) break;
      all.counterexamples.push_back(cx);
    }
    for (const std::string& note : part.notes) all.notes.push_back(name + ": " + note);
  }
  return all;
}

[[nodiscard]] inline std::string format_text(const SuiteReport& report) {
  std::string out;
  out += "suite: " + report.suite + "\n";
  out += "max-dim: " + report.config.max_dim.str() +
         "  grid-denominator: " + report.config.grid_denominator.str() +
         "  seed: " + report.config.sample_seed.str() +
         (report.config.deep ? "  deep: on" : "  deep: off") + "\n";
  out += "instances: " + std::to_string(report.instances) +
         "  passed: " + std::to_string(report.passed) +
         "  failed: " + std::to_string(report.failed) + "\n";
  for (const std::string& note : report.notes) out += "note: " + note + "\n";
  for (const Counterexample& cx : report.counterexamples) {
    out += "counterexample: " + cx.operation + " | inputs: " + cx.inputs +
           " | expected: " + cx.expected + " | actual: " + cx.actual + "\n";
  }
  out += std::string("result: ") + (report.ok() ? "PASS" : "FAIL") + "\n";
  return out;
}

}  // namespace deltacat
