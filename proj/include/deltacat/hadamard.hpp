#pragma once

// The Hadamard product of monotone maps, the levelwise transformation H,
// its endpoint laws, and exhaustive factorization search.

#include <map>
#include <utility>
#include <vector>

#include "deltacat/report.hpp"
#include "deltacat/simplex.hpp"

namespace deltacat {

// alpha (x) beta : [m] -> [p*q], (alpha (x) beta)(t) = alpha(t)*beta(t).
[[nodiscard]] inline MonotoneMap hadamard(const MonotoneMap& alpha, const MonotoneMap& beta) {
  if (alpha.source() != beta.source())
    raise(Errc::source_mismatch, "hadamard: sources [" + format_ordinal(alpha.source()) +
                                     "] and [" + format_ordinal(beta.source()) + "] differ");
  Ordinal target(alpha.target().value() * beta.target().value());
  std::vector<Natural> values;
  values.reserve(alpha.arity());
  for (std::size_t i = 0; i < alpha.arity(); ++i) values.push_back(alpha(i) * beta(i));
  return MonotoneMap(alpha.source(), target, std::move(values));
}

// (alpha (x) beta) . theta = (alpha . theta) (x) (beta . theta).
[[nodiscard]] inline bool hadamard_source_naturality(const MonotoneMap& alpha,
                                                     const MonotoneMap& beta,
                                                     const MonotoneMap& theta) {
  return compose(hadamard(alpha, beta), theta) ==
         hadamard(compose(alpha, theta), compose(beta, theta));
}

// One level of H^n: the total table (alpha, beta) -> alpha (x) beta over
// enumerate_maps(m,n) x enumerate_maps(m,1).
class HomotopyLevel {
 public:
  using Table = std::map<std::pair<MonotoneMap, MonotoneMap>, MonotoneMap>;

  HomotopyLevel(Ordinal n, Ordinal m) : n_(std::move(n)), m_(std::move(m)) {
    for (const MonotoneMap& alpha : enumerate_maps(m_, n_))
      for (const MonotoneMap& beta : enumerate_maps(m_, 1))
        table_.emplace(std::make_pair(alpha, beta), hadamard(alpha, beta));
  }

  [[nodiscard]] const Ordinal& level_n() const noexcept { return n_; }
  [[nodiscard]] const Ordinal& level_m() const noexcept { return m_; }
  [[nodiscard]] const Table& table() const noexcept { return table_; }

  [[nodiscard]] const MonotoneMap& at(const MonotoneMap& alpha, const MonotoneMap& beta) const {
    auto it = table_.find(std::make_pair(alpha, beta));
    if (it == table_.end())
      raise(Errc::source_target_mismatch,
            "HomotopyLevel(" + format_ordinal(n_) + "," + format_ordinal(m_) +
                "): no entry for (" + format_map(alpha) + "; " + format_map(beta) + ")");
    return it->second;
  }

 private:
  Ordinal n_;
  Ordinal m_;
  Table table_;
};

// H commutes with the simplicial action: H(alpha.theta, beta.theta) = H(alpha,beta).theta
// for all theta:[k]->[m] with k,m <= bound.
[[nodiscard]] inline CheckReport simplicial_map_check(const Ordinal& p, const Ordinal& q,
                                                      const Natural& bound,
                                                      std::size_t counterexample_limit = 10) {
  CheckReport report;
  report.name = "simplicial-map";
  report.counterexample_limit = counterexample_limit;
  for (Natural mv = 0; mv <= bound; ++mv) {
    Ordinal m(mv);
    std::vector<MonotoneMap> alphas = enumerate_maps(m, p);
    std::vector<MonotoneMap> betas = enumerate_maps(m, q);
    for (Natural kv = 0; kv <= bound; ++kv) {
      for (const MonotoneMap& theta : enumerate_maps(Ordinal(kv), m)) {
        for (const MonotoneMap& alpha : alphas) {
          for (const MonotoneMap& beta : betas) {
            MonotoneMap lhs = hadamard(compose(alpha, theta), compose(beta, theta));
            MonotoneMap rhs = compose(hadamard(alpha, beta), theta);
            check(report, lhs == rhs, [&] {
              return Counterexample{
                  "simplicial_map_check",
                  "alpha=" + format_map(alpha) + " beta=" + format_map(beta) +
                      " theta=" + format_map(theta) + " p=" + format_ordinal(p) +
                      " q=" + format_ordinal(q),
                  format_map(rhs), format_map(lhs)};
            });
          }
        }
      }
    }
  }
  return report;
}

// Endpoint laws: alpha (x) 1 = alpha and alpha (x) 0 = constant 0-vertex map.
[[nodiscard]] inline CheckReport homotopy_endpoints(const Ordinal& n, const Natural& bound,
                                                    std::size_t counterexample_limit = 10) {
  CheckReport report;
  report.name = "homotopy-endpoints";
  report.counterexample_limit = counterexample_limit;
  for (Natural mv = 0; mv <= bound; ++mv) {
    Ordinal m(mv);
    MonotoneMap ones = constant_map(m, 1, 1);
    MonotoneMap zeros = constant_map(m, 1, 0);
    MonotoneMap zero_vertex = constant_map(m, n, 0);
    for (const MonotoneMap& alpha : enumerate_maps(m, n)) {
      MonotoneMap at_one = hadamard(alpha, ones);
      check(report, at_one == alpha, [&] {
        return Counterexample{"homotopy_endpoints",
                              "alpha=" + format_map(alpha) + " eps=1 n=" + format_ordinal(n),
                              format_map(alpha), format_map(at_one)};
      });
      MonotoneMap at_zero = hadamard(alpha, zeros);
      check(report, at_zero == zero_vertex, [&] {
        return Counterexample{"homotopy_endpoints",
                              "alpha=" + format_map(alpha) + " eps=0 n=" + format_ordinal(n),
                              format_map(zero_vertex), format_map(at_zero)};
      });
    }
  }
  return report;
}

// All pairs (alpha:[m]->[p], beta:[m]->[q]) with alpha (x) beta = h, by
// exhaustive search over count_maps(m,p)*count_maps(m,q) candidates.
[[nodiscard]] inline std::vector<std::pair<MonotoneMap, MonotoneMap>> factor_hadamard(
    const MonotoneMap& h, const Ordinal& p, const Ordinal& q) {
  if (h.target().value() != p.value() * q.value())
    raise(Errc::target_mismatch, "factor_hadamard: target [" + format_ordinal(h.target()) +
                                     "] is not [" + Natural(p.value() * q.value()).str() + "]");
  std::vector<std::pair<MonotoneMap, MonotoneMap>> factors;
  for (const MonotoneMap& alpha : enumerate_maps(h.source(), p))
    for (const MonotoneMap& beta : enumerate_maps(h.source(), q))
      if (hadamard(alpha, beta) == h) factors.emplace_back(alpha, beta);
  return factors;
}

}  // namespace deltacat
