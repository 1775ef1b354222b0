// Acceptance gate: one line per criterion, nonzero exit on any failure.
// Bounds are pinned here on purpose; do not lower them to make a run fast.

#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "deltacat/coherence.hpp"
#include "deltacat/hadamard.hpp"
#include "deltacat/promonoidal.hpp"
#include "deltacat/realization.hpp"
#include "deltacat/simplex.hpp"

using namespace deltacat;

namespace {

struct Criterion {
  std::string name;
  std::function<bool(std::string&)> run;
};

bool check_hom_set_counts(std::string& detail) {
  std::uint64_t instances = 0;
  for (unsigned long long m = 0; m <= 5; ++m)
    for (unsigned long long n = 0; n <= 5; ++n) {
      std::vector<MonotoneMap> maps = enumerate_maps(m, n);
      ++instances;
      if (Natural(maps.size()) != count_maps(m, n)) {
        detail = "m=" + std::to_string(m) + " n=" + std::to_string(n) + ": enumerated " +
                 std::to_string(maps.size()) + ", counted " + count_maps(m, n).str();
        return false;
      }
      for (std::size_t i = 1; i < maps.size(); ++i)
        if (!(maps[i - 1] < maps[i])) {
          detail = "enumeration not strictly increasing at m=" + std::to_string(m) +
                   " n=" + std::to_string(n);
          return false;
        }
    }
  detail = std::to_string(instances) + " instances";
  return true;
}

bool check_eta_bijection(std::string& detail) {
  std::uint64_t classes_total = 0;
  for (unsigned long long p = 0; p <= 3; ++p)
    for (unsigned long long q = 0; q <= 3; ++q)
      for (unsigned long long r = 0; r <= 3; ++r) {
        std::set<KernelClass> classes;
        for (const MonotoneMap& f : enumerate_maps(r, p))
          for (const MonotoneMap& g : enumerate_maps(r, q)) {
            KernelClass c = eta_inverse(f, g);
            auto [ef, eg] = eta(c);
            if (ef != f || eg != g || !c.is_canonical()) {
              detail = "eta round-trip failed at f=" + format_map(f) + " g=" + format_map(g);
              return false;
            }
            classes.insert(normalize_kernel(c));
          }
        if (Natural(classes.size()) != count_maps(r, p) * count_maps(r, q)) {
          detail = "class count off at p=" + std::to_string(p) + " q=" + std::to_string(q) +
                   " r=" + std::to_string(r);
          return false;
        }
        classes_total += classes.size();
      }
  std::set<KernelClass> frozen;
  for (const MonotoneMap& f : enumerate_maps(1, 1))
    for (const MonotoneMap& g : enumerate_maps(1, 1)) frozen.insert(eta_inverse(f, g));
  if (frozen.size() != 9) {
    detail = "|P(1,1;1)| = " + std::to_string(frozen.size()) + ", expected 9";
    return false;
  }
  detail = std::to_string(classes_total) + " canonical classes";
  return true;
}

bool check_truncation(std::string& detail) {
  for (unsigned long long p = 0; p <= 2; ++p)
    for (unsigned long long q = 0; q <= 2; ++q)
      for (unsigned long long r = 0; r <= 2; ++r) {
        TruncationReport report = truncation_stability(p, q, r, Natural(r) + 2);
        if (!report.stable()) {
          detail = "p=" + std::to_string(p) + " q=" + std::to_string(q) +
                   " r=" + std::to_string(r) + ": " + report.classes_low.str() + " then " +
                   report.classes_high.str() + " vs eta " + report.eta_count.str();
          return false;
        }
      }
  detail = "27 configurations, B = r+2";
  return true;
}

bool check_delta(std::string& detail) {
  std::uint64_t instances = 0;
  for (unsigned long long p = 0; p <= 2; ++p)
    for (unsigned long long q = 0; q <= 2; ++q) {
      for (unsigned long long m = 0; m <= 2; ++m) {
        std::vector<MonotoneMap> alphas = enumerate_maps(m, p);
        std::vector<MonotoneMap> betas = enumerate_maps(m, q);
        for (unsigned long long ms = 0; ms <= 2; ++ms) {
          std::vector<MonotoneMap> fs = enumerate_maps(ms, m);
          for (unsigned long long r = 0; r <= 2; ++r) {
            std::vector<MonotoneMap> gammas = enumerate_maps(r, ms);
            for (const MonotoneMap& alpha : alphas)
              for (const MonotoneMap& beta : betas)
                for (const MonotoneMap& f : fs)
                  for (const MonotoneMap& gamma : gammas) {
                    ++instances;
                    KernelClass lhs(compose(alpha, f), compose(beta, f), gamma);
                    KernelClass rhs(alpha, beta, compose(f, gamma));
                    if (delta(lhs) != delta(rhs)) {
                      detail = "relation instance alpha=" + format_map(alpha) +
                               " beta=" + format_map(beta) + " f=" + format_map(f) +
                               " gamma=" + format_map(gamma);
                      return false;
                    }
                    if (!relation_check(alpha, beta, gamma, f)) {
                      detail = "classes split at alpha=" + format_map(alpha) +
                               " beta=" + format_map(beta) + " f=" + format_map(f);
                      return false;
                    }
                  }
          }
        }
      }
      for (unsigned long long r = 0; r <= 2; ++r)
        for (unsigned long long rs = 0; rs <= 2; ++rs)
          for (const MonotoneMap& h : enumerate_maps(rs, r))
            for (const MonotoneMap& f : enumerate_maps(r, p))
              for (const MonotoneMap& g : enumerate_maps(r, q)) {
                ++instances;
                if (!delta_naturality_check(h, eta_inverse(f, g))) {
                  detail = "naturality failed at f=" + format_map(f) + " g=" + format_map(g) +
                           " h=" + format_map(h);
                  return false;
                }
              }
    }
  detail = std::to_string(instances) + " instances";
  return true;
}

bool check_theta(std::string& detail) {
  std::uint64_t instances = 0;
  for (unsigned long long p = 0; p <= 2; ++p)
    for (unsigned long long q = 0; q <= 2; ++q)
      for (unsigned long long r = 0; r <= 2; ++r)
        for (const DayClass& d : day_level(p, q, r)) {
          ++instances;
          auto [u, v] = day_identification(d);
          if (theta(d) != hadamard(u, v)) {
            detail = "theta disagrees at " + format_day(d);
            return false;
          }
        }
  detail = std::to_string(instances) + " Day classes";
  return true;
}

bool check_coherence(std::string& detail) {
  for (Natural bound = 1; bound <= 2; ++bound) {
    CheckReport pentagon = pentagon_check(bound);
    CheckReport triangle = triangle_check(bound);
    CheckReport hexagon = hexagon_check(bound);
    for (const CheckReport* report : {&pentagon, &triangle, &hexagon}) {
      if (!report->passed()) {
        detail = report->name + " failed at bound " + bound.str() + ": " +
                 (report->counterexamples.empty() ? "no witness"
                                                  : report->counterexamples.front().inputs);
        return false;
      }
    }
    if (bound == 2)
      detail = "pentagon " + std::to_string(pentagon.instances) + ", triangle " +
               std::to_string(triangle.instances) + ", hexagon " +
               std::to_string(hexagon.instances) + " elements at depth 2";
  }
  return true;
}

bool check_hadamard_laws(std::string& detail) {
  std::uint64_t instances = 0;
  for (unsigned long long m = 0; m <= 3; ++m) {
    Ordinal mo(m);
    MonotoneMap ones = constant_map(mo, 1, 1);
    for (unsigned long long p = 0; p <= 3; ++p) {
      std::vector<MonotoneMap> alphas = enumerate_maps(mo, p);
      for (const MonotoneMap& alpha : alphas) {
        ++instances;
        if (hadamard(alpha, ones) != alpha) {
          detail = "unit law failed at alpha=" + format_map(alpha);
          return false;
        }
      }
      for (unsigned long long q = 0; q <= 3; ++q)
        for (const MonotoneMap& alpha : alphas)
          for (const MonotoneMap& beta : enumerate_maps(mo, q)) {
            ++instances;
            MonotoneMap ab = hadamard(alpha, beta);
            if (ab.target().value() != Natural(p) * q ||
                ab.values() != hadamard(beta, alpha).values()) {
              detail = "closure or commutativity failed at alpha=" + format_map(alpha) +
                       " beta=" + format_map(beta);
              return false;
            }
          }
    }
  }
  for (unsigned long long m = 0; m <= 2; ++m)
    for (unsigned long long p = 0; p <= 2; ++p)
      for (unsigned long long q = 0; q <= 2; ++q)
        for (unsigned long long r = 0; r <= 2; ++r)
          for (const MonotoneMap& alpha : enumerate_maps(m, p))
            for (const MonotoneMap& beta : enumerate_maps(m, q))
              for (const MonotoneMap& gamma : enumerate_maps(m, r)) {
                ++instances;
                if (hadamard(hadamard(alpha, beta), gamma).values() !=
                    hadamard(alpha, hadamard(beta, gamma)).values()) {
                  detail = "associativity failed at alpha=" + format_map(alpha) +
                           " beta=" + format_map(beta) + " gamma=" + format_map(gamma);
                  return false;
                }
              }
  detail = std::to_string(instances) + " instances";
  return true;
}

bool check_simplicial_map(std::string& detail) {
  std::uint64_t instances = 0;
  for (unsigned long long p = 0; p <= 2; ++p)
    for (unsigned long long q = 0; q <= 2; ++q) {
      CheckReport report = simplicial_map_check(p, q, 3);
      instances += report.instances;
      if (!report.passed()) {
        detail = "failed at p=" + std::to_string(p) + " q=" + std::to_string(q);
        return false;
      }
    }
  detail = std::to_string(instances) + " instances, theta with k,m <= 3";
  return true;
}

bool check_endpoints(std::string& detail) {
  std::uint64_t instances = 0;
  for (unsigned long long n = 0; n <= 4; ++n) {
    CheckReport report = homotopy_endpoints(n, 4);
    instances += report.instances;
    if (!report.passed()) {
      detail = "failed at n=" + std::to_string(n) + ": " +
               (report.counterexamples.empty() ? "no witness"
                                               : report.counterexamples.front().inputs);
      return false;
    }
  }
  detail = std::to_string(instances) + " instances, n,m <= 4";
  return true;
}

bool check_non_factorization(std::string& detail) {
  MonotoneMap witness = make_map(1, 4, {3, 3});
  auto factors = factor_hadamard(witness, 2, 2);
  Natural candidates = count_maps(1, 2) * count_maps(1, 2);
  if (candidates != 36) {
    detail = "candidate count " + candidates.str() + ", expected 36";
    return false;
  }
  if (!factors.empty()) {
    detail = "found " + std::to_string(factors.size()) + " factorizations of 3,3";
    return false;
  }
  detail = "36 candidate pairs exhausted, none factor 3,3";
  return true;
}

bool check_two_path(std::string& detail) {
  std::uint64_t instances = 0;
  for (unsigned long long m = 0; m <= 3; ++m) {
    Ordinal mo(m);
    std::vector<BaryPoint> grid = grid_points(mo, 4);
    std::vector<MonotoneMap> betas = enumerate_maps(mo, 1);
    for (unsigned long long n = 0; n <= 3; ++n)
      for (const MonotoneMap& alpha : enumerate_maps(mo, n))
        for (const MonotoneMap& beta : betas) {
          MonotoneMap product = hadamard(alpha, beta);
          for (const BaryPoint& u : grid) {
            ++instances;
            if (homotopy_point(alpha, beta, u) != realize_map(product, u)) {
              detail = "paths split at alpha=" + format_map(alpha) +
                       " beta=" + format_map(beta) + " u=" + format_bary(u);
              return false;
            }
          }
        }
  }
  detail = std::to_string(instances) + " instances, D=4";
  return true;
}

bool check_prism_geometry(std::string& detail) {
  std::uint64_t instances = 0;
  for (Natural D = 3; D <= 4; ++D) {
    for (unsigned long long m = 0; m <= 3; ++m) {
      Ordinal mo(m);
      for (const BaryPoint& u : grid_points(mo, D)) {
        for (const ExactRational& t : grid_rationals(D)) {
          PrismPoint p(u, t);
          std::vector<Natural> ks = cover_index(p);
          ++instances;
          if (ks.empty()) {
            detail = "empty cover at " + format_prism_point(p);
            return false;
          }
          for (const Natural& k : ks) {
            ++instances;
            AffineDecomposition dec = cell_decompose(mo, k, p);
            if (dec.reconstruct() != p || dec.t() != p.t()) {
              detail = "round-trip failed at " + format_prism_point(p) + " k=" + k.str();
              return false;
            }
          }
        }
      }
    }
  }

  // Lower-face identity on the D=4 grid.
  for (unsigned long long m = 0; m <= 3; ++m) {
    Ordinal mo(m);
    std::vector<BaryPoint> grid = grid_points(mo, 4);
    for (unsigned long long n = 0; n <= 3; ++n)
      for (const MonotoneMap& alpha : enumerate_maps(mo, n))
        for (const MonotoneMap& beta : enumerate_maps(mo, 1)) {
          StepIndex k = step_index(beta);
          if (k.k < 0) continue;
          Natural kk(k.k);
          for (const BaryPoint& u : grid) {
            ++instances;
            PrismPoint p(u, s_coord(beta, u));
            if (!cell_membership(mo, kk, p)) {
              detail = "projected point left its cell at beta=" + format_map(beta) +
                       " u=" + format_bary(u);
              return false;
            }
            if (affine_image(alpha, cell_decompose(mo, kk, p)) !=
                homotopy_point(alpha, beta, u)) {
              detail = "lower-face identity failed at alpha=" + format_map(alpha) +
                       " beta=" + format_map(beta) + " u=" + format_bary(u);
              return false;
            }
          }
        }
  }

  // Triangulation: vertex lists, then gluing on the D=3 top-level grid.
  for (unsigned long long m = 0; m <= 3; ++m) {
    Ordinal mo(m);
    auto cells = prism_triangulation(mo);
    if (cells.size() != m + 1) {
      detail = "wrong cell count at m=" + std::to_string(m);
      return false;
    }
    Ordinal top(m + 1);
    std::vector<BaryPoint> top_grid = grid_points(top, 3);
    for (std::size_t k = 0; k < cells.size(); ++k) {
      const auto& [alpha_k, beta_k] = cells[k];
      std::vector<PrismPoint> expected = PrismCell(mo, Natural(k)).vertices();
      for (std::size_t i = 0; i < top.table_size(); ++i) {
        ++instances;
        BaryPoint e_i = BaryPoint::vertex(top, i);
        PrismPoint image(realize_map(alpha_k, e_i), s_coord(beta_k, e_i));
        if (!(image == expected.at(i))) {
          detail = "vertex list mismatch at m=" + std::to_string(m) +
                   " k=" + std::to_string(k) + " i=" + std::to_string(i);
          return false;
        }
      }
      for (unsigned long long n = 0; n <= 3; ++n)
        for (const MonotoneMap& alpha : enumerate_maps(mo, n)) {
          MonotoneMap glued = compose(alpha, alpha_k);
          for (const BaryPoint& w : top_grid) {
            ++instances;
            PrismPoint projected(realize_map(alpha_k, w), s_coord(beta_k, w));
            if (!cell_membership(mo, Natural(k), projected)) {
              detail = "projected top grid point escaped cell k=" + std::to_string(k);
              return false;
            }
            if (affine_image(alpha, cell_decompose(mo, Natural(k), projected)) !=
                homotopy_point(glued, beta_k, w)) {
              detail = "gluing failed at alpha=" + format_map(alpha) +
                       " k=" + std::to_string(k) + " w=" + format_bary(w);
              return false;
            }
          }
        }
    }
  }

  // Overlap consistency across covering cells.
  for (Natural D = 3; D <= 4; ++D)
    for (unsigned long long m = 0; m <= 3; ++m) {
      Ordinal mo(m);
      for (unsigned long long n = 0; n <= 3; ++n)
        for (const MonotoneMap& alpha : enumerate_maps(mo, n)) {
          CheckReport report = overlap_consistency(mo, alpha, D);
          instances += report.instances;
          if (!report.passed()) {
            detail = "overlap failed at alpha=" + format_map(alpha) + " D=" + D.str();
            return false;
          }
        }
    }
  detail = std::to_string(instances) + " instances, m <= 3, D in {3,4}";
  return true;
}

bool check_vertex_slice_agreement(std::string& detail) {
  std::uint64_t maps_checked = 0;
  for (unsigned long long m = 0; m <= 3; ++m)
    for (unsigned long long n = 0; n <= 3; ++n)
      for (const MonotoneMap& alpha : enumerate_maps(m, n)) {
        ++maps_checked;
        DeviationReport dev = compare_on_grid(n, m, alpha, 4);
        if (!dev.vertex_agreement) {
          detail = "vertex disagreement at alpha=" + format_map(alpha);
          return false;
        }
        if (!dev.slice_agreement) {
          detail = "end-slice disagreement at alpha=" + format_map(alpha);
          return false;
        }
      }
  detail = std::to_string(maps_checked) + " maps, m,n <= 3, D=4";
  return true;
}

bool check_discrepancy_probe(std::string& detail) {
  DeviationReport dev = compare_on_grid(1, 1, identity(1), 2);
  if (dev.max_deviation != ExactRational(1) / 4) {
    detail = "deviation " + format_rational(dev.max_deviation) + ", expected 1/4";
    return false;
  }
  if (!dev.witness || !(*dev.witness == PrismPoint(parse_bary("1/2,1/2"), ExactRational(1) / 2))) {
    detail = "witness missing or not ((1/2,1/2),1/2)";
    return false;
  }
  bool flagged = false;
  for (const std::string& note : dev.notes)
    if (note.find("left open") != std::string::npos) flagged = true;
  if (!flagged) {
    detail = "report does not flag the interpretation question";
    return false;
  }
  if (!dev.vertex_agreement || !dev.slice_agreement) {
    detail = "vertex or end-slice agreement unexpectedly broken";
    return false;
  }
  detail = "deviation exactly 1/4 at u=1/2,1/2 t=1/2, interpretation flagged";
  return true;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"hom-set counts", check_hom_set_counts},
      {"eta bijection", check_eta_bijection},
      {"coend quotient cross-check", check_truncation},
      {"delta well-definedness and naturality", check_delta},
      {"theta agreement", check_theta},
      {"coherence instances", check_coherence},
      {"hadamard laws", check_hadamard_laws},
      {"simplicial-map property", check_simplicial_map},
      {"contraction endpoints", check_endpoints},
      {"non-factorization witness", check_non_factorization},
      {"two-path realization identity", check_two_path},
      {"prism geometry", check_prism_geometry},
      {"vertex and end-slice agreement", check_vertex_slice_agreement},
      {"discrepancy probe", check_discrepancy_probe},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    std::string detail;
    bool ok = false;
    try {
      ok = criterion.run(detail);
    } catch (const DomainError& e) {
      detail = "unexpected error [" + std::string(errc_name(e.code())) + "]: " + e.what();
    }
    if (ok) {
      std::cout << "PASS  " << criterion.name << " (" << detail << ")\n";
    } else {
      std::cout << "FAIL  " << criterion.name << ": " << detail << "\n";
      ++failures;
    }
  }
  if (failures == 0) {
    std::cout << "acceptance: all " << criteria.size() << " criteria passed\n";
    return 0;
  }
  std::cout << "acceptance: " << failures << " criteria failed\n";
  return 1;
}
