#pragma once

// Exact-rational geometric realization: barycentric pushforwards, the
// coordinate formulas for the realized homotopy, step indices, prism cells
// S_k, affine decompositions, the prism triangulation, the straight-line
// contraction C, and the measured comparison between the two.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "deltacat/hadamard.hpp"
#include "deltacat/rational.hpp"
#include "deltacat/report.hpp"
#include "deltacat/simplex.hpp"

namespace deltacat {

// A point of |Delta^m|: nonnegative coordinates (u_0,...,u_m) summing to 1.
class BaryPoint {
 public:
  explicit BaryPoint(std::vector<ExactRational> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) raise(Errc::length_mismatch, "barycentric point needs >= 1 coordinate");
    ExactRational sum = 0;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (coords_[i] < 0)
        raise(Errc::out_of_range, "negative barycentric coordinate " + format_rational(coords_[i]),
              i);
      sum += coords_[i];
    }
    if (sum != 1)
      raise(Errc::parameter_out_of_range,
            "barycentric coordinates sum to " + format_rational(sum) + ", expected 1");
  }

  [[nodiscard]] static BaryPoint vertex(const Ordinal& m, std::size_t i) {
    std::vector<ExactRational> coords(m.table_size(), ExactRational(0));
    coords.at(i) = 1;
    return BaryPoint(std::move(coords));
  }

  [[nodiscard]] static BaryPoint barycenter(const Ordinal& m) {
    std::size_t size = m.table_size();
    return BaryPoint(std::vector<ExactRational>(size, ExactRational(1, size)));
  }

  [[nodiscard]] const std::vector<ExactRational>& coords() const noexcept { return coords_; }
  [[nodiscard]] const ExactRational& operator[](std::size_t i) const { return coords_.at(i); }
  [[nodiscard]] Ordinal level() const { return Ordinal(Natural(coords_.size() - 1)); }

  friend bool operator==(const BaryPoint& a, const BaryPoint& b) {
    return a.coords_ == b.coords_;
  }
  friend bool operator!=(const BaryPoint& a, const BaryPoint& b) { return !(a == b); }
  friend bool operator<(const BaryPoint& a, const BaryPoint& b) {
    return a.coords_ < b.coords_;
  }

 private:
  std::vector<ExactRational> coords_;
};

[[nodiscard]] inline std::string format_bary(const BaryPoint& u) {
  return format_rationals(u.coords());
}

[[nodiscard]] inline BaryPoint parse_bary(std::string_view text) {
  return BaryPoint(parse_rationals(text));
}

// A point of the prism |Delta^m| x [0,1].
class PrismPoint {
 public:
  PrismPoint(BaryPoint base, ExactRational t) : base_(std::move(base)), t_(std::move(t)) {
    if (t_ < 0 || t_ > 1)
      raise(Errc::parameter_out_of_range,
            "prism coordinate t = " + format_rational(t_) + " outside [0,1]");
  }

  [[nodiscard]] const BaryPoint& base() const noexcept { return base_; }
  [[nodiscard]] const ExactRational& t() const noexcept { return t_; }

  friend bool operator==(const PrismPoint& a, const PrismPoint& b) {
    return a.base_ == b.base_ && a.t_ == b.t_;
  }

 private:
  BaryPoint base_;
  ExactRational t_;
};

[[nodiscard]] inline std::string format_prism_point(const PrismPoint& p) {
  return "u=" + format_bary(p.base()) + " t=" + format_rational(p.t());
}

// The step index of beta : [m] -> [1]: beta(i) = 0 for i <= k, 1 for i > k.
struct StepIndex {
  Integer k;
};

[[nodiscard]] inline StepIndex step_index(const MonotoneMap& beta) {
  if (beta.target() != Ordinal(1))
    raise(Errc::target_mismatch,
          "step_index: target is [" + format_ordinal(beta.target()) + "], wanted [1]");
  Integer zeros = 0;
  for (std::size_t i = 0; i < beta.arity(); ++i)
    if (beta(i) == 0) ++zeros;
  return StepIndex{zeros - 1};
}

[[nodiscard]] inline ExactRational s_coord(const MonotoneMap& beta, const BaryPoint& u) {
  if (beta.target() != Ordinal(1))
    raise(Errc::target_mismatch,
          "s_coord: target is [" + format_ordinal(beta.target()) + "], wanted [1]");
  if (beta.source() != u.level())
    raise(Errc::level_mismatch, "s_coord: beta at level [" + format_ordinal(beta.source()) +
                                    "], point at level [" + format_ordinal(u.level()) + "]");
  ExactRational s = 0;
  for (std::size_t i = 0; i < beta.arity(); ++i)
    if (beta(i) == 1) s += u[i];
  return s;
}

// Pushforward: w_j = sum of u_i over the alpha-fiber of j.
[[nodiscard]] inline BaryPoint realize_map(const MonotoneMap& alpha, const BaryPoint& u) {
  if (alpha.source() != u.level())
    raise(Errc::level_mismatch, "realize_map: map at level [" + format_ordinal(alpha.source()) +
                                    "], point at level [" + format_ordinal(u.level()) + "]");
  std::vector<ExactRational> w(alpha.target().table_size(), ExactRational(0));
  for (std::size_t i = 0; i < alpha.arity(); ++i) w[to_index(alpha(i))] += u[i];
  return BaryPoint(std::move(w));
}

// The realized homotopy at (u, beta): with k the step index of beta and
// s = sum_{i>k} u_i,
//   v_j = sum_{i>k, alpha(i)=j} u_i   (j >= 1),
//   v_0 = (1-s) + sum_{i>k, alpha(i)=0} u_i.
[[nodiscard]] inline BaryPoint homotopy_point(const MonotoneMap& alpha, const MonotoneMap& beta,
                                              const BaryPoint& u) {
  if (alpha.source() != beta.source())
    raise(Errc::level_mismatch, "homotopy_point: alpha at level [" +
                                    format_ordinal(alpha.source()) + "], beta at level [" +
                                    format_ordinal(beta.source()) + "]");
  if (alpha.source() != u.level())
    raise(Errc::level_mismatch, "homotopy_point: maps at level [" +
                                    format_ordinal(alpha.source()) + "], point at level [" +
                                    format_ordinal(u.level()) + "]");
  ExactRational s = s_coord(beta, u);
  std::vector<ExactRational> v(alpha.target().table_size(), ExactRational(0));
  for (std::size_t i = 0; i < alpha.arity(); ++i)
    if (beta(i) == 1) v[to_index(alpha(i))] += u[i];
  v[0] += 1 - s;
  return BaryPoint(std::move(v));
}

// The prism cell S_k: the (m+1)-simplex on (e_0,0),...,(e_k,0),(e_k,1),...,(e_m,1).
class PrismCell {
 public:
  PrismCell(Ordinal level, Natural k) : level_(std::move(level)), k_(std::move(k)) {
    if (k_ < 0 || k_ > level_.value())
      raise(Errc::index_out_of_range, "prism cell index " + k_.str() + " outside [0," +
                                          format_ordinal(level_) + "]");
  }

  [[nodiscard]] const Ordinal& level() const noexcept { return level_; }
  [[nodiscard]] const Natural& k() const noexcept { return k_; }

  [[nodiscard]] std::vector<PrismPoint> vertices() const {
    std::vector<PrismPoint> out;
    std::size_t k = to_index(k_);
    for (std::size_t i = 0; i <= k; ++i)
      out.emplace_back(BaryPoint::vertex(level_, i), ExactRational(0));
    for (std::size_t i = k; i < level_.table_size(); ++i)
      out.emplace_back(BaryPoint::vertex(level_, i), ExactRational(1));
    return out;
  }

 private:
  Ordinal level_;
  Natural k_;
};

// Closed-cell membership: sum_{i>k} u_i <= t <= u_k + sum_{i>k} u_i.
[[nodiscard]] inline bool cell_membership(const Ordinal& m, const Natural& k,
                                          const PrismPoint& p) {
  if (k < 0 || k > m.value())
    raise(Errc::index_out_of_range,
          "cell index " + k.str() + " outside [0," + format_ordinal(m) + "]");
  if (p.base().level() != m)
    raise(Errc::level_mismatch, "cell_membership: point at level [" +
                                    format_ordinal(p.base().level()) + "], cell at level [" +
                                    format_ordinal(m) + "]");
  std::size_t ki = to_index(k);
  ExactRational tail = 0;
  for (std::size_t i = ki + 1; i < p.base().coords().size(); ++i) tail += p.base()[i];
  return tail <= p.t() && p.t() <= tail + p.base()[ki];
}

[[nodiscard]] inline std::vector<Natural> cover_index(const PrismPoint& p) {
  std::vector<Natural> out;
  const Ordinal m = p.base().level();
  for (Natural k = 0; k <= m.value(); ++k)
    if (cell_membership(m, k, p)) out.push_back(k);
  return out;
}

// Barycentric coordinates of a prism point inside S_k, relative to the cell's
// vertex list: a_i against (e_i,0) for i <= k, b_i against (e_i,1) for i >= k.
class AffineDecomposition {
 public:
  AffineDecomposition(Ordinal level, Natural k, std::vector<ExactRational> a,
                      std::vector<ExactRational> b)
      : level_(std::move(level)), k_(std::move(k)), a_(std::move(a)), b_(std::move(b)) {
    std::size_t ki = to_index(k_);
    if (k_ < 0 || k_ > level_.value())
      raise(Errc::index_out_of_range, "decomposition index " + k_.str() + " outside [0," +
                                          format_ordinal(level_) + "]");
    if (a_.size() != ki + 1)
      raise(Errc::length_mismatch, "expected " + std::to_string(ki + 1) + " a-entries, got " +
                                       std::to_string(a_.size()));
    if (b_.size() != level_.table_size() - ki)
      raise(Errc::length_mismatch, "expected " + std::to_string(level_.table_size() - ki) +
                                       " b-entries, got " + std::to_string(b_.size()));
    ExactRational sum = 0;
    for (std::size_t i = 0; i < a_.size(); ++i) {
      if (a_[i] < 0) raise(Errc::out_of_range, "negative coefficient a_" + std::to_string(i), i);
      sum += a_[i];
    }
    for (std::size_t i = 0; i < b_.size(); ++i) {
      if (b_[i] < 0)
        raise(Errc::out_of_range, "negative coefficient b_" + std::to_string(ki + i), ki + i);
      sum += b_[i];
    }
    if (sum != 1)
      raise(Errc::parameter_out_of_range,
            "decomposition coefficients sum to " + format_rational(sum) + ", expected 1");
  }

  [[nodiscard]] const Ordinal& level() const noexcept { return level_; }
  [[nodiscard]] const Natural& k() const noexcept { return k_; }
  [[nodiscard]] const std::vector<ExactRational>& a() const noexcept { return a_; }
  // b()[j] is the coefficient b_{k+j}.
  [[nodiscard]] const std::vector<ExactRational>& b() const noexcept { return b_; }

  [[nodiscard]] ExactRational t() const {
    ExactRational sum = 0;
    for (const ExactRational& x : b_) sum += x;
    return sum;
  }

  [[nodiscard]] PrismPoint reconstruct() const {
    std::size_t ki = to_index(k_);
    std::vector<ExactRational> u(level_.table_size(), ExactRational(0));
    for (std::size_t i = 0; i < ki; ++i) u[i] = a_[i];
    u[ki] = a_[ki] + b_[0];
    for (std::size_t i = ki + 1; i < u.size(); ++i) u[i] = b_[i - ki];
    return PrismPoint(BaryPoint(std::move(u)), t());
  }

 private:
  Ordinal level_;
  Natural k_;
  std::vector<ExactRational> a_;
  std::vector<ExactRational> b_;
};

[[nodiscard]] inline std::string format_decomposition(const AffineDecomposition& d) {
  return "k=" + d.k().str() + " a=" + format_rationals(d.a()) + " b=" + format_rationals(d.b());
}

// Solve for the unique cell coordinates of p in S_k:
//   a_i = u_i (i < k), b_i = u_i (i > k), b_k = t - sum_{i>k} u_i, a_k = u_k - b_k.
[[nodiscard]] inline AffineDecomposition cell_decompose(const Ordinal& m, const Natural& k,
                                                        const PrismPoint& p) {
  if (!cell_membership(m, k, p))
    raise(Errc::not_in_cell,
          "point " + format_prism_point(p) + " is not in cell S_" + k.str());
  std::size_t ki = to_index(k);
  const std::vector<ExactRational>& u = p.base().coords();
  std::vector<ExactRational> a(ki + 1), b(u.size() - ki);
  ExactRational tail = 0;
  for (std::size_t i = ki + 1; i < u.size(); ++i) {
    b[i - ki] = u[i];
    tail += u[i];
  }
  b[0] = p.t() - tail;
  a[ki] = u[ki] - b[0];
  for (std::size_t i = 0; i < ki; ++i) a[i] = u[i];
  return AffineDecomposition(m, k, std::move(a), std::move(b));
}

// The affine extension of (e_i,0) |-> e_0, (e_i,1) |-> e_{alpha(i)}:
//   v_j = sum_{i>=k, alpha(i)=j} b_i (j >= 1), v_0 = sum a + sum_{i>=k, alpha(i)=0} b_i.
[[nodiscard]] inline BaryPoint affine_image(const MonotoneMap& alpha,
                                            const AffineDecomposition& d) {
  if (alpha.source() != d.level())
    raise(Errc::level_mismatch, "affine_image: map at level [" + format_ordinal(alpha.source()) +
                                    "], decomposition at level [" + format_ordinal(d.level()) +
                                    "]");
  std::vector<ExactRational> v(alpha.target().table_size(), ExactRational(0));
  std::size_t ki = to_index(d.k());
  for (std::size_t i = ki; i < alpha.arity(); ++i) v[to_index(alpha(i))] += d.b()[i - ki];
  for (const ExactRational& x : d.a()) v[0] += x;
  return BaryPoint(std::move(v));
}

// The straight-line contraction C(w,t) = ((1-t) + t w_0, t w_1, ..., t w_n).
[[nodiscard]] inline BaryPoint standard_contraction(const BaryPoint& w, const ExactRational& t) {
  if (t < 0 || t > 1)
    raise(Errc::parameter_out_of_range,
          "contraction parameter t = " + format_rational(t) + " outside [0,1]");
  std::vector<ExactRational> c(w.coords().size());
  for (std::size_t j = 0; j < c.size(); ++j) c[j] = t * w[j];
  c[0] += 1 - t;
  return BaryPoint(std::move(c));
}

// The prism triangulation: for k = 0..m, alpha_k collapses {k, k+1} and
// beta_k is the step map at k; together they parametrize S_k from [m+1].
[[nodiscard]] inline std::vector<std::pair<MonotoneMap, MonotoneMap>> prism_triangulation(
    const Ordinal& m) {
  std::vector<std::pair<MonotoneMap, MonotoneMap>> out;
  std::size_t width = m.table_size() + 1;
  for (std::size_t k = 0; k < m.table_size(); ++k) {
    std::vector<Natural> alpha(width), beta(width);
    for (std::size_t i = 0; i < width; ++i) {
      alpha[i] = (i <= k) ? Natural(i) : Natural(i - 1);
      beta[i] = (i <= k) ? Natural(0) : Natural(1);
    }
    out.emplace_back(MonotoneMap(Ordinal(Natural(width - 1)), m, std::move(alpha)),
                     MonotoneMap(Ordinal(Natural(width - 1)), 1, std::move(beta)));
  }
  return out;
}

// All points of |Delta^m| with coordinates of denominator dividing D, in lex
// order, plus the barycenter.
[[nodiscard]] inline std::vector<BaryPoint> grid_points(const Ordinal& m, const Natural& D) {
  if (D < 1) raise(Errc::parameter_out_of_range, "grid denominator must be >= 1, got " + D.str());
  std::vector<BaryPoint> out;
  std::size_t size = m.table_size();
  std::vector<Natural> counts(size, Natural(0));
  // lex enumeration of all ways to write D as an ordered sum of `size` naturals
  auto emit = [&] {
    std::vector<ExactRational> coords(size);
    for (std::size_t i = 0; i < size; ++i) coords[i] = ExactRational(counts[i], D);
    out.emplace_back(std::move(coords));
  };
  auto rec = [&](auto&& self, std::size_t i, Natural remaining) -> void {
    if (i + 1 == size) {
      counts[i] = remaining;
      emit();
      return;
    }
    for (Natural c = 0; c <= remaining; ++c) {
      counts[i] = c;
      self(self, i + 1, remaining - c);
    }
  };
  rec(rec, 0, D);
  BaryPoint center = BaryPoint::barycenter(m);
  bool have_center = false;
  for (const BaryPoint& u : out)
    if (u == center) have_center = true;
  if (!have_center) out.push_back(center);
  return out;
}

[[nodiscard]] inline std::vector<ExactRational> grid_rationals(const Natural& D) {
  std::vector<ExactRational> out;
  for (Natural i = 0; i <= D; ++i) out.emplace_back(i, D);
  return out;
}

// Measured comparison of the prismwise affine map against the straight-line
// contraction. Never asserts interior agreement; reports the max deviation.
struct DeviationReport {
  std::string alpha_literal;
  Natural grid_denominator = 1;
  std::uint64_t points = 0;
  ExactRational max_deviation = 0;
  std::optional<PrismPoint> witness;
  std::string witness_affine;
  std::string witness_contraction;
  bool vertex_agreement = true;
  bool slice_agreement = true;
  std::vector<std::string> notes;
};

[[nodiscard]] inline ExactRational linf_distance(const BaryPoint& a, const BaryPoint& b) {
  if (a.level() != b.level())
    raise(Errc::level_mismatch, "distance: points at levels [" + format_ordinal(a.level()) +
                                    "] and [" + format_ordinal(b.level()) + "]");
  ExactRational best = 0;
  for (std::size_t j = 0; j < a.coords().size(); ++j) {
    ExactRational d = a[j] - b[j];
    if (d < 0) d = -d;
    if (d > best) best = d;
  }
  return best;
}

[[nodiscard]] inline DeviationReport compare_on_grid(const Ordinal& n, const Ordinal& m,
                                                     const MonotoneMap& alpha,
                                                     const Natural& D) {
  if (alpha.source() != m || alpha.target() != n)
    raise(Errc::level_mismatch, "compare_on_grid: alpha is [" + format_ordinal(alpha.source()) +
                                    "]->[" + format_ordinal(alpha.target()) + "], wanted [" +
                                    format_ordinal(m) + "]->[" + format_ordinal(n) + "]");
  DeviationReport report;
  report.alpha_literal = format_map(alpha);
  report.grid_denominator = D;

  for (const BaryPoint& u : grid_points(m, D)) {
    BaryPoint w = realize_map(alpha, u);
    for (const ExactRational& t : grid_rationals(D)) {
      PrismPoint p(u, t);
      Natural k = cover_index(p).front();
      BaryPoint affine = affine_image(alpha, cell_decompose(m, k, p));
      BaryPoint contraction = standard_contraction(w, t);
      ++report.points;
      ExactRational dev = linf_distance(affine, contraction);
      if ((t == 0 || t == 1) && dev != 0) report.slice_agreement = false;
      if (dev > report.max_deviation) {
        report.max_deviation = dev;
        report.witness = p;
        report.witness_affine = format_bary(affine);
        report.witness_contraction = format_bary(contraction);
      }
    }
  }

  for (Natural k = 0; k <= m.value(); ++k) {
    for (const PrismPoint& vertex : PrismCell(m, k).vertices()) {
      BaryPoint affine = affine_image(alpha, cell_decompose(m, k, vertex));
      BaryPoint contraction =
          standard_contraction(realize_map(alpha, vertex.base()), vertex.t());
      if (affine != contraction) report.vertex_agreement = false;
    }
  }

  if (report.max_deviation != 0) {
    report.notes.push_back(
        "interior deviation detected: the straight-line contraction is bilinear in (u,t), not "
        "affine on the prism cells, so whole-cell coincidence with the prismwise affine map "
        "fails in general; vertex and end-slice agreement are the exact statements (whether "
        "the intended comparison is with the prismwise affine approximation is left open)");
  }
  return report;
}

[[nodiscard]] inline CheckReport overlap_consistency(const Ordinal& m, const MonotoneMap& alpha,
                                                     const Natural& D,
                                                     std::size_t counterexample_limit = 10) {
  CheckReport report;
  report.name = "overlap-consistency";
  report.counterexample_limit = counterexample_limit;
  for (const BaryPoint& u : grid_points(m, D)) {
    for (const ExactRational& t : grid_rationals(D)) {
      PrismPoint p(u, t);
      std::vector<Natural> cover = cover_index(p);
      if (cover.size() < 2) continue;
      BaryPoint first = affine_image(alpha, cell_decompose(m, cover.front(), p));
      for (std::size_t i = 1; i < cover.size(); ++i) {
        BaryPoint other = affine_image(alpha, cell_decompose(m, cover[i], p));
        check(report, other == first, [&] {
          return Counterexample{"overlap_consistency",
                                "alpha=" + format_map(alpha) + " " + format_prism_point(p) +
                                    " k=" + cover.front().str() + " vs k=" + cover[i].str(),
                                format_bary(first), format_bary(other)};
        });
      }
    }
  }
  return report;
}

}  // namespace deltacat
