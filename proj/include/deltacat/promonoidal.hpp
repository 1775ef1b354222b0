#pragma once

// The Cartesian promonoidal kernel P(p,q;r), its unit J, coend canonical
// forms via the eta identification, the comparison map delta, Day convolution
// classes at the level of representables, and Theta.
//
// A class of P(p,q;r) is carried by a representative triple
//   alpha : [m] -> [p],  beta : [m] -> [q],  gamma : [r] -> [m]
// and the canonical form composes gamma away (m = r, gamma = id).

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "deltacat/hadamard.hpp"
#include "deltacat/report.hpp"
#include "deltacat/simplex.hpp"

namespace deltacat {

class KernelClass {
 public:
  KernelClass(MonotoneMap alpha, MonotoneMap beta, MonotoneMap gamma)
      : alpha_(std::move(alpha)), beta_(std::move(beta)), gamma_(std::move(gamma)) {
    if (alpha_.source() != beta_.source())
      raise(Errc::source_target_mismatch,
            "kernel class: alpha and beta have different sources [" +
                format_ordinal(alpha_.source()) + "] vs [" + format_ordinal(beta_.source()) +
                "]");
    if (gamma_.target() != alpha_.source())
      raise(Errc::source_target_mismatch,
            "kernel class: gamma targets [" + format_ordinal(gamma_.target()) +
                "] but the representative level is [" + format_ordinal(alpha_.source()) + "]");
  }

  [[nodiscard]] const MonotoneMap& alpha() const noexcept { return alpha_; }
  [[nodiscard]] const MonotoneMap& beta() const noexcept { return beta_; }
  [[nodiscard]] const MonotoneMap& gamma() const noexcept { return gamma_; }

  [[nodiscard]] const Ordinal& slot_p() const noexcept { return alpha_.target(); }
  [[nodiscard]] const Ordinal& slot_q() const noexcept { return beta_.target(); }
  [[nodiscard]] const Ordinal& slot_r() const noexcept { return gamma_.source(); }
  [[nodiscard]] const Ordinal& rep_level() const noexcept { return alpha_.source(); }

  [[nodiscard]] bool is_canonical() const {
    return rep_level() == slot_r() && gamma_ == identity(slot_r());
  }

  friend bool operator==(const KernelClass& a, const KernelClass& b) {
    return a.alpha_ == b.alpha_ && a.beta_ == b.beta_ && a.gamma_ == b.gamma_;
  }
  friend bool operator!=(const KernelClass& a, const KernelClass& b) { return !(a == b); }
  friend bool operator<(const KernelClass& a, const KernelClass& b) {
    if (a.alpha_ != b.alpha_) return a.alpha_ < b.alpha_;
    if (a.beta_ != b.beta_) return a.beta_ < b.beta_;
    return a.gamma_ < b.gamma_;
  }

 private:
  MonotoneMap alpha_;
  MonotoneMap beta_;
  MonotoneMap gamma_;
};

[[nodiscard]] inline std::string format_kernel(const KernelClass& c) {
  return "[alpha=" + format_map(c.alpha()) + " beta=" + format_map(c.beta()) +
         " gamma=" + format_map(c.gamma()) + " : P(" + format_ordinal(c.slot_p()) + "," +
         format_ordinal(c.slot_q()) + ";" + format_ordinal(c.slot_r()) + ") rep " +
         format_ordinal(c.rep_level()) + "]";
}

[[nodiscard]] inline KernelClass normalize_kernel(const KernelClass& c) {
  return KernelClass(compose(c.alpha(), c.gamma()), compose(c.beta(), c.gamma()),
                     identity(c.slot_r()));
}

// Classes are equal iff their canonical forms coincide.
[[nodiscard]] inline bool kernel_equivalent(const KernelClass& a, const KernelClass& b) {
  return normalize_kernel(a) == normalize_kernel(b);
}

[[nodiscard]] inline std::pair<MonotoneMap, MonotoneMap> eta(const KernelClass& c) {
  return {compose(c.alpha(), c.gamma()), compose(c.beta(), c.gamma())};
}

[[nodiscard]] inline KernelClass eta_inverse(const MonotoneMap& f, const MonotoneMap& g) {
  if (f.source() != g.source())
    raise(Errc::source_target_mismatch, "eta_inverse: sources [" + format_ordinal(f.source()) +
                                            "] and [" + format_ordinal(g.source()) +
                                            "] differ");
  Ordinal r = f.source();
  return KernelClass(f, g, identity(r));
}

// Covariant action in the p,q slots, contravariant in r.
[[nodiscard]] inline KernelClass kernel_act(const MonotoneMap& fp, const MonotoneMap& fq,
                                            const MonotoneMap& h, const KernelClass& c) {
  return KernelClass(compose(fp, c.alpha()), compose(fq, c.beta()), compose(c.gamma(), h));
}

// The generating coend relation: (alpha.f, beta.f, gamma) ~ (alpha, beta, f.gamma).
[[nodiscard]] inline bool relation_check(const MonotoneMap& alpha, const MonotoneMap& beta,
                                         const MonotoneMap& gamma, const MonotoneMap& f) {
  KernelClass lhs(compose(alpha, f), compose(beta, f), gamma);
  KernelClass rhs(alpha, beta, compose(f, gamma));
  return normalize_kernel(lhs) == normalize_kernel(rhs);
}

// J([r]) = Delta([r],[0]) is a singleton.
struct UnitElement {
  Ordinal r;
  friend bool operator==(const UnitElement& a, const UnitElement& b) { return a.r == b.r; }
};

[[nodiscard]] inline UnitElement unit_element(const Ordinal& r) { return UnitElement{r}; }

[[nodiscard]] inline UnitElement unit_act(const MonotoneMap& h, const UnitElement& u) {
  if (h.target() != u.r)
    raise(Errc::source_target_mismatch, "unit_act: h targets [" + format_ordinal(h.target()) +
                                            "] but the element lives at [" +
                                            format_ordinal(u.r) + "]");
  return UnitElement{h.source()};
}

// delta[alpha,beta,gamma] = (alpha (x) beta) . gamma : [r] -> [p*q].
[[nodiscard]] inline MonotoneMap delta(const KernelClass& c) {
  return compose(hadamard(c.alpha(), c.beta()), c.gamma());
}

[[nodiscard]] inline bool delta_naturality_check(const MonotoneMap& h, const KernelClass& c) {
  Ordinal p = c.slot_p();
  Ordinal q = c.slot_q();
  return delta(kernel_act(identity(p), identity(q), h, c)) == compose(delta(c), h);
}

// An element of (Delta^p * Delta^q)([r]): a kernel class pi in P(x,y;r)
// together with simplices alpha : [x] -> [p] and beta : [y] -> [q].
class DayClass {
 public:
  DayClass(KernelClass pi, MonotoneMap alpha, MonotoneMap beta)
      : pi_(std::move(pi)), alpha_(std::move(alpha)), beta_(std::move(beta)) {
    if (alpha_.source() != pi_.slot_p())
      raise(Errc::source_target_mismatch,
            "day class: alpha starts at [" + format_ordinal(alpha_.source()) +
                "] but pi's first slot is [" + format_ordinal(pi_.slot_p()) + "]");
    if (beta_.source() != pi_.slot_q())
      raise(Errc::source_target_mismatch,
            "day class: beta starts at [" + format_ordinal(beta_.source()) +
                "] but pi's second slot is [" + format_ordinal(pi_.slot_q()) + "]");
  }

  [[nodiscard]] const KernelClass& pi() const noexcept { return pi_; }
  [[nodiscard]] const MonotoneMap& alpha() const noexcept { return alpha_; }
  [[nodiscard]] const MonotoneMap& beta() const noexcept { return beta_; }
  [[nodiscard]] const Ordinal& level_x() const noexcept { return pi_.slot_p(); }
  [[nodiscard]] const Ordinal& level_y() const noexcept { return pi_.slot_q(); }
  [[nodiscard]] const Ordinal& slot_p() const noexcept { return alpha_.target(); }
  [[nodiscard]] const Ordinal& slot_q() const noexcept { return beta_.target(); }
  [[nodiscard]] const Ordinal& slot_r() const noexcept { return pi_.slot_r(); }

  friend bool operator==(const DayClass& a, const DayClass& b) {
    return a.pi_ == b.pi_ && a.alpha_ == b.alpha_ && a.beta_ == b.beta_;
  }

 private:
  KernelClass pi_;
  MonotoneMap alpha_;
  MonotoneMap beta_;
};

[[nodiscard]] inline std::string format_day(const DayClass& d) {
  return "[pi=" + format_kernel(d.pi()) + " alpha=" + format_map(d.alpha()) +
         " beta=" + format_map(d.beta()) + "]";
}

// The identification of (Delta^p * Delta^q)([r]) with Delta(r,p) x Delta(r,q):
// push alpha, beta into the kernel, then read off eta.
[[nodiscard]] inline std::pair<MonotoneMap, MonotoneMap> day_identification(const DayClass& d) {
  return eta(kernel_act(d.alpha(), d.beta(), identity(d.slot_r()), d.pi()));
}

// Canonical Day classes, one per class, lex-ordered along the identification.
[[nodiscard]] inline std::vector<DayClass> day_level(const Ordinal& p, const Ordinal& q,
                                                     const Ordinal& r) {
  std::vector<DayClass> out;
  MonotoneMap idp = identity(p);
  MonotoneMap idq = identity(q);
  for (const MonotoneMap& f : enumerate_maps(r, p))
    for (const MonotoneMap& g : enumerate_maps(r, q))
      out.emplace_back(eta_inverse(f, g), idp, idq);
  return out;
}

// Theta([pi; alpha, beta]) = delta(P(alpha,beta;r)(pi)).
[[nodiscard]] inline MonotoneMap theta(const DayClass& d) {
  return delta(kernel_act(d.alpha(), d.beta(), identity(d.slot_r()), d.pi()));
}

[[nodiscard]] inline KernelClass symmetry_instance(const KernelClass& c) {
  return KernelClass(c.beta(), c.alpha(), c.gamma());
}

// ---------------------------------------------------------------------------
// Truncated coend quotient: an independent cross-check of the canonical-form
// count, by union-find over every relation instance whose representative
// levels stay below a cutoff.

namespace detail {

struct TruncationLevel {
  std::vector<MonotoneMap> alphas, betas, gammas;
  std::map<MonotoneMap, std::uint32_t> alpha_rank, beta_rank, gamma_rank;
  std::size_t offset = 0;

  [[nodiscard]] std::size_t block() const {
    return alphas.size() * betas.size() * gammas.size();
  }
};

inline std::uint32_t uf_find(std::vector<std::uint32_t>& parent, std::uint32_t i) {
  while (parent[i] != i) {
    parent[i] = parent[parent[i]];
    i = parent[i];
  }
  return i;
}

inline void uf_union(std::vector<std::uint32_t>& parent, std::uint32_t a, std::uint32_t b) {
  a = uf_find(parent, a);
  b = uf_find(parent, b);
  if (a != b) parent[b] = a;
}

// Number of classes of P(p,q;r) after quotienting representatives of level
// <= cutoff by all relation instances staying within that truncation.
[[nodiscard]] inline Natural truncated_quotient_count(const Ordinal& p, const Ordinal& q,
                                                      const Ordinal& r, const Natural& cutoff) {
  const std::size_t levels = to_index(cutoff) + 1;
  std::vector<TruncationLevel> level(levels);
  std::size_t total = 0;
  for (std::size_t m = 0; m < levels; ++m) {
    TruncationLevel& L = level[m];
    L.alphas = enumerate_maps(Ordinal(Natural(m)), p);
    L.betas = enumerate_maps(Ordinal(Natural(m)), q);
    L.gammas = enumerate_maps(r, Ordinal(Natural(m)));
    for (std::uint32_t i = 0; i < L.alphas.size(); ++i) L.alpha_rank[L.alphas[i]] = i;
    for (std::uint32_t i = 0; i < L.betas.size(); ++i) L.beta_rank[L.betas[i]] = i;
    for (std::uint32_t i = 0; i < L.gammas.size(); ++i) L.gamma_rank[L.gammas[i]] = i;
    L.offset = total;
    total += L.block();
  }

  std::vector<std::uint32_t> parent(total);
  for (std::size_t i = 0; i < total; ++i) parent[i] = static_cast<std::uint32_t>(i);

  for (std::size_t ms = 0; ms < levels; ++ms) {    // source level of f (m')
    for (std::size_t mt = 0; mt < levels; ++mt) {  // target level of f (m)
      const TruncationLevel& S = level[ms];
      const TruncationLevel& T = level[mt];
      for (const MonotoneMap& f :
           enumerate_maps(Ordinal(Natural(ms)), Ordinal(Natural(mt)))) {
        std::vector<std::uint32_t> la(T.alphas.size()), lb(T.betas.size()),
            lg(S.gammas.size());
        for (std::size_t a = 0; a < T.alphas.size(); ++a)
          la[a] = S.alpha_rank.at(compose(T.alphas[a], f));
        for (std::size_t b = 0; b < T.betas.size(); ++b)
          lb[b] = S.beta_rank.at(compose(T.betas[b], f));
        for (std::size_t g = 0; g < S.gammas.size(); ++g)
          lg[g] = T.gamma_rank.at(compose(f, S.gammas[g]));

        const std::size_t sb = S.betas.size(), sg = S.gammas.size();
        const std::size_t tb = T.betas.size(), tg = T.gammas.size();
        for (std::size_t a = 0; a < T.alphas.size(); ++a) {
          for (std::size_t b = 0; b < T.betas.size(); ++b) {
            const std::size_t low = S.offset + (la[a] * sb + lb[b]) * sg;
            const std::size_t high = T.offset + (a * tb + b) * tg;
            for (std::size_t g = 0; g < sg; ++g) {
              uf_union(parent, static_cast<std::uint32_t>(low + g),
                       static_cast<std::uint32_t>(high + lg[g]));
            }
          }
        }
      }
    }
  }

  std::size_t classes = 0;
  for (std::size_t i = 0; i < total; ++i)
    if (uf_find(parent, static_cast<std::uint32_t>(i)) == i) ++classes;
  return Natural(classes);
}

}  // namespace detail

struct TruncationReport {
  Ordinal p, q, r;
  Natural bound;         // B
  Natural classes_low;   // quotient over representatives of level <= B
  Natural classes_high;  // level <= B+1
  Natural eta_count;     // count_maps(r,p) * count_maps(r,q)

  [[nodiscard]] bool stable() const {
    return classes_low == classes_high && classes_low == eta_count;
  }
};

[[nodiscard]] inline TruncationReport truncation_stability(const Ordinal& p, const Ordinal& q,
                                                           const Ordinal& r, const Natural& B) {
  if (B < r.value())
    raise(Errc::parameter_out_of_range,
          "truncation_stability: bound " + B.str() + " below r = " + format_ordinal(r));
  TruncationReport report;
  report.p = p;
  report.q = q;
  report.r = r;
  report.bound = B;
  report.classes_low = detail::truncated_quotient_count(p, q, r, B);
  report.classes_high = detail::truncated_quotient_count(p, q, r, B + 1);
  report.eta_count = count_maps(r, p) * count_maps(r, q);
  return report;
}

}  // namespace deltacat
