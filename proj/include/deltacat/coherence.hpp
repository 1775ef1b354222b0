#pragma once

// Instance-level coherence machinery: elements of iterated Day tensor words
// carried by nested kernel classes, eta-driven canonical forms, the local
// associator / unitor / braiding moves, and the pentagon, triangle and
// hexagon composite checks.

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "deltacat/promonoidal.hpp"
#include "deltacat/report.hpp"
#include "deltacat/simplex.hpp"

namespace deltacat {

// A bracketed tensor word over representables and the unit.
class TensorShape {
 public:
  enum class Kind { leaf, unit, node };

  [[nodiscard]] static TensorShape leaf(Ordinal target) {
    TensorShape s;
    s.kind_ = Kind::leaf;
    s.leaf_target_ = std::move(target);
    return s;
  }
  [[nodiscard]] static TensorShape unit() {
    TensorShape s;
    s.kind_ = Kind::unit;
    return s;
  }
  [[nodiscard]] static TensorShape node(TensorShape left, TensorShape right) {
    TensorShape s;
    s.kind_ = Kind::node;
    s.left_ = std::make_shared<const TensorShape>(std::move(left));
    s.right_ = std::make_shared<const TensorShape>(std::move(right));
    return s;
  }

  [[nodiscard]] Kind kind() const noexcept { return kind_; }
  [[nodiscard]] const Ordinal& leaf_target() const { return leaf_target_; }
  [[nodiscard]] const TensorShape& left() const { return *left_; }
  [[nodiscard]] const TensorShape& right() const { return *right_; }

 private:
  Kind kind_ = Kind::unit;
  Ordinal leaf_target_{0};
  std::shared_ptr<const TensorShape> left_, right_;
};

// An element of a tensor word at weight [w]:
//   leaf:  a simplex, i.e. a map [w] -> [p];
//   unit:  the unique element of J([w]);
//   node:  a kernel class pi in P(x,y;[w]) with elements of the two factors
//          at weights [x] and [y].
class TensorElem {
 public:
  enum class Kind { leaf, unit, node };

  [[nodiscard]] static TensorElem leaf(MonotoneMap simplex) {
    TensorElem e;
    e.kind_ = Kind::leaf;
    e.map_.emplace(std::move(simplex));
    return e;
  }
  [[nodiscard]] static TensorElem unit(Ordinal weight) {
    TensorElem e;
    e.kind_ = Kind::unit;
    e.unit_weight_ = std::move(weight);
    return e;
  }
  [[nodiscard]] static TensorElem node(KernelClass pi, TensorElem left, TensorElem right) {
    if (left.weight() != pi.slot_p())
      raise(Errc::source_target_mismatch,
            "tensor node: left element at [" + format_ordinal(left.weight()) +
                "] does not match pi's first slot [" + format_ordinal(pi.slot_p()) + "]");
    if (right.weight() != pi.slot_q())
      raise(Errc::source_target_mismatch,
            "tensor node: right element at [" + format_ordinal(right.weight()) +
                "] does not match pi's second slot [" + format_ordinal(pi.slot_q()) + "]");
    TensorElem e;
    e.kind_ = Kind::node;
    e.pi_.emplace(std::move(pi));
    e.left_ = std::make_shared<const TensorElem>(std::move(left));
    e.right_ = std::make_shared<const TensorElem>(std::move(right));
    return e;
  }

  [[nodiscard]] Kind kind() const noexcept { return kind_; }
  [[nodiscard]] const MonotoneMap& map() const { return *map_; }
  [[nodiscard]] const KernelClass& pi() const { return *pi_; }
  [[nodiscard]] const TensorElem& left() const { return *left_; }
  [[nodiscard]] const TensorElem& right() const { return *right_; }

  [[nodiscard]] const Ordinal& weight() const {
    switch (kind_) {
      case Kind::leaf: return map_->source();
      case Kind::unit: return unit_weight_;
      case Kind::node: return pi_->slot_r();
    }
    return unit_weight_;
  }

  friend bool operator==(const TensorElem& a, const TensorElem& b) {
    if (a.kind_ != b.kind_) return false;
    switch (a.kind_) {
      case Kind::leaf: return *a.map_ == *b.map_;
      case Kind::unit: return a.unit_weight_ == b.unit_weight_;
      case Kind::node:
        return *a.pi_ == *b.pi_ && *a.left_ == *b.left_ && *a.right_ == *b.right_;
    }
    return false;
  }
  friend bool operator!=(const TensorElem& a, const TensorElem& b) { return !(a == b); }
  friend bool operator<(const TensorElem& a, const TensorElem& b) {
    if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) < static_cast<int>(b.kind_);
    switch (a.kind_) {
      case Kind::leaf: return *a.map_ < *b.map_;
      case Kind::unit: return a.unit_weight_ < b.unit_weight_;
      case Kind::node:
        if (*a.pi_ != *b.pi_) return *a.pi_ < *b.pi_;
        if (*a.left_ != *b.left_) return *a.left_ < *b.left_;
        return *a.right_ < *b.right_;
    }
    return false;
  }

 private:
  Kind kind_ = Kind::unit;
  std::optional<MonotoneMap> map_;
  Ordinal unit_weight_{0};
  std::optional<KernelClass> pi_;
  std::shared_ptr<const TensorElem> left_, right_;
};

[[nodiscard]] inline std::string format_elem(const TensorElem& e) {
  switch (e.kind()) {
    case TensorElem::Kind::leaf: return format_map(e.map());
    case TensorElem::Kind::unit: return "!" + format_ordinal(e.weight());
    case TensorElem::Kind::node:
      return "(" + format_map(e.pi().alpha()) + ";" + format_map(e.pi().beta()) + ";" +
             format_map(e.pi().gamma()) + " | " + format_elem(e.left()) + " , " +
             format_elem(e.right()) + ")";
  }
  return "?";
}

// The diagonal canonical class in P(w,w;w).
[[nodiscard]] inline KernelClass diagonal_class(const Ordinal& w) {
  MonotoneMap id = identity(w);
  return KernelClass(id, id, id);
}

// Contravariant restriction along h : [w'] -> [w].
[[nodiscard]] inline TensorElem restrict_elem(const TensorElem& e, const MonotoneMap& h) {
  switch (e.kind()) {
    case TensorElem::Kind::leaf: return TensorElem::leaf(compose(e.map(), h));
    case TensorElem::Kind::unit:
      if (h.target() != e.weight())
        raise(Errc::source_target_mismatch,
              "restrict: h targets [" + format_ordinal(h.target()) +
                  "] but the element lives at [" + format_ordinal(e.weight()) + "]");
      return TensorElem::unit(h.source());
    case TensorElem::Kind::node:
      return TensorElem::node(
          kernel_act(identity(e.pi().slot_p()), identity(e.pi().slot_q()), h, e.pi()),
          e.left(), e.right());
  }
  return e;
}

// Canonical form: every node becomes the diagonal class at its own weight,
// with the eta legs pushed into the subtrees.
[[nodiscard]] inline TensorElem normalize_elem(const TensorElem& e) {
  if (e.kind() != TensorElem::Kind::node) return e;
  auto [a, b] = eta(e.pi());
  return TensorElem::node(diagonal_class(e.weight()),
                          normalize_elem(restrict_elem(e.left(), a)),
                          normalize_elem(restrict_elem(e.right(), b)));
}

[[nodiscard]] inline bool elem_equivalent(const TensorElem& a, const TensorElem& b) {
  return normalize_elem(a) == normalize_elem(b);
}

// ((A (x) B) (x) C  ->  A (x) (B (x) C), one local move: both etas are read
// off and redistributed; subtrees are restricted, not normalized.
[[nodiscard]] inline TensorElem assoc_fd(const TensorElem& e) {
  if (e.kind() != TensorElem::Kind::node || e.left().kind() != TensorElem::Kind::node)
    raise(Errc::source_target_mismatch, "assoc_fd: element is not left-nested");
  const Ordinal& w = e.weight();
  auto [h1, h2] = eta(e.pi());         // [w] -> [x], [w] -> [y]
  auto [h3, h4] = eta(e.left().pi());  // [x] -> [x2], [x] -> [y2]
  KernelClass diag = diagonal_class(w);
  TensorElem ea = restrict_elem(e.left().left(), compose(h3, h1));
  TensorElem eb = restrict_elem(e.left().right(), compose(h4, h1));
  TensorElem ec = restrict_elem(e.right(), h2);
  return TensorElem::node(diag, std::move(ea),
                          TensorElem::node(diag, std::move(eb), std::move(ec)));
}

// A (x) (B (x) C)  ->  (A (x) B) (x) C.
[[nodiscard]] inline TensorElem assoc_rv(const TensorElem& e) {
  if (e.kind() != TensorElem::Kind::node || e.right().kind() != TensorElem::Kind::node)
    raise(Errc::source_target_mismatch, "assoc_rv: element is not right-nested");
  const Ordinal& w = e.weight();
  auto [h1, h2] = eta(e.pi());
  auto [h3, h4] = eta(e.right().pi());
  KernelClass diag = diagonal_class(w);
  TensorElem ea = restrict_elem(e.left(), h1);
  TensorElem eb = restrict_elem(e.right().left(), compose(h3, h2));
  TensorElem ec = restrict_elem(e.right().right(), compose(h4, h2));
  return TensorElem::node(diag, TensorElem::node(diag, std::move(ea), std::move(eb)),
                          std::move(ec));
}

// The braiding: swap the two slots of pi and the two subtrees.
[[nodiscard]] inline TensorElem braid(const TensorElem& e) {
  if (e.kind() != TensorElem::Kind::node)
    raise(Errc::source_target_mismatch, "braid: element is not a tensor node");
  return TensorElem::node(symmetry_instance(e.pi()), e.right(), e.left());
}

// lambda : 1 (x) A -> A, restriction along the second eta leg.
[[nodiscard]] inline TensorElem left_unitor(const TensorElem& e) {
  if (e.kind() != TensorElem::Kind::node || e.left().kind() != TensorElem::Kind::unit)
    raise(Errc::source_target_mismatch, "left_unitor: left factor is not the unit");
  return restrict_elem(e.right(), compose(e.pi().beta(), e.pi().gamma()));
}

// rho : A (x) 1 -> A, restriction along the first eta leg.
[[nodiscard]] inline TensorElem right_unitor(const TensorElem& e) {
  if (e.kind() != TensorElem::Kind::node || e.right().kind() != TensorElem::Kind::unit)
    raise(Errc::source_target_mismatch, "right_unitor: right factor is not the unit");
  return restrict_elem(e.left(), compose(e.pi().alpha(), e.pi().gamma()));
}

namespace detail {

template <class Fn>
[[nodiscard]] TensorElem apply_at_impl(const TensorElem& e, const int* begin, const int* end,
                                       Fn&& fn) {
  if (begin == end) return fn(e);
  if (e.kind() != TensorElem::Kind::node)
    raise(Errc::source_target_mismatch, "apply_at: path descends below a leaf");
  if (*begin == 0)
    return TensorElem::node(e.pi(), apply_at_impl(e.left(), begin + 1, end, fn), e.right());
  return TensorElem::node(e.pi(), e.left(), apply_at_impl(e.right(), begin + 1, end, fn));
}

}  // namespace detail

// Apply a move to the subtree at `path` (0 = left child, 1 = right child);
// this is how id (x) f and f (x) id act on elements.
template <class Fn>
[[nodiscard]] TensorElem apply_at(const TensorElem& e, std::initializer_list<int> path,
                                  Fn&& fn) {
  return detail::apply_at_impl(e, path.begin(), path.end(), fn);
}

// All canonical elements of a shape at weight [w]: diagonal classes at every
// node, so an element is exactly a tuple of leaf simplices [w] -> [p_i].
inline void enumerate_canonical_into(const TensorShape& shape, const Ordinal& w,
                                     std::vector<TensorElem>& out) {
  switch (shape.kind()) {
    case TensorShape::Kind::leaf: {
      for (const MonotoneMap& f : enumerate_maps(w, shape.leaf_target()))
        out.push_back(TensorElem::leaf(f));
      return;
    }
    case TensorShape::Kind::unit: {
      out.push_back(TensorElem::unit(w));
      return;
    }
    case TensorShape::Kind::node: {
      std::vector<TensorElem> lefts, rights;
      enumerate_canonical_into(shape.left(), w, lefts);
      enumerate_canonical_into(shape.right(), w, rights);
      KernelClass diag = diagonal_class(w);
      for (const TensorElem& l : lefts)
        for (const TensorElem& r : rights) out.push_back(TensorElem::node(diag, l, r));
      return;
    }
  }
}

[[nodiscard]] inline std::vector<TensorElem> enumerate_canonical(const TensorShape& shape,
                                                                 const Ordinal& w) {
  std::vector<TensorElem> out;
  enumerate_canonical_into(shape, w, out);
  return out;
}

// ---------------------------------------------------------------------------
// Associator and unitor instances: bounded raw enumeration of the iterated
// coend (the top-level weights x, y range up to a cutoff, the inner factors
// are canonical), normalized and deduplicated, plus the elementwise
// re-bracketing bijection.

struct BijectionReport {
  std::string name;
  Natural left_size = 0;
  Natural right_size = 0;
  Natural expected = 0;
  CheckReport checks;
  std::vector<std::pair<std::string, std::string>> pairs;

  [[nodiscard]] bool ok() const {
    return left_size == expected && right_size == expected && checks.passed();
  }
};

[[nodiscard]] inline BijectionReport associator_instance(const Ordinal& p, const Ordinal& q,
                                                         const Ordinal& r2, const Ordinal& w,
                                                         const Natural& level_bound) {
  BijectionReport report;
  report.name = "associator(" + format_ordinal(p) + "," + format_ordinal(q) + "," +
                format_ordinal(r2) + ";" + format_ordinal(w) + ")";
  report.expected = count_maps(w, p) * count_maps(w, q) * count_maps(w, r2);
  report.checks.name = report.name;

  std::set<TensorElem> left_set, right_set;
  for (Natural xv = 0; xv <= level_bound; ++xv) {
    Ordinal x(xv);
    for (Natural yv = 0; yv <= level_bound; ++yv) {
      Ordinal y(yv);
      for (const MonotoneMap& f : enumerate_maps(w, x)) {
        for (const MonotoneMap& g : enumerate_maps(w, y)) {
          KernelClass pi = eta_inverse(f, g);
          // left bracketing: (Delta^p (x) Delta^q) at x, leaf r2 at y
          KernelClass diag_x = diagonal_class(x);
          for (const MonotoneMap& u : enumerate_maps(x, p)) {
            for (const MonotoneMap& v : enumerate_maps(x, q)) {
              TensorElem inner =
                  TensorElem::node(diag_x, TensorElem::leaf(u), TensorElem::leaf(v));
              for (const MonotoneMap& h : enumerate_maps(y, r2))
                left_set.insert(
                    normalize_elem(TensorElem::node(pi, inner, TensorElem::leaf(h))));
            }
          }
          // right bracketing: leaf p at x, (Delta^q (x) Delta^r2) at y
          KernelClass diag_y = diagonal_class(y);
          for (const MonotoneMap& u : enumerate_maps(y, q)) {
            for (const MonotoneMap& v : enumerate_maps(y, r2)) {
              TensorElem inner =
                  TensorElem::node(diag_y, TensorElem::leaf(u), TensorElem::leaf(v));
              for (const MonotoneMap& h : enumerate_maps(x, p))
                right_set.insert(
                    normalize_elem(TensorElem::node(pi, TensorElem::leaf(h), inner)));
            }
          }
        }
      }
    }
  }
  report.left_size = Natural(left_set.size());
  report.right_size = Natural(right_set.size());

  // The re-bracketing bijection on canonical elements, with its inverse.
  TensorShape shape_l = TensorShape::node(
      TensorShape::node(TensorShape::leaf(p), TensorShape::leaf(q)), TensorShape::leaf(r2));
  std::set<TensorElem> image;
  for (const TensorElem& e : enumerate_canonical(shape_l, w)) {
    TensorElem forward = assoc_fd(e);
    TensorElem forward_canon = normalize_elem(forward);
    bool in_right = right_set.count(forward_canon) > 0;
    check(report.checks, in_right, [&] {
      return Counterexample{"associator_instance", format_elem(e), "image in right-hand coend",
                            format_elem(forward_canon)};
    });
    bool fresh = image.insert(forward_canon).second;
    check(report.checks, fresh, [&] {
      return Counterexample{"associator_instance", format_elem(e),
                            "distinct image (injectivity)", format_elem(forward_canon)};
    });
    TensorElem round_trip = normalize_elem(assoc_rv(forward));
    check(report.checks, round_trip == normalize_elem(e), [&] {
      return Counterexample{"associator_instance", format_elem(e), format_elem(normalize_elem(e)),
                            format_elem(round_trip)};
    });
    report.pairs.emplace_back(format_elem(normalize_elem(e)), format_elem(forward_canon));
  }
  check(report.checks, Natural(image.size()) == report.right_size, [&] {
    return Counterexample{"associator_instance", report.name,
                          "image covers the right-hand coend (" + report.right_size.str() + ")",
                          std::to_string(image.size())};
  });
  return report;
}

[[nodiscard]] inline BijectionReport unitor_instance(const Ordinal& q, const Ordinal& w,
                                                     const Natural& level_bound) {
  BijectionReport report;
  report.name = "unitor(" + format_ordinal(q) + ";" + format_ordinal(w) + ")";
  report.expected = count_maps(w, q);
  report.checks.name = report.name;

  std::set<TensorElem> left_set, right_set;
  for (Natural xv = 0; xv <= level_bound; ++xv) {
    Ordinal x(xv);
    for (Natural yv = 0; yv <= level_bound; ++yv) {
      Ordinal y(yv);
      for (const MonotoneMap& f : enumerate_maps(w, x)) {
        for (const MonotoneMap& g : enumerate_maps(w, y)) {
          KernelClass pi = eta_inverse(f, g);
          for (const MonotoneMap& h : enumerate_maps(y, q))
            left_set.insert(
                normalize_elem(TensorElem::node(pi, TensorElem::unit(x), TensorElem::leaf(h))));
          for (const MonotoneMap& h : enumerate_maps(x, q))
            right_set.insert(
                normalize_elem(TensorElem::node(pi, TensorElem::leaf(h), TensorElem::unit(y))));
        }
      }
    }
  }
  report.left_size = Natural(left_set.size());
  report.right_size = Natural(right_set.size());

  // lambda identifies J (x) Delta^q with Delta^q; rho the other side; and
  // lambda = rho . braid elementwise.
  std::set<TensorElem> image;
  TensorShape shape = TensorShape::node(TensorShape::unit(), TensorShape::leaf(q));
  for (const TensorElem& e : enumerate_canonical(shape, w)) {
    TensorElem via_lambda = normalize_elem(left_unitor(e));
    bool fresh = image.insert(via_lambda).second;
    check(report.checks, fresh, [&] {
      return Counterexample{"unitor_instance", format_elem(e), "distinct lambda image",
                            format_elem(via_lambda)};
    });
    TensorElem via_rho = normalize_elem(right_unitor(braid(e)));
    check(report.checks, via_lambda == via_rho, [&] {
      return Counterexample{"unitor_instance", format_elem(e), format_elem(via_lambda),
                            format_elem(via_rho)};
    });
    report.pairs.emplace_back(format_elem(normalize_elem(e)), format_elem(via_lambda));
  }
  check(report.checks, Natural(image.size()) == report.expected, [&] {
    return Counterexample{"unitor_instance", report.name,
                          "lambda image is all of Delta(w,q) (" + report.expected.str() + ")",
                          std::to_string(image.size())};
  });
  return report;
}

// ---------------------------------------------------------------------------
// Diagram composites, checked elementwise over canonical elements.

[[nodiscard]] inline CheckReport pentagon_check(const Natural& bound,
                                                std::size_t counterexample_limit = 10) {
  CheckReport report;
  report.name = "pentagon";
  report.counterexample_limit = counterexample_limit;
  for (Natural wv = 0; wv <= bound; ++wv) {
    Ordinal w(wv);
    for (Natural av = 0; av <= bound; ++av)
      for (Natural bv = 0; bv <= bound; ++bv)
        for (Natural cv = 0; cv <= bound; ++cv)
          for (Natural dv = 0; dv <= bound; ++dv) {
            TensorShape shape = TensorShape::node(
                TensorShape::node(
                    TensorShape::node(TensorShape::leaf(Ordinal(av)), TensorShape::leaf(Ordinal(bv))),
                    TensorShape::leaf(Ordinal(cv))),
                TensorShape::leaf(Ordinal(dv)));
            for (const TensorElem& e : enumerate_canonical(shape, w)) {
              // two edges: ((AB)C)D -> (AB)(CD) -> A(B(CD))
              TensorElem short_path = assoc_fd(assoc_fd(e));
              // three edges: ((AB)C)D -> (A(BC))D -> A((BC)D) -> A(B(CD))
              TensorElem long_path = apply_at(
                  assoc_fd(apply_at(e, {0}, [](const TensorElem& x) { return assoc_fd(x); })),
                  {1}, [](const TensorElem& x) { return assoc_fd(x); });
              check(report, elem_equivalent(short_path, long_path), [&] {
                return Counterexample{"pentagon", format_elem(e),
                                      format_elem(normalize_elem(short_path)),
                                      format_elem(normalize_elem(long_path))};
              });
            }
          }
  }
  return report;
}

[[nodiscard]] inline CheckReport triangle_check(const Natural& bound,
                                                std::size_t counterexample_limit = 10) {
  CheckReport report;
  report.name = "triangle";
  report.counterexample_limit = counterexample_limit;
  for (Natural wv = 0; wv <= bound; ++wv) {
    Ordinal w(wv);
    for (Natural av = 0; av <= bound; ++av)
      for (Natural bv = 0; bv <= bound; ++bv) {
        TensorShape shape = TensorShape::node(
            TensorShape::node(TensorShape::leaf(Ordinal(av)), TensorShape::unit()),
            TensorShape::leaf(Ordinal(bv)));
        for (const TensorElem& e : enumerate_canonical(shape, w)) {
          // (A 1) B -> A (1 B) -> A B
          TensorElem via_assoc =
              apply_at(assoc_fd(e), {1}, [](const TensorElem& x) { return left_unitor(x); });
          // (A 1) B -> A B
          TensorElem via_rho =
              apply_at(e, {0}, [](const TensorElem& x) { return right_unitor(x); });
          check(report, elem_equivalent(via_assoc, via_rho), [&] {
            return Counterexample{"triangle", format_elem(e),
                                  format_elem(normalize_elem(via_rho)),
                                  format_elem(normalize_elem(via_assoc))};
          });
        }
      }
  }
  return report;
}

[[nodiscard]] inline CheckReport hexagon_check(const Natural& bound,
                                               std::size_t counterexample_limit = 10) {
  CheckReport report;
  report.name = "hexagon";
  report.counterexample_limit = counterexample_limit;
  for (Natural wv = 0; wv <= bound; ++wv) {
    Ordinal w(wv);
    for (Natural av = 0; av <= bound; ++av)
      for (Natural bv = 0; bv <= bound; ++bv)
        for (Natural cv = 0; cv <= bound; ++cv) {
          TensorShape shape = TensorShape::node(
              TensorShape::node(TensorShape::leaf(Ordinal(av)), TensorShape::leaf(Ordinal(bv))),
              TensorShape::leaf(Ordinal(cv)));
          for (const TensorElem& e : enumerate_canonical(shape, w)) {
            // (AB)C -> A(BC) -> (BC)A -> B(CA)
            TensorElem one = assoc_fd(braid(assoc_fd(e)));
            // (AB)C -> (BA)C -> B(AC) -> B(CA)
            TensorElem two =
                apply_at(assoc_fd(apply_at(e, {0}, [](const TensorElem& x) { return braid(x); })),
                         {1}, [](const TensorElem& x) { return braid(x); });
            check(report, elem_equivalent(one, two), [&] {
              return Counterexample{"hexagon", format_elem(e),
                                    format_elem(normalize_elem(one)),
                                    format_elem(normalize_elem(two))};
            });
          }
        }
  }
  return report;
}

}  // namespace deltacat
