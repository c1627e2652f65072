/*
   Copyright 2026 The loopvir Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef LOOPVIR_INTSERIES_HPP
#define LOOPVIR_INTSERIES_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "lie.hpp"

namespace loopvir {

// Virasoro modules of the intermediate series, indexed by k in Z. For
// V(alpha, beta) the index k labels v_{alpha+k}; for the others it labels v_k.

struct Vab {
  Scalar alpha, beta;
  friend bool operator==(const Vab&, const Vab&) = default;
};
struct Aa {
  Scalar a;
  friend bool operator==(const Aa&, const Aa&) = default;
};
struct Bb {
  Scalar b;
  friend bool operator==(const Bb&, const Bb&) = default;
};
/// V(0,0) modulo C v_0; the index-0 basis vector does not exist.
struct Vprime00 {
  friend bool operator==(const Vprime00&, const Vprime00&) = default;
};

using IntSeriesKind = std::variant<Vab, Aa, Bb, Vprime00>;

/// Raised when an action would touch the missing v_0 of V'(0,0).
class undefined_index : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

inline bool index_defined(const IntSeriesKind& kind, std::int64_t k) {
  return !std::holds_alternative<Vprime00>(kind) || k != 0;
}

/// Coefficient of d_i v_k in the standard basis (central elements act by 0).
inline Scalar virasoro_coeff(const IntSeriesKind& kind, std::int64_t i, std::int64_t k) {
  const Scalar ii(static_cast<long>(i)), kk(static_cast<long>(k));
  struct Visitor {
    const Scalar &ii, &kk;
    std::int64_t i, k;
    Scalar operator()(const Vab& v) const { return Scalar(v.alpha + kk + ii * v.beta); }
    Scalar operator()(const Aa& v) const { return k != 0 ? Scalar(kk + ii) : Scalar(ii * (ii + v.a)); }
    Scalar operator()(const Bb& v) const { return k + i != 0 ? kk : Scalar(-ii * (ii + v.b)); }
    Scalar operator()(const Vprime00&) const {
      if (k == 0 || k + i == 0) throw undefined_index("V'(0,0) has no basis vector v_0");
      return kk;
    }
  };
  return std::visit(Visitor{ii, kk, i, k}, kind);
}

/// d_0 eigenvalue of the basis vector with index k.
inline Scalar weight_of(const IntSeriesKind& kind, std::int64_t k) {
  if (const auto* v = std::get_if<Vab>(&kind)) return v->alpha + Scalar(static_cast<long>(k));
  return Scalar(static_cast<long>(k));
}

/// Evaluation module V(e): (d_i (x) t^m) u = e^m d_i u.
class EvalModule {
 public:
  EvalModule(IntSeriesKind kind, Scalar e) : kind_(std::move(kind)), e_(std::move(e)) {
    if (is_zero(e_)) throw usage_error("evaluation point must be nonzero");
  }

  const IntSeriesKind& kind() const noexcept { return kind_; }
  const Scalar& e() const noexcept { return e_; }

  friend bool operator==(const EvalModule&, const EvalModule&) = default;

 private:
  IntSeriesKind kind_;
  Scalar e_;
};

/// f(i, k, m) with (d_i (x) t^m) v_k = f(i, k, m) v_{k+i}.
inline Scalar coeff_f(const EvalModule& mod, std::int64_t i, std::int64_t k, std::int64_t m) {
  return power(mod.e(), m) * virasoro_coeff(mod.kind(), i, k);
}

struct ActionResult {
  Scalar coeff;
  std::int64_t index;
};

/// Action of one basis symbol on v_k.
inline ActionResult act(const EvalModule& mod, const Symbol& gen, std::int64_t k) {
  if (gen.central) return {Scalar(0), k};
  return {coeff_f(mod, gen.degree, k, gen.loop), k + gen.degree};
}

/// Sparse vector of an intermediate-series module: index -> coefficient.
using ModuleVector = std::map<std::int64_t, Scalar>;

/// Action of a Lie element of the full algebra on a module vector. Touching
/// the missing v_0 of V'(0,0) throws undefined_index.
inline ModuleVector act(const EvalModule& mod, const LieElement& x, const ModuleVector& v) {
  if (x.is_quotient()) throw usage_error("evaluation modules act through the full loop algebra");
  ModuleVector out;
  for (const auto& [s, c] : x.terms())
    for (const auto& [k, vk] : v) {
      if (s.central) continue;
      const auto r = act(mod, s, k);
      Scalar add = c * vk * r.coeff;
      if (sgn(add) == 0) continue;
      Scalar& slot = out[r.index];
      slot += add;
      if (sgn(slot) == 0) out.erase(r.index);
    }
  return out;
}

struct Relation51Violation {
  std::int64_t i, j, k, m, n;
  Scalar lhs, rhs;
};

struct Relation51Report {
  std::size_t tuples_checked = 0;
  std::vector<Relation51Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
};

struct Relation51Windows {
  Window i{-2, 2}, j{-2, 2}, k{-5, 5}, m{-3, 3}, n{-3, 3};
};

/// Checks f(i,k+j,m) f(j,k,n) - f(i,k,m) f(j,k+i,n) = (j-i) f(i+j,k,m+n) for
/// every tuple in the windows with i + j != 0 whose indices are all defined.
/// `f` is any coefficient function, so corrupted tables can be probed too.
inline Relation51Report relation51_check(const std::function<Scalar(std::int64_t, std::int64_t, std::int64_t)>& f,
                                         const std::function<bool(std::int64_t)>& defined,
                                         const Relation51Windows& w) {
  Relation51Report report;
  for (auto i = w.i.lo; i <= w.i.hi; ++i)
    for (auto j = w.j.lo; j <= w.j.hi; ++j) {
      if (i + j == 0) continue;
      for (auto k = w.k.lo; k <= w.k.hi; ++k) {
        if (!defined(k) || !defined(k + i) || !defined(k + j) || !defined(k + i + j)) continue;
        for (auto m = w.m.lo; m <= w.m.hi; ++m)
          for (auto n = w.n.lo; n <= w.n.hi; ++n) {
            ++report.tuples_checked;
            Scalar lhs = f(i, k + j, m) * f(j, k, n) - f(i, k, m) * f(j, k + i, n);
            Scalar rhs = Scalar(static_cast<long>(j - i)) * f(i + j, k, m + n);
            if (lhs != rhs) report.violations.push_back({i, j, k, m, n, lhs, rhs});
          }
      }
    }
  return report;
}

inline Relation51Report relation51_check(const EvalModule& mod, const Relation51Windows& w = {}) {
  return relation51_check([&mod](auto i, auto k, auto m) { return coeff_f(mod, i, k, m); },
                          [&mod](auto k) { return index_defined(mod.kind(), k); }, w);
}

struct ModuleAxiomReport {
  std::size_t cases_checked = 0;
  std::size_t failures = 0;

  bool ok() const noexcept { return failures == 0; }
};

/// x(y v_k) - y(x v_k) = [x, y] v_k for basis generators x, y (central ones
/// included) whose action never leaves the defined indices.
inline ModuleAxiomReport module_axiom_check(const EvalModule& mod, Window degrees, Window loops, Window indices) {
  ModuleAxiomReport report;
  const auto gens = basis_in_window(degrees, loops);
  for (const auto& x : gens)
    for (const auto& y : gens) {
      const Symbol sx = x.terms().begin()->first, sy = y.terms().begin()->first;
      for (auto k = indices.lo; k <= indices.hi; ++k) {
        const auto& kind = mod.kind();
        if (!index_defined(kind, k) || !index_defined(kind, k + sx.degree) || !index_defined(kind, k + sy.degree) ||
            !index_defined(kind, k + sx.degree + sy.degree))
          continue;
        ++report.cases_checked;
        const ModuleVector v{{k, Scalar(1)}};
        ModuleVector lhs = act(mod, x, act(mod, y, v));
        for (const auto& [idx, c] : act(mod, y, act(mod, x, v))) {
          Scalar& slot = lhs[idx];
          slot -= c;
          if (sgn(slot) == 0) lhs.erase(idx);
        }
        if (lhs != act(mod, bracket(x, y), v)) ++report.failures;
      }
    }
  return report;
}

/// Graded dual: A_a* = B_a, B_b* = A_b, V(a,b)* = V(a, 1-b).
inline IntSeriesKind dual(const IntSeriesKind& kind) {
  struct Visitor {
    IntSeriesKind operator()(const Vab& v) const { return Vab{v.alpha, Scalar(1 - v.beta)}; }
    IntSeriesKind operator()(const Aa& v) const { return Bb{v.a}; }
    IntSeriesKind operator()(const Bb& v) const { return Aa{v.b}; }
    IntSeriesKind operator()(const Vprime00& v) const { return v; }
  };
  return std::visit(Visitor{}, kind);
}

/// V(alpha, beta) with alpha shifted into [0, 1), and beta = 1 replaced by 0
/// when alpha is not an integer.
inline IntSeriesKind canonical_form(const IntSeriesKind& kind) {
  const auto* v = std::get_if<Vab>(&kind);
  if (!v) return kind;
  Scalar alpha = v->alpha - Scalar(floor_of(v->alpha));
  Scalar beta = v->beta;
  if (!is_zero(alpha) && beta == 1) beta = 0;
  return Vab{alpha, beta};
}

enum class Reducibility { irreducible, trivial_submodule, trivial_quotient };

struct ReducibilityReport {
  Reducibility structure = Reducibility::irreducible;
  std::string note;

  bool irreducible() const noexcept { return structure == Reducibility::irreducible; }
};

inline ReducibilityReport reducibility_flags(const IntSeriesKind& kind) {
  static const std::string sub = "has trivial submodule Cv0, quotient isomorphic to V'(0,0)";
  static const std::string quo = "has trivial quotient Cv0, submodule isomorphic to V'(0,0)";
  if (std::holds_alternative<Bb>(kind)) return {Reducibility::trivial_submodule, sub};
  if (std::holds_alternative<Aa>(kind)) return {Reducibility::trivial_quotient, quo};
  if (std::holds_alternative<Vprime00>(kind)) return {Reducibility::irreducible, "irreducible"};
  const auto v = std::get<Vab>(canonical_form(kind));
  if (is_zero(v.alpha) && is_zero(v.beta)) return {Reducibility::trivial_submodule, sub};
  if (is_zero(v.alpha) && v.beta == 1) return {Reducibility::trivial_quotient, quo};
  return {Reducibility::irreducible, "irreducible"};
}

/// Window test of irreducibility: every defined index in the window reaches
/// every other through nonzero actions of d_i, 0 < |i| <= max_step, without
/// leaving the window.
inline bool generates_on_window(const IntSeriesKind& kind, Window indices, std::int64_t max_step = 3) {
  std::vector<std::int64_t> nodes;
  for (auto k = indices.lo; k <= indices.hi; ++k)
    if (index_defined(kind, k)) nodes.push_back(k);
  if (nodes.empty()) return true;

  const auto reach_all = [&](bool forward) {
    std::vector<bool> seen(static_cast<std::size_t>(indices.width() + 1), false);
    std::vector<std::int64_t> stack{nodes.front()};
    seen[static_cast<std::size_t>(nodes.front() - indices.lo)] = true;
    while (!stack.empty()) {
      const auto k = stack.back();
      stack.pop_back();
      for (auto i = -max_step; i <= max_step; ++i) {
        if (i == 0) continue;
        // forward: edge k -> k+i; backward: edge k-i -> k
        const auto next = forward ? k + i : k - i;
        const auto from = forward ? k : next;
        if (!indices.contains(next) || !index_defined(kind, next)) continue;
        if (is_zero(virasoro_coeff(kind, i, from))) continue;
        const auto slot = static_cast<std::size_t>(next - indices.lo);
        if (!seen[slot]) {
          seen[slot] = true;
          stack.push_back(next);
        }
      }
    }
    for (auto k : nodes)
      if (!seen[static_cast<std::size_t>(k - indices.lo)]) return false;
    return true;
  };
  return reach_all(true) && reach_all(false);
}

inline std::string to_string(const IntSeriesKind& kind) {
  struct Visitor {
    std::string operator()(const Vab& v) const { return "V(" + to_string(v.alpha) + "," + to_string(v.beta) + ")"; }
    std::string operator()(const Aa& v) const { return "A(" + to_string(v.a) + ")"; }
    std::string operator()(const Bb& v) const { return "B(" + to_string(v.b) + ")"; }
    std::string operator()(const Vprime00&) const { return "V'(0,0)"; }
  };
  return std::visit(Visitor{}, kind);
}

inline std::string to_string(const EvalModule& m) { return to_string(m.kind()) + "@" + to_string(m.e()); }

}  // namespace loopvir

#endif  // LOOPVIR_INTSERIES_HPP
