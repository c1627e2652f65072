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

#ifndef LOOPVIR_VERMA_HPP
#define LOOPVIR_VERMA_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lie.hpp"
#include "linalg.hpp"
#include "pbw.hpp"
#include "quotient.hpp"
#include "sequence.hpp"

namespace loopvir {

/// phi on L_0: k |-> phi(d_0 (x) t^k) and k |-> phi(c (x) t^k).
struct HWFunctional {
  Sequence phi_d = ExpPolySeq{};
  Sequence phi_c = ExpPolySeq{};

  /// phi(d_0), the highest weight.
  Scalar lambda() const { return seq_eval(phi_d, 0); }

  /// Evaluation-module functional phi_d(k) = h e^k, phi_c(k) = c e^k.
  static HWFunctional evaluation(const Scalar& central_charge, const Scalar& h, const Scalar& e) {
    return {ExpPolySeq::geometric(e, h), ExpPolySeq::geometric(e, central_charge)};
  }

  friend bool operator==(const HWFunctional&, const HWFunctional&) = default;
};

/// Basis element d_degree (x) t^loop (or c (x) t^loop) of L/<P>, loop a residue.
struct Generator {
  int degree = 0;
  int loop = 0;
  bool central = false;

  static Generator d(int degree, int loop) { return {degree, loop, false}; }
  static Generator c(int loop) { return {0, loop, true}; }

  friend auto operator<=>(const Generator&, const Generator&) = default;
};

/// Verma module over Vir (x) C[t^{+-1}]/<P> induced from phi, together with
/// its maximal submodule J and the irreducible quotient V(phi).
///
/// Vectors at depth n are coordinate vectors in the PBW basis returned by
/// basis(n) (descending PBW order). The maximal submodule is built depth by
/// depth: J_0 = 0 and J_n is the set of vectors sent into J_{n-k} by every
/// raising generator of degree k in {1, 2}. Degrees 1 and 2 generate L_+ of
/// the quotient algebra; `redundant_check` uses every degree k <= n instead.
///
/// Caches are guarded by an internal mutex, so a module may be shared between
/// threads.
class VermaQuotientModule {
 public:
  struct Options {
    bool redundant_check = false;
  };

  VermaQuotientModule(const LaurentPoly& modulus, HWFunctional phi)
      : VermaQuotientModule(modulus, std::move(phi), Options{}) {}

  VermaQuotientModule(const LaurentPoly& modulus, HWFunctional phi, Options options)
      : ring_(make_ring(modulus)), phi_(std::move(phi)), options_(options) {
    if (!annihilates(ring_->modulus(), phi_.phi_d) || !annihilates(ring_->modulus(), phi_.phi_c))
      throw usage_error("functional is not annihilated by " + to_string(ring_->modulus()));
    for (int r = 0; r < ring_->degree(); ++r) {
      phi_d_.push_back(seq_eval(phi_.phi_d, r));
      phi_c_.push_back(seq_eval(phi_.phi_c, r));
    }
  }

  const RingPtr& ring() const noexcept { return ring_; }
  const HWFunctional& functional() const noexcept { return phi_; }
  int residues() const noexcept { return ring_->degree(); }

  /// [x, y] in L/<P> as a combination of generators.
  std::vector<std::pair<Generator, Scalar>> bracket(const Generator& x, const Generator& y) const {
    std::vector<std::pair<Generator, Scalar>> out;
    if (x.central || y.central) return out;
    const auto& loops = ring_->product(x.loop, y.loop);
    const int sum = x.degree + y.degree;
    const Scalar structure(y.degree - x.degree);
    const Scalar central = sum == 0 ? central_charge_factor(x.degree) : Scalar(0);
    for (int r = 0; r < residues(); ++r) {
      if (is_zero(loops[r])) continue;
      if (!is_zero(structure)) out.emplace_back(Generator::d(sum, r), structure * loops[r]);
      if (!is_zero(central)) out.emplace_back(Generator::c(r), central * loops[r]);
    }
    return out;
  }

  /// g (m v_0) expressed in the PBW basis.
  PBWCombination act(const Generator& g, const PBWMonomial& m) const {
    std::lock_guard lock(mutex_);
    return act_locked(g, m);
  }

  PBWCombination act(const Generator& g, const PBWCombination& v) const {
    std::lock_guard lock(mutex_);
    PBWCombination out;
    for (const auto& [m, c] : v) add_to(out, act_locked(g, m), c);
    return out;
  }

  const std::vector<PBWMonomial>& basis(int depth) const {
    std::lock_guard lock(mutex_);
    return basis_locked(depth);
  }

  /// Matrix of g : V_n -> V_{n-k} in PBW coordinates, g of degree k > 0.
  Matrix raising_matrix(const Generator& g, int depth) const {
    std::lock_guard lock(mutex_);
    return raising_matrix_locked(g, depth);
  }

  /// Coordinates of g v for v at the given depth; g of degree 1 or 2.
  Vector apply_raising(const Generator& g, int depth, const Vector& v) const {
    if (g.central || g.degree <= 0) throw usage_error("apply_raising needs a raising generator");
    if (g.loop < 0 || g.loop >= residues()) throw usage_error("loop index must be a residue");
    if (g.degree > depth) return {};
    return raising_matrix(g, depth) * v;
  }

  /// Basis of J_n, each vector with leading coefficient 1.
  std::vector<Vector> maximal_submodule_basis(int depth) const {
    std::lock_guard lock(mutex_);
    return level_locked(depth).submodule;
  }

  /// Map V_n -> V_n / J_n: its kernel is exactly J_n.
  Matrix quotient_projection(int depth) const {
    std::lock_guard lock(mutex_);
    return level_locked(depth).projection;
  }

  /// dim V(phi)_{lambda - n} for n = 0..max_depth.
  std::vector<std::size_t> irreducible_character(int max_depth) const {
    std::lock_guard lock(mutex_);
    std::vector<std::size_t> out;
    for (int n = 0; n <= max_depth; ++n) out.push_back(level_locked(n).projection.rows());
    return out;
  }

  /// PBW monomial -> coordinate vector at its depth.
  Vector coordinates(const PBWCombination& v, int depth) const {
    std::lock_guard lock(mutex_);
    const auto& index = index_locked(depth);
    Vector out(basis_locked(depth).size());
    for (const auto& [m, c] : v) {
      auto it = index.find(m);
      if (it == index.end()) throw std::logic_error("monomial of unexpected depth");
      out[it->second] = c;
    }
    return out;
  }

  PBWCombination combination(const Vector& coords, int depth) const {
    std::lock_guard lock(mutex_);
    const auto& b = basis_locked(depth);
    if (coords.size() != b.size()) throw usage_error("coordinate vector has wrong length");
    PBWCombination out;
    for (std::size_t i = 0; i < b.size(); ++i) add_to(out, b[i], coords[i]);
    return out;
  }

 private:
  struct Level {
    Matrix projection;
    std::vector<Vector> submodule;
  };

  PBWCombination act_locked(const Generator& g, const PBWMonomial& m) const {
    PBWCombination out;
    if (g.central) {
      add_to(out, m, phi_c_[g.loop]);
      return out;
    }
    const auto key = std::make_pair(g, m);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    if (g.degree < 0 && (m.empty() || Factor{-g.degree, g.loop} >= m.front())) {
      add_to(out, m.prepended(Factor{-g.degree, g.loop}), Scalar(1));
    } else if (m.empty()) {
      if (g.degree == 0) add_to(out, m, phi_d_[g.loop]);
    } else {
      // g f rest = f (g rest) + [g, f] rest
      const Generator f = Generator::d(-m.front().index, m.front().loop);
      const PBWMonomial rest = m.rest();
      for (const auto& [mm, c] : act_locked(g, rest)) add_to(out, act_locked(f, mm), c);
      for (const auto& [h, c] : bracket(g, f)) add_to(out, act_locked(h, rest), c);
    }
    memo_.emplace(key, out);
    return out;
  }

  const std::vector<PBWMonomial>& basis_locked(int depth) const {
    if (depth < 0) throw usage_error("negative depth");
    auto it = bases_.find(depth);
    if (it == bases_.end()) it = bases_.emplace(depth, weight_space_basis(residues(), depth)).first;
    return it->second;
  }

  const std::map<PBWMonomial, std::size_t>& index_locked(int depth) const {
    auto it = indices_.find(depth);
    if (it == indices_.end()) {
      std::map<PBWMonomial, std::size_t> idx;
      const auto& b = basis_locked(depth);
      for (std::size_t i = 0; i < b.size(); ++i) idx.emplace(b[i], i);
      it = indices_.emplace(depth, std::move(idx)).first;
    }
    return it->second;
  }

  Matrix raising_matrix_locked(const Generator& g, int depth) const {
    if (g.central || g.degree <= 0) throw usage_error("raising_matrix needs a raising generator");
    const auto& cols = basis_locked(depth);
    const int target = depth - g.degree;
    if (target < 0) return Matrix(0, cols.size());
    const auto& rows = index_locked(target);
    Matrix out(basis_locked(target).size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
      for (const auto& [m, coeff] : act_locked(g, cols[c])) out(rows.at(m), c) = coeff;
    return out;
  }

  const Level& level_locked(int depth) const {
    if (depth < 0) throw usage_error("negative depth");
    while (static_cast<int>(levels_.size()) <= depth) {
      const int n = static_cast<int>(levels_.size());
      Level level;
      if (n == 0) {
        level.projection = Matrix::identity(1);
      } else {
        Matrix stacked(0, basis_locked(n).size());
        const int top = options_.redundant_check ? n : std::min(n, 2);
        for (int k = 1; k <= top; ++k)
          for (int r = 0; r < residues(); ++r)
            stacked.append_rows(levels_[n - k].projection * raising_matrix_locked(Generator::d(k, r), n));
        level.projection = row_space(stacked);
        level.submodule = kernel_basis(stacked);
      }
      levels_.push_back(std::move(level));
    }
    return levels_[depth];
  }

  RingPtr ring_;
  HWFunctional phi_;
  Options options_;
  std::vector<Scalar> phi_d_, phi_c_;

  mutable std::recursive_mutex mutex_;
  mutable std::map<std::pair<Generator, PBWMonomial>, PBWCombination> memo_;
  mutable std::map<int, std::vector<PBWMonomial>> bases_;
  mutable std::map<int, std::map<PBWMonomial, std::size_t>> indices_;
  mutable std::vector<Level> levels_;
};

/// Free-function spellings of the module queries.
inline std::vector<PBWMonomial> weight_space_basis(const VermaQuotientModule& v, int depth) { return v.basis(depth); }

inline Vector apply_raising(const VermaQuotientModule& v, const Generator& g, int depth, const Vector& coords) {
  return v.apply_raising(g, depth, coords);
}

inline std::vector<Vector> maximal_submodule_basis(const VermaQuotientModule& v, int depth) {
  return v.maximal_submodule_basis(depth);
}

inline std::vector<std::size_t> irreducible_character(const VermaQuotientModule& v, int max_depth) {
  return v.irreducible_character(max_depth);
}

/// Harish-Chandra test: the lcm of the annihilators of phi_d and phi_c, or
/// nothing when either sequence has no annihilator.
inline std::optional<FactoredPoly> hc_test(const HWFunctional& phi) {
  auto pd = seq_annihilator(phi.phi_d);
  auto pc = seq_annihilator(phi.phi_c);
  if (!pd || !pc) return std::nullopt;
  return lcm(*pd, *pc);
}

struct VermaReducibility {
  bool reducible = false;
  std::optional<LaurentPoly> certificate;
};

/// The Verma module over the full loop algebra is reducible exactly when
/// phi_d has an annihilator; phi_c plays no role.
inline VermaReducibility verma_reducibility_test(const HWFunctional& phi) {
  auto p = seq_annihilator(phi.phi_d);
  if (!p) return {false, std::nullopt};
  return {true, p->expand()};
}

/// Looks for a nonzero Q supported on the exponent window with
/// phi(d_0 (x) t^k Q(t)) = 0 for all k, by solving the linear conditions on
/// the coefficients of Q directly. Returns the solution of least degree,
/// made monic.
inline std::optional<LaurentPoly> depth1_singular_search(const HWFunctional& phi, Window window) {
  if (window.empty()) throw usage_error("empty search window");
  const auto width = static_cast<std::size_t>(window.width() + 1);
  Matrix conditions(0, width);

  if (const auto* e = std::get_if<ExpPolySeq>(&phi.phi_d)) {
    // sum_w q_w a^w p(k + w) vanishes identically in k for every term (a, p)
    for (const auto& term : e->terms()) {
      const std::size_t deg = term.poly.size() - 1;
      std::vector<Vector> rows(deg + 1, Vector(width));
      for (auto w = window.lo; w <= window.hi; ++w) {
        const KPoly shifted = shift_argument(term.poly, w);
        const Scalar aw = power(term.base, w);
        for (std::size_t m = 0; m < shifted.size(); ++m) rows[m][static_cast<std::size_t>(w - window.lo)] = aw * shifted[m];
      }
      for (const auto& r : rows) conditions.append_row(r);
    }
  } else {
    // only finitely many k see the support of phi_d
    const auto& values = std::get<FiniteSeq>(phi.phi_d).values();
    std::map<std::int64_t, Vector> rows;
    for (const auto& [s, v] : values)
      for (auto w = window.lo; w <= window.hi; ++w) {
        auto [it, fresh] = rows.try_emplace(s - w, Vector(width));
        it->second[static_cast<std::size_t>(w - window.lo)] = seq_eval(phi.phi_d, s);
      }
    for (const auto& [k, r] : rows) conditions.append_row(r);
  }

  const auto kernel = kernel_basis(conditions);
  if (kernel.empty()) return std::nullopt;
  const Vector& q = kernel.front();
  LaurentPoly Q;
  for (std::size_t i = 0; i < width; ++i) Q.add_term(window.lo + static_cast<std::int64_t>(i), q[i]);
  return Q.monic();
}

/// Splits an exp-polynomial functional by base: one functional per distinct
/// base of phi_d or phi_c, collecting the terms with that base.
inline std::vector<HWFunctional> split_functional(const HWFunctional& phi) {
  if (!hc_test(phi)) throw usage_error("functional is not Harish-Chandra");
  const auto terms_of = [](const Sequence& s) -> std::vector<ExpTerm> {
    if (const auto* e = std::get_if<ExpPolySeq>(&s)) return e->terms();
    return {};  // zero finite sequence
  };
  std::map<Scalar, HWFunctional> parts;
  for (const auto& t : terms_of(phi.phi_d)) parts[t.base].phi_d = ExpPolySeq({t});
  for (const auto& t : terms_of(phi.phi_c)) parts[t.base].phi_c = ExpPolySeq({t});
  std::vector<HWFunctional> out;
  for (auto& [base, f] : parts) out.push_back(std::move(f));
  return out;
}

/// Modulus for V(phi): the Harish-Chandra certificate, or t - 1 when phi is
/// zero (any modulus works then).
inline LaurentPoly module_modulus(const HWFunctional& phi) {
  auto p = hc_test(phi);
  if (!p) throw usage_error("functional is not Harish-Chandra");
  if (p->degree() == 0) return parse_laurent("t-1");
  return p->expand();
}

/// Coefficientwise Cauchy product of graded dimensions, truncated to the
/// shorter length.
inline std::vector<std::size_t> convolve(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  const std::size_t len = std::min(a.size(), b.size());
  std::vector<std::size_t> out(len, 0);
  for (std::size_t n = 0; n < len; ++n)
    for (std::size_t i = 0; i <= n; ++i) out[n] += a[i] * b[n - i];
  return out;
}

struct TensorCharacterReport {
  std::vector<std::size_t> character;    // dim V(phi) by depth
  std::vector<std::vector<std::size_t>> factor_characters;
  std::vector<std::size_t> convolution;  // of the factor characters
  std::vector<int> mismatched_depths;

  bool ok() const noexcept { return mismatched_depths.empty(); }
};

/// Compares the character of V(phi) with the convolution of the characters
/// of V(phi_i) for the base-wise split of phi, each side by elimination.
inline TensorCharacterReport tensor_character_check(const HWFunctional& phi, int max_depth) {
  TensorCharacterReport report;
  report.character = VermaQuotientModule(module_modulus(phi), phi).irreducible_character(max_depth);
  report.convolution.assign(static_cast<std::size_t>(max_depth) + 1, 0);
  report.convolution[0] = 1;
  for (const auto& part : split_functional(phi)) {
    auto chi = VermaQuotientModule(module_modulus(part), part).irreducible_character(max_depth);
    report.convolution = convolve(report.convolution, chi);
    report.factor_characters.push_back(std::move(chi));
  }
  for (int n = 0; n <= max_depth; ++n)
    if (report.character[n] != report.convolution[n]) report.mismatched_depths.push_back(n);
  return report;
}

}  // namespace loopvir

#endif  // LOOPVIR_VERMA_HPP
