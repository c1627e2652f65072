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

#ifndef LOOPVIR_LIE_HPP
#define LOOPVIR_LIE_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "quotient.hpp"

namespace loopvir {

/// Basis symbol d_i(j) = d_i (x) t^j, or c(j) = c (x) t^j when central.
struct Symbol {
  bool central = false;
  std::int64_t degree = 0;  // always 0 for central symbols
  std::int64_t loop = 0;

  static Symbol d(std::int64_t i, std::int64_t j) { return {false, i, j}; }
  static Symbol c(std::int64_t j) { return {true, 0, j}; }

  friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

inline std::string to_string(const Symbol& s) {
  if (s.central) return "c(" + std::to_string(s.loop) + ")";
  return "d(" + std::to_string(s.degree) + "," + std::to_string(s.loop) + ")";
}

/// The (i^3 - i)/12 coefficient of the central term.
inline Scalar central_charge_factor(std::int64_t i) {
  const Scalar ii(static_cast<long>(i));
  Scalar r = (ii * ii * ii - ii) / 12;
  return r;
}

/// Finite linear combination of basis symbols of the loop-Virasoro algebra,
/// or of its quotient by <P> when a ring is attached. In quotient mode every
/// loop index is a residue in [0, deg P).
class LieElement {
 public:
  using Terms = std::map<Symbol, Scalar>;

  LieElement() = default;
  explicit LieElement(RingPtr ring) : ring_(std::move(ring)) {}

  static LieElement d(std::int64_t i, std::int64_t j, RingPtr ring = nullptr) {
    LieElement x(std::move(ring));
    x.add(Symbol::d(i, j), Scalar(1));
    return x;
  }
  static LieElement c(std::int64_t j, RingPtr ring = nullptr) {
    LieElement x(std::move(ring));
    x.add(Symbol::c(j), Scalar(1));
    return x;
  }

  const RingPtr& ring() const noexcept { return ring_; }
  bool is_quotient() const noexcept { return ring_ != nullptr; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Adds coeff * s, reducing the loop index modulo P in quotient mode.
  void add(const Symbol& s, const Scalar& coeff) {
    if (loopvir::is_zero(coeff)) return;
    if (!ring_) {
      accumulate(s, coeff);
      return;
    }
    const LaurentPoly rep = ring_->power_of_t(s.loop);
    for (const auto& [r, c] : rep.terms()) accumulate(Symbol{s.central, s.degree, r}, coeff * c);
  }

  LieElement& operator+=(const LieElement& o) {
    check_compatible(*this, o);
    for (const auto& [s, c] : o.terms_) accumulate(s, c);
    return *this;
  }
  LieElement& operator-=(const LieElement& o) {
    check_compatible(*this, o);
    for (const auto& [s, c] : o.terms_) accumulate(s, -c);
    return *this;
  }
  LieElement& operator*=(const Scalar& k) {
    if (loopvir::is_zero(k)) terms_.clear();
    else
      for (auto& [s, c] : terms_) c *= k;
    return *this;
  }

  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
  friend LieElement operator*(const Scalar& k, LieElement a) { return a *= k; }

  friend bool operator==(const LieElement& a, const LieElement& b) {
    return same_algebra(a, b) && a.terms_ == b.terms_;
  }

  /// Degrees of the graded components present.
  std::vector<std::int64_t> degrees() const {
    std::vector<std::int64_t> out;
    for (const auto& [s, c] : terms_)
      if (out.empty() || out.back() != s.degree) out.push_back(s.degree);
    return out;
  }

  static bool same_algebra(const LieElement& a, const LieElement& b) {
    if (!a.ring_ || !b.ring_) return !a.ring_ && !b.ring_;
    return a.ring_ == b.ring_ || *a.ring_ == *b.ring_;
  }

  static void check_compatible(const LieElement& a, const LieElement& b) {
    if (!same_algebra(a, b)) throw usage_error("elements belong to different algebras");
  }

 private:
  void accumulate(const Symbol& s, const Scalar& c) {
    if (loopvir::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(s, c);
    if (!inserted) {
      it->second += c;
      if (loopvir::is_zero(it->second)) terms_.erase(it);
    }
  }

  RingPtr ring_;
  Terms terms_;
};

/// [d_i(j), d_k(l)] = (k - i) d_{i+k}(j+l) + delta_{i+k,0} (i^3 - i)/12 c(j+l),
/// with c central. Loop products are reduced modulo P in quotient mode.
inline void bracket_symbols(const Symbol& x, const Symbol& y, const Scalar& coeff, LieElement& out) {
  if (x.central || y.central) return;
  const std::int64_t loop = x.loop + y.loop;
  const std::int64_t sum = x.degree + y.degree;
  out.add(Symbol::d(sum, loop), coeff * Scalar(static_cast<long>(y.degree - x.degree)));
  if (sum == 0) out.add(Symbol::c(loop), coeff * central_charge_factor(x.degree));
}

inline LieElement bracket(const LieElement& x, const LieElement& y) {
  LieElement::check_compatible(x, y);
  LieElement out(x.ring());
  for (const auto& [sx, cx] : x.terms())
    for (const auto& [sy, cy] : y.terms()) bracket_symbols(sx, sy, cx * cy, out);
  return out;
}

inline std::string to_string(const LieElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [s, c] : x.terms()) {
    Scalar mag = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? "-" : "+";
    }
    if (mag != 1) out += to_string(mag) + "*";
    out += to_string(s);
  }
  return out;
}

/// Closed integer interval [lo, hi].
struct Window {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  bool empty() const noexcept { return hi < lo; }
  std::int64_t width() const noexcept { return hi - lo; }
  bool contains(std::int64_t v) const noexcept { return lo <= v && v <= hi; }
};

/// All basis elements d_i(j), c(j) with i, j in the windows; loop indices are
/// reduced when a ring is given.
inline std::vector<LieElement> basis_in_window(Window degrees, Window loops, const RingPtr& ring = nullptr) {
  std::vector<LieElement> out;
  for (auto i = degrees.lo; i <= degrees.hi; ++i)
    for (auto j = loops.lo; j <= loops.hi; ++j) out.push_back(LieElement::d(i, j, ring));
  for (auto j = loops.lo; j <= loops.hi; ++j) out.push_back(LieElement::c(j, ring));
  return out;
}

struct JacobiViolation {
  LieElement x, y, z, value;
};

struct JacobiReport {
  std::size_t triples_checked = 0;
  std::vector<JacobiViolation> violations;

  bool ok() const noexcept { return violations.empty(); }
};

inline LieElement jacobiator(const LieElement& x, const LieElement& y, const LieElement& z) {
  return bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y));
}

/// Evaluates the Jacobi sum on every unordered triple (with repetition) of
/// basis elements drawn from the windows.
inline JacobiReport jacobi_check(Window degrees, Window loops, const RingPtr& ring = nullptr) {
  JacobiReport report;
  if (degrees.empty() || loops.empty()) throw usage_error("jacobi_check needs nonempty windows");
  const auto basis = basis_in_window(degrees, loops, ring);
  // brackets of pairs are reused across triples
  std::vector<std::vector<LieElement>> pair(basis.size(), std::vector<LieElement>(basis.size()));
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = 0; b < basis.size(); ++b) pair[a][b] = bracket(basis[a], basis[b]);

  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a; b < basis.size(); ++b)
      for (std::size_t c = b; c < basis.size(); ++c) {
        LieElement sum = bracket(basis[a], pair[b][c]);
        sum += bracket(basis[b], pair[c][a]);
        sum += bracket(basis[c], pair[a][b]);
        ++report.triples_checked;
        if (!sum.is_zero()) report.violations.push_back({basis[a], basis[b], basis[c], sum});
      }
  return report;
}

/// Antisymmetry, grading and centrality on all basis pairs of the windows.
struct StructureReport {
  std::size_t pairs_checked = 0;
  std::size_t antisymmetry_failures = 0;
  std::size_t grading_failures = 0;
  std::size_t centrality_failures = 0;

  bool ok() const noexcept { return antisymmetry_failures + grading_failures + centrality_failures == 0; }
};

inline StructureReport structure_check(Window degrees, Window loops, const RingPtr& ring = nullptr) {
  StructureReport report;
  const auto basis = basis_in_window(degrees, loops, ring);
  for (const auto& x : basis)
    for (const auto& y : basis) {
      ++report.pairs_checked;
      const LieElement xy = bracket(x, y);
      if (!(xy + bracket(y, x)).is_zero()) ++report.antisymmetry_failures;

      const auto dx = x.degrees(), dy = y.degrees();
      for (auto k : xy.degrees())
        if (dx.size() != 1 || dy.size() != 1 || k != dx[0] + dy[0]) ++report.grading_failures;

      const bool central = y.terms().begin()->first.central;
      if (central && !xy.is_zero()) ++report.centrality_failures;
    }
  return report;
}

}  // namespace loopvir

#endif  // LOOPVIR_LIE_HPP
