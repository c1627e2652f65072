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

#ifndef LOOPVIR_QUOTIENT_HPP
#define LOOPVIR_QUOTIENT_HPP

#include <algorithm>
#include <cstdint>
#include <memory>
#include <vector>

#include "laurent.hpp"

namespace loopvir {

/// The ring C[t, t^-1] / <P> for a polynomial P with P(0) != 0 and
/// deg P >= 1. Classes are represented by polynomials of degree < deg P.
class QuotientRing {
 public:
  explicit QuotientRing(const LaurentPoly& modulus) {
    if (modulus.is_zero() || modulus.valuation() < 0)
      throw usage_error("modulus must be an ordinary polynomial: " + to_string(modulus));
    if (is_zero(modulus.coefficient(0)))
      throw usage_error("modulus has zero constant term, t is not invertible: " + to_string(modulus));
    if (modulus.degree() < 1) throw usage_error("modulus must have degree >= 1: " + to_string(modulus));

    modulus_ = modulus.monic();
    degree_ = static_cast<int>(modulus_.degree());

    // t * (sum_{k>=1} p_k t^{k-1}) = -p_0
    LaurentPoly tail;
    for (const auto& [e, c] : modulus_.terms())
      if (e > 0) tail.add_term(e - 1, c);
    Scalar scale = -1 / modulus_.coefficient(0);
    t_inverse_ = tail * scale;

    table_.assign(static_cast<std::size_t>(degree_), {});
    for (int a = 0; a < degree_; ++a)
      for (int b = 0; b < degree_; ++b) table_[a].push_back(coordinates(power_of_t(a + b)));
  }

  const LaurentPoly& modulus() const noexcept { return modulus_; }
  int degree() const noexcept { return degree_; }

  /// Reduced representative of t^{-1}.
  const LaurentPoly& t_inverse() const noexcept { return t_inverse_; }

  /// Unique representative of degree < deg P of the class of p.
  LaurentPoly reduce(const LaurentPoly& p) const {
    LaurentPoly nonneg, result;
    std::int64_t lowest = 0;
    for (const auto& [e, c] : p.terms()) {
      if (e >= 0) nonneg.add_term(e, c);
      else lowest = std::min(lowest, e);
    }
    result += remainder(nonneg);
    if (lowest < 0) {
      LaurentPoly inv_power(Scalar(1));
      for (std::int64_t k = 1; k <= -lowest; ++k) {
        inv_power = remainder(inv_power * t_inverse_);
        const Scalar c = p.coefficient(-k);
        if (!is_zero(c)) result += inv_power * c;
      }
    }
    return result;
  }

  LaurentPoly power_of_t(std::int64_t e) const { return reduce(LaurentPoly::monomial(e)); }

  /// Coefficients of a reduced representative in the basis 1, t, ..., t^{d-1}.
  std::vector<Scalar> coordinates(const LaurentPoly& reduced) const {
    std::vector<Scalar> out(static_cast<std::size_t>(degree_));
    for (const auto& [e, c] : reduced.terms()) out.at(static_cast<std::size_t>(e)) = c;
    return out;
  }

  /// Coordinates of t^a * t^b for residues a, b in [0, d).
  const std::vector<Scalar>& product(int a, int b) const { return table_.at(a).at(b); }

  friend bool operator==(const QuotientRing& x, const QuotientRing& y) { return x.modulus_ == y.modulus_; }

 private:
  LaurentPoly remainder(const LaurentPoly& p) const {
    if (p.is_zero() || p.degree() < degree_) return p;
    return divmod(p, modulus_).second;
  }

  LaurentPoly modulus_;
  int degree_ = 0;
  LaurentPoly t_inverse_;
  std::vector<std::vector<std::vector<Scalar>>> table_;
};

using RingPtr = std::shared_ptr<const QuotientRing>;

inline RingPtr make_ring(const LaurentPoly& modulus) { return std::make_shared<const QuotientRing>(modulus); }

/// An element of C[t^{+-1}]/<P>, stored by its reduced representative.
class QuotientClass {
 public:
  QuotientClass(RingPtr ring, const LaurentPoly& p) : ring_(std::move(ring)), rep_(ring_->reduce(p)) {}

  const RingPtr& ring() const noexcept { return ring_; }
  const LaurentPoly& representative() const noexcept { return rep_; }

  friend QuotientClass operator+(const QuotientClass& a, const QuotientClass& b) {
    check_same(a, b);
    return QuotientClass(a.ring_, a.rep_ + b.rep_);
  }
  friend QuotientClass operator*(const QuotientClass& a, const QuotientClass& b) {
    check_same(a, b);
    return QuotientClass(a.ring_, a.rep_ * b.rep_);
  }
  friend bool operator==(const QuotientClass& a, const QuotientClass& b) {
    return *a.ring_ == *b.ring_ && a.rep_ == b.rep_;
  }

 private:
  static void check_same(const QuotientClass& a, const QuotientClass& b) {
    if (!(*a.ring_ == *b.ring_)) throw usage_error("quotient classes over different moduli");
  }

  RingPtr ring_;
  LaurentPoly rep_;
};

/// Reduces p modulo P. Throws usage_error when P(0) = 0 or deg P < 1.
inline QuotientClass quot_reduce(const LaurentPoly& p, const LaurentPoly& modulus) {
  return QuotientClass(make_ring(modulus), p);
}

}  // namespace loopvir

#endif  // LOOPVIR_QUOTIENT_HPP
