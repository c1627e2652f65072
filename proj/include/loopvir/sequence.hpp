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

#ifndef LOOPVIR_SEQUENCE_HPP
#define LOOPVIR_SEQUENCE_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "laurent.hpp"

namespace loopvir {

/// Polynomial in the integer variable k, coefficients of k^0, k^1, ...
using KPoly = std::vector<Scalar>;

inline void trim(KPoly& p) {
  while (!p.empty() && is_zero(p.back())) p.pop_back();
}

inline Scalar evaluate(const KPoly& p, const Scalar& k) {
  Scalar acc(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * k + *it;
  return acc;
}

/// Coefficients of k |-> p(k + shift).
inline KPoly shift_argument(const KPoly& p, std::int64_t shift) {
  KPoly out(p.size());
  const Scalar j(static_cast<long>(shift));
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (is_zero(p[s])) continue;
    for (std::size_t m = 0; m <= s; ++m)
      out[m] += p[s] * binomial(static_cast<std::int64_t>(s), static_cast<std::int64_t>(m)) *
                power(j, static_cast<std::int64_t>(s - m));
  }
  trim(out);
  return out;
}

/// Monic polynomial kept as a product of (t - root)^multiplicity with
/// distinct nonzero rational roots. The empty product is the unit 1.
class FactoredPoly {
 public:
  using Factors = std::map<Scalar, int>;

  FactoredPoly() = default;

  void multiply_by_root(const Scalar& root, int multiplicity) {
    if (is_zero(root)) throw usage_error("annihilator root must be nonzero");
    if (multiplicity <= 0) return;
    factors_[root] += multiplicity;
  }

  const Factors& factors() const noexcept { return factors_; }

  int degree() const {
    int d = 0;
    for (const auto& [r, m] : factors_) d += m;
    return d;
  }

  LaurentPoly expand() const {
    LaurentPoly p(Scalar(1));
    for (const auto& [root, mult] : factors_) {
      LaurentPoly linear = LaurentPoly::monomial(1) - LaurentPoly(root);
      p = p * linear.pow(static_cast<unsigned>(mult));
    }
    return p;
  }

  friend FactoredPoly lcm(const FactoredPoly& a, const FactoredPoly& b) {
    FactoredPoly r = a;
    for (const auto& [root, mult] : b.factors_) {
      int& slot = r.factors_[root];
      slot = std::max(slot, mult);
    }
    return r;
  }

  friend bool operator==(const FactoredPoly& a, const FactoredPoly& b) { return a.factors_ == b.factors_; }

 private:
  Factors factors_;
};

/// One term p(k) * base^k of an exp-polynomial sequence.
struct ExpTerm {
  Scalar base;
  KPoly poly;

  friend bool operator==(const ExpTerm&, const ExpTerm&) = default;
};

/// Two-sided sequence k |-> sum_i p_i(k) a_i^k. Terms are kept sorted by
/// base with distinct nonzero bases and nonzero trimmed polynomials.
class ExpPolySeq {
 public:
  ExpPolySeq() = default;

  explicit ExpPolySeq(std::vector<ExpTerm> terms) {
    for (auto& t : terms) add(std::move(t));
  }

  static ExpPolySeq geometric(const Scalar& base, const Scalar& scale = Scalar(1)) {
    return ExpPolySeq({ExpTerm{base, {scale}}});
  }

  const std::vector<ExpTerm>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Scalar operator()(std::int64_t k) const {
    Scalar acc(0);
    const Scalar kk(static_cast<long>(k));
    for (const auto& t : terms_) acc += evaluate(t.poly, kk) * power(t.base, k);
    return acc;
  }

  friend ExpPolySeq operator+(ExpPolySeq a, const ExpPolySeq& b) {
    for (const auto& t : b.terms_) a.add(t);
    return a;
  }

  friend bool operator==(const ExpPolySeq&, const ExpPolySeq&) = default;

 private:
  void add(ExpTerm t) {
    if (loopvir::is_zero(t.base)) throw usage_error("exp-polynomial base must be nonzero");
    trim(t.poly);
    auto it = std::lower_bound(terms_.begin(), terms_.end(), t.base,
                               [](const ExpTerm& x, const Scalar& b) { return x.base < b; });
    if (it != terms_.end() && it->base == t.base) {
      if (it->poly.size() < t.poly.size()) it->poly.resize(t.poly.size());
      for (std::size_t i = 0; i < t.poly.size(); ++i) it->poly[i] += t.poly[i];
      trim(it->poly);
      if (it->poly.empty()) terms_.erase(it);
    } else if (!t.poly.empty()) {
      terms_.insert(it, std::move(t));
    }
  }

  std::vector<ExpTerm> terms_;
};

/// Finitely supported two-sided sequence. Zeros are not stored.
class FiniteSeq {
 public:
  FiniteSeq() = default;
  explicit FiniteSeq(const std::map<std::int64_t, Scalar>& values) {
    for (const auto& [k, v] : values) set(k, v);
  }

  void set(std::int64_t k, const Scalar& v) {
    if (loopvir::is_zero(v)) values_.erase(k);
    else values_[k] = v;
  }

  const std::map<std::int64_t, Scalar>& values() const noexcept { return values_; }
  bool is_zero() const noexcept { return values_.empty(); }

  Scalar operator()(std::int64_t k) const {
    auto it = values_.find(k);
    return it == values_.end() ? Scalar(0) : it->second;
  }

  friend bool operator==(const FiniteSeq&, const FiniteSeq&) = default;

 private:
  std::map<std::int64_t, Scalar> values_;
};

using Sequence = std::variant<ExpPolySeq, FiniteSeq>;

inline Scalar seq_eval(const Sequence& f, std::int64_t k) {
  return std::visit([k](const auto& s) { return s(k); }, f);
}

inline bool is_zero(const Sequence& f) {
  return std::visit([](const auto& s) { return s.is_zero(); }, f);
}

/// Minimal monic annihilator with nonzero constant term, in factored form.
/// Absent for nonzero finitely supported sequences.
inline std::optional<FactoredPoly> seq_annihilator(const Sequence& f) {
  if (const auto* e = std::get_if<ExpPolySeq>(&f)) {
    FactoredPoly p;
    for (const auto& t : e->terms()) p.multiply_by_root(t.base, static_cast<int>(t.poly.size()));
    return p;
  }
  if (std::get<FiniteSeq>(f).is_zero()) return FactoredPoly{};
  return std::nullopt;
}

/// k |-> sum_j P_j f(k + j), the value of phi on t^k P(t).
inline Sequence apply_shift(const LaurentPoly& P, const Sequence& f) {
  if (const auto* e = std::get_if<ExpPolySeq>(&f)) {
    std::vector<ExpTerm> out;
    for (const auto& t : e->terms()) {
      KPoly acc;
      for (const auto& [j, pj] : P.terms()) {
        KPoly shifted = shift_argument(t.poly, j);
        const Scalar w = pj * power(t.base, j);
        if (acc.size() < shifted.size()) acc.resize(shifted.size());
        for (std::size_t m = 0; m < shifted.size(); ++m) acc[m] += w * shifted[m];
      }
      out.push_back(ExpTerm{t.base, std::move(acc)});
    }
    return ExpPolySeq(std::move(out));
  }
  const auto& fin = std::get<FiniteSeq>(f);
  FiniteSeq out;
  std::map<std::int64_t, Scalar> acc;
  for (const auto& [s, v] : fin.values())
    for (const auto& [j, pj] : P.terms()) acc[s - j] += pj * v;
  return FiniteSeq(acc);
}

/// True when sum_j P_j f(k + j) = 0 for every integer k (exact, not sampled).
inline bool annihilates(const LaurentPoly& P, const Sequence& f) { return is_zero(apply_shift(P, f)); }

}  // namespace loopvir

#endif  // LOOPVIR_SEQUENCE_HPP
