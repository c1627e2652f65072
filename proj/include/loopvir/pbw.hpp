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

#ifndef LOOPVIR_PBW_HPP
#define LOOPVIR_PBW_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "scalar.hpp"

namespace loopvir {

/// Lowering generator d_{-index} (x) t^loop, index >= 1, loop a residue.
struct Factor {
  int index = 1;
  int loop = 0;

  friend auto operator<=>(const Factor&, const Factor&) = default;
};

/// Ordered product (d_{-i_1} (x) t^{j_1}) ... (d_{-i_r} (x) t^{j_r}) with
/// (i_s, j_s) >= (i_{s+1}, j_{s+1}). Indexes a basis vector of a Verma module.
class PBWMonomial {
 public:
  PBWMonomial() = default;

  explicit PBWMonomial(std::vector<Factor> factors) : factors_(std::move(factors)) {
    for (std::size_t s = 0; s + 1 < factors_.size(); ++s)
      if (factors_[s] < factors_[s + 1]) throw usage_error("PBW factors must be non-increasing");
    for (const auto& f : factors_)
      if (f.index < 1) throw usage_error("PBW factors must be lowering generators");
  }

  const std::vector<Factor>& factors() const noexcept { return factors_; }
  bool empty() const noexcept { return factors_.empty(); }
  int height() const noexcept { return static_cast<int>(factors_.size()); }

  int depth() const noexcept {
    int d = 0;
    for (const auto& f : factors_) d += f.index;
    return d;
  }

  const Factor& front() const { return factors_.front(); }

  /// The monomial without its first (largest) factor.
  PBWMonomial rest() const {
    PBWMonomial m;
    m.factors_.assign(factors_.begin() + 1, factors_.end());
    return m;
  }

  /// f * this, valid when f is at least the first factor.
  PBWMonomial prepended(const Factor& f) const {
    PBWMonomial m;
    m.factors_.reserve(factors_.size() + 1);
    m.factors_.push_back(f);
    m.factors_.insert(m.factors_.end(), factors_.begin(), factors_.end());
    return m;
  }

  /// Total order: compare (r, i_1..i_r, j_1..j_r) lexicographically.
  friend std::strong_ordering operator<=>(const PBWMonomial& a, const PBWMonomial& b) {
    if (auto c = a.height() <=> b.height(); c != 0) return c;
    for (std::size_t s = 0; s < a.factors_.size(); ++s)
      if (auto c = a.factors_[s].index <=> b.factors_[s].index; c != 0) return c;
    for (std::size_t s = 0; s < a.factors_.size(); ++s)
      if (auto c = a.factors_[s].loop <=> b.factors_[s].loop; c != 0) return c;
    return std::strong_ordering::equal;
  }
  friend bool operator==(const PBWMonomial& a, const PBWMonomial& b) { return a.factors_ == b.factors_; }

 private:
  std::vector<Factor> factors_;
};

inline std::strong_ordering pbw_compare(const PBWMonomial& a, const PBWMonomial& b) { return a <=> b; }

inline std::string to_string(const PBWMonomial& m) {
  if (m.empty()) return "1";
  std::string out;
  for (const auto& f : m.factors()) {
    if (!out.empty()) out += "*";
    out += "d(" + std::to_string(-f.index) + "," + std::to_string(f.loop) + ")";
  }
  return out;
}

/// Element of U(L_-) v_0 in PBW coordinates; iteration is ascending in the
/// PBW order.
using PBWCombination = std::map<PBWMonomial, Scalar>;

inline void add_to(PBWCombination& x, const PBWMonomial& m, const Scalar& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = x.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) x.erase(it);
  }
}

inline void add_to(PBWCombination& x, const PBWCombination& y, const Scalar& scale = Scalar(1)) {
  if (sgn(scale) == 0) return;
  for (const auto& [m, c] : y) add_to(x, m, c * scale);
}

/// Highest term hm(X) = a_1 X_1; nothing for X = 0.
inline std::optional<std::pair<Scalar, PBWMonomial>> highest_term(const PBWCombination& x) {
  if (x.empty()) return std::nullopt;
  const auto& [m, c] = *x.rbegin();
  return std::make_pair(c, m);
}

/// ht(X), with ht(0) = -1.
inline int height(const PBWCombination& x) { return x.empty() ? -1 : x.rbegin()->first.height(); }

/// Membership in U^r_{-s}: every term has depth s and height at most r.
inline bool in_filtration(const PBWCombination& x, int max_height, int depth) {
  for (const auto& [m, c] : x)
    if (m.depth() != depth || m.height() > max_height) return false;
  return true;
}

namespace detail {

inline void enumerate_monomials(int remaining, Factor bound, int residues, std::vector<Factor>& prefix,
                                std::vector<PBWMonomial>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int i = std::min(remaining, bound.index); i >= 1; --i) {
    const int top_loop = i == bound.index ? bound.loop : residues - 1;
    for (int j = top_loop; j >= 0; --j) {
      prefix.push_back({i, j});
      enumerate_monomials(remaining - i, {i, j}, residues, prefix, out);
      prefix.pop_back();
    }
  }
}

}  // namespace detail

/// All PBW monomials of the given depth with loop residues in [0, residues),
/// in descending PBW order.
inline std::vector<PBWMonomial> weight_space_basis(int residues, int depth) {
  std::vector<PBWMonomial> out;
  std::vector<Factor> prefix;
  if (depth < 0 || residues < 1) return out;
  detail::enumerate_monomials(depth, {depth, residues - 1}, residues, prefix, out);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a > b; });
  return out;
}

/// Coefficient of q^n in prod_{i>=1} (1 - q^i)^{-d}.
inline std::uint64_t pbw_dimension(int d, int n) {
  if (n < 0) return 0;
  std::vector<std::uint64_t> series(static_cast<std::size_t>(n) + 1, 0);
  series[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int color = 0; color < d; ++color)
      for (int m = part; m <= n; ++m) series[m] += series[m - part];
  return series[n];
}

}  // namespace loopvir

#endif  // LOOPVIR_PBW_HPP
