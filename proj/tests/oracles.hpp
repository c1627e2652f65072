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

// Reference computations used by the tests. They share only the scalar type
// with the library.

#ifndef LOOPVIR_TESTS_ORACLES_HPP
#define LOOPVIR_TESTS_ORACLES_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <tuple>
#include <utility>
#include <vector>

namespace oracle {

using Q = mpq_class;

inline Q qpow(const Q& a, std::int64_t k) {
  Q r(1), b = k < 0 ? Q(1 / a) : a;
  for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) r *= b;
  return r;
}

/// One exp-poly term base^k * (c0 + c1 k + ...).
struct Term {
  Q base;
  std::vector<Q> poly;
};

inline Q eval_terms(const std::vector<Term>& terms, std::int64_t k) {
  Q out(0);
  for (const auto& t : terms) {
    Q p(0), kk(1);
    for (const auto& c : t.poly) {
      p += c * kk;
      kk *= k;
    }
    out += qpow(t.base, k) * p;
  }
  return out;
}

/// Coefficients p_0..p_d of an ordinary polynomial; checks sum_j p_j f(k+j) = 0
/// for k in [lo, hi].
inline bool kills(const std::vector<Q>& p, const std::function<Q(std::int64_t)>& f, std::int64_t lo = -20,
                  std::int64_t hi = 20) {
  for (auto k = lo; k <= hi; ++k) {
    Q s(0);
    for (std::size_t j = 0; j < p.size(); ++j) s += p[j] * f(k + static_cast<std::int64_t>(j));
    if (s != 0) return false;
  }
  return true;
}

/// Product of (t - root)^mult, low degree first.
inline std::vector<Q> from_roots(const std::vector<std::pair<Q, int>>& roots) {
  std::vector<Q> p{Q(1)};
  for (const auto& [r, m] : roots)
    for (int i = 0; i < m; ++i) {
      std::vector<Q> next(p.size() + 1, Q(0));
      for (std::size_t j = 0; j < p.size(); ++j) {
        next[j + 1] += p[j];
        next[j] -= r * p[j];
      }
      p = std::move(next);
    }
  return p;
}

/// t^n mod P for monic P (low degree first), n any integer.
inline std::vector<Q> power_mod(std::int64_t n, const std::vector<Q>& P) {
  const std::size_t d = P.size() - 1;
  std::vector<Q> x(d, Q(0));
  x[0] = 1;
  if (n >= 0) {
    for (std::int64_t s = 0; s < n; ++s) {
      // multiply by t, then replace t^d by -(P_0 + ... + P_{d-1} t^{d-1})
      const Q top = x[d - 1];
      for (std::size_t i = d - 1; i > 0; --i) x[i] = x[i - 1];
      x[0] = 0;
      for (std::size_t i = 0; i < d; ++i) x[i] -= top * P[i];
    }
  } else {
    for (std::int64_t s = 0; s < -n; ++s) {
      // divide by t: x = x0 + t y, and 1/t = -(P_1 + P_2 t + ... + t^{d-1}) / P_0
      const Q x0 = x[0];
      for (std::size_t i = 0; i + 1 < d; ++i) x[i] = x[i + 1];
      x[d - 1] = 0;
      for (std::size_t i = 0; i < d; ++i) x[i] -= x0 * P[i + 1] / P[0];
    }
  }
  return x;
}

/// Rank by plain Gaussian elimination.
inline std::size_t rank(std::vector<std::vector<Q>> m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      const Q f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

/// Number of multisets of colored positive integers (d colors) summing to n,
/// as the product over i of sum_k binom(d+k-1, k) q^(ik).
inline std::uint64_t colored_partitions(int d, int n) {
  std::vector<std::uint64_t> series(static_cast<std::size_t>(n) + 1, 0);
  series[0] = 1;
  for (int i = 1; i <= n; ++i) {
    std::vector<std::uint64_t> next(series.size(), 0);
    for (int k = 0; i * k <= n; ++k) {
      mpz_class binom;
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(d + k - 1), static_cast<unsigned long>(k));
      const std::uint64_t b = binom.get_ui();
      for (int m = 0; m + i * k <= n; ++m) next[m + i * k] += b * series[m];
    }
    series = std::move(next);
  }
  return series[n];
}

/// Pairing-rank character of the irreducible highest-weight module for the
/// loop algebra: dimension at depth n is the rank of the matrix of
/// v0-coefficients of (raising word)(lowering monomial) v0. Letters carry
/// arbitrary loop indices; no quotient ring is involved.
class PairingCharacter {
 public:
  PairingCharacter(std::function<Q(std::int64_t)> phi_d, std::function<Q(std::int64_t)> phi_c, int residues)
      : phi_d_(std::move(phi_d)), phi_c_(std::move(phi_c)), residues_(residues) {}

  std::size_t dimension(int n) {
    if (n == 0) return 1;
    std::vector<Word> lowering, raising;
    lowering_monomials(n, n, 0, {}, lowering);
    raising_words(n, {}, raising);
    std::vector<std::vector<Q>> m;
    for (const auto& r : raising) {
      std::vector<Q> row;
      for (const auto& l : lowering) {
        Word w = r;
        w.insert(w.end(), l.begin(), l.end());
        row.push_back(value(w));
      }
      m.push_back(std::move(row));
    }
    return rank(std::move(m));
  }

  std::vector<std::size_t> character(int max_depth) {
    std::vector<std::size_t> out;
    for (int n = 0; n <= max_depth; ++n) out.push_back(dimension(n));
    return out;
  }

 private:
  // (degree, loop, central)
  using Letter = std::tuple<int, std::int64_t, bool>;
  using Word = std::vector<Letter>;

  void lowering_monomials(int remaining, int max_part, int min_color, Word prefix, std::vector<Word>& out) {
    if (remaining == 0) {
      out.push_back(prefix);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part)
      for (int color = (part == max_part ? min_color : 0); color < residues_; ++color) {
        Word next = prefix;
        next.emplace_back(-part, color, false);
        lowering_monomials(remaining - part, part, color, next, out);
      }
  }

  void raising_words(int remaining, Word prefix, std::vector<Word>& out) {
    if (remaining == 0) {
      out.push_back(prefix);
      return;
    }
    for (int step = 1; step <= std::min(2, remaining); ++step)
      for (int color = 0; color < residues_; ++color) {
        Word next = prefix;
        next.emplace_back(step, color, false);
        raising_words(remaining - step, next, out);
      }
  }

  // v0-coefficient of w v0, letters applied right to left
  Q value(const Word& w) {
    if (w.empty()) return Q(1);
    int total = 0;
    for (const auto& l : w) total += std::get<0>(l);
    if (total != 0) return Q(0);
    if (auto it = memo_.find(w); it != memo_.end()) return it->second;

    std::size_t p = w.size();
    for (std::size_t i = 0; i < w.size(); ++i)
      if (std::get<0>(w[i]) > 0) p = i;
    Q out(0);
    if (p == w.size()) {
      // only degree-zero letters remain
      out = 1;
      for (const auto& [deg, loop, central] : w) out *= central ? phi_c_(loop) : phi_d_(loop);
    } else if (p + 1 < w.size()) {
      // ... A B ... = ... B A ... + ... [A, B] ...
      const auto [adeg, aloop, acentral] = w[p];
      const auto [bdeg, bloop, bcentral] = w[p + 1];
      Word swapped = w;
      std::swap(swapped[p], swapped[p + 1]);
      out = value(swapped);
      if (!bcentral) {
        const auto with = [&](const Letter& l) {
          Word t(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
          t.push_back(l);
          t.insert(t.end(), w.begin() + static_cast<std::ptrdiff_t>(p) + 2, w.end());
          return t;
        };
        if (bdeg != adeg) out += Q(bdeg - adeg) * value(with(Letter{adeg + bdeg, aloop + bloop, false}));
        if (adeg + bdeg == 0)
          out += Q(adeg * adeg * adeg - adeg) / 12 * value(with(Letter{0, aloop + bloop, true}));
      }
    }
    memo_.emplace(w, out);
    return out;
  }

  std::function<Q(std::int64_t)> phi_d_, phi_c_;
  int residues_;
  std::map<Word, Q> memo_;
};

}  // namespace oracle

#endif  // LOOPVIR_TESTS_ORACLES_HPP
