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

// Random inputs shared by the unit tests and the acceptance suite. Every
// generated object carries its defining data so oracles can work from it.

#ifndef LOOPVIR_TESTS_FIXTURES_HPP
#define LOOPVIR_TESTS_FIXTURES_HPP

#include <algorithm>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "loopvir/loopvir.hpp"
#include "oracles.hpp"

namespace fixtures {

using loopvir::Scalar;

inline Scalar small_rational(std::mt19937& rng, bool nonzero = false) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  for (;;) {
    Scalar q = loopvir::make_scalar(num(rng), den(rng));
    if (!nonzero || q != 0) return q;
  }
}

inline std::vector<oracle::Term> random_terms(std::mt19937& rng, int max_terms, int max_poly_degree) {
  static const std::vector<Scalar> pool = {Scalar(1), Scalar(-1), Scalar(2), Scalar(-2), Scalar(3),
                                           loopvir::make_scalar(1, 2), loopvir::make_scalar(-1, 3),
                                           loopvir::make_scalar(3, 2)};
  std::vector<Scalar> bases = pool;
  std::shuffle(bases.begin(), bases.end(), rng);
  const int count = std::uniform_int_distribution<int>(0, max_terms)(rng);
  std::vector<oracle::Term> out;
  for (int i = 0; i < count; ++i) {
    oracle::Term t{bases[static_cast<std::size_t>(i)], {}};
    const int deg = std::uniform_int_distribution<int>(0, max_poly_degree)(rng);
    for (int j = 0; j < deg; ++j) t.poly.push_back(small_rational(rng));
    t.poly.push_back(small_rational(rng, true));
    out.push_back(std::move(t));
  }
  return out;
}

inline loopvir::ExpPolySeq to_seq(const std::vector<oracle::Term>& terms) {
  std::vector<loopvir::ExpTerm> out;
  for (const auto& t : terms) out.push_back({t.base, t.poly});
  return loopvir::ExpPolySeq(out);
}

/// Minimal annihilator of a sum of exp-poly terms with distinct bases.
inline std::map<Scalar, int> expected_roots(const std::vector<oracle::Term>& a, const std::vector<oracle::Term>& b) {
  std::map<Scalar, int> roots;
  for (const auto* side : {&a, &b})
    for (const auto& t : *side) roots[t.base] = std::max(roots[t.base], static_cast<int>(t.poly.size()));
  return roots;
}

struct RandomExpPoly {
  std::vector<oracle::Term> d_terms, c_terms;
  loopvir::HWFunctional phi;
  std::map<Scalar, int> roots;

  int annihilator_degree() const {
    int deg = 0;
    for (const auto& [r, m] : roots) deg += m;
    return deg;
  }
};

/// Exp-poly functional with nonzero phi_d and annihilator degree in [1, max_degree].
inline RandomExpPoly random_exppoly_functional(std::mt19937& rng, int max_degree = 8) {
  for (;;) {
    RandomExpPoly f;
    f.d_terms = random_terms(rng, 3, 2);
    f.c_terms = random_terms(rng, 2, 1);
    if (f.d_terms.empty()) continue;
    f.roots = expected_roots(f.d_terms, f.c_terms);
    if (f.annihilator_degree() > max_degree) continue;
    f.phi = {to_seq(f.d_terms), to_seq(f.c_terms)};
    return f;
  }
}

struct RandomFinite {
  std::map<std::int64_t, Scalar> d_values, c_values;
  loopvir::HWFunctional phi;
};

/// Finitely supported functional with phi_d nonzero.
inline RandomFinite random_finite_functional(std::mt19937& rng) {
  RandomFinite f;
  std::uniform_int_distribution<int> pos(-6, 6), count(1, 4);
  for (int i = count(rng); i > 0; --i) f.d_values[pos(rng)] = small_rational(rng, true);
  for (int i = count(rng) - 1; i > 0; --i) f.c_values[pos(rng)] = small_rational(rng, true);
  f.phi = {loopvir::FiniteSeq(f.d_values), loopvir::FiniteSeq(f.c_values)};
  return f;
}

inline std::vector<oracle::Q> roots_polynomial(const std::map<Scalar, int>& roots) {
  return oracle::from_roots({roots.begin(), roots.end()});
}

inline std::vector<oracle::Q> coefficients(const loopvir::LaurentPoly& p) {
  std::vector<oracle::Q> out(static_cast<std::size_t>(p.degree()) + 1, oracle::Q(0));
  for (const auto& [e, c] : p.terms()) out.at(static_cast<std::size_t>(e)) = c;
  return out;
}

/// Random intermediate-series kind with small rational parameters.
inline loopvir::IntSeriesKind random_kind(std::mt19937& rng) {
  const auto big = [&]() -> Scalar { return small_rational(rng) * std::uniform_int_distribution<int>(-3, 3)(rng); };
  switch (std::uniform_int_distribution<int>(0, 5)(rng)) {
    case 0:
    case 1:
      return loopvir::Vab{small_rational(rng) + big(), small_rational(rng)};
    case 2:
      return loopvir::Vab{Scalar(std::uniform_int_distribution<int>(-3, 3)(rng)),
                          Scalar(std::uniform_int_distribution<int>(0, 1)(rng))};
    case 3:
      return loopvir::Aa{small_rational(rng)};
    case 4:
      return loopvir::Bb{small_rational(rng)};
    default:
      return loopvir::Vprime00{};
  }
}

}  // namespace fixtures

#endif  // LOOPVIR_TESTS_FIXTURES_HPP
