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

#ifndef LOOPVIR_LAURENT_HPP
#define LOOPVIR_LAURENT_HPP

#include <cctype>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "scalar.hpp"

namespace loopvir {

/// Finitely supported Laurent polynomial in t over the rationals. Zero
/// coefficients are never stored.
class LaurentPoly {
 public:
  using Exponent = std::int64_t;
  using Terms = std::map<Exponent, Scalar>;

  LaurentPoly() = default;
  explicit LaurentPoly(const Scalar& c) { add_term(0, c); }

  static LaurentPoly monomial(Exponent e, const Scalar& c = Scalar(1)) {
    LaurentPoly p;
    p.add_term(e, c);
    return p;
  }

  /// Polynomial with the given coefficients of t^0, t^1, ...
  template <class Range>
  static LaurentPoly from_coefficients(const Range& coeffs) {
    LaurentPoly p;
    Exponent e = 0;
    for (const auto& c : coeffs) p.add_term(e++, Scalar(c));
    return p;
  }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Scalar coefficient(Exponent e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  /// Highest exponent; undefined for the zero polynomial.
  Exponent degree() const {
    if (is_zero()) throw std::domain_error("degree of zero polynomial");
    return terms_.rbegin()->first;
  }

  /// Lowest exponent; undefined for the zero polynomial.
  Exponent valuation() const {
    if (is_zero()) throw std::domain_error("valuation of zero polynomial");
    return terms_.begin()->first;
  }

  Scalar leading_coefficient() const { return terms_.rbegin()->second; }

  void add_term(Exponent e, const Scalar& c) {
    if (is_zero_scalar(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (is_zero_scalar(it->second)) terms_.erase(it);
    }
  }

  Scalar evaluate(const Scalar& t) const {
    Scalar acc(0);
    for (const auto& [e, c] : terms_) acc += c * power(t, e);
    return acc;
  }

  /// Multiplies by t^k.
  LaurentPoly shifted(Exponent k) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
    return r;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  LaurentPoly& operator*=(const Scalar& s) {
    if (is_zero_scalar(s)) {
      terms_.clear();
    } else {
      for (auto& [e, c] : terms_) c *= s;
    }
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(LaurentPoly a) { return a *= Scalar(-1); }
  friend LaurentPoly operator*(LaurentPoly a, const Scalar& s) { return a *= s; }
  friend LaurentPoly operator*(const Scalar& s, LaurentPoly a) { return a *= s; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  LaurentPoly pow(unsigned n) const {
    LaurentPoly r(Scalar(1));
    for (unsigned i = 0; i < n; ++i) r = r * *this;
    return r;
  }

  /// Divides by the leading coefficient.
  LaurentPoly monic() const {
    if (is_zero()) return *this;
    Scalar inv = 1 / leading_coefficient();
    return *this * inv;
  }

 private:
  static bool is_zero_scalar(const Scalar& c) { return sgn(c) == 0; }

  Terms terms_;
};

/// Quotient and remainder of ordinary polynomials (no negative exponents).
inline std::pair<LaurentPoly, LaurentPoly> divmod(LaurentPoly num, const LaurentPoly& den) {
  if (den.is_zero()) throw std::domain_error("division by zero polynomial");
  if ((!num.is_zero() && num.valuation() < 0) || den.valuation() < 0)
    throw std::domain_error("divmod needs ordinary polynomials");
  const auto dd = den.degree();
  const Scalar lead = den.leading_coefficient();
  LaurentPoly quot;
  while (!num.is_zero() && num.degree() >= dd) {
    const auto shift = num.degree() - dd;
    Scalar f = num.leading_coefficient() / lead;
    quot.add_term(shift, f);
    num -= den.shifted(shift) * f;
  }
  return {quot, num};
}

inline std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto e = it->first;
    Scalar c = it->second;
    const bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (!first) out += negative ? "-" : "+";
    else if (negative) out += "-";
    first = false;

    if (e == 0) {
      out += to_string(c);
      continue;
    }
    if (c != 1) out += to_string(c);
    out += "t";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

/// Parses sums of terms like "1 + 2t^-1 - 1/2t^3" or "3*t^2". Whitespace is
/// ignored.
inline LaurentPoly parse_laurent(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw parse_error("empty polynomial", std::string(text));

  LaurentPoly p;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const std::size_t start = pos;
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (start != 0) {
      throw parse_error("expected '+' or '-' between terms", s.substr(pos));
    }
    // term extends to the next sign that is not an exponent sign
    std::size_t end = pos;
    while (end < s.size() && !((s[end] == '+' || s[end] == '-') && end > pos && s[end - 1] != '^')) ++end;
    const std::string term = s.substr(pos, end - pos);
    if (term.empty()) throw parse_error("empty term", s.substr(start));

    const auto tpos = term.find('t');
    Scalar coeff(1);
    LaurentPoly::Exponent expo = 0;
    if (tpos == std::string::npos) {
      coeff = parse_scalar(term);
    } else {
      std::string head = term.substr(0, tpos);
      if (!head.empty() && head.back() == '*') head.pop_back();
      if (!head.empty()) coeff = parse_scalar(head);
      const std::string tail = term.substr(tpos + 1);
      expo = 1;
      if (!tail.empty()) {
        if (tail[0] != '^' || tail.size() < 2) throw parse_error("malformed exponent", term);
        const std::string digits = tail.substr(1);
        std::size_t k = (digits[0] == '-' || digits[0] == '+') ? 1 : 0;
        if (k == digits.size()) throw parse_error("malformed exponent", term);
        for (std::size_t q = k; q < digits.size(); ++q)
          if (!std::isdigit(static_cast<unsigned char>(digits[q]))) throw parse_error("malformed exponent", term);
        try {
          expo = std::stoll(digits);
        } catch (const std::out_of_range&) {
          throw parse_error("exponent out of range", term);
        }
      }
    }
    p.add_term(expo, sign > 0 ? coeff : Scalar(-coeff));
    pos = end;
  }
  return p;
}

}  // namespace loopvir

#endif  // LOOPVIR_LAURENT_HPP
