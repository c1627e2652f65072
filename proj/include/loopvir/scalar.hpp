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

#ifndef LOOPVIR_SCALAR_HPP
#define LOOPVIR_SCALAR_HPP

#include <gmpxx.h>

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace loopvir {

/// Exact rational coefficient. Always canonical (lowest terms, positive
/// denominator) once it leaves this header's helpers.
using Scalar = mpq_class;

/// Raised on malformed caller input (bad text, mismatched algebras, invalid
/// parameters). The CLI maps it to exit code 2.
class usage_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Text that could not be parsed; carries the offending token.
class parse_error : public usage_error {
 public:
  parse_error(const std::string& what, std::string token)
      : usage_error(what + ": '" + token + "'"), token_(std::move(token)) {}

  const std::string& token() const noexcept { return token_; }

 private:
  std::string token_;
};

inline Scalar make_scalar(long num, long den = 1) {
  if (den == 0) throw usage_error("zero denominator");
  Scalar q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "p" or "p/q" with an optional sign. Surrounding whitespace is
/// ignored; anything else is rejected.
inline Scalar parse_scalar(std::string_view text) {
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  const std::string s(text.substr(b, e - b));
  if (s.empty()) throw parse_error("empty rational", s);

  std::size_t i = 0;
  if (s[i] == '+' || s[i] == '-') ++i;
  const auto digits = [&](std::size_t& pos) {
    const std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    return pos > start;
  };
  if (!digits(i)) throw parse_error("malformed rational", s);
  if (i < s.size()) {
    if (s[i] != '/') throw parse_error("malformed rational", s);
    ++i;
    if (!digits(i) || i != s.size()) throw parse_error("malformed rational", s);
  }

  std::string body = s[0] == '+' ? s.substr(1) : s;
  Scalar q;
  if (q.set_str(body, 10) != 0) throw parse_error("malformed rational", s);
  if (q.get_den() == 0) throw parse_error("zero denominator", s);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Scalar& q) { return q.get_str(10); }

inline bool is_zero(const Scalar& q) { return sgn(q) == 0; }

inline bool is_integer(const Scalar& q) { return q.get_den() == 1; }

/// a^k for any integer k; a must be nonzero when k < 0.
inline Scalar power(const Scalar& a, std::int64_t k) {
  if (k < 0) {
    if (is_zero(a)) throw std::domain_error("negative power of zero");
    Scalar inv = 1 / a;
    return power(inv, -k);
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), a.get_num_mpz_t(), static_cast<unsigned long>(k));
  mpz_pow_ui(den.get_mpz_t(), a.get_den_mpz_t(), static_cast<unsigned long>(k));
  Scalar r(num, den);
  r.canonicalize();
  return r;
}

/// Largest integer not exceeding q.
inline mpz_class floor_of(const Scalar& q) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline Scalar binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return Scalar(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Scalar(r);
}

}  // namespace loopvir

#endif  // LOOPVIR_SCALAR_HPP
