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

// Text and JSON encodings shared by the command-line tool:
//   rationals      "p" or "p/q"
//   polynomials    "1 + 2t^-1 - 1/2t^3"
//   Lie elements   "3/2*d(1,0) - c(2)"
//   module kinds   "V(1/3,2/5)@2", "A(3)@1", "B(0)@-1", "V'(0,0)@2"
//   windows        "-2..2"
//   sequences      {"exppoly": [{"base": "-1", "poly": ["0", "1"]}]} or {"finite": {"0": "1"}}
//   functionals    {"phi_d": <sequence>, "phi_c": <sequence>}

#ifndef LOOPVIR_TEXT_HPP
#define LOOPVIR_TEXT_HPP

#include <cctype>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "intseries.hpp"
#include "lie.hpp"
#include "sequence.hpp"
#include "verma.hpp"

namespace loopvir {

using json = nlohmann::json;

namespace detail {

inline std::string strip_spaces(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  return s;
}

inline std::int64_t parse_int(const std::string& s, const std::string& context) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) throw parse_error("expected an integer", context);
  for (std::size_t k = i; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) throw parse_error("expected an integer", context);
  try {
    return std::stoll(s);
  } catch (const std::out_of_range&) {
    throw parse_error("integer out of range", context);
  }
}

}  // namespace detail

/// "a..b" with integers a <= b.
inline Window parse_window(std::string_view text) {
  const std::string s = detail::strip_spaces(text);
  const auto dots = s.find("..");
  if (dots == std::string::npos) throw parse_error("window must look like a..b", s);
  Window w{detail::parse_int(s.substr(0, dots), s), detail::parse_int(s.substr(dots + 2), s)};
  if (w.empty()) throw parse_error("window is empty", s);
  return w;
}

/// Parses sums of "coef*d(i,j)" and "coef*c(j)" terms; "0" is the zero element.
inline LieElement parse_element(std::string_view text, const RingPtr& ring = nullptr) {
  const std::string s = detail::strip_spaces(text);
  LieElement x(ring);
  if (s.empty()) throw parse_error("empty element", s);
  if (s == "0") return x;

  std::size_t pos = 0;
  while (pos < s.size()) {
    Scalar sign(1);
    if (s[pos] == '+' || s[pos] == '-') {
      if (s[pos] == '-') sign = -1;
      ++pos;
    } else if (pos != 0) {
      throw parse_error("expected '+' or '-' between terms", s.substr(pos));
    }
    const auto close = s.find(')', pos);
    if (close == std::string::npos) throw parse_error("unterminated term", s.substr(pos));
    const std::string term = s.substr(pos, close + 1 - pos);
    pos = close + 1;

    Scalar coeff(1);
    std::string sym = term;
    if (const auto star = term.find('*'); star != std::string::npos) {
      coeff = parse_scalar(term.substr(0, star));
      sym = term.substr(star + 1);
    }
    if (sym.size() < 4 || sym[1] != '(' || sym.back() != ')') throw parse_error("malformed basis symbol", term);
    const std::string args = sym.substr(2, sym.size() - 3);
    if (sym[0] == 'd') {
      const auto comma = args.find(',');
      if (comma == std::string::npos) throw parse_error("d(i,j) needs two indices", term);
      x.add(Symbol::d(detail::parse_int(args.substr(0, comma), term), detail::parse_int(args.substr(comma + 1), term)),
            sign * coeff);
    } else if (sym[0] == 'c') {
      x.add(Symbol::c(detail::parse_int(args, term)), sign * coeff);
    } else {
      throw parse_error("unknown basis symbol", term);
    }
  }
  return x;
}

/// Kind with an optional "@e" evaluation point.
struct KindSpec {
  IntSeriesKind kind;
  std::optional<Scalar> e;
};

inline KindSpec parse_kind(std::string_view text) {
  const std::string s = detail::strip_spaces(text);
  KindSpec out{Vprime00{}, std::nullopt};
  std::string body = s;
  if (const auto at = s.find('@'); at != std::string::npos) {
    body = s.substr(0, at);
    out.e = parse_scalar(s.substr(at + 1));
    if (is_zero(*out.e)) throw parse_error("evaluation point must be nonzero", s);
  }
  const auto open = body.find('(');
  if (open == std::string::npos || body.back() != ')') throw parse_error("malformed module kind", s);
  const std::string name = body.substr(0, open);
  const std::string args = body.substr(open + 1, body.size() - open - 2);
  if (name == "V") {
    const auto comma = args.find(',');
    if (comma == std::string::npos) throw parse_error("V(a,b) needs two parameters", s);
    out.kind = Vab{parse_scalar(args.substr(0, comma)), parse_scalar(args.substr(comma + 1))};
  } else if (name == "A") {
    out.kind = Aa{parse_scalar(args)};
  } else if (name == "B") {
    out.kind = Bb{parse_scalar(args)};
  } else if (name == "V'") {
    if (args != "0,0") throw parse_error("only V'(0,0) is defined", s);
    out.kind = Vprime00{};
  } else {
    throw parse_error("unknown module kind", s);
  }
  return out;
}

namespace detail {

inline Scalar scalar_from_json(const json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long>());
  throw parse_error("expected a rational string", j.dump());
}

inline ExpPolySeq exppoly_from_json(const json& arr) {
  if (!arr.is_array()) throw parse_error("exppoly must be an array", arr.dump());
  std::vector<ExpTerm> terms;
  for (const auto& t : arr) {
    if (!t.is_object() || !t.contains("base") || !t.contains("poly") || !t["poly"].is_array())
      throw parse_error("exppoly term needs base and poly", t.dump());
    ExpTerm term{scalar_from_json(t["base"]), {}};
    if (is_zero(term.base)) throw parse_error("exppoly base must be nonzero", t.dump());
    for (const auto& c : t["poly"]) term.poly.push_back(scalar_from_json(c));
    terms.push_back(std::move(term));
  }
  return ExpPolySeq(std::move(terms));
}

}  // namespace detail

/// Accepts {"exppoly": [...]}, {"finite": {...}} or a bare exppoly array.
inline Sequence sequence_from_json(const json& j) {
  if (j.is_array()) return detail::exppoly_from_json(j);
  if (!j.is_object() || j.size() != 1) throw parse_error("sequence must be {\"exppoly\":...} or {\"finite\":...}", j.dump());
  if (j.contains("exppoly")) return detail::exppoly_from_json(j["exppoly"]);
  if (j.contains("finite")) {
    const auto& f = j["finite"];
    if (!f.is_object()) throw parse_error("finite sequence must be an object", f.dump());
    FiniteSeq seq;
    for (const auto& [k, v] : f.items()) seq.set(detail::parse_int(k, k), detail::scalar_from_json(v));
    return seq;
  }
  throw parse_error("unknown sequence encoding", j.dump());
}

inline json to_json(const Sequence& s) {
  if (const auto* e = std::get_if<ExpPolySeq>(&s)) {
    json arr = json::array();
    for (const auto& t : e->terms()) {
      json poly = json::array();
      for (const auto& c : t.poly) poly.push_back(to_string(c));
      arr.push_back({{"base", to_string(t.base)}, {"poly", poly}});
    }
    return {{"exppoly", arr}};
  }
  json values = json::object();
  for (const auto& [k, v] : std::get<FiniteSeq>(s).values()) values[std::to_string(k)] = to_string(v);
  return {{"finite", values}};
}

inline json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw parse_error("malformed JSON", text);
  }
}

inline Sequence parse_sequence(const std::string& text) { return sequence_from_json(parse_json_text(text)); }

/// phi_c may be omitted and then defaults to zero.
inline HWFunctional functional_from_json(const json& j) {
  if (!j.is_object() || !j.contains("phi_d")) throw parse_error("functional needs phi_d", j.dump());
  for (const auto& [key, value] : j.items())
    if (key != "phi_d" && key != "phi_c") throw parse_error("unknown functional field", key);
  HWFunctional phi;
  phi.phi_d = sequence_from_json(j["phi_d"]);
  if (j.contains("phi_c")) phi.phi_c = sequence_from_json(j["phi_c"]);
  return phi;
}

inline HWFunctional parse_functional(const std::string& text) { return functional_from_json(parse_json_text(text)); }

inline json to_json(const HWFunctional& phi) { return {{"phi_c", to_json(phi.phi_c)}, {"phi_d", to_json(phi.phi_d)}}; }

}  // namespace loopvir

#endif  // LOOPVIR_TEXT_HPP
