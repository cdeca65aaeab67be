/* Copyright 2026 The resforge Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "resforge/parse.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numeric>
#include <utility>
#include <vector>

#include "resforge/error.hpp"

namespace resforge {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ == s_.size();
  }
  bool accept(std::string_view token) {
    skip_space();
    if (s_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }
  std::int64_t integer() {
    skip_space();
    std::int64_t v = 0;
    const char* begin = s_.data() + pos_;
    const char* end = s_.data() + s_.size();
    if (begin != end && *begin == '+') ++begin;
    const auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc{}) fail("integer expected");
    pos_ = static_cast<std::size_t>(ptr - s_.data());
    return v;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse element '" + std::string(s_) + "' at position " +
                     std::to_string(pos_) + ": " + what);
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

KElem parse_term(Cursor& in, const std::shared_ptr<const RingCtx>& ring) {
  if (in.accept("[")) {
    std::vector<std::int64_t> coeffs{in.integer()};
    while (in.accept(",")) coeffs.push_back(in.integer());
    if (!in.accept("]")) in.fail("']' expected");
    if (coeffs.size() > ring->degree()) in.fail("more coefficients than the extension degree");
    const int prec = ring->precision();
    GrElem x = ring->zero();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      x.c[i] = ring->from_int(coeffs[i], prec).c[0];
    }
    if (ring->is_zero(x, prec)) {
      bool exact = true;
      for (auto c : coeffs) exact = exact && c == 0;
      if (exact) return KElem::zero(ring);
    }
    return KElem::from_ring(ring, 0, x, prec);
  }
  const std::int64_t num = in.integer();
  std::int64_t den = 1;
  if (in.accept("/")) {
    den = in.integer();
    if (den == 0) in.fail("zero denominator");
    if (den % static_cast<std::int64_t>(ring->p()) == 0) in.fail("denominator divisible by p");
  }
  return KElem::from_rational(ring, num, den);
}

// Shortest num/den congruent to c mod m with |num|, den <= sqrt(m/2), if any.
std::string rational_text(std::uint64_t c, std::int64_t m, std::uint32_t p) {
  std::int64_t r0 = m, r1 = static_cast<std::int64_t>(c), t0 = 0, t1 = 1;
  auto bound = static_cast<std::int64_t>(std::sqrt(static_cast<double>(m / 2)));
  while (bound * bound > m / 2) --bound;
  while ((bound + 1) * (bound + 1) <= m / 2) ++bound;
  while (r1 > bound) {
    const std::int64_t q = r0 / r1;
    r0 = std::exchange(r1, r0 - q * r1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  std::int64_t num = r1, den = t1;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (den == 0 || den > bound || den % p == 0 || std::gcd(num, den) != 1) {
    const auto v = static_cast<std::int64_t>(c);
    return std::to_string(v > m / 2 ? v - m : v);
  }
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

std::string format_unit(const KElem& x) {
  const RingCtx& ring = x.ring();
  const int prec = x.precision();
  const auto m = static_cast<std::int64_t>(ring.pow_p(prec));
  const auto signed_rep = [&](std::uint64_t c) {
    const auto v = static_cast<std::int64_t>(c % ring.pow_p(prec));
    return v > m / 2 ? v - m : v;
  };
  if (ring.degree() == 1) return rational_text(x.unit().c[0] % ring.pow_p(prec), m, ring.p());
  std::size_t len = ring.degree();
  while (len > 1 && x.unit().c[len - 1] % ring.pow_p(prec) == 0) --len;
  std::string s = "[";
  for (std::size_t i = 0; i < len; ++i) {
    if (i > 0) s += ",";
    s += std::to_string(signed_rep(x.unit().c[i]));
  }
  return s + "]";
}

}  // namespace

KElem parse_element(std::string_view text, const std::shared_ptr<const RingCtx>& ring) {
  Cursor in(text);
  if (in.done()) in.fail("empty element");
  KElem x;
  const bool negative = in.accept("-pi");
  if (negative || in.accept("pi")) {
    int k = 1;
    if (in.accept("^")) k = static_cast<int>(in.integer());
    x = KElem::uniformizer_power(ring, k);
    if (in.accept("*")) x = x * parse_term(in, ring);
    if (negative) x = -x;
  } else {
    x = parse_term(in, ring);
  }
  if (!in.done()) in.fail("trailing characters");
  return x;
}

std::string format_element(const KElem& x) {
  if (x.is_zero()) return "0";
  if (x.val() == 0) return format_unit(x);
  std::string s = x.val() == 1 ? "pi" : "pi^" + std::to_string(x.val());
  const std::string u = format_unit(x);
  if (u == "1" || u == "[1]") return s;
  return s + "*" + u;
}

KMatrix parse_matrix(const nlohmann::json& rows, const std::shared_ptr<const RingCtx>& ring) {
  if (!rows.is_array() || rows.empty()) throw ParseError("matrix: non-empty array of rows expected");
  const std::size_t m = rows.size();
  std::vector<KElem> entries;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != m) throw ParseError("matrix: square array of rows expected");
    for (const auto& e : row) {
      if (e.is_string()) {
        entries.push_back(parse_element(e.get<std::string>(), ring));
      } else if (e.is_number_integer()) {
        entries.push_back(KElem::from_int(ring, e.get<std::int64_t>()));
      } else {
        throw ParseError("matrix: entries must be element strings or integers");
      }
    }
  }
  return KMatrix(ring, m, m, std::move(entries));
}

nlohmann::json matrix_to_json(const KMatrix& a) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < a.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < a.cols(); ++c) row.push_back(format_element(a.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json lattice_to_json(const Lattice& a) { return matrix_to_json(a.basis()); }

Lattice lattice_from_json(const nlohmann::json& rows, const std::shared_ptr<const RingCtx>& ring) {
  return Lattice::span(parse_matrix(rows, ring));
}

}  // namespace resforge
