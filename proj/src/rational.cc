// Copyright 2026 The quadlin Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "quadlin/rational.h"

#include <cctype>
#include <string>

#include "quadlin/errors.h"

namespace quadlin {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

std::string_view strip_sign(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return s;
}

Rational pow10(long e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? Rational(mpz_class(1), p) : Rational(p);
}

}  // namespace

bool is_decimal_literal(std::string_view text) {
  return text.find_first_of(".eE") != std::string_view::npos;
}

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw Error("empty number");
  const bool negative = text.front() == '-';
  std::string_view body = strip_sign(text);

  if (is_decimal_literal(body)) {
    std::string_view mantissa = body;
    long exponent = 0;
    if (auto epos = body.find_first_of("eE"); epos != std::string_view::npos) {
      mantissa = body.substr(0, epos);
      std::string_view exp_text = body.substr(epos + 1);
      const bool exp_negative = !exp_text.empty() && exp_text.front() == '-';
      exp_text = strip_sign(exp_text);
      if (!all_digits(exp_text) || exp_text.size() > 6) {
        throw Error("malformed exponent in '" + std::string(text) + "'");
      }
      exponent = std::stol(std::string(exp_text));
      if (exp_negative) exponent = -exponent;
    }
    std::string digits;
    long frac_len = 0;
    if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
      std::string_view int_part = mantissa.substr(0, dot);
      std::string_view frac_part = mantissa.substr(dot + 1);
      if ((!int_part.empty() && !all_digits(int_part)) ||
          (!frac_part.empty() && !all_digits(frac_part)) ||
          (int_part.empty() && frac_part.empty())) {
        throw Error("malformed decimal '" + std::string(text) + "'");
      }
      digits = std::string(int_part) + std::string(frac_part);
      frac_len = static_cast<long>(frac_part.size());
    } else {
      if (!all_digits(mantissa)) {
        throw Error("malformed decimal '" + std::string(text) + "'");
      }
      digits = std::string(mantissa);
    }
    Rational value(mpz_class(digits, 10));
    value *= pow10(exponent - frac_len);
    value.canonicalize();
    return negative ? Rational(-value) : value;
  }

  const auto slash = body.find('/');
  if (slash == std::string_view::npos) {
    if (!all_digits(body)) throw Error("malformed integer '" + std::string(text) + "'");
    Rational value{mpz_class(std::string(body), 10)};
    return negative ? Rational(-value) : value;
  }
  std::string_view num = body.substr(0, slash);
  std::string_view den = body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw Error("malformed fraction '" + std::string(text) + "'");
  }
  mpz_class d(std::string(den), 10);
  if (d == 0) throw Error("zero denominator in '" + std::string(text) + "'");
  Rational value(mpz_class(std::string(num), 10), d);
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

std::string fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string compact_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return fraction_string(q);
}

RationalVector zero_vector(std::size_t n) { return RationalVector(n, Rational(0)); }

}  // namespace quadlin
