/*
 *   Copyright 2026 The bhw Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "bhw/rational.hpp"

#include <algorithm>
#include <cctype>

#include "bhw/errors.hpp"

namespace bhw {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num_text = body.substr(0, slash);
  const std::string_view den_text =
      slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num_text) || !all_digits(den_text)) {
    throw DomainError("not a rational literal: '" + std::string(text) + "'");
  }
  const BigInt num(std::string{num_text});
  const BigInt den(std::string{den_text});
  if (den == 0) {
    throw DomainError("zero denominator in '" + std::string(text) + "'");
  }
  Rational value(num, den);
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value) {
  if (is_integral(value)) {
    return boost::multiprecision::numerator(value).str();
  }
  return format_fraction(value);
}

std::string format_fraction(const Rational& value) {
  return boost::multiprecision::numerator(value).str() + "/" +
         boost::multiprecision::denominator(value).str();
}

bool is_integral(const Rational& value) {
  return boost::multiprecision::denominator(value) == 1;
}

BigInt floor(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  BigInt q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) {
    q -= 1;
  }
  return q;
}

}  // namespace bhw
