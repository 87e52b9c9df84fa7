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

#ifndef BHW_RATIONAL_HPP
#define BHW_RATIONAL_HPP

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace bhw {

/// Exact arbitrary-precision fraction, always kept in canonical form.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

/// Accepts "p/q" (q > 0) or a plain integer literal, optionally signed.
/// Throws DomainError on anything else.
Rational parse_rational(std::string_view text);

/// "p" for integral values, "p/q" otherwise.
std::string to_string(const Rational& value);

/// Always "p/q", with q = 1 for integral values.
std::string format_fraction(const Rational& value);

bool is_integral(const Rational& value);

/// Largest integer not above `value`.
BigInt floor(const Rational& value);

}  // namespace bhw

#endif  // BHW_RATIONAL_HPP
