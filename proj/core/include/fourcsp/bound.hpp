// Copyright (c) fourcsp contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace fourcsp {

/// Arbitrary-precision rational. Values are kept in canonical (reduced) form.
using Rational = mpq_class;

/// Parses an integer or a `p/q` literal with an optional leading sign.
/// Throws std::invalid_argument on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

/// Reduced `p/q`, or just `p` when the denominator is 1.
std::string to_string(const Rational& value);

/// An upper bound: a finite rational or +infinity. -infinity is never stored;
/// a system whose bounds would diverge downwards is reported infeasible instead.
class Bound {
  public:
    Bound() = default; // +inf
    Bound(Rational value) : finite_(true), value_(std::move(value)) {} // NOLINT(google-explicit-constructor)
    Bound(long value) : finite_(true), value_(value) {}                // NOLINT(google-explicit-constructor)

    static Bound infinity() { return Bound(); }

    [[nodiscard]] bool is_finite() const noexcept { return finite_; }
    [[nodiscard]] bool is_infinite() const noexcept { return !finite_; }

    /// Precondition: is_finite().
    [[nodiscard]] const Rational& value() const;

    /// Replaces the bound with min(*this, candidate). Returns true if it changed.
    bool tighten(const Bound& candidate);

    /// Replaces the bound with min(*this, a + b), using scratch for the sum.
    /// Safe when a or b alias *this. Returns true if it changed.
    bool tighten_sum(const Bound& a, const Bound& b, Rational& scratch);

    /// "inf" or the reduced rational.
    [[nodiscard]] std::string str() const;
    static Bound parse(std::string_view text);

    friend Bound operator+(const Bound& a, const Bound& b);
    friend bool operator==(const Bound& a, const Bound& b);
    friend std::strong_ordering operator<=>(const Bound& a, const Bound& b);

  private:
    bool finite_ = false;
    Rational value_;
};

/// Scales a bound by a strictly positive rational.
Bound operator*(const Rational& scale, const Bound& bound);

inline const Bound& min(const Bound& a, const Bound& b) { return b < a ? b : a; }

std::ostream& operator<<(std::ostream& os, const Bound& bound);

} // namespace fourcsp
