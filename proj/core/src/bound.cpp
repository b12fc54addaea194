// Copyright (c) fourcsp contributors.
// SPDX-License-Identifier: Apache-2.0
#include "fourcsp/bound.hpp"

#include <cassert>
#include <cctype>
#include <ostream>
#include <stdexcept>

namespace fourcsp {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (const char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
        throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
    }
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) {
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
    Rational r(negative ? mpz_class(-n) : n, d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

const Rational& Bound::value() const {
    assert(finite_);
    return value_;
}

bool Bound::tighten(const Bound& candidate) {
    if (!candidate.finite_) {
        return false;
    }
    if (!finite_ || cmp(candidate.value_, value_) < 0) {
        finite_ = true;
        value_ = candidate.value_;
        return true;
    }
    return false;
}

bool Bound::tighten_sum(const Bound& a, const Bound& b, Rational& scratch) {
    if (!a.finite_ || !b.finite_) {
        return false;
    }
    mpq_add(scratch.get_mpq_t(), a.value_.get_mpq_t(), b.value_.get_mpq_t());
    if (!finite_ || cmp(scratch, value_) < 0) {
        finite_ = true;
        value_ = scratch;
        return true;
    }
    return false;
}

std::string Bound::str() const { return finite_ ? to_string(value_) : std::string("inf"); }

Bound Bound::parse(std::string_view text) {
    if (text == "inf" || text == "+inf") {
        return infinity();
    }
    return Bound(parse_rational(text));
}

Bound operator+(const Bound& a, const Bound& b) {
    if (!a.finite_ || !b.finite_) {
        return Bound::infinity();
    }
    return Bound(Rational(a.value_ + b.value_));
}

bool operator==(const Bound& a, const Bound& b) {
    if (a.finite_ != b.finite_) {
        return false;
    }
    return !a.finite_ || a.value_ == b.value_;
}

std::strong_ordering operator<=>(const Bound& a, const Bound& b) {
    if (!a.finite_ || !b.finite_) {
        if (a.finite_ == b.finite_) {
            return std::strong_ordering::equal;
        }
        return a.finite_ ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

Bound operator*(const Rational& scale, const Bound& bound) {
    assert(sgn(scale) > 0);
    if (bound.is_infinite()) {
        return bound;
    }
    return Bound(Rational(scale * bound.value()));
}

std::ostream& operator<<(std::ostream& os, const Bound& bound) { return os << bound.str(); }

} // namespace fourcsp
