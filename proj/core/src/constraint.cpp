// Copyright (c) fourcsp contributors.
// SPDX-License-Identifier: Apache-2.0
#include "fourcsp/constraint.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace fourcsp {

bool NormalVector::is_zero() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](int c) { return c == 0; });
}

NormalVector NormalVector::operator-() const {
    std::vector<int> out(coeffs_.size());
    std::transform(coeffs_.begin(), coeffs_.end(), out.begin(), [](int c) { return -c; });
    return NormalVector(std::move(out));
}

NormalVector operator+(const NormalVector& a, const NormalVector& b) {
    std::vector<int> out(std::max(a.size(), b.size()), 0);
    for (std::size_t k = 0; k < a.size(); ++k) {
        out[k] += a[k];
    }
    for (std::size_t k = 0; k < b.size(); ++k) {
        out[k] += b[k];
    }
    return NormalVector(std::move(out));
}

namespace {

enum class Relation { LessEq, GreaterEq };

// Linear expression over x1..xK with a rational constant.
struct Side {
    std::map<VarId, int> coeffs;
    Rational constant;
};

class Parser {
  public:
    Parser(std::string_view text, int n) : text_(text), n_(n) {}

    Constraint4 parse() {
        Side lhs = parse_side();
        const Relation rel = parse_relation();
        Side rhs = parse_side();
        skip_space();
        if (pos_ != text_.size()) {
            fail("unexpected trailing input");
        }

        // Move everything to the form sum(coeffs) <= bound.
        std::map<VarId, int> coeffs = lhs.coeffs;
        for (const auto& [v, c] : rhs.coeffs) {
            coeffs[v] -= c;
        }
        Rational bound = rhs.constant - lhs.constant;
        if (rel == Relation::GreaterEq) {
            for (auto& [v, c] : coeffs) {
                c = -c;
            }
            bound = -bound;
        }

        std::vector<VarId> positive;
        std::vector<VarId> negative;
        for (const auto& [v, c] : coeffs) {
            for (int k = 0; k < std::abs(c); ++k) {
                (c > 0 ? positive : negative).push_back(v);
            }
        }
        if (positive.size() > 2 || negative.size() > 2) {
            fail("a 4-constraint admits at most two positive and two negative variable occurrences");
        }
        positive.resize(2, 0);
        negative.resize(2, 0);
        return Constraint4{positive[0], negative[0], negative[1], positive[1], Bound(bound)};
    }

  private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + " at column " + std::to_string(pos_ + 1) + " in '" + std::string(text_) + "'");
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    [[nodiscard]] bool at_relation() const {
        return text_.substr(pos_, 2) == "<=" || text_.substr(pos_, 2) == ">=";
    }

    Relation parse_relation() {
        skip_space();
        if (text_.substr(pos_, 2) == "<=") {
            pos_ += 2;
            return Relation::LessEq;
        }
        if (text_.substr(pos_, 2) == ">=") {
            pos_ += 2;
            return Relation::GreaterEq;
        }
        fail("expected '<=' or '>='");
    }

    Side parse_side() {
        Side side;
        bool first = true;
        while (true) {
            skip_space();
            if (pos_ >= text_.size() || at_relation()) {
                break;
            }
            int sign = 1;
            if (text_[pos_] == '+' || text_[pos_] == '-') {
                sign = text_[pos_] == '-' ? -1 : 1;
                ++pos_;
                skip_space();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            parse_term(side, sign);
            first = false;
        }
        if (first) {
            fail("empty side");
        }
        return side;
    }

    void parse_term(Side& side, int sign) {
        if (pos_ >= text_.size()) {
            fail("missing term");
        }
        if (text_[pos_] == 'x') {
            ++pos_;
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
            }
            if (start == pos_) {
                fail("expected a variable index after 'x'");
            }
            const std::string digits(text_.substr(start, pos_ - start));
            if (digits.size() > 6) {
                fail("index out of range");
            }
            const int index = std::stoi(digits);
            if (index > n_) {
                fail("index out of range (x" + digits + " with n = " + std::to_string(n_) + ")");
            }
            if (index != 0) {
                side.coeffs[index] += sign;
            }
            return;
        }
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/' || text_[pos_] == '.')) {
            ++pos_;
        }
        const std::string_view literal = text_.substr(start, pos_ - start);
        if (literal.empty()) {
            fail("expected a variable or a rational literal");
        }
        try {
            const Rational value = parse_rational(literal);
            side.constant += sign > 0 ? value : Rational(-value);
        } catch (const std::invalid_argument&) {
            pos_ = start;
            fail("not a rational bound '" + std::string(literal) + "'");
        }
    }

    std::string_view text_;
    int n_;
    std::size_t pos_ = 0;
};

} // namespace

Constraint4 parse_atomic(std::string_view text, int n) {
    if (n < 1) {
        throw std::invalid_argument("number of variables must be at least 1");
    }
    return Parser(text, n).parse();
}

ConstraintSystem parse_system(std::string_view text, std::optional<int> n) {
    // Unbounded parse first to discover n, then enforce it.
    constexpr int unbounded = 1'000'000;
    ConstraintSystem sys;
    std::vector<std::pair<std::size_t, std::string>> lines;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = std::min(text.find('\n', start), text.size());
        std::string line(text.substr(start, end - start));
        ++line_no;
        start = end + 1;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        if (std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); })) {
            continue;
        }
        lines.emplace_back(line_no, std::move(line));
    }
    for (const auto& [no, line] : lines) {
        try {
            sys.constraints.push_back(parse_atomic(line, n.value_or(unbounded)));
        } catch (const ParseError& e) {
            throw ParseError(e.what(), no);
        }
    }
    sys.n = n.value_or(max_var_index(sys.constraints));
    return sys;
}

Constraint4 complement(const Constraint4& c) { return Constraint4{c.j, c.i, c.q, c.p, c.m}; }

NormalVector normal_vector(const Constraint4& c, int n) {
    std::vector<int> v(static_cast<std::size_t>(n) + 1, 0);
    v.at(static_cast<std::size_t>(c.i)) += 1;
    v.at(static_cast<std::size_t>(c.j)) -= 1;
    v.at(static_cast<std::size_t>(c.p)) -= 1;
    v.at(static_cast<std::size_t>(c.q)) += 1;
    return NormalVector(std::move(v));
}

int max_var_index(std::span<const Constraint4> constraints) {
    int n = 1;
    for (const auto& c : constraints) {
        n = std::max({n, c.i, c.j, c.p, c.q});
    }
    return n;
}

std::string to_string(const Constraint4& c) {
    const NormalVector v = normal_vector(c, std::max({c.i, c.j, c.p, c.q, 1}));
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 1; k < v.size(); ++k) {
        for (int r = 0; r < std::abs(v[k]); ++r) {
            if (first) {
                os << (v[k] < 0 ? "-" : "");
            } else {
                os << (v[k] < 0 ? " - " : " + ");
            }
            os << 'x' << k;
            first = false;
        }
    }
    if (first) {
        os << '0';
    }
    os << " <= " << c.m.str();
    return os.str();
}

bool satisfies(const Constraint4& c, std::span<const Rational> valuation) {
    if (c.m.is_infinite()) {
        return true;
    }
    const auto at = [&](VarId k) -> const Rational& { return valuation[static_cast<std::size_t>(k)]; };
    const Rational lhs = (at(c.i) - at(c.j)) - (at(c.p) - at(c.q));
    return cmp(lhs, c.m.value()) <= 0;
}

} // namespace fourcsp
