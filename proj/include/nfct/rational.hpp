#pragma once

#include <gmpxx.h>

#include <cctype>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "nfct/errors.hpp"

namespace nfct {

/// Exact rational scalar. Always reduced, denominator always positive.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long value) : q_(value) {} // NOLINT: implicit by design, 0/1 literals are pervasive

    Rational(long num, long den) {
        if (den == 0) throw DivisionByZero("rational with zero denominator");
        q_ = mpq_class(mpz_class(num), mpz_class(den));
        q_.canonicalize();
    }

    /// Accepts "p" or "p/q" with decimal digits and an optional leading minus.
    static Rational parse(std::string_view text) {
        const auto bad = [&](const char* why) {
            throw ParseError("invalid rational '" + std::string(text) + "': " + why);
        };
        std::string_view num = text, den;
        if (auto slash = text.find('/'); slash != std::string_view::npos) {
            num = text.substr(0, slash);
            den = text.substr(slash + 1);
        }
        const auto digits = [&](std::string_view part, bool sign_ok) {
            if (part.empty()) bad("missing digits");
            size_t i = 0;
            if (sign_ok && part[0] == '-') i = 1;
            if (i == part.size()) bad("missing digits");
            for (; i < part.size(); ++i)
                if (!std::isdigit(static_cast<unsigned char>(part[i]))) bad("unexpected character");
        };
        digits(num, true);
        mpz_class n(std::string(num), 10);
        mpz_class d(1);
        if (!den.empty() || text.find('/') != std::string_view::npos) {
            digits(den, false);
            d = mpz_class(std::string(den), 10);
            if (d == 0) bad("zero denominator");
        }
        Rational r;
        r.q_ = mpq_class(n, d);
        r.q_.canonicalize();
        return r;
    }

    /// "p" when the denominator is 1, otherwise "p/q".
    std::string str() const {
        if (q_.get_den() == 1) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    /// Integer value; only valid when is_integer() and the value fits a long.
    long as_long() const {
        if (!is_integer() || !q_.get_num().fits_slong_p())
            throw InternalError("rational " + str() + " is not a small integer");
        return q_.get_num().get_si();
    }

    Rational reciprocal() const {
        if (is_zero()) throw DivisionByZero("reciprocal of zero");
        Rational r;
        r.q_ = 1 / q_;
        return r;
    }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DivisionByZero("division by zero");
        q_ /= o.q_;
        return *this;
    }

    /// Fused this -= a*b; the hot path of row elimination.
    void submul(const Rational& a, const Rational& b) { q_ -= a.q_ * b.q_; }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
    friend Rational operator-(const Rational& a) {
        Rational r;
        r.q_ = -a.q_;
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class q_; // canonical at all times
};

} // namespace nfct
