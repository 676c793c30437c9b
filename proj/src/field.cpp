#include "ksforge/field.hpp"

#include <cctype>
#include <cstdlib>
#include <numeric>

namespace ksforge {

namespace {

using i128 = __int128;

long long checked_i64(i128 v, const char* what) {
    if (v > INT64_MAX || v < INT64_MIN) {
        throw FieldError(std::string("rational overflow in ") + what);
    }
    return static_cast<long long>(v);
}

i128 iabs(i128 v) { return v < 0 ? -v : v; }

i128 igcd(i128 a, i128 b) {
    a = iabs(a);
    b = iabs(b);
    while (b) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Rational make_reduced(i128 n, i128 d, const char* what) {
    if (d == 0) throw FieldError("division by zero");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    i128 g = igcd(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    return Rational(checked_i64(n, what), checked_i64(d, what));
}

}  // namespace

Rational::Rational(long long n, long long d) {
    if (d == 0) throw FieldError("division by zero");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    i128 g = igcd(n, d);
    if (g > 1) {
        n = static_cast<long long>(n / g);
        d = static_cast<long long>(d / g);
    }
    num_ = n;
    den_ = d;
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = checked_i64(-static_cast<i128>(num_), "negate");
    r.den_ = den_;
    return r;
}

Rational Rational::operator+(const Rational& o) const {
    i128 n = static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_;
    i128 d = static_cast<i128>(den_) * o.den_;
    return make_reduced(n, d, "add");
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
    i128 n = static_cast<i128>(num_) * o.num_;
    i128 d = static_cast<i128>(den_) * o.den_;
    return make_reduced(n, d, "mul");
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0) throw FieldError("division by zero");
    i128 n = static_cast<i128>(num_) * o.den_;
    i128 d = static_cast<i128>(den_) * o.num_;
    return make_reduced(n, d, "div");
}

bool Rational::operator<(const Rational& o) const {
    return static_cast<i128>(num_) * o.den_ < static_cast<i128>(o.num_) * den_;
}

std::string Rational::str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
}

AlgebraicNumber AlgebraicNumber::operator+(const AlgebraicNumber& o) const {
    return {a_ + o.a_, b_ + o.b_, c_ + o.c_, d_ + o.d_};
}

AlgebraicNumber AlgebraicNumber::operator-(const AlgebraicNumber& o) const {
    return {a_ - o.a_, b_ - o.b_, c_ - o.c_, d_ - o.d_};
}

AlgebraicNumber AlgebraicNumber::operator*(const AlgebraicNumber& o) const {
    // (a1 + b1 r2 + c1 r3 + d1 r6)(a2 + b2 r2 + c2 r3 + d2 r6), using
    // r2*r2 = 2, r3*r3 = 3, r2*r3 = r6, r2*r6 = 2 r3, r3*r6 = 3 r2, r6*r6 = 6.
    const Rational two(2), three(3), six(6);
    Rational a = a_ * o.a_ + two * (b_ * o.b_) + three * (c_ * o.c_) +
                 six * (d_ * o.d_);
    Rational b = a_ * o.b_ + b_ * o.a_ + three * (c_ * o.d_ + d_ * o.c_);
    Rational c = a_ * o.c_ + c_ * o.a_ + two * (b_ * o.d_ + d_ * o.b_);
    Rational d = a_ * o.d_ + d_ * o.a_ + b_ * o.c_ + c_ * o.b_;
    return {a, b, c, d};
}

AlgebraicNumber AlgebraicNumber::inverse() const {
    if (is_zero()) throw FieldError("division by zero");
    AlgebraicNumber c2{a_, -b_, c_, -d_};   // sqrt2 -> -sqrt2
    AlgebraicNumber c3{a_, b_, -c_, -d_};   // sqrt3 -> -sqrt3
    AlgebraicNumber c23{a_, -b_, -c_, d_};  // both
    AlgebraicNumber m = c2 * c3 * c23;
    AlgebraicNumber norm = *this * m;
    // the product over all conjugates is rational and nonzero
    if (!norm.is_rational() || norm.a_.is_zero()) {
        throw FieldError("inverse: conjugate norm not rational");
    }
    Rational inv = Rational(1) / norm.a_;
    return {m.a_ * inv, m.b_ * inv, m.c_ * inv, m.d_ * inv};
}

AlgebraicNumber AlgebraicNumber::operator/(const AlgebraicNumber& o) const {
    return *this * o.inverse();
}

namespace {

void append_term(std::string& out, const Rational& coef, const char* radical) {
    if (coef.is_zero()) return;
    if (!out.empty()) out += coef.sign() > 0 ? "+" : "-";
    else if (coef.sign() < 0) out += "-";
    Rational c = coef.abs();
    if (radical[0] == '\0') {
        out += c.str();
    } else {
        if (c.num() != 1) out += std::to_string(c.num());
        out += radical;
        if (c.den() != 1) out += "/" + std::to_string(c.den());
    }
}

}  // namespace

std::string AlgebraicNumber::str() const {
    std::string out;
    append_term(out, a_, "");
    append_term(out, b_, "r2");
    append_term(out, c_, "r3");
    append_term(out, d_, "r6");
    return out.empty() ? "0" : out;
}

AlgebraicNumber AlgebraicNumber::parse(const std::string& text) {
    AlgebraicNumber result;
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto read_int = [&]() -> long long {
        size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) throw FieldError("expected integer in '" + text + "'");
        return std::strtoll(text.substr(start, i - start).c_str(), nullptr, 10);
    };
    skip_ws();
    if (i == text.size()) throw FieldError("empty field value");
    bool first = true;
    while (true) {
        skip_ws();
        if (i == text.size()) {
            if (first) throw FieldError("empty field value");
            break;
        }
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip_ws();
        } else if (!first) {
            throw FieldError("expected '+' or '-' in '" + text + "'");
        }
        long long coef = 1;
        bool have_coef = false;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            coef = read_int();
            have_coef = true;
        }
        int radical = 1;  // 1, 2, 3, or 6
        if (i < text.size() && text[i] == 'r') {
            ++i;
            long long r = read_int();
            if (r != 2 && r != 3 && r != 6) {
                throw FieldError("unknown radical r" + std::to_string(r));
            }
            radical = static_cast<int>(r);
        } else if (!have_coef) {
            throw FieldError("expected term in '" + text + "'");
        }
        long long den = 1;
        skip_ws();
        if (i < text.size() && text[i] == '/') {
            ++i;
            skip_ws();
            den = read_int();
        }
        Rational q(sign * coef, den);
        switch (radical) {
            case 1: result = result + AlgebraicNumber(q); break;
            case 2: result = result + AlgebraicNumber(Rational(0), q, Rational(0), Rational(0)); break;
            case 3: result = result + AlgebraicNumber(Rational(0), Rational(0), q, Rational(0)); break;
            case 6: result = result + AlgebraicNumber(Rational(0), Rational(0), Rational(0), q); break;
        }
        first = false;
    }
    return result;
}

}  // namespace ksforge
