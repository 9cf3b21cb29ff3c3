#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>

namespace krall {

/// Exact rational scalar backed by GMP. Values are kept canonical (lowest
/// terms, positive denominator) and every operation in the library is exact:
/// there is no floating-point mode anywhere.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
    Rat(long num, long den) {
        if (den == 0) throw std::domain_error("Rat: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rat(const mpz_class& z) : v_(z) {}
    explicit Rat(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    /// Parses "p", "-p" or "p/q" in decimal. Throws std::invalid_argument on
    /// malformed input or zero denominator.
    static Rat from_string(const std::string& s);

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }
    bool is_integer() const { return v_.get_den() == 1; }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    /// Exact integer value; throws unless is_integer() and in range.
    long to_long() const {
        if (!is_integer() || !v_.get_num().fits_slong_p())
            throw std::domain_error("Rat: not a machine integer: " + to_string());
        return v_.get_num().get_si();
    }

    Rat operator-() const { return make(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw std::domain_error("Rat: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    std::string to_string() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

private:
    static Rat make(mpq_class q) {
        Rat r;
        r.v_ = std::move(q);  // already canonical
        return r;
    }
    mpq_class v_;
};

inline Rat exact_div(const Rat& a, const Rat& b) { return a / b; }

inline Rat rat_abs(const Rat& a) { return a.sign() < 0 ? -a : a; }

inline Rat factorial(long m) {
    if (m < 0) throw std::invalid_argument("factorial: negative argument");
    mpz_class z;
    mpz_fac_ui(z.get_mpz_t(), static_cast<unsigned long>(m));
    return Rat(z);
}

inline Rat pow_rat(const Rat& a, long e) {
    if (e < 0) {
        if (a.is_zero()) throw std::domain_error("pow_rat: zero to negative power");
        return Rat(1) / pow_rat(a, -e);
    }
    Rat r(1), b = a;
    for (long k = e; k > 0; k >>= 1) {
        if (k & 1) r *= b;
        b *= b;
    }
    return r;
}

/// binom(top, m) = top (top-1) ... (top-m+1) / m!, defined for rational top.
inline Rat binom_rat(const Rat& top, long m) {
    if (m < 0) return Rat(0);
    Rat num(1);
    for (long i = 0; i < m; ++i) num *= top - Rat(i);
    return num / factorial(m);
}

/// Rising factorial (a)_m = a (a+1) ... (a+m-1).
inline Rat pochhammer_rat(const Rat& a, long m) {
    if (m < 0) throw std::invalid_argument("pochhammer_rat: negative length");
    Rat r(1);
    for (long i = 0; i < m; ++i) r *= a + Rat(i);
    return r;
}

inline Rat Rat::from_string(const std::string& s) {
    auto is_digits = [](const std::string& t) {
        if (t.empty()) return false;
        for (char c : t)
            if (c < '0' || c > '9') return false;
        return true;
    };
    std::string body = s;
    bool neg = false;
    if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
        neg = body[0] == '-';
        body = body.substr(1);
    }
    std::string num = body, den = "1";
    if (auto pos = body.find('/'); pos != std::string::npos) {
        num = body.substr(0, pos);
        den = body.substr(pos + 1);
    }
    if (!is_digits(num) || !is_digits(den))
        throw std::invalid_argument("Rat: malformed rational '" + s + "'");
    mpz_class n(num, 10), d(den, 10);
    if (d == 0) throw std::invalid_argument("Rat: zero denominator in '" + s + "'");
    mpq_class q(neg ? mpz_class(-n) : n, d);
    q.canonicalize();
    return Rat(std::move(q));
}

}  // namespace krall
