#pragma once

#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "krall/rat.hpp"

namespace krall {

/// Degree reported for the zero polynomial. A loud sentinel: any arithmetic
/// accidentally performed on it overflows immediately instead of silently
/// producing an off-by-one.
inline constexpr int kZeroPolyDegree = std::numeric_limits<int>::min();

struct NVar {
    static constexpr const char* name = "n";
};
struct XVar {
    static constexpr const char* name = "x";
};

/// Dense univariate polynomial over a commutative ring R, coefficients stored
/// ascending and kept canonical (no trailing zeros). The Var tag separates
/// polynomials in the discrete index n from polynomials in the continuous
/// variable x at the type level; they never mix arithmetically.
template <class R, class Var>
class Poly {
public:
    using Coeff = R;
    using VarTag = Var;

    Poly() = default;
    Poly(long c) : c_{R(c)} { normalize(); }  // NOLINT(google-explicit-constructor)
    Poly(R c) : c_{std::move(c)} { normalize(); }  // NOLINT(google-explicit-constructor)
    explicit Poly(std::vector<R> ascending) : c_(std::move(ascending)) { normalize(); }

    static Poly variable() { return Poly(std::vector<R>{R(0), R(1)}); }

    static Poly monomial(int deg, R coeff) {
        if (coeff.is_zero()) return Poly();
        if (deg < 0) throw std::invalid_argument("Poly: negative monomial degree");
        std::vector<R> c(static_cast<size_t>(deg) + 1, R(0));
        c.back() = std::move(coeff);
        return Poly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return c_.empty() ? kZeroPolyDegree : static_cast<int>(c_.size()) - 1; }

    const R& coeff(int i) const {
        static const R zero{};
        if (i < 0 || static_cast<size_t>(i) >= c_.size()) return zero;
        return c_[static_cast<size_t>(i)];
    }

    const R& leading() const {
        if (c_.empty()) throw std::domain_error("Poly: leading coefficient of zero polynomial");
        return c_.back();
    }

    const std::vector<R>& coeffs() const { return c_; }

    R eval(const R& at) const {
        R acc{};
        for (size_t i = c_.size(); i-- > 0;) acc = acc * at + c_[i];
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<R> d(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * R(static_cast<long>(i));
        return Poly(std::move(d));
    }

    /// p(inner(var)); Horner over the polynomial ring.
    Poly composed(const Poly& inner) const {
        Poly acc;
        for (size_t i = c_.size(); i-- > 0;) acc = acc * inner + Poly(c_[i]);
        return acc;
    }

    /// p(var + s) for an integer shift s.
    Poly shifted(long s) const {
        if (s == 0 || is_zero()) return *this;
        return composed(Poly(std::vector<R>{R(s), R(1)}));
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        normalize();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        normalize();
        return *this;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly& operator*=(const R& s) {
        for (auto& c : c_) c *= s;
        normalize();
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
    friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<R> c(a.c_.size() + b.c_.size() - 1, R(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(c));
    }
    friend Poly operator*(Poly a, const R& s) { a *= s; return a; }
    friend Poly operator*(const R& s, Poly a) { a *= s; return a; }

    friend bool operator==(const Poly& a, const Poly& b) = default;

private:
    std::vector<R> c_;
    void normalize() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
};

using NPoly = Poly<Rat, NVar>;
using XPoly = Poly<Rat, XVar>;

/// Euclidean division over a coefficient field: p = q*d + r, deg r < deg d.
template <class Var>
struct PolyDivMod {
    Poly<Rat, Var> quotient;
    Poly<Rat, Var> remainder;
};

template <class Var>
PolyDivMod<Var> divmod(const Poly<Rat, Var>& p, const Poly<Rat, Var>& d) {
    if (d.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
    Poly<Rat, Var> q, r = p;
    while (!r.is_zero() && r.degree() >= d.degree()) {
        int k = r.degree() - d.degree();
        Rat c = r.leading() / d.leading();
        auto t = Poly<Rat, Var>::monomial(k, c);
        q += t;
        r -= t * d;
    }
    return {q, r};
}

/// Exact division in R[var]: throws if d does not divide p. Valid over any
/// integral domain whose coefficients support exact_div.
template <class R, class Var>
Poly<R, Var> exact_div(const Poly<R, Var>& p, const Poly<R, Var>& d) {
    if (d.is_zero()) throw std::domain_error("Poly: exact division by zero polynomial");
    Poly<R, Var> q, r = p;
    while (!r.is_zero()) {
        if (r.degree() < d.degree())
            throw std::domain_error("Poly: exact division has nonzero remainder");
        int k = r.degree() - d.degree();
        R c = exact_div(r.leading(), d.leading());
        auto t = Poly<R, Var>::monomial(k, c);
        q += t;
        r -= t * d;
    }
    return q;
}

/// binom(var + shift, m) expanded as a polynomial of degree m, valid for every
/// integer argument including negatives.
template <class Var>
Poly<Rat, Var> binom_poly(long shift, long m) {
    if (m < 0) return Poly<Rat, Var>();
    Poly<Rat, Var> p(1);
    for (long i = 0; i < m; ++i)
        p *= Poly<Rat, Var>(std::vector<Rat>{Rat(shift - i), Rat(1)});
    p *= Rat(1) / factorial(m);
    return p;
}

/// Rising factorial (var + shift)_m as a polynomial of degree m.
template <class Var>
Poly<Rat, Var> pochhammer_poly(long shift, long m) {
    if (m < 0) throw std::invalid_argument("pochhammer_poly: negative length");
    Poly<Rat, Var> p(1);
    for (long i = 0; i < m; ++i)
        p *= Poly<Rat, Var>(std::vector<Rat>{Rat(shift + i), Rat(1)});
    return p;
}

template <class Var>
Rat eval_at_long(const Poly<Rat, Var>& p, long v) {
    return p.eval(Rat(v));
}

/// Discrete antidifference: the unique polynomial H with
/// H(n) - H(n-1) = f(n) and H(0) = 0. Computed through the Newton forward
/// expansion of f in the binomial basis.
template <class Var>
Poly<Rat, Var> antidifference(const Poly<Rat, Var>& f) {
    using P = Poly<Rat, Var>;
    if (f.is_zero()) return P();
    int d = f.degree();
    // forward differences of f at 0: c_j = (Delta_+^j f)(0)
    std::vector<Rat> vals(static_cast<size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) vals[static_cast<size_t>(i)] = eval_at_long(f, i);
    std::vector<Rat> c(static_cast<size_t>(d) + 1);
    for (int j = 0; j <= d; ++j) {
        c[static_cast<size_t>(j)] = vals[0];
        for (int i = 0; i + j < d; ++i)
            vals[static_cast<size_t>(i)] = vals[static_cast<size_t>(i) + 1] - vals[static_cast<size_t>(i)];
    }
    // f = sum c_j binom(n, j)  =>  H = sum c_j binom(n+1, j+1) + C, H(0) = 0.
    P h;
    for (int j = 0; j <= d; ++j)
        h += binom_poly<Var>(1, j + 1) * c[static_cast<size_t>(j)];
    h -= P(c[0]);
    return h;
}

/// Sum f(s) for s in (m, n] with orientation: zero when n == m and negated
/// when n < m; equals H(n) - H(m) for the antidifference H.
template <class Var>
Rat discrete_integral(const Poly<Rat, Var>& f, long m, long n) {
    auto h = antidifference(f);
    return eval_at_long(h, n) - eval_at_long(h, m);
}

/// gcd over Q[var] via the subresultant polynomial remainder sequence on
/// integer-cleared inputs, normalized monic. gcd(p, 0) = monic(p).
template <class Var>
Poly<Rat, Var> gcd_subresultant(const Poly<Rat, Var>& a, const Poly<Rat, Var>& b) {
    using P = Poly<Rat, Var>;
    auto monic = [](const P& p) -> P {
        if (p.is_zero()) return p;
        return p * (Rat(1) / p.leading());
    };
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);

    // clear denominators to integer coefficients
    auto clear_to_int = [](const P& p) -> P {
        mpz_class l(1);
        for (const auto& c : p.coeffs()) {
            mpz_class d = c.denominator();
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
            l = l / g * d;
        }
        return p * Rat(l);
    };

    P f = clear_to_int(a), g = clear_to_int(b);
    if (f.degree() < g.degree()) std::swap(f, g);

    Rat gg(1), hh(1);
    while (true) {
        int delta = f.degree() - g.degree();
        // pseudo-remainder prem(f, g): remainder of lc(g)^(delta+1) * f by g
        P r = f * pow_rat(g.leading(), delta + 1);
        r = divmod(r, g).remainder;
        if (r.is_zero()) return monic(g);
        if (r.degree() == 0) return P(1);
        f = g;
        g = r * (Rat(1) / (gg * pow_rat(hh, delta)));
        gg = f.leading();
        // h = g^delta * h^(1-delta)
        hh = delta == 0 ? hh : pow_rat(gg, delta) / pow_rat(hh, delta - 1);
    }
}

}  // namespace krall
