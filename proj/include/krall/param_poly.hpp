#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "krall/rat.hpp"

namespace krall {

/// Sparse multivariate polynomial in the Darboux parameters b0..b3 over Rat.
/// Symbolic parameter work is supported up to four variables; larger systems
/// use concrete rational parameter values.
class ParamPoly {
public:
    static constexpr int kMaxVars = 4;
    using Mono = std::array<uint16_t, kMaxVars>;

    /// Graded lexicographic, descending, so begin() is the leading term.
    struct MonoGreater {
        bool operator()(const Mono& a, const Mono& b) const {
            long da = 0, db = 0;
            for (int i = 0; i < kMaxVars; ++i) {
                da += a[i];
                db += b[i];
            }
            if (da != db) return da > db;
            return a > b;
        }
    };
    using TermMap = std::map<Mono, Rat, MonoGreater>;

    ParamPoly() = default;
    ParamPoly(long c) { *this = ParamPoly(Rat(c)); }  // NOLINT(google-explicit-constructor)
    ParamPoly(Rat c) {  // NOLINT(google-explicit-constructor)
        if (!c.is_zero()) t_[Mono{}] = std::move(c);
    }

    static ParamPoly variable(int i) {
        if (i < 0 || i >= kMaxVars)
            throw std::invalid_argument("ParamPoly: variable index out of range");
        ParamPoly p;
        Mono m{};
        m[static_cast<size_t>(i)] = 1;
        p.t_[m] = Rat(1);
        return p;
    }

    bool is_zero() const { return t_.empty(); }

    long total_degree() const {
        if (t_.empty()) return 0;
        long d = 0;
        for (int i = 0; i < kMaxVars; ++i) d += t_.begin()->first[static_cast<size_t>(i)];
        return d;
    }

    const TermMap& terms() const { return t_; }

    Rat eval(const std::vector<Rat>& beta) const {
        Rat acc(0);
        for (const auto& [m, c] : t_) {
            Rat term = c;
            for (int i = 0; i < kMaxVars; ++i) {
                if (m[static_cast<size_t>(i)] == 0) continue;
                if (static_cast<size_t>(i) >= beta.size())
                    throw std::invalid_argument("ParamPoly: missing value for variable");
                term *= pow_rat(beta[static_cast<size_t>(i)], m[static_cast<size_t>(i)]);
            }
            acc += term;
        }
        return acc;
    }

    ParamPoly operator-() const {
        ParamPoly r = *this;
        for (auto& [m, c] : r.t_) c = -c;
        return r;
    }

    ParamPoly& operator+=(const ParamPoly& o) {
        for (const auto& [m, c] : o.t_) add_term(m, c);
        return *this;
    }
    ParamPoly& operator-=(const ParamPoly& o) {
        for (const auto& [m, c] : o.t_) add_term(m, -c);
        return *this;
    }
    ParamPoly& operator*=(const ParamPoly& o) { return *this = *this * o; }
    ParamPoly& operator*=(const Rat& s) {
        if (s.is_zero()) {
            t_.clear();
            return *this;
        }
        for (auto& [m, c] : t_) c *= s;
        return *this;
    }

    friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { a += b; return a; }
    friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { a -= b; return a; }
    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
        ParamPoly r;
        for (const auto& [ma, ca] : a.t_)
            for (const auto& [mb, cb] : b.t_) {
                Mono m;
                for (int i = 0; i < kMaxVars; ++i)
                    m[static_cast<size_t>(i)] =
                        static_cast<uint16_t>(ma[static_cast<size_t>(i)] + mb[static_cast<size_t>(i)]);
                r.add_term(m, ca * cb);
            }
        return r;
    }
    friend ParamPoly operator*(ParamPoly a, const Rat& s) { a *= s; return a; }
    friend ParamPoly operator*(const Rat& s, ParamPoly a) { a *= s; return a; }

    friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.t_ == b.t_; }
    friend bool operator!=(const ParamPoly& a, const ParamPoly& b) { return !(a == b); }

    std::string to_string() const {
        if (t_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [m, c] : t_) {
            Rat mag = rat_abs(c);
            if (first) {
                if (c.sign() < 0) s += "-";
                first = false;
            } else {
                s += c.sign() < 0 ? " - " : " + ";
            }
            std::string vars;
            for (int i = 0; i < kMaxVars; ++i) {
                uint16_t e = m[static_cast<size_t>(i)];
                if (e == 0) continue;
                if (!vars.empty()) vars += "*";
                vars += "b" + std::to_string(i);
                if (e > 1) vars += "^" + std::to_string(e);
            }
            if (vars.empty())
                s += mag.to_string();
            else if (mag.is_one())
                s += vars;
            else
                s += mag.to_string() + "*" + vars;
        }
        return s;
    }

private:
    TermMap t_;

    void add_term(const Mono& m, const Rat& c) {
        if (c.is_zero()) return;
        auto it = t_.find(m);
        if (it == t_.end()) {
            t_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    friend ParamPoly exact_div(const ParamPoly& p, const ParamPoly& d);
};

/// Exact division in Q[b0..b3]; throws if d does not divide p.
inline ParamPoly exact_div(const ParamPoly& p, const ParamPoly& d) {
    if (d.is_zero()) throw std::domain_error("ParamPoly: exact division by zero");
    ParamPoly r = p, q;
    const auto& [dm, dc] = *d.terms().begin();
    while (!r.is_zero()) {
        const auto& [rm, rc] = *r.terms().begin();
        ParamPoly::Mono m;
        for (int i = 0; i < ParamPoly::kMaxVars; ++i) {
            if (rm[static_cast<size_t>(i)] < dm[static_cast<size_t>(i)])
                throw std::domain_error("ParamPoly: exact division has nonzero remainder");
            m[static_cast<size_t>(i)] =
                static_cast<uint16_t>(rm[static_cast<size_t>(i)] - dm[static_cast<size_t>(i)]);
        }
        ParamPoly t;
        t.t_[m] = rc / dc;
        q += t;
        r -= t * d;
    }
    return q;
}

}  // namespace krall
