#pragma once

#include <map>

#include "krall/poly.hpp"

namespace krall {

/// Ordinary differential operator sum_j b_j(x) D^j in normal form
/// (coefficient-times-derivative, no zero coefficient polynomials).
/// Composition applies the Leibniz rule and renormalizes immediately.
class DiffOp {
public:
    DiffOp() = default;

    static DiffOp identity() { return from_term(0, XPoly(1)); }
    /// d/dx
    static DiffOp d1() { return from_term(1, XPoly(1)); }
    /// x d^2/dx^2 - x d/dx, the second generator of the operator algebra.
    static DiffOp d2() {
        DiffOp o = from_term(2, XPoly::variable());
        o += from_term(1, -XPoly::variable());
        return o;
    }

    static DiffOp from_term(int order, XPoly coeff) {
        DiffOp o;
        if (order < 0) throw std::invalid_argument("DiffOp: negative order");
        if (!coeff.is_zero()) o.t_[order] = std::move(coeff);
        return o;
    }

    bool is_zero() const { return t_.empty(); }
    int order() const { return t_.empty() ? kZeroPolyDegree : t_.rbegin()->first; }

    const std::map<int, XPoly>& terms() const { return t_; }

    XPoly coeff(int j) const {
        auto it = t_.find(j);
        return it == t_.end() ? XPoly() : it->second;
    }

    /// sum_j b_j(x) f^(j)(x), exact.
    XPoly apply(const XPoly& f) const;

    DiffOp operator-() const {
        DiffOp r = *this;
        for (auto& [j, c] : r.t_) c = -c;
        return r;
    }
    DiffOp& operator+=(const DiffOp& o) {
        for (const auto& [j, c] : o.t_) add_term(j, c);
        return *this;
    }
    DiffOp& operator-=(const DiffOp& o) {
        for (const auto& [j, c] : o.t_) add_term(j, -c);
        return *this;
    }
    DiffOp& operator*=(const Rat& s) {
        if (s.is_zero()) {
            t_.clear();
            return *this;
        }
        for (auto& [j, c] : t_) c *= s;
        return *this;
    }

    friend DiffOp operator+(DiffOp a, const DiffOp& b) { a += b; return a; }
    friend DiffOp operator-(DiffOp a, const DiffOp& b) { a -= b; return a; }
    friend DiffOp operator*(DiffOp a, const Rat& s) { a *= s; return a; }
    friend DiffOp operator*(const Rat& s, DiffOp a) { a *= s; return a; }
    /// Composition a after b.
    friend DiffOp operator*(const DiffOp& a, const DiffOp& b);

    friend bool operator==(const DiffOp& a, const DiffOp& b) { return a.t_ == b.t_; }
    friend bool operator!=(const DiffOp& a, const DiffOp& b) { return !(a == b); }

private:
    std::map<int, XPoly> t_;
    void add_term(int j, const XPoly& c) {
        if (c.is_zero()) return;
        auto it = t_.find(j);
        if (it == t_.end()) {
            t_.emplace(j, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }
};

/// h evaluated in an operator argument: h(base), powers by composition
/// (Horner). Shifted variants h(base + c) are obtained by shifting h first.
DiffOp op_substitute(const NPoly& h, const DiffOp& base);

}  // namespace krall
