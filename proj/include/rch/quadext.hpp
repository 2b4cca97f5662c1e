#pragma once

#include "rch/rat.hpp"

#include <cmath>
#include <ostream>

namespace rch {

// Element a + b*sqrt(rad) of the quadratic extension Q(sqrt(rad)).
// rad == 0 encodes a plain rational (b is then 0); a perfect-square radicand
// collapses to that form at construction, so e.g. sqrt(4) is just the
// rational 2. Mixed-radicand arithmetic is only defined when one side is
// rational.
class QuadExt {
public:
    QuadExt() : a_(0), b_(0), rad_(0) {}
    QuadExt(const Rat& r) : a_(r), b_(0), rad_(0) {}
    QuadExt(long v) : a_(v), b_(0), rad_(0) {}

    QuadExt(const Rat& a, const Rat& b, long rad) : a_(a), b_(b), rad_(0) {
        if (b == 0) return;
        if (rad <= 0) throw std::domain_error("radicand must be positive");
        long s = isqrt(rad);
        if (s * s == rad) {
            a_ += b * s;  // fold sqrt of a perfect square into the rational part
            b_ = 0;
        } else {
            b_ = b;
            rad_ = rad;
        }
    }

    static QuadExt sqrt_of(long rad) { return QuadExt(Rat(0), Rat(1), rad); }

    const Rat& ratPart() const { return a_; }
    const Rat& radPart() const { return b_; }
    long radicand() const { return rad_; }
    bool isZero() const { return a_ == 0 && b_ == 0; }
    bool isRational() const { return rad_ == 0; }

    QuadExt operator-() const { return QuadExt(-a_, -b_, rad_, tag{}); }

    QuadExt& operator+=(const QuadExt& o) {
        long r = mergedRadicand(o);
        a_ += o.a_;
        b_ += o.b_;
        setRad(r);
        return *this;
    }
    QuadExt& operator-=(const QuadExt& o) { return *this += -o; }

    QuadExt operator+(const QuadExt& o) const {
        QuadExt t = *this;
        t += o;
        return t;
    }
    QuadExt operator-(const QuadExt& o) const {
        QuadExt t = *this;
        t -= o;
        return t;
    }

    QuadExt operator*(const QuadExt& o) const {
        long r = mergedRadicand(o);
        Rat a = a_ * o.a_;
        if (r != 0) a += b_ * o.b_ * r;
        Rat b = a_ * o.b_ + b_ * o.a_;
        QuadExt t(a, b, r, tag{});
        t.setRad(r);
        return t;
    }
    QuadExt& operator*=(const QuadExt& o) { return *this = *this * o; }

    // Multiplicative inverse via the conjugate; a^2 - b^2*rad is nonzero for
    // nonzero elements because rad is not a perfect square.
    QuadExt inverse() const {
        if (isZero()) throw std::domain_error("division by zero in Q(sqrt(n))");
        if (rad_ == 0) {
            if (a_ == 0) throw std::logic_error("broken scalar in inverse: " + str());
            return QuadExt(Rat(1 / a_));
        }
        Rat norm = a_ * a_ - b_ * b_ * rad_;
        return QuadExt(a_ / norm, -b_ / norm, rad_, tag{});
    }
    QuadExt operator/(const QuadExt& o) const { return *this * o.inverse(); }

    bool operator==(const QuadExt& o) const {
        return a_ == o.a_ && b_ == o.b_ && (b_ == 0 || rad_ == o.rad_);
    }
    bool operator!=(const QuadExt& o) const { return !(*this == o); }

    std::string str() const {
        if (b_ == 0) return to_string(a_);
        std::string s = a_ == 0 ? "" : to_string(a_);
        std::string bt = b_ == 1 ? "" : (b_ == -1 ? "-" : to_string(b_) + "*");
        if (!s.empty() && !(bt.size() && bt[0] == '-')) s += "+";
        return s + bt + "sqrt(" + std::to_string(rad_) + ")";
    }

private:
    struct tag {};
    QuadExt(const Rat& a, const Rat& b, long rad, tag) : a_(a), b_(b), rad_(rad) {}

    static long isqrt(long v) {
        long s = static_cast<long>(std::sqrt(static_cast<double>(v)));
        while (s > 0 && s * s > v) --s;
        while ((s + 1) * (s + 1) <= v) ++s;
        return s;
    }

    long mergedRadicand(const QuadExt& o) const {
        if (rad_ == 0) return o.rad_;
        if (o.rad_ == 0) return rad_;
        if (rad_ != o.rad_) throw std::domain_error("mismatched radicands");
        return rad_;
    }

    void setRad(long r) { rad_ = (b_ == 0) ? 0 : r; }

    Rat a_, b_;
    long rad_;
};

inline std::ostream& operator<<(std::ostream& os, const QuadExt& q) { return os << q.str(); }

enum class QuadOp { Add, Mul, Neg, Inv };

inline QuadExt quad_arith(const QuadExt& x, const QuadExt& y, QuadOp op) {
    switch (op) {
        case QuadOp::Add: return x + y;
        case QuadOp::Mul: return x * y;
        case QuadOp::Neg: return -x;
        case QuadOp::Inv: return x.inverse();
    }
    throw std::logic_error("unreachable");
}

}  // namespace rch
