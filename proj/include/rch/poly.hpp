#pragma once

#include "rch/rat.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace rch {

// Laurent polynomial in q with integer coefficients; the codomain of the
// bracket. Zero coefficients are never stored, exponents may be negative.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(const Int& c) {
        if (c != 0) c_[0] = c;
    }
    static LaurentPoly monomial(int exp, const Int& c = 1) {
        LaurentPoly p;
        if (c != 0) p.c_[exp] = c;
        return p;
    }

    const std::map<int, Int>& terms() const { return c_; }
    bool isZero() const { return c_.empty(); }

    void add(int exp, const Int& coeff) {
        if (coeff == 0) return;
        auto it = c_.find(exp);
        if (it == c_.end()) {
            c_[exp] = coeff;
        } else {
            it->second += coeff;
            if (it->second == 0) c_.erase(it);
        }
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (auto& [e, c] : o.c_) add(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (auto& [e, c] : o.c_) add(e, -c);
        return *this;
    }
    LaurentPoly operator+(const LaurentPoly& o) const {
        LaurentPoly t = *this;
        t += o;
        return t;
    }
    LaurentPoly operator-(const LaurentPoly& o) const {
        LaurentPoly t = *this;
        t -= o;
        return t;
    }
    LaurentPoly operator*(const LaurentPoly& o) const {
        LaurentPoly t;
        for (auto& [e1, c1] : c_)
            for (auto& [e2, c2] : o.c_) t.add(e1 + e2, c1 * c2);
        return t;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly pow(int k) const {
        LaurentPoly acc(Int(1));
        for (int i = 0; i < k; ++i) acc *= *this;
        return acc;
    }

    bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }
    bool operator!=(const LaurentPoly& o) const { return c_ != o.c_; }

    // Substitution; q0 must be nonzero when negative exponents are present.
    Rat eval(const Rat& q0) const {
        Rat acc(0);
        for (auto& [e, c] : c_) acc += Rat(c) * rpow(q0, e);
        return acc;
    }

    std::string str(const std::string& var = "q") const;
    nlohmann::json toJson(const std::string& var = "q") const;

private:
    std::map<int, Int> c_;
};

// Single-variable polynomial with rational coefficients and nonnegative
// exponents; used for values in n (Penrose) and in t (total face color).
class VarPoly {
public:
    explicit VarPoly(char var = 'n') : var_(var) {}
    static VarPoly monomial(char var, int exp, const Rat& c) {
        VarPoly p(var);
        p.add(exp, c);
        return p;
    }

    char var() const { return var_; }
    const std::map<int, Rat>& terms() const { return c_; }
    bool isZero() const { return c_.empty(); }
    int degree() const { return c_.empty() ? -1 : c_.rbegin()->first; }
    Rat coeff(int e) const {
        auto it = c_.find(e);
        return it == c_.end() ? Rat(0) : it->second;
    }

    void add(int exp, const Rat& coeff) {
        if (exp < 0) throw std::domain_error("VarPoly exponents are nonnegative");
        if (coeff == 0) return;
        auto it = c_.find(exp);
        if (it == c_.end()) {
            c_[exp] = coeff;
        } else {
            it->second += coeff;
            if (it->second == 0) c_.erase(it);
        }
    }

    VarPoly& operator+=(const VarPoly& o) {
        for (auto& [e, c] : o.c_) add(e, c);
        return *this;
    }
    VarPoly operator*(const VarPoly& o) const {
        VarPoly t(var_);
        for (auto& [e1, c1] : c_)
            for (auto& [e2, c2] : o.c_) t.add(e1 + e2, c1 * c2);
        return t;
    }
    bool operator==(const VarPoly& o) const { return var_ == o.var_ && c_ == o.c_; }
    bool operator!=(const VarPoly& o) const { return !(*this == o); }

    Rat eval(const Rat& x) const {
        Rat acc(0);
        for (auto& [e, c] : c_) acc += c * rpow(x, e);
        return acc;
    }

    std::string str() const;
    nlohmann::json toJson() const;

private:
    char var_;
    std::map<int, Rat> c_;
};

// Lagrange interpolation through exact points with pairwise distinct
// abscissae; the unique polynomial of degree < #points.
VarPoly poly_interpolate(const std::vector<std::pair<Rat, Rat>>& points, char var = 'n');

// Bivariate polynomial over declared variable pair, e.g. (q,n) or (n,t).
class BiPoly {
public:
    BiPoly(char v1 = 'n', char v2 = 't') : v1_(v1), v2_(v2) {}

    char var1() const { return v1_; }
    char var2() const { return v2_; }
    const std::map<std::pair<int, int>, Rat>& terms() const { return c_; }
    bool isZero() const { return c_.empty(); }

    void add(int e1, int e2, const Rat& coeff) {
        if (coeff == 0) return;
        auto key = std::make_pair(e1, e2);
        auto it = c_.find(key);
        if (it == c_.end()) {
            c_[key] = coeff;
        } else {
            it->second += coeff;
            if (it->second == 0) c_.erase(it);
        }
    }

    bool operator==(const BiPoly& o) const { return v1_ == o.v1_ && v2_ == o.v2_ && c_ == o.c_; }
    bool operator!=(const BiPoly& o) const { return !(*this == o); }

    Rat eval(const Rat& x1, const Rat& x2) const {
        Rat acc(0);
        for (auto& [e, c] : c_) acc += c * rpow(x1, e.first) * rpow(x2, e.second);
        return acc;
    }

    // Collapse onto the second variable by substituting a value for var1.
    VarPoly evalFirst(const Rat& x1) const {
        VarPoly p(v2_);
        for (auto& [e, c] : c_) p.add(e.second, c * rpow(x1, e.first));
        return p;
    }

    std::string str() const;
    nlohmann::json toJson() const;

private:
    char v1_, v2_;
    std::map<std::pair<int, int>, Rat> c_;
};

}  // namespace rch
