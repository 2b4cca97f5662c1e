#include "rch/poly.hpp"

#include <sstream>

namespace rch {
namespace {

// Canonical sorted-exponent text form, e.g. `q^-2 + 2*q^-1 + 2 + q`.
std::string format_terms(const std::vector<std::pair<int, std::string>>& terms,
                         const std::string& var) {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [exp, coeff] : terms) {
        bool neg = !coeff.empty() && coeff[0] == '-';
        std::string mag = neg ? coeff.substr(1) : coeff;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (exp == 0) {
            os << mag;
        } else {
            if (mag != "1") os << mag << "*";
            os << var;
            if (exp != 1) os << "^" << exp;
        }
    }
    return os.str();
}

}  // namespace

std::string LaurentPoly::str(const std::string& var) const {
    std::vector<std::pair<int, std::string>> v;
    for (auto& [e, c] : c_) v.emplace_back(e, to_string(c));
    return format_terms(v, var);
}

nlohmann::json LaurentPoly::toJson(const std::string& var) const {
    nlohmann::json terms = nlohmann::json::array();
    for (auto& [e, c] : c_) {
        if (c.fits_slong_p())
            terms.push_back({e, c.get_si()});
        else
            terms.push_back({e, c.get_str()});
    }
    return {{"var", var}, {"terms", terms}};
}

std::string VarPoly::str() const {
    std::vector<std::pair<int, std::string>> v;
    for (auto& [e, c] : c_) v.emplace_back(e, to_string(c));
    return format_terms(v, std::string(1, var_));
}

nlohmann::json VarPoly::toJson() const {
    nlohmann::json terms = nlohmann::json::array();
    for (auto& [e, c] : c_) {
        if (is_integer(c) && c.get_num().fits_slong_p())
            terms.push_back({e, c.get_num().get_si()});
        else
            terms.push_back({e, to_string(c)});
    }
    return {{"var", std::string(1, var_)}, {"terms", terms}};
}

VarPoly poly_interpolate(const std::vector<std::pair<Rat, Rat>>& points, char var) {
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first)
                throw std::domain_error("interpolation points must have distinct abscissae");

    VarPoly result(var);
    for (size_t i = 0; i < points.size(); ++i) {
        // Build the Lagrange basis polynomial for node i as dense coefficients.
        std::vector<Rat> basis = {Rat(1)};
        Rat denom(1);
        for (size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            denom *= points[i].first - points[j].first;
            std::vector<Rat> next(basis.size() + 1, Rat(0));
            for (size_t k = 0; k < basis.size(); ++k) {
                next[k + 1] += basis[k];
                next[k] -= basis[k] * points[j].first;
            }
            basis = std::move(next);
        }
        Rat scale = points[i].second / denom;
        for (size_t k = 0; k < basis.size(); ++k) result.add(static_cast<int>(k), basis[k] * scale);
    }
    return result;
}

std::string BiPoly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : c_) {
        std::string coeff = to_string(c);
        bool neg = coeff[0] == '-';
        std::string mag = neg ? coeff.substr(1) : coeff;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        std::string vars;
        if (e.first != 0) {
            vars += v1_;
            if (e.first != 1) vars += "^" + std::to_string(e.first);
        }
        if (e.second != 0) {
            if (!vars.empty()) vars += "*";
            vars += v2_;
            if (e.second != 1) vars += "^" + std::to_string(e.second);
        }
        if (vars.empty()) {
            os << mag;
        } else {
            if (mag != "1") os << mag << "*";
            os << vars;
        }
    }
    return os.str();
}

nlohmann::json BiPoly::toJson() const {
    nlohmann::json terms = nlohmann::json::array();
    for (auto& [e, c] : c_) {
        if (is_integer(c) && c.get_num().fits_slong_p())
            terms.push_back({e.first, e.second, c.get_num().get_si()});
        else
            terms.push_back({e.first, e.second, to_string(c)});
    }
    return {{"vars", {std::string(1, v1_), std::string(1, v2_)}}, {"terms", terms}};
}

}  // namespace rch
