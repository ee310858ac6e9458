#include "cft/scalar_poly.hpp"

#include <sstream>
#include <stdexcept>

namespace cft {

ScalarPoly ScalarPoly::monomial(int deg_c, int deg_h, const Rational& coeff) {
    if (deg_c < 0 || deg_h < 0) throw std::domain_error("ScalarPoly: negative exponent");
    ScalarPoly p;
    p.add_term({deg_c, deg_h}, coeff);
    return p;
}

Rational ScalarPoly::constant_value() const {
    if (!is_constant()) throw std::domain_error("ScalarPoly: not a constant");
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

Rational ScalarPoly::coeff(int deg_c, int deg_h) const {
    auto it = terms_.find({deg_c, deg_h});
    return it == terms_.end() ? Rational(0) : it->second;
}

void ScalarPoly::add_term(const Monomial& m, const Rational& q) {
    if (q.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, q);
    if (!inserted) {
        it->second += q;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ScalarPoly& ScalarPoly::operator+=(const ScalarPoly& o) {
    for (const auto& [m, q] : o.terms_) add_term(m, q);
    return *this;
}

ScalarPoly& ScalarPoly::operator-=(const ScalarPoly& o) {
    for (const auto& [m, q] : o.terms_) add_term(m, -q);
    return *this;
}

ScalarPoly& ScalarPoly::operator*=(const Rational& q) {
    if (q.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= q;
    return *this;
}

ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b) {
    ScalarPoly r;
    for (const auto& [ma, qa] : a.terms_)
        for (const auto& [mb, qb] : b.terms_)
            r.add_term({ma.deg_c + mb.deg_c, ma.deg_h + mb.deg_h}, qa * qb);
    return r;
}

ScalarPoly operator-(const ScalarPoly& a) {
    ScalarPoly r;
    for (const auto& [m, q] : a.terms_) r.add_term(m, -q);
    return r;
}

ScalarPoly ScalarPoly::pow(unsigned e) const {
    ScalarPoly r(1), b(*this);
    while (e) {
        if (e & 1u) r = r * b;
        b = b * b;
        e >>= 1u;
    }
    return r;
}

Rational ScalarPoly::eval(const Rational& c0, const Rational& h0) const {
    Rational r(0);
    for (const auto& [m, q] : terms_)
        r += q * c0.pow(static_cast<unsigned>(m.deg_c)) * h0.pow(static_cast<unsigned>(m.deg_h));
    return r;
}

std::optional<ScalarPoly> ScalarPoly::try_divide(const ScalarPoly& divisor) const {
    if (divisor.is_zero()) return std::nullopt;
    ScalarPoly rem(*this), quot;
    const auto& [dm, dq] = *divisor.terms_.begin();
    while (!rem.is_zero()) {
        const auto& [rm, rq] = *rem.terms_.begin();
        if (rm.deg_c < dm.deg_c || rm.deg_h < dm.deg_h) return std::nullopt;
        ScalarPoly t = monomial(rm.deg_c - dm.deg_c, rm.deg_h - dm.deg_h, rq / dq);
        quot += t;
        rem -= t * divisor;
    }
    return quot;
}

ScalarPoly exact_div(const ScalarPoly& a, const ScalarPoly& b) {
    auto q = a.try_divide(b);
    if (!q) throw std::logic_error("ScalarPoly: inexact division");
    return *q;
}

std::string ScalarPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, q] : terms_) {
        const bool neg = q.sign() < 0;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        const Rational mag = q.abs();
        const bool constant = m.degree() == 0;
        if (constant || !mag.is_one()) {
            os << mag.str();
            if (!constant) os << "*";
        }
        if (m.deg_c > 0) {
            os << "c";
            if (m.deg_c > 1) os << "^" << m.deg_c;
            if (m.deg_h > 0) os << "*";
        }
        if (m.deg_h > 0) {
            os << "h";
            if (m.deg_h > 1) os << "^" << m.deg_h;
        }
    }
    return os.str();
}

}  // namespace cft
