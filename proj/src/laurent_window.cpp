#include "cft/laurent_window.hpp"

#include <algorithm>
#include <cstdlib>

namespace cft {

void LaurentPoly::set(int degree, const Rational& coeff) {
    if (coeff.is_zero())
        terms_.erase(degree);
    else
        terms_[degree] = coeff;
}

Rational LaurentPoly::coeff(int degree) const {
    auto it = terms_.find(degree);
    return it == terms_.end() ? Rational(0) : it->second;
}

int LaurentPoly::max_abs_degree() const {
    int d = 0;
    for (const auto& [k, q] : terms_) d = std::max(d, std::abs(k));
    return d;
}

BiLaurentWindow::BiLaurentWindow(int window, int margin) : window_(window), margin_(margin) {
    if (window < 1) throw std::invalid_argument("BiLaurentWindow: window must be >= 1");
    const std::size_t side = 2 * static_cast<std::size_t>(window) + 1;
    coef_.assign(side * side, Rational(0));
}

std::size_t BiLaurentWindow::index(int i, int j) const {
    const std::size_t side = 2 * static_cast<std::size_t>(window_) + 1;
    return static_cast<std::size_t>(i + window_) * side + static_cast<std::size_t>(j + window_);
}

Rational BiLaurentWindow::coeff(int i, int j) const {
    if (std::abs(i) > window_ || std::abs(j) > window_) return Rational(0);
    return coef_[index(i, j)];
}

void BiLaurentWindow::set(int i, int j, const Rational& value) {
    if (std::abs(i) > window_ || std::abs(j) > window_)
        throw std::out_of_range("BiLaurentWindow::set outside window");
    coef_[index(i, j)] = value;
}

BiLaurentWindow BiLaurentWindow::delta(int window) { return delta_derivative(window, 0); }

BiLaurentWindow BiLaurentWindow::delta_derivative(int window, int order) {
    if (order < 0) throw std::invalid_argument("delta_derivative: negative order");
    BiLaurentWindow out(window);
    for (int i = -window; i <= window; ++i) {
        const long m = -static_cast<long>(i) - 1;
        const int j = static_cast<int>(m) - order;
        if (std::abs(j) > window) continue;
        out.set(i, j, binomial(m, order));
    }
    return out;
}

BiLaurentWindow BiLaurentWindow::mul_z_poly(const LaurentPoly& f) const {
    BiLaurentWindow out(window_, margin_ + f.max_abs_degree());
    if (f.is_zero()) return BiLaurentWindow(window_, 0);
    for (int i = -window_; i <= window_; ++i)
        for (int j = -window_; j <= window_; ++j) {
            Rational acc(0);
            for (const auto& [a, q] : f.terms()) acc += q * coeff(i - a, j);
            out.set(i, j, acc);
        }
    return out;
}

BiLaurentWindow BiLaurentWindow::mul_w_poly(const LaurentPoly& f) const {
    BiLaurentWindow out(window_, margin_ + f.max_abs_degree());
    if (f.is_zero()) return BiLaurentWindow(window_, 0);
    for (int i = -window_; i <= window_; ++i)
        for (int j = -window_; j <= window_; ++j) {
            Rational acc(0);
            for (const auto& [a, q] : f.terms()) acc += q * coeff(i, j - a);
            out.set(i, j, acc);
        }
    return out;
}

BiLaurentWindow BiLaurentWindow::mul_z_minus_w() const {
    BiLaurentWindow out(window_, margin_ + 1);
    for (int i = -window_; i <= window_; ++i)
        for (int j = -window_; j <= window_; ++j) out.set(i, j, coeff(i - 1, j) - coeff(i, j - 1));
    return out;
}

BiLaurentWindow BiLaurentWindow::dz() const {
    BiLaurentWindow out(window_, margin_ + 1);
    for (int i = -window_; i <= window_; ++i)
        for (int j = -window_; j <= window_; ++j)
            out.set(i, j, Rational(static_cast<long>(i) + 1) * coeff(i + 1, j));
    return out;
}

BiLaurentWindow BiLaurentWindow::dw() const {
    BiLaurentWindow out(window_, margin_ + 1);
    for (int i = -window_; i <= window_; ++i)
        for (int j = -window_; j <= window_; ++j)
            out.set(i, j, Rational(static_cast<long>(j) + 1) * coeff(i, j + 1));
    return out;
}

BiLaurentWindow BiLaurentWindow::divided_dw(int order) const {
    BiLaurentWindow out = *this;
    for (int k = 1; k <= order; ++k) {
        out = out.dw();
        BiLaurentWindow scaled(out.window_, out.margin_);
        for (int i = -out.window_; i <= out.window_; ++i)
            for (int j = -out.window_; j <= out.window_; ++j)
                scaled.set(i, j, out.coeff(i, j) / Rational(k));
        out = scaled;
    }
    return out;
}

BiLaurentWindow BiLaurentWindow::negated() const {
    BiLaurentWindow out(window_, margin_);
    for (int i = -window_; i <= window_; ++i)
        for (int j = -window_; j <= window_; ++j) out.set(i, j, -coeff(i, j));
    return out;
}

LaurentPoly BiLaurentWindow::res_z() const {
    LaurentPoly p;
    for (int j = -valid_band(); j <= valid_band(); ++j) p.set(j, coeff(-1, j));
    return p;
}

bool BiLaurentWindow::equal_on_band(const BiLaurentWindow& a, const BiLaurentWindow& b, int band) {
    if (band > a.valid_band() || band > b.valid_band())
        throw GuardTooSmall("equal_on_band: band exceeds the reliable window");
    for (int i = -band; i <= band; ++i)
        for (int j = -band; j <= band; ++j)
            if (a.coeff(i, j) != b.coeff(i, j)) return false;
    return true;
}

bool BiLaurentWindow::zero_on_band(int band) const {
    if (band > valid_band())
        throw GuardTooSmall("zero_on_band: band exceeds the reliable window");
    for (int i = -band; i <= band; ++i)
        for (int j = -band; j <= band; ++j)
            if (!coeff(i, j).is_zero()) return false;
    return true;
}

DeltaIdentityReport delta_identity_suite(int window, int guard, const LaurentPoly& f,
                                         int max_order) {
    if (guard < 1 || guard > window)
        throw GuardTooSmall("delta_identity_suite: need 1 <= guard <= window");
    const int band = window - guard;
    if (f.max_abs_degree() > band)
        throw GuardTooSmall("delta_identity_suite: test vector overflows the inner band");
    if (f.max_abs_degree() > guard || max_order + 1 > guard)
        throw GuardTooSmall("delta_identity_suite: guard cannot absorb the exponent shifts");

    DeltaIdentityReport report;
    auto record = [&report](const std::string& name, bool ok) {
        report.parts.push_back({name, ok});
        report.all_ok = report.all_ok && ok;
    };

    const BiLaurentWindow d = BiLaurentWindow::delta(window);

    const BiLaurentWindow fz_d = d.mul_z_poly(f);
    record("b: f(z)d = f(w)d", BiLaurentWindow::equal_on_band(fz_d, d.mul_w_poly(f), band));

    {
        const LaurentPoly lhs = fz_d.res_z();
        bool ok = true;
        for (int j = -band; j <= band; ++j) ok = ok && lhs.coeff(j) == f.coeff(j);
        record("c: Res_z f(z)d = f(w)", ok);
    }

    record("e: d_z d = -d_w d", BiLaurentWindow::equal_on_band(d.dz(), d.dw().negated(), band));

    for (int j = 0; j <= max_order; ++j) {
        const BiLaurentWindow dj = BiLaurentWindow::delta_derivative(window, j);
        const BiLaurentWindow dj1 = BiLaurentWindow::delta_derivative(window, j + 1);
        record("f: (z-w)D^" + std::to_string(j + 1) + "d = D^" + std::to_string(j) + "d",
               BiLaurentWindow::equal_on_band(dj1.mul_z_minus_w(), dj, band));
        BiLaurentWindow power = dj;
        for (int k = 0; k <= j; ++k) power = power.mul_z_minus_w();
        record("g: (z-w)^" + std::to_string(j + 1) + "D^" + std::to_string(j) + "d = 0",
               power.zero_on_band(band));
    }
    return report;
}

}  // namespace cft
