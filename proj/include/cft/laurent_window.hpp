#pragma once

// Truncated two-variable Laurent calculus for the formal delta function
// delta(z-w) = sum_n z^{n-1} w^{-n} and its divided derivatives. A window
// stores coefficients for |i|,|j| <= W; every operation that shifts
// exponents widens the unreliable outer band, tracked by `margin`, and
// identity checks only quantify over the inner band the margin leaves valid.

#include "cft/rational.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace cft {

// Sparse univariate Laurent polynomial with exact coefficients.
class LaurentPoly {
  public:
    LaurentPoly() = default;

    static LaurentPoly monomial(int degree, const Rational& coeff = Rational(1)) {
        LaurentPoly p;
        p.set(degree, coeff);
        return p;
    }

    void set(int degree, const Rational& coeff);
    Rational coeff(int degree) const;
    const std::map<int, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int max_abs_degree() const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.terms_ == b.terms_;
    }

  private:
    std::map<int, Rational> terms_;
};

struct GuardTooSmall : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

class BiLaurentWindow {
  public:
    explicit BiLaurentWindow(int window, int margin = 0);

    // delta(z-w); coefficient of z^i w^j is 1 exactly when i + j = -1.
    static BiLaurentWindow delta(int window);
    // D^j_w delta(z-w) = sum_m binom(m, j) z^{-m-1} w^{m-j}, exact on the
    // whole window (margin 0).
    static BiLaurentWindow delta_derivative(int window, int order);

    int window() const { return window_; }
    int margin() const { return margin_; }
    int valid_band() const { return window_ - margin_; }

    Rational coeff(int i, int j) const;
    void set(int i, int j, const Rational& value);

    BiLaurentWindow mul_z_poly(const LaurentPoly& f) const;  // multiply by f(z)
    BiLaurentWindow mul_w_poly(const LaurentPoly& f) const;  // multiply by f(w)
    BiLaurentWindow mul_z_minus_w() const;
    BiLaurentWindow dz() const;
    BiLaurentWindow dw() const;
    BiLaurentWindow divided_dw(int order) const;  // D^order = (d/dw)^order / order!
    BiLaurentWindow negated() const;

    // Row i = -1 restricted to |j| <= valid_band().
    LaurentPoly res_z() const;

    static bool equal_on_band(const BiLaurentWindow& a, const BiLaurentWindow& b, int band);
    bool zero_on_band(int band) const;

  private:
    std::size_t index(int i, int j) const;

    int window_ = 0;
    int margin_ = 0;
    std::vector<Rational> coef_;
};

struct DeltaIdentityReport {
    struct Item {
        std::string name;
        bool ok = true;
    };
    std::vector<Item> parts;
    bool all_ok = true;
};

// Checks, on the inner band of half-width W - guard:
//   (b) f(z) delta = f(w) delta
//   (c) Res_z f(z) delta(z-w) = f(w)
//   (e) d_z delta = -d_w delta
//   (f) (z-w) D^{j+1} delta = D^j delta          for j <= max_order
//   (g) (z-w)^{j+1} D^j delta = 0                for j <= max_order
// Throws GuardTooSmall when the guard cannot absorb the exponent shifts.
DeltaIdentityReport delta_identity_suite(int window, int guard, const LaurentPoly& f,
                                         int max_order = 3);

}  // namespace cft
