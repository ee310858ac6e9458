#pragma once

// Polynomials in the two indeterminates c and h over Rational. This is the
// coefficient ring of the whole engine: Gram entries, Kac determinants and
// the phi factors all live in Q[c,h]. Values are immutable once built and
// kept in canonical form (no zero terms, fixed term order).

#include "cft/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>

namespace cft {

struct Monomial {
    int deg_c = 0;
    int deg_h = 0;
    int degree() const { return deg_c + deg_h; }
    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.deg_c == b.deg_c && a.deg_h == b.deg_h;
    }
};

// Canonical term order: higher total degree first, ties broken by higher
// h-exponent. Iterating a polynomial yields terms in printing order, e.g.
// 32*h^3 + 4*c*h^2 - 20*h^2 + 2*c*h.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.degree() != b.degree()) return a.degree() > b.degree();
        return a.deg_h > b.deg_h;
    }
};

class ScalarPoly {
  public:
    using TermMap = std::map<Monomial, Rational, MonomialOrder>;

    ScalarPoly() = default;
    ScalarPoly(const Rational& q) { add_term({0, 0}, q); }
    ScalarPoly(long n) : ScalarPoly(Rational(n)) {}
    ScalarPoly(int n) : ScalarPoly(Rational(n)) {}

    static ScalarPoly var_c() { return monomial(1, 0); }
    static ScalarPoly var_h() { return monomial(0, 1); }
    static ScalarPoly monomial(int deg_c, int deg_h, const Rational& coeff = Rational(1));

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
    }
    Rational constant_value() const;  // requires is_constant()
    int total_degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }

    const TermMap& terms() const { return terms_; }
    Rational coeff(int deg_c, int deg_h) const;

    void add_term(const Monomial& m, const Rational& q);

    ScalarPoly& operator+=(const ScalarPoly& o);
    ScalarPoly& operator-=(const ScalarPoly& o);
    ScalarPoly& operator*=(const ScalarPoly& o) { *this = *this * o; return *this; }
    ScalarPoly& operator*=(const Rational& q);

    friend ScalarPoly operator+(ScalarPoly a, const ScalarPoly& b) { return a += b; }
    friend ScalarPoly operator-(ScalarPoly a, const ScalarPoly& b) { return a -= b; }
    friend ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b);
    friend ScalarPoly operator-(const ScalarPoly& a);
    friend ScalarPoly operator*(ScalarPoly a, const Rational& q) { return a *= q; }
    friend ScalarPoly operator*(const Rational& q, ScalarPoly a) { return a *= q; }

    friend bool operator==(const ScalarPoly& a, const ScalarPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const ScalarPoly& a, const ScalarPoly& b) { return !(a == b); }

    ScalarPoly pow(unsigned e) const;

    // Substitution homomorphism c -> c0, h -> h0.
    Rational eval(const Rational& c0, const Rational& h0) const;

    // Exact division; nullopt when the remainder is nonzero.
    std::optional<ScalarPoly> try_divide(const ScalarPoly& divisor) const;

    // Canonical text form, e.g. "32*h^3 + 4*c*h^2 - 20*h^2 + 2*c*h".
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const ScalarPoly& p) { return os << p.str(); }

  private:
    TermMap terms_;
};

// Exact division used by fraction-free elimination; throws if not exact.
ScalarPoly exact_div(const ScalarPoly& a, const ScalarPoly& b);

}  // namespace cft
