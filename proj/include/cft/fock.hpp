#pragma once

// The oscillator algebra acting on polynomials in x_1, x_2, ...:
// a_n = d/dx_n, a_{-n} = n x_n, a_0 = mu. The normally ordered bilinears
// L_n = (1/2) sum_k :a_{n-k} a_k: give the central charge 1 Virasoro
// action with highest weight mu^2/2; every operator here is total on
// polynomials, so identities are checked exactly.

#include "cft/partition.hpp"
#include "cft/rational.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cft {

class FockMonomial {
  public:
    FockMonomial() = default;  // the vacuum polynomial 1
    explicit FockMonomial(std::map<int, int> exps);

    static FockMonomial variable(int n, int power = 1);

    const std::map<int, int>& exps() const { return exps_; }
    int weight() const { return weight_; }
    int exponent(int n) const;
    int max_index() const { return exps_.empty() ? 0 : exps_.rbegin()->first; }
    bool is_vacuum() const { return exps_.empty(); }

    FockMonomial with_exponent(int n, int k) const;

    std::string str() const;

    friend bool operator==(const FockMonomial& a, const FockMonomial& b) {
        return a.exps_ == b.exps_;
    }
    friend bool operator<(const FockMonomial& a, const FockMonomial& b) {
        return a.exps_ < b.exps_;
    }

  private:
    std::map<int, int> exps_;
    int weight_ = 0;
};

class FockPoly {
  public:
    FockPoly() = default;
    FockPoly(const Rational& q) { add(FockMonomial(), q); }

    static FockPoly vacuum() { return FockPoly(Rational(1)); }
    static FockPoly monomial(const FockMonomial& m, const Rational& q = Rational(1)) {
        FockPoly f;
        f.add(m, q);
        return f;
    }

    void add(const FockMonomial& m, const Rational& q);

    const std::map<FockMonomial, Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int max_weight() const;

    FockPoly& operator+=(const FockPoly& o);
    FockPoly& operator-=(const FockPoly& o);
    friend FockPoly operator+(FockPoly a, const FockPoly& b) { return a += b; }
    friend FockPoly operator-(FockPoly a, const FockPoly& b) { return a -= b; }
    FockPoly scaled(const Rational& q) const;

    friend bool operator==(const FockPoly& a, const FockPoly& b) { return a.coeffs_ == b.coeffs_; }

    std::string str() const;

  private:
    std::map<FockMonomial, Rational> coeffs_;
};

// Mode action of the oscillator algebra.
FockPoly heis_act(int n, const FockPoly& f, const Rational& mu = Rational(0));

// Normally ordered Virasoro modes at central charge 1.
FockPoly fock_L(int n, const FockPoly& f, const Rational& mu);

struct CutoffTooSmall : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct BracketCheckResult {
    bool ok = true;
    std::optional<FockMonomial> counterexample;
};

// Verifies [L_m, L_n] = (m-n) L_{m+n} + (1/12)(m^3 - m) delta_{m+n,0} on
// every monomial whose weight keeps all intermediate weights within
// weight_cutoff. Throws CutoffTooSmall when not even the vacuum qualifies.
BracketCheckResult fock_bracket_check(int m, int n, int weight_cutoff, const Rational& mu);

// <f, g>: distinct monomials are orthogonal and
// <m, m> = prod_k k_i! / n_i^{k_i} over the variables x_{n_i}^{k_i} of m.
Rational fock_inner(const FockPoly& f, const FockPoly& g);

// All monomials of the given weight, one per partition of the weight.
std::vector<FockMonomial> fock_monomials_of_weight(int weight);

}  // namespace cft
