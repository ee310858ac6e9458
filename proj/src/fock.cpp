#include "cft/fock.hpp"

#include <algorithm>
#include <sstream>

namespace cft {

FockMonomial::FockMonomial(std::map<int, int> exps) : exps_(std::move(exps)) {
    for (const auto& [n, k] : exps_) {
        if (n < 1) throw std::invalid_argument("FockMonomial: variable index must be >= 1");
        if (k < 1) throw std::invalid_argument("FockMonomial: exponent must be >= 1");
        weight_ += n * k;
    }
}

FockMonomial FockMonomial::variable(int n, int power) {
    return FockMonomial(std::map<int, int>{{n, power}});
}

int FockMonomial::exponent(int n) const {
    auto it = exps_.find(n);
    return it == exps_.end() ? 0 : it->second;
}

FockMonomial FockMonomial::with_exponent(int n, int k) const {
    auto e = exps_;
    if (k == 0)
        e.erase(n);
    else
        e[n] = k;
    return FockMonomial(std::move(e));
}

std::string FockMonomial::str() const {
    if (exps_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [n, k] : exps_) {
        if (!first) os << "*";
        first = false;
        os << "x" << n;
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

void FockPoly::add(const FockMonomial& m, const Rational& q) {
    if (q.is_zero()) return;
    auto [it, inserted] = coeffs_.emplace(m, q);
    if (!inserted) {
        it->second += q;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

int FockPoly::max_weight() const {
    int w = 0;
    for (const auto& [m, q] : coeffs_) w = std::max(w, m.weight());
    return w;
}

FockPoly& FockPoly::operator+=(const FockPoly& o) {
    for (const auto& [m, q] : o.coeffs_) add(m, q);
    return *this;
}

FockPoly& FockPoly::operator-=(const FockPoly& o) {
    for (const auto& [m, q] : o.coeffs_) add(m, -q);
    return *this;
}

FockPoly FockPoly::scaled(const Rational& q) const {
    FockPoly r;
    for (const auto& [m, coeff] : coeffs_) r.add(m, coeff * q);
    return r;
}

std::string FockPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, q] : coeffs_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << q.str() << ")*" << m.str();
    }
    return os.str();
}

FockPoly heis_act(int n, const FockPoly& f, const Rational& mu) {
    FockPoly out;
    if (n == 0) return f.scaled(mu);
    for (const auto& [m, q] : f.coeffs()) {
        if (n > 0) {
            const int k = m.exponent(n);
            if (k == 0) continue;
            out.add(m.with_exponent(n, k - 1), q * Rational(k));
        } else {
            const int v = -n;
            out.add(m.with_exponent(v, m.exponent(v) + 1), q * Rational(v));
        }
    }
    return out;
}

FockPoly fock_L(int n, const FockPoly& f, const Rational& mu) {
    if (f.is_zero()) return FockPoly();
    FockPoly out;
    const int w = f.max_weight();
    // Terms (1/2) :a_{n-k} a_k: vanish on f once the annihilating factor's
    // index exceeds the top weight, so k in [n-w-1, w+1] covers everything.
    for (int k = std::min(n, 0) - w - 1; k <= std::max(n, 0) + w + 1; ++k) {
        int i = n - k, j = k;
        if (i > j) std::swap(i, j);  // normal order: smaller index on the left
        FockPoly t = heis_act(i, heis_act(j, f, mu), mu);
        out += t.scaled(Rational(1, 2));
    }
    return out;
}

BracketCheckResult fock_bracket_check(int m, int n, int weight_cutoff, const Rational& mu) {
    const int raise = std::max({0, -m, -n, -m - n});
    const int bound = weight_cutoff - raise;
    if (bound < 0)
        throw CutoffTooSmall("fock_bracket_check: cutoff admits no monomial for these modes");

    const Rational central =
        (m + n == 0) ? Rational(static_cast<long>(m) * m * m - m, 12) : Rational(0);
    for (int w = 0; w <= bound; ++w) {
        for (const auto& mono : fock_monomials_of_weight(w)) {
            const FockPoly f = FockPoly::monomial(mono);
            FockPoly lhs = fock_L(m, fock_L(n, f, mu), mu) - fock_L(n, fock_L(m, f, mu), mu);
            FockPoly rhs = fock_L(m + n, f, mu).scaled(Rational(m - n)) + f.scaled(central);
            if (!(lhs == rhs)) return {false, mono};
        }
    }
    return {true, std::nullopt};
}

Rational fock_inner(const FockPoly& f, const FockPoly& g) {
    Rational out(0);
    for (const auto& [m, qf] : f.coeffs()) {
        auto it = g.coeffs().find(m);
        if (it == g.coeffs().end()) continue;
        Rational norm(1);
        for (const auto& [n, k] : m.exps())
            norm *= factorial(k) / Rational(n).pow(static_cast<unsigned>(k));
        out += qf * it->second * norm;
    }
    return out;
}

std::vector<FockMonomial> fock_monomials_of_weight(int weight) {
    std::vector<FockMonomial> out;
    for (const auto& p : partitions_of(weight, 1)) {
        std::map<int, int> exps;
        for (int part : p.parts()) ++exps[part];
        out.push_back(FockMonomial(std::move(exps)));
    }
    return out;
}

}  // namespace cft
