#pragma once

// Fields a(z) = sum_n a_{(n)} z^{-n-1} acting on a truncated graded module.
// A field of conformal weight w stores the modes n with |n - (w-1)| <= cutoff
// (exactly those that can act between in-window levels); n-th products,
// normally ordered products, locality order detection and OPE coefficients
// are computed from the mode formulas with undefinedness tracked blockwise.

#include "cft/graded_operator.hpp"

#include <map>
#include <optional>
#include <vector>

namespace cft {

class ModeField {
  public:
    ModeField(GradedSpacePtr space, int weight);

    static ModeField identity(GradedSpacePtr space);
    static ModeField zero(GradedSpacePtr space, int weight);

    int weight() const { return weight_; }
    int cutoff() const { return space_->cutoff; }
    const GradedSpacePtr& space() const { return space_; }

    int mode_min() const { return weight_ - 1 - cutoff(); }
    int mode_max() const { return weight_ - 1 + cutoff(); }

    // Stored mode, or the grading-forced zero / undefined operator outside
    // the support range.
    GradedOperator mode(int n) const;
    void set_mode(int n, GradedOperator op);

    ModeField derivative() const;           // (da)_{(n)} = -n a_{(n-1)}
    ModeField divided_derivative(int order) const;
    ModeField scaled(const ScalarPoly& s) const;
    friend ModeField operator+(const ModeField& a, const ModeField& b);

    static bool agree_on_defined(const ModeField& a, const ModeField& b);
    bool zero_on_defined() const;

  private:
    GradedSpacePtr space_;
    int weight_ = 0;
    std::map<int, GradedOperator> modes_;
};

// :a(z)b(z): with modes sum_{j<=-1} a_(j) b_(m-j-1) + sum_{j>=0} b_(m-j-1) a_(j);
// both sums terminate by the grading, blocks needing data beyond the cutoff
// stay undefined.
ModeField normal_ordered(const ModeField& a, const ModeField& b);

// n >= 0: (a_(n) b)_(m) = sum_{j=0}^{n} (-1)^j binom(n,j) [a_(n-j), b_(m+j)];
// n < 0: :D^(-n-1)a b:.
ModeField nth_product(const ModeField& a, const ModeField& b, int n);

// Least N <= n_max such that [a_(m), b_(n)] = sum_{j<N} binom(m,j)
// (a_(j)b)_(m+n-j) on every pair of in-window modes, compared on all blocks
// defined on both sides; nullopt when no N works on the window.
std::optional<int> locality_order(const ModeField& a, const ModeField& b, int n_max);

// The OPE coefficient fields [a_(0)b, ..., a_(N-1)b].
std::vector<ModeField> ope_coeffs(const ModeField& a, const ModeField& b, int order);

// Reconstruction: the commutator identity above at N = coeffs.size().
bool ope_reconstruction_ok(const ModeField& a, const ModeField& b,
                           const std::vector<ModeField>& coeffs);

}  // namespace cft
