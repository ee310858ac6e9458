#include "cft/mode_field.hpp"

namespace cft {

ModeField::ModeField(GradedSpacePtr space, int weight)
    : space_(std::move(space)), weight_(weight) {}

ModeField ModeField::identity(GradedSpacePtr space) {
    ModeField f(space, 0);
    for (int n = f.mode_min(); n <= f.mode_max(); ++n)
        f.set_mode(n, n == -1 ? GradedOperator::identity(space)
                              : GradedOperator::zero(space, -1 - n));
    return f;
}

ModeField ModeField::zero(GradedSpacePtr space, int weight) {
    ModeField f(space, weight);
    for (int n = f.mode_min(); n <= f.mode_max(); ++n)
        f.set_mode(n, GradedOperator::zero(space, weight - 1 - n));
    return f;
}

GradedOperator ModeField::mode(int n) const {
    auto it = modes_.find(n);
    if (it != modes_.end()) return it->second;
    // Outside the support range the shift leaves the window entirely:
    // below-range modes are undefined, above-range modes vanish by grading.
    return GradedOperator(space_, weight_ - 1 - n);
}

void ModeField::set_mode(int n, GradedOperator op) {
    if (op.shift() != weight_ - 1 - n) throw std::invalid_argument("set_mode: wrong shift");
    modes_.insert_or_assign(n, std::move(op));
}

ModeField ModeField::derivative() const {
    ModeField out(space_, weight_ + 1);
    for (int n = out.mode_min(); n <= out.mode_max(); ++n)
        out.set_mode(n, mode(n - 1).scaled(ScalarPoly(Rational(-n))));
    return out;
}

ModeField ModeField::divided_derivative(int order) const {
    ModeField out = *this;
    for (int k = 1; k <= order; ++k)
        out = out.derivative().scaled(ScalarPoly(Rational(1, k)));
    return out;
}

ModeField ModeField::scaled(const ScalarPoly& s) const {
    ModeField out(space_, weight_);
    for (const auto& [n, op] : modes_) out.set_mode(n, op.scaled(s));
    return out;
}

ModeField operator+(const ModeField& a, const ModeField& b) {
    if (a.weight_ != b.weight_) throw std::invalid_argument("ModeField sum: weight mismatch");
    ModeField out(a.space_, a.weight_);
    for (int n = out.mode_min(); n <= out.mode_max(); ++n) out.set_mode(n, a.mode(n) + b.mode(n));
    return out;
}

bool ModeField::agree_on_defined(const ModeField& a, const ModeField& b) {
    if (a.weight_ != b.weight_) return false;
    for (int n = a.mode_min(); n <= a.mode_max(); ++n)
        if (!GradedOperator::agree_on_defined(a.mode(n), b.mode(n))) return false;
    return true;
}

bool ModeField::zero_on_defined() const {
    for (int n = mode_min(); n <= mode_max(); ++n)
        if (!mode(n).zero_on_defined()) return false;
    return true;
}

ModeField normal_ordered(const ModeField& a, const ModeField& b) {
    if (a.space() != b.space()) throw std::invalid_argument("normal_ordered: space mismatch");
    const auto space = a.space();
    const int cutoff = a.cutoff();
    const int w = a.weight() + b.weight();
    ModeField out(space, w);

    for (int m = out.mode_min(); m <= out.mode_max(); ++m) {
        GradedOperator op(space, w - 1 - m);
        for (int l = 0; l <= cutoff; ++l) {
            const int target = l + op.shift();
            if (target < 0 || target > cutoff) continue;
            GradedOperator::Mat acc(static_cast<std::size_t>(space->dim(target)),
                                    static_cast<std::size_t>(space->dim(l)));
            bool ok = true;
            // Creation part: a_(j) b_(m-j-1) for j <= -1. The intermediate
            // level l' = target - (a.weight - j - 1) stays <= target here.
            for (int j = -1; ok; --j) {
                const int mid = l + b.weight() + j - m;
                if (mid < 0) break;
                if (mid > cutoff) { ok = false; break; }
                const GradedOperator bm = b.mode(m - j - 1);
                const GradedOperator am = a.mode(j);
                if (bm.kind(l) != BlockKind::Defined || am.kind(mid) != BlockKind::Defined) {
                    ok = false;
                    break;
                }
                acc = acc + am.block(mid) * bm.block(l);
            }
            // Annihilation part: b_(m-j-1) a_(j) for j >= 0.
            for (int j = 0; ok; ++j) {
                const int mid = l + a.weight() - j - 1;
                if (mid < 0) break;
                if (mid > cutoff) { ok = false; break; }
                const GradedOperator am = a.mode(j);
                const GradedOperator bm = b.mode(m - j - 1);
                if (am.kind(l) != BlockKind::Defined || bm.kind(mid) != BlockKind::Defined) {
                    ok = false;
                    break;
                }
                acc = acc + bm.block(mid) * am.block(l);
            }
            if (ok) op.set_block(l, std::move(acc));
        }
        out.set_mode(m, std::move(op));
    }
    return out;
}

ModeField nth_product(const ModeField& a, const ModeField& b, int n) {
    if (a.space() != b.space()) throw std::invalid_argument("nth_product: space mismatch");
    if (n < 0) return normal_ordered(a.divided_derivative(-n - 1), b);

    const auto space = a.space();
    const int w = a.weight() + b.weight() - n - 1;
    ModeField out(space, w);
    for (int m = out.mode_min(); m <= out.mode_max(); ++m) {
        GradedOperator op = GradedOperator::zero(space, w - 1 - m);
        for (int j = 0; j <= n; ++j) {
            const Rational coeff = binomial(n, j) * (j % 2 == 0 ? Rational(1) : Rational(-1));
            op = op + GradedOperator::commutator(a.mode(n - j), b.mode(m + j))
                          .scaled(ScalarPoly(coeff));
        }
        out.set_mode(m, std::move(op));
    }
    return out;
}

namespace {

// RHS of the locality identity: sum_{j<N} binom(m,j) (c^j)_(m+n-j).
// Terms with a vanishing binomial are dropped before definedness matters.
GradedOperator locality_rhs(const std::vector<ModeField>& coeffs, int upto, int m, int n,
                            const GradedSpacePtr& space, int shift) {
    GradedOperator rhs = GradedOperator::zero(space, shift);
    for (int j = 0; j < upto; ++j) {
        const Rational bin = binomial(m, j);
        if (bin.is_zero()) continue;
        rhs = rhs + coeffs[static_cast<std::size_t>(j)].mode(m + n - j).scaled(ScalarPoly(bin));
    }
    return rhs;
}

}  // namespace

std::optional<int> locality_order(const ModeField& a, const ModeField& b, int n_max) {
    if (n_max < 1) throw std::invalid_argument("locality_order: n_max must be >= 1");
    std::vector<ModeField> coeffs;
    for (int j = 0; j < n_max; ++j) coeffs.push_back(nth_product(a, b, j));

    for (int order = 1; order <= n_max; ++order) {
        std::vector<ModeField> head(coeffs.begin(), coeffs.begin() + order);
        if (ope_reconstruction_ok(a, b, head)) return order;
    }
    return std::nullopt;
}

std::vector<ModeField> ope_coeffs(const ModeField& a, const ModeField& b, int order) {
    if (order < 1) throw std::invalid_argument("ope_coeffs: order must be >= 1");
    std::vector<ModeField> out;
    for (int j = 0; j < order; ++j) out.push_back(nth_product(a, b, j));
    return out;
}

bool ope_reconstruction_ok(const ModeField& a, const ModeField& b,
                           const std::vector<ModeField>& coeffs) {
    const int order = static_cast<int>(coeffs.size());
    for (int m = a.mode_min(); m <= a.mode_max(); ++m)
        for (int n = b.mode_min(); n <= b.mode_max(); ++n) {
            const GradedOperator lhs = GradedOperator::commutator(a.mode(m), b.mode(n));
            const GradedOperator rhs =
                locality_rhs(coeffs, order, m, n, a.space(), lhs.shift());
            if (!GradedOperator::agree_on_defined(lhs, rhs)) return false;
        }
    return true;
}

}  // namespace cft
