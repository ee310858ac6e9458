#include "cft/graded_operator.hpp"

#include <stdexcept>

namespace cft {

std::size_t GradedSpace::index_of(int level, const Partition& p) const {
    const auto& b = level_basis(level);
    for (std::size_t i = 0; i < b.size(); ++i)
        if (b[i] == p) return i;
    throw std::out_of_range("GradedSpace: partition not in level basis");
}

GradedSpacePtr make_graded_space(int cutoff, int min_part) {
    if (cutoff < 0) throw std::invalid_argument("make_graded_space: negative cutoff");
    auto space = std::make_shared<GradedSpace>();
    space->cutoff = cutoff;
    space->min_part = min_part;
    for (int n = 0; n <= cutoff; ++n) space->basis.push_back(partitions_of(n, min_part));
    return space;
}

GradedOperator::GradedOperator(GradedSpacePtr space, int shift)
    : space_(std::move(space)), shift_(shift) {
    blocks_.resize(static_cast<std::size_t>(space_->cutoff) + 1);
}

GradedOperator GradedOperator::zero(GradedSpacePtr space, int shift) {
    GradedOperator op(std::move(space), shift);
    for (int l = 0; l <= op.cutoff(); ++l) {
        const int target = l + shift;
        if (target >= 0 && target <= op.cutoff())
            op.set_block(l, Mat(static_cast<std::size_t>(op.space_->dim(target)),
                                static_cast<std::size_t>(op.space_->dim(l))));
    }
    return op;
}

GradedOperator GradedOperator::identity(GradedSpacePtr space) {
    GradedOperator op(std::move(space), 0);
    for (int l = 0; l <= op.cutoff(); ++l)
        op.set_block(l, Mat::identity(static_cast<std::size_t>(op.space_->dim(l))));
    return op;
}

BlockKind GradedOperator::kind(int source_level) const {
    if (source_level < 0 || source_level > cutoff())
        throw std::out_of_range("GradedOperator: source level outside window");
    const int target = source_level + shift_;
    if (target < 0) return BlockKind::ZeroByGrading;
    if (target > cutoff()) return BlockKind::Undefined;
    return blocks_[static_cast<std::size_t>(source_level)] ? BlockKind::Defined
                                                           : BlockKind::Undefined;
}

const GradedOperator::Mat& GradedOperator::block(int source_level) const {
    if (kind(source_level) != BlockKind::Defined)
        throw WindowExhausted("GradedOperator: block undefined at this level");
    return *blocks_[static_cast<std::size_t>(source_level)];
}

void GradedOperator::set_block(int source_level, Mat m) {
    const int target = source_level + shift_;
    if (target < 0 || target > cutoff())
        throw std::logic_error("GradedOperator: target outside window");
    if (m.rows() != static_cast<std::size_t>(space_->dim(target)) ||
        m.cols() != static_cast<std::size_t>(space_->dim(source_level)))
        throw std::invalid_argument("GradedOperator: block shape mismatch");
    blocks_[static_cast<std::size_t>(source_level)] = std::move(m);
}

void GradedOperator::mark_undefined(int source_level) {
    blocks_[static_cast<std::size_t>(source_level)] = std::nullopt;
}

bool GradedOperator::fully_defined() const {
    for (int l = 0; l <= cutoff(); ++l)
        if (kind(l) == BlockKind::Undefined) return false;
    return true;
}

std::optional<std::vector<ScalarPoly>> GradedOperator::apply(
    int source_level, const std::vector<ScalarPoly>& coeffs) const {
    switch (kind(source_level)) {
        case BlockKind::Undefined: return std::nullopt;
        case BlockKind::ZeroByGrading: return std::vector<ScalarPoly>{};
        case BlockKind::Defined: break;
    }
    const Mat& m = block(source_level);
    if (coeffs.size() != m.cols()) throw std::invalid_argument("apply: coefficient size mismatch");
    std::vector<ScalarPoly> out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m.at(i, j) * coeffs[j];
    return out;
}

GradedOperator GradedOperator::scaled(const ScalarPoly& s) const {
    GradedOperator out(space_, shift_);
    for (int l = 0; l <= cutoff(); ++l)
        if (kind(l) == BlockKind::Defined) out.set_block(l, block(l).scaled(s));
    return out;
}

GradedOperator operator+(const GradedOperator& a, const GradedOperator& b) {
    if (a.shift_ != b.shift_) throw std::invalid_argument("operator+: shift mismatch");
    GradedOperator out(a.space_, a.shift_);
    for (int l = 0; l <= a.cutoff(); ++l)
        if (a.kind(l) == BlockKind::Defined && b.kind(l) == BlockKind::Defined)
            out.set_block(l, a.block(l) + b.block(l));
    return out;
}

GradedOperator operator-(const GradedOperator& a, const GradedOperator& b) {
    return a + b.scaled(ScalarPoly(-1));
}

GradedOperator GradedOperator::compose(const GradedOperator& a, const GradedOperator& b) {
    if (a.space_ != b.space_) throw std::invalid_argument("compose: space mismatch");
    GradedOperator out(a.space_, a.shift_ + b.shift_);
    for (int l = 0; l <= out.cutoff(); ++l) {
        const int target = l + out.shift_;
        if (target < 0 || target > out.cutoff()) continue;
        switch (b.kind(l)) {
            case BlockKind::Undefined: continue;
            case BlockKind::ZeroByGrading:
                out.set_block(l, Mat(static_cast<std::size_t>(out.space_->dim(target)),
                                     static_cast<std::size_t>(out.space_->dim(l))));
                continue;
            case BlockKind::Defined: break;
        }
        const int mid = l + b.shift_;
        if (a.kind(mid) != BlockKind::Defined) continue;  // ZeroByGrading impossible: target >= 0
        out.set_block(l, a.block(mid) * b.block(l));
    }
    return out;
}

GradedOperator GradedOperator::commutator(const GradedOperator& a, const GradedOperator& b) {
    return compose(a, b) - compose(b, a);
}

bool GradedOperator::agree_on_defined(const GradedOperator& a, const GradedOperator& b) {
    if (a.shift_ != b.shift_) throw std::invalid_argument("agree_on_defined: shift mismatch");
    for (int l = 0; l <= a.cutoff(); ++l)
        if (a.kind(l) == BlockKind::Defined && b.kind(l) == BlockKind::Defined &&
            !(a.block(l) == b.block(l)))
            return false;
    return true;
}

bool GradedOperator::zero_on_defined() const {
    for (int l = 0; l <= cutoff(); ++l)
        if (kind(l) == BlockKind::Defined && !block(l).is_zero()) return false;
    return true;
}

std::size_t GradedOperator::defined_level_count() const {
    std::size_t n = 0;
    for (int l = 0; l <= cutoff(); ++l)
        if (kind(l) != BlockKind::Undefined) ++n;
    return n;
}

}  // namespace cft
