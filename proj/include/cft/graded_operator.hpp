#pragma once

// Level-shifting operators on a graded module truncated to levels [0, L].
// A block maps the basis of a source level to the basis of the shifted
// level. Targets below level 0 vanish by the grading; targets above the
// truncation are undefined, never silently zero, and undefinedness
// propagates through sums and compositions.

#include "cft/matrix.hpp"
#include "cft/partition.hpp"
#include "cft/scalar_poly.hpp"

#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

namespace cft {

// Raised when a computation needs mode data the truncation does not hold.
struct WindowExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GradedSpace {
    int cutoff = 0;
    int min_part = 1;
    std::vector<std::vector<Partition>> basis;  // basis[level]

    int dim(int level) const {
        if (level < 0 || level > cutoff) return 0;
        return static_cast<int>(basis[static_cast<std::size_t>(level)].size());
    }
    const std::vector<Partition>& level_basis(int level) const {
        return basis[static_cast<std::size_t>(level)];
    }
    std::size_t index_of(int level, const Partition& p) const;
};

using GradedSpacePtr = std::shared_ptr<const GradedSpace>;

GradedSpacePtr make_graded_space(int cutoff, int min_part);

enum class BlockKind { ZeroByGrading, Defined, Undefined };

class GradedOperator {
  public:
    using Mat = DenseMatrix<ScalarPoly>;

    GradedOperator(GradedSpacePtr space, int shift);

    static GradedOperator zero(GradedSpacePtr space, int shift);
    static GradedOperator identity(GradedSpacePtr space);

    int shift() const { return shift_; }
    int cutoff() const { return space_->cutoff; }
    const GradedSpacePtr& space() const { return space_; }

    BlockKind kind(int source_level) const;
    const Mat& block(int source_level) const;  // requires kind == Defined
    void set_block(int source_level, Mat m);
    void mark_undefined(int source_level);

    bool fully_defined() const;

    // Result of applying to coefficients at source_level; nullopt when the
    // block is undefined, empty vector when the image vanishes by grading.
    std::optional<std::vector<ScalarPoly>> apply(int source_level,
                                                 const std::vector<ScalarPoly>& coeffs) const;

    GradedOperator scaled(const ScalarPoly& s) const;

    friend GradedOperator operator+(const GradedOperator& a, const GradedOperator& b);
    friend GradedOperator operator-(const GradedOperator& a, const GradedOperator& b);

    // a after b; undefined wherever an intermediate level leaves the window.
    static GradedOperator compose(const GradedOperator& a, const GradedOperator& b);
    static GradedOperator commutator(const GradedOperator& a, const GradedOperator& b);

    // Equality of all blocks defined on both sides.
    static bool agree_on_defined(const GradedOperator& a, const GradedOperator& b);
    bool zero_on_defined() const;
    std::size_t defined_level_count() const;

  private:
    GradedSpacePtr space_;
    int shift_ = 0;
    std::vector<std::optional<Mat>> blocks_;  // by source level, targets in window only
};

}  // namespace cft
