#pragma once

// Highest weight modules of the Virasoro algebra over Q[c,h]: the mode
// action by PBW straightening, the Shapovalov form and its level Gram
// matrices, the Kac determinant both directly and in factored form, the
// discrete series points, unitarity classification, singular vectors and
// graded dimensions of the irreducible quotient.

#include "cft/linalg.hpp"
#include "cft/matrix.hpp"
#include "cft/partition.hpp"
#include "cft/rational.hpp"
#include "cft/scalar_poly.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cft {

// Finite linear combination of basis vectors v_lambda with Q[c,h] coefficients.
class VermaVector {
  public:
    VermaVector() = default;

    static VermaVector basis_vector(const Partition& p) {
        VermaVector v;
        v.add(p, ScalarPoly(1));
        return v;
    }
    static VermaVector vacuum() { return basis_vector(Partition::empty()); }

    void add(const Partition& p, const ScalarPoly& coeff);

    const std::map<Partition, ScalarPoly>& coeffs() const { return coeffs_; }
    ScalarPoly coeff(const Partition& p) const;
    bool is_zero() const { return coeffs_.empty(); }

    // Weight of a homogeneous vector; nullopt for 0 or mixed weights.
    std::optional<int> homogeneous_weight() const;

    VermaVector& operator+=(const VermaVector& o);
    VermaVector& operator-=(const VermaVector& o);
    friend VermaVector operator+(VermaVector a, const VermaVector& b) { return a += b; }
    friend VermaVector operator-(VermaVector a, const VermaVector& b) { return a -= b; }
    VermaVector scaled(const ScalarPoly& s) const;

    // Specialize all coefficients at (c0, h0).
    VermaVector eval(const Rational& c0, const Rational& h0) const;

    friend bool operator==(const VermaVector& a, const VermaVector& b) {
        return a.coeffs_ == b.coeffs_;
    }

    std::string str() const;

  private:
    std::map<Partition, ScalarPoly> coeffs_;
};

// Vacuum conditions of the module being built. min_part 1 with symbolic h is
// the Verma module M(c,h); min_part 2 with h = 0 is the vacuum module where
// additionally L_{-1}|0> = 0 (parts >= 2 basis).
struct ModuleRules {
    int min_part = 1;
    bool zero_h = false;
};

// Applies Virasoro modes to basis vectors by commutator straightening:
// annihilators move right, creation parts stay weakly decreasing. Results
// are memoized per (mode, partition) and shared across threads.
class RewriteEngine {
  public:
    explicit RewriteEngine(ModuleRules rules = {}) : rules_(rules) {}

    const ModuleRules& rules() const { return rules_; }

    VermaVector act(int mode, const Partition& p) const;
    VermaVector act(int mode, const VermaVector& v) const;

    // Shapovalov pairing <v_a, v_b> as a polynomial in c (and h unless the
    // rules fix h = 0): apply the raising word of a to v_b, read off the
    // vacuum coefficient.
    ScalarPoly pairing(const Partition& a, const Partition& b) const;
    ScalarPoly pairing(const VermaVector& a, const VermaVector& b) const;

    // Optional persistent memo cache (versioned text format, see README).
    void save_cache(const std::string& path) const;
    bool load_cache(const std::string& path);
    std::string cache_file_name() const;

  private:
    VermaVector compute(int mode, const Partition& p) const;

    ModuleRules rules_;
    mutable std::mutex mutex_;
    mutable std::map<std::pair<int, Partition>, VermaVector> memo_;
};

struct GramMatrix {
    int level = 0;
    std::vector<Partition> basis;
    DenseMatrix<ScalarPoly> matrix;

    RatMatrix eval(const Rational& c0, const Rational& h0) const;
};

struct PhiExponent {
    int p = 0;
    int q = 0;
    int exponent = 0;
};

struct KacFactorization {
    Rational constant;               // K_N
    ScalarPoly product;              // prod phi_{p,q}^{P(N-pq)}
    std::vector<PhiExponent> factors;
};

struct NonconstantRatioError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DiscreteSeriesEntry {
    int p = 0;
    int q = 0;
    Rational h;
};

struct DiscreteSeriesPoint {
    int m = 0;
    Rational c;
    std::vector<DiscreteSeriesEntry> entries;
};

struct LevelVerdict {
    int level = 0;
    Definiteness verdict = Definiteness::PositiveDefinite;
    std::size_t nullity = 0;
};

class VermaModule {
  public:
    VermaModule() : engine_(ModuleRules{1, false}) {}

    const RewriteEngine& engine() const { return engine_; }
    RewriteEngine& engine() { return engine_; }

    VermaVector act(int mode, const VermaVector& v) const { return engine_.act(mode, v); }
    ScalarPoly shapovalov(const Partition& a, const Partition& b) const {
        return engine_.pairing(a, b);
    }
    ScalarPoly inner(const VermaVector& a, const VermaVector& b) const {
        return engine_.pairing(a, b);
    }

    GramMatrix gram(int level) const;
    ScalarPoly kac_det_direct(int level) const { return bareiss_det(gram(level).matrix); }

    // phi_{q,q} = h + (c-1)(q^2-1)/24 and, for p > q, the merged quadratic
    // (h - h_{p,q})(h - h_{q,p}) written without the square root.
    static ScalarPoly phi_pq(int p, int q);

    KacFactorization kac_det_formula(int level) const;

    static DiscreteSeriesPoint discrete_series(int m, bool extended_range = false);

    std::vector<LevelVerdict> unitarity_classify(const Rational& c0, const Rational& h0,
                                                 int level_max) const;

    std::vector<VermaVector> singular_vectors(const Rational& c0, const Rational& h0,
                                              int level) const;

    std::vector<std::size_t> quotient_graded_dims(const Rational& c0, const Rational& h0,
                                                  int level_max) const;

  private:
    RewriteEngine engine_;
};

// Central-term recurrence on the Witt cocycle diagonal:
// (n-1) f(n+1) = (n+2) f(n) - (2n+1) f(1).
bool cocycle_recurrence_holds(const std::vector<Rational>& f, int bound);

// Checks that f(n)=n and f(n)=n^3 solve the recurrence up to `bound`, and
// that propagating symbolic initial values f(1), f(2) stays inside
// span{n, n^3}. Requires bound >= 3.
bool cocycle_check(int bound);

}  // namespace cft
