#pragma once

// The vacuum module of the Virasoro algebra at central charge c (symbolic
// or rational), truncated at a level cutoff: basis partitions with parts
// >= 2, the L_n block matrices, the state-field correspondence built by
// iterated n-th products of the generating field, and the axiom batteries
// (vacuum, translation covariance, locality, commutator formula, sl(2),
// invariant form) checked blockwise on the window.

#include "cft/graded_operator.hpp"
#include "cft/linalg.hpp"
#include "cft/mode_field.hpp"
#include "cft/verma.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cft {

struct AxiomReport {
    bool ok = true;
    std::vector<std::string> failures;

    void fail(const std::string& what) {
        ok = false;
        failures.push_back(what);
    }
};

enum class StateClass { Primary, Quasiprimary, Neither, NotHomogeneous };

std::string to_string(StateClass s);

struct Classification {
    StateClass kind = StateClass::NotHomogeneous;
    int weight = 0;
};

class VOAModule {
  public:
    // Symbolic central charge when c_value is nullopt.
    VOAModule(std::optional<Rational> c_value, int cutoff);

    int cutoff() const { return cutoff_; }
    const GradedSpacePtr& space() const { return space_; }
    const RewriteEngine& engine() const { return engine_; }
    RewriteEngine& engine() { return engine_; }
    std::optional<Rational> central_charge() const { return c_value_; }
    ScalarPoly central_charge_poly() const;

    std::vector<std::size_t> level_dims() const;

    const GradedOperator& L_op(int n) const;
    const ModeField& virasoro_field() const { return virasoro_; }

    static VermaVector vacuum_state() { return VermaVector::vacuum(); }
    static VermaVector conformal_vector() {
        return VermaVector::basis_vector(Partition({2}));
    }

    VermaVector act(int mode, const VermaVector& v) const;

    // Y(a, z) for a homogeneous state via right-nested n-th products of the
    // generating field; Y(|0>, z) is the identity field.
    ModeField state_field(const VermaVector& a) const;

    AxiomReport vacuum_axiom_check() const;
    AxiomReport translation_axiom_check() const;
    AxiomReport locality_check(int max_state_level) const;
    AxiomReport borcherds_check(const VermaVector& a, const VermaVector& b) const;
    AxiomReport borcherds_suite(int max_state_level) const;
    AxiomReport sl2_check() const;
    AxiomReport invariant_form_check() const;

    Classification classify_state(const VermaVector& a) const;

    // Shapovalov form carried to the parts>=2 basis at h = 0.
    ScalarPoly inner(const VermaVector& a, const VermaVector& b) const;
    GramMatrix voa_gram(int level) const;

    std::vector<std::size_t> quotient_dims(const Rational& c0) const;

  private:
    ScalarPoly specialize(const ScalarPoly& p) const;
    VermaVector specialize(const VermaVector& v) const;
    ModeField field_for_partition(const Partition& p) const;
    std::vector<ScalarPoly> state_coeffs(const VermaVector& v, int level) const;
    VermaVector vector_from_coeffs(int level, const std::vector<ScalarPoly>& coeffs) const;

    std::optional<Rational> c_value_;
    int cutoff_ = 0;
    GradedSpacePtr space_;
    RewriteEngine engine_;
    std::map<int, GradedOperator> l_ops_;
    ModeField virasoro_;
    mutable std::map<Partition, ModeField> field_memo_;
};

// Graded dimensions of the irreducible quotient at central charge c0,
// h = 0, computed from Gram ranks on the parts>=2 basis.
std::vector<std::size_t> quotient_voa_dims(const Rational& c0, int cutoff);

}  // namespace cft
