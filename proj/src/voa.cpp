#include "cft/voa.hpp"

#include <sstream>

namespace cft {

std::string to_string(StateClass s) {
    switch (s) {
        case StateClass::Primary: return "Primary";
        case StateClass::Quasiprimary: return "Quasiprimary";
        case StateClass::Neither: return "Neither";
        case StateClass::NotHomogeneous: return "NotHomogeneous";
    }
    return "?";
}

VOAModule::VOAModule(std::optional<Rational> c_value, int cutoff)
    : c_value_(std::move(c_value)),
      cutoff_(cutoff),
      space_(make_graded_space(cutoff, 2)),
      engine_(ModuleRules{2, true}),
      virasoro_(space_, 2) {
    if (cutoff < 2) throw std::invalid_argument("VOAModule: cutoff must be >= 2");
    for (int n = -cutoff_; n <= cutoff_; ++n) {
        GradedOperator op(space_, -n);
        for (int l = 0; l <= cutoff_; ++l) {
            const int target = l - n;
            if (target < 0 || target > cutoff_) continue;
            GradedOperator::Mat m(static_cast<std::size_t>(space_->dim(target)),
                                  static_cast<std::size_t>(space_->dim(l)));
            const auto& src = space_->level_basis(l);
            for (std::size_t col = 0; col < src.size(); ++col) {
                const VermaVector image = engine_.act(n, src[col]);
                for (const auto& [p, q] : image.coeffs())
                    m.at(space_->index_of(target, p), col) = specialize(q);
            }
            op.set_block(l, std::move(m));
        }
        l_ops_.emplace(n, std::move(op));
    }
    for (int k = virasoro_.mode_min(); k <= virasoro_.mode_max(); ++k)
        virasoro_.set_mode(k, l_ops_.at(k - 1));
}

ScalarPoly VOAModule::central_charge_poly() const {
    return c_value_ ? ScalarPoly(*c_value_) : ScalarPoly::var_c();
}

ScalarPoly VOAModule::specialize(const ScalarPoly& p) const {
    return c_value_ ? ScalarPoly(p.eval(*c_value_, Rational(0))) : p;
}

VermaVector VOAModule::specialize(const VermaVector& v) const {
    if (!c_value_) return v;
    VermaVector out;
    for (const auto& [p, q] : v.coeffs()) out.add(p, specialize(q));
    return out;
}

std::vector<std::size_t> VOAModule::level_dims() const {
    std::vector<std::size_t> dims;
    for (int l = 0; l <= cutoff_; ++l) dims.push_back(static_cast<std::size_t>(space_->dim(l)));
    return dims;
}

const GradedOperator& VOAModule::L_op(int n) const {
    auto it = l_ops_.find(n);
    if (it == l_ops_.end()) throw std::out_of_range("L_op: mode outside window");
    return it->second;
}

VermaVector VOAModule::act(int mode, const VermaVector& v) const {
    return specialize(engine_.act(mode, v));
}

std::vector<ScalarPoly> VOAModule::state_coeffs(const VermaVector& v, int level) const {
    std::vector<ScalarPoly> out(static_cast<std::size_t>(space_->dim(level)));
    for (const auto& [p, q] : v.coeffs()) {
        if (p.weight() != level)
            throw std::invalid_argument("state_coeffs: vector not homogeneous at level");
        out[space_->index_of(level, p)] = q;
    }
    return out;
}

VermaVector VOAModule::vector_from_coeffs(int level, const std::vector<ScalarPoly>& coeffs) const {
    VermaVector v;
    const auto& basis = space_->level_basis(level);
    for (std::size_t i = 0; i < coeffs.size(); ++i) v.add(basis[i], coeffs[i]);
    return v;
}

ModeField VOAModule::field_for_partition(const Partition& p) const {
    auto it = field_memo_.find(p);
    if (it != field_memo_.end()) return it->second;
    ModeField f = ModeField::identity(space_);
    const auto& parts = p.parts();
    for (auto part = parts.rbegin(); part != parts.rend(); ++part)
        f = nth_product(virasoro_, f, -*part + 1);
    field_memo_.emplace(p, f);
    return f;
}

ModeField VOAModule::state_field(const VermaVector& a) const {
    const auto weight = a.homogeneous_weight();
    if (!weight) {
        if (a.is_zero()) throw std::invalid_argument("state_field: zero state has no weight");
        throw std::invalid_argument("state_field: state is not homogeneous");
    }
    if (*weight > cutoff_) throw WindowExhausted("state_field: state level beyond cutoff");
    ModeField out = ModeField::zero(space_, *weight);
    for (const auto& [p, q] : a.coeffs()) out = out + field_for_partition(p).scaled(q);
    return out;
}

AxiomReport VOAModule::vacuum_axiom_check() const {
    AxiomReport report;
    // T|0> = 0.
    const VermaVector t_vac = act(-1, vacuum_state());
    if (!t_vac.is_zero()) report.fail("T|0> != 0");
    // Y(|0>, z) = id.
    if (!ModeField::agree_on_defined(state_field(vacuum_state()), ModeField::identity(space_)))
        report.fail("Y(|0>,z) != id");
    // Y(a, z)|0> is regular at z = 0 with constant term a.
    for (int level = 0; level <= cutoff_ - 2; ++level) {
        for (const auto& p : space_->level_basis(level)) {
            const ModeField f = field_for_partition(p);
            const std::vector<ScalarPoly> vac{ScalarPoly(1)};
            for (int n = f.mode_min(); n <= f.mode_max(); ++n) {
                const auto img = f.mode(n).apply(0, vac);
                if (!img) continue;
                const int target = f.weight() - 1 - n;
                VermaVector got = img->empty() ? VermaVector() : vector_from_coeffs(target, *img);
                if (n >= 0 && !got.is_zero())
                    report.fail("Y(v" + p.str() + ",z)|0> has a pole: mode " + std::to_string(n));
                if (n == -1 && !(got == VermaVector::basis_vector(p)))
                    report.fail("Y(v" + p.str() + ",z)|0>|_{z=0} != v" + p.str());
            }
        }
    }
    return report;
}

AxiomReport VOAModule::translation_axiom_check() const {
    AxiomReport report;
    const GradedOperator& t = L_op(-1);
    for (int level = 0; level <= cutoff_ - 2; ++level) {
        for (const auto& p : space_->level_basis(level)) {
            const ModeField f = field_for_partition(p);
            const ModeField df = f.derivative();
            ModeField ta_field = ModeField::zero(space_, level + 1);
            const VermaVector ta = act(-1, VermaVector::basis_vector(p));
            if (!ta.is_zero()) ta_field = state_field(ta);
            for (int n = df.mode_min(); n <= df.mode_max(); ++n) {
                // [T, a_(n)] = -n a_(n-1) = (da)_(n) and Y(Ta,z) = dY(a,z).
                const GradedOperator lhs =
                    GradedOperator::commutator(t, f.mode(n));
                if (!GradedOperator::agree_on_defined(lhs, df.mode(n)))
                    report.fail("[T, Y(v" + p.str() + ")] != dY at mode " + std::to_string(n));
                if (!GradedOperator::agree_on_defined(ta_field.mode(n), df.mode(n)))
                    report.fail("Y(Tv" + p.str() + ") != dY at mode " + std::to_string(n));
            }
        }
    }
    return report;
}

AxiomReport VOAModule::locality_check(int max_state_level) const {
    AxiomReport report;
    for (int la = 0; la <= max_state_level; ++la)
        for (int lb = 0; lb <= max_state_level; ++lb)
            for (const auto& pa : space_->level_basis(la))
                for (const auto& pb : space_->level_basis(lb)) {
                    const auto order = locality_order(field_for_partition(pa),
                                                      field_for_partition(pb), la + lb + 2);
                    if (!order)
                        report.fail("no locality order on window for (v" + pa.str() + ", v" +
                                    pb.str() + ")");
                }
    return report;
}

AxiomReport VOAModule::borcherds_check(const VermaVector& a, const VermaVector& b) const {
    AxiomReport report;
    const auto la = a.homogeneous_weight();
    const auto lb = b.homogeneous_weight();
    if (!la || !lb) {
        report.fail("borcherds_check: states must be homogeneous");
        return report;
    }
    if (*la > cutoff_ - 2 || *lb > cutoff_ - 2)
        throw WindowExhausted("borcherds_check: state level too close to the cutoff");
    const ModeField fa = state_field(a);
    const ModeField fb = state_field(b);

    // States a_(j) b and their fields; zero states contribute nothing.
    std::vector<std::optional<ModeField>> product_fields;
    for (int j = 0; j <= *la + *lb; ++j) {
        const auto img = fa.mode(j).apply(*lb, state_coeffs(b, *lb));
        if (!img) throw WindowExhausted("borcherds_check: a_(j) b not computable at cutoff");
        const int target = *la + *lb - j - 1;
        if (img->empty() || target < 0) {
            product_fields.emplace_back(std::nullopt);
            continue;
        }
        const VermaVector state = vector_from_coeffs(target, *img);
        if (state.is_zero())
            product_fields.emplace_back(std::nullopt);
        else
            product_fields.emplace_back(state_field(state));
    }

    for (int m = fa.mode_min(); m <= fa.mode_max(); ++m)
        for (int n = fb.mode_min(); n <= fb.mode_max(); ++n) {
            const GradedOperator lhs = GradedOperator::commutator(fa.mode(m), fb.mode(n));
            GradedOperator rhs = GradedOperator::zero(space_, lhs.shift());
            for (int j = 0; j <= *la + *lb; ++j) {
                const Rational bin = binomial(m, j);
                if (bin.is_zero() || !product_fields[static_cast<std::size_t>(j)]) continue;
                rhs = rhs + product_fields[static_cast<std::size_t>(j)]
                                ->mode(m + n - j)
                                .scaled(ScalarPoly(bin));
            }
            if (!GradedOperator::agree_on_defined(lhs, rhs)) {
                std::ostringstream os;
                os << "commutator formula fails at (m,n)=(" << m << "," << n << ")";
                report.fail(os.str());
            }
        }
    return report;
}

AxiomReport VOAModule::borcherds_suite(int max_state_level) const {
    AxiomReport report;
    for (int la = 0; la <= max_state_level; ++la)
        for (int lb = 0; lb <= max_state_level; ++lb)
            for (const auto& pa : space_->level_basis(la))
                for (const auto& pb : space_->level_basis(lb)) {
                    const AxiomReport r = borcherds_check(VermaVector::basis_vector(pa),
                                                          VermaVector::basis_vector(pb));
                    if (!r.ok)
                        report.fail("(v" + pa.str() + ", v" + pb.str() + "): " + r.failures[0]);
                }
    return report;
}

AxiomReport VOAModule::sl2_check() const {
    AxiomReport report;
    const GradedOperator& t = L_op(-1);
    const GradedOperator& h = L_op(0);
    const GradedOperator& tstar = L_op(1);

    const auto check_levels = [&](const GradedOperator& lhs, const GradedOperator& rhs,
                                  int level_max, const std::string& what) {
        for (int l = 0; l <= level_max; ++l) {
            if (lhs.kind(l) != BlockKind::Defined || rhs.kind(l) != BlockKind::Defined) continue;
            if (!(lhs.block(l) == rhs.block(l))) report.fail(what + " at level " + std::to_string(l));
        }
    };
    check_levels(GradedOperator::commutator(h, t), t, cutoff_ - 1, "[H,T] != T");
    check_levels(GradedOperator::commutator(h, tstar), tstar.scaled(ScalarPoly(-1)), cutoff_ - 1,
                 "[H,T*] != -T*");
    check_levels(GradedOperator::commutator(tstar, t), h.scaled(ScalarPoly(2)), cutoff_ - 1,
                 "[T*,T] != 2H");

    for (int n : {-1, 0, 1})
        if (!act(n, vacuum_state()).is_zero())
            report.fail("L_" + std::to_string(n) + "|0> != 0");
    return report;
}

AxiomReport VOAModule::invariant_form_check() const {
    AxiomReport report;
    if (!(inner(vacuum_state(), vacuum_state()) == ScalarPoly(1)))
        report.fail("(|0>,|0>) != 1");

    const int level_max = cutoff_ - 3;
    for (int la = 0; la <= level_max; ++la)
        for (int lb = 0; lb <= level_max; ++lb)
            for (const auto& pa : space_->level_basis(la))
                for (const auto& pb : space_->level_basis(lb)) {
                    const VermaVector a = VermaVector::basis_vector(pa);
                    const VermaVector b = VermaVector::basis_vector(pb);
                    if (la != lb && !inner(a, b).is_zero())
                        report.fail("(v" + pa.str() + ", v" + pb.str() + ") != 0 across levels");
                    for (int n = -3; n <= 3; ++n) {
                        const ScalarPoly lhs = inner(act(n, a), b);
                        const ScalarPoly rhs = inner(a, act(-n, b));
                        if (lhs != rhs)
                            report.fail("(L_n v" + pa.str() + ", v" + pb.str() +
                                        ") mismatch at n=" + std::to_string(n));
                    }
                }
    return report;
}

ScalarPoly VOAModule::inner(const VermaVector& a, const VermaVector& b) const {
    return specialize(engine_.pairing(a, b));
}

Classification VOAModule::classify_state(const VermaVector& a) const {
    const auto weight = a.homogeneous_weight();
    if (!weight) return {StateClass::NotHomogeneous, 0};
    // L_n for n >= 3 lie in brackets of L_1 and L_2, so n = 1, 2 suffice.
    const bool kills_l1 = act(1, a).is_zero();
    const bool kills_l2 = act(2, a).is_zero();
    if (kills_l1 && kills_l2) return {StateClass::Primary, *weight};
    if (kills_l1) return {StateClass::Quasiprimary, *weight};
    return {StateClass::Neither, *weight};
}

GramMatrix VOAModule::voa_gram(int level) const {
    if (level < 0 || level > cutoff_) throw std::invalid_argument("voa_gram: level outside window");
    GramMatrix g;
    g.level = level;
    g.basis = space_->level_basis(level);
    const std::size_t n = g.basis.size();
    g.matrix = DenseMatrix<ScalarPoly>(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            ScalarPoly e = specialize(engine_.pairing(g.basis[i], g.basis[j]));
            g.matrix.at(i, j) = e;
            g.matrix.at(j, i) = e;
        }
    return g;
}

std::vector<std::size_t> VOAModule::quotient_dims(const Rational& c0) const {
    std::vector<std::size_t> dims;
    for (int l = 0; l <= cutoff_; ++l)
        dims.push_back(rank(voa_gram(l).eval(c0, Rational(0))));
    return dims;
}

std::vector<std::size_t> quotient_voa_dims(const Rational& c0, int cutoff) {
    return VOAModule(c0, cutoff).quotient_dims(c0);
}

}  // namespace cft
