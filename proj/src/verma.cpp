#include "cft/verma.hpp"

#include <fstream>
#include <sstream>

namespace cft {

void VermaVector::add(const Partition& p, const ScalarPoly& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = coeffs_.emplace(p, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

ScalarPoly VermaVector::coeff(const Partition& p) const {
    auto it = coeffs_.find(p);
    return it == coeffs_.end() ? ScalarPoly() : it->second;
}

std::optional<int> VermaVector::homogeneous_weight() const {
    if (coeffs_.empty()) return std::nullopt;
    const int w = coeffs_.begin()->first.weight();
    for (const auto& [p, q] : coeffs_)
        if (p.weight() != w) return std::nullopt;
    return w;
}

VermaVector& VermaVector::operator+=(const VermaVector& o) {
    for (const auto& [p, q] : o.coeffs_) add(p, q);
    return *this;
}

VermaVector& VermaVector::operator-=(const VermaVector& o) {
    for (const auto& [p, q] : o.coeffs_) add(p, -q);
    return *this;
}

VermaVector VermaVector::scaled(const ScalarPoly& s) const {
    VermaVector r;
    for (const auto& [p, q] : coeffs_) r.add(p, q * s);
    return r;
}

VermaVector VermaVector::eval(const Rational& c0, const Rational& h0) const {
    VermaVector r;
    for (const auto& [p, q] : coeffs_) r.add(p, ScalarPoly(q.eval(c0, h0)));
    return r;
}

std::string VermaVector::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, q] : coeffs_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << q.str() << ")*v" << p.str();
    }
    return os.str();
}

VermaVector RewriteEngine::act(int mode, const Partition& p) const {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = memo_.find({mode, p});
        if (it != memo_.end()) return it->second;
    }
    VermaVector result = compute(mode, p);
    std::lock_guard<std::mutex> lock(mutex_);
    memo_.emplace(std::pair{mode, p}, result);
    return result;
}

VermaVector RewriteEngine::act(int mode, const VermaVector& v) const {
    VermaVector out;
    for (const auto& [p, coeff] : v.coeffs()) out += act(mode, p).scaled(coeff);
    return out;
}

// Straightening rules. For L_{-m} with m below the first part, and for any
// annihilator L_n, commute past the leading creation operator:
//   L_{-m} L_{-n1} = L_{-n1} L_{-m} + (n1 - m) L_{-(m+n1)}
//   L_n    L_{-n1} = L_{-n1} L_n + (n + n1) L_{n-n1} + delta_{n,n1} (c/12)(n^3-n)
VermaVector RewriteEngine::compute(int mode, const Partition& p) const {
    const ScalarPoly c = ScalarPoly::var_c();
    if (mode == 0) {
        ScalarPoly eigen = ScalarPoly(Rational(p.weight()));
        if (!rules_.zero_h) eigen += ScalarPoly::var_h();
        return VermaVector::basis_vector(p).scaled(eigen);
    }
    if (p.is_empty()) {
        if (mode > 0) return VermaVector();
        const int m = -mode;
        if (m < rules_.min_part) return VermaVector();  // L_{-1}|0> = 0 in the vacuum module
        return VermaVector::basis_vector(Partition({m}));
    }
    const int n1 = p.first();
    const Partition tail = p.tail();
    if (mode < 0) {
        const int m = -mode;
        if (m >= n1) return VermaVector::basis_vector(p.prepended(m));
        VermaVector out = act(-n1, act(mode, tail));
        out += act(-(m + n1), tail).scaled(ScalarPoly(Rational(n1 - m)));
        return out;
    }
    const int n = mode;
    VermaVector out = act(-n1, act(n, tail));
    out += act(n - n1, tail).scaled(ScalarPoly(Rational(n + n1)));
    if (n == n1) {
        const long n3 = static_cast<long>(n) * n * n;
        out += VermaVector::basis_vector(tail).scaled(c * Rational(n3 - n, 12));
    }
    return out;
}

ScalarPoly RewriteEngine::pairing(const Partition& a, const Partition& b) const {
    VermaVector w = VermaVector::basis_vector(b);
    for (int part : a.parts()) w = act(part, w);
    return w.coeff(Partition::empty());
}

ScalarPoly RewriteEngine::pairing(const VermaVector& a, const VermaVector& b) const {
    ScalarPoly out;
    for (const auto& [pa, qa] : a.coeffs())
        for (const auto& [pb, qb] : b.coeffs()) out += qa * qb * pairing(pa, pb);
    return out;
}

GramMatrix VermaModule::gram(int level) const {
    if (level < 0) throw std::invalid_argument("gram: negative level");
    GramMatrix g;
    g.level = level;
    g.basis = partitions_of(level, 1);
    const std::size_t n = g.basis.size();
    g.matrix = DenseMatrix<ScalarPoly>(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            ScalarPoly e = engine_.pairing(g.basis[i], g.basis[j]);
            g.matrix.at(i, j) = e;
            g.matrix.at(j, i) = e;
        }
    return g;
}

RatMatrix GramMatrix::eval(const Rational& c0, const Rational& h0) const {
    RatMatrix m(matrix.rows(), matrix.cols());
    for (std::size_t i = 0; i < matrix.rows(); ++i)
        for (std::size_t j = 0; j < matrix.cols(); ++j) m.at(i, j) = matrix.at(i, j).eval(c0, h0);
    return m;
}

ScalarPoly VermaModule::phi_pq(int p, int q) {
    if (p < q || q < 1) throw std::invalid_argument("phi_pq: requires p >= q >= 1");
    const ScalarPoly c = ScalarPoly::var_c();
    const ScalarPoly h = ScalarPoly::var_h();
    const ScalarPoly cm1 = c - ScalarPoly(1);
    if (p == q) {
        const long q2 = static_cast<long>(q) * q;
        return h + cm1 * Rational(q2 - 1, 24);
    }
    const long p2 = static_cast<long>(p) * p;
    const long q2 = static_cast<long>(q) * q;
    ScalarPoly quad = h - ScalarPoly(Rational((static_cast<long>(p) - q) * (p - q), 4));
    ScalarPoly out = quad * quad;
    out += h * cm1 * Rational(p2 + q2 - 2, 24);
    out += cm1 * cm1 * Rational((p2 - 1) * (q2 - 1), 576);
    out += cm1 * Rational((static_cast<long>(p) - q) * (p - q) * (static_cast<long>(p) * q + 1), 48);
    return out;
}

KacFactorization VermaModule::kac_det_formula(int level) const {
    KacFactorization f;
    f.product = ScalarPoly(1);
    for (int p = 1; p <= level; ++p)
        for (int q = 1; q <= p; ++q) {
            if (p * q > level) continue;
            const int e = static_cast<int>(partition_count(level - p * q, 1));
            if (e == 0) continue;
            f.factors.push_back({p, q, e});
            f.product *= phi_pq(p, q).pow(static_cast<unsigned>(e));
        }
    const ScalarPoly det = kac_det_direct(level);
    const auto ratio = det.try_divide(f.product);
    if (!ratio || !ratio->is_constant())
        throw NonconstantRatioError("kac_det_formula: det/product is not a constant");
    f.constant = ratio->constant_value();
    if (f.constant.sign() < 0)
        throw NonconstantRatioError("kac_det_formula: constant is not positive");
    return f;
}

DiscreteSeriesPoint VermaModule::discrete_series(int m, bool extended_range) {
    if (m < 0) throw std::invalid_argument("discrete_series: m must be >= 0");
    DiscreteSeriesPoint out;
    out.m = m;
    const long mm = (static_cast<long>(m) + 2) * (m + 3);
    out.c = Rational(1) - Rational(6, mm);
    const auto h_pq = [mm, m](int p, int q) {
        const long num = (static_cast<long>(m) + 3) * p - (static_cast<long>(m) + 2) * q;
        return Rational(num * num - 1, 4 * mm);
    };
    const int p_max = m + 1;
    const int q_max = extended_range ? m + 2 : m + 1;
    for (int p = 1; p <= p_max; ++p)
        for (int q = extended_range ? 1 : p; q <= q_max; ++q)
            out.entries.push_back({p, q, h_pq(p, q)});
    return out;
}

std::vector<LevelVerdict> VermaModule::unitarity_classify(const Rational& c0, const Rational& h0,
                                                          int level_max) const {
    if (level_max < 0) throw std::invalid_argument("unitarity_classify: negative level_max");
    std::vector<LevelVerdict> out;
    for (int n = 0; n <= level_max; ++n) {
        const RatMatrix m = gram(n).eval(c0, h0);
        out.push_back({n, definiteness(m), nullity(m)});
    }
    return out;
}

std::vector<VermaVector> VermaModule::singular_vectors(const Rational& c0, const Rational& h0,
                                                       int level) const {
    const GramMatrix g = gram(level);
    std::vector<VermaVector> out;
    for (const auto& k : kernel_basis(g.eval(c0, h0))) {
        VermaVector v;
        for (std::size_t i = 0; i < k.size(); ++i) v.add(g.basis[i], ScalarPoly(k[i]));
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<std::size_t> VermaModule::quotient_graded_dims(const Rational& c0, const Rational& h0,
                                                           int level_max) const {
    std::vector<std::size_t> dims;
    for (int n = 0; n <= level_max; ++n) dims.push_back(rank(gram(n).eval(c0, h0)));
    return dims;
}

bool cocycle_recurrence_holds(const std::vector<Rational>& f, int bound) {
    // f[n] holds f(n) for 1 <= n <= bound + 1.
    for (int n = 2; n <= bound; ++n) {
        const Rational lhs = Rational(n - 1) * f[static_cast<std::size_t>(n) + 1];
        const Rational rhs = Rational(n + 2) * f[static_cast<std::size_t>(n)] -
                             Rational(2L * n + 1) * f[1];
        if (lhs != rhs) return false;
    }
    return true;
}

bool cocycle_check(int bound) {
    if (bound < 3) throw std::invalid_argument("cocycle_check: bound must be >= 3");

    std::vector<Rational> lin(static_cast<std::size_t>(bound) + 2), cub(lin.size());
    for (int n = 1; n <= bound + 1; ++n) {
        lin[static_cast<std::size_t>(n)] = Rational(n);
        cub[static_cast<std::size_t>(n)] = Rational(static_cast<long>(n) * n * n);
    }
    if (!cocycle_recurrence_holds(lin, bound) || !cocycle_recurrence_holds(cub, bound))
        return false;

    // Propagate symbolic initial values: the ring Q[c,h] stands in for
    // Q[f(1), f(2)]. The general solution must be x*n + y*n^3 with
    // x = (8 f(1) - f(2))/6 and y = (f(2) - 2 f(1))/6.
    const ScalarPoly f1 = ScalarPoly::var_c();
    const ScalarPoly f2 = ScalarPoly::var_h();
    const ScalarPoly x = (f1 * Rational(8) - f2) * Rational(1, 6);
    const ScalarPoly y = (f2 - f1 * Rational(2)) * Rational(1, 6);
    std::vector<ScalarPoly> f(static_cast<std::size_t>(bound) + 2);
    f[1] = f1;
    f[2] = f2;
    for (int n = 2; n <= bound; ++n)
        f[static_cast<std::size_t>(n) + 1] =
            (f[static_cast<std::size_t>(n)] * Rational(n + 2) - f1 * Rational(2L * n + 1)) *
            Rational(1, n - 1);
    for (int n = 1; n <= bound + 1; ++n) {
        const ScalarPoly expect =
            x * Rational(n) + y * Rational(static_cast<long>(n) * n * n);
        if (f[static_cast<std::size_t>(n)] != expect) return false;
    }
    return true;
}

namespace {

std::string poly_to_cache(const ScalarPoly& p) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, q] : p.terms()) {
        if (!first) os << ",";
        first = false;
        os << q.str() << ":" << m.deg_c << ":" << m.deg_h;
    }
    return os.str();
}

std::optional<ScalarPoly> poly_from_cache(const std::string& s) {
    ScalarPoly p;
    if (s.empty()) return p;
    std::istringstream is(s);
    std::string term;
    while (std::getline(is, term, ',')) {
        const auto c1 = term.find(':');
        const auto c2 = term.rfind(':');
        if (c1 == std::string::npos || c2 == c1) return std::nullopt;
        const auto q = Rational::parse(term.substr(0, c1));
        if (!q) return std::nullopt;
        try {
            const int dc = std::stoi(term.substr(c1 + 1, c2 - c1 - 1));
            const int dh = std::stoi(term.substr(c2 + 1));
            p.add_term({dc, dh}, *q);
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }
    return p;
}

std::string partition_to_cache(const Partition& p) {
    std::ostringstream os;
    for (std::size_t i = 0; i < p.parts().size(); ++i) {
        if (i) os << ".";
        os << p.parts()[i];
    }
    return os.str();
}

std::optional<Partition> partition_from_cache(const std::string& s) {
    std::vector<int> parts;
    if (s.empty()) return Partition::empty();
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, '.')) {
        try {
            parts.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }
    try {
        return Partition(parts);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

constexpr const char* kCacheMagic = "cft-rewrite-cache 1";

}  // namespace

std::string RewriteEngine::cache_file_name() const {
    std::ostringstream os;
    os << "rewrite_p" << rules_.min_part << (rules_.zero_h ? "_h0" : "_hsym") << ".v1.cache";
    return os.str();
}

void RewriteEngine::save_cache(const std::string& path) const {
    std::ofstream out(path);
    if (!out) return;
    out << kCacheMagic << " min_part=" << rules_.min_part << " zero_h=" << rules_.zero_h << "\n";
    std::lock_guard<std::mutex> lock(mutex_);
    for (const auto& [key, vec] : memo_) {
        out << key.first << "|" << partition_to_cache(key.second) << "=>";
        bool first = true;
        for (const auto& [p, q] : vec.coeffs()) {
            if (!first) out << ";";
            first = false;
            out << partition_to_cache(p) << "@" << poly_to_cache(q);
        }
        out << "\n";
    }
}

bool RewriteEngine::load_cache(const std::string& path) {
    std::ifstream in(path);
    if (!in) return false;
    std::string header;
    if (!std::getline(in, header)) return false;
    std::ostringstream expect;
    expect << kCacheMagic << " min_part=" << rules_.min_part << " zero_h=" << rules_.zero_h;
    if (header != expect.str()) return false;

    std::map<std::pair<int, Partition>, VermaVector> loaded;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto bar = line.find('|');
        const auto arrow = line.find("=>");
        if (bar == std::string::npos || arrow == std::string::npos || arrow < bar) return false;
        int mode = 0;
        try {
            mode = std::stoi(line.substr(0, bar));
        } catch (const std::exception&) {
            return false;
        }
        const auto key_part = partition_from_cache(line.substr(bar + 1, arrow - bar - 1));
        if (!key_part) return false;
        VermaVector vec;
        const std::string rhs = line.substr(arrow + 2);
        if (!rhs.empty()) {
            std::istringstream terms(rhs);
            std::string term;
            while (std::getline(terms, term, ';')) {
                const auto at = term.find('@');
                if (at == std::string::npos) return false;
                const auto p = partition_from_cache(term.substr(0, at));
                const auto q = poly_from_cache(term.substr(at + 1));
                if (!p || !q) return false;
                vec.add(*p, *q);
            }
        }
        loaded.emplace(std::pair{mode, *key_part}, std::move(vec));
    }
    std::lock_guard<std::mutex> lock(mutex_);
    for (auto& [k, v] : loaded) memo_.emplace(k, std::move(v));
    return true;
}

}  // namespace cft
