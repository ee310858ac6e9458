#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <thread>

#include "cft/fock.hpp"
#include "cft/laurent_window.hpp"
#include "cft/linalg.hpp"
#include "cft/mode_field.hpp"
#include "cft/verma.hpp"
#include "cft/voa.hpp"

namespace cft::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr int kMaxLevel = 12;  // cost guard on level/cutoff style options

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CsvUnsupported : std::runtime_error {
    CsvUnsupported() : std::runtime_error("csv output is not supported for this command") {}
};

Rational parse_rational(const std::string& s) {
    auto q = Rational::parse(s);
    if (!q) throw ConfigError("cannot parse rational literal '" + s + "'");
    return *q;
}

std::vector<Rational> parse_rational_list(const std::string& s) {
    std::vector<Rational> out;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) out.push_back(parse_rational(tok));
    if (out.empty()) throw ConfigError("empty rational list");
    return out;
}

json basis_json(const std::vector<Partition>& basis) {
    json out = json::array();
    for (const auto& p : basis) out.push_back(p.parts());
    return out;
}

json poly_matrix_json(const DenseMatrix<ScalarPoly>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(row);
    }
    return rows;
}

json rat_matrix_json(const RatMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(row);
    }
    return rows;
}

bool is_scalar_array(const json& a) {
    for (const auto& v : a)
        if (v.is_structured()) return false;
    return true;
}

std::string inline_value(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

// Indented key/value rendering for human consumption.
void pretty_print(const json& node, std::ostream& out, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    if (node.is_object()) {
        for (const auto& [key, value] : node.items()) {
            if (value.is_structured() && !(value.is_array() && is_scalar_array(value))) {
                out << pad << key << ":\n";
                pretty_print(value, out, indent + 1);
            } else if (value.is_array()) {
                out << pad << key << ": " << value.dump() << "\n";
            } else {
                out << pad << key << ": " << inline_value(value) << "\n";
            }
        }
    } else if (node.is_array()) {
        for (const auto& item : node) {
            if (item.is_object()) {
                bool first = true;
                for (const auto& [key, value] : item.items()) {
                    if (value.is_structured() && !(value.is_array() && is_scalar_array(value))) {
                        out << (first ? pad + "- " : pad + "  ") << key << ":\n";
                        pretty_print(value, out, indent + 2);
                    } else {
                        out << (first ? pad + "- " : pad + "  ") << key << ": "
                            << (value.is_array() ? value.dump() : inline_value(value)) << "\n";
                    }
                    first = false;
                }
            } else if (item.is_array()) {
                out << pad << "- " << item.dump() << "\n";
            } else {
                out << pad << "- " << inline_value(item) << "\n";
            }
        }
    } else {
        out << pad << inline_value(node) << "\n";
    }
}

void emit(const json& payload, Format format, std::ostream& out) {
    if (format == Format::Pretty)
        pretty_print(payload, out, 0);
    else
        out << payload.dump(2) << "\n";
}

// Optional persistent rewrite cache, keyed by CFT_KERNEL_CACHE_DIR.
class CacheScope {
  public:
    explicit CacheScope(RewriteEngine& engine) : engine_(engine) {
        const char* dir = std::getenv("CFT_KERNEL_CACHE_DIR");
        if (!dir || !*dir) return;
        std::error_code ec;
        std::filesystem::create_directories(dir, ec);
        path_ = std::string(dir) + "/" + engine.cache_file_name();
        engine_.load_cache(path_);
    }
    ~CacheScope() {
        if (!path_.empty()) engine_.save_cache(path_);
    }

  private:
    RewriteEngine& engine_;
    std::string path_;
};

int run_kac_det(const RunConfig& cfg, std::ostream& out) {
    VermaModule verma;
    CacheScope cache(verma.engine());
    json payload;
    payload["level"] = cfg.level;
    if (cfg.c && cfg.h) {
        payload["c"] = cfg.c->str();
        payload["h"] = cfg.h->str();
        payload["det"] = verma.kac_det_direct(cfg.level).eval(*cfg.c, *cfg.h).str();
    } else {
        const GramMatrix g = verma.gram(cfg.level);
        const KacFactorization f = verma.kac_det_formula(cfg.level);
        payload["basis"] = basis_json(g.basis);
        payload["gram"] = poly_matrix_json(g.matrix);
        payload["det"] = verma.kac_det_direct(cfg.level).str();
        payload["K"] = f.constant.str();
        json exps = json::array();
        for (const auto& e : f.factors)
            exps.push_back(json{{"p", e.p}, {"q", e.q}, {"exp", e.exponent}});
        payload["phi_exponents"] = exps;
        payload["product"] = f.product.str();
    }
    if (cfg.format == Format::Csv) throw CsvUnsupported();
    emit(payload, cfg.format, out);
    return 0;
}

int run_gram(const RunConfig& cfg, std::ostream& out) {
    VermaModule verma;
    CacheScope cache(verma.engine());
    const GramMatrix g = verma.gram(cfg.level);
    json payload;
    payload["level"] = cfg.level;
    payload["basis"] = basis_json(g.basis);
    if (cfg.c && cfg.h) {
        payload["c"] = cfg.c->str();
        payload["h"] = cfg.h->str();
        payload["gram"] = rat_matrix_json(g.eval(*cfg.c, *cfg.h));
    } else {
        payload["gram"] = poly_matrix_json(g.matrix);
    }
    if (cfg.format == Format::Csv) throw CsvUnsupported();
    emit(payload, cfg.format, out);
    return 0;
}

int run_unitarity_scan(const RunConfig& cfg, std::ostream& out) {
    if (cfg.c_list.empty() || cfg.h_list.empty())
        throw ConfigError("unitarity-scan requires --c-list and --h-list");
    VermaModule verma;
    CacheScope cache(verma.engine());
    std::vector<GramMatrix> grams;
    for (int n = 0; n <= cfg.level_max; ++n) grams.push_back(verma.gram(n));

    struct Point {
        Rational c, h;
        std::vector<LevelVerdict> verdicts;
    };
    std::vector<Point> points;
    for (const auto& c0 : cfg.c_list)
        for (const auto& h0 : cfg.h_list) points.push_back({c0, h0, {}});

    const auto worker = [&](std::size_t begin, std::size_t stride) {
        for (std::size_t i = begin; i < points.size(); i += stride) {
            for (int n = 0; n <= cfg.level_max; ++n) {
                const RatMatrix m = grams[static_cast<std::size_t>(n)].eval(points[i].c, points[i].h);
                points[i].verdicts.push_back({n, definiteness(m), nullity(m)});
            }
        }
    };
    const unsigned workers = std::max(1u, cfg.parallel);
    if (workers == 1) {
        worker(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker, t, workers);
        for (auto& t : pool) t.join();
    }

    if (cfg.format == Format::Csv) {
        out << "c,h,level,verdict,nullity\n";
        for (const auto& pt : points)
            for (const auto& v : pt.verdicts)
                out << pt.c.str() << "," << pt.h.str() << "," << v.level << ","
                    << to_string(v.verdict) << "," << v.nullity << "\n";
        return 0;
    }
    json payload;
    payload["level_max"] = cfg.level_max;
    json rows = json::array();
    for (const auto& pt : points) {
        json levels = json::array();
        for (const auto& v : pt.verdicts)
            levels.push_back(json{{"level", v.level},
                                  {"verdict", to_string(v.verdict)},
                                  {"nullity", v.nullity}});
        rows.push_back(json{{"c", pt.c.str()}, {"h", pt.h.str()}, {"levels", levels}});
    }
    payload["points"] = rows;
    emit(payload, cfg.format, out);
    return 0;
}

int run_discrete_series(const RunConfig& cfg, std::ostream& out) {
    const DiscreteSeriesPoint pt = VermaModule::discrete_series(cfg.m, cfg.extended_range);
    if (cfg.format == Format::Csv) {
        out << "m,c,p,q,h\n";
        for (const auto& e : pt.entries)
            out << pt.m << "," << pt.c.str() << "," << e.p << "," << e.q << "," << e.h.str()
                << "\n";
        return 0;
    }
    json payload;
    payload["m"] = pt.m;
    payload["c"] = pt.c.str();
    payload["extended_range"] = cfg.extended_range;
    json hs = json::array();
    json entries = json::array();
    for (const auto& e : pt.entries) {
        hs.push_back(e.h.str());
        entries.push_back(json{{"p", e.p}, {"q", e.q}, {"h", e.h.str()}});
    }
    payload["h"] = hs;
    payload["entries"] = entries;
    emit(payload, cfg.format, out);
    return 0;
}

int run_singular(const RunConfig& cfg, std::ostream& out) {
    if (!cfg.c || !cfg.h) throw ConfigError("singular requires --c and --h");
    VermaModule verma;
    CacheScope cache(verma.engine());
    const auto vectors = verma.singular_vectors(*cfg.c, *cfg.h, cfg.level);

    bool annihilated = true;
    for (const auto& v : vectors)
        for (int n : {1, 2})
            if (!verma.act(n, v).eval(*cfg.c, *cfg.h).is_zero()) annihilated = false;

    json payload;
    payload["c"] = cfg.c->str();
    payload["h"] = cfg.h->str();
    payload["level"] = cfg.level;
    payload["kernel_dim"] = vectors.size();
    json vecs = json::array();
    for (const auto& v : vectors) {
        json terms = json::array();
        for (const auto& [p, q] : v.coeffs())
            terms.push_back(json{{"partition", p.parts()}, {"coeff", q.str()}});
        vecs.push_back(terms);
    }
    payload["vectors"] = vecs;
    payload["annihilated_by_L1_L2"] = annihilated;
    if (cfg.format == Format::Csv) throw CsvUnsupported();
    emit(payload, cfg.format, out);
    return annihilated ? 0 : 1;
}

int run_quotient_dims(const RunConfig& cfg, std::ostream& out) {
    if (!cfg.c) throw ConfigError("quotient-dims requires --c");
    std::vector<std::size_t> dims;
    const Rational h0 = cfg.h.value_or(Rational(0));
    if (cfg.voa_quotient) {
        if (cfg.h && !cfg.h->is_zero())
            throw ConfigError("--voa fixes h = 0; drop --h or pass 0");
        dims = quotient_voa_dims(*cfg.c, cfg.level_max);
    } else {
        VermaModule verma;
        CacheScope cache(verma.engine());
        dims = verma.quotient_graded_dims(*cfg.c, h0, cfg.level_max);
    }
    if (cfg.format == Format::Csv) {
        out << "level,dim\n";
        for (std::size_t n = 0; n < dims.size(); ++n) out << n << "," << dims[n] << "\n";
        return 0;
    }
    json payload;
    payload["c"] = cfg.c->str();
    payload["h"] = cfg.voa_quotient ? "0" : h0.str();
    payload["basis"] = cfg.voa_quotient ? "parts>=2" : "parts>=1";
    payload["level_max"] = cfg.level_max;
    payload["dims"] = dims;
    emit(payload, cfg.format, out);
    return 0;
}

int run_fock_verify(const RunConfig& cfg, std::ostream& out) {
    json payload;
    payload["mu"] = cfg.mu.str();
    payload["cutoff"] = cfg.cutoff;
    payload["mode_max"] = cfg.mode_max;
    bool all_ok = true;
    json checks = json::array();
    for (int m = -cfg.mode_max; m <= cfg.mode_max; ++m)
        for (int n = -cfg.mode_max; n <= cfg.mode_max; ++n) {
            const auto r = fock_bracket_check(m, n, cfg.cutoff, cfg.mu);
            json rec{{"check", "fock_bracket"}, {"m", m},     {"n", n},
                     {"cutoff", cfg.cutoff},    {"mu", cfg.mu.str()}, {"ok", r.ok}};
            rec["counterexample"] = r.counterexample ? json(r.counterexample->str()) : json(nullptr);
            checks.push_back(rec);
            all_ok = all_ok && r.ok;
        }
    payload["checks"] = checks;

    // Adjointness <a_n f, g> = <f, a_{-n} g> on monomials of weight <= 5.
    bool adjoint_ok = true;
    const int wmax = std::min(cfg.cutoff, 5);
    for (int n = -4; n <= 4 && adjoint_ok; ++n)
        for (int wf = 0; wf <= wmax && adjoint_ok; ++wf)
            for (const auto& mf : fock_monomials_of_weight(wf))
                for (int wg = 0; wg <= wmax; ++wg)
                    for (const auto& mg : fock_monomials_of_weight(wg)) {
                        const FockPoly f = FockPoly::monomial(mf);
                        const FockPoly g = FockPoly::monomial(mg);
                        if (fock_inner(heis_act(n, f, cfg.mu), g) !=
                            fock_inner(f, heis_act(-n, g, cfg.mu))) {
                            adjoint_ok = false;
                            break;
                        }
                    }
    payload["adjointness_ok"] = adjoint_ok;
    const FockPoly x1sq = FockPoly::monomial(FockMonomial::variable(1, 2));
    const bool inner_ok = fock_inner(x1sq, x1sq) == Rational(2);
    payload["inner_x1sq_is_2"] = inner_ok;
    all_ok = all_ok && adjoint_ok && inner_ok;
    payload["ok"] = all_ok;
    if (cfg.format == Format::Csv) throw CsvUnsupported();
    emit(payload, cfg.format, out);
    return all_ok ? 0 : 1;
}

int run_delta_check(const RunConfig& cfg, std::ostream& out) {
    const LaurentPoly f = LaurentPoly::monomial(2);  // test vector f(z) = z^2
    const DeltaIdentityReport report = delta_identity_suite(cfg.window, cfg.guard, f);
    json payload;
    payload["window"] = cfg.window;
    payload["guard"] = cfg.guard;
    payload["test_vector"] = "z^2";
    json parts = json::array();
    for (const auto& item : report.parts)
        parts.push_back(json{{"name", item.name}, {"ok", item.ok}});
    payload["parts"] = parts;
    payload["ok"] = report.all_ok;
    if (cfg.format == Format::Csv) throw CsvUnsupported();
    emit(payload, cfg.format, out);
    return report.all_ok ? 0 : 1;
}

std::string coefficient_label(const VOAModule& voa, const ModeField& coeff) {
    const ModeField& l_field = voa.virasoro_field();
    if (coeff.zero_on_defined()) return "0";
    if (coeff.weight() == 3 && ModeField::agree_on_defined(coeff, l_field.derivative()))
        return "dL";
    if (coeff.weight() == 2 &&
        ModeField::agree_on_defined(coeff, l_field.scaled(ScalarPoly(2))))
        return "2L";
    if (coeff.weight() == 0 &&
        ModeField::agree_on_defined(
            coeff, ModeField::identity(voa.space())
                       .scaled(voa.central_charge_poly() * Rational(1, 2))))
        return "(c/2)id";
    return "unrecognized";
}

int run_ope(const RunConfig& cfg, std::ostream& out) {
    VOAModule voa(cfg.symbolic ? std::nullopt : cfg.c, cfg.cutoff);
    CacheScope cache(voa.engine());
    const ModeField& l_field = voa.virasoro_field();
    const auto order = locality_order(l_field, l_field, 8);
    json payload;
    payload["pair"] = json::array({"L", "L"});
    payload["cutoff"] = cfg.cutoff;
    payload["c"] = voa.central_charge() ? json(voa.central_charge()->str()) : json("symbolic");
    bool ok = order.has_value();
    if (order) {
        payload["locality_order"] = *order;
        const auto coeffs = ope_coeffs(l_field, l_field, *order);
        ok = ok && ope_reconstruction_ok(l_field, l_field, coeffs);
        json arr = json::array();
        for (std::size_t j = 0; j < coeffs.size(); ++j)
            arr.push_back(json{{"j", j}, {"field", coefficient_label(voa, coeffs[j])}});
        payload["coeffs"] = arr;
    } else {
        payload["locality_order"] = nullptr;
    }
    payload["ok"] = ok;
    if (cfg.format == Format::Csv) throw CsvUnsupported();
    emit(payload, cfg.format, out);
    return ok ? 0 : 1;
}

int run_voa_verify(const RunConfig& cfg, std::ostream& out) {
    VOAModule voa(cfg.symbolic ? std::nullopt : cfg.c, cfg.cutoff);
    CacheScope cache(voa.engine());
    const int pair_level = std::min(3, cfg.cutoff - 3);

    json payload;
    payload["c"] = voa.central_charge() ? json(voa.central_charge()->str()) : json("symbolic");
    payload["cutoff"] = cfg.cutoff;
    bool all_ok = true;
    json axioms = json::array();
    const auto add = [&](const std::string& name, const AxiomReport& r) {
        axioms.push_back(json{{"axiom", name},
                              {"cutoff", cfg.cutoff},
                              {"ok", r.ok},
                              {"failures", r.failures}});
        all_ok = all_ok && r.ok;
    };
    add("V1", voa.translation_axiom_check());
    add("V2", voa.locality_check(pair_level));
    add("V3", voa.vacuum_axiom_check());
    add("borcherds", voa.borcherds_suite(pair_level));
    add("sl2", voa.sl2_check());
    add("invariant_form", voa.invariant_form_check());
    payload["axioms"] = axioms;
    payload["ok"] = all_ok;
    if (cfg.format == Format::Csv) throw CsvUnsupported();
    emit(payload, cfg.format, out);
    return all_ok ? 0 : 1;
}

void validate(const RunConfig& cfg) {
    for (int v : {cfg.level, cfg.level_max, cfg.cutoff})
        if (v < 0 || v > kMaxLevel)
            throw ConfigError("level/cutoff options must lie in [0, " +
                              std::to_string(kMaxLevel) + "]");
    if (cfg.window < 1 || cfg.window > 64) throw ConfigError("window must lie in [1, 64]");
    if (cfg.m < 0 || cfg.m > 1000) throw ConfigError("--m must lie in [0, 1000]");
    if (cfg.symbolic && (cfg.c || cfg.h))
        throw ConfigError("--symbolic excludes --c/--h");
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out) {
    validate(cfg);
    if (cfg.command == "kac-det") return run_kac_det(cfg, out);
    if (cfg.command == "gram") return run_gram(cfg, out);
    if (cfg.command == "unitarity-scan") return run_unitarity_scan(cfg, out);
    if (cfg.command == "discrete-series") return run_discrete_series(cfg, out);
    if (cfg.command == "singular") return run_singular(cfg, out);
    if (cfg.command == "quotient-dims") return run_quotient_dims(cfg, out);
    if (cfg.command == "fock-verify") return run_fock_verify(cfg, out);
    if (cfg.command == "delta-check") return run_delta_check(cfg, out);
    if (cfg.command == "ope") return run_ope(cfg, out);
    if (cfg.command == "voa-verify") return run_voa_verify(cfg, out);
    throw ConfigError("unknown command '" + cfg.command + "'");
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Virasoro representation calculator"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "display help");

    RunConfig cfg;
    std::string c_str, h_str, mu_str = "0", c_list_str, h_list_str, format_str = "json";

    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format_str, "json|csv|pretty")
            ->check(CLI::IsMember({"json", "csv", "pretty"}));
        cmd->add_option("--parallel", cfg.parallel, "worker count for scans");
    };
    const auto subcommand = [&](const std::string& name, const std::string& desc) {
        auto* cmd = app.add_subcommand(name, desc);
        cmd->set_help_flag("--help", "display help");
        return cmd;
    };

    auto* kac = subcommand("kac-det", "level-N Gram determinant, factored form");
    kac->add_option("--level", cfg.level)->required();
    kac->add_flag("--symbolic", cfg.symbolic);
    kac->add_option("--c", c_str);
    kac->add_option("--h", h_str);
    add_common(kac);

    auto* gram = subcommand("gram", "level-N Gram matrix of the contravariant form");
    gram->add_option("--level", cfg.level)->required();
    gram->add_flag("--symbolic", cfg.symbolic);
    gram->add_option("--c", c_str);
    gram->add_option("--h", h_str);
    add_common(gram);

    auto* scan = subcommand("unitarity-scan", "definiteness per level on a (c,h) grid");
    scan->add_option("--c-list", c_list_str)->required();
    scan->add_option("--h-list", h_list_str)->required();
    scan->add_option("--level-max", cfg.level_max)->required();
    add_common(scan);

    auto* ds = subcommand("discrete-series", "c(m) and the h_{p,q}(m) values");
    ds->add_option("--m", cfg.m)->required()->check(CLI::NonNegativeNumber);
    ds->add_flag("--extended-range", cfg.extended_range);
    add_common(ds);

    auto* sing = subcommand("singular", "Gram kernel basis at a rational point");
    sing->add_option("--c", c_str)->required();
    sing->add_option("--h", h_str)->required();
    sing->add_option("--level", cfg.level)->required();
    add_common(sing);

    auto* quot = subcommand("quotient-dims", "graded dims of the irreducible quotient");
    quot->add_option("--c", c_str)->required();
    quot->add_option("--h", h_str);
    quot->add_option("--level-max", cfg.level_max)->required();
    quot->add_flag("--voa", cfg.voa_quotient, "use the parts>=2 vacuum module basis");
    add_common(quot);

    auto* fock = subcommand("fock-verify", "oscillator Virasoro bracket checks");
    fock->add_option("--cutoff", cfg.cutoff)->required();
    fock->add_option("--mu", mu_str)->required();
    fock->add_option("--mode-max", cfg.mode_max);
    add_common(fock);

    auto* delta = subcommand("delta-check", "formal delta identity suite");
    delta->add_option("--window", cfg.window)->required();
    delta->add_option("--guard", cfg.guard)->required();
    add_common(delta);

    auto* ope_cmd = subcommand("ope", "locality order and OPE coefficients of (L,L)");
    ope_cmd->add_option("--cutoff", cfg.cutoff)->required();
    ope_cmd->add_option("--c", c_str);
    ope_cmd->add_flag("--symbolic", cfg.symbolic);
    add_common(ope_cmd);

    auto* voa = subcommand("voa-verify", "vertex algebra axiom batteries");
    voa->add_option("--cutoff", cfg.cutoff)->required();
    voa->add_option("--c", c_str);
    voa->add_flag("--symbolic", cfg.symbolic);
    add_common(voa);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends.
            return app.exit(e, out, err);
        }
        app.exit(e, out, err);
        return 2;
    }

    try {
        cfg.command = app.get_subcommands().front()->get_name();
        if (!c_str.empty()) cfg.c = parse_rational(c_str);
        if (!h_str.empty()) cfg.h = parse_rational(h_str);
        cfg.mu = parse_rational(mu_str);
        if (!c_list_str.empty()) cfg.c_list = parse_rational_list(c_list_str);
        if (!h_list_str.empty()) cfg.h_list = parse_rational_list(h_list_str);
        if (format_str == "csv") cfg.format = Format::Csv;
        if (format_str == "pretty") cfg.format = Format::Pretty;
        // Subcommands that default to symbolic coefficients when no point given.
        if ((cfg.command == "ope" || cfg.command == "voa-verify") && !cfg.c) cfg.symbolic = true;
        if ((cfg.command == "kac-det" || cfg.command == "gram") && (!cfg.c != !cfg.h))
            throw ConfigError("--c and --h must be given together");
        return run(cfg, out);
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const CsvUnsupported& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace cft::cli
