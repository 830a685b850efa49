#include "ccomp/constants.hpp"
#include "ccomp/corpus.hpp"
#include "ccomp/cotangent.hpp"
#include "ccomp/criteria.hpp"
#include "ccomp/engine.hpp"
#include "ccomp/fexp.hpp"
#include "ccomp/products.hpp"
#include "ccomp/radicals.hpp"
#include "ccomp/solver.hpp"
#include "ccomp/termspec.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace ccomp;
using Json = nlohmann::ordered_json;

namespace {

struct CommandConfig {
    Prec precision = kDefaultPrecision;
    std::string tolerance = "1e-12";
    std::size_t max_depth = 64;
    std::string output = "text";
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A command result: scalar fields plus an optional (depth, value, delta) table.
struct Output {
    Json fields = Json::object();
    std::vector<std::vector<std::string>> table;
    std::vector<std::string> table_header;

    void set(const std::string& k, const std::string& v) { fields[k] = v; }
    void set(const std::string& k, const Real& v) { fields[k] = v.str(); }
};

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

std::string text_value(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

std::string render(const Output& o, const std::string& format) {
    std::ostringstream os;
    if (format == "json") {
        Json j = o.fields;
        if (!o.table_header.empty()) {
            Json rows = Json::array();
            for (const auto& r : o.table) {
                Json row = Json::object();
                for (std::size_t i = 0; i < r.size(); ++i) row[o.table_header[i]] = r[i];
                rows.push_back(row);
            }
            j["rows"] = rows;
        }
        os << j.dump(2) << "\n";
    } else if (format == "csv") {
        if (!o.table_header.empty()) {
            for (std::size_t i = 0; i < o.table_header.size(); ++i) os << (i ? "," : "") << o.table_header[i];
            os << "\n";
            for (const auto& r : o.table) {
                for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << csv_cell(r[i]);
                os << "\n";
            }
        } else {
            os << "key,value\n";
            for (const auto& [k, v] : o.fields.items()) os << csv_cell(k) << "," << csv_cell(text_value(v)) << "\n";
        }
    } else {
        for (const auto& [k, v] : o.fields.items()) os << k << ": " << text_value(v) << "\n";
        if (!o.table_header.empty()) {
            for (std::size_t i = 0; i < o.table_header.size(); ++i) os << (i ? "\t" : "") << o.table_header[i];
            os << "\n";
            for (const auto& r : o.table) {
                for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "\t" : "") << r[i];
                os << "\n";
            }
        }
    }
    return os.str();
}

Real parse_real(const std::string& s, Prec prec) {
    try {
        return Real(std::string_view(s), prec);
    } catch (const std::invalid_argument&) {
        if (s == "pi") return Real::pi(prec);
        if (s == "pi/2") return ldexp(Real::pi(prec), -1);
        throw UsageError("not a number: " + s);
    }
}

void add_trace(Output& o, const ApproximantTrace& t) {
    o.table_header = {"depth", "value", "delta"};
    for (std::size_t i = 0; i < t.values.size(); ++i)
        o.table.push_back({std::to_string(i), t.values[i].str(), t.deltas[i].str()});
}

void add_report(Json& arr, const ConvergenceReport& r) {
    Json j = Json::object();
    j["criterion"] = r.criterion;
    j["verdict"] = to_string(r.verdict);
    j["statistic"] = r.statistic.str();
    j["sample_depth"] = std::to_string(r.sample_depth);
    j["notes"] = r.notes;
    if (r.offending_index) j["offending_index"] = std::to_string(*r.offending_index);
    for (const auto& [k, v] : r.extras) j[k] = v.str();
    arr.push_back(j);
}

// Maps for `solve fixed-point`: cos, kepler:M=..,e=.., sqrt:a=.. (x = sqrt(a + x)).
FixedPointMap parse_map(const std::string& text, Prec prec) {
    auto colon = text.find(':');
    std::string name = text.substr(0, colon);
    std::map<std::string, Real> kv;
    if (colon != std::string::npos) {
        std::stringstream ss(text.substr(colon + 1));
        std::string item;
        while (std::getline(ss, item, ',')) {
            auto eq = item.find('=');
            if (eq == std::string::npos) throw UsageError("expected key=value in map spec: " + item);
            kv.emplace(item.substr(0, eq), parse_real(item.substr(eq + 1), prec));
        }
    }
    auto get = [&](const std::string& k) {
        auto it = kv.find(k);
        if (it == kv.end()) throw UsageError("map '" + name + "' needs " + k);
        return it->second;
    };
    if (name == "cos") return {[](const Real& x) { return cos(x); }, [](const Real& x) { return -sin(x); }};
    if (name == "kepler") {
        Real M = get("M"), e = get("e");
        return {[M, e](const Real& x) { return M + e * sin(x); }, [e](const Real& x) { return e * cos(x); }};
    }
    if (name == "sqrt") {
        Real a = get("a");
        return {[a](const Real& x) { return sqrt(a + x); },
                [a](const Real& x) { return Real(1L, x.prec()) / (2L * sqrt(a + x)); }};
    }
    throw UsageError("unknown map: " + name);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Continued compositions: evaluation, criteria, codecs, products and solvers"};
    app.require_subcommand(1);
    app.fallthrough();
    CommandConfig cfg;
    app.add_option("--precision", cfg.precision, "working precision in bits")
        ->envname("CCOMP_PRECISION")
        ->check(CLI::Range(static_cast<Prec>(kMinPrecision), static_cast<Prec>(1) << 24));
    app.add_option("--tolerance", cfg.tolerance, "stopping tolerance (decimal)");
    app.add_option("--max-depth", cfg.max_depth, "depth cap for limits")->check(CLI::PositiveNumber);
    app.add_option("--output", cfg.output, "output format")->check(CLI::IsMember({"text", "json", "csv"}));

    std::string kind = "sqrt", terms, seed;
    std::size_t depth = 10;
    bool forward = false;
    auto* eval = app.add_subcommand("eval", "evaluate one approximant and its trace");
    auto* limit = app.add_subcommand("limit", "iterate approximants to the stopping rule");
    for (auto* sc : {eval, limit}) {
        sc->add_option("--kind", kind, "sqrt, root:r, power:p, recip:r, cot, log:base, fraction");
        sc->add_option("--terms", terms, "term stream spec")->required();
        sc->add_option("--seed", seed, "innermost value (decimal or inf)");
        sc->add_flag("--forward", forward, "iterated (left) composition");
    }
    eval->add_option("--depth", depth, "approximant depth");

    std::string criterion = "all", p_text, r_text;
    std::size_t sample = 64;
    auto* classify = app.add_subcommand("classify", "run convergence criteria on a term stream");
    classify->add_option("--criterion", criterion,
                         "hv, polya, szego, theorem3, andrushkiw, jones-power, jones-recip, laugwitz, all");
    classify->add_option("--terms", terms, "term stream spec")->required();
    classify->add_option("--sample", sample, "sample depth N")->check(CLI::Range(8, 1 << 20));
    classify->add_option("--p", p_text, "power for jones-power");
    classify->add_option("--r", r_text, "root index for jones-recip");

    auto* expand = app.add_subcommand("expand", "expand a real into digits");
    expand->require_subcommand(1);
    std::string x_text, beta_text = "1.5", system = "reciprocal";
    std::size_t digits = 8;
    auto* e_cot = expand->add_subcommand("cot", "continued cotangent digits");
    auto* e_fexp = expand->add_subcommand("fexp", "f-expansion digits");
    auto* e_beta = expand->add_subcommand("beta", "greedy beta-expansion digits");
    auto* e_signs = expand->add_subcommand("signs", "signs of a nest of 2s");
    auto* e_sizer = expand->add_subcommand("sizer", "digits in {0,1,2} under nested roots");
    for (auto* sc : {e_cot, e_fexp, e_beta, e_signs, e_sizer}) {
        sc->add_option("--x", x_text, "value to expand")->required();
        sc->add_option("--digits,--depth", digits, "digit count");
    }
    e_fexp->add_option("--system", system, "reciprocal or radix:p");
    e_beta->add_option("--beta", beta_text, "base > 1");

    std::string method = "catalan";
    std::size_t n = 20;
    auto* pi = app.add_subcommand("pi", "pi from a product or nest");
    pi->add_option("--method", method)->check(CLI::IsMember({"catalan", "viete", "euler", "osler", "bounds"}));
    pi->add_option("--n", n, "factor count or polygon index");
    auto* logc = app.add_subcommand("log", "log x from a radical product");
    logc->add_option("--x", x_text)->required();
    logc->add_option("--n", n, "factor count");
    auto* lemn = app.add_subcommand("lemniscate", "2/L from the radical product");
    lemn->add_option("--n", n, "factor count");

    auto* solve = app.add_subcommand("solve", "root finders");
    solve->require_subcommand(1);
    int tm = 3, tn = 1;
    std::string tp = "-7", tq = "7", alg = "A", map_text = "cos", x0_text;
    bool astrand = false, newton = false;
    auto* s_tri = solve->add_subcommand("trinomial", "x^m + p x^n + q = 0");
    s_tri->add_option("--m", tm);
    s_tri->add_option("--n", tn);
    s_tri->add_option("--p", tp);
    s_tri->add_option("--q", tq);
    s_tri->add_option("--alg", alg)->check(CLI::IsMember({"A", "B"}));
    s_tri->add_option("--x0", x0_text, "starting point");
    s_tri->add_flag("--astrand", astrand, "rescaled continued root instead (n = 1 only)");
    auto* s_fp = solve->add_subcommand("fixed-point", "iterate a map to its fixed point");
    s_fp->add_option("--map", map_text, "cos, kepler:M=..,e=.., sqrt:a=..");
    s_fp->add_option("--x0", x0_text, "starting point");
    s_fp->add_flag("--newton", newton, "transformed map");

    auto* consts = app.add_subcommand("constants", "named constants");
    consts->require_subcommand(1);
    std::string const_name;
    auto* c_get = consts->add_subcommand("get", "compute one constant");
    c_get->add_option("name", const_name)->required();
    consts->add_subcommand("list", "list the registry");

    auto* corpus = app.add_subcommand("corpus", "identity corpus");
    corpus->require_subcommand(1);
    std::string corpus_path;
    auto* c_run = corpus->add_subcommand("run", "verify every record");
    c_run->add_option("file", corpus_path)->required()->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const Prec prec = cfg.precision;
    Output out;
    bool failed = false;
    try {
        Real tol = parse_real(cfg.tolerance, prec);
        if (tol <= 0.0) throw UsageError("tolerance must be positive");

        if (eval->parsed() || limit->parsed()) {
            EvalRequest req{parse_kind(kind), parse_term_stream(terms), depth, std::nullopt, prec};
            if (!seed.empty()) req.seed = seed == "inf" ? Real::inf(prec) : parse_real(seed, prec);
            out.set("kind", req.kind.name());
            out.set("terms", req.terms.description);
            Direction dir = forward ? Direction::Forward : Direction::Backward;
            if (eval->parsed()) {
                // Backward approximants share no work, so each depth is a separate evaluation.
                ApproximantTrace t;
                Real prev(prec);
                for (std::size_t d = 0; d <= depth; ++d) {
                    EvalRequest r = req;
                    r.depth = d;
                    Real v = forward ? eval_forward(r) : eval_backward(r);
                    t.deltas.push_back(d == 0 ? Real(prec) : abs(v - prev));
                    t.values.push_back(v);
                    prev = v;
                }
                out.set("depth", std::to_string(depth));
                out.set("value", t.values.back());
                add_trace(out, t);
            } else {
                auto r = estimate_limit(req, tol, cfg.max_depth, dir);
                out.set("value", r.value);
                out.set("converged_at", std::to_string(*r.trace.converged_at));
                out.set("tolerance", r.trace.tolerance_used);
                add_trace(out, r.trace);
            }
        } else if (classify->parsed()) {
            TermStream ts = parse_term_stream(terms);
            Json reports = Json::array();
            auto want = [&](const std::string& c) { return criterion == "all" || criterion == c; };
            bool any = false;
            if (want("hv")) { add_report(reports, herschfeld_vijayaraghavan(ts, sample, prec)); any = true; }
            if (want("polya")) { add_report(reports, polya_loglog(ts, sample, prec)); any = true; }
            if (want("szego")) { add_report(reports, polya_szego_series_test(ts, sample, prec)); any = true; }
            if (want("theorem3")) { add_report(reports, herschfeld_theorem3(ts, sample, 0.5, prec)); any = true; }
            if (want("andrushkiw")) { add_report(reports, andrushkiw(ts, sample, 2.0, prec)); any = true; }
            if (want("laugwitz")) {
                add_report(reports, laugwitz_general(MonotoneMapSpec::square_root(), ts, sample, prec));
                any = true;
            }
            if (criterion == "jones-power" || (criterion == "all" && !p_text.empty())) {
                if (p_text.empty()) throw UsageError("jones-power needs --p");
                add_report(reports, jones_power_tests(ts, parse_real(p_text, prec), sample, prec));
                any = true;
            }
            if (criterion == "jones-recip" || (criterion == "all" && !r_text.empty())) {
                if (r_text.empty()) throw UsageError("jones-recip needs --r");
                add_report(reports, jones_reciprocal_root(ts, parse_real(r_text, prec), sample, prec));
                any = true;
            }
            if (!any) throw UsageError("unknown criterion: " + criterion);
            out.set("terms", ts.description);
            out.fields["reports"] = reports;
            if (cfg.output != "json") {
                out.fields.erase("reports");
                for (const auto& r : reports) {
                    std::string line = r["verdict"].get<std::string>() + " (statistic " +
                                       r["statistic"].get<std::string>() + ")";
                    out.set(r["criterion"].get<std::string>(), line);
                }
            }
        } else if (expand->parsed()) {
            if (e_cot->parsed()) {
                Real x = parse_real(x_text, prec);
                auto d = cot_encode(x, digits);
                out.set("digits", [&] {
                    std::string s;
                    for (std::size_t i = 0; i < d.digits.size(); ++i) s += (i ? " " : "") + d.digits[i].get_str();
                    return s;
                }());
                out.set("terminated", d.terminated ? "true" : "false");
                if (!d.terminated) out.set("residual", d.residual);
                out.set("regular", check_regular(d) ? "true" : "false");
                out.set("reconstructed", cot_decode(d, d.digits.size(), prec));
            } else if (e_fexp->parsed() || e_beta->parsed()) {
                Real x = parse_real(x_text, prec);
                FDigits d;
                Real back(prec);
                if (e_beta->parsed()) {
                    Real beta = parse_real(beta_text, prec);
                    d = beta_encode(beta, x, digits);
                    back = beta_value(beta, d.digits);
                } else {
                    FExpansionSystem sys;
                    if (system == "reciprocal") sys = FExpansionSystem::reciprocal();
                    else if (system.rfind("radix:", 0) == 0) sys = FExpansionSystem::radix(std::stol(system.substr(6)));
                    else throw UsageError("unknown system: " + system);
                    d = f_encode(sys, x, digits);
                    back = f_decode(sys, d, d.digits.size());
                }
                std::string s;
                for (std::size_t i = 0; i < d.digits.size(); ++i) s += (i ? " " : "") + d.digits[i].get_str();
                out.set("digits", s);
                out.set("terminated", d.terminated ? "true" : "false");
                out.set("residual", d.residual);
                out.set("reconstructed", back);
            } else if (e_signs->parsed()) {
                Real x = parse_real(x_text, prec);
                auto s = encode_sign_nest(x, digits);
                out.set("signs", s.str());
                out.set("value", sign_nest_value(s, digits, prec).direct);
            } else {
                Real x = parse_real(x_text, prec);
                auto d = sizer_encode(x, digits);
                out.set("head", d.head.get_str());
                std::string s;
                for (int t : d.tail) s += static_cast<char>('0' + t);
                out.set("tail", s);
                out.set("residual", d.residual);
                out.set("reconstructed", sizer_decode(d));
            }
        } else if (pi->parsed()) {
            out.set("method", method);
            out.set("n", std::to_string(n));
            if (method == "catalan") out.set("value", catalan_pi(n, prec));
            else if (method == "viete") out.set("value", Real(2L, prec) / viete_product(n, prec));
            else if (method == "euler") {
                // A = pi/2 gives sin A / prod cos(A/2^k) -> pi/2.
                out.set("value", 2L * euler_secant_product(n, ldexp(Real::pi(prec), -1)));
            } else if (method == "osler") out.set("value", Real(2L, prec) / osler_union_product(n, 0, prec));
            else {
                auto [lo, hi] = polygon_bounds_pi(n, prec);
                out.set("lower", lo);
                out.set("upper", hi);
            }
        } else if (logc->parsed()) {
            Real x = parse_real(x_text, prec);
            out.set("x", x);
            out.set("value", osler_log_product(x, n));
        } else if (lemn->parsed()) {
            out.set("n", std::to_string(n));
            out.set("value", levin_lemniscate_product(n, prec));
            out.set("target", Real(2L, prec) / lemniscate_constant_reference(prec));
        } else if (solve->parsed()) {
            if (s_tri->parsed()) {
                Trinomial t{tm, tn, parse_real(tp, prec), parse_real(tq, prec)};
                if (astrand) {
                    if (tn != 1) throw UsageError("--astrand needs n = 1");
                    // x^m + p x + q = 0 is x^m - a x + sign*b with a = -p.
                    Real a = -t.p, b = abs(t.q);
                    int sign = t.q.sign() < 0 ? -1 : 1;
                    Real s = x0_text.empty() ? Real(1L, prec) : parse_real(x0_text, prec);
                    auto r = astrand_transform(tm, a, b, sign, s, tol.to_double(), std::max<std::size_t>(cfg.max_depth, 100000));
                    out.set("root", r.root);
                    out.set("c", r.c);
                    out.set("residual", r.residual);
                    add_trace(out, r.trace);
                } else {
                    std::optional<Real> x0;
                    if (!x0_text.empty()) x0 = parse_real(x0_text, prec);
                    auto r = hoffmann_solve(t, alg == "A" ? HoffmannAlgorithm::A : HoffmannAlgorithm::B, x0,
                                            100000, 0.0, prec);
                    out.set("root", r.root);
                    out.set("iterations", std::to_string(r.iterations));
                    out.set("residual", r.residual);
                    out.set("bound", r.bound);
                    out.set("inside_bound", r.inside_bound ? "true" : "false");
                }
            } else {
                auto map = parse_map(map_text, prec);
                Real x0 = x0_text.empty() ? Real(1L, prec) : parse_real(x0_text, prec);
                auto r = iterate_fixed_point(map, x0, 100000, tol.to_double(), newton);
                out.set("root", r.root);
                out.set("iterations", std::to_string(r.iterations));
                out.set("derivative", r.derivative);
                out.set("approach", to_string(r.approach));
            }
        } else if (consts->parsed()) {
            if (c_get->parsed()) {
                const auto& c = find_constant(const_name);
                out.set("name", c.name);
                out.set("value", compute_constant(c.name, prec));
                out.set("reference", c.reference_digits);
                out.set("citation", c.citation);
            } else {
                out.table_header = {"name", "reference", "citation"};
                for (const auto& c : constant_registry()) out.table.push_back({c.name, c.reference_digits, c.citation});
            }
        } else if (c_run->parsed()) {
            auto records = load_identity_corpus(corpus_path);
            auto rep = run_identity_corpus(records, prec);
            out.set("records", std::to_string(rep.results.size()));
            out.set("passed", std::to_string(rep.passed()));
            out.table_header = {"id", "status", "value", "error", "tol", "message"};
            for (const auto& r : rep.results) {
                std::ostringstream e, t;
                e << r.error;
                t << r.tol;
                out.table.push_back({r.id, r.passed ? "pass" : "FAIL", r.value, e.str(), t.str(), r.message});
            }
            failed = rep.passed() != rep.results.size();
        }
    } catch (const UsageError& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << e.name() << ": " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "Error: " << e.what() << "\n";
        return 1;
    }
    std::cout << render(out, cfg.output);
    return failed ? 1 : 0;
}
