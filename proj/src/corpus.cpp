#include "ccomp/corpus.hpp"

#include "ccomp/engine.hpp"
#include "ccomp/radicals.hpp"
#include "ccomp/termspec.hpp"

#include <json.hpp>

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace ccomp {

std::string IdentityRecord::param(const std::string& key) const {
    auto it = params.find(key);
    if (it == params.end()) throw std::invalid_argument("record " + id + ": missing field '" + key + "'");
    return it->second;
}

std::string IdentityRecord::param(const std::string& key, const std::string& fallback) const {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

std::size_t CorpusReport::passed() const {
    std::size_t n = 0;
    for (const auto& r : results) n += r.passed;
    return n;
}

std::vector<IdentityRecord> parse_identity_corpus(const std::string& text) {
    std::vector<IdentityRecord> out;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw std::invalid_argument("corpus line " + std::to_string(lineno) + ": " + e.what());
        }
        IdentityRecord r;
        for (auto it = j.begin(); it != j.end(); ++it) {
            std::string v = it->is_string() ? it->get<std::string>() : it->dump();
            const std::string& k = it.key();
            if (k == "id") r.id = v;
            else if (k == "check") r.check = v;
            else if (k == "rhs") r.rhs = v;
            else if (k == "tol") r.tol = std::stod(v);
            else if (k == "source") r.source = v;
            else r.params[k] = v;
        }
        if (r.id.empty()) throw std::invalid_argument("corpus line " + std::to_string(lineno) + ": missing id");
        if (!(r.tol > 0.0)) throw std::invalid_argument("record " + r.id + ": tolerance must be positive");
        bool finite = false;
        try {
            finite = Real(r.rhs, kMinPrecision).is_finite();
        } catch (const std::invalid_argument&) {
        }
        if (!finite) throw std::invalid_argument("record " + r.id + ": rhs must be a finite decimal");
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<IdentityRecord> load_identity_corpus(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open corpus file " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_identity_corpus(ss.str());
}

namespace {

Real parse_real(const std::string& s, Prec prec) {
    if (s == "inf" || s == "+inf") return Real::inf(prec);
    return Real(std::string_view(s), prec);
}

EvalRequest request_of(const IdentityRecord& r, Prec prec) {
    EvalRequest req;
    req.kind = parse_kind(r.param("kind", "sqrt"));
    req.terms = parse_term_stream(r.param("terms"));
    req.precision = prec;
    if (r.params.count("seed")) req.seed = parse_real(r.param("seed"), prec);
    return req;
}

Direction direction_of(const IdentityRecord& r) {
    std::string d = r.param("direction", "backward");
    if (d == "backward") return Direction::Backward;
    if (d == "forward") return Direction::Forward;
    throw std::invalid_argument("record " + r.id + ": direction must be backward or forward");
}

// Evaluators return the value compared against rhs, or set `worst` for
// self-comparing checks.
struct Outcome {
    Real value;
    std::optional<Real> worst;
};

Outcome check_nest(const IdentityRecord& r, Prec prec) {
    EvalRequest req = request_of(r, prec);
    req.depth = std::stoul(r.param("depth"));
    Real v = direction_of(r) == Direction::Backward ? eval_backward(req) : eval_forward(req);
    if (r.params.count("factor")) v *= parse_real(r.param("factor"), prec);
    return {v, std::nullopt};
}

Outcome check_limit(const IdentityRecord& r, Prec prec) {
    EvalRequest req = request_of(r, prec);
    std::size_t max_depth = std::stoul(r.param("max_depth", "2000"));
    auto res = estimate_limit(req, Real(r.tol / 10, prec), max_depth, direction_of(r));
    return {res.value, std::nullopt};
}

Outcome check_szego(const IdentityRecord& r, Prec prec) {
    const std::size_t max_len = std::stoul(r.param("max_length"));
    Real worst(prec);
    for (std::size_t len = 1; len <= max_len; ++len) {
        for (unsigned long mask = 0; mask < (1UL << len); ++mask) {
            SignSequence s;
            for (std::size_t i = 0; i < len; ++i) s.signs.push_back((mask >> i) & 1 ? -1 : 1);
            auto v = sign_nest_value(s, len - 1, prec);
            worst = max(worst, abs(v.direct - v.series));
        }
    }
    return {Real(prec), worst};
}

Outcome check_nyblom(const IdentityRecord& r, Prec prec) {
    const std::size_t count = std::stoul(r.param("count"));
    std::mt19937_64 rng(std::stoull(r.param("seed", "1")));
    std::uniform_real_distribution<double> xs(std::stod(r.param("x_min")), std::stod(r.param("x_max")));
    std::uniform_int_distribution<unsigned> ks(1, static_cast<unsigned>(std::stoul(r.param("k_max"))));
    Real worst(prec);
    for (std::size_t i = 0; i < count; ++i) {
        Real x(xs(rng), prec);
        unsigned k = ks(rng);
        for (auto variant : {NyblomVariant::Plus, NyblomVariant::Minus}) {
            Real closed = nyblom_closed_form(x, k, variant);
            // The minus variant cancels in the direct route; give it guard bits.
            Real direct(nyblom_direct(Real(x, prec + 2 * k + 16), k, variant), prec);
            Real scale = max(abs(closed), ldexp(Real(1L, prec), -static_cast<long>(prec) / 2));
            worst = max(worst, abs(closed - direct) / scale);
        }
    }
    return {Real(prec), worst};
}

// sqrt(2 - sqrt(2 + ... + sqrt(2 + sqrt n))) with k roots in all.
Real servi_nest(long n, unsigned k, Prec prec) {
    if (k < 2) throw DomainError("Servi nest needs at least two roots");
    Real inner = sqrt(Real(n, prec));
    if (k > 2) {
        EvalRequest req{CompositionKind::square_root(), TermStream::constant(Real(2L, prec)), k - 3, inner, prec};
        inner = eval_backward(req);
    }
    return sqrt(2L - inner);
}

Outcome check_servi(const IdentityRecord& r, Prec prec) {
    unsigned k = static_cast<unsigned>(std::stoul(r.param("k")));
    Prec work = prec + 2 * k + 16;
    Real ratio = servi_nest(2, k, work) / servi_nest(3, k, work);
    return {Real(ratio, prec), std::nullopt};
}

Outcome check_hauser(const IdentityRecord& r, Prec prec) {
    unsigned n = static_cast<unsigned>(std::stoul(r.param("n")));
    Real x(std::string_view("2.5"), prec);
    Real v = ldexp(nyblom_closed_form(x, n + 1, NyblomVariant::Minus), n);
    // The literal nest at doubled precision must agree with the subtraction-free value.
    Real lit = ldexp(nyblom_direct(Real(x, 2 * prec + 2 * n), n + 1, NyblomVariant::Minus), n);
    if (abs(Real(lit, prec) - v) > ldexp(abs(v), -static_cast<long>(prec) + 16))
        throw DomainError("direct and closed-form routes disagree");
    return {v, std::nullopt};
}

}  // namespace

CorpusReport run_identity_corpus(const std::vector<IdentityRecord>& corpus, Prec prec) {
    CorpusReport report;
    for (const auto& r : corpus) {
        IdentityResult res;
        res.id = r.id;
        res.tol = r.tol;
        try {
            Outcome o;
            if (r.check == "nest") o = check_nest(r, prec);
            else if (r.check == "limit") o = check_limit(r, prec);
            else if (r.check == "szego") o = check_szego(r, prec);
            else if (r.check == "nyblom") o = check_nyblom(r, prec);
            else if (r.check == "servi") o = check_servi(r, prec);
            else if (r.check == "hauser") o = check_hauser(r, prec);
            else throw std::invalid_argument("unknown check '" + r.check + "'");
            Real err = o.worst ? *o.worst : abs(o.value - parse_real(r.rhs, prec));
            res.value = o.worst ? "max deviation " + o.worst->str(6) : o.value.str(30);
            res.error = err.to_double();
            res.passed = err <= Real(r.tol, prec);
            if (!res.passed) res.message = "error exceeds tolerance";
        } catch (const std::exception& e) {
            res.passed = false;
            res.message = e.what();
        }
        report.results.push_back(std::move(res));
    }
    return report;
}

}  // namespace ccomp
