#include "ccomp/termspec.hpp"

#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ccomp {

namespace {

constexpr Prec kParsePrec = 256;

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(trim(item));
    return out;
}

Real number(const std::string& s) {
    try {
        return Real(std::string_view(s), kParsePrec);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a number: '" + s + "'");
    }
}

class Params {
public:
    Params(const std::string& name, const std::string& body) : name_(name) {
        if (body.empty()) return;
        for (const auto& kv : split(body, ',')) {
            auto eq = kv.find('=');
            if (eq == std::string::npos) throw std::invalid_argument(name + ": expected key=value, got '" + kv + "'");
            values_[trim(kv.substr(0, eq))] = trim(kv.substr(eq + 1));
        }
    }
    Real real(const std::string& key) {
        auto it = values_.find(key);
        if (it == values_.end()) throw std::invalid_argument(name_ + ": missing '" + key + "'");
        used_.insert(key);
        return number(it->second);
    }
    Real real(const std::string& key, long fallback) {
        return values_.count(key) ? real(key) : Real(fallback, kParsePrec);
    }
    std::string text(const std::string& key) {
        auto it = values_.find(key);
        if (it == values_.end()) throw std::invalid_argument(name_ + ": missing '" + key + "'");
        used_.insert(key);
        return it->second;
    }
    bool has(const std::string& key) const { return values_.count(key) > 0; }
    void finish() const {
        for (const auto& [k, v] : values_)
            if (!used_.count(k)) throw std::invalid_argument(name_ + ": unknown key '" + k + "'");
    }

private:
    std::string name_;
    std::map<std::string, std::string> values_;
    std::set<std::string> used_;
};

std::vector<int> parse_signs(const std::string& s) {
    std::vector<int> out;
    for (char c : s) {
        if (c == '+') out.push_back(1);
        else if (c == '-') out.push_back(-1);
        else throw std::invalid_argument("sign pattern may only contain + and -");
    }
    if (out.empty()) throw std::invalid_argument("empty sign pattern");
    return out;
}

TermStream list_stream(const std::string& body) {
    std::vector<Real> xs;
    for (const auto& item : split(body, ',')) xs.push_back(number(item));
    if (xs.empty()) throw std::invalid_argument("empty term list");
    return TermStream::explicit_list(std::move(xs));
}

}  // namespace

TermStream parse_term_stream(const std::string& text_in) {
    const std::string text = trim(text_in);
    if (text.empty()) throw std::invalid_argument("empty term specification");
    auto colon = text.find(':');
    std::string name = colon == std::string::npos ? text : text.substr(0, colon);
    std::string body = colon == std::string::npos ? "" : text.substr(colon + 1);

    if (name == "ramanujan1" || name == "ramanujan2") {
        const long a0 = name == "ramanujan1" ? 1 : 6;
        const long da = name == "ramanujan1" ? 0 : 1;
        TermStream s = TermStream::arithmetic(Real(a0, 64), Real(da, 64), Real(2L, 64), Real(1L, 64));
        s.description = name;
        return s;
    }
    if (name == "list") return list_stream(body);
    if (colon == std::string::npos) return list_stream(text);

    Params p(name, body);
    TermStream s;
    if (name == "const") {
        Real a = p.real("a");
        Real b = p.real("b", 1);
        int sign = p.real("sign", 1).sign() < 0 ? -1 : 1;
        s = TermStream::constant(a, b, sign);
    } else if (name == "arith") {
        Real a0 = p.real("start"), da = p.real("step");
        Real b0 = p.real("bstart", 1), db = p.real("bstep", 0);
        s = TermStream::arithmetic(a0, da, b0, db);
    } else if (name == "periodic") {
        auto signs = parse_signs(p.text("signs"));
        Real a = p.real("a", 2), b = p.real("b", 1);
        if (p.has("pre")) {
            // Leading multipliers signs before the repeating block.
            auto head = parse_signs(p.text("pre"));
            s = TermStream::from_functions(
                [a](std::size_t, Prec pr) { return Real(a, pr); },
                [b, head, signs](std::size_t i, Prec pr) {
                    int sg = i < head.size() ? head[i] : signs[(i - head.size()) % signs.size()];
                    return Real(b, pr) * static_cast<long>(sg);
                });
        } else {
            s = TermStream::periodic_signs(a, std::move(signs), b);
        }
    } else if (name == "geom") {
        Real a0 = p.real("a0"), ratio = p.real("ratio"), b = p.real("b", 1);
        if (a0.sign() <= 0 || ratio.sign() <= 0) throw std::invalid_argument("geom: a0 and ratio must be positive");
        s = TermStream::from_functions(
            [a0, ratio](std::size_t i, Prec pr) { return Real(a0, pr) * pow(Real(ratio, pr), static_cast<long>(i)); },
            [b](std::size_t, Prec pr) { return Real(b, pr); });
        s.log_addend = [a0, ratio](std::size_t i, Prec pr) {
            return log(Real(a0, pr)) + log(Real(ratio, pr)) * static_cast<long>(i);
        };
    } else if (name == "dexp") {
        Real base = p.real("base"), growth = p.real("growth"), scale = p.real("scale", 1);
        if (base <= 1.0 || growth.sign() <= 0 || scale.sign() <= 0)
            throw std::invalid_argument("dexp: need base > 1, growth > 0, scale > 0");
        auto lg = [base, growth, scale](std::size_t i, Prec pr) {
            return log(Real(scale, pr)) + log(Real(base, pr)) * pow(Real(growth, pr), static_cast<long>(i));
        };
        s = TermStream::from_functions([base, growth, scale](std::size_t i, Prec pr) {
            return Real(scale, pr) * pow(Real(base, pr), pow(Real(growth, pr), static_cast<long>(i)));
        });
        s.log_addend = lg;
    } else if (name == "eexp") {
        Real c = p.real("c");
        auto lg = [c](std::size_t i, Prec pr) { return exp(Real(c, pr) * static_cast<long>(i)); };
        s = TermStream::from_functions([lg](std::size_t i, Prec pr) { return exp(lg(i, pr)); });
        s.log_addend = lg;
    } else if (name == "mcguffin") {
        Real x = p.real("x"), n = p.real("n"), a = p.real("a");
        s = TermStream::from_functions(
            [x, n, a](std::size_t i, Prec pr) {
                Real xi = Real(x, pr) + Real(n, pr) * static_cast<long>(i);
                Real na = Real(n, pr) + Real(a, pr);
                return Real(a, pr) * xi + na * na;
            },
            [x, n](std::size_t i, Prec pr) { return Real(x, pr) + Real(n, pr) * static_cast<long>(i); });
    } else {
        throw std::invalid_argument("unknown term stream '" + name + "'");
    }
    p.finish();
    if (s.description.empty() || s.description == "custom") s.description = text;
    return s;
}

CompositionKind parse_kind(const std::string& text_in) {
    const std::string text = trim(text_in);
    auto colon = text.find(':');
    std::string name = colon == std::string::npos ? text : text.substr(0, colon);
    std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
    auto param = [&]() {
        if (arg.empty()) throw std::invalid_argument(name + " needs a parameter, e.g. " + name + ":3");
        std::size_t used = 0;
        double v = std::stod(arg, &used);
        if (used != arg.size()) throw std::invalid_argument("bad parameter '" + arg + "'");
        return v;
    };
    try {
        if (name == "sqrt") return CompositionKind::square_root();
        if (name == "root") return CompositionKind::rth_root(param());
        if (name == "power") return CompositionKind::power(param());
        if (name == "recip") return CompositionKind::reciprocal_root(param());
        if (name == "cot") return CompositionKind::cotangent();
        if (name == "log") return CompositionKind::logarithm(param());
        if (name == "fraction") return CompositionKind::fraction();
    } catch (const DomainError& e) {
        throw std::invalid_argument(e.what());
    }
    throw std::invalid_argument("unknown composition kind '" + text + "'");
}

}  // namespace ccomp
