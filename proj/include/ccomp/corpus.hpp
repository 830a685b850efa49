#pragma once

#include "ccomp/errors.hpp"
#include "ccomp/real.hpp"

#include <map>
#include <string>
#include <vector>

namespace ccomp {

// One identity to verify. `check` selects the evaluator:
//   nest    kind, terms, depth[, seed, direction, factor]
//   limit   kind, terms, max_depth[, seed, direction]  (estimate_limit at tol/10)
//   szego   max_length: direct nest vs sine series for every sign pattern
//   nyblom  count, seed, x_min, x_max, k_max: closed form vs direct nest
//   servi   k: ratio of the minus-topped nests at 2 and 3
//   hauser  n: 2^n sqrt(R_n(2.5) - 2)
// `rhs` is a decimal string; checks that compare many values internally
// report their worst error and ignore it.
struct IdentityRecord {
    std::string id;
    std::string check = "nest";
    std::map<std::string, std::string> params;
    std::string rhs = "0";
    double tol = 1e-10;
    std::string source;

    std::string param(const std::string& key) const;
    std::string param(const std::string& key, const std::string& fallback) const;
};

struct IdentityResult {
    std::string id;
    bool passed = false;
    std::string value;
    double error = 0.0;
    double tol = 0.0;
    std::string message;
};

struct CorpusReport {
    std::vector<IdentityResult> results;
    std::size_t passed() const;
};

// JSON Lines, one record per line; blank lines and lines starting with '#' are skipped.
std::vector<IdentityRecord> load_identity_corpus(const std::string& path);
std::vector<IdentityRecord> parse_identity_corpus(const std::string& text);

CorpusReport run_identity_corpus(const std::vector<IdentityRecord>& corpus, Prec prec = kDefaultPrecision);

}  // namespace ccomp
