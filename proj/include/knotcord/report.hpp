#pragma once

#include <string>

#include "json.hpp"

#include "knotcord/classifier.hpp"
#include "knotcord/metabolizer.hpp"
#include "knotcord/replay.hpp"
#include "knotcord/seifert.hpp"

namespace knotcord {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolkitName = "knotcord";
inline constexpr const char* kToolkitVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

/// Machine report plus the matching human-readable rendering.
struct Report {
    Json json;
    std::string text;
};

/// Parses {"seifert": [[...], ...]} with entries given as JSON integers or
/// decimal strings. Throws InputError / SeifertFormError with a diagnostic
/// naming the violated invariant.
SeifertMatrix parse_seifert_document(const std::string& text);

Json seifert_to_json(const SeifertMatrix& v);

Report cmd_analyze(const SeifertMatrix& v);
Report cmd_double(const mpz_class& a);
/// One row per a in [from, to]: the classification table of twisted doubles.
Report cmd_double_table(long from, long to);
Report cmd_twobridge(const mpz_class& p, const mpz_class& q);

struct MetabParams {
    std::uint64_t p = 3;
    unsigned n = 1;
    unsigned k = 1;
    std::vector<long> eps; // empty = alternating (1, -1, ...)
    bool check_structure = false;
    bool run_replay = false;
    bool budget_override = false;
    int threads = 0;
};
Report cmd_metab(const MetabParams& params);

} // namespace knotcord
