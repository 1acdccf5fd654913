#include "knotcord/report.hpp"

#include <sstream>

#include "knotcord/number_theory.hpp"

namespace knotcord {

namespace {

Json header(const std::string& command) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["toolkit"] = Json{{"name", kToolkitName}, {"version", kToolkitVersion}};
    j["command"] = command;
    return j;
}

Json matrix_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).get_str());
        rows.push_back(std::move(row));
    }
    return rows;
}

Json factorization_json(const Factorization& f) {
    Json out = Json::array();
    for (const auto& e : f.entries)
        out.push_back(Json{{"prime", e.prime}, {"exponent", e.exponent}});
    return out;
}

std::string factorization_text(const Factorization& f) {
    if (f.entries.empty()) return "1";
    std::ostringstream out;
    for (std::size_t i = 0; i < f.entries.size(); ++i) {
        if (i) out << " * ";
        out << f.entries[i].prime;
        if (f.entries[i].exponent > 1) out << "^" << f.entries[i].exponent;
    }
    return out.str();
}

Json group_json(const FiniteAbelianGroup& g) {
    Json j;
    j["order"] = g.order().get_str();
    Json inv = Json::array();
    for (const auto& d : g.invariant_factors()) inv.push_back(d.get_str());
    j["invariant_factors"] = std::move(inv);
    Json primary = Json::array();
    for (const auto& [p, exps] : g.primary_decomposition())
        primary.push_back(Json{{"prime", p}, {"exponents", exps}});
    j["primary"] = std::move(primary);
    j["display"] = g.to_string();
    return j;
}

Json alexander_json(const IntPolynomial& delta) {
    Json j;
    j["polynomial"] = delta.to_string();
    Json coeffs = Json::array();
    for (const auto& c : delta.coefficients()) coeffs.push_back(c.get_str());
    j["coefficients_ascending"] = std::move(coeffs);
    const mpz_class at1 = delta.eval(1), atm1 = delta.eval(-1);
    j["at_1"] = at1.get_str();
    j["at_minus_1"] = atm1.get_str();
    j["at_minus_1_factorization"] = factorization_json(factorize(abs(atm1)));
    return j;
}

Json gate_json(const std::vector<GateWitness>& ws) {
    Json out = Json::array();
    for (const auto& w : ws) out.push_back(Json{{"p", w.p}, {"n", w.n}});
    return out;
}

Json order4_witnesses_json(const std::vector<Order4Witness>& ws) {
    Json out = Json::array();
    for (const auto& w : ws) out.push_back(Json{{"p", w.p}, {"exponent", w.exponent}});
    return out;
}

Json classification_json(const AlgebraicClassification& c) {
    Json j;
    j["order"] = to_string(c.order);
    j["delta_1_times_delta_minus_1"] = c.delta_product.get_str();
    j["witnesses"] = order4_witnesses_json(c.witnesses);
    return j;
}

Json rules_json(const std::vector<FiredRule>& rules) {
    Json out = Json::array();
    for (const auto& r : rules) out.push_back(Json{{"rule", r.label}, {"witness", r.witness}});
    return out;
}

std::string gate_text(const std::vector<GateWitness>& ws) {
    if (ws.empty()) return "no witnesses";
    std::ostringstream out;
    for (std::size_t i = 0; i < ws.size(); ++i) {
        if (i) out << ", ";
        out << "(p=" << ws[i].p << ", n=" << ws[i].n << ")";
    }
    return out.str();
}

Json nf_json(const MetabolizerNF& nf, std::size_t index) {
    Json j;
    j["index"] = index;
    j["id"] = nf.id();
    j["profile"] = nf.profile;
    j["permutation"] = nf.perm;
    Json rows = Json::array();
    for (const auto& r : nf.rows) rows.push_back(r);
    j["rows"] = std::move(rows);
    j["span_order"] = nf.span_order().get_str();
    return j;
}

Json structure_json(const StructureReport& s) {
    Json j;
    j["order_condition"] = s.order_condition;
    j["isotropic"] = s.isotropic;
    j["profile_symmetric"] = s.profile_symmetric;
    j["mid_sum_applicable"] = s.mid_sum_applicable;
    if (s.mid_sum_applicable) j["mid_sum"] = s.mid_sum;
    j["quotient_self_dual"] = s.quotient_self_dual;
    Json qf = Json::array(), sf = Json::array();
    for (const auto& d : s.quotient_factors) qf.push_back(d.get_str());
    for (const auto& d : s.span_factors) sf.push_back(d.get_str());
    j["quotient_factors"] = std::move(qf);
    j["span_factors"] = std::move(sf);
    j["all_pass"] = s.all_pass();
    return j;
}

Json certificate_json(const Certificate& c) {
    Json j;
    j["p"] = c.p;
    j["n"] = c.n;
    j["k"] = c.k;
    j["metabolizer_index"] = c.metabolizer_index;
    j["metabolizer_id"] = c.metabolizer_id;
    Json levels = Json::array();
    for (const auto& rec : c.levels) {
        Json lj;
        lj["level"] = rec.level;
        lj["vector"] = rec.vector_entries;
        lj["q"] = rec.q;
        lj["generator"] = rec.generator;
        Json rel = Json::array();
        for (const auto& coeff : rec.relation) rel.push_back(coeff.get_str());
        lj["relation"] = std::move(rel);
        lj["symbols"] = rec.symbol_count;
        lj["resultant"] = rec.resultant.get_str();
        levels.push_back(std::move(lj));
    }
    j["levels"] = std::move(levels);
    j["final_level"] = c.final_level;
    j["final_character_onto_exponent"] = c.final_character_onto;
    j["conclusion"] = c.conclusion;
    return j;
}

} // namespace

SeifertMatrix parse_seifert_document(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("input is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("seifert") || !doc["seifert"].is_array())
        throw InputError("expected a JSON object {\"seifert\": [[...], ...]}");

    std::vector<std::vector<mpz_class>> rows;
    for (const auto& row : doc["seifert"]) {
        if (!row.is_array()) throw InputError("seifert matrix rows must be arrays");
        std::vector<mpz_class> r;
        for (const auto& cell : row) {
            if (cell.is_number_integer()) {
                r.emplace_back(static_cast<long>(cell.get<long long>()));
            } else if (cell.is_string()) {
                try {
                    r.emplace_back(cell.get<std::string>());
                } catch (const std::invalid_argument&) {
                    throw InputError("matrix entry is not a decimal integer string: " +
                                     cell.get<std::string>());
                }
            } else {
                throw InputError("non-integer entries are not allowed in a Seifert matrix");
            }
        }
        rows.push_back(std::move(r));
    }
    IntMatrix m = IntMatrix::from_rows(rows);
    if (!m.is_square()) throw SeifertFormError("Seifert matrix must be square");
    return SeifertMatrix(std::move(m));
}

Json seifert_to_json(const SeifertMatrix& v) { return matrix_json(v.matrix()); }

Report cmd_analyze(const SeifertMatrix& v) {
    const ConcordanceVerdict verdict = full_verdict(v);

    Json j = header("analyze");
    j["input"] = Json{{"seifert", seifert_to_json(v)}};
    j["alexander"] = alexander_json(verdict.alexander);
    j["homology"] = group_json(verdict.homology);
    Json rules = Json::array();
    rules.push_back(Json{{"rule", "theorem-1.2"},
                         {"fires", !verdict.gate_witnesses.empty()},
                         {"witnesses", gate_json(verdict.gate_witnesses)}});
    if (verdict.algebraic)
        rules.push_back(Json{{"rule", "theorem-4.3"},
                             {"fires", true},
                             {"classification", classification_json(*verdict.algebraic)}});
    j["rules"] = std::move(rules);
    j["fired"] = rules_json(verdict.rules);
    Json vj;
    vj["algebraic_order"] =
        verdict.algebraic ? to_string(verdict.algebraic->order) : "indeterminate";
    vj["infinite_order"] = verdict.infinite_order;
    vj["status"] = verdict.status;
    j["verdict"] = std::move(vj);

    std::ostringstream t;
    t << "analyze\n";
    t << "  Alexander polynomial: " << verdict.alexander.to_string() << "\n";
    t << "    Delta(1) = " << verdict.alexander.eval(1).get_str()
      << ", Delta(-1) = " << verdict.alexander.eval(-1).get_str() << " = "
      << factorization_text(factorize(abs(verdict.alexander.eval(-1)))) << "\n";
    t << "  double-cover homology: " << verdict.homology.to_string() << " (order "
      << verdict.homology.order().get_str() << ")\n";
    t << "  theorem-1.2 gate: " << gate_text(verdict.gate_witnesses) << "\n";
    if (verdict.algebraic) {
        t << "  algebraic order (theorem-4.3): " << to_string(verdict.algebraic->order);
        if (!verdict.algebraic->witnesses.empty()) {
            t << ", witnesses:";
            for (const auto& w : verdict.algebraic->witnesses)
                t << " p=" << w.p << " (exponent " << w.exponent << ")";
        }
        t << "\n";
    } else {
        t << "  algebraic order: indeterminate (Alexander polynomial is not quadratic)\n";
    }
    t << "  verdict: " << verdict.status;
    if (verdict.status == "unresolved")
        t << " (no obstruction fired; the toolkit never asserts finite order)";
    t << "\n";
    return {std::move(j), t.str()};
}

namespace {

// Corollary 4.4 clause selector for the table and single report.
std::string twisted_clause(const mpz_class& a, const AlgebraicClassification& c) {
    if (a == 0) return "unknot-convention";
    if (a < 0) return "corollary-4.4(a)";
    if (c.order == AlgebraicOrder::Slice) return "corollary-4.4(b)";
    if (c.order == AlgebraicOrder::Order2) return "corollary-4.4(c)";
    return "corollary-4.4(d)";
}

Json double_entry(const mpz_class& a, std::vector<FiredRule>* rules_out) {
    const AlgebraicClassification cls = classify_twisted_double(a);
    const mpz_class det = 4 * a + 1;
    const FiniteAbelianGroup homology =
        det == 1 || det == -1
            ? FiniteAbelianGroup{}
            : FiniteAbelianGroup::from_invariant_factors({abs(det)});
    const auto gate = theorem_1_2_gate(homology);
    const std::string clause = twisted_clause(a, cls);

    std::vector<FiredRule> rules;
    rules.push_back({clause, "a = " + a.get_str() + ", 4a+1 = " + det.get_str()});
    bool infinite = cls.order == AlgebraicOrder::Infinite;
    if (cls.order == AlgebraicOrder::Order4) {
        rules.push_back({"corollary-4.5", "order 4 in the algebraic concordance group"});
        infinite = true;
    }
    if (!gate.empty()) {
        rules.push_back({"theorem-1.2", gate_text(gate)});
        infinite = true;
    }

    Json j;
    j["a"] = a.get_str();
    j["determinant"] = det.get_str(); // 4a+1
    j["determinant_factorization"] = factorization_json(factorize(abs(det)));
    j["homology"] = group_json(homology);
    j["clause"] = clause;
    j["classification"] = classification_json(cls);
    j["gate_witnesses"] = gate_json(gate);
    j["infinite_order"] = infinite;
    std::string status = infinite               ? "infinite-order"
                         : cls.order == AlgebraicOrder::Slice ? "algebraically-slice"
                                                              : "unresolved";
    j["status"] = status;
    if (a == 2)
        j["note"] = "the 2-twisted double of the unknot is slice";
    else if (a == 0)
        j["note"] = "the 0-twisted double is the unknot";
    j["rules"] = rules_json(rules);
    if (rules_out) *rules_out = std::move(rules);
    return j;
}

std::string double_text_line(const Json& e) {
    std::ostringstream t;
    t << "a = " << e["a"].get<std::string>() << ": 4a+1 = " << e["determinant"].get<std::string>()
      << ", " << e["clause"].get<std::string>() << ", algebraic "
      << e["classification"]["order"].get<std::string>() << ", " << e["status"].get<std::string>();
    return t.str();
}

} // namespace

Report cmd_double(const mpz_class& a) {
    Json j = header("double");
    j["input"] = Json{{"a", a.get_str()}};
    const SeifertMatrix v = twisted_double_seifert(a);
    j["seifert"] = seifert_to_json(v);
    j["alexander"] = alexander_json(alexander_polynomial(v));
    Json entry = double_entry(a, nullptr);
    for (auto& [key, value] : entry.items()) j[key] = value;

    std::ostringstream t;
    t << "double\n  " << double_text_line(entry) << "\n";
    if (entry.contains("note")) t << "  note: " << entry["note"].get<std::string>() << "\n";
    return {std::move(j), t.str()};
}

Report cmd_double_table(long from, long to) {
    if (from > to) throw InputError("table range is empty");
    Json j = header("double-table");
    j["input"] = Json{{"from", from}, {"to", to}};
    Json rows = Json::array();
    std::ostringstream t;
    t << "double --table\n";
    for (long a = from; a <= to; ++a) {
        Json e = double_entry(mpz_class(a), nullptr);
        t << "  " << double_text_line(e) << "\n";
        rows.push_back(std::move(e));
    }
    j["rows"] = std::move(rows);
    return {std::move(j), t.str()};
}

Report cmd_twobridge(const mpz_class& p, const mpz_class& q) {
    const TwoBridgeKnot knot = two_bridge(p, q);
    const auto gate = theorem_1_2_gate(knot.homology);
    const auto cor42 = corollary_4_2(p);

    Json j = header("twobridge");
    j["input"] = Json{{"p", p.get_str()}, {"q", q.get_str()}};
    j["homology"] = group_json(knot.homology);
    j["linking_value"] = knot.linking_value.get_str();
    j["determinant_factorization"] = factorization_json(factorize(p));
    std::vector<FiredRule> rules;
    if (cor42)
        rules.push_back({"corollary-4.2", "p = " + std::to_string(cor42->p) + " has odd exponent " +
                                              std::to_string(cor42->exponent)});
    if (!gate.empty()) rules.push_back({"theorem-1.2", gate_text(gate)});
    const bool infinite = !rules.empty();
    j["gate_witnesses"] = gate_json(gate);
    j["rules"] = rules_json(rules);
    j["infinite_order"] = infinite;
    j["status"] = infinite ? "infinite-order" : "unresolved";

    std::ostringstream t;
    t << "twobridge K(" << p.get_str() << ", " << q.get_str() << ")\n";
    t << "  homology: " << knot.homology.to_string() << ", linking value "
      << knot.linking_value.get_str() << "\n";
    t << "  corollary-4.2: "
      << (cor42 ? "witness p = " + std::to_string(cor42->p) : "no witness") << "\n";
    t << "  theorem-1.2 gate: " << gate_text(gate) << "\n";
    t << "  verdict: " << (infinite ? "infinite-order" : "unresolved") << "\n";
    return {std::move(j), t.str()};
}

Report cmd_metab(const MetabParams& params) {
    const unsigned d = 4 * params.k;
    const PrimaryForm form = params.eps.empty()
                                 ? PrimaryForm::alternating(params.p, params.n, d)
                                 : PrimaryForm(params.p, params.n, d, params.eps);
    EnumerationOptions opts;
    opts.budget_override = params.budget_override;
    opts.threads = params.threads;
    EnumerationStats stats;
    const auto metabolizers = enumerate_metabolizers(form, opts, &stats);

    Json j = header("metab");
    Json eps = Json::array();
    for (std::uint64_t e : form.eps) eps.push_back(e);
    j["input"] = Json{{"p", params.p}, {"n", params.n},     {"k", params.k},
                      {"d", d},        {"eps", std::move(eps)}, {"budget_override", params.budget_override}};
    j["enumeration"] = Json{{"element_space", stats.element_space.get_str()},
                            {"candidates", stats.candidates_total.get_str()},
                            {"scanned", stats.candidates_scanned},
                            {"complete", stats.complete},
                            {"count", metabolizers.size()}};

    std::ostringstream t;
    t << "metab p=" << params.p << " n=" << params.n << " k=" << params.k << " (d=" << d << ")\n";
    t << "  element space " << stats.element_space.get_str() << ", candidates "
      << stats.candidates_total.get_str() << ", metabolizers found " << metabolizers.size()
      << "\n";

    Json list = Json::array();
    std::size_t structure_failures = 0;
    std::size_t index = 0;
    for (const auto& nf : metabolizers) {
        Json entry = nf_json(nf, index);
        if (params.check_structure || params.run_replay) {
            const StructureReport rep = verify_structure(nf, form);
            if (params.check_structure) entry["structure"] = structure_json(rep);
            if (!rep.all_pass()) ++structure_failures;
        }
        if (params.run_replay) entry["certificate"] = certificate_json(replay(form, nf, index));
        list.push_back(std::move(entry));
        ++index;
    }
    j["metabolizers"] = std::move(list);
    if (params.check_structure) {
        j["structure_failures"] = structure_failures;
        t << "  structure checks: "
          << (structure_failures == 0 ? "all pass"
                                      : std::to_string(structure_failures) + " FAILED")
          << "\n";
    }
    if (params.run_replay)
        t << "  replay: " << metabolizers.size() << " certificate(s), all resultants nonzero\n";
    j["status"] = "ok";
    return {std::move(j), t.str()};
}

} // namespace knotcord
