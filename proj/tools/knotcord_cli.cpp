// Command-line front end: analyze Seifert matrices, classify twisted
// doubles and two-bridge knots, and run the metabolizer machinery.
//
// Exit codes: 0 success, 1 invalid input, 2 internal invariant violation,
// 3 enumeration budget exceeded.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "knotcord/report.hpp"

namespace {

void emit(const knotcord::Report& report, bool as_json) {
    if (as_json)
        std::cout << report.json.dump(2) << "\n";
    else
        std::cout << report.text;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw knotcord::InputError("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic knot concordance-order obstruction toolkit"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit the JSON report instead of text");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "full verdict from a Seifert matrix");
    std::string file, inline_doc;
    analyze->add_option("file", file, "path to a JSON document {\"seifert\": [[...], ...]}");
    analyze->add_option("--inline", inline_doc, "the JSON document itself");

    // double
    auto* dbl = app.add_subcommand("double", "classify the a-twisted double of a knot");
    long a = 0;
    bool table = false;
    long from = -10, to = 12;
    dbl->add_option("--a", a, "twisting parameter");
    dbl->add_flag("--table", table, "sweep a range and print one row per a");
    dbl->add_option("--from", from, "table start (default -10)");
    dbl->add_option("--to", to, "table end (default 12)");

    // twobridge
    auto* tb = app.add_subcommand("twobridge", "classify the two-bridge knot K(p, q)");
    long tb_p = 0, tb_q = 0;
    tb->add_option("--p", tb_p, "determinant p (odd, >= 3)")->required();
    tb->add_option("--q", tb_q, "parameter q, 0 < q < p, coprime to p")->required();

    // metab
    auto* metab = app.add_subcommand("metab", "enumerate and verify metabolizers of (Z_{p^n})^{4k}");
    knotcord::MetabParams mp;
    std::vector<long> eps;
    metab->add_option("--p", mp.p, "prime p")->required();
    metab->add_option("--n", mp.n, "exponent n of the cyclic order p^n")->required();
    metab->add_option("--k", mp.k, "quarter-rank k (d = 4k)")->required();
    metab->add_option("--eps", eps, "diagonal units, comma separated (default 1,-1,...)")
        ->delimiter(',');
    metab->add_flag("--verify-structure", mp.check_structure, "run the structure checks");
    metab->add_flag("--replay", mp.run_replay, "emit a contradiction certificate per metabolizer");
    metab->add_flag("--budget-override", mp.budget_override, "ignore the enumeration budget");
    metab->add_option("--threads", mp.threads, "worker threads (0 = all)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) {
            if (file.empty() == inline_doc.empty())
                throw knotcord::InputError("analyze needs exactly one of: a file path, --inline");
            const std::string doc = file.empty() ? inline_doc : read_file(file);
            emit(knotcord::cmd_analyze(knotcord::parse_seifert_document(doc)), as_json);
        } else if (dbl->parsed()) {
            if (table)
                emit(knotcord::cmd_double_table(from, to), as_json);
            else
                emit(knotcord::cmd_double(mpz_class(a)), as_json);
        } else if (tb->parsed()) {
            emit(knotcord::cmd_twobridge(mpz_class(tb_p), mpz_class(tb_q)), as_json);
        } else if (metab->parsed()) {
            mp.eps = eps;
            emit(knotcord::cmd_metab(mp), as_json);
        }
    } catch (const knotcord::BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << " (" << e.bound << ")\n";
        return 3;
    } catch (const knotcord::InputError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 1;
    } catch (const knotcord::InternalError& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
