// Acceptance harness: eleven desk-scale criteria, one pass/fail line each.
// argv[1] is the path of the CLI binary (used by the determinism criterion).

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ilo/suites.hpp"

using namespace ilo;

namespace {

int g_failures = 0;
std::string g_cli_path;

void report(int number, const std::string& name, bool pass, const std::string& detail) {
    std::printf("[%2d] %-24s %s  (%s)\n", number, name.c_str(), pass ? "PASS" : "FAIL",
                detail.c_str());
    if (!pass) ++g_failures;
}

bool suites_pass(std::initializer_list<SuiteResult> results, long long& checks,
                 std::string& why) {
    checks = 0;
    for (const SuiteResult& r : results) {
        checks += r.checks;
        if (!r.pass) {
            why = r.name + ": " + r.counterexample.dump();
            return false;
        }
    }
    return true;
}

std::string run_cli(const std::string& args, int& exit_code) {
    std::string out_path = "acceptance_cli_out.tmp";
    std::string cmd = "\"" + g_cli_path + "\" " + args + " > " + out_path + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    exit_code = status == -1 ? -1 : WEXITSTATUS(status);
    std::ifstream in(out_path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::remove(out_path.c_str());
    return buf.str();
}

// 1. the four associativity conditions agree and the three commutativity
//    conditions agree on every labeled ILO model of order <= 4
void criterion_1() {
    auto t0 = std::chrono::steady_clock::now();
    SuiteScope sc;
    sc.max_order = 4;
    long long checks = 0;
    std::string why;
    bool pass = suites_pass({suite_prop_assos(sc), suite_prop_commut(sc)}, checks, why);
    long long expected = 2 * (1 + 4 + 216 + 331776);
    if (pass && checks != expected) {
        pass = false;
        why = "model count " + std::to_string(checks) + " != " + std::to_string(expected);
    }
    auto secs = std::chrono::duration_cast<std::chrono::seconds>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
    if (pass && secs > 300) {
        pass = false;
        why = "runtime " + std::to_string(secs) + "s over budget";
    }
    report(1, "prop-equivalences", pass,
           pass ? std::to_string(checks) + " checks in " + std::to_string(secs) + "s" : why);
}

// 2. Slominski identities + finite collapse on every model of order <= 4
void criterion_2() {
    SuiteScope sc;
    sc.max_order = 4;
    long long checks = 0;
    std::string why;
    bool pass = suites_pass({suite_slominski_identities(sc)}, checks, why);
    report(2, "slominski-identities", pass,
           pass ? std::to_string(checks) + " checks" : why);
}

// 3. catalog groups classify as hypersubtractions; symmetric iff abelian,
//    involutive iff exponent two
void criterion_3() {
    SuiteScope sc;
    sc.group_order = 16;
    long long checks = 0;
    std::string why;
    bool pass = suites_pass({suite_group_inclusion(sc)}, checks, why);
    report(3, "group-inclusion", pass, pass ? std::to_string(checks) + " checks" : why);
}

// 4. every split epi among catalog groups of order <= 12 carries the group
//    hyperindex; rho inverts via s(y)k; naturality over all morphisms
void criterion_4() {
    SuiteScope sc;
    sc.epi_group_order = 12;
    long long checks = 0;
    std::string why;
    bool pass = suites_pass({suite_index_machinery(sc), suite_protomodularity_lemma(sc)},
                            checks, why);
    report(4, "index-machinery", pass, pass ? std::to_string(checks) + " checks" : why);
}

// 5. the induced self-structure: groups recover from_group, hypersubtractions
//    recover themselves, the scaled Z3 fixture stays index-only
void criterion_5() {
    SuiteScope sc;
    sc.max_order = 4;
    sc.epi_group_order = 12;
    long long checks = 0;
    std::string why;
    bool pass = suites_pass({suite_factorization_theorem(sc)}, checks, why);
    report(5, "factorization-theorem", pass, pass ? std::to_string(checks) + " checks" : why);
}

// 6. jointly-strongly-epic closures on every catalog pullback (<= 36) with an
//    acupuncturing right leg; trivial x trivial fails
void criterion_6() {
    SuiteScope sc;
    long long checks = 0;
    std::string why;
    bool pass = suites_pass({suite_theta_maltsev(sc)}, checks, why);
    report(6, "theta-maltsev", pass, pass ? std::to_string(checks) + " checks" : why);
}

// 7. reflexive subprequandle relations on bases of order <= 4
void criterion_7() {
    SuiteScope sc;
    sc.max_order = 4;
    long long checks = 0;
    std::string why;
    bool pass = suites_pass({suite_acupuncturing_relations(sc)}, checks, why);
    report(7, "acupuncturing-relations", pass,
           pass ? std::to_string(checks) + " checks" : why);
}

// 8. the Mal'tsev term on every latin prequandle of order <= 5, the R3 oracle
//    table, and naturality on autonomous latin fixtures
void criterion_8() {
    SuiteScope sc;
    sc.latin_order = 5;
    long long checks = 0;
    std::string why;
    bool pass = suites_pass({suite_maltsev_term(sc), suite_prop_auto(sc)}, checks, why);
    report(8, "maltsev-term", pass, pass ? std::to_string(checks) + " checks" : why);
}

// 9. internal Slominski operations and internal prequandles over Zn (n <= 12)
//    decompose and round-trip
void criterion_9() {
    SuiteScope sc;
    sc.internal_modulus = 12;
    sc.max_order = 4;
    long long checks = 0;
    std::string why;
    bool pass =
        suites_pass({suite_internal_abelian(sc), suite_umag_hst_abelian(sc)}, checks, why);
    report(9, "internal-abelian", pass, pass ? std::to_string(checks) + " checks" : why);
}

// 10. braces: trivial and opposite braces on catalog groups <= 12; on the S3
//     sign epi the two hyperindexes validate and differ
void criterion_10() {
    SuiteScope sc;
    sc.epi_group_order = 12;
    long long checks = 0;
    std::string why;
    bool pass = suites_pass({suite_braces(sc)}, checks, why);
    if (pass) {
        FiniteGroup s3 = symmetric3_group(), z2 = cyclic_group(2);
        std::vector<int> sign(6);
        for (int x = 0; x < 6; ++x) sign[x] = (x == 1 || x == 2 || x == 5) ? 1 : 0;
        std::vector<int> sec{0, permutation_index(s3, {1, 0, 2})};
        BraceSplitEpi e =
            make_brace_split_epi(opposite_brace(s3), opposite_brace(z2), sign, sec);
        auto [ws, wc] = brace_indexes(e);
        pass = ws.is_hyperindex && wc.is_hyperindex && ws.gamma_carrier != wc.gamma_carrier;
        if (!pass) why = "S3 sign-epi witnesses did not separate";
        checks += 1;
    }
    report(10, "braces", pass, pass ? std::to_string(checks) + " checks" : why);
}

// 11. two runs of check-theorems --max-order 3 produce identical bytes
void criterion_11() {
    int code1 = 0, code2 = 0;
    std::string out1 = run_cli("check-theorems --max-order 3", code1);
    std::string out2 = run_cli("check-theorems --max-order 3", code2);
    bool pass = code1 == 0 && code2 == 0 && !out1.empty() && out1 == out2;
    std::string detail;
    if (pass)
        detail = std::to_string(out1.size()) + " identical bytes, exit 0";
    else
        detail = "exit codes " + std::to_string(code1) + "/" + std::to_string(code2) +
                 (out1 == out2 ? "" : ", outputs differ");
    report(11, "determinism", pass, detail);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: acceptance <path-to-cli>\n");
        return 2;
    }
    g_cli_path = argv[1];
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    if (g_failures == 0) {
        std::printf("acceptance: all 11 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criteria FAILED\n", g_failures);
    return 1;
}
