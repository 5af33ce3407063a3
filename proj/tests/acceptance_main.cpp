// Acceptance suite: runs every acceptance criterion at its stated tolerance
// (exact equality over the exact field throughout) and prints one pass/fail
// line per criterion. Exits nonzero if any criterion fails.
//
// Usage: acceptance [--hq-bin <path-to-cli>] [--seed <n>]

#include "hq/parser.hpp"
#include "hq/qcombinatorics.hpp"
#include "hq/verify.hpp"

#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace hq;

namespace {

struct RoundTripStats {
    long long checked = 0;
    long long failed = 0;
};

RoundTripStats g_roundtrip;

// Every element a criterion produces is rendered, reparsed and compared on
// the spot (criterion 11 aggregates the counts).
void roundtrip_sink(const Element& e) {
    ++g_roundtrip.checked;
    try {
        if (!(parse_element(render_element(e)) == e)) ++g_roundtrip.failed;
    } catch (const std::exception&) {
        ++g_roundtrip.failed;
    }
}

VerifyOptions options_with_sink(std::uint64_t seed) {
    VerifyOptions opts;
    opts.seed = seed;
    opts.element_sink = roundtrip_sink;
    return opts;
}

bool run_suite_checked(const std::string& name, const VerifyOptions& opts, std::string& detail) {
    SuiteResult r = run_suite(name, opts);
    if (!r.pass()) {
        for (const auto& c : r.cases)
            if (!c.pass) {
                detail = name + ": " + std::to_string(r.failed()) + " failing case(s), first " +
                         c.id + (c.detail.empty() ? "" : " — " + c.detail);
                break;
            }
    }
    return r.pass();
}

long long int_binom(int n, int i) {
    if (i < 0 || i > n) return 0;
    long long r = 1;
    for (int j = 1; j <= i; ++j) r = r * (n - j + 1) / j;
    return r;
}

struct Criterion {
    int number;
    std::string name;
    double budget_seconds; // 0 = no stated budget
    std::function<bool(std::string&)> run;
};

} // namespace

int main(int argc, char** argv) {
    std::string hq_bin;
    std::uint64_t seed = 12345;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--hq-bin" && i + 1 < argc)
            hq_bin = argv[++i];
        else if (a == "--seed" && i + 1 < argc)
            seed = std::stoull(argv[++i]);
    }

    std::vector<Criterion> criteria;

    criteria.push_back({1, "hopf-axioms (symbolic, numeric q=2, numeric q=1)", 10.0,
                        [&](std::string& detail) {
                            for (const auto& cfg : {symbolic_field(), numeric_field(BigRat(2)),
                                                    numeric_field(BigRat(1))}) {
                                ScopedField f(cfg);
                                if (!run_suite_checked("hopf-axioms", options_with_sink(seed), detail))
                                    return false;
                            }
                            return true;
                        }});

    criteria.push_back({2, "q-combinatorics (Pascal vs factorial quotient, q=1 binomials)", 0.0,
                        [&](std::string& detail) {
                            for (const auto& cfg : {symbolic_field(), numeric_field(BigRat(2))}) {
                                ScopedField f(cfg);
                                for (int n = 0; n <= 12; ++n)
                                    for (int i = 0; i <= n; ++i)
                                        if (!(q_binom(n, i) ==
                                              q_factorial(n) / (q_factorial(i) * q_factorial(n - i)))) {
                                            detail = "quotient mismatch at n=" + std::to_string(n) +
                                                     " i=" + std::to_string(i);
                                            return false;
                                        }
                            }
                            ScopedField f(numeric_field(BigRat(1)));
                            for (int n = 0; n <= 12; ++n)
                                for (int i = 0; i <= n; ++i)
                                    if (!(q_binom(n, i) == Scalar::from_int(int_binom(n, i)))) {
                                        detail = "q=1 binomial mismatch at n=" + std::to_string(n) +
                                                 " i=" + std::to_string(i);
                                        return false;
                                    }
                            return true;
                        }});

    auto suite_criterion = [&](int number, const std::string& label, const std::string& suites,
                               double budget) {
        criteria.push_back({number, label, budget, [&, suites](std::string& detail) {
                                ScopedField f(symbolic_field());
                                std::istringstream names(suites);
                                std::string name;
                                while (names >> name)
                                    if (!run_suite_checked(name, options_with_sink(seed), detail))
                                        return false;
                                return true;
                            }});
    };

    suite_criterion(3, "primitive spaces on window [-3,4] x 5", "primitives", 5.0);
    suite_criterion(4, "coalgebra-map certification incl. corrupted map", "coalgebra-maps", 30.0);
    suite_criterion(5, "graded isomorphism and semidirect law", "graded-iso", 0.0);
    suite_criterion(6, "filtration and leading-coefficient multiplicativity", "filtration", 0.0);
    suite_criterion(7, "degree defects add under composition (s = 1,2,3)", "f-homomorphisms", 0.0);
    suite_criterion(8, "tower law: recursion vs closed forms, associativity, truncation",
                    "g-law tower-consistency", 60.0);
    suite_criterion(9, "decompose round-trip (depth <= 5)", "decompose-roundtrip", 60.0);
    suite_criterion(10, "conjugation closed forms (s = 1,2,3)", "conjugation", 0.0);

    criteria.push_back(
        {11, "CLI round-trip over all generated elements; `hq verify all` exits 0", 0.0,
         [&](std::string& detail) {
             if (g_roundtrip.checked == 0 || g_roundtrip.failed != 0) {
                 detail = std::to_string(g_roundtrip.failed) + " of " +
                          std::to_string(g_roundtrip.checked) + " render/parse round-trips failed";
                 return false;
             }
             if (hq_bin.empty()) {
                 detail = "no --hq-bin given";
                 return false;
             }
             std::string cmd = hq_bin + " verify all > /dev/null 2>&1";
             int status = std::system(cmd.c_str());
             if (!(WIFEXITED(status) && WEXITSTATUS(status) == 0)) {
                 detail = "`hq verify all` exited nonzero";
                 return false;
             }
             detail = std::to_string(g_roundtrip.checked) + " elements round-tripped";
             return true;
         }});

    bool all_pass = true;
    for (auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (ok && c.budget_seconds > 0 && secs > c.budget_seconds) {
            ok = false;
            detail = "exceeded the stated runtime budget of " +
                     std::to_string(c.budget_seconds) + " s";
        }
        all_pass = all_pass && ok;
        std::cout << "criterion " << std::setw(2) << c.number << " [" << (ok ? "PASS" : "FAIL")
                  << "] " << c.name << " (" << std::fixed << std::setprecision(2) << secs << " s)";
        if (!detail.empty()) std::cout << " — " << detail;
        std::cout << "\n";
    }
    std::cout << (all_pass ? "ACCEPTANCE: all criteria passed" : "ACCEPTANCE: FAILURES PRESENT")
              << "\n";
    return all_pass ? 0 : 1;
}
