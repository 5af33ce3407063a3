#pragma once

// Named verification suites over exact identities. Each suite runs a fixed,
// seeded list of cases and reports one result per case; ordering is
// deterministic. The CLI `verify` command and the acceptance runner are both
// thin wrappers over run_suite.
//
// Suites: hopf-axioms, primitives, coalgebra-maps, graded-iso, filtration,
// f-homomorphisms, conjugation, g-law, tower-consistency,
// decompose-roundtrip, all.

#include "hq/element.hpp"
#include "hq/group.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace hq {

struct CaseResult {
    std::string id;
    bool pass = false;
    std::string detail;
};

struct SuiteResult {
    std::string name;
    std::vector<CaseResult> cases;

    bool pass() const;
    int failed() const;
};

struct VerifyOptions {
    Window window{-4, 4, 6};
    std::uint64_t seed = 12345;
    /// Observes every Element a suite produces (used to drive the CLI
    /// round-trip criterion); may be empty.
    std::function<void(const Element&)> element_sink;
};

const std::vector<std::string>& suite_names(); // excludes "all"

/// Runs one suite (or "all"); throws std::invalid_argument on unknown names.
SuiteResult run_suite(const std::string& name, const VerifyOptions& opts);

// Deterministic random generators shared by the suites and the test binaries.
Scalar random_beta_value(std::mt19937_64& rng);  // may be zero
Scalar random_alpha_value(std::mt19937_64& rng); // nonzero monomial in q
BetaSeq random_beta_seq(std::mt19937_64& rng, int lo, int hi);
AlphaSeq random_alpha_seq(std::mt19937_64& rng, int lo, int hi);
BetaTower random_tower(std::mt19937_64& rng, int depth, int lo, int hi);

} // namespace hq
