#pragma once

// End-to-end runs shared by the CLI, the acceptance suite and the Python
// module: fixture regeneration and guarantee-range sweeps.

#include <optional>
#include <string>
#include <vector>

#include "mdsconv/constructions.hpp"
#include "mdsconv/convcode.hpp"
#include "mdsconv/fixtures.hpp"
#include "mdsconv/json_io.hpp"

namespace mdsconv {

/// Outcome of a claimed verdict against the computed one.
struct ClaimCheck {
    std::string name;  // "mds", "smds", "mdp"
    bool claimed = false;
    Verdict verdict = Verdict::Inconclusive;
    bool ok() const { return !claimed || verdict == Verdict::Confirmed; }
};

struct ExampleCheck {
    int id = 0;
    std::string label;
    bool parity_match = false;
    std::vector<std::string> diff;  // one line per differing entry or shape
    ConvReport report;
    BlockSplit split;
    std::size_t dfree_expected = 0;
    /// lower == upper == expected == Singleton bound.
    bool dfree_exact = false;
    /// Block-split interval pinches at the expected value.
    bool split_pinches = false;
    /// Smallest j with d_j^c equal to the bound, if any was computed.
    std::optional<std::size_t> cd_route_j;
    /// Both routes bracket the same value: the split interval contains the
    /// certified free distance and no column distance exceeds it.
    bool routes_agree = false;
    std::vector<ClaimCheck> claims;

    bool ok() const;
};

ExampleCheck check_example(const ExampleFixture& fx, const ClassifyOptions& options = {});

/// Verdicts of the report that contradict the expected flags.
bool any_refuted(const ConvReport& r, const ExpectedFlags& e);
/// Expected flags left Inconclusive.
bool any_inconclusive(const ConvReport& r, const ExpectedFlags& e);

struct SweepRow {
    FamilySpec spec;
    ExpectedFlags expected;
    ConvReport report;
    bool minimal = false;       // row reduced and basic
    bool degree_ok = false;     // row-degree sum equals the family's degree
    bool params_ok = false;     // (n, k, delta) equals the family's formula
    double ms = 0;
};

struct SweepOptions {
    std::vector<unsigned> qs;
    std::vector<Family> families;
    ClassifyOptions classify;
    /// Rows evaluated concurrently; output order is fixed regardless.
    unsigned jobs = 1;
};

/// Rows sorted by (q, family, n, k, delta).
std::vector<SweepRow> run_sweep(const SweepOptions& options);

/// Header family,q,n,k,delta,d0c,...,d{J}c,dfree_lo,dfree_hi,mds,smds,mdp,ms_elapsed
/// where J is the largest j computed in any row; missing cells are empty.
std::string sweep_csv(const std::vector<SweepRow>& rows, bool timing = true);
Json sweep_json(const std::vector<SweepRow>& rows, bool timing = true);

}  // namespace mdsconv
