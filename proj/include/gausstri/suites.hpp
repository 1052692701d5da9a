#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gausstri/acuteness.hpp"
#include "gausstri/moments.hpp"

namespace gtri::suites {

/// One row of a verification report.
struct ReportEntry {
    std::string name;
    std::string family;
    std::optional<double> closed_form;
    std::optional<numerics::QuadResult> quadrature;
    std::optional<mc::Estimate> mc;
    double tolerance = 0.0;
    bool pass = false;
    /// Checks of conjectured results; never gate the exit status.
    bool conjecture_flag = false;
    std::string notes;
    /// Named auxiliary numbers (p-values, references, maximum deviations).
    std::map<std::string, double> details;
    /// Named yes/no findings (table_match, table_discrepancy, in_support).
    std::map<std::string, bool> flags;
};

struct SuiteOptions {
    std::uint64_t mc_samples = 1'000'000;
    std::uint64_t gof_samples = 100'000;
    std::uint64_t seed = moments::kDefaultSeed;
    mc::McConfig mc{};
    numerics::QuadConfig quad{};
};

/// Every proven closed form checked against quadrature and Monte Carlo.
std::vector<ReportEntry> verify_suite(const SuiteOptions& opt = {});

/// The conjectured n-dimensional angle densities for n in [n_lo, n_hi]:
/// normalization, histogram goodness of fit, and predicted obtuseness
/// probabilities against the published tables and Monte Carlo.
std::vector<ReportEntry> conjecture_suite(int n_lo, int n_hi, const SuiteOptions& opt = {});

/// True when some entry without conjecture_flag failed.
bool has_gating_failure(const std::vector<ReportEntry>& entries) noexcept;

ReportEntry entry_from_moment(const moments::MomentReport& r, std::string family);

/// {"entries": [...]} with every double printed as %.17g and non-finite
/// values as null. Keys are sorted, so output is byte-stable.
std::string to_json(const std::vector<ReportEntry>& entries, int indent = 2);

/// One CSV row per entry (details omitted), header
/// name,family,closed_form,quadrature,mc,stderr,n,seed,tolerance,pass,conjecture_flag,notes.
std::string to_csv(const std::vector<ReportEntry>& entries);

}  // namespace gtri::suites
