#ifndef SWAPPOLY_VERIFY_HPP
#define SWAPPOLY_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "swappoly/ncpoly.hpp"
#include "swappoly/pattern.hpp"

namespace swappoly {

// One asserted quantity with its provenance tag.
struct Expected {
    std::string value;
    std::string provenance; // "PAPER" | "TRIVIAL" | "DERIVED"
};

// Machine-readable check result. status "pass" requires exact equality of
// every asserted quantity; "finding" is reserved for informational
// comparisons against printed constants.
struct CheckReport {
    std::string check;  // stable id
    std::string anchor; // stable identity anchor token
    std::string status; // "pass" | "fail" | "finding"
    std::uint64_t seed = 0;
    std::vector<std::string> points; // per-point diagnostics (sub-seed tags)
    std::vector<std::string> measured;
    std::vector<Expected> expected;
    std::string note;
};

using ReportList = std::vector<CheckReport>;

struct VerifyOptions {
    int d = 2;
    int trials = 5;
    std::uint64_t seed = 0;
    int threads = 1;
    StreamBudget budget;
};

// Swap verification: every evaluation decomposes as a*Id + b*(1,2) with
// a = 0 exactly, zero residual, and b != 0 at at least one point.
CheckReport verify_swap(const TensorPoly2& t, const std::string& id, const std::string& anchor,
                        const VerifyOptions& opt);

// Central companion: sum a_i zeta b_i is scalar-valued at random zeta and
// vanishes exactly at random traceless zeta.
CheckReport verify_central(const TensorPoly2& t, const std::string& id, const std::string& anchor,
                           const VerifyOptions& opt);

ReportList goldman_properties(const VerifyOptions& opt);
ReportList identity_suite(const VerifyOptions& opt);
ReportList weingarten_checks(const VerifyOptions& opt);
ReportList swap_catalog_checks(const VerifyOptions& opt);    // P, Q, Q', Capelli H, esss member
ReportList central_catalog_checks(const VerifyOptions& opt); // their central companions

// selector: all | swap | central | identities | goldman | weingarten
ReportList run_checks(const std::string& selector, const VerifyOptions& opt);

// id -> anchor for every registered check
std::vector<std::pair<std::string, std::string>> list_checks();

bool all_passed(const ReportList& reports); // findings do not fail

std::string to_json(const ReportList& reports);
std::string to_tsv(const ReportList& reports);
std::string to_human(const ReportList& reports);
std::string render(const ReportList& reports, const std::string& format);

} // namespace swappoly

#endif
