#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "qplab/elliptic.hpp"
#include "qplab/family.hpp"

namespace qplab::cli {

// Point rendered for reports: exact coordinate strings, or infinity.
struct PointReport {
    bool inf = false;
    std::string x, y;
    friend bool operator==(const PointReport&, const PointReport&) = default;
};

struct HeightReport {
    double value = 0.0;
    double error_bound = 0.0;
    int iterations = 0;
    std::string normalization;
    friend bool operator==(const HeightReport&, const HeightReport&) = default;
};

// One elliptic factor of the analysis: model, invariants, the projected
// point, its sixfold image, height and torsion verdict.
struct FactorReport {
    std::string p, q;
    std::string j;
    std::string j_decimal;  // decimal_digits significant digits
    PointReport xi;
    PointReport xi_image6;
    HeightReport height;
    bool torsion = false;
    int torsion_order = 0;
    friend bool operator==(const FactorReport&, const FactorReport&) = default;
};

struct ChecksReport {
    bool on_curve_e0 = false;
    bool on_curve_e1 = false;
    std::optional<bool> double_x_e0;  // nullopt: P is 2-torsion, formula inapplicable
    std::optional<bool> double_x_e1;
    bool cd_zero = false;
    bool ab_eq_cd = false;
    bool sextic_disc_nonzero = false;
    friend bool operator==(const ChecksReport&, const ChecksReport&) = default;
};

// Full single-curve analysis. All exact values are "num/den" strings in
// lowest terms; decimals are renderings with the stated precision and never
// feed back into computation.
struct AnalysisReport {
    std::string a, b, c, d;
    int lambda = 1, mu = 1;
    std::string A0, B0, C0, D0, A1, B1, C1, D1;
    std::string p0, q0, p1, q1;
    FactorReport e0, e1;
    ChecksReport checks;
    int decimal_digits = 15;
    friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

AnalysisReport analyze(const family::Params& params, const elliptic::HeightOptions& opts = {});

std::string to_json_string(const AnalysisReport& report, int indent = 2);
AnalysisReport analysis_from_json(const std::string& text);

// Single-row CSV rendering with the scan column schema.
std::string to_csv_string(const AnalysisReport& report);

// Certificate JSON (deterministic: keys sorted, fixed indent).
std::string cm_certificate_json();
std::string group_certificate_json();

// Reruns the built-in reference examples (coefficients, j-invariants, points,
// heights within `height_tol`, certificates); prints one PASS/FAIL line per
// comparison and WARN lines for the two documented misprints in the
// reference values. Returns true when nothing failed.
bool reproduce_paper(std::ostream& os, double height_tol = 1e-4);

// Runs the symbolic identity suite; one PASS/FAIL line per identity.
// `fault` optionally injects a defect ("sextic" or "weierstrass") to
// demonstrate failure detection.
bool verify_identities(std::ostream& os, const std::string& fault = "");

}  // namespace qplab::cli
