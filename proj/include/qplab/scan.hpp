#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qplab::cli {

struct ScanOptions {
    std::array<std::pair<long, long>, 4> ranges;  // inclusive [lo, hi] per parameter
    int parallel = 1;
    int height_iters = 8;  // scan-grade height settings
    double height_tol = 1e-6;
    long cap = 1'000'000;  // maximal box size
};

// Cells of one elliptic factor; empty when that factor is singular.
struct ScanFactorCells {
    std::string j;
    std::optional<double> h;
    std::optional<double> h_err;
    std::optional<bool> torsion;
    friend bool operator==(const ScanFactorCells&, const ScanFactorCells&) = default;
};

struct ScanRow {
    long a = 0, b = 0, c = 0, d = 0;
    int lambda = 1, mu = 1;
    std::string p0, q0, p1, q1;
    ScanFactorCells f0, f1;
    bool degenerate = false;  // some elliptic factor is singular
    friend bool operator==(const ScanRow&, const ScanRow&) = default;
};

struct ScanResult {
    std::vector<ScanRow> rows;  // lexicographic in (a, b, c, d)
    long box_size = 0;
    long skipped = 0;  // tuples rejected by the parameter preconditions
};

// Enumerates the integer box in lexicographic order, skipping (and counting)
// tuples with degenerate parameters. Work items run on `parallel` threads;
// the output order is independent of the degree of parallelism.
// Throws ScanCapExceeded when the box is larger than opts.cap.
ScanResult run_scan(const ScanOptions& opts);

// Fixed column schema:
// a,b,c,d,lambda,mu,p0,q0,p1,q1,j0,j1,h0,h0_err,h1,h1_err,tors0,tors1,degenerate
std::string scan_csv(const ScanResult& result);

std::string scan_json(const ScanResult& result, int indent = 2);

}  // namespace qplab::cli
