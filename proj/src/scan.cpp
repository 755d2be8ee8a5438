#include "qplab/scan.hpp"

#include <atomic>
#include <cstdio>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "qplab/errors.hpp"
#include "qplab/family.hpp"

namespace qplab::cli {

namespace {

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

ScanFactorCells factor_cells(const family::Genus4Curve& curve, family::Factor which,
                             const ScanOptions& opts) {
    ScanFactorCells cells;
    const elliptic::Curve e = family::elliptic_quotient(curve, which);  // may throw SingularQuotient
    cells.j = e.j_invariant().str();
    const elliptic::Point pt = family::xi_projection(curve, which);
    cells.torsion = elliptic::is_torsion(e, pt).is_torsion;
    const auto h = elliptic::canonical_height(e, pt, {opts.height_iters, opts.height_tol});
    cells.h = h.value;
    cells.h_err = h.error_bound;
    return cells;
}

std::optional<ScanRow> scan_tuple(long a, long b, long c, long d, const ScanOptions& opts) {
    const family::Params params{Rational(a), Rational(b), Rational(c), Rational(d)};
    try {
        family::validate(params);
    } catch (const DegenerateParameters&) {
        return std::nullopt;
    }
    const family::Genus4Curve curve = family::make_curve(params);

    ScanRow row;
    row.a = a; row.b = b; row.c = c; row.d = d;
    const auto label = family::classify(curve.equation);
    row.lambda = label ? label->lambda : 0;
    row.mu = label ? label->mu : 0;
    row.p0 = curve.quot.p0.str();
    row.q0 = curve.quot.q0.str();
    row.p1 = curve.quot.p1.str();
    row.q1 = curve.quot.q1.str();
    try {
        row.f0 = factor_cells(curve, family::Factor::E0, opts);
    } catch (const SingularQuotient&) {
        row.degenerate = true;
    }
    try {
        row.f1 = factor_cells(curve, family::Factor::E1, opts);
    } catch (const SingularQuotient&) {
        row.degenerate = true;
    }
    return row;
}

}  // namespace

ScanResult run_scan(const ScanOptions& opts) {
    long box = 1;
    for (const auto& [lo, hi] : opts.ranges) {
        if (hi < lo) throw ParseError("empty range: hi < lo");
        const long width = hi - lo + 1;
        if (width > opts.cap || box > opts.cap / width)
            throw ScanCapExceeded("box size exceeds the cap of " + std::to_string(opts.cap));
        box *= width;
    }

    std::vector<std::array<long, 4>> tuples;
    tuples.reserve(static_cast<size_t>(box));
    for (long a = opts.ranges[0].first; a <= opts.ranges[0].second; ++a)
        for (long b = opts.ranges[1].first; b <= opts.ranges[1].second; ++b)
            for (long c = opts.ranges[2].first; c <= opts.ranges[2].second; ++c)
                for (long d = opts.ranges[3].first; d <= opts.ranges[3].second; ++d)
                    tuples.push_back({a, b, c, d});

    std::vector<std::optional<ScanRow>> cells(tuples.size());
    std::atomic<size_t> next{0};
    const auto worker = [&] {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= tuples.size()) break;
            cells[i] = scan_tuple(tuples[i][0], tuples[i][1], tuples[i][2], tuples[i][3], opts);
        }
    };

    const int threads = std::max(1, opts.parallel);
    std::vector<std::thread> pool;
    for (int k = 1; k < threads; ++k) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    // deterministic merge in enumeration order
    ScanResult result;
    result.box_size = box;
    for (auto& cell : cells) {
        if (cell.has_value())
            result.rows.push_back(std::move(*cell));
        else
            ++result.skipped;
    }
    return result;
}

std::string scan_csv(const ScanResult& result) {
    std::ostringstream os;
    os << "a,b,c,d,lambda,mu,p0,q0,p1,q1,j0,j1,h0,h0_err,h1,h1_err,tors0,tors1,degenerate\n";
    for (const auto& r : result.rows) {
        os << r.a << ',' << r.b << ',' << r.c << ',' << r.d << ',' << r.lambda << ',' << r.mu << ','
           << r.p0 << ',' << r.q0 << ',' << r.p1 << ',' << r.q1 << ',' << r.f0.j << ',' << r.f1.j << ',';
        const auto opt_double = [&](const std::optional<double>& v) {
            if (v.has_value()) os << fmt_double(*v);
            os << ',';
        };
        opt_double(r.f0.h);
        opt_double(r.f0.h_err);
        opt_double(r.f1.h);
        opt_double(r.f1.h_err);
        const auto opt_bool = [&](const std::optional<bool>& v) {
            if (v.has_value()) os << (*v ? "true" : "false");
            os << ',';
        };
        opt_bool(r.f0.torsion);
        opt_bool(r.f1.torsion);
        os << (r.degenerate ? "true" : "false") << '\n';
    }
    return os.str();
}

std::string scan_json(const ScanResult& result, int indent) {
    using nlohmann::json;
    json rows = json::array();
    for (const auto& r : result.rows) {
        const auto factor = [](const ScanFactorCells& f) {
            json j{{"j", f.j.empty() ? json(nullptr) : json(f.j)},
                   {"h", f.h.has_value() ? json(*f.h) : json(nullptr)},
                   {"h_err", f.h_err.has_value() ? json(*f.h_err) : json(nullptr)},
                   {"torsion", f.torsion.has_value() ? json(*f.torsion) : json(nullptr)}};
            return j;
        };
        rows.push_back(json{{"a", r.a}, {"b", r.b}, {"c", r.c}, {"d", r.d},
                            {"lambda", r.lambda}, {"mu", r.mu},
                            {"p0", r.p0}, {"q0", r.q0}, {"p1", r.p1}, {"q1", r.q1},
                            {"e0", factor(r.f0)}, {"e1", factor(r.f1)},
                            {"degenerate", r.degenerate}});
    }
    const json j{{"rows", rows}, {"box_size", result.box_size}, {"skipped_degenerate", result.skipped}};
    return j.dump(indent) + "\n";
}

}  // namespace qplab::cli
