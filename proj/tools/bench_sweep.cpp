#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "qv/catalog.hpp"
#include "qv/positivity.hpp"
#include "qv/sweep.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct Row {
    std::string name;
    std::size_t cells;
    double serial_ms;
    double parallel_ms;
    bool identical;
};

// Warm run first so the shared binomial/kernel caches do not skew whichever
// timed run goes second; then time the serial reference and the parallel map
// on identical inputs and require identical outputs.
template <class Fn>
Row bench(const std::string& name, std::size_t n, Fn fn, int jobs) {
    (void)qv::serial_map<qv::VerificationRecord>(n, fn);
    auto t0 = Clock::now();
    auto s = qv::serial_map<qv::VerificationRecord>(n, fn);
    double sm = ms_since(t0);
    t0 = Clock::now();
    auto p = qv::parallel_map<qv::VerificationRecord>(n, fn, jobs);
    double pm = ms_since(t0);
    bool same = s.size() == p.size();
    for (std::size_t i = 0; same && i < s.size(); ++i)
        same = s[i].family == p[i].family && s[i].params == p[i].params &&
               s[i].status == p[i].status;
    return {name, n, sm, pm, same};
}

}  // namespace

int main(int argc, char** argv) {
    int jobs = argc > 1 ? std::atoi(argv[1]) : qv::default_jobs();
    std::vector<Row> rows;

    auto cells = qv::enumerate_domain(1, 4, 0, 8, 0, 8);
    rows.push_back(bench(
        "scan K=1..4 N,M=0..8", cells.size(),
        [&](std::size_t i) { return qv::check_cell(cells[i]); }, jobs));

    auto fq_grid = qv::default_grid(*qv::lookup("FQ"), false);
    rows.push_back(bench(
        "verify FQ smoke grid", fq_grid.size(),
        [&](std::size_t i) { return qv::verify("FQ", fq_grid[i], 100); }, jobs));

    auto t42_grid = qv::default_grid(*qv::lookup("B5-T42"), true);
    rows.push_back(bench(
        "verify B5-T42 full grid", t42_grid.size(),
        [&](std::size_t i) { return qv::verify("B5-T42", t42_grid[i], 100); }, jobs));

    std::cout << "jobs: " << jobs << "\n\n";
    std::cout << std::left << std::setw(26) << "workload" << std::right << std::setw(8)
              << "cells" << std::setw(12) << "serial ms" << std::setw(14) << "parallel ms"
              << std::setw(10) << "speedup" << std::setw(12) << "identical" << "\n";
    bool all_same = true;
    for (const auto& r : rows) {
        all_same = all_same && r.identical;
        std::cout << std::left << std::setw(26) << r.name << std::right << std::setw(8)
                  << r.cells << std::setw(12) << std::fixed << std::setprecision(1)
                  << r.serial_ms << std::setw(14) << r.parallel_ms << std::setw(10)
                  << std::setprecision(2)
                  << (r.parallel_ms > 0 ? r.serial_ms / r.parallel_ms : 0.0) << std::setw(12)
                  << (r.identical ? "yes" : "NO") << "\n";
    }
    return all_same ? 0 : 1;
}
