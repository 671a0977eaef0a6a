// Times the verification sweeps in serial and OpenMP mode and checks that
// both schedules produce identical reports.

#include <chrono>
#include <iostream>

#include "mvpoly/checks.hpp"

using namespace mvpoly;
using Clock = std::chrono::steady_clock;

namespace {

double seconds(Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

int run_pair(const char* name, const std::function<Report(SweepMode)>& job) {
    auto t0 = Clock::now();
    Report serial = job(SweepMode::Serial);
    auto t1 = Clock::now();
    Report parallel = job(SweepMode::Parallel);
    auto t2 = Clock::now();
    double ts = seconds(t0, t1), tp = seconds(t1, t2);
    bool same = serial.to_json() == parallel.to_json();
    std::cout << name << ": serial " << ts << " s, parallel " << tp << " s, speedup "
              << (tp > 0 ? ts / tp : 0.0) << "x, outputs " << (same ? "identical" : "DIFFER")
              << ", passed " << (serial.passed ? "yes" : "no") << "\n";
    return same && serial.passed ? 0 : 1;
}

} // namespace

int main() {
#ifdef _OPENMP
    std::cout << "OpenMP enabled, max threads " << omp_get_max_threads() << "\n";
#else
    std::cout << "OpenMP not available; parallel mode falls back to serial\n";
#endif
    int rc = 0;

    MVContext a3(CartanData::parse("A3"));
    rc |= run_pair("diagonals A3 (600 random polytopes)", [&](SweepMode mode) {
        SweepConfig cfg;
        cfg.samples = 600;
        cfg.bound = 5;
        cfg.seed = 99;
        cfg.mode = mode;
        return sweep_diagonals(a3, cfg);
    });

    rc |= run_pair("theorem-a A3, w = s1s2s3, bound 2", [&](SweepMode mode) {
        SweepConfig cfg;
        cfg.bound = 2;
        cfg.mode = mode;
        return sweep_theorem_a(a3, a3.group().from_word({1, 2, 3}), cfg);
    });

    MVContext a2(CartanData::parse("A2"));
    rc |= run_pair("theorem-b A2, w = w0, exhaustive bound 4", [&](SweepMode mode) {
        SweepConfig cfg;
        cfg.bound = 4;
        cfg.mode = mode;
        return sweep_theorem_b(a2, a2.group().longest(), cfg);
    });

    rc |= run_pair("theorem-b A3, w = s1s2s3, 60 samples", [&](SweepMode mode) {
        SweepConfig cfg;
        cfg.bound = 4;
        cfg.samples = 60;
        cfg.seed = 7;
        cfg.mode = mode;
        return sweep_theorem_b(a3, a3.group().from_word({1, 2, 3}), cfg);
    });

    return rc;
}
