// Benchmark: OpenMP-parallel detuning sweep vs the serial reference path.
#include <chrono>
#include <cmath>
#include <cstdio>

#include <omp.h>

#include "polarion/dissipative/two_mode.hpp"

using namespace polarion;
using clock_type = std::chrono::steady_clock;

namespace {

double run(const dissipative::TwoModeModel& m, const std::vector<double>& deltas,
           bool parallel, std::vector<dissipative::SweepRow>& rows) {
    auto t0 = clock_type::now();
    rows = dissipative::detuning_sweep(m, deltas, false, parallel);
    auto t1 = clock_type::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    int points = (argc > 1) ? std::atoi(argv[1]) : 41;
    if (points < 2) {
        std::fprintf(stderr, "usage: bench_sweep [points>=2]\n");
        return 2;
    }
    dissipative::TwoModeModel m;
    m.gamma = 9.5e-3;
    m.j_coupling = 47e-3;
    m.u11 = m.u22 = 171e-3;
    m.u12 = 0.11 * m.u11;
    m.pump_amp = 2e-3;
    m.n_max = 6;

    auto deltas = dissipative::default_delta_grid(m, points);

    std::vector<dissipative::SweepRow> serial_rows, parallel_rows;
    double t_serial = run(m, deltas, false, serial_rows);
    double t_parallel = run(m, deltas, true, parallel_rows);

    double max_dev = 0.0;
    for (std::size_t i = 0; i < serial_rows.size(); ++i) {
        max_dev = std::max(max_dev, std::abs(serial_rows[i].g11 - parallel_rows[i].g11));
        max_dev = std::max(max_dev, std::abs(serial_rows[i].g12 - parallel_rows[i].g12));
    }

    std::printf("points:          %d (n_max = %d)\n", points, m.n_max);
    std::printf("threads:         %d\n", omp_get_max_threads());
    std::printf("serial:          %.3f s\n", t_serial);
    std::printf("parallel:        %.3f s\n", t_parallel);
    std::printf("speedup:         %.2fx\n", t_serial / t_parallel);
    std::printf("max |g2| dev:    %.3e\n", max_dev);
    return max_dev < 1e-10 ? 0 : 1;
}
