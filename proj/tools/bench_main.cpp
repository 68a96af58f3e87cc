// Benchmark of the OpenMP kernels against their serial reference
// implementations. Each kernel is run both ways on the same workload; the
// results are compared for equality before the timings are reported.
#include "meandrics/meander.hpp"
#include "meandrics/wick.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

using namespace meandrics;

namespace {

template <typename Fn>
auto timed(Fn&& fn, double* seconds) {
    const auto start = std::chrono::steady_clock::now();
    auto result = fn();
    *seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    return result;
}

void report(const char* kernel, const std::string& workload, double serial_s,
            double parallel_s, bool identical) {
    std::printf("%-18s %-18s serial %8.3f s   parallel %8.3f s   x%.2f   %s\n",
                kernel, workload.c_str(), serial_s, parallel_s,
                parallel_s > 0 ? serial_s / parallel_s : 0.0,
                identical ? "results identical" : "RESULT MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    int threads = 4;
    int meander_order = 8;
    int table_depth = 14;
    int star_half = 8;

    CLI::App app{"kernel benchmark: serial reference vs OpenMP"};
    app.add_option("--threads", threads, "worker threads for the parallel runs")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--n", meander_order, "closed-meander order")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--n-max", table_depth, "semi-meander table depth")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--p", star_half, "half-valency of the single star")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    CLI11_PARSE(app, argc, argv);

    int failures = 0;

    {
        double serial_s = 0, parallel_s = 0;
        const ComponentPolynomial reference = timed(
            [&] { return meander_polynomial_serial(meander_order); },
            &serial_s);
        const ComponentPolynomial parallel = timed(
            [&] { return meander_polynomial(meander_order, threads); },
            &parallel_s);
        const bool identical = reference == parallel;
        failures += identical ? 0 : 1;
        report("meander pairs", "n=" + std::to_string(meander_order), serial_s,
               parallel_s, identical);
    }

    {
        double serial_s = 0, parallel_s = 0;
        const SemiMeanderTable reference = timed(
            [&] { return semimeander_table_serial(table_depth); }, &serial_s);
        const SemiMeanderTable parallel = timed(
            [&] { return semimeander_table(table_depth, threads); },
            &parallel_s);
        const bool identical = reference.rows == parallel.rows;
        failures += identical ? 0 : 1;
        report("growth tree", "n_max=" + std::to_string(table_depth), serial_s,
               parallel_s, identical);
    }

    {
        StarSystem star;
        star.stars.push_back(std::vector<int>(2 * star_half, 1));
        const PropagatorTable id1 = PropagatorTable::identity(1);
        double serial_s = 0, parallel_s = 0;
        const LaurentN reference = timed(
            [&] { return gaussian_average_serial(star, id1); }, &serial_s);
        const LaurentN parallel = timed(
            [&] {
                return gaussian_average(star, id1, kDefaultMaxWork, threads);
            },
            &parallel_s);
        const bool identical = reference == parallel;
        failures += identical ? 0 : 1;
        report("pairing sum", "legs=" + std::to_string(2 * star_half),
               serial_s, parallel_s, identical);
    }

    return failures == 0 ? 0 : 1;
}
