// Timing comparison of the serial and OpenMP elimination kernels.
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qgain/matrix.hpp"
#include "qgain/quaternion.hpp"
#include "qgain/rng.hpp"

namespace {

using namespace qgain;

QMatrix dense_random(int n, Seed seed) {
    Rng rng(seed);
    QMatrix m(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            m(r, c) = Quaternion(rng.small_rational(), rng.small_rational(),
                                 rng.small_rational(), rng.small_rational());
    return m;
}

template <typename F>
double time_ms(F&& body, int repeats) {
    const auto start = std::chrono::steady_clock::now();
    for (int i = 0; i < repeats; ++i) body();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count() / repeats;
}

} // namespace

int main(int argc, char** argv) {
    const int max_dim = argc > 1 ? std::atoi(argv[1]) : 48;
    const int repeats = argc > 2 ? std::atoi(argv[2]) : 3;
#ifdef _OPENMP
    std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "built without OpenMP; both columns run the serial kernel\n";
#endif
    std::cout << std::setw(6) << "n" << std::setw(14) << "serial ms" << std::setw(14)
              << "parallel ms" << std::setw(10) << "speedup" << std::setw(8) << "rank"
              << "\n";
    for (int n = 8; n <= max_dim; n *= 2) {
        const QMatrix m = dense_random(n, 42 + static_cast<Seed>(n));
        int r_serial = 0, r_parallel = 0;
        const double serial =
            time_ms([&] { r_serial = rank_serial(m, RankSide::row_left); }, repeats);
        const double parallel =
            time_ms([&] { r_parallel = rank_parallel(m, RankSide::row_left); }, repeats);
        if (r_serial != r_parallel) {
            std::cerr << "rank mismatch at n=" << n << ": " << r_serial
                      << " != " << r_parallel << "\n";
            return 1;
        }
        std::cout << std::setw(6) << n << std::setw(14) << std::fixed
                  << std::setprecision(3) << serial << std::setw(14) << parallel
                  << std::setw(10) << std::setprecision(2) << serial / parallel
                  << std::setw(8) << r_serial << "\n";
    }
    return 0;
}
