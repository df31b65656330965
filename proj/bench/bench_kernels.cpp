// Compares the OpenMP kernels against their serial reference implementations
// and reports wall-clock times plus agreement.

#include <cstdio>
#include <random>

#include <omp.h>

#include "hitchinlab/bundles_p1.hpp"
#include "hitchinlab/elliptic.hpp"
#include "hitchinlab/ratmatrix.hpp"

using namespace hitchinlab;

namespace {

template <typename F>
double timed(F&& f) {
    double t0 = omp_get_wtime();
    f();
    return omp_get_wtime() - t0;
}

void bench_matrix(std::size_t n) {
    std::mt19937 rng(5u);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 7);
    exact::RatMatrix a(n, n), b(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            a.at(i, j) = rat(num(rng), den(rng));
            b.at(i, j) = rat(num(rng), den(rng));
        }
    exact::RatMatrix r_serial, r_parallel;
    double t_serial = timed([&] { r_serial = exact::mul_serial(a, b); });
    double t_parallel = timed([&] { r_parallel = exact::mul(a, b); });
    std::printf("rational matmul %zux%zu      serial %8.3f ms   omp %8.3f ms   speedup %.2fx   %s\n",
                n, n, 1e3 * t_serial, 1e3 * t_parallel, t_serial / t_parallel,
                r_serial == r_parallel ? "match" : "MISMATCH");
}

void bench_eisenstein(long m) {
    elliptic::Complex tau(0.5, 1.0);
    elliptic::EisensteinPartial s{}, p{};
    double t_serial = timed([&] { s = elliptic::eisenstein_square_sum_serial(tau, m); });
    double t_parallel = timed([&] { p = elliptic::eisenstein_square_sum(tau, m); });
    bool match = s.s4 == p.s4 && s.s6 == p.s6;
    std::printf("eisenstein sums M=%-6ld     serial %8.3f ms   omp %8.3f ms   speedup %.2fx   %s\n",
                m, 1e3 * t_serial, 1e3 * t_parallel, t_serial / t_parallel,
                match ? "match" : "MISMATCH");
}

void bench_classify(int count) {
    std::mt19937 rng(6u);
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    std::vector<bundles::TransitionData> batch;
    for (int i = 0; i < count; ++i) {
        const int m = 8;
        std::vector<Rat> coeffs;
        for (int k = 1; k < m; ++k) coeffs.push_back(rat(num(rng), den(rng)));
        batch.emplace_back(m, std::move(coeffs));
    }
    std::vector<bundles::SplittingType> r1, r2;
    double t_serial = timed([&] { r1 = bundles::classify_batch_serial(batch); });
    double t_parallel = timed([&] { r2 = bundles::classify_batch(batch); });
    bool match = true;
    for (std::size_t i = 0; i < r1.size(); ++i) match = match && r1[i].k == r2[i].k;
    std::printf("classify-p1 batch %-6d     serial %8.3f ms   omp %8.3f ms   speedup %.2fx   %s\n",
                count, 1e3 * t_serial, 1e3 * t_parallel, t_serial / t_parallel,
                match ? "match" : "MISMATCH");
}

void bench_identity(int samples) {
    elliptic::Torus torus({0.0, 1.0});
    elliptic::WpOptions opt;
    opt.eisenstein_m0 = 160;
    elliptic::WpEvaluator wp(torus, opt);
    auto zq = elliptic::random_zq_samples(torus, samples, 29u);
    double e1 = 0, e2 = 0;
    double t_serial = timed([&] { e1 = elliptic::theta_wp_identity_error_serial(wp, zq); });
    double t_parallel = timed([&] { e2 = elliptic::theta_wp_identity_error(wp, zq); });
    std::printf("theta/wp sweep %-6d        serial %8.3f ms   omp %8.3f ms   speedup %.2fx   %s\n",
                samples, 1e3 * t_serial, 1e3 * t_parallel, t_serial / t_parallel,
                e1 == e2 ? "match" : "MISMATCH");
}

} // namespace

int main() {
    std::printf("threads: %d\n", omp_get_max_threads());
    bench_matrix(48);
    bench_matrix(96);
    bench_eisenstein(800);
    bench_eisenstein(2400);
    bench_classify(2000);
    bench_identity(400);
    return 0;
}
