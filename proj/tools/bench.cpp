// Timing comparison of the OpenMP kernels against their serial reference on
// grid-sized arrays. Prints one line per kernel with both timings.

#include <chrono>
#include <iostream>
#include <random>
#include <vector>

#include "alp/kernels.hpp"
#include "alp/liealg.hpp"

namespace k = alp::fields::kernels;

namespace {

using clock_type = std::chrono::steady_clock;

template <class F>
double time_ms(F&& f, int reps) {
  f();  // warmup
  auto t0 = clock_type::now();
  for (int r = 0; r < reps; ++r) f();
  auto t1 = clock_type::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

}  // namespace

int main(int argc, char** argv) {
  const int64_t n = argc > 1 ? std::atoll(argv[1]) : (1 << 20);
  const int reps = argc > 2 ? std::atoi(argv[2]) : 50;
  std::mt19937_64 rng(5);
  std::normal_distribution<double> dist;
  auto rand_vec = [&](int64_t m) {
    std::vector<double> v(m);
    for (auto& x : v) x = dist(rng);
    return v;
  };
  std::vector<double> x = rand_vec(n), y = rand_vec(n), z(n), r = rand_vec(n);
  for (auto& v : r) v = 1.5 + 0.1 * std::tanh(v);

  auto so3 = alp::liealg::LieAlgebraSpec::so3();
  std::vector<double> xi = rand_vec(3 * n), eta = rand_vec(3 * n), out3(3 * n);

  std::cout << "n = " << n << ", reps = " << reps << "\n";
  std::cout << "kernel            parallel_ms   serial_ms\n";
  auto row = [&](const char* name, double par, double ser) {
    std::printf("%-16s %10.4f  %10.4f\n", name, par, ser);
  };
  row("mul",
      time_ms([&] { k::mul(z.data(), x.data(), y.data(), n); }, reps),
      time_ms([&] { k::serial::mul(z.data(), x.data(), y.data(), n); }, reps));
  row("axpy",
      time_ms([&] { k::axpy(z.data(), 1.1, x.data(), n); }, reps),
      time_ms([&] { k::serial::axpy(z.data(), 1.1, x.data(), n); }, reps));
  row("recip_mul",
      time_ms([&] { k::recip_mul(z.data(), x.data(), r.data(), n); }, reps),
      time_ms([&] { k::serial::recip_mul(z.data(), x.data(), r.data(), n); }, reps));
  row("bracket(so3)",
      time_ms([&] { k::bracket_field(so3.C.data(), 3, xi.data(), eta.data(), out3.data(), n); },
              reps),
      time_ms(
          [&] {
            k::serial::bracket_field(so3.C.data(), 3, xi.data(), eta.data(), out3.data(), n);
          },
          reps));
  row("ad_star(so3)",
      time_ms([&] { k::ad_star_field(so3.C.data(), 3, xi.data(), eta.data(), out3.data(), n); },
              reps),
      time_ms(
          [&] {
            k::serial::ad_star_field(so3.C.data(), 3, xi.data(), eta.data(), out3.data(), n);
          },
          reps));
  return 0;
}
