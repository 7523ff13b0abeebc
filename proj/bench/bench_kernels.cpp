#include "qpb/group.hpp"
#include "qpb/kernels.hpp"
#include "qpb/linalg.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

using namespace qpb;
using kernels::Exec;

namespace {

std::vector<Scalar> random_table(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> dist(-5, 5);
  std::vector<Scalar> v(n);
  for (auto& x : v) x = Scalar(mpq_class(dist(rng), 1 + (dist(rng) & 3)), dist(rng));
  return v;
}

double time_ms(const std::function<void()>& fn, int reps) {
  auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) fn();
  std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - start;
  return ms.count() / reps;
}

void row(const std::string& name, const std::function<void(Exec)>& fn, int reps) {
  double s = time_ms([&] { fn(Exec::serial); }, reps);
  double p = time_ms([&] { fn(Exec::parallel); }, reps);
  std::printf("%-28s %10.2f %10.2f %8.2fx\n", name.c_str(), s, p, s / p);
}

}  // namespace

int main(int argc, char** argv) {
  int reps = argc > 1 ? std::stoi(argv[1]) : 3;
  std::mt19937 rng(7);
  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-28s %10s %10s %9s\n", "kernel", "serial ms", "omp ms", "speedup");

  const FiniteGroup s3 = FiniteGroup::symmetric(3);
  for (int n : {6, 12, 18}) {
    auto in = random_table(rng, kernels::power(n, 3) * s3.order());
    row("differential N=" + std::to_string(n) + " deg 2",
        [&](Exec e) { kernels::differential(n, 2, s3.order(), in, e); }, reps);
  }
  for (int n : {6, 12}) {
    auto a = random_table(rng, kernels::power(n, 2) * s3.order());
    auto c = random_table(rng, kernels::power(n, 2) * s3.order());
    row("star N=" + std::to_string(n) + " deg 1x1",
        [&](Exec e) { kernels::star(n, 1, 1, s3, a, c, e); }, reps);
  }
  for (int dim : {24, 48}) {
    auto entries = random_table(rng, static_cast<std::size_t>(dim) * dim);
    row("rref " + std::to_string(dim) + "x" + std::to_string(dim),
        [&](Exec e) {
          Matrix m(dim, dim);
          for (int r = 0; r < dim; ++r)
            for (int k = 0; k < dim; ++k) m(r, k) = entries[static_cast<std::size_t>(r) * dim + k];
          kernels::rref(m, e);
        },
        reps);
  }
}
