// Benchmarks the serial reference scan against the OpenMP kernel on a
// synthetic pool, and cross-checks that they agree exactly.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "fairicl/retrieval.hpp"
#include "fairicl/util.hpp"

namespace {

using namespace fairicl;

RecordSet synthetic_pool(std::size_t n, std::mt19937_64& rng) {
  RecordSet pool;
  pool.records.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    IndividualRecord r;
    r.record_id = static_cast<std::int64_t>(i);
    r.age = 18 + static_cast<int>(bounded_draw(rng, 60));
    r.workclass = "Private";
    r.final_weight = 10000 + static_cast<std::int64_t>(bounded_draw(rng, 500000));
    r.education = (i % 3 == 0) ? "Bachelors" : (i % 3 == 1) ? "HS-grad" : "Masters";
    r.education_number = 1 + static_cast<int>(bounded_draw(rng, 16));
    r.marital_status = (i % 2 == 0) ? "Never-married" : "Married-civ-spouse";
    r.occupation = (i % 4 == 0) ? "Tech-support" : "Craft-repair";
    r.relationship = "Not-in-family";
    r.race = "White";
    r.gender = (i % 2 == 0) ? "Female" : "Male";
    r.capital_gain = static_cast<int>(bounded_draw(rng, 5000));
    r.capital_loss = static_cast<int>(bounded_draw(rng, 2000));
    r.hours_per_week = 20 + static_cast<int>(bounded_draw(rng, 40));
    r.native_country = "United-States";
    r.income = bounded_draw(rng, 2) == 0 ? IncomeLabel::LE50K : IncomeLabel::GT50K;
    pool.records.push_back(std::move(r));
  }
  return pool;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  std::size_t pool_size = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 20000;
  int queries = argc > 2 ? std::atoi(argv[2]) : 50;
  int repeats = argc > 3 ? std::atoi(argv[3]) : 3;

  std::mt19937_64 rng(20240131);
  RecordSet pool = synthetic_pool(pool_size, rng);
  LocalHashEmbedder embedder;

  auto t0 = std::chrono::steady_clock::now();
  DemoIndex index = DemoIndex::build(pool, embedder);
  std::printf("index build: %zu entries x %zu dims in %.3fs\n", index.size(),
              index.dimension(), seconds_since(t0));

  std::vector<std::vector<double>> query_vecs;
  query_vecs.reserve(static_cast<std::size_t>(queries));
  for (int q = 0; q < queries; ++q) {
    std::size_t pick = bounded_draw(rng, pool.size());
    query_vecs.push_back(
        embedder.embed(serialize_record(pool.records[pick], false)));
  }

#ifdef _OPENMP
  std::printf("openmp: %d max threads\n", omp_get_max_threads());
#else
  std::printf("openmp: not compiled in; parallel kernel runs serially\n");
#endif

  double best_serial = 1e300, best_parallel = 1e300;
  for (int rep = 0; rep < repeats; ++rep) {
    auto ts = std::chrono::steady_clock::now();
    for (const auto& q : query_vecs) scan_scores_serial(index, q);
    best_serial = std::min(best_serial, seconds_since(ts));

    auto tp = std::chrono::steady_clock::now();
    for (const auto& q : query_vecs) scan_scores_parallel(index, q);
    best_parallel = std::min(best_parallel, seconds_since(tp));
  }

  // Agreement check: the kernels must produce identical bytes.
  std::size_t mismatches = 0;
  for (const auto& q : query_vecs) {
    auto serial = scan_scores_serial(index, q);
    auto parallel = scan_scores_parallel(index, q);
    for (std::size_t i = 0; i < serial.size(); ++i) {
      if (serial[i] != parallel[i]) ++mismatches;
    }
  }

  double per_query_serial = best_serial / queries * 1e3;
  double per_query_parallel = best_parallel / queries * 1e3;
  std::printf("serial scan:   %.3fs total, %.3f ms/query\n", best_serial, per_query_serial);
  std::printf("parallel scan: %.3fs total, %.3f ms/query\n", best_parallel,
              per_query_parallel);
  std::printf("speedup: %.2fx, mismatches: %zu\n", best_serial / best_parallel, mismatches);
  return mismatches == 0 ? 0 : 1;
}
