#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fairicl/dataset.hpp"
#include "fairicl/embedding.hpp"

namespace fairicl {

struct IndexEntry {
  std::int64_t record_id = 0;
  std::vector<double> embedding;
  std::string text;  // serialized record, label included
};

// Immutable after build/load; safe for concurrent readers.
class DemoIndex {
 public:
  static DemoIndex build(const RecordSet& pool, EmbeddingProvider& provider);
  static DemoIndex load(const std::string& path);
  void save(const std::string& path) const;

  const std::string& provider_id() const { return provider_id_; }
  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return entries_.size(); }
  const std::vector<IndexEntry>& entries() const { return entries_; }

 private:
  std::vector<IndexEntry> entries_;
  std::string provider_id_;
  std::size_t dimension_ = 0;
};

struct ScoredDemo {
  std::int64_t record_id = 0;
  double score = 0.0;
  std::string text;
};

struct RetrievalResult {
  std::vector<ScoredDemo> demos;  // most similar first
  int k = 0;
};

// Cosine similarity of the query against every index entry, in entry order.
// The parallel kernel partitions entries across threads; each score is an
// independent dot product, so the two kernels agree bitwise.
std::vector<double> scan_scores_serial(const DemoIndex& index,
                                       const std::vector<double>& query);
std::vector<double> scan_scores_parallel(const DemoIndex& index,
                                         const std::vector<double>& query);

// Exact top-k from precomputed scores; ties broken by ascending record_id.
RetrievalResult top_k(const DemoIndex& index, const std::vector<double>& scores, int k);

RetrievalResult retrieve(const DemoIndex& index, const IndividualRecord& query, int k,
                         EmbeddingProvider& provider);

}  // namespace fairicl
