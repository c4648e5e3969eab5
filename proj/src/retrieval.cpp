#include "fairicl/retrieval.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include <json.hpp>

#include "fairicl/errors.hpp"

namespace fairicl {

DemoIndex DemoIndex::build(const RecordSet& pool, EmbeddingProvider& provider) {
  if (pool.empty()) throw Error("cannot build an index from an empty pool");
  DemoIndex idx;
  idx.provider_id_ = provider.id();
  idx.dimension_ = provider.dimension();
  idx.entries_.reserve(pool.size());
  for (const IndividualRecord& r : pool.records) {
    IndexEntry e;
    e.record_id = r.record_id;
    e.text = serialize_record(r, true);
    e.embedding = provider.embed(e.text);
    if (e.embedding.size() != idx.dimension_) {
      throw IndexCorruptionError("provider produced dimension " +
                                 std::to_string(e.embedding.size()) + ", declared " +
                                 std::to_string(idx.dimension_));
    }
    idx.entries_.push_back(std::move(e));
  }
  return idx;
}

void DemoIndex::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write index file: " + path);
  nlohmann::json header{{"count", entries_.size()},
                        {"dimension", dimension_},
                        {"provider_id", provider_id_}};
  out << header.dump() << "\n";
  for (const IndexEntry& e : entries_) {
    nlohmann::json line{
        {"embedding", e.embedding}, {"record_id", e.record_id}, {"text", e.text}};
    out << line.dump() << "\n";
  }
  if (!out) throw Error("short write to index file: " + path);
}

DemoIndex DemoIndex::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open index file: " + path);
  std::string line;
  if (!std::getline(in, line)) throw IndexCorruptionError("index file is empty: " + path);

  DemoIndex idx;
  std::size_t declared_count = 0;
  try {
    nlohmann::json header = nlohmann::json::parse(line);
    idx.provider_id_ = header.at("provider_id").get<std::string>();
    idx.dimension_ = header.at("dimension").get<std::size_t>();
    declared_count = header.at("count").get<std::size_t>();
  } catch (const nlohmann::json::exception& e) {
    throw IndexCorruptionError("bad index header: " + std::string(e.what()));
  }

  std::set<std::int64_t> seen;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    IndexEntry e;
    try {
      nlohmann::json doc = nlohmann::json::parse(line);
      e.record_id = doc.at("record_id").get<std::int64_t>();
      e.embedding = doc.at("embedding").get<std::vector<double>>();
      e.text = doc.at("text").get<std::string>();
    } catch (const nlohmann::json::exception& ex) {
      throw IndexCorruptionError("bad index entry at line " + std::to_string(line_no) +
                                 ": " + ex.what());
    }
    if (e.embedding.size() != idx.dimension_) {
      throw IndexCorruptionError("entry at line " + std::to_string(line_no) +
                                 " has dimension " + std::to_string(e.embedding.size()) +
                                 ", header declares " + std::to_string(idx.dimension_));
    }
    if (!seen.insert(e.record_id).second) {
      throw IndexCorruptionError("duplicate record_id " + std::to_string(e.record_id) +
                                 " at line " + std::to_string(line_no));
    }
    idx.entries_.push_back(std::move(e));
  }
  if (idx.entries_.size() != declared_count) {
    throw IndexCorruptionError("index declares " + std::to_string(declared_count) +
                               " entries, file holds " +
                               std::to_string(idx.entries_.size()));
  }
  return idx;
}

std::vector<double> scan_scores_serial(const DemoIndex& index,
                                       const std::vector<double>& query) {
  std::vector<double> scores(index.size());
  const auto& entries = index.entries();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    scores[i] = cosine_similarity(query, entries[i].embedding);
  }
  return scores;
}

std::vector<double> scan_scores_parallel(const DemoIndex& index,
                                         const std::vector<double>& query) {
  std::vector<double> scores(index.size());
  const auto& entries = index.entries();
  const std::int64_t n = static_cast<std::int64_t>(entries.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    scores[static_cast<std::size_t>(i)] =
        cosine_similarity(query, entries[static_cast<std::size_t>(i)].embedding);
  }
  return scores;
}

RetrievalResult top_k(const DemoIndex& index, const std::vector<double>& scores, int k) {
  if (k < 1) throw Error("k must be at least 1");
  if (index.size() == 0) throw Error("cannot retrieve from an empty index");
  if (scores.size() != index.size()) {
    throw AlignmentError("score count does not match index size");
  }
  std::vector<std::size_t> order(index.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  auto better = [&](std::size_t a, std::size_t b) {
    if (scores[a] != scores[b]) return scores[a] > scores[b];
    return index.entries()[a].record_id < index.entries()[b].record_id;
  };
  std::size_t take = std::min<std::size_t>(static_cast<std::size_t>(k), order.size());
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(take),
                    order.end(), better);

  RetrievalResult out;
  out.k = k;
  out.demos.reserve(take);
  for (std::size_t i = 0; i < take; ++i) {
    const IndexEntry& e = index.entries()[order[i]];
    out.demos.push_back(ScoredDemo{e.record_id, scores[order[i]], e.text});
  }
  return out;
}

RetrievalResult retrieve(const DemoIndex& index, const IndividualRecord& query, int k,
                         EmbeddingProvider& provider) {
  if (provider.dimension() != index.dimension()) {
    throw IndexCorruptionError("provider dimension " + std::to_string(provider.dimension()) +
                               " does not match index dimension " +
                               std::to_string(index.dimension()));
  }
  std::vector<double> q = provider.embed(serialize_record(query, false));
  std::vector<double> scores = scan_scores_parallel(index, q);
  return top_k(index, scores, k);
}

}  // namespace fairicl
