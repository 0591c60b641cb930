#pragma once

#include <string>
#include <vector>

#include "cca/corpus.hpp"

namespace cca {

enum class ReportFormat { jsonl, csv, table };

// Accepts "jsonl", "json-lines", "csv" and "table".
ReportFormat format_from_name(const std::string& name);

// One JSON object per record per line, keys in a fixed order, timings
// excluded: equal runs give equal bytes.
std::string render_jsonl(const std::vector<AnalysisRecord>& records);

// Flat per record summary. Cells whose value was not computed stay empty.
std::string render_csv(const std::vector<AnalysisRecord>& records);

// Aligned human summary with per instance timings, followed by aggregate
// counts.
std::string render_table(const std::vector<AnalysisRecord>& records);

std::string render_report(const std::vector<AnalysisRecord>& records,
                          ReportFormat format);

// Parsed form of the ideal description
//   {"vars": [...], "field": "Q", "generators": [...]}
// with optional "id" and "seed" keys, as written by render_corpus_jsonl.
struct IdealInput {
  std::string id;
  RingPtr ring;
  Ideal ideal;
  std::optional<MonomialIdeal> mono;
  std::uint64_t seed = 0;
};

// Throws DomainError on malformed JSON or unknown fields of the schema.
IdealInput parse_ideal_input(const std::string& text);

CorpusInstance instance_from_input(const IdealInput& input);

// One instance per line in the parse_ideal_input schema, so a corpus can
// be persisted and analyzed later line by line.
std::string render_corpus_jsonl(const Corpus& corpus);

}  // namespace cca
