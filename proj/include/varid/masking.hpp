#ifndef VARID_MASKING_HPP
#define VARID_MASKING_HPP

#include <cstddef>
#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include "varid/corpus.hpp"

namespace varid {

// Codepoint span [start, end) inside the sample with the given id.
struct SpanAnnotation {
  std::string sample_id;
  std::size_t start = 0;
  std::size_t end = 0;
  double score = 1.0;
};

struct MaskingPolicy {
  std::string placeholder = "$NE$";
  std::size_t min_span_length = 2;
  double min_score = 0.98;
  bool require_standalone = true;
  std::set<std::string> exempt_sources = {"PG"};
};

// Replaces each qualifying span with the placeholder. Sample count and labels
// are preserved; overlapping qualifying spans are merged before replacement.
LabeledCorpus apply_mask(const LabeledCorpus& corpus, const std::vector<SpanAnnotation>& spans,
                         const MaskingPolicy& policy);

// Emits score-1.0 spans at standalone occurrences of gazetteer entries,
// longest match first, case-sensitive.
std::vector<SpanAnnotation> gazetteer_mask(const LabeledCorpus& corpus,
                                           const std::vector<std::string>& gazetteer,
                                           const MaskingPolicy& policy);

// JSONL with keys sample_id, start, end, score.
std::vector<SpanAnnotation> load_spans_jsonl(const std::filesystem::path& path);

// One entry per line, UTF-8; blank lines skipped.
std::vector<std::string> load_gazetteer(const std::filesystem::path& path);

}  // namespace varid

#endif  // VARID_MASKING_HPP
