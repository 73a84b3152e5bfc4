#include "varid/masking.hpp"

#include <algorithm>
#include <fstream>
#include <unordered_map>

#include <json.hpp>

#include "varid/error.hpp"
#include "varid/text.hpp"

namespace varid {

using nlohmann::json;

namespace {

bool is_word_char(std::uint32_t cp) {
  return is_letter(cp) || (cp >= '0' && cp <= '9');
}

// True when the codepoint range [start, end) is not flanked by word characters.
bool is_standalone(std::string_view text, const std::vector<std::size_t>& offsets,
                   std::size_t start, std::size_t end) {
  if (start > 0) {
    std::size_t pos = offsets[start - 1];
    if (is_word_char(utf8_decode(text, pos))) return false;
  }
  if (end + 1 < offsets.size()) {
    std::size_t pos = offsets[end];
    if (is_word_char(utf8_decode(text, pos))) return false;
  }
  return true;
}

}  // namespace

LabeledCorpus apply_mask(const LabeledCorpus& corpus, const std::vector<SpanAnnotation>& spans,
                         const MaskingPolicy& policy) {
  std::unordered_map<std::string, std::size_t> id_to_index;
  for (std::size_t i = 0; i < corpus.samples.size(); ++i) {
    id_to_index.emplace(corpus.samples[i].id, i);
  }

  std::unordered_map<std::size_t, std::vector<std::pair<std::size_t, std::size_t>>> qualifying;
  std::unordered_map<std::size_t, std::vector<std::size_t>> offsets_cache;

  for (const auto& span : spans) {
    auto it = id_to_index.find(span.sample_id);
    if (it == id_to_index.end()) {
      throw Error(ErrorCode::SpanOutOfBounds, "unknown sample id " + span.sample_id);
    }
    const Sample& sample = corpus.samples[it->second];
    auto& offsets = offsets_cache[it->second];
    if (offsets.empty()) offsets = utf8_offsets(sample.text);
    const std::size_t n_cp = offsets.size() - 1;
    if (span.start >= span.end || span.end > n_cp) {
      throw Error(ErrorCode::SpanOutOfBounds, span.sample_id + " [" +
                                                  std::to_string(span.start) + ", " +
                                                  std::to_string(span.end) + ")");
    }
    if (span.end - span.start < policy.min_span_length) continue;
    if (span.score < policy.min_score) continue;
    if (policy.require_standalone &&
        !is_standalone(sample.text, offsets, span.start, span.end)) {
      continue;
    }
    if (policy.exempt_sources.count(sample.source)) continue;
    qualifying[it->second].emplace_back(span.start, span.end);
  }

  LabeledCorpus out = corpus;
  for (auto& [index, ranges] : qualifying) {
    std::sort(ranges.begin(), ranges.end());
    std::vector<std::pair<std::size_t, std::size_t>> merged;
    for (const auto& r : ranges) {
      if (!merged.empty() && r.first < merged.back().second) {
        merged.back().second = std::max(merged.back().second, r.second);
      } else {
        merged.push_back(r);
      }
    }

    Sample& sample = out.samples[index];
    const auto& offsets = offsets_cache[index];
    std::string masked;
    std::size_t byte_pos = 0;
    for (const auto& [start, end] : merged) {
      masked.append(sample.text, byte_pos, offsets[start] - byte_pos);
      masked.append(policy.placeholder);
      byte_pos = offsets[end];
    }
    masked.append(sample.text, byte_pos, sample.text.size() - byte_pos);
    sample.text = std::move(masked);
    sample.token_count = count_tokens(sample.text);
  }
  return out;
}

std::vector<SpanAnnotation> gazetteer_mask(const LabeledCorpus& corpus,
                                           const std::vector<std::string>& gazetteer,
                                           const MaskingPolicy& policy) {
  struct Entry {
    std::string bytes;
    std::size_t cp_len;
  };
  std::vector<Entry> entries;
  entries.reserve(gazetteer.size());
  for (const auto& g : gazetteer) {
    if (g.empty()) throw Error(ErrorCode::InvalidArgument, "empty gazetteer entry");
    entries.push_back({g, utf8_length(g)});
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return a.cp_len != b.cp_len ? a.cp_len > b.cp_len : a.bytes < b.bytes;
  });

  std::vector<SpanAnnotation> spans;
  for (const auto& sample : corpus.samples) {
    const auto offsets = utf8_offsets(sample.text);
    const std::size_t n_cp = offsets.size() - 1;
    std::size_t i = 0;
    while (i < n_cp) {
      std::size_t matched_len = 0;
      for (const auto& entry : entries) {
        if (i + entry.cp_len > n_cp) continue;
        if (sample.text.compare(offsets[i], entry.bytes.size(), entry.bytes) != 0) continue;
        if (policy.require_standalone &&
            !is_standalone(sample.text, offsets, i, i + entry.cp_len)) {
          continue;
        }
        matched_len = entry.cp_len;
        break;
      }
      if (matched_len > 0) {
        spans.push_back({sample.id, i, i + matched_len, 1.0});
        i += matched_len;
      } else {
        ++i;
      }
    }
  }
  return spans;
}

std::vector<SpanAnnotation> load_spans_jsonl(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  std::vector<SpanAnnotation> spans;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    json record = json::parse(line, nullptr, false);
    if (record.is_discarded() || !record.contains("sample_id") || !record.contains("start") ||
        !record.contains("end")) {
      throw Error(ErrorCode::MalformedRecord, path.string() + ":" + std::to_string(line_no));
    }
    SpanAnnotation span;
    span.sample_id = record["sample_id"].get<std::string>();
    span.start = record["start"].get<std::size_t>();
    span.end = record["end"].get<std::size_t>();
    span.score = record.value("score", 1.0);
    spans.push_back(std::move(span));
  }
  return spans;
}

std::vector<std::string> load_gazetteer(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  std::vector<std::string> entries;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) entries.push_back(line);
  }
  return entries;
}

}  // namespace varid
