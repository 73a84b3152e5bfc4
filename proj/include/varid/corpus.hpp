#ifndef VARID_CORPUS_HPP
#define VARID_CORPUS_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace varid {

// One labeled text. `token_count` is the number of maximal non-whitespace runs.
struct Sample {
  std::string id;
  std::string text;
  std::string label;
  std::string source;
  std::size_t token_count = 0;
};

struct LabeledCorpus {
  std::vector<Sample> samples;
  std::vector<std::string> label_set;

  bool has_label(std::string_view label) const;
  std::map<std::string, std::size_t> counts_by_label() const;
  std::size_t size() const { return samples.size(); }
};

// Closed default label set: the five regional varieties plus the written standard.
const std::vector<std::string>& default_label_set();

enum class CorpusFormat { jsonl, tsv };
enum class CleanPolicy { train, eval };

// Ordered deletion rule applied during train-policy cleaning; matches are removed.
struct CleaningRule {
  bool is_regex = false;
  std::string pattern;
};

CorpusFormat format_for_path(const std::filesystem::path& path);

// JSONL records need `text` and `label`; `id` and `source` are optional
// (missing ids become "<stem>:<line>"). TSV rows are `label<TAB>text`.
LabeledCorpus load_corpus(const std::filesystem::path& path, CorpusFormat format,
                          const std::vector<std::string>& label_set = default_label_set());

void save_corpus_jsonl(const LabeledCorpus& corpus, const std::filesystem::path& path);

// Returns the cleaned text or nullopt (reject) when the result is empty or has
// no letter. Train policy strips `<...>` markup and applies `rules` first; eval
// policy only collapses whitespace. Casing and punctuation are never touched.
std::optional<std::string> clean_text(std::string_view raw, CleanPolicy policy,
                                      const std::vector<CleaningRule>& rules = {});

// Element-wise clean_text; rejected samples are dropped, token counts recomputed.
LabeledCorpus clean_corpus(const LabeledCorpus& corpus, CleanPolicy policy,
                           const std::vector<CleaningRule>& rules = {});

// Keeps the first occurrence of each (label, text) pair.
LabeledCorpus dedup_intra_class(const LabeledCorpus& corpus);

// Any text occurring in an eval corpus and in any other corpus is removed from
// all eval corpora; its (label, text) variants are guaranteed present in train.
std::pair<LabeledCorpus, std::vector<LabeledCorpus>> route_cross_class_duplicates(
    const LabeledCorpus& train, const std::vector<LabeledCorpus>& evals);

struct SplitSpec {
  std::string name;
  std::map<std::string, std::size_t> per_label_counts;
  bool balanced = false;
  std::uint64_t seed = 42;
};

// Seeded uniform sampling without replacement, per label. Output preserves
// corpus order; the per-label RNG stream is derived from (seed, label) so the
// result does not depend on label iteration order.
LabeledCorpus build_split(const LabeledCorpus& corpus, const SplitSpec& spec);

// Per-label targets are round-half-even(fraction * count), then repaired by +-1
// (never below 1) until they sum to round-half-even(fraction * total).
LabeledCorpus stratified_subsample(const LabeledCorpus& corpus, double fraction,
                                   std::uint64_t seed);

// id -> new label patch, for externally curated relabels.
LabeledCorpus apply_relabel_patch(const LabeledCorpus& corpus,
                                  const std::map<std::string, std::string>& patch);
std::map<std::string, std::string> load_relabel_patch(const std::filesystem::path& path);

}  // namespace varid

#endif  // VARID_CORPUS_HPP
