#include "varid/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <regex>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "varid/error.hpp"
#include "varid/rng.hpp"
#include "varid/text.hpp"

namespace varid {

using nlohmann::json;

bool LabeledCorpus::has_label(std::string_view label) const {
  return std::find(label_set.begin(), label_set.end(), label) != label_set.end();
}

std::map<std::string, std::size_t> LabeledCorpus::counts_by_label() const {
  std::map<std::string, std::size_t> counts;
  for (const auto& label : label_set) counts[label] = 0;
  for (const auto& s : samples) ++counts[s.label];
  return counts;
}

const std::vector<std::string>& default_label_set() {
  static const std::vector<std::string> labels = {"Sursilvan", "Sutsilvan", "Surmiran",
                                                  "Puter",     "Vallader",  "RG"};
  return labels;
}

CorpusFormat format_for_path(const std::filesystem::path& path) {
  return path.extension() == ".tsv" ? CorpusFormat::tsv : CorpusFormat::jsonl;
}

namespace {

Sample make_sample(std::string id, std::string text, std::string label, std::string source) {
  Sample s;
  s.token_count = count_tokens(text);
  s.id = std::move(id);
  s.text = std::move(text);
  s.label = std::move(label);
  s.source = std::move(source);
  return s;
}

void check_label(const std::string& label, const std::vector<std::string>& label_set,
                 const std::filesystem::path& path, std::size_t line_no) {
  if (std::find(label_set.begin(), label_set.end(), label) == label_set.end()) {
    throw Error(ErrorCode::UnknownLabel,
                "label \"" + label + "\" at " + path.string() + ":" + std::to_string(line_no));
  }
}

}  // namespace

LabeledCorpus load_corpus(const std::filesystem::path& path, CorpusFormat format,
                          const std::vector<std::string>& label_set) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());

  LabeledCorpus corpus;
  corpus.label_set = label_set;
  const std::string stem = path.stem().string();

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    if (format == CorpusFormat::jsonl) {
      json record = json::parse(line, nullptr, false);
      if (record.is_discarded() || !record.is_object() || !record.contains("text") ||
          !record.contains("label") || !record["text"].is_string() ||
          !record["label"].is_string()) {
        throw Error(ErrorCode::MalformedRecord, path.string() + ":" + std::to_string(line_no));
      }
      std::string label = record["label"].get<std::string>();
      check_label(label, label_set, path, line_no);
      std::string id = stem + ":" + std::to_string(line_no);
      if (auto it = record.find("id"); it != record.end()) {
        id = it->is_string() ? it->get<std::string>() : it->dump();
      }
      std::string source;
      if (auto it = record.find("source"); it != record.end() && it->is_string()) {
        source = it->get<std::string>();
      }
      corpus.samples.push_back(make_sample(std::move(id), record["text"].get<std::string>(),
                                           std::move(label), std::move(source)));
    } else {
      auto tab = line.find('\t');
      if (tab == std::string::npos || tab == 0) {
        throw Error(ErrorCode::MalformedRecord, path.string() + ":" + std::to_string(line_no));
      }
      std::string label = line.substr(0, tab);
      check_label(label, label_set, path, line_no);
      corpus.samples.push_back(make_sample(stem + ":" + std::to_string(line_no),
                                           line.substr(tab + 1), std::move(label), ""));
    }
  }
  if (line_no == 0) throw Error(ErrorCode::EmptyFile, path.string());
  return corpus;
}

void save_corpus_jsonl(const LabeledCorpus& corpus, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  for (const auto& s : corpus.samples) {
    json record{{"id", s.id}, {"label", s.label}, {"text", s.text}};
    if (!s.source.empty()) record["source"] = s.source;
    out << record.dump() << '\n';
  }
}

std::optional<std::string> clean_text(std::string_view raw, CleanPolicy policy,
                                      const std::vector<CleaningRule>& rules) {
  std::string work(raw);
  if (policy == CleanPolicy::train) {
    static const std::regex tag_pattern("<[^>]+>");
    work = std::regex_replace(work, tag_pattern, "");
    for (const auto& rule : rules) {
      if (rule.is_regex) {
        work = std::regex_replace(work, std::regex(rule.pattern), "");
      } else {
        std::size_t pos = 0;
        while ((pos = work.find(rule.pattern, pos)) != std::string::npos) {
          work.erase(pos, rule.pattern.size());
        }
      }
    }
  }
  work = collapse_whitespace(work);
  if (work.empty() || !contains_letter(work)) return std::nullopt;
  return work;
}

LabeledCorpus clean_corpus(const LabeledCorpus& corpus, CleanPolicy policy,
                           const std::vector<CleaningRule>& rules) {
  LabeledCorpus out;
  out.label_set = corpus.label_set;
  out.samples.reserve(corpus.samples.size());
  for (const auto& s : corpus.samples) {
    auto cleaned = clean_text(s.text, policy, rules);
    if (!cleaned) continue;
    out.samples.push_back(make_sample(s.id, std::move(*cleaned), s.label, s.source));
  }
  return out;
}

LabeledCorpus dedup_intra_class(const LabeledCorpus& corpus) {
  LabeledCorpus out;
  out.label_set = corpus.label_set;
  out.samples.reserve(corpus.samples.size());
  std::unordered_set<std::string> seen;
  for (const auto& s : corpus.samples) {
    std::string key = s.label + '\x1f' + s.text;
    if (seen.insert(std::move(key)).second) out.samples.push_back(s);
  }
  return out;
}

std::pair<LabeledCorpus, std::vector<LabeledCorpus>> route_cross_class_duplicates(
    const LabeledCorpus& train, const std::vector<LabeledCorpus>& evals) {
  // Corpus membership per text: bit 0 = train, bit i+1 = evals[i].
  std::unordered_map<std::string, std::uint64_t> member;
  for (const auto& s : train.samples) member[s.text] |= 1;
  for (std::size_t i = 0; i < evals.size(); ++i) {
    for (const auto& s : evals[i].samples) member[s.text] |= (std::uint64_t{2} << i);
  }

  auto shared_with_eval = [&](const std::string& text) {
    std::uint64_t bits = member.at(text);
    return (bits & ~std::uint64_t{1}) != 0 && (bits & (bits - 1)) != 0;
  };

  LabeledCorpus new_train = train;
  std::vector<LabeledCorpus> new_evals;
  new_evals.reserve(evals.size());

  std::unordered_set<std::string> train_pairs;
  for (const auto& s : train.samples) train_pairs.insert(s.label + '\x1f' + s.text);

  for (const auto& eval : evals) {
    LabeledCorpus kept;
    kept.label_set = eval.label_set;
    for (const auto& s : eval.samples) {
      if (!shared_with_eval(s.text)) {
        kept.samples.push_back(s);
        continue;
      }
      // Routed: drop from eval, append its (label, text) to train if new there.
      if (train_pairs.insert(s.label + '\x1f' + s.text).second) {
        new_train.samples.push_back(s);
      }
    }
    new_evals.push_back(std::move(kept));
  }
  return {std::move(new_train), std::move(new_evals)};
}

LabeledCorpus build_split(const LabeledCorpus& corpus, const SplitSpec& spec) {
  std::size_t balanced_count = 0;
  for (const auto& [label, count] : spec.per_label_counts) {
    if (spec.balanced && count > 0) {
      if (balanced_count == 0) balanced_count = count;
      if (count != balanced_count) {
        throw Error(ErrorCode::InvalidArgument,
                    "balanced split \"" + spec.name + "\" has unequal counts");
      }
    }
    if (!corpus.has_label(label)) {
      throw Error(ErrorCode::UnknownLabel, "split \"" + spec.name + "\" label " + label);
    }
  }

  std::unordered_map<std::string, std::vector<std::size_t>> by_label;
  for (std::size_t i = 0; i < corpus.samples.size(); ++i) {
    by_label[corpus.samples[i].label].push_back(i);
  }

  std::vector<char> selected(corpus.samples.size(), 0);
  for (const auto& [label, count] : spec.per_label_counts) {
    if (count == 0) continue;
    auto it = by_label.find(label);
    const std::size_t have = it == by_label.end() ? 0 : it->second.size();
    if (have < count) {
      throw Error(ErrorCode::InsufficientSamples,
                  label + ": have " + std::to_string(have) + ", need " + std::to_string(count));
    }
    auto indices = it->second;
    Rng rng(derive_seed(spec.seed, label));
    rng.shuffle(indices);
    for (std::size_t j = 0; j < count; ++j) selected[indices[j]] = 1;
  }

  LabeledCorpus out;
  out.label_set = corpus.label_set;
  for (std::size_t i = 0; i < corpus.samples.size(); ++i) {
    if (selected[i]) out.samples.push_back(corpus.samples[i]);
  }
  return out;
}

namespace {

std::size_t round_half_even(double x) {
  const double r = std::nearbyint(x);  // default rounding mode is to-nearest-even
  return static_cast<std::size_t>(r);
}

}  // namespace

LabeledCorpus stratified_subsample(const LabeledCorpus& corpus, double fraction,
                                   std::uint64_t seed) {
  if (!(fraction > 0.0) || fraction > 1.0) {
    throw Error(ErrorCode::InvalidArgument, "fraction must be in (0, 1]");
  }

  std::unordered_map<std::string, std::vector<std::size_t>> by_label;
  std::vector<std::string> present;  // in order of first appearance
  for (std::size_t i = 0; i < corpus.samples.size(); ++i) {
    auto& bucket = by_label[corpus.samples[i].label];
    if (bucket.empty()) present.push_back(corpus.samples[i].label);
    bucket.push_back(i);
  }

  std::map<std::string, std::size_t> target;
  std::size_t total = 0;
  for (const auto& label : present) {
    const std::size_t n = by_label[label].size();
    std::size_t t = round_half_even(fraction * static_cast<double>(n));
    if (t == 0) throw Error(ErrorCode::EmptyClassAfterSubsample, label);
    target[label] = t;
    total += t;
  }

  // Repair +-1 toward the global round-half-even target, most-displaced first.
  const std::size_t global =
      round_half_even(fraction * static_cast<double>(corpus.samples.size()));
  auto pick = [&](bool add) {
    std::string best;
    double best_gap = -1.0;
    for (const auto& [label, t] : target) {
      const double exact = fraction * static_cast<double>(by_label[label].size());
      const double gap = add ? exact - static_cast<double>(t)
                             : static_cast<double>(t) - exact;
      const bool feasible = add ? t < by_label[label].size() : t > 1;
      if (feasible && gap > best_gap) {
        best_gap = gap;
        best = label;
      }
    }
    return best;
  };
  while (total < global) {
    auto label = pick(true);
    if (label.empty()) break;
    ++target[label];
    ++total;
  }
  while (total > global) {
    auto label = pick(false);
    if (label.empty()) break;
    --target[label];
    --total;
  }

  std::vector<char> selected(corpus.samples.size(), 0);
  for (const auto& [label, t] : target) {
    auto indices = by_label[label];
    Rng rng(derive_seed(seed, label));
    rng.shuffle(indices);
    for (std::size_t j = 0; j < t; ++j) selected[indices[j]] = 1;
  }

  LabeledCorpus out;
  out.label_set = corpus.label_set;
  for (std::size_t i = 0; i < corpus.samples.size(); ++i) {
    if (selected[i]) out.samples.push_back(corpus.samples[i]);
  }
  return out;
}

LabeledCorpus apply_relabel_patch(const LabeledCorpus& corpus,
                                  const std::map<std::string, std::string>& patch) {
  LabeledCorpus out = corpus;
  for (auto& s : out.samples) {
    auto it = patch.find(s.id);
    if (it == patch.end()) continue;
    if (!corpus.has_label(it->second)) {
      throw Error(ErrorCode::UnknownLabel, "relabel patch for id " + s.id);
    }
    s.label = it->second;
  }
  return out;
}

std::map<std::string, std::string> load_relabel_patch(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  std::map<std::string, std::string> patch;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    json record = json::parse(line, nullptr, false);
    if (record.is_discarded() || !record.contains("id") || !record.contains("label")) {
      throw Error(ErrorCode::MalformedRecord, path.string() + ":" + std::to_string(line_no));
    }
    patch[record["id"].get<std::string>()] = record["label"].get<std::string>();
  }
  return patch;
}

}  // namespace varid
