// Copyright 2026 The Talentscope Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
#include "talentscope/corpus.h"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

#include "talentscope/digest.h"

namespace talentscope {

MalformedRecordError::MalformedRecordError(std::size_t line, std::string reason)
    : Error("line " + std::to_string(line) + ": " + reason),
      line_(line),
      reason_(std::move(reason)) {}

std::optional<DocType> parse_doc_type(std::string_view name) {
  if (name == "article") return DocType::kArticle;
  if (name == "review") return DocType::kReview;
  if (name == "proceedings") return DocType::kProceedings;
  return std::nullopt;
}

std::string_view doc_type_name(DocType type) {
  switch (type) {
    case DocType::kArticle: return "article";
    case DocType::kReview: return "review";
    case DocType::kProceedings: return "proceedings";
  }
  return "article";
}

bool is_excluded_field(int two_digit_code) {
  return std::find(std::begin(kExcludedFieldPrefixes),
                   std::end(kExcludedFieldPrefixes),
                   two_digit_code) != std::end(kExcludedFieldPrefixes);
}

std::vector<BroadField> broad_fields_of(std::span<const int> asjc_codes) {
  std::vector<BroadField> fields;
  for (int code : asjc_codes) {
    if (code == kMultidisciplinaryCode) continue;
    const int prefix = code / 100;
    if (is_excluded_field(prefix)) continue;
    fields.push_back(BroadField{prefix});
  }
  std::sort(fields.begin(), fields.end());
  fields.erase(std::unique(fields.begin(), fields.end()), fields.end());
  return fields;
}

// ---------------------------------------------------------------------------
// CorpusBuilder

namespace {

// Empty string when the record satisfies the record invariants.
std::string validate(const InputRecord& rec) {
  if (rec.id.empty()) return "empty id";
  if (rec.asjc.empty()) return "no ASJC codes";
  for (int code : rec.asjc) {
    if (code < 1000 || code > 3699) {
      return "ASJC code " + std::to_string(code) + " outside [1000, 3699]";
    }
  }
  if (rec.citations < 0) return "negative citation count";
  std::vector<std::string_view> authors(rec.authors.begin(), rec.authors.end());
  std::sort(authors.begin(), authors.end());
  if (std::adjacent_find(authors.begin(), authors.end()) != authors.end()) {
    return "duplicate author id";
  }
  if (!authors.empty() && authors.front().empty()) return "empty author id";
  for (const auto& c : rec.corresponding) {
    if (!std::binary_search(authors.begin(), authors.end(),
                            std::string_view(c))) {
      return "corresponding author '" + c + "' is not an author";
    }
  }
  return {};
}

}  // namespace

CorpusBuilder::CorpusBuilder(IngestOptions options)
    : options_(std::move(options)) {}

void CorpusBuilder::add_malformed(std::size_t line, std::string reason) {
  ++stats_.read;
  if (!options_.skip_malformed) {
    throw MalformedRecordError(line, std::move(reason));
  }
  ++stats_.dropped_malformed;
  stats_.malformed_log.push_back("line " + std::to_string(line) + ": " +
                                 reason);
}

void CorpusBuilder::add(std::size_t line, InputRecord rec) {
  if (std::string reason = validate(rec); !reason.empty()) {
    add_malformed(line, std::move(reason));
    return;
  }
  ++stats_.read;
  if (auto [it, inserted] = seen_ids_.emplace(rec.id, line); !inserted) {
    throw Error("duplicate pub_id '" + rec.id + "' at line " +
                std::to_string(line) + " (first seen at line " +
                std::to_string(it->second) + ")");
  }
  const auto type = parse_doc_type(rec.type);
  if (!type || std::find(options_.doc_types.begin(), options_.doc_types.end(),
                         *type) == options_.doc_types.end()) {
    ++stats_.dropped_doc_type;
    return;
  }
  if (!options_.years.contains(rec.year)) {
    ++stats_.dropped_year;
    return;
  }

  PublicationRecord out;
  out.pub_id = std::move(rec.id);
  out.year = rec.year;
  out.doc_type = *type;
  out.journal_id = std::move(rec.journal);
  out.asjc_codes = std::move(rec.asjc);
  std::sort(out.asjc_codes.begin(), out.asjc_codes.end());
  out.asjc_codes.erase(
      std::unique(out.asjc_codes.begin(), out.asjc_codes.end()),
      out.asjc_codes.end());
  out.author_ids = std::move(rec.authors);
  out.corresponding_ids = std::move(rec.corresponding);
  std::sort(out.corresponding_ids.begin(), out.corresponding_ids.end());
  out.corresponding_ids.erase(std::unique(out.corresponding_ids.begin(),
                                          out.corresponding_ids.end()),
                              out.corresponding_ids.end());
  out.citation_count = rec.citations;
  if (broad_fields_of(out.asjc_codes).empty()) ++stats_.kept_without_field;
  ++stats_.kept;
  records_.push_back(std::move(out));
}

Corpus CorpusBuilder::finish(IngestStats* stats) {
  if (stats != nullptr) *stats = std::move(stats_);
  seen_ids_.clear();
  return Corpus(std::move(records_), options_.years);
}

// ---------------------------------------------------------------------------
// Corpus

Corpus::Corpus(std::vector<PublicationRecord> records, YearRange year_range)
    : records_(std::move(records)), year_range_(year_range) {
  build_indexes();
}

namespace {

// Interns strings so that id order equals lexicographic order.
std::vector<std::string> sorted_unique(std::vector<std::string_view> names) {
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  return {names.begin(), names.end()};
}

template <typename Key, typename Group, typename MakeGroup>
std::vector<Group> split_sorted(std::vector<std::pair<Key, Corpus::RecordId>>& rows,
                                MakeGroup make_group) {
  std::sort(rows.begin(), rows.end());
  std::vector<Group> groups;
  for (std::size_t i = 0; i < rows.size();) {
    std::size_t j = i;
    Group group = make_group(rows[i].first);
    while (j < rows.size() && std::get<0>(rows[j].first) == std::get<0>(rows[i].first) &&
           std::get<1>(rows[j].first) == std::get<1>(rows[i].first)) {
      group.records.push_back(rows[j].second);
      ++j;
    }
    groups.push_back(std::move(group));
    i = j;
  }
  return groups;
}

}  // namespace

void Corpus::build_indexes() {
  const std::size_t n = records_.size();
  if (n > std::numeric_limits<RecordId>::max()) {
    throw Error("corpus too large for 32-bit record ids");
  }

  field_offsets_.assign(1, 0);
  field_offsets_.reserve(n + 1);
  for (const auto& rec : records_) {
    for (BroadField f : broad_fields_of(rec.asjc_codes)) fields_.push_back(f);
    field_offsets_.push_back(static_cast<std::uint32_t>(fields_.size()));
  }

  // Authors.
  {
    std::vector<std::string_view> names;
    for (const auto& rec : records_) {
      for (const auto& a : rec.author_ids) names.push_back(a);
    }
    author_names_ = sorted_unique(std::move(names));
  }
  author_lookup_.reserve(author_names_.size());
  for (std::size_t i = 0; i < author_names_.size(); ++i) {
    author_lookup_.emplace(author_names_[i], static_cast<AuthorId>(i));
  }
  author_offsets_.assign(1, 0);
  corresponding_offsets_.assign(1, 0);
  std::vector<std::uint32_t> per_author(author_names_.size() + 1, 0);
  for (const auto& rec : records_) {
    for (const auto& a : rec.author_ids) {
      const AuthorId id = author_lookup_.find(a)->second;
      record_authors_.push_back(id);
      ++per_author[id + 1];
    }
    author_offsets_.push_back(static_cast<std::uint32_t>(record_authors_.size()));
    for (const auto& a : rec.corresponding_ids) {
      record_corresponding_.push_back(author_lookup_.find(a)->second);
    }
    corresponding_offsets_.push_back(
        static_cast<std::uint32_t>(record_corresponding_.size()));
  }
  std::partial_sum(per_author.begin(), per_author.end(), per_author.begin());
  author_record_offsets_ = per_author;
  author_records_.resize(record_authors_.size());
  for (RecordId r = 0; r < n; ++r) {
    for (AuthorId a : authors_of(r)) author_records_[per_author[a]++] = r;
  }

  // Journals.
  {
    std::vector<std::string_view> names;
    names.reserve(n);
    for (const auto& rec : records_) names.push_back(rec.journal_id);
    journal_names_ = sorted_unique(std::move(names));
  }
  journal_lookup_.reserve(journal_names_.size());
  for (std::size_t i = 0; i < journal_names_.size(); ++i) {
    journal_lookup_.emplace(journal_names_[i], static_cast<JournalId>(i));
  }
  record_journal_.resize(n);
  for (RecordId r = 0; r < n; ++r) {
    record_journal_[r] = journal_lookup_.find(records_[r].journal_id)->second;
  }

  // Rank of every record in pub_id order, so groups list records by pub_id.
  std::vector<RecordId> by_id(n);
  std::iota(by_id.begin(), by_id.end(), RecordId{0});
  std::sort(by_id.begin(), by_id.end(), [&](RecordId a, RecordId b) {
    return records_[a].pub_id < records_[b].pub_id;
  });
  std::vector<std::uint32_t> id_rank(n);
  for (std::uint32_t i = 0; i < n; ++i) id_rank[by_id[i]] = i;

  {
    using Key = std::tuple<int, int, std::uint32_t>;
    std::vector<std::pair<Key, RecordId>> rows;
    rows.reserve(fields_.size());
    for (RecordId r = 0; r < n; ++r) {
      for (BroadField f : fields_of(r)) {
        rows.push_back({Key{f.code, records_[r].year, id_rank[r]}, r});
      }
    }
    field_year_groups_ = split_sorted<Key, FieldYearGroup>(rows, [](const Key& k) {
      return FieldYearGroup{BroadField{std::get<0>(k)}, std::get<1>(k), {}};
    });
  }
  {
    using Key = std::tuple<JournalId, int, std::uint32_t>;
    std::vector<std::pair<Key, RecordId>> rows;
    rows.reserve(n);
    for (RecordId r = 0; r < n; ++r) {
      rows.push_back({Key{record_journal_[r], records_[r].year, id_rank[r]}, r});
    }
    journal_year_groups_ =
        split_sorted<Key, JournalYearGroup>(rows, [](const Key& k) {
          return JournalYearGroup{std::get<0>(k), std::get<1>(k), {}};
        });
  }
}

std::span<const BroadField> Corpus::fields_of(RecordId record) const {
  return std::span<const BroadField>(fields_).subspan(
      field_offsets_[record], field_offsets_[record + 1] - field_offsets_[record]);
}

std::span<const Corpus::AuthorId> Corpus::authors_of(RecordId record) const {
  return std::span<const AuthorId>(record_authors_)
      .subspan(author_offsets_[record],
               author_offsets_[record + 1] - author_offsets_[record]);
}

bool Corpus::is_corresponding(RecordId record, AuthorId author) const {
  auto begin = record_corresponding_.begin() + corresponding_offsets_[record];
  auto end = record_corresponding_.begin() + corresponding_offsets_[record + 1];
  return std::find(begin, end, author) != end;
}

std::optional<Corpus::AuthorId> Corpus::find_author(
    std::string_view author_id) const {
  auto it = author_lookup_.find(author_id);
  if (it == author_lookup_.end()) return std::nullopt;
  return it->second;
}

std::span<const Corpus::RecordId> Corpus::records_of_author(
    AuthorId author) const {
  return std::span<const RecordId>(author_records_)
      .subspan(author_record_offsets_[author],
               author_record_offsets_[author + 1] -
                   author_record_offsets_[author]);
}

std::optional<Corpus::JournalId> Corpus::find_journal(
    std::string_view journal_id) const {
  auto it = journal_lookup_.find(journal_id);
  if (it == journal_lookup_.end()) return std::nullopt;
  return it->second;
}

// ---------------------------------------------------------------------------
// Ingest and serialization

IngestResult ingest(std::istream& in, InputFormat format,
                    const IngestOptions& options) {
  CorpusBuilder builder(options);
  RecordReader reader(in, format);
  ParsedLine parsed;
  while (reader.next(parsed)) {
    if (parsed.record) {
      builder.add(parsed.line, std::move(*parsed.record));
    } else {
      builder.add_malformed(parsed.line, std::move(parsed.error));
    }
  }
  IngestResult result;
  result.corpus = builder.finish(&result.stats);
  return result;
}

IngestResult ingest(std::span<const InputRecord> records,
                    const IngestOptions& options) {
  CorpusBuilder builder(options);
  for (std::size_t i = 0; i < records.size(); ++i) {
    builder.add(i + 1, records[i]);
  }
  IngestResult result;
  result.corpus = builder.finish(&result.stats);
  return result;
}

InputRecord to_input_record(const PublicationRecord& record) {
  InputRecord out;
  out.id = record.pub_id;
  out.year = record.year;
  out.type = std::string(doc_type_name(record.doc_type));
  out.journal = record.journal_id;
  out.asjc = record.asjc_codes;
  out.authors = record.author_ids;
  out.corresponding = record.corresponding_ids;
  out.citations = record.citation_count;
  return out;
}

void serialize(const Corpus& corpus, std::ostream& out) {
  for (const auto& rec : corpus.records()) {
    out << to_jsonl(to_input_record(rec));
  }
}

std::string corpus_digest(const Corpus& corpus) {
  Sha256 hasher;
  for (const auto& rec : corpus.records()) {
    hasher.update(to_jsonl(to_input_record(rec)));
  }
  return hasher.hex_digest();
}

void write_ingest_report(const IngestStats& stats, std::ostream& out) {
  out << "reason,count\n"
      << "read," << stats.read << '\n'
      << "kept," << stats.kept << '\n'
      << "doc_type," << stats.dropped_doc_type << '\n'
      << "year," << stats.dropped_year << '\n'
      << "malformed," << stats.dropped_malformed << '\n'
      << "kept_without_field," << stats.kept_without_field << '\n';
}

}  // namespace talentscope
