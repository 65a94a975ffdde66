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
#ifndef TALENTSCOPE_CORPUS_H_
#define TALENTSCOPE_CORPUS_H_

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "talentscope/common.h"
#include "talentscope/record_io.h"

namespace talentscope {

// One indexed paper that passed validation and filtering.
// asjc_codes and corresponding_ids are sorted and duplicate-free;
// author_ids keeps input order.
struct PublicationRecord {
  std::string pub_id;
  int year = 0;
  DocType doc_type = DocType::kArticle;
  std::string journal_id;
  std::vector<int> asjc_codes;
  std::vector<std::string> author_ids;
  std::vector<std::string> corresponding_ids;
  std::int64_t citation_count = 0;

  bool operator==(const PublicationRecord&) const = default;
};

// Research areas that are never used for normalization or ranking.
inline constexpr int kExcludedFieldPrefixes[] = {12, 14, 18, 20, 32, 33};
// Multidisciplinary; excluded as an exact code, other 10xx codes survive.
inline constexpr int kMultidisciplinaryCode = 1000;

// Deduplicated, ascending broad fields of a code set, exclusions applied.
// May be empty.
std::vector<BroadField> broad_fields_of(std::span<const int> asjc_codes);

bool is_excluded_field(int two_digit_code);

struct IngestOptions {
  YearRange years{1999, 2020};
  std::vector<DocType> doc_types{DocType::kArticle, DocType::kReview,
                                 DocType::kProceedings};
  // false: the first malformed line aborts ingest with MalformedRecordError.
  bool skip_malformed = false;
};

struct IngestStats {
  std::size_t read = 0;
  std::size_t kept = 0;
  std::size_t dropped_doc_type = 0;
  std::size_t dropped_year = 0;
  std::size_t dropped_malformed = 0;
  // Kept records whose codes map to no eligible broad field.
  std::size_t kept_without_field = 0;
  // "line N: reason" for every skipped malformed line.
  std::vector<std::string> malformed_log;

  std::size_t dropped() const {
    return dropped_doc_type + dropped_year + dropped_malformed;
  }
};

class Corpus;

// Validated record stream folded into a Corpus. Feed with add() in input
// order, then call finish() once.
class CorpusBuilder {
 public:
  explicit CorpusBuilder(IngestOptions options);

  void add(std::size_t line, InputRecord record);
  void add_malformed(std::size_t line, std::string reason);

  // Consumes the builder.
  Corpus finish(IngestStats* stats = nullptr);

 private:
  IngestOptions options_;
  IngestStats stats_;
  std::vector<PublicationRecord> records_;
  std::unordered_map<std::string, std::size_t> seen_ids_;
};

struct IngestResult;

// Immutable, indexed collection of publication records.
//
// Authors and journals are interned into dense ids whose numeric order
// equals the lexicographic order of their string ids, so iterating ids
// yields canonical output order for free.
class Corpus {
 public:
  using RecordId = std::uint32_t;
  using AuthorId = std::uint32_t;
  using JournalId = std::uint32_t;

  struct FieldYearGroup {
    BroadField field;
    int year = 0;
    std::vector<RecordId> records;  // ascending pub_id
  };

  struct JournalYearGroup {
    JournalId journal = 0;
    int year = 0;
    std::vector<RecordId> records;  // ascending pub_id
  };

  Corpus() = default;
  Corpus(std::vector<PublicationRecord> records, YearRange year_range);

  // Lookup tables hold views into owned strings; moving keeps them valid,
  // copying would not.
  Corpus(const Corpus&) = delete;
  Corpus& operator=(const Corpus&) = delete;
  Corpus(Corpus&&) = default;
  Corpus& operator=(Corpus&&) = default;

  std::span<const PublicationRecord> records() const { return records_; }
  std::size_t size() const { return records_.size(); }
  YearRange year_range() const { return year_range_; }

  // Eligible broad fields of a record, ascending.
  std::span<const BroadField> fields_of(RecordId record) const;
  std::span<const AuthorId> authors_of(RecordId record) const;
  bool is_corresponding(RecordId record, AuthorId author) const;

  std::size_t author_count() const { return author_names_.size(); }
  const std::string& author_name(AuthorId author) const {
    return author_names_[author];
  }
  std::optional<AuthorId> find_author(std::string_view author_id) const;
  // Ascending record id.
  std::span<const RecordId> records_of_author(AuthorId author) const;

  std::size_t journal_count() const { return journal_names_.size(); }
  const std::string& journal_name(JournalId journal) const {
    return journal_names_[journal];
  }
  std::optional<JournalId> find_journal(std::string_view journal_id) const;
  JournalId journal_of(RecordId record) const { return record_journal_[record]; }

  // Sorted by (journal id, year).
  std::span<const JournalYearGroup> journal_year_groups() const {
    return journal_year_groups_;
  }
  // Sorted by (field, year). Records without eligible fields appear nowhere.
  std::span<const FieldYearGroup> field_year_groups() const {
    return field_year_groups_;
  }

  bool operator==(const Corpus& other) const {
    return year_range_ == other.year_range_ && records_ == other.records_;
  }

 private:
  void build_indexes();

  std::vector<PublicationRecord> records_;
  YearRange year_range_;

  // CSR: per-record eligible fields.
  std::vector<std::uint32_t> field_offsets_;
  std::vector<BroadField> fields_;
  // CSR: per-record authors (input order) and corresponding authors (sorted).
  std::vector<std::uint32_t> author_offsets_;
  std::vector<AuthorId> record_authors_;
  std::vector<std::uint32_t> corresponding_offsets_;
  std::vector<AuthorId> record_corresponding_;
  // CSR: per-author records.
  std::vector<std::uint32_t> author_record_offsets_;
  std::vector<RecordId> author_records_;

  std::vector<std::string> author_names_;
  std::unordered_map<std::string_view, AuthorId> author_lookup_;
  std::vector<std::string> journal_names_;
  std::unordered_map<std::string_view, JournalId> journal_lookup_;
  std::vector<JournalId> record_journal_;

  std::vector<JournalYearGroup> journal_year_groups_;
  std::vector<FieldYearGroup> field_year_groups_;
};

struct IngestResult {
  Corpus corpus;
  IngestStats stats;
};

IngestResult ingest(std::istream& in, InputFormat format,
                    const IngestOptions& options);
IngestResult ingest(std::span<const InputRecord> records,
                    const IngestOptions& options);

InputRecord to_input_record(const PublicationRecord& record);

// JSON lines, one record per line, in corpus order.
void serialize(const Corpus& corpus, std::ostream& out);
// SHA-256 hex of serialize() output.
std::string corpus_digest(const Corpus& corpus);

// "reason,count" rows: read, kept, doc_type, year, malformed,
// kept_without_field.
void write_ingest_report(const IngestStats& stats, std::ostream& out);

}  // namespace talentscope

#endif  // TALENTSCOPE_CORPUS_H_
