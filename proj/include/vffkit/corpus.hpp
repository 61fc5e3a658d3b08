#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace vffkit {

enum class AlternationClass { none, dative_to, dative_for, locative, np_sc };

std::string alternation_class_name(AlternationClass c);
AlternationClass alternation_class_from_name(const std::string& name);

// One verb lexicon row. `forms` is ordered by role:
//   [0] base, [1] third person singular, [2] past, [3] past participle,
//   [4] gerund.
// Shorter lists are accepted (the base form is always present); passive
// detection needs slot [3] and quietly stands down without it.
struct VerbEntry {
  std::string lemma;
  std::vector<std::string> forms;
  AlternationClass alternation_class = AlternationClass::none;
  std::set<std::string> locative_preps;

  bool has_form(const std::string& folded_token) const;
  // True when the token is this verb's past participle (slot 3).
  bool is_past_participle(const std::string& folded_token) const;

  bool operator==(const VerbEntry&) const = default;
};

struct ContextEntry {
  int number = 0;
  std::string text;

  bool operator==(const ContextEntry&) const = default;
};

struct SentenceRecord {
  long id = 0;
  std::string verb_lemma;
  std::optional<int> context_number;
  std::string text;
  std::string batch_id;

  bool operator==(const SentenceRecord&) const = default;
};

// --- loading / storing -------------------------------------------------
//
// verbs.tsv     columns: lemma, forms (comma-joined), alternation_class,
//               locative_preps (comma-joined, may be empty)
// contexts.tsv  columns: number, context
// sentences.jsonl  objects: {id, verb, context_number, text, batch_id}
//
// Loaders reject duplicate ids (naming both lines) and malformed lines
// (naming line and reason). Order is preserved.

std::vector<VerbEntry> load_verbs(const std::string& path);
std::vector<ContextEntry> load_contexts(const std::string& path);
std::vector<SentenceRecord> load_sentences(const std::string& path);

void store_verbs(const std::vector<VerbEntry>& verbs, const std::string& path);
void store_contexts(const std::vector<ContextEntry>& contexts,
                    const std::string& path);
void store_sentences(const std::vector<SentenceRecord>& records,
                     const std::string& path);

// Index verbs by lemma; duplicate lemmas are a data error.
std::map<std::string, VerbEntry> verb_index(const std::vector<VerbEntry>& verbs);

// Returns the ids of sentences whose verb_lemma is missing from the lexicon.
// Violations are reported to the caller, never dropped.
std::vector<long> unresolved_verb_refs(
    const std::vector<SentenceRecord>& sentences,
    const std::map<std::string, VerbEntry>& verbs);

// Naive regular inflection (base, 3sg, past, past participle, gerund).
// No consonant doubling; irregular verbs belong in an override table.
std::vector<std::string> regular_forms(const std::string& lemma);

// Irregulars file: TSV with header lemma<TAB>forms, forms comma-joined in
// role order. Returned map is lemma -> forms.
std::map<std::string, std::vector<std::string>> load_irregular_forms(
    const std::string& path);

}  // namespace vffkit
