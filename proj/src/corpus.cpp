#include "vffkit/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <unordered_map>

#include "vffkit/errors.hpp"
#include "vffkit/jsonl.hpp"
#include "vffkit/textutil.hpp"

namespace vffkit {

namespace {

const char* kVerbsHeader = "lemma\tforms\talternation_class\tlocative_preps";
const char* kContextsHeader = "number\tcontext";

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw_data("cannot open file: " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

[[noreturn]] void malformed(const std::string& path, size_t lineno,
                            const std::string& reason) {
  throw_data(path + ":" + std::to_string(lineno) + ": " + reason);
}

std::vector<std::string> comma_list(const std::string& field) {
  std::vector<std::string> out;
  for (auto& part : split(field, ',')) {
    std::string t = trim(part);
    if (!t.empty()) out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

std::string alternation_class_name(AlternationClass c) {
  switch (c) {
    case AlternationClass::none: return "none";
    case AlternationClass::dative_to: return "dative_to";
    case AlternationClass::dative_for: return "dative_for";
    case AlternationClass::locative: return "locative";
    case AlternationClass::np_sc: return "np_sc";
  }
  return "none";
}

AlternationClass alternation_class_from_name(const std::string& name) {
  if (name == "none" || name.empty()) return AlternationClass::none;
  if (name == "dative_to") return AlternationClass::dative_to;
  if (name == "dative_for") return AlternationClass::dative_for;
  if (name == "locative") return AlternationClass::locative;
  if (name == "np_sc") return AlternationClass::np_sc;
  throw_data("unknown alternation class: " + name);
}

bool VerbEntry::has_form(const std::string& folded_token) const {
  return std::find(forms.begin(), forms.end(), folded_token) != forms.end();
}

bool VerbEntry::is_past_participle(const std::string& folded_token) const {
  return forms.size() >= 4 && forms[3] == folded_token;
}

std::vector<VerbEntry> load_verbs(const std::string& path) {
  auto lines = read_lines(path);
  if (lines.empty() || trim(lines[0]) != kVerbsHeader)
    malformed(path, 1, std::string("expected header '") + kVerbsHeader + "'");

  std::vector<VerbEntry> out;
  std::unordered_map<std::string, size_t> seen;  // lemma -> line
  for (size_t i = 1; i < lines.size(); ++i) {
    if (trim(lines[i]).empty()) continue;
    auto fields = split(lines[i], '\t');
    if (fields.size() != 4)
      malformed(path, i + 1, "expected 4 tab-separated fields, got " +
                                 std::to_string(fields.size()));
    VerbEntry v;
    v.lemma = trim(fields[0]);
    if (v.lemma.empty()) malformed(path, i + 1, "empty lemma");
    if (v.lemma != to_lower(v.lemma))
      malformed(path, i + 1, "lemma must be lowercase: " + v.lemma);
    v.forms = comma_list(fields[1]);
    if (v.forms.empty()) v.forms.push_back(v.lemma);
    if (!v.has_form(v.lemma))
      malformed(path, i + 1, "forms must contain the lemma: " + v.lemma);
    v.alternation_class = alternation_class_from_name(trim(fields[2]));
    for (auto& p : comma_list(fields[3])) v.locative_preps.insert(to_lower(p));
    const bool is_locative = v.alternation_class == AlternationClass::locative;
    if (is_locative && v.locative_preps.empty())
      malformed(path, i + 1, "locative verb without locative_preps: " + v.lemma);
    if (!is_locative && !v.locative_preps.empty())
      malformed(path, i + 1,
                "locative_preps given for non-locative verb: " + v.lemma);
    auto [it, inserted] = seen.emplace(v.lemma, i + 1);
    if (!inserted)
      throw_data(path + ": duplicate lemma '" + v.lemma + "' on lines " +
                 std::to_string(it->second) + " and " + std::to_string(i + 1));
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<ContextEntry> load_contexts(const std::string& path) {
  auto lines = read_lines(path);
  if (lines.empty() || trim(lines[0]) != kContextsHeader)
    malformed(path, 1, std::string("expected header '") + kContextsHeader + "'");

  std::vector<ContextEntry> out;
  std::unordered_map<int, size_t> seen;
  for (size_t i = 1; i < lines.size(); ++i) {
    if (trim(lines[i]).empty()) continue;
    auto fields = split(lines[i], '\t');
    if (fields.size() != 2)
      malformed(path, i + 1, "expected 2 tab-separated fields, got " +
                                 std::to_string(fields.size()));
    ContextEntry c;
    try {
      c.number = std::stoi(trim(fields[0]));
    } catch (const std::exception&) {
      malformed(path, i + 1, "context number is not an integer: " + fields[0]);
    }
    if (c.number <= 0) malformed(path, i + 1, "context number must be positive");
    c.text = trim(fields[1]);
    if (c.text.empty()) malformed(path, i + 1, "empty context text");
    auto [it, inserted] = seen.emplace(c.number, i + 1);
    if (!inserted)
      throw_data(path + ": duplicate context number " +
                 std::to_string(c.number) + " on lines " +
                 std::to_string(it->second) + " and " + std::to_string(i + 1));
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<SentenceRecord> load_sentences(const std::string& path) {
  auto rows = read_jsonl(path);
  std::vector<SentenceRecord> out;
  std::unordered_map<long, size_t> seen;  // id -> position (1-based data line)
  size_t lineno = 0;
  for (const auto& row : rows) {
    ++lineno;
    if (!row.is_object()) malformed(path, lineno, "expected JSON object");
    SentenceRecord r;
    try {
      r.id = row.at("id").get<long>();
      r.verb_lemma = row.at("verb").get<std::string>();
      if (row.contains("context_number") && !row["context_number"].is_null())
        r.context_number = row["context_number"].get<int>();
      r.text = row.at("text").get<std::string>();
      r.batch_id = row.value("batch_id", std::string());
    } catch (const json::exception& e) {
      malformed(path, lineno, std::string("bad sentence record: ") + e.what());
    }
    if (r.text.empty()) malformed(path, lineno, "empty sentence text");
    if (r.verb_lemma.empty()) malformed(path, lineno, "empty verb reference");
    auto [it, inserted] = seen.emplace(r.id, lineno);
    if (!inserted)
      throw_data(path + ": duplicate sentence id " + std::to_string(r.id) +
                 " on lines " + std::to_string(it->second) + " and " +
                 std::to_string(lineno));
    out.push_back(std::move(r));
  }
  return out;
}

void store_verbs(const std::vector<VerbEntry>& verbs, const std::string& path) {
  if (verbs.empty()) throw_data("store_verbs: empty record list");
  std::string out = std::string(kVerbsHeader) + "\n";
  for (const auto& v : verbs) {
    std::vector<std::string> preps(v.locative_preps.begin(),
                                   v.locative_preps.end());
    out += v.lemma;
    out += '\t';
    out += join(v.forms, ",");
    out += '\t';
    out += alternation_class_name(v.alternation_class);
    out += '\t';
    out += join(preps, ",");
    out += '\n';
  }
  write_file(path, out);
}

void store_contexts(const std::vector<ContextEntry>& contexts,
                    const std::string& path) {
  if (contexts.empty()) throw_data("store_contexts: empty record list");
  std::string out = std::string(kContextsHeader) + "\n";
  for (const auto& c : contexts) {
    out += std::to_string(c.number);
    out += '\t';
    out += c.text;
    out += '\n';
  }
  write_file(path, out);
}

void store_sentences(const std::vector<SentenceRecord>& records,
                     const std::string& path) {
  if (records.empty()) throw_data("store_sentences: empty record list");
  std::vector<json> rows;
  rows.reserve(records.size());
  for (const auto& r : records) {
    json j;
    j["id"] = r.id;
    j["verb"] = r.verb_lemma;
    if (r.context_number)
      j["context_number"] = *r.context_number;
    else
      j["context_number"] = nullptr;
    j["text"] = r.text;
    j["batch_id"] = r.batch_id;
    rows.push_back(std::move(j));
  }
  write_jsonl(path, rows);
}

std::map<std::string, VerbEntry> verb_index(
    const std::vector<VerbEntry>& verbs) {
  std::map<std::string, VerbEntry> idx;
  for (const auto& v : verbs) {
    if (!idx.emplace(v.lemma, v).second)
      throw_data("duplicate verb lemma: " + v.lemma);
  }
  return idx;
}

std::vector<long> unresolved_verb_refs(
    const std::vector<SentenceRecord>& sentences,
    const std::map<std::string, VerbEntry>& verbs) {
  std::vector<long> bad;
  for (const auto& s : sentences)
    if (!verbs.count(s.verb_lemma)) bad.push_back(s.id);
  return bad;
}

std::vector<std::string> regular_forms(const std::string& lemma) {
  const std::string base = to_lower(lemma);
  auto ends_with = [&](const char* suf) {
    std::string_view s(suf);
    return base.size() >= s.size() &&
           base.compare(base.size() - s.size(), s.size(), s) == 0;
  };
  auto consonant_y = [&]() {
    if (base.size() < 2 || base.back() != 'y') return false;
    char prev = base[base.size() - 2];
    return std::string("aeiou").find(prev) == std::string::npos;
  };

  std::string third;
  if (ends_with("s") || ends_with("sh") || ends_with("ch") || ends_with("x") ||
      ends_with("z") || ends_with("o")) {
    third = base + "es";
  } else if (consonant_y()) {
    third = base.substr(0, base.size() - 1) + "ies";
  } else {
    third = base + "s";
  }

  std::string past;
  if (ends_with("e")) {
    past = base + "d";
  } else if (consonant_y()) {
    past = base.substr(0, base.size() - 1) + "ied";
  } else {
    past = base + "ed";
  }

  std::string gerund;
  if (ends_with("ie")) {
    gerund = base.substr(0, base.size() - 2) + "ying";
  } else if (ends_with("e") && !ends_with("ee")) {
    gerund = base.substr(0, base.size() - 1) + "ing";
  } else {
    gerund = base + "ing";
  }

  return {base, third, past, past, gerund};
}

std::map<std::string, std::vector<std::string>> load_irregular_forms(
    const std::string& path) {
  auto lines = read_lines(path);
  if (lines.empty() || trim(lines[0]) != "lemma\tforms")
    malformed(path, 1, "expected header 'lemma\tforms'");
  std::map<std::string, std::vector<std::string>> out;
  for (size_t i = 1; i < lines.size(); ++i) {
    if (trim(lines[i]).empty()) continue;
    auto fields = split(lines[i], '\t');
    if (fields.size() != 2) malformed(path, i + 1, "expected 2 fields");
    auto forms = comma_list(fields[1]);
    if (forms.empty()) malformed(path, i + 1, "empty forms list");
    out[trim(fields[0])] = std::move(forms);
  }
  return out;
}

}  // namespace vffkit
