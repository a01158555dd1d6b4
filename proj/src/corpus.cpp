#include "corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

#include "error.hpp"
#include "json.hpp"

namespace rsg {

namespace {

bool is_alnum(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }
bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_upper(char c) { return std::isupper(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && is_space(s[b])) ++b;
  while (e > b && is_space(s[e - 1])) --e;
  return std::string(s.substr(b, e - b));
}

// Abbreviations whose trailing period does not end a sentence.
bool is_blocked_abbreviation(std::string_view text, std::size_t period_pos) {
  static const std::vector<std::string> kBlocklist = {
      "fig", "et al", "e.g", "i.e", "vs", "dr", "no",
  };
  for (const auto& abbr : kBlocklist) {
    if (period_pos < abbr.size()) continue;
    std::size_t start = period_pos - abbr.size();
    bool match = true;
    for (std::size_t i = 0; i < abbr.size(); ++i) {
      char a = abbr[i];
      char b = static_cast<char>(std::tolower(static_cast<unsigned char>(text[start + i])));
      if (a != b) { match = false; break; }
    }
    if (!match) continue;
    // Must be a whole word: preceded by non-alphanumeric or string start.
    if (start > 0 && is_alnum(text[start - 1])) continue;
    return true;
  }
  return false;
}

}  // namespace

const char* section_name(Section s) {
  switch (s) {
    case Section::Abstract: return "abstract";
    case Section::Introduction: return "introduction";
    case Section::Other: return "other";
  }
  return "other";
}

std::optional<Section> section_from_name(std::string_view name) {
  if (name == "abstract") return Section::Abstract;
  if (name == "introduction") return Section::Introduction;
  if (name == "other") return Section::Other;
  return std::nullopt;
}

const char* selector_name(SectionSelector s) {
  switch (s) {
    case SectionSelector::Abs: return "abs";
    case SectionSelector::AbsIntro: return "abs+intro";
    case SectionSelector::FullPaper: return "full";
  }
  return "abs+intro";
}

std::optional<SectionSelector> selector_from_name(std::string_view name) {
  if (name == "abs") return SectionSelector::Abs;
  if (name == "abs+intro") return SectionSelector::AbsIntro;
  if (name == "full" || name == "fullpaper") return SectionSelector::FullPaper;
  return std::nullopt;
}

int BowVector::total() const {
  int t = 0;
  for (int c : counts) t += c;
  return t;
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char c : text) {
    if (is_alnum(c)) {
      cur.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    } else if (!cur.empty()) {
      tokens.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));
  return tokens;
}

std::vector<std::string> split_sentences(std::string_view text) {
  std::vector<std::string> pieces;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c != '.' && c != '!' && c != '?') continue;
    // Boundary requires whitespace then a capital letter.
    std::size_t j = i + 1;
    while (j < text.size() && is_space(text[j])) ++j;
    if (j == i + 1 || j >= text.size() || !is_upper(text[j])) {
      // No whitespace after the terminator, or next visible char not capital.
      // Still check the digit rule below applies only to '.' anyway.
      continue;
    }
    if (c == '.') {
      if (is_blocked_abbreviation(text, i)) continue;
      if (i > 0 && is_digit(text[i - 1]) && is_digit(text[j])) continue;
    }
    std::string piece = trim(text.substr(start, i + 1 - start));
    if (!piece.empty()) pieces.push_back(std::move(piece));
    start = j;
    i = j - 1;
  }
  std::string tail = trim(text.substr(start));
  if (!tail.empty()) pieces.push_back(std::move(tail));

  // Glue fragments without any token onto their neighbor so every sentence
  // has token_count >= 1 and the pieces still partition the text.
  std::vector<std::string> out;
  for (auto& p : pieces) {
    if (!tokenize(p).empty() || out.empty()) {
      out.push_back(std::move(p));
    } else {
      out.back() += " " + p;
    }
  }
  if (out.size() == 1 && tokenize(out[0]).empty()) out.clear();
  return out;
}

namespace {

Document parse_document(const nlohmann::json& j) {
  if (!j.contains("paper_id") || !j["paper_id"].is_string()) {
    throw Error(ErrorCode::Format, "paper record missing string 'paper_id'");
  }
  Document doc;
  doc.paper_id = j["paper_id"].get<std::string>();
  if (j.contains("sentences")) {
    // Pre-segmented form: parallel arrays of sentence texts and labels.
    const auto& sents = j["sentences"];
    if (!sents.is_array()) {
      throw Error(ErrorCode::Format, "paper '" + doc.paper_id + "': 'sentences' must be an array");
    }
    std::vector<std::string> labels;
    if (j.contains("sentence_sections")) {
      for (const auto& s : j["sentence_sections"]) labels.push_back(s.get<std::string>());
      if (labels.size() != sents.size()) {
        throw Error(ErrorCode::Format, "paper '" + doc.paper_id +
                                           "': 'sentence_sections' length differs from 'sentences'");
      }
    } else {
      labels.assign(sents.size(), "abstract");
    }
    doc.is_presegmented = true;
    std::map<Section, std::string> joined;
    for (std::size_t i = 0; i < sents.size(); ++i) {
      if (!sents[i].is_string()) {
        throw Error(ErrorCode::Format, "paper '" + doc.paper_id + "': sentence must be a string");
      }
      auto sec = section_from_name(labels[i]);
      if (!sec) {
        throw Error(ErrorCode::Format,
                    "paper '" + doc.paper_id + "': unknown section label '" + labels[i] + "'");
      }
      std::string text = sents[i].get<std::string>();
      doc.presegmented.emplace_back(text, *sec);
      auto& agg = joined[*sec];
      if (!agg.empty()) agg += " ";
      agg += text;
    }
    doc.sections = std::move(joined);
  } else {
    for (Section sec : {Section::Abstract, Section::Introduction, Section::Other}) {
      const char* key = section_name(sec);
      if (j.contains(key)) {
        if (!j[key].is_string()) {
          throw Error(ErrorCode::Format,
                      "paper '" + doc.paper_id + "': section '" + key + "' must be a string");
        }
        doc.sections[sec] = j[key].get<std::string>();
      }
    }
  }
  return doc;
}

}  // namespace

ResearcherCorpus load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open corpus file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Format, "malformed corpus JSON in " + path + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("researcher_id") || !j.contains("papers")) {
    throw Error(ErrorCode::Format, "corpus file must contain 'researcher_id' and 'papers'");
  }
  ResearcherCorpus corpus;
  corpus.researcher_id = j["researcher_id"].get<std::string>();
  if (j.contains("reference_statement") && !j["reference_statement"].is_null()) {
    corpus.reference_statement = j["reference_statement"].get<std::string>();
  }
  std::set<std::string> seen;
  for (const auto& pj : j["papers"]) {
    Document doc = parse_document(pj);
    if (!seen.insert(doc.paper_id).second) {
      throw Error(ErrorCode::Format, "duplicate paper id: " + doc.paper_id);
    }
    corpus.papers.push_back(std::move(doc));
  }
  return corpus;
}

namespace {

bool selector_includes(SectionSelector sel, Section sec) {
  switch (sel) {
    case SectionSelector::Abs: return sec == Section::Abstract;
    case SectionSelector::AbsIntro:
      return sec == Section::Abstract || sec == Section::Introduction;
    case SectionSelector::FullPaper: return true;
  }
  return false;
}

}  // namespace

void segment_document(Document& doc, SectionSelector selector) {
  doc.sentences.clear();
  int position = 0;
  auto push = [&](const std::string& text, Section sec) {
    int tc = static_cast<int>(tokenize(text).size());
    if (tc == 0) return;
    doc.sentences.push_back(SentenceRecord{text, doc.paper_id, sec, position++, tc});
  };
  for (Section sec : {Section::Abstract, Section::Introduction, Section::Other}) {
    if (!selector_includes(selector, sec)) continue;
    if (doc.is_presegmented) {
      for (const auto& [text, s] : doc.presegmented) {
        if (s == sec) push(text, sec);
      }
    } else {
      auto it = doc.sections.find(sec);
      if (it == doc.sections.end()) continue;
      for (const auto& sent : split_sentences(it->second)) push(sent, sec);
    }
  }
}

void segment_corpus(ResearcherCorpus& corpus, SectionSelector selector) {
  for (auto& doc : corpus.papers) segment_document(doc, selector);
}

Vocabulary build_vocabulary(const ResearcherCorpus& corpus, std::size_t size,
                            const std::set<std::string>& stopwords) {
  if (size < 1) throw Error(ErrorCode::InvalidArgument, "vocabulary size must be >= 1");
  std::unordered_map<std::string, long> freq;
  for (const auto& doc : corpus.papers) {
    for (const auto& sent : doc.sentences) {
      for (auto& tok : tokenize(sent.text)) {
        if (stopwords.count(tok)) continue;
        ++freq[tok];
      }
    }
  }
  if (freq.empty()) {
    throw Error(ErrorCode::InvalidArgument, "corpus contains no non-stopword tokens");
  }
  std::vector<std::pair<std::string, long>> items(freq.begin(), freq.end());
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (items.size() > size) items.resize(size);
  Vocabulary vocab;
  vocab.words.reserve(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) {
    vocab.words.push_back(items[i].first);
    vocab.index[items[i].first] = static_cast<int>(i);
  }
  return vocab;
}

BowVector to_bow(const std::vector<std::string>& tokens, const Vocabulary& vocab) {
  BowVector bow;
  bow.counts.assign(vocab.words.size(), 0);
  for (const auto& tok : tokens) {
    auto it = vocab.index.find(tok);
    if (it != vocab.index.end()) ++bow.counts[it->second];
  }
  return bow;
}

BowVector to_bow(std::string_view text, const Vocabulary& vocab) {
  return to_bow(tokenize(text), vocab);
}

}  // namespace rsg
