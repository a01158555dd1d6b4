#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace rsg {

enum class Section { Abstract = 0, Introduction = 1, Other = 2 };

const char* section_name(Section s);
std::optional<Section> section_from_name(std::string_view name);

// Which sections feed sentence segmentation / generation.
enum class SectionSelector { Abs, AbsIntro, FullPaper };

const char* selector_name(SectionSelector s);
std::optional<SectionSelector> selector_from_name(std::string_view name);

struct SentenceRecord {
  std::string text;
  std::string paper_id;
  Section section = Section::Abstract;
  int position = 0;     // index within the paper, contiguous from 0
  int token_count = 0;  // tokenizer count on text, always >= 1
};

struct BowVector {
  std::vector<int> counts;

  int total() const;
};

struct Document {
  std::string paper_id;
  std::map<Section, std::string> sections;
  std::vector<SentenceRecord> sentences;
  std::optional<BowVector> bow;

  // Set when the corpus file supplied pre-segmented sentences.
  std::vector<std::pair<std::string, Section>> presegmented;
  bool is_presegmented = false;
};

struct ResearcherCorpus {
  std::string researcher_id;
  std::vector<Document> papers;
  std::optional<std::string> reference_statement;
};

struct Vocabulary {
  std::vector<std::string> words;  // sorted by (frequency desc, lexicographic asc)
  std::unordered_map<std::string, int> index;

  int size() const { return static_cast<int>(words.size()); }
};

// Lowercase, split on any run of non-alphanumeric characters. Length-1
// tokens are kept.
std::vector<std::string> tokenize(std::string_view text);

// Rule-based splitter on {. ! ?} followed by whitespace and a capital
// letter, with an abbreviation blocklist and a no-split rule for
// digit.digit. The returned pieces partition the input text.
std::vector<std::string> split_sentences(std::string_view text);

ResearcherCorpus load_corpus(const std::string& path);

// Populate doc.sentences in reading order (abstract, introduction, other)
// from the sections named by `selector`. Positions are contiguous from 0.
void segment_document(Document& doc, SectionSelector selector = SectionSelector::AbsIntro);
void segment_corpus(ResearcherCorpus& corpus, SectionSelector selector = SectionSelector::AbsIntro);

const std::set<std::string>& default_stopwords();

Vocabulary build_vocabulary(const ResearcherCorpus& corpus, std::size_t size,
                            const std::set<std::string>& stopwords);

BowVector to_bow(const std::vector<std::string>& tokens, const Vocabulary& vocab);
BowVector to_bow(std::string_view text, const Vocabulary& vocab);

}  // namespace rsg
