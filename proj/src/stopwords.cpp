#include "corpus.hpp"

namespace rsg {

// Bundled stopword list, v1. Kept in the library so binaries stay
// relocatable; a custom list can be supplied through the pipeline config.
const std::set<std::string>& default_stopwords() {
  static const std::set<std::string> kStopwords = {
      "a",       "about",   "above",  "after",   "again",   "against", "all",
      "am",      "an",      "and",    "any",     "are",     "as",      "at",
      "be",      "because", "been",   "before",  "being",   "below",   "between",
      "both",    "but",     "by",     "can",     "cannot",  "could",   "did",
      "do",      "does",    "doing",  "down",    "during",  "each",    "few",
      "for",     "from",    "further","had",     "has",     "have",    "having",
      "he",      "her",     "here",   "hers",    "herself", "him",     "himself",
      "his",     "how",     "i",      "if",      "in",      "into",    "is",
      "it",      "its",     "itself", "just",    "me",      "more",    "most",
      "my",      "myself",  "no",     "nor",     "not",     "now",     "of",
      "off",     "on",      "once",   "only",    "or",      "other",   "our",
      "ours",    "ourselves","out",   "over",    "own",     "same",    "she",
      "should",  "so",      "some",   "such",    "than",    "that",    "the",
      "their",   "theirs",  "them",   "themselves","then",  "there",   "these",
      "they",    "this",    "those",  "through", "to",      "too",     "under",
      "until",   "up",      "upon",   "us",      "very",    "was",     "we",
      "were",    "what",    "when",   "where",   "which",   "while",   "who",
      "whom",    "why",     "will",   "with",    "would",   "you",     "your",
      "yours",   "yourself","yourselves", "also", "been",   "may",     "might",
      "must",    "shall",   "since",  "still",   "via",     "per",     "e",
      "g",       "i",       "et",     "al",      "etc",     "ie",      "eg",
  };
  return kStopwords;
}

}  // namespace rsg
