#include "artm/corpus.hpp"

namespace artm {

namespace {

// Articles, connectives, conjunctions, auxiliary/common verbs, pronouns,
// prepositions and the single-letter residue of split contractions.
constexpr const char* kDefaultStopWords[] = {
    "a",       "about",   "above",  "after",  "again",  "against", "all",    "also",
    "am",      "an",      "and",    "any",    "are",    "as",      "at",     "be",
    "because", "been",    "before", "being",  "below",  "between", "both",   "but",
    "by",      "can",     "could",  "d",      "did",    "do",      "does",   "doing",
    "done",    "down",    "during", "each",   "few",    "for",     "from",   "further",
    "had",     "has",     "have",   "having", "he",     "her",     "here",   "hers",
    "him",     "his",     "how",    "i",      "if",     "in",      "into",   "is",
    "it",      "its",     "just",   "ll",     "m",      "may",     "me",     "might",
    "more",    "most",    "must",   "my",     "no",     "nor",     "not",    "now",
    "o",       "of",      "off",    "on",     "once",   "only",    "or",     "other",
    "our",     "ours",    "out",    "over",   "own",    "re",      "s",      "same",
    "shall",   "she",     "should", "so",     "some",   "such",    "t",      "than",
    "that",    "the",     "their",  "theirs", "them",   "then",    "there",  "these",
    "they",    "this",    "those",  "through", "to",    "too",     "under",  "until",
    "up",      "ve",      "very",   "was",    "we",     "were",    "what",   "when",
    "where",   "which",   "while",  "who",    "whom",   "why",     "will",   "with",
    "would",   "y",       "you",    "your",   "yours",
};

}  // namespace

StopWordList StopWordList::defaults() {
  StopWordList list;
  for (const char* word : kDefaultStopWords) list.insert(word);
  return list;
}

}  // namespace artm
