#ifndef CLINEX_SENTENCE_HPP
#define CLINEX_SENTENCE_HPP

#include <string>
#include <vector>

#include "clinex/semantic_object.hpp"
#include "clinex/types.hpp"

namespace clinex {

// One sentence of a note, before and after tokenization.
struct SentenceBuffer {
  std::string raw;
  Span span;
  std::vector<Token> tokens;
};

// A dictionary walk that consumed `partial_depth` tokens without completing a
// phrase. Retained by NER as a conjunction-expansion candidate.
struct MatchCandidate {
  int start = 0;
  int end = 0;
  int partial_depth = 0;
};

// NER output for one sentence: tokens, recognized objects in left-to-right
// order, and stalled partial matches.
struct AnnotatedSentence {
  SentenceBuffer sentence;
  std::vector<SemanticObject> objects;
  std::vector<MatchCandidate> partials;
};

}  // namespace clinex

#endif  // CLINEX_SENTENCE_HPP
