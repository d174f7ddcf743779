#ifndef CLINEX_NER_HPP
#define CLINEX_NER_HPP

#include "clinex/lexicon.hpp"
#include "clinex/sentence.hpp"

namespace clinex {

// Greedy left-to-right scan: at each position take the longest dictionary
// phrase and resume past it, else advance one token. Stalled walks of depth
// >= 1 are kept as partials for conjunction expansion.
AnnotatedSentence recognize(const Lexicon& lexicon, SentenceBuffer sentence);

// Rewrites conjunction groups `X1 (, X2)* (,)? and|or Xn` by distributing a
// shared suffix of Xn and/or a shared prefix of X1 across the items, e.g.
// "no mediastinal, hilar, or axillary lymphadenopathy" gains objects for
// mediastinal- and hilar-lymphadenopathy. A rewrite fires only when every
// generated phrase is in the lexicon; otherwise the sentence is unchanged.
void expand_conjunctions(const Lexicon& lexicon, AnnotatedSentence& annotated);

}  // namespace clinex

#endif  // CLINEX_NER_HPP
