#ifndef CLINEX_PREPROCESS_HPP
#define CLINEX_PREPROCESS_HPP

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "clinex/sentence.hpp"

namespace clinex {

// Abbreviations whose trailing period never ends a sentence ("dr.",
// "b.i.d."). Entries are lowercase and keep their final dot.
class AbbreviationList {
 public:
  // The built-in set of common clinical and honorific abbreviations.
  static AbbreviationList defaults();

  // Loads one abbreviation per line; '#' starts a comment. Loaded entries
  // extend the built-in set.
  void load_file(const std::string& path);

  void add(std::string abbreviation);
  bool contains(std::string_view word) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::set<std::string, std::less<>> entries_;
};

// Splits note text into sentences. Boundaries are '.', '!', ';' and newline
// sequences; '?' never ends a sentence, and periods inside decimals,
// abbreviations, and dotted tokens are guarded. Tokens are left empty.
std::vector<SentenceBuffer> split_sentences(std::string_view note,
                                            const AbbreviationList& abbrevs);

// Fills `sentence.tokens`: whitespace-separated, with , ? + ( ) / : . ; !
// split into standalone tokens (periods between digits or letters stay
// inside the token). Token text is the lowercased surface form.
void tokenize(SentenceBuffer& sentence);

// Convenience: split and tokenize in one call.
std::vector<SentenceBuffer> preprocess_note(std::string_view note,
                                            const AbbreviationList& abbrevs);

}  // namespace clinex

#endif  // CLINEX_PREPROCESS_HPP
