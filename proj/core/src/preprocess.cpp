#include "clinex/preprocess.hpp"

#include <cctype>
#include <fstream>

namespace clinex {

namespace {

bool is_space(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}

bool is_alnum(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0;
}

char to_lower(char c) {
  return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
}

std::string lowercase(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) out.push_back(to_lower(c));
  return out;
}

// Maximal run of [alnum .] ending at and including the period at `dot`,
// lowercased. Used to match abbreviation entries like "dr." or "b.i.d.".
std::string token_ending_at(std::string_view text, std::size_t dot) {
  std::size_t begin = dot;
  while (begin > 0 && (is_alnum(text[begin - 1]) || text[begin - 1] == '.')) {
    --begin;
  }
  return lowercase(text.substr(begin, dot - begin + 1));
}

// Last word before `pos`, skipping trailing whitespace.
std::string word_before(std::string_view text, std::size_t pos) {
  std::size_t end = pos;
  while (end > 0 && is_space(text[end - 1])) --end;
  std::size_t begin = end;
  while (begin > 0 && is_alnum(text[begin - 1])) --begin;
  return lowercase(text.substr(begin, end - begin));
}

bool line_continues(std::string_view note, std::size_t newline_pos) {
  std::size_t end = newline_pos;
  while (end > 0 && is_space(note[end - 1])) --end;
  if (end == 0) return true;  // blank line head, nothing to end
  if (note[end - 1] == ',') return true;
  const std::string word = word_before(note, end);
  return word == "and" || word == "or" || word == "but";
}

constexpr std::string_view kAlwaysSplit = ",?+()/:;!";

}  // namespace

AbbreviationList AbbreviationList::defaults() {
  AbbreviationList list;
  for (const char* entry :
       {"dr.", "mr.", "mrs.", "ms.", "prof.", "st.", "jr.", "sr.", "vs.",
        "e.g.", "i.e.", "b.i.d.", "t.i.d.", "q.i.d.", "q.d.", "q.h.s.",
        "p.o.", "p.r.n.", "a.m.", "p.m."}) {
    list.add(entry);
  }
  return list;
}

void AbbreviationList::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open abbreviation file: " + path);
  }
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::size_t begin = 0, end = line.size();
    while (begin < end && is_space(line[begin])) ++begin;
    while (end > begin && is_space(line[end - 1])) --end;
    if (begin < end) add(lowercase(line.substr(begin, end - begin)));
  }
}

void AbbreviationList::add(std::string abbreviation) {
  entries_.insert(std::move(abbreviation));
}

bool AbbreviationList::contains(std::string_view word) const {
  return entries_.find(word) != entries_.end();
}

std::vector<SentenceBuffer> split_sentences(std::string_view note,
                                            const AbbreviationList& abbrevs) {
  std::vector<SentenceBuffer> sentences;

  auto emit = [&](std::size_t begin, std::size_t end) {
    while (begin < end && is_space(note[begin])) ++begin;
    while (end > begin && is_space(note[end - 1])) --end;
    if (begin >= end) return;
    SentenceBuffer sentence;
    sentence.raw = std::string(note.substr(begin, end - begin));
    sentence.span.start = static_cast<int>(begin);
    sentence.span.end = static_cast<int>(end);
    sentence.span.sentence_index = static_cast<int>(sentences.size());
    sentences.push_back(std::move(sentence));
  };

  std::size_t start = 0;
  for (std::size_t i = 0; i < note.size(); ++i) {
    const char c = note[i];
    if (c == '.') {
      const bool prev_digit = i > 0 && std::isdigit(static_cast<unsigned char>(note[i - 1]));
      const bool next_digit =
          i + 1 < note.size() && std::isdigit(static_cast<unsigned char>(note[i + 1]));
      if (prev_digit && next_digit) continue;  // decimal number
      if (i + 1 < note.size() && is_alnum(note[i + 1])) continue;  // dotted token
      if (abbrevs.contains(token_ending_at(note, i))) continue;
      emit(start, i + 1);
      start = i + 1;
    } else if (c == '!' || c == ';') {
      emit(start, i + 1);
      start = i + 1;
    } else if (c == '\n') {
      std::size_t j = i + 1;
      while (j < note.size() && is_space(note[j]) && note[j] != '\n') ++j;
      const bool blank_line = j < note.size() && note[j] == '\n';
      if (blank_line || !line_continues(note, i)) {
        emit(start, i);
        start = i + 1;
      }
    }
  }
  emit(start, note.size());
  return sentences;
}

void tokenize(SentenceBuffer& sentence) {
  const std::string& raw = sentence.raw;
  std::vector<Token>& tokens = sentence.tokens;
  tokens.clear();

  auto push = [&](std::size_t begin, std::size_t end) {
    if (begin >= end) return;
    Token token;
    token.raw = raw.substr(begin, end - begin);
    token.text = lowercase(token.raw);
    token.span.start = sentence.span.start + static_cast<int>(begin);
    token.span.end = sentence.span.start + static_cast<int>(end);
    token.span.sentence_index = sentence.span.sentence_index;
    token.index = static_cast<int>(tokens.size());
    tokens.push_back(std::move(token));
  };

  std::size_t begin = 0;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const char c = raw[i];
    if (is_space(c)) {
      push(begin, i);
      begin = i + 1;
    } else if (kAlwaysSplit.find(c) != std::string_view::npos) {
      push(begin, i);
      push(i, i + 1);
      begin = i + 1;
    } else if (c == '.') {
      const bool glued = i > 0 && i + 1 < raw.size() && is_alnum(raw[i - 1]) &&
                         is_alnum(raw[i + 1]);
      if (!glued) {
        push(begin, i);
        push(i, i + 1);
        begin = i + 1;
      }
    }
  }
  push(begin, raw.size());
}

std::vector<SentenceBuffer> preprocess_note(std::string_view note,
                                            const AbbreviationList& abbrevs) {
  std::vector<SentenceBuffer> sentences = split_sentences(note, abbrevs);
  for (SentenceBuffer& sentence : sentences) tokenize(sentence);
  return sentences;
}

}  // namespace clinex
