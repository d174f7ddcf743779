#include <ostream>
#include <sstream>

#include "clinex/lexicon.hpp"

namespace clinex {

namespace {

struct BaseEntry {
  const char* phrase;
  const char* code;
  const char* role;
};

// Grammatical words and meaning cues common to every application. Medical
// terms are deliberately absent; they come from user term files.
constexpr BaseEntry kBaseEntries[] = {
    // Pronouns
    {"it", "@pron", "Pronoun"},
    {"he", "@pron", "Pronoun"},
    {"she", "@pron", "Pronoun"},
    {"they", "@pron", "Pronoun"},
    {"there", "@pron", "Pronoun"},
    {"who", "@pron", "Pronoun"},
    {"which", "@pron", "Pronoun"},
    // Conjunctions
    {"and", "@conj", "Conjunction"},
    {"or", "@conj", "Conjunction"},
    {"but", "@conj", "Conjunction"},
    {"nor", "@conj", "Conjunction"},
    // Prepositions
    {"of", "@prep", "Preposition"},
    {"in", "@prep", "Preposition"},
    {"within", "@prep", "Preposition"},
    {"on", "@prep", "Preposition"},
    {"at", "@prep", "Preposition"},
    {"to", "@prep", "Preposition"},
    {"for", "@prep", "Preposition"},
    {"with", "@prep", "Preposition"},
    {"from", "@prep", "Preposition"},
    {"by", "@prep", "Preposition"},
    {"into", "@prep", "Preposition"},
    {"near", "@prep", "Preposition"},
    {"during", "@prep", "Preposition"},
    // Link verbs
    {"is", "@link+", "LinkVerbPositive"},
    {"are", "@link+", "LinkVerbPositive"},
    {"was", "@link+", "LinkVerbPositive"},
    {"were", "@link+", "LinkVerbPositive"},
    {"be", "@link+", "LinkVerbPositive"},
    {"been", "@link+", "LinkVerbPositive"},
    {"being", "@link+", "LinkVerbPositive"},
    {"is not", "@link-", "LinkVerbNegative"},
    {"isn't", "@link-", "LinkVerbNegative"},
    {"are not", "@link-", "LinkVerbNegative"},
    {"aren't", "@link-", "LinkVerbNegative"},
    {"was not", "@link-", "LinkVerbNegative"},
    {"wasn't", "@link-", "LinkVerbNegative"},
    {"were not", "@link-", "LinkVerbNegative"},
    {"weren't", "@link-", "LinkVerbNegative"},
    // Auxiliary verbs
    {"have", "@aux+", "AuxVerbPositive"},
    {"has", "@aux+", "AuxVerbPositive"},
    {"had", "@aux+", "AuxVerbPositive"},
    {"have not", "@aux-", "AuxVerbNegative"},
    {"haven't", "@aux-", "AuxVerbNegative"},
    {"has not", "@aux-", "AuxVerbNegative"},
    {"hasn't", "@aux-", "AuxVerbNegative"},
    {"had not", "@aux-", "AuxVerbNegative"},
    {"hadn't", "@aux-", "AuxVerbNegative"},
    // Articles and comma
    {"a", "@art", "Article"},
    {"an", "@art", "Article"},
    {"the", "@art", "Article"},
    {",", "@comma", "Comma"},
    // Past participles of confirmation
    {"found", "@pc", "ParticipleConfirmation"},
    {"seen", "@pc", "ParticipleConfirmation"},
    {"noted", "@pc", "ParticipleConfirmation"},
    {"identified", "@pc", "ParticipleConfirmation"},
    {"observed", "@pc", "ParticipleConfirmation"},
    {"demonstrated", "@pc", "ParticipleConfirmation"},
    {"visualized", "@pc", "ParticipleConfirmation"},
    {"detected", "@pc", "ParticipleConfirmation"},
    {"appreciated", "@pc", "ParticipleConfirmation"},
    {"present", "@pc", "ParticipleConfirmation"},
    // Confirmation cues
    {"positive for", "@conf", "ConfirmationCue"},
    {"presence of", "@conf", "ConfirmationCue"},
    {"shows", "@conf", "ConfirmationCue"},
    {"reveals", "@conf", "ConfirmationCue"},
    {"demonstrates", "@conf", "ConfirmationCue"},
    {"notable for", "@conf", "ConfirmationCue"},
    // Negation cues; removal/resolution verbs negate backward (the presence
    // analyzer keys on the configured removal list).
    {"no", "@neg", "NegationCue"},
    {"not", "@neg", "NegationCue"},
    {"without", "@neg", "NegationCue"},
    {"denies", "@neg", "NegationCue"},
    {"denied", "@neg", "NegationCue"},
    {"negative for", "@neg", "NegationCue"},
    {"free of", "@neg", "NegationCue"},
    {"no evidence of", "@neg", "NegationCue"},
    {"without evidence of", "@neg", "NegationCue"},
    {"absence of", "@neg", "NegationCue"},
    {"removed", "@neg", "NegationCue"},
    {"resected", "@neg", "NegationCue"},
    {"resolved", "@neg", "NegationCue"},
    {"excised", "@neg", "NegationCue"},
    // Backward cues; '+' after a lab test reads as "positive"
    {"+", "@bconf", "BackwardConfirmationCue"},
    {"absent", "@bneg", "BackwardNegationCue"},
    {"ruled out", "@bneg", "BackwardNegationCue"},
    // Speculation cues; '?' before a disease name reads as "to diagnose"
    {"suggest", "@spec", "SpeculationCue"},
    {"suggests", "@spec", "SpeculationCue"},
    {"suggesting", "@spec", "SpeculationCue"},
    {"suggestive of", "@spec", "SpeculationCue"},
    {"may represent", "@spec", "SpeculationCue"},
    {"possible", "@spec", "SpeculationCue"},
    {"possibly", "@spec", "SpeculationCue"},
    {"probable", "@spec", "SpeculationCue"},
    {"likely", "@spec", "SpeculationCue"},
    {"suspicious for", "@spec", "SpeculationCue"},
    {"suspected", "@spec", "SpeculationCue"},
    {"concerning for", "@spec", "SpeculationCue"},
    {"vs", "@spec", "SpeculationCue"},
    {"versus", "@spec", "SpeculationCue"},
    {"question of", "@spec", "SpeculationCue"},
    {"?", "@spec", "SpeculationCue"},
    // Ignore cues
    {"assess for", "@ignore", "IgnoreCue"},
    {"in case of", "@ignore", "IgnoreCue"},
    {"study", "@ignore", "IgnoreCue"},
    {"exam", "@ignore", "IgnoreCue"},
    {"evaluate", "@ignore", "IgnoreCue"},
    {"evaluate for", "@ignore", "IgnoreCue"},
    {"diff diagnosis", "@ignore", "IgnoreCue"},
    {"differential diagnosis", "@ignore", "IgnoreCue"},
    {"rule out", "@ignore", "IgnoreCue"},
    {"screening for", "@ignore", "IgnoreCue"},
    // Relatives
    {"mother", "@rel", "Relative"},
    {"father", "@rel", "Relative"},
    {"uncle", "@rel", "Relative"},
    {"aunt", "@rel", "Relative"},
    {"brother", "@rel", "Relative"},
    {"sister", "@rel", "Relative"},
    {"grandmother", "@rel", "Relative"},
    {"grandfather", "@rel", "Relative"},
    {"cousin", "@rel", "Relative"},
    {"sibling", "@rel", "Relative"},
    {"son", "@rel", "Relative"},
    {"daughter", "@rel", "Relative"},
    {"family history", "@rel", "Relative"},
    // Fact attributes
    {"change", "@attr", "FactAttribute"},
    {"changes", "@attr", "FactAttribute"},
};

std::vector<std::string> split_tokens(const char* phrase) {
  std::vector<std::string> tokens;
  std::istringstream in(phrase);
  std::string token;
  while (in >> token) tokens.push_back(std::move(token));
  return tokens;
}

}  // namespace

Lexicon Lexicon::base_dictionary() {
  Lexicon lexicon;
  for (const BaseEntry& entry : kBaseEntries) {
    Role role;
    FactKind kind;
    parse_role_name(entry.role, role, kind);
    lexicon.add_term(split_tokens(entry.phrase), entry.code, role, kind);
  }
  return lexicon;
}

void Lexicon::export_base_dictionary(std::ostream& out) {
  out << "# built-in base dictionary: grammatical words and meaning cues\n";
  for (const BaseEntry& entry : kBaseEntries) {
    out << entry.phrase << '\t' << entry.code << '\t' << entry.role << '\n';
  }
}

}  // namespace clinex
