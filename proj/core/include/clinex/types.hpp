#ifndef CLINEX_TYPES_HPP
#define CLINEX_TYPES_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace clinex {

// Character span within a source note. Offsets are 0-based, end exclusive.
struct Span {
  int start = 0;
  int end = 0;
  int sentence_index = 0;

  bool operator==(const Span&) const = default;
};

// One token of a sentence. `text` is the case-folded match key, `raw` the
// original surface form.
struct Token {
  std::string text;
  std::string raw;
  Span span;
  int index = 0;

  bool operator==(const Token&) const = default;
};

// Functional category of a phrase. Exactly one role per dictionary phrase.
enum class Role : std::uint8_t {
  // Grammatical words
  Pronoun,
  Conjunction,
  Preposition,
  LinkVerbPositive,
  LinkVerbNegative,
  AuxVerbPositive,
  AuxVerbNegative,
  Article,
  Comma,
  ParticipleConfirmation,
  // Meaning cues
  ConfirmationCue,
  NegationCue,
  BackwardConfirmationCue,
  BackwardNegationCue,
  SpeculationCue,
  IgnoreCue,
  // Medical terms
  Fact,
  Modifier,
  FactAttribute,
  Location,
  Relative,
};

enum class RoleFamily : std::uint8_t {
  Grammatical,
  MeaningCue,
  MedicalTerm,
};

// Subkind of a Fact-role phrase.
enum class FactKind : std::uint8_t {
  Disorder,
  Finding,
  Procedure,
  Test,
  Substance,
};

enum class Presence : std::uint8_t { Yes, No, Maybe };

enum class Experiencer : std::uint8_t { Self, Family };

RoleFamily role_family(Role role);

// Role spelled for term files and JSON: `Fact:Disorder`, `Location`, ...
std::string role_name(Role role, FactKind kind = FactKind::Finding);
// Parses a role spec; throws std::invalid_argument on unknown names.
void parse_role_name(std::string_view spec, Role& role, FactKind& kind);

std::string_view presence_name(Presence p);
Presence parse_presence(std::string_view name);

std::string_view experiencer_name(Experiencer e);
Experiencer parse_experiencer(std::string_view name);

std::string_view fact_kind_name(FactKind k);
FactKind parse_fact_kind(std::string_view name);

// Error for malformed dictionaries, term files, and config files.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace clinex

#endif  // CLINEX_TYPES_HPP
