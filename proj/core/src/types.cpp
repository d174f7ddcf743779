#include "clinex/types.hpp"

#include <array>
#include <utility>

namespace clinex {

namespace {

constexpr std::array<std::pair<Role, std::string_view>, 21> kRoleNames = {{
    {Role::Pronoun, "Pronoun"},
    {Role::Conjunction, "Conjunction"},
    {Role::Preposition, "Preposition"},
    {Role::LinkVerbPositive, "LinkVerbPositive"},
    {Role::LinkVerbNegative, "LinkVerbNegative"},
    {Role::AuxVerbPositive, "AuxVerbPositive"},
    {Role::AuxVerbNegative, "AuxVerbNegative"},
    {Role::Article, "Article"},
    {Role::Comma, "Comma"},
    {Role::ParticipleConfirmation, "ParticipleConfirmation"},
    {Role::ConfirmationCue, "ConfirmationCue"},
    {Role::NegationCue, "NegationCue"},
    {Role::BackwardConfirmationCue, "BackwardConfirmationCue"},
    {Role::BackwardNegationCue, "BackwardNegationCue"},
    {Role::SpeculationCue, "SpeculationCue"},
    {Role::IgnoreCue, "IgnoreCue"},
    {Role::Fact, "Fact"},
    {Role::Modifier, "Modifier"},
    {Role::FactAttribute, "FactAttribute"},
    {Role::Location, "Location"},
    {Role::Relative, "Relative"},
}};

constexpr std::array<std::pair<FactKind, std::string_view>, 5> kFactKinds = {{
    {FactKind::Disorder, "Disorder"},
    {FactKind::Finding, "Finding"},
    {FactKind::Procedure, "Procedure"},
    {FactKind::Test, "Test"},
    {FactKind::Substance, "Substance"},
}};

}  // namespace

RoleFamily role_family(Role role) {
  switch (role) {
    case Role::Pronoun:
    case Role::Conjunction:
    case Role::Preposition:
    case Role::LinkVerbPositive:
    case Role::LinkVerbNegative:
    case Role::AuxVerbPositive:
    case Role::AuxVerbNegative:
    case Role::Article:
    case Role::Comma:
    case Role::ParticipleConfirmation:
      return RoleFamily::Grammatical;
    case Role::ConfirmationCue:
    case Role::NegationCue:
    case Role::BackwardConfirmationCue:
    case Role::BackwardNegationCue:
    case Role::SpeculationCue:
    case Role::IgnoreCue:
      return RoleFamily::MeaningCue;
    case Role::Fact:
    case Role::Modifier:
    case Role::FactAttribute:
    case Role::Location:
    case Role::Relative:
      return RoleFamily::MedicalTerm;
  }
  throw std::invalid_argument("unknown role value");
}

std::string role_name(Role role, FactKind kind) {
  for (const auto& [r, name] : kRoleNames) {
    if (r == role) {
      if (role == Role::Fact) {
        return std::string(name) + ":" + std::string(fact_kind_name(kind));
      }
      return std::string(name);
    }
  }
  throw std::invalid_argument("unknown role value");
}

void parse_role_name(std::string_view spec, Role& role, FactKind& kind) {
  kind = FactKind::Finding;
  std::string_view head = spec;
  std::string_view sub;
  if (auto colon = spec.find(':'); colon != std::string_view::npos) {
    head = spec.substr(0, colon);
    sub = spec.substr(colon + 1);
  }
  for (const auto& [r, name] : kRoleNames) {
    if (name == head) {
      role = r;
      if (r == Role::Fact) {
        if (!sub.empty()) kind = parse_fact_kind(sub);
      } else if (!sub.empty()) {
        throw std::invalid_argument("role '" + std::string(head) +
                                    "' does not take a subkind");
      }
      return;
    }
  }
  throw std::invalid_argument("unknown role '" + std::string(spec) + "'");
}

std::string_view presence_name(Presence p) {
  switch (p) {
    case Presence::Yes: return "YES";
    case Presence::No: return "NO";
    case Presence::Maybe: return "MAYBE";
  }
  throw std::invalid_argument("unknown presence value");
}

Presence parse_presence(std::string_view name) {
  if (name == "YES") return Presence::Yes;
  if (name == "NO") return Presence::No;
  if (name == "MAYBE") return Presence::Maybe;
  throw std::invalid_argument("unknown presence '" + std::string(name) + "'");
}

std::string_view experiencer_name(Experiencer e) {
  return e == Experiencer::Self ? "SELF" : "FAMILY";
}

Experiencer parse_experiencer(std::string_view name) {
  if (name == "SELF") return Experiencer::Self;
  if (name == "FAMILY") return Experiencer::Family;
  throw std::invalid_argument("unknown experiencer '" + std::string(name) +
                              "'");
}

std::string_view fact_kind_name(FactKind k) {
  for (const auto& [kind, name] : kFactKinds) {
    if (kind == k) return name;
  }
  throw std::invalid_argument("unknown fact kind value");
}

FactKind parse_fact_kind(std::string_view name) {
  for (const auto& [kind, kname] : kFactKinds) {
    if (kname == name) return kind;
  }
  throw std::invalid_argument("unknown fact kind '" + std::string(name) + "'");
}

}  // namespace clinex
