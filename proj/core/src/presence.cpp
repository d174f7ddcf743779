#include "clinex/analysis.hpp"

namespace clinex {

namespace {

enum class Mode { Positive, Negated, Speculated };
enum class ModeSource { Default, Negation, Confirmation, Speculation, Assertion };

// Tracks the "NegationCue FactAttribute Preposition Fact" pattern, where the
// negation applies to the attribute only and the fact stays YES.
enum class AttrState { None, CueSeen, AttrSeen, PrepSeen };

bool ends_with(const std::string& text, std::string_view suffix) {
  return text.size() >= suffix.size() &&
         text.compare(text.size() - suffix.size(), suffix.size(), suffix) == 0;
}

class PresenceMachine {
 public:
  PresenceMachine(AnnotatedSentence& annotated, const PipelineConfig& config)
      : objects_(annotated.objects), config_(config) {}

  int run() {
    int consumed = 0;
    for (std::size_t i = 0; i < objects_.size(); ++i) {
      expire_scope(objects_[i]);
      consume(static_cast<int>(i));
      ++consumed;
      prev2_ = prev_;
      prev_ = static_cast<int>(i);
    }
    return consumed;
  }

 private:
  void expire_scope(const SemanticObject& o) {
    if (mode_ == Mode::Positive) return;
    const int gap = o.first_token - cue_last_token_ - 1;
    if (gap > config_.forward_scope_max_gap) {
      set_mode(Mode::Positive, ModeSource::Default);
      attr_state_ = AttrState::None;
    }
  }

  void set_mode(Mode mode, ModeSource source) {
    mode_ = mode;
    source_ = source;
  }

  void assign_presence(SemanticObject& o) {
    switch (mode_) {
      case Mode::Positive: o.presence = Presence::Yes; break;
      case Mode::Negated: o.presence = Presence::No; break;
      case Mode::Speculated: o.presence = Presence::Maybe; break;
    }
    o.governed = source_ == ModeSource::Negation ||
                 source_ == ModeSource::Confirmation;
  }

  // A fact joins the current group when only commas, list conjunctions, and
  // articles separate it from the previous group member.
  void update_group(int index) {
    bool sibling = !group_.empty();
    if (sibling) {
      for (int j = group_.back() + 1; j < index; ++j) {
        const SemanticObject& between = objects_[j];
        const bool separator =
            between.role == Role::Comma || between.role == Role::Article ||
            (between.role == Role::Conjunction &&
             (between.text == "and" || between.text == "or"));
        if (!separator) {
          sibling = false;
          break;
        }
      }
    }
    if (!sibling) group_.clear();
    group_.push_back(index);
  }

  void consume(int index) {
    SemanticObject& o = objects_[index];
    switch (o.role) {
      case Role::Fact: {
        if (attr_state_ == AttrState::PrepSeen) {
          // Negation was scoped to the attribute; the fact escapes it.
          set_mode(Mode::Positive, ModeSource::Default);
        }
        attr_state_ = AttrState::None;
        assign_presence(o);
        update_group(index);
        break;
      }
      case Role::FactAttribute: {
        assign_presence(o);
        if (attr_state_ == AttrState::CueSeen &&
            o.first_token - cue_last_token_ - 1 <= 1) {
          attr_state_ = AttrState::AttrSeen;
        } else {
          attr_state_ = AttrState::None;
        }
        break;
      }
      case Role::Preposition: {
        if (attr_state_ == AttrState::AttrSeen) {
          attr_state_ = AttrState::PrepSeen;
        }
        break;
      }
      case Role::NegationCue: {
        if (config_.removal_verbs.contains(o.text)) {
          for (int f : group_) {
            objects_[f].presence = Presence::No;
            objects_[f].governed = true;
          }
        } else {
          set_mode(Mode::Negated, ModeSource::Negation);
          cue_last_token_ = o.last_token;
          attr_state_ = AttrState::CueSeen;
        }
        break;
      }
      case Role::ConfirmationCue: {
        set_mode(Mode::Positive, ModeSource::Confirmation);
        cue_last_token_ = o.last_token;
        attr_state_ = AttrState::None;
        break;
      }
      case Role::BackwardNegationCue: {
        for (int f : group_) {
          objects_[f].presence = Presence::No;
          objects_[f].governed = true;
        }
        attr_state_ = AttrState::None;
        break;
      }
      case Role::BackwardConfirmationCue: {
        // Asserts the preceding clause; the group keeps the presence the
        // forward scope already gave it.
        for (int f : group_) objects_[f].governed = true;
        attr_state_ = AttrState::None;
        break;
      }
      case Role::SpeculationCue: {
        const bool infinitival =
            prev_ >= 0 && objects_[prev_].role == Role::Preposition &&
            objects_[prev_].text == "to" &&
            objects_[prev_].last_token + 1 == o.first_token;
        const bool clause_break =
            (prev_ >= 0 && objects_[prev_].role == Role::Comma &&
             ends_with(o.text, "ing")) ||
            (prev_ >= 0 && objects_[prev_].role == Role::Pronoun &&
             prev2_ >= 0 && objects_[prev2_].role == Role::Conjunction);
        if (infinitival && mode_ == Mode::Negated) {
          // "<negated clause> to <verb> X": X stays inside the negation.
        } else if (clause_break) {
          // ", suggesting X" / "and it suggests X": new clause asserts X.
          set_mode(Mode::Positive, ModeSource::Assertion);
        } else {
          set_mode(Mode::Speculated, ModeSource::Speculation);
          cue_last_token_ = o.last_token;
        }
        attr_state_ = AttrState::None;
        break;
      }
      case Role::Conjunction: {
        if (o.text == "but") {
          set_mode(Mode::Positive, ModeSource::Default);
          attr_state_ = AttrState::None;
        }
        break;
      }
      case Role::LinkVerbNegative:
      case Role::AuxVerbNegative: {
        // Unmerged negative verb: "there isn't X" negates forward.
        set_mode(Mode::Negated, ModeSource::Negation);
        cue_last_token_ = o.last_token;
        attr_state_ = AttrState::None;
        break;
      }
      case Role::IgnoreCue:
      case Role::Modifier:
      case Role::Location:
      case Role::Relative:
      case Role::Article:
      case Role::Comma:
      case Role::Pronoun:
      case Role::LinkVerbPositive:
      case Role::AuxVerbPositive:
      case Role::ParticipleConfirmation:
        break;
    }
  }

  std::vector<SemanticObject>& objects_;
  const PipelineConfig& config_;
  Mode mode_ = Mode::Positive;
  ModeSource source_ = ModeSource::Default;
  int cue_last_token_ = -1;
  AttrState attr_state_ = AttrState::None;
  std::vector<int> group_;
  int prev_ = -1;
  int prev2_ = -1;
};

}  // namespace

void analyze_presence(AnnotatedSentence& annotated,
                      const PipelineConfig& config, int* transitions) {
  PresenceMachine machine(annotated, config);
  const int consumed = machine.run();
  if (transitions != nullptr) *transitions = consumed;
}

}  // namespace clinex
