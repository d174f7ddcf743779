#ifndef CLINEX_TOOLS_CORPUS_HPP
#define CLINEX_TOOLS_CORPUS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace clinex::tools {

// Writes a deterministic JSONL corpus of template-perturbed radiology-style
// notes ({"id": ..., "text": ...} per line). The default sizing yields
// roughly 18 MB at 10330 notes. Vocabulary matches data/ctpa_terms.tsv.
void generate_synthetic_corpus(std::ostream& out, int n_notes,
                               std::uint64_t seed);

// Every dictionary phrase the note templates draw from, for fixture-sync
// checks.
const std::vector<std::string>& corpus_vocabulary();

}  // namespace clinex::tools

#endif  // CLINEX_TOOLS_CORPUS_HPP
