#pragma once

#include <string>
#include <vector>

#include "solvpair/structure.hpp"

namespace solvpair {

struct PairFile {
  SolvablePair pair;
  bool from_jordan = false;
  std::vector<int> blocks;
  std::vector<Rat> block_offsets;
};

/// Pair file: {"nvars": n, "delta": {"images": [...]}, "gamma": {...}} or the
/// shortcut {"nvars": n, "jordan": {"blocks": [...], "offsets": [...]}} that
/// expands to the canonical matrices. Rationals are integers or "p/q"
/// strings. Throws std::invalid_argument on malformed input.
PairFile read_pair_json_text(const std::string& text, int bound = 64);
PairFile read_pair_file(const std::string& path, int bound = 64);

/// {"images": ["poly", ...]} with canonical polynomial strings.
std::string derivation_to_json(const Derivation& d);
Derivation derivation_from_json_text(int nvars, const std::string& text);

/// Deterministic report object; rationals are rendered as canonical strings.
std::string report_to_json(const StructureReport& rep, int pder_dim,
                           const std::vector<int>& center_dims);

}  // namespace solvpair
