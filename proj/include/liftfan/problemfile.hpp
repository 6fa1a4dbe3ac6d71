#pragma once

// On-disk description of one extension problem: a UTF-8 JSON object
// {"l":..., "lambda":[[...],...], "n":..., "r":...} with the form rows in
// wedge lex order. Serialization is canonical (alphabetical keys, compact,
// one trailing newline), so load-then-save is byte-identical.

#include <filesystem>
#include <string>
#include <vector>

#include "liftfan/extension.hpp"

namespace liftfan {

struct ProblemFile {
  unsigned l = 3;
  int n = 2;
  int r = 0;
  std::vector<std::vector<int>> lambda;  // r rows of n(n-1)/2 residues

  CommutatorForm to_form() const;
  static ProblemFile from_form(const CommutatorForm& f);

  // Parses and fully validates; throws InputError naming the offending
  // field, or CapError past the size caps.
  static ProblemFile parse(const std::string& text);
  static ProblemFile load(const std::filesystem::path& path);

  std::string dumps() const;
  void save(const std::filesystem::path& path) const;

  friend bool operator==(const ProblemFile&, const ProblemFile&) = default;
};

}  // namespace liftfan
