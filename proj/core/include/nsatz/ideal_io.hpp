#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nsatz/ideal.hpp"

namespace nsatz {

/// On-disk ideal description. JSON object with keys "vars" (array of
/// variable names, most significant first — this sequence also drives the
/// monomial order), "gens" (array of expression strings, may be empty) and
/// optional "order" ("lex" | "grlex" | "grevlex", default "grevlex").
struct IdealFile {
  std::vector<std::string> vars;
  std::vector<std::string> gens;
  std::optional<std::string> order;
};

/// Parses and validates the JSON text (SyntaxError on malformed or
/// unexpected structure, including unknown keys and bad variable names).
IdealFile parse_ideal_file(const std::string& json_text);

/// Reads and parses a file from disk; SyntaxError mentions the path.
IdealFile read_ideal_file(const std::string& path);

/// Builds the ideal: parses generators over the declared variables with the
/// declared order. Parse errors propagate; an empty generator list yields
/// the zero ideal.
Ideal load_ideal(const IdealFile& file);

/// Order lookup for "lex" / "grlex" / "grevlex" over an explicit
/// significance sequence; SyntaxError on unknown names.
MonomialOrder order_by_name(const std::string& name, std::vector<Variable> sequence);

}  // namespace nsatz
