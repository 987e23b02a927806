#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "ff/field_extension.hpp"
#include "ff/isomorphism.hpp"

namespace ff {

struct AxiomReport {
  bool passed = true;
  bool exhaustive = false;
  std::uint64_t cases = 0;
  std::vector<std::string> failures;
};

/// Commutativity, associativity, distributivity, identities and inverses.
/// Exhaustive for q <= 64, `samples` seeded random triples above.
AxiomReport check_field_axioms(const FieldSpec& field, std::uint64_t seed = kDefaultSeed,
                               std::uint64_t samples = 20000);

struct ClauseResult {
  std::string clause;  // "a", "b", "c(i)", "c(ii)"
  bool passed = false;
  std::vector<std::string> details;
};

struct FtffReport {
  unsigned p = 0;
  unsigned r = 0;
  std::uint64_t q = 0;
  std::vector<ClauseResult> clauses;

  bool passed() const noexcept;
};

/// Builds GF(p^r), runs the axiom suite, structure checks, both
/// factorizations of x^q - x with re-multiplication, and isomorphisms
/// between the degree-r representations. Requires p^r <= 2^12.
FtffReport verify_ftff(unsigned p, unsigned r, std::uint64_t seed = kDefaultSeed);

nlohmann::json ftff_report_to_json(const FtffReport& rep);
std::string ftff_report_to_text(const FtffReport& rep);

}  // namespace ff
