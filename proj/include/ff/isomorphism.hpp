#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "ff/field_extension.hpp"

namespace ff {

/// A map between two representations of GF(q) held as a full table indexed
/// by source element index. Maps produced by build_isomorphism are ring
/// isomorphisms; arbitrary tables (e.g. a candidate to reject) can be wrapped
/// with from_table and checked with verify_isomorphism.
class FieldIsomorphism {
 public:
  FieldIsomorphism(FieldSpec source, FieldSpec target, FieldElement root_image,
                   std::vector<FieldElement> mapping);

  /// root_image is taken as the image of the source variable.
  static FieldIsomorphism from_table(FieldSpec source, FieldSpec target,
                                     std::vector<FieldElement> mapping);

  const FieldSpec& source() const noexcept { return source_; }
  const FieldSpec& target() const noexcept { return target_; }
  /// Image of the source variable: a root of the source modulus in the target.
  const FieldElement& root_image() const noexcept { return root_image_; }
  const std::vector<FieldElement>& mapping() const noexcept { return mapping_; }

  FieldElement operator()(const FieldElement& a) const;

  friend bool operator==(const FieldIsomorphism& a, const FieldIsomorphism& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.mapping_ == b.mapping_;
  }

 private:
  FieldSpec source_;
  FieldSpec target_;
  FieldElement root_image_;
  std::vector<FieldElement> mapping_;
};

/// g(z) -> g(a) where a is the first root (enumeration order) of the source
/// modulus in the target. OrderMismatch unless p and r agree; q <= 2^12.
FieldIsomorphism build_isomorphism(const FieldSpec& source, const FieldSpec& target);

/// The evaluation map for a chosen root image.
FieldIsomorphism isomorphism_from_root(const FieldSpec& source, const FieldSpec& target,
                                       const FieldElement& root_image);

/// One map per root of the source modulus in the target.
std::vector<FieldIsomorphism> enumerate_isomorphisms(const FieldSpec& source, const FieldSpec& target);

/// second after first.
FieldIsomorphism compose(const FieldIsomorphism& first, const FieldIsomorphism& second);

struct IsomorphismWitness {
  char op;  // '+' or '*'; 'b' for a bijectivity failure
  FieldElement u;
  FieldElement v;
};

struct IsomorphismReport {
  bool bijective = false;
  bool additive = false;
  bool multiplicative = false;
  bool root_is_root = false;
  bool exhaustive = false;
  std::uint64_t pairs_checked = 0;
  std::optional<IsomorphismWitness> witness;

  bool passed() const noexcept { return bijective && additive && multiplicative && root_is_root; }
};

inline constexpr std::uint64_t kDefaultSeed = 0x5eed'f1e1'd5ULL;

/// Exhaustive over all pairs for q <= 64, `samples` random pairs (seeded)
/// beyond. Never throws for a failing map; the report carries the witness.
IsomorphismReport verify_isomorphism(const FieldIsomorphism& iso, std::uint64_t seed = kDefaultSeed,
                                     std::uint64_t samples = 4096);

/// {"source_modulus", "target_modulus", "root_image", "pairs": [["z^2+1", "w^2"], ...]}
nlohmann::json isomorphism_to_json(const FieldIsomorphism& iso);

/// Two-column "src -> dst" listing in source enumeration order.
std::string isomorphism_to_text(const FieldIsomorphism& iso);

}  // namespace ff
