#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "free2/word.hpp"

namespace free2 {

/// Words of the circles on the boundary of the complementary handlebody of
/// P(p,q): twisted lifts of the two centers (two variants each), lifts of
/// the two longitudes, the waist-disk boundary, the two meridian lifts and
/// the boundary of P itself.
enum class FamilyId : std::uint8_t { C0P, C0PP, C1P, C1PP, L0, L1, D2, M0, M1, DP };

inline constexpr std::array<FamilyId, 10> kAllFamilies = {
    FamilyId::C0P, FamilyId::C0PP, FamilyId::C1P, FamilyId::C1PP,
    FamilyId::L0,  FamilyId::L1,   FamilyId::D2,  FamilyId::M0,
    FamilyId::M1,  FamilyId::DP};

/// CLI/report tag: c0p c0pp c1p c1pp l0 l1 d2 m0 m1 dp.
std::string_view family_tag(FamilyId f);
std::optional<FamilyId> parse_family(std::string_view tag);
/// False for M0, M1 and DP, which ignore n.
bool family_uses_n(FamilyId f);

struct ParamTriple {
  std::int64_t n = 0;
  std::int64_t p = 0;
  std::int64_t q = 0;
};

/// Exponent c_p * p + c_q * q + c_0.
struct AffineExponent {
  std::int64_t cp = 0;
  std::int64_t cq = 0;
  std::int64_t c0 = 0;

  /// Throws OverflowError if the value leaves the 64-bit range.
  std::int64_t eval(std::int64_t p, std::int64_t q) const;
};

struct TemplateSyllable {
  Generator gen;
  AffineExponent exp;
};

/// A run of syllables; `repeated` segments are raised to the n-th power.
struct TemplateSegment {
  bool repeated = false;
  std::vector<TemplateSyllable> syllables;
};

using WordTemplate = std::vector<TemplateSegment>;

const WordTemplate& word_template(FamilyId f);

/// Unreduced letter count of the substituted template; throws
/// OverflowError when it does not fit in 64 bits.
std::uint64_t expanded_length(FamilyId f, const ParamTriple& params);

/// Substitutes the parameters, expands (negative n inverts every repeated
/// block) and freely reduces. Throws LengthCapError when the expansion
/// would exceed `length_cap` letters.
Word generate(FamilyId f, const ParamTriple& params,
              std::size_t length_cap = kDefaultLengthCap);

/// Boundary slope of P(p,q): 4q - 36p.
std::int64_t boundary_slope(std::int64_t p, std::int64_t q);

}  // namespace free2
