#include "free2/kpq_family.hpp"

#include <string>

#include "free2/error.hpp"

namespace free2 {
namespace {

// Syllable builders: x^(a p + b) and y^(a q + b).
TemplateSyllable X(std::int64_t a, std::int64_t b) {
  return {Generator::x, {a, 0, b}};
}
TemplateSyllable Y(std::int64_t a, std::int64_t b) {
  return {Generator::y, {0, a, b}};
}

// Frequently used syllables.
const TemplateSyllable xp = X(1, 0);     // x^p
const TemplateSyllable Xp = X(-1, 0);    // x^-p
const TemplateSyllable xp1 = X(1, 1);    // x^(p+1)
const TemplateSyllable Xp1 = X(-1, -1);  // x^-(p+1)
const TemplateSyllable x1 = X(0, 1);     // x
const TemplateSyllable y1 = Y(0, 1);     // y
const TemplateSyllable Y1 = Y(0, -1);    // y^-1
const TemplateSyllable yq = Y(1, 0);     // y^q
const TemplateSyllable Yq = Y(-1, 0);    // y^-q
const TemplateSyllable yq1 = Y(1, 1);    // y^(q+1)
const TemplateSyllable Yq1 = Y(-1, -1);  // y^-(q+1)

TemplateSegment fixed(std::vector<TemplateSyllable> s) {
  return {false, std::move(s)};
}
TemplateSegment block(std::vector<TemplateSyllable> s) {
  return {true, std::move(s)};
}

WordTemplate make_template(FamilyId f) {
  switch (f) {
    case FamilyId::C0P:
      return {fixed({xp}), block({xp1, y1, xp, yq1, xp, y1})};
    case FamilyId::C0PP:
      return {fixed({xp, y1, x1, y1}),
              block({Y1, xp, y1, xp, yq, xp, y1, xp, Y1, Xp})};
    case FamilyId::C1P:
      return {fixed({y1, Xp, Y1, Xp, Yq}), block({yq1, xp, y1, xp1, y1, xp})};
    case FamilyId::C1PP:
      return {fixed({Yq, Xp, Y1, Xp}),
              block({xp, y1, xp, yq, xp, y1, xp, Y1, Xp, Y1})};
    case FamilyId::L0:
      return {block({xp1, y1, xp, yq1, xp, y1}),
              fixed({xp1, y1}),
              block({Y1, xp, y1, xp, yq, xp, y1, xp, Y1, Xp}),
              fixed({xp, y1})};
    case FamilyId::L1:
      return {block({yq1, xp, y1, xp1, y1, xp}),
              fixed({y1, Xp, Y1, Xp, Yq, Xp, Y1, Xp}),
              block({xp, y1, xp, yq, xp, y1, xp, Y1, Xp, Y1}),
              fixed({Yq})};
    case FamilyId::D2:
      return {block({xp, y1, xp1, y1, xp, yq1}),
              block({Yq, Xp, Y1, Xp, y1, xp, y1, Xp, Y1, Xp}),
              block({y1, xp, y1, Xp, Y1, Xp, Yq, Xp, Y1, Xp}),
              fixed({xp, y1, xp}),
              block({yq, xp, y1, xp, Y1, Xp, Y1, xp, y1, xp}),
              fixed({Y1}),
              block({Xp, Y1, Xp1, Y1, Xp, Yq1}),
              fixed({Xp, Y1, Xp}),
              block({xp, y1, xp, yq, xp, y1, xp, Y1, Xp, Y1}),
              fixed({y1})};
    case FamilyId::M0:
      return {fixed({xp, y1, xp, Y1, Xp, Y1, xp, y1, xp, yq})};
    case FamilyId::M1:
      return {fixed({xp, y1, xp1, y1, xp, yq1})};
    case FamilyId::DP:
      return {fixed({xp, y1, X(2, 1), y1, xp, yq, xp, y1, xp, yq})};
  }
  return {};
}

std::uint64_t magnitude(std::int64_t k) {
  return k < 0 ? std::uint64_t{0} - static_cast<std::uint64_t>(k)
               : static_cast<std::uint64_t>(k);
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) {
    throw OverflowError("template expansion length overflows 64 bits");
  }
  return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw OverflowError("template expansion length overflows 64 bits");
  }
  return r;
}

void append_syllables(std::vector<Letter>& out,
                      const std::vector<TemplateSyllable>& syllables,
                      const ParamTriple& t, bool inverted) {
  auto emit = [&](const TemplateSyllable& s) {
    const std::int64_t e = s.exp.eval(t.p, t.q);
    const int sign = (e < 0) != inverted ? -1 : +1;
    out.insert(out.end(), magnitude(e), Letter(s.gen, sign));
  };
  if (inverted) {
    for (auto it = syllables.rbegin(); it != syllables.rend(); ++it) emit(*it);
  } else {
    for (const auto& s : syllables) emit(s);
  }
}

}  // namespace

std::string_view family_tag(FamilyId f) {
  static constexpr std::string_view tags[] = {"c0p", "c0pp", "c1p", "c1pp",
                                              "l0",  "l1",   "d2",  "m0",
                                              "m1",  "dp"};
  return tags[static_cast<int>(f)];
}

std::optional<FamilyId> parse_family(std::string_view tag) {
  for (FamilyId f : kAllFamilies) {
    if (family_tag(f) == tag) return f;
  }
  return std::nullopt;
}

bool family_uses_n(FamilyId f) {
  return f != FamilyId::M0 && f != FamilyId::M1 && f != FamilyId::DP;
}

std::int64_t AffineExponent::eval(std::int64_t p, std::int64_t q) const {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t r = 0;
  if (__builtin_mul_overflow(cp, p, &a) || __builtin_mul_overflow(cq, q, &b) ||
      __builtin_add_overflow(a, b, &r) || __builtin_add_overflow(r, c0, &r)) {
    throw OverflowError("template exponent overflows 64 bits");
  }
  return r;
}

const WordTemplate& word_template(FamilyId f) {
  static const std::array<WordTemplate, kAllFamilies.size()> templates = [] {
    std::array<WordTemplate, kAllFamilies.size()> t;
    for (FamilyId id : kAllFamilies) t[static_cast<int>(id)] = make_template(id);
    return t;
  }();
  return templates[static_cast<int>(f)];
}

std::uint64_t expanded_length(FamilyId f, const ParamTriple& params) {
  std::uint64_t total = 0;
  for (const TemplateSegment& seg : word_template(f)) {
    std::uint64_t len = 0;
    for (const TemplateSyllable& s : seg.syllables) {
      len = checked_add(len, magnitude(s.exp.eval(params.p, params.q)));
    }
    if (seg.repeated) len = checked_mul(len, magnitude(params.n));
    total = checked_add(total, len);
  }
  return total;
}

Word generate(FamilyId f, const ParamTriple& params, std::size_t length_cap) {
  const std::uint64_t len = expanded_length(f, params);
  if (len > length_cap) {
    throw LengthCapError(std::string(family_tag(f)) + " expansion needs " +
                         std::to_string(len) + " letters, cap is " +
                         std::to_string(length_cap));
  }
  std::vector<Letter> out;
  out.reserve(len);
  for (const TemplateSegment& seg : word_template(f)) {
    if (!seg.repeated) {
      append_syllables(out, seg.syllables, params, false);
      continue;
    }
    for (std::uint64_t i = 0; i < magnitude(params.n); ++i) {
      append_syllables(out, seg.syllables, params, params.n < 0);
    }
  }
  return Word(out);
}

std::int64_t boundary_slope(std::int64_t p, std::int64_t q) {
  return 4 * q - 36 * p;
}

}  // namespace free2
