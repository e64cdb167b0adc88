#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace free2 {

/// Largest number of letters any expansion (parsing, powers, templates) may
/// produce unless the caller asks for another cap.
inline constexpr std::size_t kDefaultLengthCap = 1'000'000;

enum class Generator : std::uint8_t { x = 0, y = 1 };

/// One of x, X (= x^-1), y, Y (= y^-1).
///
/// Letters are ordered x < X < y < Y. That order drives the choice of
/// canonical rotation for cyclic words.
class Letter {
 public:
  constexpr Letter(Generator g, int sign) noexcept
      : code_(static_cast<std::uint8_t>((static_cast<unsigned>(g) << 1) |
                                        (sign < 0 ? 1u : 0u))) {}

  static constexpr Letter x() noexcept { return Letter(Generator::x, +1); }
  static constexpr Letter X() noexcept { return Letter(Generator::x, -1); }
  static constexpr Letter y() noexcept { return Letter(Generator::y, +1); }
  static constexpr Letter Y() noexcept { return Letter(Generator::y, -1); }

  constexpr Generator generator() const noexcept {
    return static_cast<Generator>(code_ >> 1);
  }
  constexpr int sign() const noexcept { return (code_ & 1u) ? -1 : +1; }
  constexpr Letter inverse() const noexcept {
    return Letter(static_cast<std::uint8_t>(code_ ^ 1u));
  }
  constexpr bool is_inverse_of(Letter other) const noexcept {
    return (code_ ^ 1u) == other.code_;
  }
  /// 0 for x, 1 for X, 2 for y, 3 for Y.
  constexpr int rank() const noexcept { return code_; }

  constexpr char symbol() const noexcept { return "xXyY"[code_]; }

  friend constexpr bool operator==(Letter, Letter) noexcept = default;
  friend constexpr std::strong_ordering operator<=>(Letter a,
                                                    Letter b) noexcept {
    return a.code_ <=> b.code_;
  }

 private:
  explicit constexpr Letter(std::uint8_t code) noexcept : code_(code) {}

  std::uint8_t code_;
};

/// A freely reduced word in x and y. The empty word is the identity.
class Word {
 public:
  Word() = default;
  /// Freely reduces `letters`.
  explicit Word(std::span<const Letter> letters);
  Word(std::initializer_list<Letter> letters);

  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Conjugacy-class representative: a cyclically reduced word stored in its
/// lexicographically least rotation, so equality of classes is equality of
/// storage.
class CyclicWord {
 public:
  CyclicWord() = default;

  /// Throws DomainError unless `letters` is cyclically reduced.
  static CyclicWord from_cyclically_reduced(std::span<const Letter> letters);
  /// Cyclic core of an arbitrary word.
  static CyclicWord of(const Word& w);

  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  /// The canonical rotation as an ordinary word.
  Word to_word() const { return Word(std::span<const Letter>(letters_)); }
  CyclicWord inverse() const;

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
  friend auto operator<=>(const CyclicWord&, const CyclicWord&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Image in Z^2 under abelianization.
struct AbelianImage {
  std::int64_t ex = 0;
  std::int64_t ey = 0;

  friend AbelianImage operator+(AbelianImage a, AbelianImage b) {
    return {a.ex + b.ex, a.ey + b.ey};
  }
  friend AbelianImage operator-(AbelianImage a) { return {-a.ex, -a.ey}; }
  friend bool operator==(AbelianImage, AbelianImage) = default;
};

/// u = invert(conjugator) * core_word * conjugator, where core_word is the
/// rotation of `core` that literally occurs inside u.
struct CyclicReduction {
  CyclicWord core;
  Word core_word;
  Word conjugator;
};

Word multiply(const Word& u, const Word& v);
Word invert(const Word& u);
/// u v u^-1 v^-1, reduced.
Word commutator(const Word& u, const Word& v);
/// u^k. Throws LengthCapError if the result would exceed `length_cap`.
Word power(const Word& u, std::int64_t k,
           std::size_t length_cap = kDefaultLengthCap);
Word generator_power(Generator g, std::int64_t k,
                     std::size_t length_cap = kDefaultLengthCap);

CyclicReduction cyclic_reduce(const Word& u);
AbelianImage exponent_sums(const Word& u);

/// Index at which the least rotation of `letters` starts (x < X < y < Y).
std::size_t least_rotation(std::span<const Letter> letters);

/// Parses the word grammar: atoms x y X Y and 1, parenthesised groups, and
/// `^` followed by an optionally signed integer. Whitespace is ignored.
Word parse_word(std::string_view text,
                std::size_t length_cap = kDefaultLengthCap);

/// Compact syllable form, e.g. "x^2YxX^3". The empty word prints as "1".
std::string format_word(const Word& w);
std::string format_letters(std::span<const Letter> letters);
std::string format_cyclic(const CyclicWord& c);

inline Word operator*(const Word& u, const Word& v) { return multiply(u, v); }

}  // namespace free2
