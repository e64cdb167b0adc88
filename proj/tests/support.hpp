#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "free2/automorphism.hpp"
#include "free2/word.hpp"

namespace free2::testing {

inline Word W(std::string_view text) { return parse_word(text); }
inline CyclicWord C(std::string_view text) { return CyclicWord::of(W(text)); }

// Fixed seeds keep every property run reproducible.
inline constexpr std::uint32_t kSeed = 20240611;

/// Uniform freely reduced word of the given length.
inline Word random_reduced(std::mt19937& rng, std::size_t len) {
  static constexpr Letter alphabet[] = {Letter::x(), Letter::X(), Letter::y(),
                                        Letter::Y()};
  std::uniform_int_distribution<int> pick(0, 3);
  std::vector<Letter> s;
  while (s.size() < len) {
    const Letter a = alphabet[pick(rng)];
    if (!s.empty() && s.back().is_inverse_of(a)) continue;
    s.push_back(a);
  }
  return Word(s);
}

inline Word random_word(std::mt19937& rng, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  return random_reduced(rng, len(rng));
}

inline Automorphism random_automorphism(std::mt19937& rng, int max_moves) {
  std::uniform_int_distribution<int> count(0, max_moves);
  std::uniform_int_distribution<std::size_t> move(0, kAllMoves.size() - 1);
  Automorphism phi;
  for (int k = count(rng); k > 0; --k) phi = phi.then(kAllMoves[move(rng)]);
  return phi;
}

}  // namespace free2::testing
