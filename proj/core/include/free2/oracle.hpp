#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "free2/word.hpp"

// Brute-force cross-checks for the automorphism machinery. Nothing here
// calls into automorphism.hpp or structure.hpp: moves, reduction and
// canonical rotations are re-implemented naively.
namespace free2::oracle {

/// Enumeration and orbit balls refuse lengths above this.
inline constexpr std::size_t kMaxLength = 12;

/// Every canonical cyclic word with length in [1, max_length], each once,
/// ordered by length and then lexicographically (x < X < y < Y).
std::vector<CyclicWord> enumerate_cyclic_words(std::size_t max_length);
void for_each_cyclic_word(std::size_t max_length,
                          const std::function<void(const CyclicWord&)>& fn);

/// All cyclic words reachable from a start word by elementary moves and
/// inversion without ever exceeding max_length letters.
class OrbitBall {
 public:
  OrbitBall(const CyclicWord& start, std::size_t max_length);

  /// A shortest member (least one among the shortest).
  const CyclicWord& seed() const noexcept { return seed_; }
  std::size_t max_length() const noexcept { return max_length_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(const CyclicWord& c) const;
  /// Members in canonical form.
  std::vector<CyclicWord> members() const;

 private:
  CyclicWord seed_;
  std::size_t max_length_;
  std::set<std::string> members_;
};

/// True iff b or its inverse lies in the orbit ball of a with cap
/// max(|a|, |b|). Throws DomainError above kMaxLength.
bool bfs_orbit_oracle(const CyclicWord& a, const CyclicWord& b);

/// bfs_orbit_oracle(x, c).
bool is_primitive_oracle(const CyclicWord& c);

/// Smallest root by trying every divisor of the length.
struct NaiveRoot {
  std::int64_t exponent = 1;
  CyclicWord root;
};
NaiveRoot naive_root(const CyclicWord& c);

/// Proper power whose root is primitive according to the ball search.
bool is_power_of_primitive_oracle(const CyclicWord& c);

}  // namespace free2::oracle
