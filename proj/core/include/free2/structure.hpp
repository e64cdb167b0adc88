#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "free2/automorphism.hpp"
#include "free2/word.hpp"

namespace free2 {

/// Class of a word under u ≡ c^-1 v^±1 c.
struct EquivClass {
  /// Least of the canonical rotations of the core and of its inverse.
  CyclicWord canonical;

  friend bool operator==(const EquivClass&, const EquivClass&) = default;
};

EquivClass equiv_class(const Word& u);

/// True iff u is conjugate to v or to v^-1.
bool equiv(const Word& u, const Word& v);

/// True iff w ≡ [a, b] for some basis {a, b}. Every basis gives the same
/// class, so this is equiv(w, [x, y]).
bool is_commutator_of_basis(const Word& w);

struct PowerForm {
  int epsilon = 1;    // +1 or -1
  std::int64_t s = 0;
};

/// Matches c against (y^epsilon x^s)^n up to rotation and inversion.
std::optional<PowerForm> power_form_match(const CyclicWord& c,
                                          std::int64_t n);

/// Which (1,1)-structure condition a witness certifies.
enum class Condition { i, ii, iii };
std::string_view to_string(Condition c);

/// Certificate that target ≡ [basis_first^m, basis_second^n] with
/// {basis_first, basis_second} a basis.
struct CommPowerWitness {
  Condition condition = Condition::i;
  Word basis_first;
  Word basis_second;
  std::int64_t m = 1;
  std::int64_t n = 1;
};

/// Decides w ≡ [v^m, u] for a basis {u, v} with gamma ≡ v^m, where
/// m = multiplicity(gamma). The witness reports the powered element first.
/// Throws DomainError unless gamma is a proper power of a primitive.
std::optional<CommPowerWitness> comm_power_form(const Word& w,
                                                const Word& gamma);

/// Decides w ≡ [a^m, b^n] for a basis {a, b} with gamma0 ≡ a^m and
/// gamma1 ≡ b^n. Throws DomainError unless both gammas are proper powers
/// of primitives.
std::optional<CommPowerWitness> comm_power_pair(const Word& w,
                                                const Word& gamma0,
                                                const Word& gamma1);

/// Re-checks a witness from scratch: the basis pair and the ≡ identity.
bool verify_witness(const Word& target, const CommPowerWitness& witness);

}  // namespace free2
