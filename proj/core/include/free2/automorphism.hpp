#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "free2/word.hpp"

namespace free2 {

/// Elementary automorphisms of F(x, y). Together with inner automorphisms
/// they generate Aut(F2). The declaration order is the fixed enumeration
/// order used to break ties.
enum class MoveKind : std::uint8_t {
  invert_x,
  invert_y,
  swap,
  x_to_xy,
  x_to_xY,
  y_to_yx,
  y_to_yX,
};

inline constexpr std::array<MoveKind, 7> kAllMoves = {
    MoveKind::invert_x, MoveKind::invert_y, MoveKind::swap,
    MoveKind::x_to_xy,  MoveKind::x_to_xY,  MoveKind::y_to_yx,
    MoveKind::y_to_yX};

/// The four moves that can change cyclic length. Any Whitehead automorphism
/// of rank two is one of these up to an inner automorphism and a signed
/// permutation of the generators.
inline constexpr std::array<MoveKind, 4> kNielsenMoves = {
    MoveKind::x_to_xy, MoveKind::x_to_xY, MoveKind::y_to_yx,
    MoveKind::y_to_yX};

MoveKind inverse(MoveKind m);
std::string_view to_string(MoveKind m);
std::optional<MoveKind> parse_move(std::string_view name);

/// Applies one elementary move to a word.
Word apply(MoveKind m, const Word& w);

/// An automorphism stored as generator images together with a
/// factorization into elementary moves, listed in the order they are
/// applied. The images are always derived from the factorization.
class Automorphism {
 public:
  /// Identity.
  Automorphism();
  static Automorphism from_move(MoveKind m);
  static Automorphism from_moves(std::vector<MoveKind> moves);
  /// Inner automorphism w -> c w c^-1, factorized into elementary moves.
  static Automorphism conjugation(const Word& c);

  const Word& image_of_x() const noexcept { return x_; }
  const Word& image_of_y() const noexcept { return y_; }
  const std::vector<MoveKind>& factorization() const noexcept {
    return moves_;
  }

  Word apply(const Word& w) const;
  Word operator()(const Word& w) const { return apply(w); }

  /// This automorphism followed by `m`.
  Automorphism then(MoveKind m) const;

  /// Determinant of the induced map on Z^2; always +1 or -1.
  std::int64_t abelian_determinant() const;

  /// "swap;x_to_xy;invert_y", or "id" for the empty factorization.
  std::string factorization_string() const;

  friend bool operator==(const Automorphism& a, const Automorphism& b) {
    return a.x_ == b.x_ && a.y_ == b.y_;
  }

 private:
  Word x_;
  Word y_;
  std::vector<MoveKind> moves_;
};

/// compose(phi, psi) applies psi first, then phi.
Automorphism compose(const Automorphism& phi, const Automorphism& psi);
Automorphism inverse(const Automorphism& phi);

enum class AutOp { compose, invert };

/// Automorphism algebra entry point: psi must be present iff op == compose.
Automorphism aut_algebra(AutOp op, const Automorphism& phi,
                         const std::optional<Automorphism>& psi = {});

/// Parses a factorization string such as "swap;x_to_xy" ("id" or "" is the
/// identity). Throws DomainError on unknown move names.
Automorphism parse_factorization(std::string_view text);

struct MinimizeResult {
  CyclicWord min;
  /// Carries the input class to `min`.
  Automorphism phi;
};

/// Whitehead minimization of a conjugacy class. Greedy: at every step the
/// move with the largest length drop is taken, ties going to the first
/// move in enumeration order.
MinimizeResult whitehead_minimize(const CyclicWord& c);

/// Length of a Whitehead-minimal element in the orbit of `c`.
std::size_t minimal_orbit_length(const CyclicWord& c);

/// Some automorphism carrying the class of `a` to the class of `b` or of
/// its inverse, if one exists.
std::optional<Automorphism> orbit_equivalent(const CyclicWord& a,
                                             const CyclicWord& b);

/// Necessary condition for being primitive or a power of a primitive.
/// False certifies that the class is neither.
bool shape_filter(const CyclicWord& c);

bool is_primitive(const Word& u);
bool is_primitive(const CyclicWord& c);

struct MultiplicityResult {
  std::int64_t exponent = 1;
  CyclicWord root;
  bool root_is_primitive = false;

  bool is_proper_power_of_primitive() const {
    return exponent >= 2 && root_is_primitive;
  }
};

/// Largest n with c = r^n as a cyclic sequence. Throws DomainError on the
/// empty class.
MultiplicityResult primitive_root(const CyclicWord& c);

/// Multiplicity of the class of u (primitive_root of its cyclic core).
/// Throws DomainError when u is trivial.
MultiplicityResult multiplicity(const Word& u);

/// An automorphism phi with phi(u) == x as elements (not just classes).
/// Throws DomainError unless u is primitive.
Automorphism automorphism_to_x(const Word& u);

/// Some b such that {a, b} is a basis. Throws DomainError unless a is
/// primitive.
Word complete_to_basis(const Word& a);

/// Decides whether {a, b} is a basis by Nielsen-reducing the pair until
/// it is a pair of distinct generators (up to inversion and order) or no
/// length-reducing move remains.
bool is_basis(const Word& a, const Word& b);

}  // namespace free2
