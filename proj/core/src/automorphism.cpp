#include "free2/automorphism.hpp"

#include <deque>
#include <map>
#include <stdexcept>

#include "free2/error.hpp"

namespace free2 {
namespace {

struct Images {
  Word x;
  Word y;
};

const Images& move_images(MoveKind m) {
  static const Images table[] = {
      {{Letter::X()}, {Letter::y()}},                // invert_x
      {{Letter::x()}, {Letter::Y()}},                // invert_y
      {{Letter::y()}, {Letter::x()}},                // swap
      {{Letter::x(), Letter::y()}, {Letter::y()}},   // x_to_xy
      {{Letter::x(), Letter::Y()}, {Letter::y()}},   // x_to_xY
      {{Letter::x()}, {Letter::y(), Letter::x()}},   // y_to_yx
      {{Letter::x()}, {Letter::y(), Letter::X()}},   // y_to_yX
  };
  return table[static_cast<int>(m)];
}

Word substitute(std::span<const Letter> w, const Word& img_x,
                const Word& img_y) {
  const Word inv_x = invert(img_x);
  const Word inv_y = invert(img_y);
  std::vector<Letter> out;
  out.reserve(w.size() * std::max(img_x.size(), img_y.size()));
  for (Letter a : w) {
    const Word& img = a.generator() == Generator::x
                          ? (a.sign() > 0 ? img_x : inv_x)
                          : (a.sign() > 0 ? img_y : inv_y);
    for (Letter b : img) {
      if (!out.empty() && out.back().is_inverse_of(b)) {
        out.pop_back();
      } else {
        out.push_back(b);
      }
    }
  }
  return Word(out);
}

CyclicWord move_cyclic(MoveKind m, const CyclicWord& c) {
  const Images& img = move_images(m);
  return CyclicWord::of(substitute(c.letters(), img.x, img.y));
}

// Application-order moves realising w -> a w a^-1 for a single letter a.
std::vector<MoveKind> letter_conjugation(Letter a) {
  using enum MoveKind;
  // y -> x y then y -> y X gives y -> x y X.
  static const std::vector<MoveKind> by_x = {invert_y, y_to_yX, invert_y,
                                             y_to_yX};
  // y -> X y then y -> y x gives y -> X y x.
  static const std::vector<MoveKind> by_X = {invert_y, y_to_yx, invert_y,
                                             y_to_yx};
  const auto& base = a.sign() > 0 ? by_x : by_X;
  if (a.generator() == Generator::x) return base;
  std::vector<MoveKind> out{swap};
  out.insert(out.end(), base.begin(), base.end());
  out.push_back(swap);
  return out;
}

// Single step of greedy minimization. Returns the best strictly shortening
// move, if any.
std::optional<std::pair<MoveKind, CyclicWord>> best_reduction(
    const CyclicWord& c) {
  std::optional<std::pair<MoveKind, CyclicWord>> best;
  for (MoveKind m : kNielsenMoves) {
    CyclicWord img = move_cyclic(m, c);
    const std::size_t bound = best ? best->second.size() : c.size();
    if (img.size() < bound) best.emplace(m, std::move(img));
  }
  return best;
}

}  // namespace

MoveKind inverse(MoveKind m) {
  switch (m) {
    case MoveKind::x_to_xy: return MoveKind::x_to_xY;
    case MoveKind::x_to_xY: return MoveKind::x_to_xy;
    case MoveKind::y_to_yx: return MoveKind::y_to_yX;
    case MoveKind::y_to_yX: return MoveKind::y_to_yx;
    default: return m;
  }
}

std::string_view to_string(MoveKind m) {
  static constexpr std::string_view names[] = {
      "invert_x", "invert_y", "swap", "x_to_xy", "x_to_xY", "y_to_yx",
      "y_to_yX"};
  return names[static_cast<int>(m)];
}

std::optional<MoveKind> parse_move(std::string_view name) {
  for (MoveKind m : kAllMoves) {
    if (to_string(m) == name) return m;
  }
  return std::nullopt;
}

Word apply(MoveKind m, const Word& w) {
  const Images& img = move_images(m);
  return substitute(w.letters(), img.x, img.y);
}

Automorphism::Automorphism() : x_{Letter::x()}, y_{Letter::y()} {}

Automorphism Automorphism::from_move(MoveKind m) {
  return Automorphism().then(m);
}

Automorphism Automorphism::from_moves(std::vector<MoveKind> moves) {
  Automorphism phi;
  for (MoveKind m : moves) {
    phi.x_ = free2::apply(m, phi.x_);
    phi.y_ = free2::apply(m, phi.y_);
  }
  phi.moves_ = std::move(moves);
  return phi;
}

Automorphism Automorphism::conjugation(const Word& c) {
  std::vector<MoveKind> moves;
  for (auto it = c.letters().rbegin(); it != c.letters().rend(); ++it) {
    const auto step = letter_conjugation(*it);
    moves.insert(moves.end(), step.begin(), step.end());
  }
  return from_moves(std::move(moves));
}

Word Automorphism::apply(const Word& w) const {
  return substitute(w.letters(), x_, y_);
}

Automorphism Automorphism::then(MoveKind m) const {
  Automorphism phi = *this;
  phi.x_ = free2::apply(m, phi.x_);
  phi.y_ = free2::apply(m, phi.y_);
  phi.moves_.push_back(m);
  return phi;
}

std::int64_t Automorphism::abelian_determinant() const {
  const AbelianImage a = exponent_sums(x_);
  const AbelianImage b = exponent_sums(y_);
  return a.ex * b.ey - a.ey * b.ex;
}

std::string Automorphism::factorization_string() const {
  if (moves_.empty()) return "id";
  std::string out;
  for (std::size_t i = 0; i < moves_.size(); ++i) {
    if (i) out += ';';
    out += to_string(moves_[i]);
  }
  return out;
}

Automorphism compose(const Automorphism& phi, const Automorphism& psi) {
  std::vector<MoveKind> moves = psi.factorization();
  moves.insert(moves.end(), phi.factorization().begin(),
               phi.factorization().end());
  return Automorphism::from_moves(std::move(moves));
}

Automorphism inverse(const Automorphism& phi) {
  std::vector<MoveKind> moves;
  moves.reserve(phi.factorization().size());
  for (auto it = phi.factorization().rbegin();
       it != phi.factorization().rend(); ++it) {
    moves.push_back(inverse(*it));
  }
  return Automorphism::from_moves(std::move(moves));
}

Automorphism aut_algebra(AutOp op, const Automorphism& phi,
                         const std::optional<Automorphism>& psi) {
  if ((op == AutOp::compose) != psi.has_value()) {
    throw DomainError("second automorphism required exactly for compose");
  }
  return op == AutOp::compose ? compose(phi, *psi) : inverse(phi);
}

Automorphism parse_factorization(std::string_view text) {
  std::vector<MoveKind> moves;
  if (text.empty() || text == "id") return Automorphism();
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(';', start), text.size());
    const std::string_view name = text.substr(start, end - start);
    const auto m = parse_move(name);
    if (!m) throw DomainError("unknown move '" + std::string(name) + "'");
    moves.push_back(*m);
    start = end + 1;
  }
  return Automorphism::from_moves(std::move(moves));
}

MinimizeResult whitehead_minimize(const CyclicWord& c) {
  CyclicWord cur = c;
  std::vector<MoveKind> moves;
  while (auto step = best_reduction(cur)) {
    moves.push_back(step->first);
    cur = std::move(step->second);
  }
  return {std::move(cur), Automorphism::from_moves(std::move(moves))};
}

std::size_t minimal_orbit_length(const CyclicWord& c) {
  CyclicWord cur = c;
  while (auto step = best_reduction(cur)) cur = std::move(step->second);
  return cur.size();
}

std::optional<Automorphism> orbit_equivalent(const CyclicWord& a,
                                             const CyclicWord& b) {
  if (a.empty() || b.empty()) {
    if (a.empty() && b.empty()) return Automorphism();
    return std::nullopt;
  }
  const MinimizeResult ma = whitehead_minimize(a);
  const MinimizeResult mb = whitehead_minimize(b);
  if (ma.min.size() != mb.min.size()) return std::nullopt;

  const CyclicWord target = mb.min;
  const CyclicWord target_inv = mb.min.inverse();

  // Breadth-first search over the length-preserving move graph at the
  // minimal level.
  std::map<CyclicWord, std::pair<CyclicWord, MoveKind>> parent;
  std::deque<CyclicWord> queue{ma.min};
  parent.emplace(ma.min, std::pair{ma.min, MoveKind::swap});
  std::optional<CyclicWord> hit;
  while (!queue.empty() && !hit) {
    CyclicWord cur = std::move(queue.front());
    queue.pop_front();
    if (cur == target || cur == target_inv) {
      hit = cur;
      break;
    }
    for (MoveKind m : kAllMoves) {
      CyclicWord next = move_cyclic(m, cur);
      if (next.size() != cur.size() || parent.contains(next)) continue;
      parent.emplace(next, std::pair{cur, m});
      queue.push_back(std::move(next));
    }
  }
  if (!hit) return std::nullopt;

  std::vector<MoveKind> path;
  for (CyclicWord node = *hit; !(node == ma.min);) {
    const auto& [prev, m] = parent.at(node);
    path.push_back(m);
    node = prev;
  }
  std::vector<MoveKind> moves = ma.phi.factorization();
  moves.insert(moves.end(), path.rbegin(), path.rend());
  const Automorphism back = inverse(mb.phi);
  moves.insert(moves.end(), back.factorization().begin(),
               back.factorization().end());
  return Automorphism::from_moves(std::move(moves));
}

bool shape_filter(const CyclicWord& c) {
  if (c.empty()) return false;
  const auto s = c.letters();
  const std::size_t n = s.size();

  // Start at a syllable boundary so that no syllable wraps around.
  std::size_t start = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (s[i].generator() != s[(i + n - 1) % n].generator()) {
      start = i;
      break;
    }
  }
  if (start == n) return true;  // a power of a single generator

  struct Syllable {
    Generator gen;
    std::int64_t exp;
  };
  std::vector<Syllable> syllables;
  for (std::size_t k = 0; k < n; ++k) {
    const Letter a = s[(start + k) % n];
    if (syllables.empty() || syllables.back().gen != a.generator()) {
      syllables.push_back({a.generator(), 0});
    }
    syllables.back().exp += a.sign();
  }

  auto fits = [&](Generator single) {
    std::int64_t single_sign = 0;
    std::int64_t block_sign = 0;
    std::int64_t lo = INT64_MAX;
    std::int64_t hi = 0;
    for (const Syllable& syl : syllables) {
      const std::int64_t sign = syl.exp > 0 ? 1 : -1;
      const std::int64_t mag = syl.exp * sign;
      if (syl.gen == single) {
        if (mag != 1 || (single_sign && sign != single_sign)) return false;
        single_sign = sign;
      } else {
        if (block_sign && sign != block_sign) return false;
        block_sign = sign;
        lo = std::min(lo, mag);
        hi = std::max(hi, mag);
      }
    }
    return hi - lo <= 1;
  };
  return fits(Generator::x) || fits(Generator::y);
}

bool is_primitive(const CyclicWord& c) {
  if (c.empty() || !shape_filter(c)) return false;
  return minimal_orbit_length(c) == 1;
}

bool is_primitive(const Word& u) { return is_primitive(CyclicWord::of(u)); }

MultiplicityResult primitive_root(const CyclicWord& c) {
  if (c.empty()) throw DomainError("primitive_root of the trivial class");
  const auto s = c.letters();
  const std::size_t n = s.size();
  // Failure function; the least period of a string of length n is
  // n - border(n), and it is a root only when it divides n.
  std::vector<std::size_t> border(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t k = border[i - 1];
    while (k > 0 && s[i] != s[k]) k = border[k - 1];
    if (s[i] == s[k]) ++k;
    border[i] = k;
  }
  std::size_t period = n - border[n - 1];
  if (n % period != 0) period = n;

  MultiplicityResult r;
  r.exponent = static_cast<std::int64_t>(n / period);
  r.root = CyclicWord::from_cyclically_reduced(s.first(period));
  r.root_is_primitive = is_primitive(r.root);
  return r;
}

MultiplicityResult multiplicity(const Word& u) {
  const CyclicWord core = CyclicWord::of(u);
  if (core.empty()) throw DomainError("multiplicity of the trivial word");
  return primitive_root(core);
}

Automorphism automorphism_to_x(const Word& u) {
  if (!is_primitive(u)) throw DomainError("word is not primitive");
  const MinimizeResult m = whitehead_minimize(CyclicWord::of(u));
  Automorphism phi = m.phi;

  // Signed permutation taking the remaining letter to x.
  using enum MoveKind;
  const Letter g = m.min[0];
  if (g == Letter::X()) {
    phi = phi.then(invert_x);
  } else if (g == Letter::y()) {
    phi = phi.then(swap);
  } else if (g == Letter::Y()) {
    phi = phi.then(swap).then(invert_x);
  }

  // phi(u) = c^-1 x c; finish with conjugation by c.
  const CyclicReduction red = cyclic_reduce(phi.apply(u));
  phi = compose(Automorphism::conjugation(red.conjugator), phi);
  if (phi.apply(u) != Word{Letter::x()}) {
    throw std::logic_error("automorphism_to_x: image is not x");
  }
  return phi;
}

Word complete_to_basis(const Word& a) {
  return inverse(automorphism_to_x(a)).apply(Word{Letter::y()});
}

bool is_basis(const Word& a0, const Word& b0) {
  Word a = a0;
  Word b = b0;
  while (true) {
    if (a.empty() || b.empty()) return false;
    const std::size_t total = a.size() + b.size();
    const Word ai = invert(a);
    const Word bi = invert(b);
    const std::pair<Word, Word> candidates[] = {
        {a * b, b},  {a * bi, b}, {b * a, b},  {bi * a, b},
        {a, b * a},  {a, b * ai}, {a, a * b},  {a, ai * b},
    };
    bool reduced = false;
    for (const auto& [na, nb] : candidates) {
      if (na.size() + nb.size() < total) {
        a = na;
        b = nb;
        reduced = true;
        break;
      }
    }
    if (!reduced) break;
  }
  return a.size() == 1 && b.size() == 1 &&
         a[0].generator() != b[0].generator();
}

}  // namespace free2
