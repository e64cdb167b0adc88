#include "free2/structure.hpp"

#include <algorithm>

#include "free2/error.hpp"

namespace free2 {
namespace {

MultiplicityResult require_power_of_primitive(const Word& gamma,
                                              const char* what) {
  MultiplicityResult r = multiplicity(gamma);
  if (!r.is_proper_power_of_primitive()) {
    throw DomainError(std::string(what) +
                      " is not a proper power of a primitive element");
  }
  return r;
}

}  // namespace

EquivClass equiv_class(const Word& u) {
  const CyclicWord c = CyclicWord::of(u);
  CyclicWord inv = c.inverse();
  return {std::min(c, inv)};
}

bool equiv(const Word& u, const Word& v) {
  if (u.size() % 2 != v.size() % 2) return false;  // parity of length is a class invariant
  return equiv_class(u) == equiv_class(v);
}

bool is_commutator_of_basis(const Word& w) {
  static const Word xy_commutator =
      commutator(Word{Letter::x()}, Word{Letter::y()});
  return equiv(w, xy_commutator);
}

std::optional<PowerForm> power_form_match(const CyclicWord& c,
                                          std::int64_t n) {
  if (n < 1) throw DomainError("power_form_match needs n >= 1");
  const auto s = c.letters();
  const std::size_t len = s.size();
  if (len == 0 || len % static_cast<std::size_t>(n) != 0) return std::nullopt;
  const std::size_t d = len / static_cast<std::size_t>(n);
  for (std::size_t i = 0; i + d < len; ++i) {
    if (s[i] != s[i + d]) return std::nullopt;
  }
  PowerForm f;
  int ys = 0;
  for (Letter a : s.first(d)) {
    if (a.generator() == Generator::y) {
      ++ys;
      f.epsilon = a.sign();
    } else {
      f.s += a.sign();
    }
  }
  if (ys != 1) return std::nullopt;
  return f;
}

std::string_view to_string(Condition c) {
  switch (c) {
    case Condition::i: return "i";
    case Condition::ii: return "ii";
    case Condition::iii: return "iii";
  }
  return "?";
}

std::optional<CommPowerWitness> comm_power_form(const Word& w,
                                                const Word& gamma) {
  const MultiplicityResult mu = require_power_of_primitive(gamma, "gamma");
  const Word root = mu.root.to_word();
  // psi(root) == y exactly; by conjugation compatibility any basis with
  // gamma ≡ v^m gives the same class of [u, v^m], so one test suffices.
  const Automorphism psi = automorphism_to_x(root).then(MoveKind::swap);
  const Word x{Letter::x()};
  const Word y{Letter::y()};
  if (!equiv(psi.apply(w), commutator(x, power(y, mu.exponent)))) {
    return std::nullopt;
  }
  const Automorphism back = inverse(psi);
  CommPowerWitness out;
  out.condition = Condition::ii;
  out.basis_first = back.apply(y);
  out.basis_second = back.apply(x);
  out.m = mu.exponent;
  out.n = 1;
  return out;
}

std::optional<CommPowerWitness> comm_power_pair(const Word& w,
                                                const Word& gamma0,
                                                const Word& gamma1) {
  const MultiplicityResult mu0 = require_power_of_primitive(gamma0, "gamma0");
  const MultiplicityResult mu1 = require_power_of_primitive(gamma1, "gamma1");
  const Automorphism phi = automorphism_to_x(mu0.root.to_word());

  // Any b completing a = phi^-1(x) has phi(b) = x^k y^e x^l, so phi(gamma1)
  // must be ≡ (y^e x^(k+l))^n.
  const auto form =
      power_form_match(CyclicWord::of(phi.apply(gamma1)), mu1.exponent);
  if (!form) return std::nullopt;

  const Word x{Letter::x()};
  const Word b_image = generator_power(Generator::y, form->epsilon) *
                       generator_power(Generator::x, form->s);
  const Word model = commutator(power(x, mu0.exponent),
                                power(b_image, mu1.exponent));
  if (!equiv(phi.apply(w), model)) return std::nullopt;

  const Automorphism back = inverse(phi);
  CommPowerWitness out;
  out.condition = Condition::iii;
  out.basis_first = back.apply(x);
  out.basis_second = back.apply(b_image);
  out.m = mu0.exponent;
  out.n = mu1.exponent;
  return out;
}

bool verify_witness(const Word& target, const CommPowerWitness& witness) {
  if (!is_basis(witness.basis_first, witness.basis_second)) return false;
  return equiv(target, commutator(power(witness.basis_first, witness.m),
                                  power(witness.basis_second, witness.n)));
}

}  // namespace free2
