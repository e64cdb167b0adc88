#include "free2/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>

#include "free2/error.hpp"

namespace free2 {
namespace {

void push_reduced(std::vector<Letter>& out, Letter a) {
  if (!out.empty() && out.back().is_inverse_of(a)) {
    out.pop_back();
  } else {
    out.push_back(a);
  }
}

bool is_cyclically_reduced(std::span<const Letter> letters) {
  for (std::size_t i = 1; i < letters.size(); ++i) {
    if (letters[i].is_inverse_of(letters[i - 1])) return false;
  }
  return letters.size() < 2 || !letters.front().is_inverse_of(letters.back());
}

std::uint64_t magnitude(std::int64_t k) {
  return k < 0 ? std::uint64_t{0} - static_cast<std::uint64_t>(k)
               : static_cast<std::uint64_t>(k);
}

class Parser {
 public:
  Parser(std::string_view text, std::size_t cap) : text_(text), cap_(cap) {}

  Word parse() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError("empty expression", pos_);
    Word w = sequence();
    if (pos_ != text_.size()) {
      throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    }
    return w;
  }

 private:
  Word sequence() {
    Word acc;
    bool any = false;
    while (true) {
      skip_space();
      if (pos_ == text_.size() || text_[pos_] == ')') break;
      acc = checked(multiply(acc, factor()));
      any = true;
    }
    if (!any) throw ParseError("expected a word", pos_);
    return acc;
  }

  Word factor() {
    Word base = primary();
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      return power(base, exponent(), cap_);
    }
    return base;
  }

  Word primary() {
    const std::size_t at = pos_;
    const char c = text_[pos_++];
    switch (c) {
      case 'x': return Word{Letter::x()};
      case 'X': return Word{Letter::X()};
      case 'y': return Word{Letter::y()};
      case 'Y': return Word{Letter::Y()};
      case '1': return Word{};
      case '(': {
        Word inner = sequence();
        skip_space();
        if (pos_ == text_.size() || text_[pos_] != ')') {
          throw ParseError("unbalanced '('", at);
        }
        ++pos_;
        return inner;
      }
      default:
        throw ParseError(std::string("unexpected '") + c + "'", at);
    }
  }

  std::int64_t exponent() {
    skip_space();
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) throw ParseError("expected an integer exponent", start);
    std::uint64_t value = 0;
    auto [ptr, ec] =
        std::from_chars(text_.data() + start, text_.data() + pos_, value);
    (void)ptr;
    constexpr auto max = static_cast<std::uint64_t>(
        std::numeric_limits<std::int64_t>::max());
    if (ec == std::errc::result_out_of_range || value > max + (negative ? 1 : 0)) {
      throw OverflowError("exponent out of 64-bit range at position " +
                          std::to_string(start));
    }
    if (negative) {
      return value == max + 1 ? std::numeric_limits<std::int64_t>::min()
                              : -static_cast<std::int64_t>(value);
    }
    return static_cast<std::int64_t>(value);
  }

  Word checked(Word w) const {
    if (w.size() > cap_) {
      throw LengthCapError("word exceeds length cap of " +
                           std::to_string(cap_) + " letters");
    }
    return w;
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  std::string_view text_;
  std::size_t cap_;
  std::size_t pos_ = 0;
};

}  // namespace

Word::Word(std::span<const Letter> letters) {
  letters_.reserve(letters.size());
  for (Letter a : letters) push_reduced(letters_, a);
}

Word::Word(std::initializer_list<Letter> letters)
    : Word(std::span<const Letter>(letters.begin(), letters.size())) {}

CyclicWord CyclicWord::from_cyclically_reduced(
    std::span<const Letter> letters) {
  if (!is_cyclically_reduced(letters)) {
    throw DomainError("word is not cyclically reduced");
  }
  CyclicWord c;
  const std::size_t start = least_rotation(letters);
  c.letters_.reserve(letters.size());
  c.letters_.insert(c.letters_.end(), letters.begin() + start, letters.end());
  c.letters_.insert(c.letters_.end(), letters.begin(), letters.begin() + start);
  return c;
}

CyclicWord CyclicWord::of(const Word& w) { return cyclic_reduce(w).core; }

CyclicWord CyclicWord::inverse() const {
  std::vector<Letter> inv;
  inv.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    inv.push_back(it->inverse());
  }
  return from_cyclically_reduced(inv);
}

Word multiply(const Word& u, const Word& v) {
  std::size_t overlap = 0;
  const auto a = u.letters();
  const auto b = v.letters();
  while (overlap < a.size() && overlap < b.size() &&
         a[a.size() - 1 - overlap].is_inverse_of(b[overlap])) {
    ++overlap;
  }
  std::vector<Letter> out;
  out.reserve(a.size() + b.size() - 2 * overlap);
  out.insert(out.end(), a.begin(), a.end() - static_cast<std::ptrdiff_t>(overlap));
  out.insert(out.end(), b.begin() + static_cast<std::ptrdiff_t>(overlap), b.end());
  return Word(out);
}

Word invert(const Word& u) {
  std::vector<Letter> out;
  out.reserve(u.size());
  for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it) {
    out.push_back(it->inverse());
  }
  return Word(out);
}

Word commutator(const Word& u, const Word& v) {
  return multiply(multiply(u, v), multiply(invert(u), invert(v)));
}

Word power(const Word& u, std::int64_t k, std::size_t length_cap) {
  if (k == 0 || u.empty()) return {};
  const CyclicReduction red = cyclic_reduce(u);
  const std::size_t prefix = u.size() - red.core_word.size();  // 2|conjugator|
  const std::uint64_t times = magnitude(k);
  const std::size_t core = red.core_word.size();
  if (prefix > length_cap ||
      times > (length_cap - prefix) / static_cast<std::uint64_t>(core)) {
    throw LengthCapError("power exceeds length cap of " +
                         std::to_string(length_cap) + " letters");
  }
  const Word block = k > 0 ? red.core_word : invert(red.core_word);
  std::vector<Letter> out;
  out.reserve(prefix + times * core);
  const Word head = invert(red.conjugator);
  out.insert(out.end(), head.begin(), head.end());
  for (std::uint64_t i = 0; i < times; ++i) {
    out.insert(out.end(), block.begin(), block.end());
  }
  out.insert(out.end(), red.conjugator.begin(), red.conjugator.end());
  return Word(out);
}

Word generator_power(Generator g, std::int64_t k, std::size_t length_cap) {
  if (magnitude(k) > length_cap) {
    throw LengthCapError("power exceeds length cap of " +
                         std::to_string(length_cap) + " letters");
  }
  const Letter a(g, k < 0 ? -1 : +1);
  return Word(std::vector<Letter>(magnitude(k), a));
}

CyclicReduction cyclic_reduce(const Word& u) {
  const auto a = u.letters();
  std::size_t i = 0;
  std::size_t j = a.size();
  while (j - i >= 2 && a[i].is_inverse_of(a[j - 1])) {
    ++i;
    --j;
  }
  CyclicReduction r;
  r.core_word = Word(a.subspan(i, j - i));
  r.core = CyclicWord::from_cyclically_reduced(r.core_word.letters());
  // u = P m P^-1 with P = a[0, i), so the conjugator is P^-1.
  r.conjugator = invert(Word(a.subspan(0, i)));
  return r;
}

AbelianImage exponent_sums(const Word& u) {
  AbelianImage img;
  for (Letter a : u) {
    (a.generator() == Generator::x ? img.ex : img.ey) += a.sign();
  }
  return img;
}

std::size_t least_rotation(std::span<const Letter> s) {
  // Two-candidate scan over the doubled sequence.
  const std::size_t n = s.size();
  std::size_t i = 0;
  std::size_t j = 1;
  std::size_t k = 0;
  while (i < n && j < n && k < n) {
    const Letter a = s[(i + k) % n];
    const Letter b = s[(j + k) % n];
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b) {
      i += k + 1;
    } else {
      j += k + 1;
    }
    if (i == j) ++j;
    k = 0;
  }
  return n == 0 ? 0 : std::min(i, j);
}

Word parse_word(std::string_view text, std::size_t length_cap) {
  return Parser(text, length_cap).parse();
}

std::string format_letters(std::span<const Letter> letters) {
  if (letters.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < letters.size()) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    const std::size_t run = j - i;
    const Letter a = letters[i];
    if (run == 1) {
      out += a.symbol();
    } else {
      out += a.symbol();
      out += '^';
      out += std::to_string(run);
    }
    i = j;
  }
  return out;
}

std::string format_word(const Word& w) { return format_letters(w.letters()); }

std::string format_cyclic(const CyclicWord& c) {
  return format_letters(c.letters());
}

}  // namespace free2
