#include "free2/oracle.hpp"

#include <algorithm>
#include <deque>

#include "free2/error.hpp"

namespace free2::oracle {
namespace {

// Letters as ranks: 0 x, 1 X, 2 y, 3 Y. Inverse flips the low bit.
using Raw = std::vector<int>;

int inv(int a) { return a ^ 1; }

Raw reduce(const Raw& w) {
  Raw out;
  for (int a : w) {
    if (!out.empty() && out.back() == inv(a)) {
      out.pop_back();
    } else {
      out.push_back(a);
    }
  }
  return out;
}

Raw cyclic_core(Raw w) {
  w = reduce(w);
  while (w.size() >= 2 && w.front() == inv(w.back())) {
    w.erase(w.begin());
    w.pop_back();
  }
  return w;
}

Raw inverse_of(const Raw& w) {
  Raw out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inv(*it));
  return out;
}

std::string canonical(const Raw& w) {
  std::string best;
  for (std::size_t i = 0; i < w.size(); ++i) {
    std::string rot;
    for (std::size_t k = 0; k < w.size(); ++k) {
      rot += static_cast<char>('0' + w[(i + k) % w.size()]);
    }
    if (best.empty() || rot < best) best = rot;
  }
  return best;
}

Raw from_cyclic(const CyclicWord& c) {
  Raw out;
  for (Letter a : c.letters()) out.push_back(a.rank());
  return out;
}

CyclicWord to_cyclic(const std::string& canon) {
  static const Letter letters[] = {Letter::x(), Letter::X(), Letter::y(),
                                   Letter::Y()};
  std::vector<Letter> s;
  for (char ch : canon) s.push_back(letters[ch - '0']);
  return CyclicWord::from_cyclically_reduced(s);
}

// Images of x and y under the seven elementary moves, listed independently
// of the core library's tables.
struct RawMove {
  Raw x_image;
  Raw y_image;
};
const std::vector<RawMove>& raw_moves() {
  static const std::vector<RawMove> moves = {
      {{1}, {2}},     // x -> X
      {{0}, {3}},     // y -> Y
      {{2}, {0}},     // x <-> y
      {{0, 2}, {2}},  // x -> xy
      {{0, 3}, {2}},  // x -> xY
      {{0}, {2, 0}},  // y -> yx
      {{0}, {2, 1}},  // y -> yX
  };
  return moves;
}

Raw substitute(const Raw& w, const RawMove& m) {
  Raw out;
  for (int a : w) {
    const Raw& img = (a >> 1) == 0 ? m.x_image : m.y_image;
    if (a & 1) {
      for (auto it = img.rbegin(); it != img.rend(); ++it) out.push_back(inv(*it));
    } else {
      out.insert(out.end(), img.begin(), img.end());
    }
  }
  return out;
}

void check_length(std::size_t len) {
  if (len > kMaxLength) {
    throw DomainError("oracle length bound of " + std::to_string(kMaxLength) +
                      " exceeded");
  }
}

}  // namespace

void for_each_cyclic_word(std::size_t max_length,
                          const std::function<void(const CyclicWord&)>& fn) {
  check_length(max_length);
  Raw w;
  std::function<void(std::size_t)> extend = [&](std::size_t target) {
    if (w.size() == target) {
      if (w.size() >= 2 && w.front() == inv(w.back())) return;
      std::string here;
      for (int a : w) here += static_cast<char>('0' + a);
      if (canonical(w) == here) fn(to_cyclic(here));
      return;
    }
    for (int a = 0; a < 4; ++a) {
      if (!w.empty() && w.back() == inv(a)) continue;
      w.push_back(a);
      extend(target);
      w.pop_back();
    }
  };
  for (std::size_t len = 1; len <= max_length; ++len) extend(len);
}

std::vector<CyclicWord> enumerate_cyclic_words(std::size_t max_length) {
  std::vector<CyclicWord> out;
  for_each_cyclic_word(max_length,
                       [&](const CyclicWord& c) { out.push_back(c); });
  return out;
}

OrbitBall::OrbitBall(const CyclicWord& start, std::size_t max_length)
    : max_length_(max_length) {
  check_length(max_length);
  const Raw s = cyclic_core(from_cyclic(start));
  if (s.size() > max_length) {
    throw DomainError("orbit ball start is longer than its cap");
  }
  std::deque<Raw> queue{s};
  members_.insert(canonical(s));
  while (!queue.empty()) {
    const Raw cur = std::move(queue.front());
    queue.pop_front();
    std::vector<Raw> next;
    for (const RawMove& m : raw_moves()) {
      next.push_back(cyclic_core(substitute(cur, m)));
    }
    next.push_back(inverse_of(cur));
    for (Raw& n : next) {
      if (n.size() > max_length) continue;
      if (members_.insert(canonical(n)).second) queue.push_back(std::move(n));
    }
  }
  const auto shortest = std::min_element(
      members_.begin(), members_.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
      });
  seed_ = to_cyclic(*shortest);
}

bool OrbitBall::contains(const CyclicWord& c) const {
  return members_.contains(canonical(from_cyclic(c)));
}

std::vector<CyclicWord> OrbitBall::members() const {
  std::vector<CyclicWord> out;
  for (const auto& m : members_) out.push_back(to_cyclic(m));
  return out;
}

bool bfs_orbit_oracle(const CyclicWord& a, const CyclicWord& b) {
  const std::size_t cap = std::max(a.size(), b.size());
  check_length(cap);
  if (a.empty() || b.empty()) return a.empty() && b.empty();
  return OrbitBall(a, cap).contains(b);
}

bool is_primitive_oracle(const CyclicWord& c) {
  return bfs_orbit_oracle(CyclicWord::of(Word{Letter::x()}), c);
}

NaiveRoot naive_root(const CyclicWord& c) {
  const Raw w = from_cyclic(c);
  const std::size_t n = w.size();
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = 0; i < n && periodic; ++i) periodic = w[i] == w[i % d];
    if (periodic) {
      const Raw root(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(d));
      return {static_cast<std::int64_t>(n / d), to_cyclic(canonical(root))};
    }
  }
  return {1, c};
}

bool is_power_of_primitive_oracle(const CyclicWord& c) {
  if (c.empty()) return false;
  const NaiveRoot r = naive_root(c);
  return r.exponent >= 2 && is_primitive_oracle(r.root);
}

}  // namespace free2::oracle
