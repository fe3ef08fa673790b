#include "insep/nat.hpp"

#include <stdexcept>

namespace insep {

Nat pair(const Nat& a, const Nat& b) {
  Nat s = a + b;
  return s * (s + 1) / 2 + b;
}

void unpair(const Nat& n, Nat& a, Nat& b) {
  // s = floor((sqrt(8n+1)-1)/2) is the diagonal; b = n - T(s).
  Nat disc = 8 * n + 1;
  Nat s = (boost::multiprecision::sqrt(disc) - 1) / 2;
  Nat t = s * (s + 1) / 2;
  b = n - t;
  a = s - b;
}

Nat proj0(const Nat& n) {
  Nat a, b;
  unpair(n, a, b);
  return a;
}

Nat proj1(const Nat& n) {
  Nat a, b;
  unpair(n, a, b);
  return b;
}

Nat tuple(const std::vector<Nat>& xs) {
  if (xs.empty()) throw std::invalid_argument("tuple: empty");
  Nat acc = xs.back();
  for (std::size_t i = xs.size() - 1; i-- > 0;) acc = pair(xs[i], acc);
  return acc;
}

std::vector<Nat> untuple(const Nat& n, std::size_t arity) {
  if (arity == 0) throw std::invalid_argument("untuple: arity 0");
  std::vector<Nat> out;
  Nat rest = n;
  for (std::size_t i = 0; i + 1 < arity; ++i) {
    Nat a, b;
    unpair(rest, a, b);
    out.push_back(a);
    rest = b;
  }
  out.push_back(rest);
  return out;
}

std::vector<int> to_bijective(const Nat& n, int base) {
  std::vector<int> digits;
  Nat m = n;
  while (m > 0) {
    Nat r = (m - 1) % base;
    int d = static_cast<int>(r) + 1;
    digits.push_back(d);
    m = (m - d) / base;
  }
  // Digits were produced least significant first.
  std::vector<int> out(digits.rbegin(), digits.rend());
  return out;
}

Nat from_bijective(const std::vector<int>& digits, int base) {
  Nat v = 0;
  for (int d : digits) v = v * base + d;
  return v;
}

Nat encode_seq(const std::vector<Nat>& items) {
  if (items.empty()) return 0;
  std::vector<int> digits;
  if (items.size() == 1) {
    digits = to_bijective(items[0] + 1, 2);
  } else {
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (i > 0) digits.push_back(3);
      std::vector<int> part = to_bijective(items[i], 2);
      digits.insert(digits.end(), part.begin(), part.end());
    }
  }
  return from_bijective(digits, 3);
}

std::vector<Nat> decode_seq(const Nat& code) {
  if (code == 0) return {};
  std::vector<int> digits = to_bijective(code, 3);
  bool has_sep = false;
  for (int d : digits)
    if (d == 3) has_sep = true;
  if (!has_sep) return {from_bijective(digits, 2) - 1};
  std::vector<Nat> items;
  std::vector<int> part;
  for (int d : digits) {
    if (d == 3) {
      items.push_back(from_bijective(part, 2));
      part.clear();
    } else {
      part.push_back(d);
    }
  }
  items.push_back(from_bijective(part, 2));
  return items;
}

std::uint64_t seq_length(const Nat& code) {
  if (code == 0) return 0;
  std::vector<int> digits = to_bijective(code, 3);
  std::uint64_t seps = 0;
  for (int d : digits)
    if (d == 3) ++seps;
  if (seps == 0) return 1;
  return seps + 1;
}

std::string nat_str(const Nat& n) { return n.str(); }

}  // namespace insep
