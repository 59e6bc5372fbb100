#include "bergman/types.hpp"

#include <bit>

namespace bergman {

Mask full_mask(int n) {
  if (n < 0 || n > 31) throw std::invalid_argument("ground size out of range: " + std::to_string(n));
  return n == 0 ? 0u : ((Mask{1} << n) - 1);
}

std::vector<int> elements_of(Mask m) {
  std::vector<int> out;
  while (m != 0) {
    out.push_back(std::countr_zero(m) + 1);
    m &= m - 1;
  }
  return out;
}

Mask mask_of(const std::vector<int>& elements, int n) {
  Mask m = 0;
  for (int e : elements) {
    if (e < 1 || e > n) {
      throw std::invalid_argument("element " + std::to_string(e) + " outside ground set {1.." +
                                  std::to_string(n) + "}");
    }
    m |= Mask{1} << (e - 1);
  }
  return m;
}

bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }

bool set_lex_less(Mask a, Mask b) {
  while (a != 0 && b != 0) {
    int ea = std::countr_zero(a);
    int eb = std::countr_zero(b);
    if (ea != eb) return ea < eb;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

std::string format_subset(Mask m) {
  std::string out = "{";
  bool first = true;
  for (int e : elements_of(m)) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

void check_ground_size(int n, int cap, const char* operation) {
  if (n > cap) {
    throw CapacityError(std::string(operation) + ": ground size " + std::to_string(n) +
                        " exceeds enumeration bound " + std::to_string(cap));
  }
}

}  // namespace bergman
