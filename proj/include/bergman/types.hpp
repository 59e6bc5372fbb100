#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace bergman {

// Ground sets are {1..n}; element e is bit e-1 of a Mask.
using Mask = std::uint32_t;

// Exact rational arithmetic throughout; sign decisions are never made on
// floating point.
using Rational = mpq_class;

// Hard caps on the enumeration-based operations.  3^n sign-vector sweeps are
// capped lower than 2^n subset sweeps.
inline constexpr int kCovectorGroundCap = 14;
inline constexpr int kSubsetGroundCap = 20;

class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

Mask full_mask(int n);
std::vector<int> elements_of(Mask m);
Mask mask_of(const std::vector<int>& elements, int n);
bool is_subset(Mask a, Mask b);

// Order on subsets viewed as sorted element lists ({1,4} < {2}, {} < {1}).
bool set_lex_less(Mask a, Mask b);

std::string format_subset(Mask m);

void check_ground_size(int n, int cap, const char* operation);

}  // namespace bergman
