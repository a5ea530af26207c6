#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace designforge {

// A ring element by its integer code. For GF(17^2) the code 17a + b stands
// for a*z + b.
struct Element {
  int code = 0;

  friend auto operator<=>(const Element&, const Element&) = default;
};

// Z_p for prime p, or GF(17^2) = Z_17[z] / (z^2 + 3z + 1).
class Ring {
 public:
  enum class Kind { prime_field, gf289 };

  static Ring prime_field(int p);
  static Ring gf289();

  Kind kind() const noexcept { return kind_; }
  int order() const noexcept { return order_; }

  bool valid(Element x) const noexcept { return x.code >= 0 && x.code < order_; }

  Element zero() const noexcept { return {0}; }
  Element one() const noexcept { return {1}; }

  Element add(Element x, Element y) const;
  Element neg(Element x) const;
  Element sub(Element x, Element y) const;
  Element mul(Element x, Element y) const;
  Element pow(Element x, std::uint64_t e) const;
  // Throws invalid_element for zero.
  Element inverse(Element x) const;

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  Ring(Kind kind, int order) : kind_(kind), order_(order) {}
  void check(Element x) const;

  Kind kind_;
  int order_;
};

inline constexpr int kGfBase = 17;
// z^2 + 3z + 1: the coefficients (c1, c0) of z^2 = -(c1 z + c0).
inline constexpr int kGfLinear = 3;
inline constexpr int kGfConstant = 1;

bool is_prime(int n);
bool gf289_modulus_irreducible();

// Partition of the nonzero elements into cosets of H = {+-omega^e : 0 <= e <
// exponents}. Throws not_a_subgroup unless H is a subgroup of order
// 2 * exponents. Cosets are sorted internally and ordered by least element.
std::vector<std::vector<Element>> unit_group_coset_partition(const Ring& ring, Element omega,
                                                             int exponents);

// Multiplicative order of x (x nonzero).
std::uint64_t multiplicative_order(const Ring& ring, Element x);

}  // namespace designforge
