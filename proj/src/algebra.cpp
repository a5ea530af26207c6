#include "algebra.hpp"

#include <algorithm>
#include <string>

#include "error.hpp"

namespace designforge {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool gf289_modulus_irreducible() {
  for (int x = 0; x < kGfBase; ++x) {
    if ((x * x + kGfLinear * x + kGfConstant) % kGfBase == 0) return false;
  }
  return true;
}

Ring Ring::prime_field(int p) {
  if (!is_prime(p)) {
    throw Error(ErrorKind::invalid_argument, std::to_string(p) + " is not prime");
  }
  return Ring(Kind::prime_field, p);
}

Ring Ring::gf289() {
  if (!gf289_modulus_irreducible()) {
    throw Error(ErrorKind::invalid_argument, "z^2 + 3z + 1 is reducible over Z_17");
  }
  return Ring(Kind::gf289, kGfBase * kGfBase);
}

void Ring::check(Element x) const {
  if (!valid(x)) {
    throw Error(ErrorKind::invalid_element, "element code " + std::to_string(x.code) +
                                                " outside 0.." + std::to_string(order_ - 1));
  }
}

Element Ring::add(Element x, Element y) const {
  check(x);
  check(y);
  if (kind_ == Kind::prime_field) return {(x.code + y.code) % order_};
  const int a = (x.code / kGfBase + y.code / kGfBase) % kGfBase;
  const int b = (x.code % kGfBase + y.code % kGfBase) % kGfBase;
  return {a * kGfBase + b};
}

Element Ring::neg(Element x) const {
  check(x);
  if (kind_ == Kind::prime_field) return {(order_ - x.code) % order_};
  const int a = (kGfBase - x.code / kGfBase) % kGfBase;
  const int b = (kGfBase - x.code % kGfBase) % kGfBase;
  return {a * kGfBase + b};
}

Element Ring::sub(Element x, Element y) const { return add(x, neg(y)); }

Element Ring::mul(Element x, Element y) const {
  check(x);
  check(y);
  if (kind_ == Kind::prime_field) {
    return {static_cast<int>(static_cast<long long>(x.code) * y.code % order_)};
  }
  const int a = x.code / kGfBase, b = x.code % kGfBase;
  const int c = y.code / kGfBase, d = y.code % kGfBase;
  // (az + b)(cz + d) = ac z^2 + (ad + bc) z + bd, with z^2 = -3z - 1.
  const int ac = a * c;
  const int reduce_linear = kGfBase - kGfLinear;
  const int reduce_constant = kGfBase - kGfConstant;
  const int hi = (ac * reduce_linear + a * d + b * c) % kGfBase;
  const int lo = (ac * reduce_constant + b * d) % kGfBase;
  return {hi * kGfBase + lo};
}

Element Ring::pow(Element x, std::uint64_t e) const {
  check(x);
  Element result = one();
  Element base = x;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Element Ring::inverse(Element x) const {
  check(x);
  if (x.code == 0) throw Error(ErrorKind::invalid_element, "zero has no inverse");
  return pow(x, static_cast<std::uint64_t>(order_ - 2));
}

std::uint64_t multiplicative_order(const Ring& ring, Element x) {
  if (x.code == 0) throw Error(ErrorKind::invalid_element, "zero has no multiplicative order");
  Element y = x;
  std::uint64_t k = 1;
  while (y != ring.one()) {
    y = ring.mul(y, x);
    ++k;
  }
  return k;
}

std::vector<std::vector<Element>> unit_group_coset_partition(const Ring& ring, Element omega,
                                                             int exponents) {
  if (exponents < 1) throw Error(ErrorKind::invalid_argument, "exponent count must be positive");
  if (!ring.valid(omega) || omega.code == 0) {
    throw Error(ErrorKind::invalid_element, "omega must be a nonzero element");
  }

  std::vector<Element> h;
  for (int e = 0; e < exponents; ++e) {
    const Element p = ring.pow(omega, static_cast<std::uint64_t>(e));
    h.push_back(p);
    h.push_back(ring.neg(p));
  }
  std::sort(h.begin(), h.end());
  h.erase(std::unique(h.begin(), h.end()), h.end());

  const auto expected = static_cast<std::size_t>(2 * exponents);
  auto fail = [&](const std::string& why) {
    return Error(ErrorKind::not_a_subgroup, "{+-omega^e : e < " + std::to_string(exponents) +
                                                "} with omega = " + std::to_string(omega.code) +
                                                " " + why);
  };
  if (h.size() != expected) {
    throw fail("has " + std::to_string(h.size()) + " elements, expected " +
               std::to_string(expected));
  }
  for (Element x : h) {
    for (Element y : h) {
      if (!std::binary_search(h.begin(), h.end(), ring.mul(x, y))) {
        throw fail("is not closed under multiplication");
      }
    }
  }

  std::vector<bool> seen(ring.order(), false);
  std::vector<std::vector<Element>> cosets;
  for (int c = 1; c < ring.order(); ++c) {
    if (seen[c]) continue;
    std::vector<Element> coset;
    for (Element g : h) {
      const Element y = ring.mul(g, Element{c});
      seen[y.code] = true;
      coset.push_back(y);
    }
    std::sort(coset.begin(), coset.end());
    cosets.push_back(std::move(coset));
  }
  return cosets;
}

}  // namespace designforge
