#include <algorithm>
#include <string>

#include "algebra.hpp"
#include "error.hpp"
#include "gdd.hpp"

namespace designforge {

bool is_latin(const LatinSquare& s) {
  const int m = s.order;
  if (m < 1 || s.cells.size() != static_cast<std::size_t>(m) * m) return false;
  for (int i = 0; i < m; ++i) {
    std::vector<bool> row(m, false);
    std::vector<bool> col(m, false);
    for (int j = 0; j < m; ++j) {
      const int r = s.at(i, j);
      const int c = s.at(j, i);
      if (r < 0 || r >= m || c < 0 || c >= m || row[r] || col[c]) return false;
      row[r] = true;
      col[c] = true;
    }
  }
  return true;
}

bool are_orthogonal(const LatinSquare& a, const LatinSquare& b) {
  const int m = a.order;
  if (b.order != m) return false;
  std::vector<bool> seen(static_cast<std::size_t>(m) * m, false);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      auto slot = static_cast<std::size_t>(a.at(i, j)) * m + b.at(i, j);
      if (seen[slot]) return false;
      seen[slot] = true;
    }
  }
  return true;
}

MolsSet make_mols(int order, std::vector<LatinSquare> squares) {
  for (std::size_t i = 0; i < squares.size(); ++i) {
    if (squares[i].order != order || !is_latin(squares[i])) {
      throw Error(ErrorKind::invalid_argument, "square " + std::to_string(i) + " is not Latin");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (!are_orthogonal(squares[i], squares[j])) {
        throw Error(ErrorKind::invalid_argument, "squares " + std::to_string(j) + " and " +
                                                     std::to_string(i) + " are not orthogonal");
      }
    }
  }
  return MolsSet{order, std::move(squares)};
}

namespace {

// GF(2^m) with elements as bit vectors; 0b111 = x^2+x+1, 0b1011 = x^3+x+1.
int binary_field_mul(int a, int b, int modulus, int degree) {
  int product = 0;
  while (b) {
    if (b & 1) product ^= a;
    b >>= 1;
    a <<= 1;
    if (a & (1 << degree)) a ^= modulus;
  }
  return product;
}

}  // namespace

MolsSet mols_prime_power(int q) {
  std::vector<LatinSquare> squares;
  if (is_prime(q)) {
    for (int a = 1; a < q; ++a) {
      LatinSquare s{q, std::vector<int>(static_cast<std::size_t>(q) * q)};
      for (int x = 0; x < q; ++x) {
        for (int y = 0; y < q; ++y) s.cells[static_cast<std::size_t>(x) * q + y] = (a * x + y) % q;
      }
      squares.push_back(std::move(s));
    }
  } else if (q == 4 || q == 8) {
    const int degree = q == 4 ? 2 : 3;
    const int modulus = q == 4 ? 0b111 : 0b1011;
    for (int a = 1; a < q; ++a) {
      LatinSquare s{q, std::vector<int>(static_cast<std::size_t>(q) * q)};
      for (int x = 0; x < q; ++x) {
        for (int y = 0; y < q; ++y) {
          s.cells[static_cast<std::size_t>(x) * q + y] = binary_field_mul(a, x, modulus, degree) ^ y;
        }
      }
      squares.push_back(std::move(s));
    }
  } else {
    throw Error(ErrorKind::unsupported_order,
                "no finite-field MOLS construction for order " + std::to_string(q));
  }
  return make_mols(q, std::move(squares));
}

MolsSet kronecker_mols(const MolsSet& a, const MolsSet& b) {
  const int m = a.order;
  const int n = b.order;
  const int mn = m * n;
  const std::size_t count = std::min(a.squares.size(), b.squares.size());
  std::vector<LatinSquare> squares;
  for (std::size_t i = 0; i < count; ++i) {
    LatinSquare s{mn, std::vector<int>(static_cast<std::size_t>(mn) * mn)};
    for (int x = 0; x < mn; ++x) {
      for (int y = 0; y < mn; ++y) {
        const int v = a.squares[i].at(x / n, y / n) * n + b.squares[i].at(x % n, y % n);
        s.cells[static_cast<std::size_t>(x) * mn + y] = v;
      }
    }
    squares.push_back(std::move(s));
  }
  return make_mols(mn, std::move(squares));
}

Gdd td_from_mols(int k, const MolsSet& mols) {
  const int m = mols.order;
  if (k < 2) throw Error(ErrorKind::invalid_argument, "TD block size must be at least 2");
  if (static_cast<int>(mols.squares.size()) < k - 2) {
    throw Error(ErrorKind::ingredient_unavailable,
                "TD(" + std::to_string(k) + "," + std::to_string(m) + ") needs " +
                    std::to_string(k - 2) + " MOLS of order " + std::to_string(m) + ", have " +
                    std::to_string(mols.squares.size()));
  }
  Gdd td;
  td.k = k;
  td.provenance = "TD(" + std::to_string(k) + "," + std::to_string(m) + ") from MOLS(" +
                  std::to_string(m) + ")";
  for (int j = 0; j < k; ++j) {
    std::vector<int> group(m);
    for (int x = 0; x < m; ++x) group[x] = j * m + x;
    td.groups.push_back(std::move(group));
  }
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      std::vector<int> block{x, m + y};
      for (int j = 2; j < k; ++j) block.push_back(j * m + mols.squares[j - 2].at(x, y));
      td.blocks.push_back(std::move(block));
    }
  }
  const auto report = verify_gdd(td);
  if (!report.pass) {
    throw Error(ErrorKind::invalid_argument, td.provenance + " failed verification");
  }
  return td;
}

namespace {

// Factors of m that have a direct finite-field MOLS construction.
std::vector<int> field_factors(int m) {
  std::vector<int> out;
  int twos = 0;
  while (m % 2 == 0) {
    m /= 2;
    ++twos;
  }
  while (twos > 0) {
    // Prefer 8 and 4 over 2, which only yields one square; 16 = 4 * 4.
    const int take = twos == 4 ? 2 : std::min(twos, 3);
    out.push_back(1 << take);
    twos -= take;
  }
  for (int p = 3; p * p <= m; p += 2) {
    while (m % p == 0) {
      out.push_back(p);
      m /= p;
    }
  }
  if (m > 1) out.push_back(m);
  return out;
}

}  // namespace

Gdd transversal_design(int k, int m) {
  if (m < 1) throw Error(ErrorKind::invalid_argument, "TD order must be positive");
  if (m == 1) {
    Gdd td;
    td.k = k;
    td.provenance = "TD(" + std::to_string(k) + ",1)";
    std::vector<int> block;
    for (int j = 0; j < k; ++j) {
      td.groups.push_back({j});
      block.push_back(j);
    }
    td.blocks.push_back(std::move(block));
    return td;
  }
  const auto factors = field_factors(m);
  MolsSet mols = mols_prime_power(factors.front());
  std::string route = "MOLS(" + std::to_string(factors.front()) + ")";
  for (std::size_t i = 1; i < factors.size(); ++i) {
    mols = kronecker_mols(mols, mols_prime_power(factors[i]));
    route += " x MOLS(" + std::to_string(factors[i]) + ")";
  }
  Gdd td = td_from_mols(k, mols);
  td.provenance = "TD(" + std::to_string(k) + "," + std::to_string(m) + ") from " + route;
  return td;
}

}  // namespace designforge
