#include <cstdint>
#include <vector>

#include "sextic/families.hpp"

namespace sextic {

// A plane curve of degree d is smooth iff its partials have no common zero,
// iff the products (degree d-1 partial) x (degree 2d-4 monomial) span all
// forms of degree 3d-5. For sextics: 3 x 45 products in a 105-dim space.
int macaulay_rank(const TernaryForm& F) {
  const int d = F.degree();
  if (d < 2) throw Error(Errc::BadParams, "smoothness test needs degree >= 2");
  const std::uint64_t p = F.modulus();
  const int target = 3 * d - 5;
  const int cols = monomial_count(target);
  const auto grads = partials(F);
  const auto mults = monomials(2 * d - 4);

  std::vector<std::vector<std::uint32_t>> rows;
  rows.reserve(3 * mults.size());
  for (const auto& g : grads) {
    if (g.is_zero()) continue;
    for (const auto& m : mults) {
      std::vector<std::uint32_t> row(static_cast<std::size_t>(cols), 0);
      for (const auto& [gm, c] : g.terms())
        row[static_cast<std::size_t>(monomial_index({gm.i + m.i, gm.j + m.j, gm.k + m.k}))] = c.value();
      rows.push_back(std::move(row));
    }
  }

  auto inv = [p](std::uint64_t a) {
    std::uint64_t r = 1, e = p - 2;
    while (e) {
      if (e & 1) r = r * a % p;
      a = a * a % p;
      e >>= 1;
    }
    return r;
  };

  int rank = 0;
  for (int c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    std::size_t pivot = rows.size();
    for (std::size_t r = static_cast<std::size_t>(rank); r < rows.size(); ++r)
      if (rows[r][static_cast<std::size_t>(c)]) {
        pivot = r;
        break;
      }
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[static_cast<std::size_t>(rank)]);
    auto& pr = rows[static_cast<std::size_t>(rank)];
    const std::uint64_t s = inv(pr[static_cast<std::size_t>(c)]);
    for (auto& x : pr) x = static_cast<std::uint32_t>(x * s % p);
    for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows.size(); ++r) {
      const std::uint64_t factor = rows[r][static_cast<std::size_t>(c)];
      if (!factor) continue;
      for (std::size_t k = static_cast<std::size_t>(c); k < static_cast<std::size_t>(cols); ++k)
        rows[r][k] = static_cast<std::uint32_t>((rows[r][k] + (p - factor) * pr[k]) % p);
    }
    ++rank;
  }
  return rank;
}

bool is_smooth(const TernaryForm& F) { return macaulay_rank(F) == monomial_count(3 * F.degree() - 5); }

}  // namespace sextic
