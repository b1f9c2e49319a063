// Regenerates data/field_polys.txt: for each p in {2,3,5,7} and each N with p^N <= 2^24,
// the first monic primitive polynomial when (c_0, ..., c_{N-1}) is read as a base-p integer.

#include <cstdint>
#include <iostream>

#include "ffperm/fp_poly.hpp"
#include "ffperm/numtheory.hpp"

int main()
{
  using namespace ffperm;
  std::cout << "# p N c_0,c_1,...,c_N  (defining polynomial, low degree first)\n";
  for (unsigned p : {2u, 3u, 5u, 7u}) {
    for (unsigned n = 1; ipow(p, n) <= (1u << 24); ++n) {
      const std::uint64_t count = ipow(p, n);
      for (std::uint64_t code = 0; code < count; ++code) {
        fp::Poly f(n + 1, 0);
        std::uint64_t c = code;
        for (unsigned i = 0; i < n; ++i) {
          f[i] = static_cast<std::uint32_t>(c % p);
          c /= p;
        }
        f[n] = 1;
        if (f[0] == 0)
          continue;
        if (!fp::is_irreducible(f, p) || !fp::is_primitive(f, p))
          continue;
        std::cout << p << ' ' << n << ' ';
        for (unsigned i = 0; i <= n; ++i)
          std::cout << f[i] << (i == n ? '\n' : ',');
        break;
      }
    }
  }
  return 0;
}
