#pragma once

#include <vector>

#include "catalan/errors.hpp"

namespace catalan {

// f/h transforms for an (ℓ−1)-dimensional complex, via
//   Σ f_{i−1} (x−1)^{ℓ−i} = Σ h_i x^{ℓ−i}.
// Vectors are indexed by cardinality: v[k] holds f_{k−1} resp. h_k.

inline long long binom_ll(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline std::vector<long long> f_from_h(const std::vector<long long>& h) {
  int l = static_cast<int>(h.size()) - 1;
  std::vector<long long> f(l + 1, 0);
  for (int k = 0; k <= l; ++k)
    for (int i = 0; i <= k; ++i) f[k] += h[i] * binom_ll(l - i, k - i);
  return f;
}

inline std::vector<long long> h_from_f(const std::vector<long long>& f) {
  int l = static_cast<int>(f.size()) - 1;
  std::vector<long long> h(l + 1, 0);
  for (int k = 0; k <= l; ++k)
    for (int i = 0; i <= k; ++i)
      h[k] += ((k - i) % 2 ? -1 : 1) * f[i] * binom_ll(l - i, k - i);
  return h;
}

}  // namespace catalan
