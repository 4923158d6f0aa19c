// Test-only oracles, kept independent of the library implementations they
// check.
#ifndef BRAIDLAB_TESTS_ORACLES_HPP
#define BRAIDLAB_TESTS_ORACLES_HPP

#include <vector>

namespace oracles {

// Graded dimensions of the free super-commutative algebra with `even`
// even and `odd` odd generators: series (1+t)^odd / (1-t)^even.  Computed
// by Pascal expansion of the numerator followed by prefix sums, one per
// denominator factor.
inline std::vector<long> super_series(int even, int odd, int max_degree) {
    std::vector<long> coeff(static_cast<size_t>(max_degree) + 1, 0);
    coeff[0] = 1;
    for (int i = 0; i < odd; ++i)
        for (int d = max_degree; d >= 1; --d) coeff[static_cast<size_t>(d)] += coeff[static_cast<size_t>(d - 1)];
    for (int i = 0; i < even; ++i)
        for (int d = 1; d <= max_degree; ++d) coeff[static_cast<size_t>(d)] += coeff[static_cast<size_t>(d - 1)];
    return coeff;
}

inline long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace oracles

#endif
