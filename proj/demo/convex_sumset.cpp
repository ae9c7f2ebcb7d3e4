// |A+A| against the convex-set bound |A|^{58/37} log^{-20/37}|A| for squares.

#include <cmath>
#include <cstdio>

#include "szt/szt.hpp"

int main()
{
    using namespace szt;
    std::printf("%6s %8s %12s %10s\n", "n", "|A+A|", "bound", "ratio");
    for (std::size_t n = 16; n <= 512; n *= 2) {
        const auto a = generate({FamilyKind::convex_squares, n, 0, {}});
        const auto r = check_thm_main(a, family_c(a, SzTFamily::convex), 2.0);
        std::printf("%6zu %8.0f %12.1f %10.3f\n", n, r.lhs.value(), r.rhs.value(), r.ratio());
    }
}
