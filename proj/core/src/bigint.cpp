#include "uff/bigint.hpp"

#include <stdexcept>

namespace uff {

BigInt binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    // r stays integral after each division: r is C(n-k+i, i) at step i.
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

std::string ratio_2dp(const BigInt& num, const BigInt& den) {
    if (den <= 0 || num < 0) throw std::invalid_argument("ratio_2dp: requires num >= 0, den > 0");
    // floor(100*num/den + 1/2) = (200*num + den) / (2*den)
    BigInt scaled = (200 * num + den) / (2 * den);
    BigInt whole = scaled / 100;
    BigInt frac = scaled % 100;
    std::string f = frac.str();
    if (f.size() < 2) f.insert(f.begin(), '0');
    return whole.str() + "." + f;
}

}  // namespace uff
