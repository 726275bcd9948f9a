#include "foliatlas/rational.hpp"

#include <limits>
#include <sstream>

#include "foliatlas/errors.hpp"

namespace foliatlas {

bool is_integer(const Rational& q) {
    return boost::multiprecision::denominator(q) == 1;
}

long long to_int64(const Rational& q) {
    if (!is_integer(q)) {
        throw DataError("expected an integer, got " + to_string(q));
    }
    const BigInt n = boost::multiprecision::numerator(q);
    if (n > std::numeric_limits<long long>::max() || n < std::numeric_limits<long long>::min()) {
        throw DataError("integer out of 64-bit range: " + n.str());
    }
    return n.convert_to<long long>();
}

std::string to_string(const Rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

long long binom(long long n, long long k) {
    if (k < 0 || n < 0 || n < k) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long long j = 1; j <= k; ++j) {
        r = r * (n - k + j) / j;
    }
    if (r > std::numeric_limits<long long>::max()) {
        throw DataError("binomial overflow: C(" + std::to_string(n) + "," + std::to_string(k) + ")");
    }
    return r.convert_to<long long>();
}

long long gbinom(long long n, long long k) {
    if (k < 0) return 0;
    if (k == 0) return 1;
    if (n >= 0) return binom(n, k);
    // C(n,k) = (-1)^k C(k-n-1, k) for negative n
    const long long v = binom(k - n - 1, k);
    return (k % 2 == 0) ? v : -v;
}

} // namespace foliatlas
