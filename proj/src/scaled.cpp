#include "uhp/scaled.hpp"

#include <stdexcept>

namespace uhp {

long double log_factorial(std::uint64_t n) {
    return std::lgamma(static_cast<long double>(n) + 1.0L);
}

long double log_binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) throw std::domain_error("log_binomial: k > n");
    // canonicalize so the k <-> n-k symmetry holds bitwise, not just to
    // rounding error; lgammal keeps the relative error near 1e-18
    const std::uint64_t m = (k <= n - k) ? k : n - k;
    return log_factorial(n) - log_factorial(m) - log_factorial(n - m);
}

} // namespace uhp
