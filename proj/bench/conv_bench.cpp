// Timing comparison of the serial and OpenMP convolution kernels, plus a
// bit-identity cross-check on the products.
#include <chrono>
#include <cstdlib>
#include <iostream>

#include "qseries/constructors.hpp"

using namespace qseries;

namespace {

double time_ms(ConvMode mode, const RSeries& a, const RSeries& b, RSeries& out) {
    set_conv_mode(mode);
    const auto t0 = std::chrono::steady_clock::now();
    out = a * b;
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

} // namespace

int main(int argc, char** argv) {
    const long n = argc > 1 ? std::atol(argv[1]) : 3000;
    std::cout << "operands: eta-quotient style series with " << n << " coefficients\n";

    // dense operands with growing numerators and denominators
    std::vector<Rational> ca, cb;
    ca.reserve(static_cast<std::size_t>(n));
    cb.reserve(static_cast<std::size_t>(n));
    for (long k = 0; k < n; ++k) {
        ca.push_back(make_rational(3 * k * k + 1, 2 * k + 5));
        cb.push_back(make_rational(k * k - 7 * k + 2, k + 3));
    }
    const RSeries a = RSeries::from_coeffs(std::move(ca), 0, 1, n);
    const RSeries b = RSeries::from_coeffs(std::move(cb), 0, 1, n);

    RSeries ps, pp;
    const double ts = time_ms(ConvMode::serial, a, b, ps);
    const double tp = time_ms(ConvMode::parallel, a, b, pp);
    set_conv_mode(ConvMode::automatic);

    std::cout << "serial:   " << ts << " ms\n";
    std::cout << "parallel: " << tp << " ms  (speedup " << ts / tp << "x)\n";
    const bool same = ps == pp;
    std::cout << "products bit-identical: " << (same ? "yes" : "NO") << "\n";
    return same ? 0 : 1;
}
