// Convolutions, energies and the main eigenvalue of T^{A∘A}_A on a small set.

#include <iostream>

#include "szt/szt.hpp"

int main()
{
    using namespace szt;
    const FiniteRealSet a{Rational(0), Rational(1), Rational(2)};

    std::cout << "A = " << to_string(a) << "\n(A∘A):";
    for (const auto &[x, c] : convolve_minus(a, a)) {
        std::cout << ' ' << x.to_string() << ':' << c;
    }
    std::cout << "\nE_2 = " << energy_k(a, 2).exact->get_str() << ", E_3 = " << energy_k(a, 3).exact->get_str()
              << ", E_{3/2} = " << energy_fractional(a, 1.5).approx << '\n';

    const auto op = build_operator(WeightFunction::from_counts(convolve_minus(a, a)), a, a, OperatorKind::difference);
    std::cout << "spectrum of T^{A∘A}_A:";
    for (const double mu : eigen_spectrum(op).values) {
        std::cout << ' ' << mu;
    }
    std::cout << '\n';
}
