#include <iostream>

#include "kt_hodge/kt_hodge.hpp"

using namespace kt_hodge;

int main() {
    AcsParams params(Rational(0), Rational(5, 4));

    for (const auto& metric : {MetricSpec::standard(), MetricSpec::rho(Rational(9, 4))}) {
        HodgeDiamond dia = hodge_diamond(params, metric);
        std::cout << metric.name() << " (rho = " << metric.rho_value() << "): h01 = " << dia(0, 1)
                  << ", h20 = " << dia(2, 0) << ", h11 = " << dia(1, 1) << "\n";
    }

    // one infinite-orbit sector, exactly
    auto problem = build_sector_ode_standard(params, 0, 0, 1);
    auto verdict = stokes_criterion(problem);
    std::cout << "H^{0,0,1}: ratio " << verdict.exact_ratio->str() << ", solvable " << std::boolalpha
              << verdict.solvable << "\n";

    Rational d = find_d_for_count(BigInt(12));
    std::cout << "12 lattice points at d = " << d << "\n";
    return 0;
}
