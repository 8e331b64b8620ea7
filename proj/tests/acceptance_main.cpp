#include <wignerks/wignerks.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

// Acceptance runner: one line per criterion, every tolerance pinned in the
// line it gates, nonzero exit if anything fails.  Each criterion is
// self-contained so a failure names its own numbers.

namespace {

using wignerks::ChannelSpec;
using wignerks::KsInvariantReport;
using wignerks::MappingResult;
using wignerks::RadialGrid;
using wignerks::Rational;
using wignerks::SpinChannel;
using wignerks::WignerParams;

struct Outcome {
    bool ok = false;
    std::string detail;
};

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

Outcome exact_ladder_quotients() {
    int checked = 0, exact = 0;
    for (long ell = 0; ell <= 2; ++ell) {
        const WignerParams p{Rational(ell)};
        for (long n = 0; n <= 6; ++n) {
            ++checked;
            const auto q = wignerks::rayleigh_quotient(p, wignerks::build_state(p, n));
            if (q && *q == wignerks::wigner_energy(Rational(ell), n)) ++exact;
        }
    }
    std::ostringstream d;
    d << "Rayleigh quotient equals ell+3/2+n as an exact rational for " << exact << "/"
      << checked << " states (ell<=2, n<=6); tolerance: exact equality";
    return {exact == checked, d.str()};
}

Outcome algebra_relations_vanish() {
    const auto basis = wignerks::default_algebra_basis();
    std::size_t total = 0, zero = 0;
    for (long ell = 0; ell <= 3; ++ell) {
        const WignerParams p{Rational(ell)};
        const auto tally = [&](const std::vector<wignerks::AlgebraReport>& reps) {
            for (const auto& r : reps) {
                ++total;
                if (r.passed) ++zero;
            }
        };
        tally(wignerks::verify_wh_algebra(p, basis));
        tally(wignerks::verify_osp12(p, basis));
    }
    std::ostringstream d;
    d << zero << "/" << total
      << " operator residuals are the exact zero function (ell<=3, 10-element basis); "
         "tolerance: exact zero";
    return {zero == total, d.str()};
}

Outcome sector_towers() {
    const RadialGrid grid = RadialGrid::from_origin(12.0, 4000);
    double worst = 0.0;
    int levels = 0;
    for (long ell = 0; ell <= 2; ++ell) {
        const auto dp =
            wignerks::discretize(wignerks::make_sector_problem(static_cast<double>(ell)), grid);
        const auto pairs = wignerks::eigen_lowest(dp.matrix, 4);
        for (std::size_t m = 0; m < pairs.size(); ++m) {
            const double want = static_cast<double>(ell) + 1.5 + 2.0 * static_cast<double>(m);
            worst = std::max(worst, std::abs(pairs[m].value - want));
            ++levels;
        }
    }
    std::ostringstream d;
    d << "max |E_fd - (ell+3/2+2m)| = " << fmt(worst) << " over " << levels
      << " sector levels (ell<=2, n=4000, x_max=12); tolerance 5e-3";
    return {worst <= 5e-3, d.str()};
}

Outcome oscillator4d_spectra() {
    const RadialGrid grid = RadialGrid::from_origin(12.0, 4000);
    double worst = 0.0;
    int levels = 0;
    for (long ell = 0; ell <= 2; ++ell) {
        const ChannelSpec ch{ell, SpinChannel::y_plus, wignerks::Sector::bosonic};
        const auto dp = wignerks::discretize(wignerks::build_oscillator4d_problem(ch), grid);
        const auto pairs = wignerks::eigen_lowest(dp.matrix, 3);
        for (std::size_t m = 0; m < pairs.size(); ++m) {
            const double want = static_cast<double>(wignerks::oscillator4d_energy(
                ell, static_cast<long>(m)));
            worst = std::max(worst, std::abs(pairs[m].value - want));
            ++levels;
        }
    }
    std::ostringstream d;
    d << "max |E_fd - (2 ell + 2 + 2m)| = " << fmt(worst) << " over " << levels
      << " oscillator levels (ell<=2, m<=2, n=4000, x_max=12); tolerance 5e-3";
    return {worst <= 5e-3, d.str()};
}

Outcome hydrogen_levels() {
    const RadialGrid grid = RadialGrid::from_origin(60.0, 6000);
    double worst = 0.0;
    int levels = 0;
    for (long ell = 0; ell <= 2; ++ell) {
        const auto dp = wignerks::discretize(wignerks::build_hydrogen_problem(ell), grid);
        const std::size_t k = static_cast<std::size_t>(4 - ell);
        const auto pairs = wignerks::eigen_generalized(dp.matrix, dp.weight, k);
        for (std::size_t m = 0; m < pairs.size(); ++m) {
            const double want = static_cast<double>(ell) + static_cast<double>(m) + 1.0;
            worst = std::max(worst, std::abs(pairs[m].value - want));
            ++levels;
        }
    }
    bool formula_ok = true;
    for (long n = 1; n <= 4; ++n) {
        const MappingResult r = wignerks::map_to_hydrogen(2.0 * static_cast<double>(n), 1.0);
        formula_ok = formula_ok && r.n == n && r.lambda_residual == 0.0 &&
                     r.e_atomic == wignerks::hydrogen_energy(1.0, n);
    }
    std::ostringstream d;
    d << "max |lambda_fd - N| = " << fmt(worst) << " over " << levels
      << " Coulomb levels (N<=4, ell<=2, n=6000, rho_max=60), tolerance 2e-3; mapped "
         "energies equal -Z^2/(2 N^2) bitwise: "
      << (formula_ok ? "yes" : "no");
    return {worst <= 2e-3 && formula_ok, d.str()};
}

Outcome eigenfunction_residuals() {
    double worst_fine = 0.0;
    double ratio_lo = 1e300, ratio_hi = 0.0;
    for (long ell = 0; ell <= 3; ++ell) {
        for (long m = 0; m <= 3; ++m) {
            // Box wide enough that the wall truncation sits far below the
            // h^2 floor; h halves exactly between the two grids.
            const double rho_max = 40.0 + 20.0 * static_cast<double>(ell + m + 1);
            const double fine =
                wignerks::residual_check(ell, m, RadialGrid::from_origin(rho_max, 24001));
            const double coarse =
                wignerks::residual_check(ell, m, RadialGrid::from_origin(rho_max, 12000));
            worst_fine = std::max(worst_fine, fine);
            const double ratio = coarse / fine;
            ratio_lo = std::min(ratio_lo, ratio);
            ratio_hi = std::max(ratio_hi, ratio);
        }
    }
    std::ostringstream d;
    d << "max relative residual = " << fmt(worst_fine)
      << " (ell,m<=3, n=24001, rho_max=40+20N), tolerance 1e-5; halving ratios in ["
      << fmt(ratio_lo) << ", " << fmt(ratio_hi) << "], required [3, 5]";
    return {worst_fine <= 1e-5 && ratio_lo >= 3.0 && ratio_hi <= 5.0, d.str()};
}

Outcome ks_invariants() {
    const KsInvariantReport rep = wignerks::run_ks_invariants(42, 100000);
    std::ostringstream d;
    d << "max deviation over " << rep.samples
      << " samples = " << fmt(rep.max_all())
      << " (4D norm, spinor norm, projection match, fiber shift, double cover, SU(2)); "
         "tolerance 1e-12";
    return {rep.passed(1e-12), d.str()};
}

Outcome mapping_identity() {
    const RadialGrid hydrogen_grid = RadialGrid::from_origin(60.0, 6000);
    const RadialGrid oscillator_grid = RadialGrid::from_origin(12.0, 4000);
    double worst_gap = 0.0;
    for (long ell = 0; ell <= 2; ++ell) {
        const auto hdp =
            wignerks::discretize(wignerks::build_hydrogen_problem(ell), hydrogen_grid);
        const auto lam = wignerks::eigen_generalized(hdp.matrix, hdp.weight, 3);
        const ChannelSpec ch{ell, SpinChannel::y_plus, wignerks::Sector::bosonic};
        const auto odp =
            wignerks::discretize(wignerks::build_oscillator4d_problem(ch), oscillator_grid);
        const auto evs = wignerks::eigen_lowest(odp.matrix, 3);
        for (std::size_t m = 0; m < 3; ++m)
            worst_gap = std::max(worst_gap, std::abs(lam[m].value - 0.5 * evs[m].value));
    }
    double worst_sub = 0.0;
    for (long ell = 0; ell <= 2; ++ell)
        for (long m = 0; m <= 2; ++m)
            worst_sub = std::max(worst_sub, wignerks::substitution_identity_check(ell, m, 100));
    std::ostringstream d;
    d << "max |lambda_fd - E_fd/2| = " << fmt(worst_gap)
      << " (ell<=2, m<=2), tolerance 5e-3; max substitution defect at 100 random radii = "
      << fmt(worst_sub) << ", tolerance 1e-12";
    return {worst_gap <= 5e-3 && worst_sub <= 1e-12, d.str()};
}

Outcome block_coefficient_identity() {
    int checked = 0, equal = 0;
    for (long ell = 0; ell <= 10; ++ell) {
        for (const SpinChannel spin : {SpinChannel::y_plus, SpinChannel::y_minus}) {
            const ChannelSpec ch{ell, spin, wignerks::Sector::bosonic};
            ++checked;
            if (wignerks::centrifugal_coefficient(ch) ==
                wignerks::block_coefficient_reference(wignerks::block_parameter(ch)))
                ++equal;
        }
        const Rational l(ell);
        ++checked;
        if (4 * l * (l + 1) + Rational(3, 4) ==
            (2 * l + Rational(1, 2)) * (2 * l + Rational(3, 2)))
            ++equal;
    }
    std::ostringstream d;
    d << equal << "/" << checked
      << " factorizations 4q+3/4 = (2k+1/2)(2k+3/2) hold as exact rationals (ell<=10, both "
         "channels); tolerance: exact equality";
    return {equal == checked, d.str()};
}

}  // namespace

int main() {
    struct Criterion {
        const char* what;
        Outcome (*run)();
        double limit_s;  // 0: no runtime bound
    };
    const Criterion criteria[] = {
        {"exact ladder spectrum", exact_ladder_quotients, 5.0},
        {"algebra closure", algebra_relations_vanish, 5.0},
        {"sector towers", sector_towers, 10.0},
        {"constrained 4D oscillator spectrum", oscillator4d_spectra, 20.0},
        {"Coulomb spectrum and mapped energies", hydrogen_levels, 30.0},
        {"eigenfunction residual convergence", eigenfunction_residuals, 0.0},
        {"geometric invariants of the 4D->3D map", ks_invariants, 5.0},
        {"spectral mapping and substitution identity", mapping_identity, 0.0},
        {"block coefficient factorization", block_coefficient_identity, 0.0},
    };

    int failures = 0;
    int index = 0;
    for (const Criterion& c : criteria) {
        ++index;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool pass = out.ok;
        std::string timing;
        {
            char buf[96];
            if (c.limit_s > 0.0) {
                pass = pass && secs < c.limit_s;
                std::snprintf(buf, sizeof buf, "%.2f s of %.0f s allowed", secs, c.limit_s);
            } else {
                std::snprintf(buf, sizeof buf, "%.2f s", secs);
            }
            timing = buf;
        }
        if (!pass) ++failures;
        std::printf("criterion %d: %s - %s (%s; %s)\n", index, pass ? "PASS" : "FAIL", c.what,
                    out.detail.c_str(), timing.c_str());
        std::fflush(stdout);
    }
    if (failures > 0) std::printf("%d of 9 criteria failed\n", failures);
    return failures > 0 ? 1 : 0;
}
