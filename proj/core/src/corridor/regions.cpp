#include "epc/corridor/regions.hpp"

#include "epc/error.hpp"
#include "epc/exactpoly/determinant.hpp"
#include "epc/parallel.hpp"

#include <cmath>

namespace epc {

UniPoly lemma1_cubic(const Rational& rho, const Rational& gamma) {
    return UniPoly{gamma, 3 * rho * rho, Rational(0), Rational(-1)};
}

namespace {

void check_increasing(const std::vector<Rational>& axis, const char* name) {
    if (axis.empty()) throw InvalidArgument(std::string(name) + " axis is empty");
    for (std::size_t i = 1; i < axis.size(); ++i)
        if (!(axis[i - 1] < axis[i])) throw InvalidArgument(std::string(name) + " axis is not strictly increasing");
}

}  // namespace

RegionMap lemma1_region(const std::vector<Rational>& rho_axis, const std::vector<Rational>& gamma_axis, int jobs) {
    check_increasing(rho_axis, "rho");
    check_increasing(gamma_axis, "gamma");
    if (rho_axis.front() <= 0) throw InvalidArgument("rho axis must be positive");

    const std::size_t nx = rho_axis.size(), ny = gamma_axis.size();
    std::vector<char> cells(nx * ny, 0);
    parallel_for(nx * ny, jobs, [&](std::size_t k) {
        const std::size_t i = k / nx, j = k % nx;
        cells[k] = real_root_count_with_multiplicity(lemma1_cubic(rho_axis[j], gamma_axis[i])) == 3;
    });

    RegionMap map;
    map.rho_axis = rho_axis;
    map.gamma_axis = gamma_axis;
    map.member.assign(cells.begin(), cells.end());
    map.stated_box_contained = true;
    for (std::size_t i = 0; i < ny; ++i)
        for (std::size_t j = 0; j < nx; ++j) {
            const Rational r3 = pow(rho_axis[j], 3);
            if (abs(gamma_axis[i]) < r3 && !map.at(i, j)) map.stated_box_contained = false;
        }

    map.upper_boundary.resize(nx);
    map.lower_boundary.resize(nx);
    long double worst = 0;
    for (std::size_t j = 0; j < nx; ++j) {
        const long double sharp = 2 * std::pow(to_long_double(rho_axis[j]), 3.0L);
        std::size_t top = ny;
        for (std::size_t i = ny; i-- > 0;)
            if (map.at(i, j)) {
                top = i;
                break;
            }
        if (top == ny) continue;
        std::size_t bottom = 0;
        while (!map.at(bottom, j)) ++bottom;
        if (top + 1 < ny) {
            Rational b = (gamma_axis[top] + gamma_axis[top + 1]) / 2;
            map.upper_boundary[j] = b;
            long double step = to_long_double(gamma_axis[top + 1] - gamma_axis[top]);
            worst = std::max(worst, std::fabs(to_long_double(b) - sharp) / step);
        }
        if (bottom > 0) {
            Rational b = (gamma_axis[bottom] + gamma_axis[bottom - 1]) / 2;
            map.lower_boundary[j] = b;
            long double step = to_long_double(gamma_axis[bottom] - gamma_axis[bottom - 1]);
            worst = std::max(worst, std::fabs(to_long_double(b) + sharp) / step);
        }
    }
    map.sharp_boundary_max_deviation_cells = worst;
    return map;
}

long double AlgebraicNumber::approx() const {
    return exact ? to_long_double(*exact) : to_long_double(root.midpoint());
}

std::string AlgebraicNumber::to_string(int digits) const {
    return exact ? to_fraction_string(*exact) : to_scientific(root.midpoint(), digits);
}

namespace {

// Characteristic polynomial of multiplication by w in Q[x]/(w'): its roots
// are the values of w at the roots of w'.
UniPoly critical_values(const UniPoly& w) {
    const UniPoly dw = w.derivative();
    const auto d = static_cast<std::size_t>(dw.degree());
    Matrix<Rational> m(d, d);
    UniPoly basis(Rational(1));
    for (std::size_t c = 0; c < d; ++c) {
        UniPoly image = (w * basis) % dw;
        for (std::size_t r = 0; r < d; ++r) m(r, c) = image.coeff(r);
        basis = basis * UniPoly::x();
    }
    return characteristic_polynomial(m);
}

AlgebraicNumber kth_root(const UniPoly& p, const RootIsolation& iso, int k) {
    int seen = 0;
    for (const auto& r : iso.roots) {
        seen += r.multiplicity;
        if (seen > k) {
            AlgebraicNumber a{p, r, rational_root_in(p, r)};
            return a;
        }
    }
    throw Error("kth_root: index out of range");
}

}  // namespace

Lemma2Interval lemma2_interval(const Rational& alpha, const Rational& beta) {
    Lemma2Interval out;
    const UniPoly w{Rational(0), -beta, -alpha, Rational(0), Rational(1)};
    if (sturm_count(w.derivative()) < 3) {
        out.reason = "no three extremes";
        return out;
    }
    out.critical_value_polynomial = critical_values(w);
    RootIsolation iso = isolate_real_roots(out.critical_value_polynomial, pow(Rational(10), -40));
    if (iso.count_with_multiplicity() != 3) throw Error("lemma2_interval: critical values are not all real");
    out.lower = kth_root(out.critical_value_polynomial, iso, 1);
    out.upper = kth_root(out.critical_value_polynomial, iso, 2);
    out.empty = false;
    return out;
}

}  // namespace epc
