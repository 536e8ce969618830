#include "epc/corridor/design.hpp"

#include "epc/corridor/leading.hpp"
#include "epc/error.hpp"

namespace epc {

PerturbationSpec design_perturbation(const std::vector<Rational>& roots) {
    const int n = static_cast<int>(roots.size());
    if (n < 2) throw InvalidArgument("design_perturbation: need at least two roots");
    Rational sum(0);
    for (const auto& r : roots) sum += r;
    if (sum != 0) throw InvalidArgument("unreachable: zero-trace constraint (roots sum to " + to_fraction_string(sum) + ")");

    // With one entry per subdiagonal in the bottom row the leading secular
    // polynomial is (-1)^N (eps^N - sum_k mu_k eps^(N-k-1)).
    const UniPoly target = UniPoly::from_roots(roots);
    PerturbationSpec spec;
    spec.n = n;
    spec.kind = PerturbationKind::Hierarchical;
    for (int k = 1; k < n; ++k) spec.set(n, n - k, -target.coeff(static_cast<std::size_t>(n - k - 1)));

    const UniPoly got = leading_secular(JordanSpec{n, Rational(0)}, spec).polynomial;
    const UniPoly expected = n % 2 == 0 ? target : -target;
    if (!(got == expected)) throw Error("design_perturbation: round trip mismatch, got " + got.to_string("eps"));
    return spec;
}

}  // namespace epc
