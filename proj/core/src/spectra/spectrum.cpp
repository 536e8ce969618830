#include "epc/spectra/spectrum.hpp"

#include "epc/error.hpp"

#include <mpfr.h>

namespace epc {

std::string to_string(Verdict v) { return v == Verdict::AllReal ? "AllReal" : "Broken"; }

SpectrumReport classify_polynomial(const UniPoly& char_poly, const SpectrumOptions& options) {
    if (char_poly.is_zero()) throw InvalidArgument("characteristic polynomial is zero");
    SpectrumReport r;
    r.n = static_cast<std::size_t>(char_poly.degree());
    r.char_poly = char_poly;
    r.real_count = real_root_count_with_multiplicity(char_poly);
    r.complex_pairs = (static_cast<int>(r.n) - r.real_count) / 2;
    r.verdict = r.complex_pairs == 0 ? Verdict::AllReal : Verdict::Broken;
    if (options.counts_only) return r;
    r.real_roots = isolate_real_roots(char_poly, options.real_precision);
    r.eigenvalues = complex_roots(char_poly, ComplexRootOptions{options.complex_digits, 2000});
    return r;
}

SpectrumReport classify_reality(const ScaledMatrix& h, const Rational& s, const SpectrumOptions& options) {
    if (s <= 0) throw InvalidArgument("classify_reality: s must be positive");
    if (h.size() == 0) throw InvalidArgument("classify_reality: empty matrix");
    if (h.size() > kMaxSpectrumDimension)
        throw InvalidArgument("classify_reality: dimension " + std::to_string(h.size()) + " exceeds " +
                              std::to_string(kMaxSpectrumDimension));
    SpectrumReport r = classify_polynomial(h.characteristic_polynomial_at(s), options);
    r.s = s;
    r.lambda = pow(s, h.scale_base());
    return r;
}

std::vector<ComplexRoot> eigenvalues_numeric(const ScaledMatrix& h, const Rational& s, int digits) {
    if (h.size() > kMaxSpectrumDimension)
        throw InvalidArgument("eigenvalues_numeric: dimension exceeds " + std::to_string(kMaxSpectrumDimension));
    return complex_roots(h.characteristic_polynomial_at(s), ComplexRootOptions{digits, 2000});
}

ScaleChoice scale_from_lambda(const Rational& lambda, int m, int digits) {
    if (lambda <= 0) throw InvalidArgument("lambda must be positive");
    if (m < 1) throw InvalidArgument("scale base must be >= 1");
    if (auto s = exact_root(lambda, static_cast<unsigned>(m))) return {*s, lambda, true};
    mpfr_t x;
    mpfr_init2(x, 512);
    mpfr_set_q(x, lambda.backend().data(), MPFR_RNDN);
    mpfr_rootn_ui(x, x, static_cast<unsigned long>(m), MPFR_RNDN);
    Rational approx;
    mpfr_get_q(approx.backend().data(), x);
    mpfr_clear(x);
    Rational s = parse_rational(to_scientific(approx, digits));
    return {s, pow(s, m), false};
}

}  // namespace epc
