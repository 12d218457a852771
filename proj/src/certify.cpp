#include "twistcert/certify.hpp"

#include "twistcert/factor.hpp"

namespace twistcert {

const char* reason_tag(PAReason r) {
  switch (r) {
    case PAReason::reducible_charpoly: return "reducible_charpoly";
    case PAReason::cyclotomic: return "cyclotomic";
    case PAReason::polynomial_in_x2: return "polynomial_in_x2";
    case PAReason::not_symplectically_irreducible: return "not_symplectically_irreducible";
    case PAReason::polynomial_in_xk: return "polynomial_in_xk";
  }
  return "unknown";
}

const char* to_string(Tristate t) {
  switch (t) {
    case Tristate::yes: return "yes";
    case Tristate::no: return "no";
    case Tristate::unknown: return "unknown";
  }
  return "unknown";
}

PAVerdict certify_charpoly(const IntPoly& chi, const CertifyOptions& opts) {
  PAVerdict v;
  const auto factors = factor_over_Z(chi);
  if (factors.size() != 1) v.reasons.push_back(PAReason::reducible_charpoly);
  if (is_cyclotomic_product(chi)) v.reasons.push_back(PAReason::cyclotomic);
  if (is_polynomial_in_x_squared(chi)) v.reasons.push_back(PAReason::polynomial_in_x2);
  if (!is_symplectically_irreducible(chi)) v.reasons.push_back(PAReason::not_symplectically_irreducible);
  if (opts.strict_power && !is_polynomial_in_x_squared(chi) && is_polynomial_in_x_power(chi))
    v.reasons.push_back(PAReason::polynomial_in_xk);
  v.status = v.reasons.empty() ? PAVerdict::Status::certified_pa : PAVerdict::Status::inconclusive;
  return v;
}

PAVerdict certify_pa(const SpMatrix& m, const CertifyOptions& opts) {
  return certify_charpoly(charpoly(m.matrix()), opts);
}

CertReport certify_report(const TwistWord& w, const CertifyOptions& opts) {
  SpMatrix m = eval_word(w);
  IntPoly chi = charpoly(m.matrix());
  TValidation family = validate_family_T(w);
  const auto* dec = std::get_if<TDecomposition>(&family);
  const Tristate anosov = (dec && !dec->trivial()) ? Tristate::yes : Tristate::no;
  PAVerdict pa = certify_charpoly(chi, opts);
  const Tristate hyperbolic = pa.certified() ? Tristate::yes : Tristate::unknown;
  return CertReport{w, std::move(m), std::move(chi), anosov, std::move(family), std::move(pa), hyperbolic};
}

}  // namespace twistcert
