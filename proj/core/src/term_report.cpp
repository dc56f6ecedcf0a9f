#include "renvol/term_report.hpp"

#include "renvol/errors.hpp"
#include "renvol/profile.hpp"

namespace renvol {

TermReport compare_conventions(const ModelParams& p) {
  p.validate();
  const Profile prof = build_profile(p.n, p.beta);  // rejects beta >= 1
  const long m = static_cast<long>(p.n) + 1;
  const Rational two_pow = Rational{2}.pow(m);
  const Rational tau0_pow = prof.tau0.pow(m);
  const Rational boundary_base = (Rational{0} - p.beta / Rational{m}).pow(m);

  const Rational cap_comp = Rational{0} - two_pow * p.volL * tau0_pow;
  const Rational cap_form = cap_comp;  // identical in the no-factorial convention
  const Rational boundary_comp = two_pow * p.volL * boundary_base;
  const Rational boundary_form = boundary_comp / Rational::factorial(static_cast<unsigned long>(m));

  std::optional<Rational> boundary_ratio;
  if (!(boundary_form == Rational{0})) boundary_ratio = boundary_comp / boundary_form;

  return {p.n,
          p.beta,
          p.volL,
          PiValue{cap_comp, p.n + 1},
          PiValue{cap_form, p.n + 1},
          cap_comp / cap_form,
          PiValue{boundary_comp, p.n + 1},
          PiValue{boundary_form, p.n + 1},
          boundary_ratio,
          "Vol = integral of omega^(n+1) without 1/(n+1)!"};
}

}  // namespace renvol
