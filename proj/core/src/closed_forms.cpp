#include "radharm/closed_forms.hpp"

#include <cmath>
#include <sstream>

namespace radharm {

namespace {

// log(tanh x) without the cancellation log(1 - tiny) suffers for large x.
double log_tanh(double x) {
  if (x < 0.5) return std::log(std::tanh(x));
  return std::log1p(-2.0 / (std::exp(2.0 * x) + 1.0));
}

Term csc(double c, int p, bool half = false) { return {c, TermKind::CscPow, p, half}; }
Term sec(double c, int p, bool half = false) { return {c, TermKind::SecPow, p, half}; }
Term logtan(double c, bool half = false) { return {c, TermKind::LogTan, 0, half}; }
Term cot(double c) { return {c, TermKind::Cot, 0, false}; }
Term cot_csc2(double c) { return {c, TermKind::CotCscSq, 0, false}; }

ClosedForm entry(SpaceModel model, double outer, std::vector<Term> terms,
                 const char* source) {
  return ClosedForm{model, outer, std::move(terms), source};
}

std::vector<ClosedForm> build_tables() {
  using M = SpaceModel;
  constexpr const char* kPos = "positive-curvature table";
  constexpr const char* kNeg = "negative-curvature table";
  std::vector<ClosedForm> t;

  t.push_back(entry(M::sphere(2), 1, {logtan(1, true)}, kPos));
  t.push_back(entry(M::sphere(3), 1, {cot(-1)}, kPos));
  t.push_back(entry(M::sphere(4), 1,
                    {csc(-1.0 / 8, 2, true), sec(1.0 / 8, 2, true), logtan(0.5, true)}, kPos));
  t.push_back(entry(M::sphere(5), 1, {cot(-2.0 / 3), cot_csc2(-1.0 / 3)}, kPos));
  t.push_back(entry(M::complex_projective(2), 1, {csc(-0.5, 2), logtan(1)}, kPos));
  t.push_back(entry(M::complex_projective(3), 1,
                    {csc(-0.25, 4), csc(-0.5, 2), logtan(1)}, kPos));
  t.push_back(entry(M::complex_projective(4), 1,
                    {csc(-1.0 / 6, 6), csc(-0.25, 4), csc(-0.5, 2), logtan(1)}, kPos));
  t.push_back(entry(M::quaternion_projective(2), 0.5,
                    {csc(-1.0 / 3, 6), csc(-1, 4), csc(-3, 2), sec(1, 2), logtan(8)}, kPos));
  t.push_back(entry(M::quaternion_projective(3), 0.5,
                    {csc(-1.0 / 5, 10), csc(-0.5, 8), csc(-1, 6), csc(-2, 4),
                     csc(-5, 2), sec(1, 2), logtan(12)},
                    kPos));
  t.push_back(entry(M::quaternion_projective(4), 0.5,
                    {csc(-1.0 / 7, 14), csc(-1.0 / 3, 12), csc(-3.0 / 5, 10),
                     csc(-1, 8), csc(-5.0 / 3, 6), csc(-3, 4), csc(-7, 2),
                     sec(1, 2), logtan(16)},
                    kPos));
  t.push_back(entry(M::octonion_plane(), 1,
                    {csc(-1.0 / 14, 14), csc(-1.0 / 3, 12), csc(-1, 10),
                     csc(-5.0 / 2, 8), csc(-35.0 / 6, 6), csc(-14, 4),
                     csc(-42, 2), sec(1.0 / 6, 6), sec(2, 4), sec(18, 2),
                     logtan(120)},
                    kPos));

  t.push_back(entry(M::hyperbolic(2), 1, {logtan(1, true)}, kNeg));
  t.push_back(entry(M::hyperbolic(3), 1, {cot(-1)}, kNeg));
  t.push_back(entry(M::hyperbolic(4), 1,
                    {csc(-1.0 / 8, 2, true), sec(-1.0 / 8, 2, true), logtan(-0.5, true)}, kNeg));
  t.push_back(entry(M::hyperbolic(5), 1, {cot(2.0 / 3), cot_csc2(-1.0 / 3)}, kNeg));
  t.push_back(entry(M::complex_hyperbolic(2), 1, {csc(-0.5, 2), logtan(-1)}, kNeg));
  t.push_back(entry(M::complex_hyperbolic(3), 1,
                    {csc(-0.25, 4), csc(0.5, 2), logtan(1)}, kNeg));
  t.push_back(entry(M::complex_hyperbolic(4), 1,
                    {csc(-1.0 / 6, 6), csc(0.25, 4), csc(-0.5, 2), logtan(-1)}, kNeg));
  t.push_back(entry(M::quaternion_hyperbolic(2), 0.5,
                    {csc(-1.0 / 3, 6), csc(1, 4), csc(-3, 2), sec(-1, 2), logtan(-8)}, kNeg));
  t.push_back(entry(M::quaternion_hyperbolic(3), 1,
                    {csc(-1.0 / 10, 10), csc(0.25, 8), csc(-0.5, 6), csc(1, 4),
                     csc(-5.0 / 2, 2), sec(-0.5, 2), logtan(-6)},
                    kNeg));
  t.push_back(entry(M::quaternion_hyperbolic(4), 0.5,
                    {csc(-1.0 / 7, 14), csc(1.0 / 3, 12), csc(-3.0 / 5, 10),
                     csc(1, 8), csc(-5.0 / 3, 6), csc(3, 4), csc(-7, 2),
                     sec(-1, 2), logtan(-16)},
                    kNeg));
  t.push_back(entry(M::octonion_hyperbolic(), 1,
                    {csc(-1.0 / 14, 14), csc(1.0 / 3, 12), csc(-1, 10),
                     csc(5.0 / 2, 8), csc(-35.0 / 6, 6), csc(14, 4),
                     csc(-42, 2), sec(-1.0 / 6, 6), sec(-2, 4), sec(-18, 2),
                     logtan(-120)},
                    kNeg));
  return t;
}

const std::vector<ClosedForm>& tables() {
  static const std::vector<ClosedForm> t = build_tables();
  return t;
}

}  // namespace

double Term::evaluate(double r, TrigKind trig) const {
  if (kind == TermKind::Log) return coefficient * std::log(r);
  if (kind == TermKind::Power) return coefficient * std::pow(r, power);

  const double x = half_angle ? 0.5 * r : r;
  const bool hyp = trig == TrigKind::Hyperbolic;
  const double s = hyp ? std::sinh(x) : std::sin(x);
  const double c = hyp ? std::cosh(x) : std::cos(x);
  switch (kind) {
    case TermKind::CscPow: return coefficient * std::pow(1.0 / s, power);
    case TermKind::SecPow: return coefficient * std::pow(1.0 / c, power);
    case TermKind::LogTan:
      return coefficient * (hyp ? log_tanh(x) : std::log(std::tan(x)));
    case TermKind::Cot: return coefficient * c / s;
    case TermKind::CotCscSq: return coefficient * c / (s * s * s);
    default: break;
  }
  return 0.0;
}

std::string Term::describe(TrigKind trig) const {
  const bool hyp = trig == TrigKind::Hyperbolic;
  const std::string arg = half_angle ? "(r/2)" : "(r)";
  std::ostringstream out;
  out << coefficient << "*";
  switch (kind) {
    case TermKind::CscPow: out << (hyp ? "csch^" : "csc^") << power << arg; break;
    case TermKind::SecPow: out << (hyp ? "sech^" : "sec^") << power << arg; break;
    case TermKind::LogTan: out << (hyp ? "log(tanh" : "log(tan") << arg << ")"; break;
    case TermKind::Cot: out << (hyp ? "coth" : "cot") << arg; break;
    case TermKind::CotCscSq:
      out << (hyp ? "coth" : "cot") << arg << (hyp ? "*csch^2" : "*csc^2") << arg;
      break;
    case TermKind::Log: out << "log(r)"; break;
    case TermKind::Power: out << "r^" << power; break;
  }
  return out.str();
}

double ClosedForm::evaluate(double r) const {
  const TrigKind trig = model.density().trig_kind;
  double sum = 0.0;
  for (const Term& term : terms) sum += term.evaluate(r, trig);
  return outer_factor * sum;
}

std::string ClosedForm::describe() const {
  const TrigKind trig = model.density().trig_kind;
  std::ostringstream out;
  if (outer_factor != 1.0) out << outer_factor << "*(";
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out << " + ";
    out << terms[i].describe(trig);
  }
  if (outer_factor != 1.0) out << ")";
  return out.str();
}

std::optional<ClosedForm> find_closed_form(const SpaceModel& model) {
  if (model.family() == Family::Euclidean) {
    const int m = model.dimension();
    if (m == 2) return ClosedForm{model, 1.0, {{1.0, TermKind::Log}}, "flat"};
    return ClosedForm{model, 1.0, {{1.0 / (2 - m), TermKind::Power, 2 - m}}, "flat"};
  }
  for (const ClosedForm& form : tables())
    if (form.model == model) return form;
  return std::nullopt;
}

std::vector<SpaceModel> closed_form_catalogue(int max_euclidean_dim) {
  std::vector<SpaceModel> out;
  for (const ClosedForm& form : tables()) out.push_back(form.model);
  for (int m = 2; m <= max_euclidean_dim; ++m) out.push_back(SpaceModel::euclidean(m));
  return out;
}

}  // namespace radharm
