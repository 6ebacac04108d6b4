#pragma once

#include <optional>
#include <string>
#include <vector>

#include "radharm/space_models.hpp"

namespace radharm {

/// One elementary function appearing in the phi0 tables. For circular models
/// the trigonometric names are literal; for hyperbolic models each one is
/// replaced by its hyperbolic analogue (csc -> csch, tan -> tanh, ...).
/// Flat models only use Log and Power.
enum class TermKind {
  CscPow,     // csc(x)^power
  SecPow,     // sec(x)^power
  LogTan,     // log(tan(x))
  Cot,        // cot(x)
  CotCscSq,   // cot(x) csc(x)^2
  Log,        // log(r)
  Power,      // r^power
};

struct Term {
  double coefficient;
  TermKind kind;
  int power = 0;
  bool half_angle = false;  // x = r/2 instead of x = r

  double evaluate(double r, TrigKind trig) const;
  std::string describe(TrigKind trig) const;
};

/// A table entry phi0(r) = outer_factor * sum(terms), transcribed term by
/// term. The outer factor mirrors entries written as 1/2 (...).
struct ClosedForm {
  SpaceModel model;
  double outer_factor = 1.0;
  std::vector<Term> terms;
  std::string source;  // which table the entry comes from

  double evaluate(double r) const;
  std::string describe() const;
};

/// The transcribed entry for `model`, or nullopt outside the tables
/// (S2..S5, CP2..CP4, HP2..HP4, OP2, their hyperbolic duals, E^m for m >= 2).
std::optional<ClosedForm> find_closed_form(const SpaceModel& model);

/// Models with a table entry, in table order, plus E2..E(max_euclidean_dim).
std::vector<SpaceModel> closed_form_catalogue(int max_euclidean_dim = 5);

}  // namespace radharm
