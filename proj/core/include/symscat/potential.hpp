#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace symscat {

/// V(x) = -depth on [-half_width, half_width], 0 outside.
struct SquareWell {
  double depth = 0.0;
  double half_width = 1.0;
};

/// V(x) = -strength * delta(x).
struct Delta {
  double strength = 0.0;
};

/// Tabulated V on a uniform grid covering exactly [-half_width, half_width].
/// The sample count is odd, so x = 0 is always a node.
struct Sampled {
  double half_width = 1.0;
  std::vector<double> x;
  std::vector<double> v;
};

using PotentialSpec = std::variant<SquareWell, Delta, Sampled>;

/// A validated potential. Sampled data is interpolated piecewise-linearly;
/// the square well is evaluated analytically. Delta potentials carry no
/// pointwise evaluator and are handled in closed form downstream.
class EvaluatedPotential {
 public:
  double half_width() const noexcept { return half_width_; }
  bool is_delta() const noexcept { return std::holds_alternative<Delta>(spec_); }
  const PotentialSpec& spec() const noexcept { return spec_; }

  /// V(x); zero outside [-a, a]. Throws PreconditionViolated for a delta.
  double operator()(double x) const;

 private:
  friend EvaluatedPotential validate(PotentialSpec spec);
  explicit EvaluatedPotential(PotentialSpec spec, double half_width)
      : spec_(std::move(spec)), half_width_(half_width) {}

  PotentialSpec spec_;
  double half_width_;
};

/// Checks the spec's invariants (positivity, finiteness, uniform grid,
/// mirror symmetry) and returns an evaluator.
EvaluatedPotential validate(PotentialSpec spec);

/// Uniform n-point sampling (n odd, n >= 3) of an analytic square well.
Sampled sample_analytic(const PotentialSpec& spec, int n);

/// Builds a Sampled spec from values on the symmetric grid x_i = a(2i - N)/N.
Sampled sampled_on_grid(double half_width, std::vector<double> values);

/// The symmetric uniform grid used throughout: x_i = a(2i - N)/N, i = 0..N.
/// Mirror pairs x_i, x_{N-i} are exact negatives of each other.
std::vector<double> symmetric_grid(double half_width, int intervals);

/// Two-column CSV with a header row `x,V`.
Sampled read_potential_csv(std::istream& in);
Sampled load_potential_csv(const std::string& path);

}  // namespace symscat
