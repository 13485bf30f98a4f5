#include "symscat/potential.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

#include "symscat/core.hpp"

namespace symscat {
namespace {

constexpr double kSymmetryTol = 1e-12;
constexpr double kSpacingTol = 1e-9;

void check_sampled(const Sampled& s) {
  require(s.half_width > 0.0 && std::isfinite(s.half_width), ErrorCode::kPreconditionViolated,
          "sampled potential needs a positive half-width");
  require(s.x.size() == s.v.size(), ErrorCode::kInvalidInput, "x and V columns differ in length");
  require(s.x.size() >= 3 && s.x.size() % 2 == 1, ErrorCode::kInvalidInput,
          "sampled potential needs an odd number (>= 3) of samples");
  for (std::size_t i = 0; i < s.x.size(); ++i) {
    require(std::isfinite(s.x[i]) && std::isfinite(s.v[i]), ErrorCode::kNonFiniteSample,
            "sample " + std::to_string(i) + " is not finite");
  }

  const std::size_t n = s.x.size() - 1;
  const double a = s.half_width;
  const double h = 2.0 * a / static_cast<double>(n);
  require(std::abs(s.x.front() + a) <= kSpacingTol * h && std::abs(s.x.back() - a) <= kSpacingTol * h,
          ErrorCode::kNonUniformGrid, "grid does not cover exactly [-a, a]");
  for (std::size_t i = 0; i < n; ++i) {
    const double step = s.x[i + 1] - s.x[i];
    require(std::abs(step - h) <= kSpacingTol * h, ErrorCode::kNonUniformGrid,
            "grid spacing deviates at sample " + std::to_string(i));
  }

  double vmax = 0.0;
  for (double v : s.v) vmax = std::max(vmax, std::abs(v));
  const double tol = kSymmetryTol * std::max(1.0, vmax);
  for (std::size_t i = 0; i <= n / 2; ++i) {
    require(std::abs(s.v[i] - s.v[n - i]) <= tol, ErrorCode::kAsymmetricPotential,
            "V(x) != V(-x) at x = " + std::to_string(s.x[i]));
  }
}

double interpolate(const Sampled& s, double x) {
  const double a = s.half_width;
  if (x < -a || x > a) return 0.0;
  const std::size_t n = s.x.size() - 1;
  const double h = 2.0 * a / static_cast<double>(n);
  const double u = (x + a) / h;
  const auto i = std::min(static_cast<std::size_t>(std::max(0.0, std::floor(u))), n - 1);
  const double frac = u - static_cast<double>(i);
  return s.v[i] + frac * (s.v[i + 1] - s.v[i]);
}

}  // namespace

double EvaluatedPotential::operator()(double x) const {
  // Evaluate through |x| so the mirror symmetry holds exactly.
  const double ax = std::abs(x);
  return std::visit(
      [&](const auto& p) -> double {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, SquareWell>) {
          return ax <= p.half_width ? -p.depth : 0.0;
        } else if constexpr (std::is_same_v<T, Sampled>) {
          return interpolate(p, ax);
        } else {
          throw Error(ErrorCode::kPreconditionViolated, "delta potential has no pointwise values");
        }
      },
      spec_);
}

EvaluatedPotential validate(PotentialSpec spec) {
  double half_width = 0.0;
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, SquareWell>) {
          require(std::isfinite(p.depth) && p.depth >= 0.0, ErrorCode::kPreconditionViolated,
                  "well depth must be finite and >= 0");
          require(std::isfinite(p.half_width) && p.half_width > 0.0, ErrorCode::kPreconditionViolated,
                  "well half-width must be positive");
          half_width = p.half_width;
        } else if constexpr (std::is_same_v<T, Delta>) {
          require(std::isfinite(p.strength) && p.strength > 0.0, ErrorCode::kPreconditionViolated,
                  "delta strength must be positive");
        } else {
          check_sampled(p);
          half_width = p.half_width;
        }
      },
      spec);
  return EvaluatedPotential(std::move(spec), half_width);
}

std::vector<double> symmetric_grid(double half_width, int intervals) {
  require(intervals >= 2 && intervals % 2 == 0, ErrorCode::kPreconditionViolated,
          "symmetric grid needs an even, positive number of intervals");
  std::vector<double> x(static_cast<std::size_t>(intervals) + 1);
  for (int i = 0; i <= intervals; ++i) {
    x[static_cast<std::size_t>(i)] =
        half_width * static_cast<double>(2 * i - intervals) / static_cast<double>(intervals);
  }
  return x;
}

Sampled sampled_on_grid(double half_width, std::vector<double> values) {
  require(values.size() >= 3 && values.size() % 2 == 1, ErrorCode::kInvalidInput,
          "sampled potential needs an odd number (>= 3) of samples");
  Sampled s;
  s.half_width = half_width;
  s.x = symmetric_grid(half_width, static_cast<int>(values.size()) - 1);
  s.v = std::move(values);
  return s;
}

Sampled sample_analytic(const PotentialSpec& spec, int n) {
  if (std::holds_alternative<Delta>(spec)) {
    throw Error(ErrorCode::kDeltaNotSamplable, "a delta distribution has no pointwise values");
  }
  require(std::holds_alternative<SquareWell>(spec), ErrorCode::kPreconditionViolated,
          "only analytic potentials can be sampled");
  require(n >= 3 && n % 2 == 1, ErrorCode::kPreconditionViolated, "sample count must be odd and >= 3");
  const auto evaluated = validate(spec);
  const auto& well = std::get<SquareWell>(spec);
  std::vector<double> values(static_cast<std::size_t>(n));
  const auto grid = symmetric_grid(well.half_width, n - 1);
  for (std::size_t i = 0; i < grid.size(); ++i) values[i] = evaluated(grid[i]);
  return sampled_on_grid(well.half_width, std::move(values));
}

Sampled read_potential_csv(std::istream& in) {
  std::string line;
  require(static_cast<bool>(std::getline(in, line)), ErrorCode::kInvalidInput, "empty potential CSV");
  std::erase_if(line, [](char c) { return c == '\r' || c == ' '; });
  require(line == "x,V", ErrorCode::kInvalidInput, "potential CSV header must be `x,V`");

  Sampled s;
  int row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty() || line == "\r") continue;
    std::istringstream fields(line);
    std::string xs, vs;
    require(std::getline(fields, xs, ',') && std::getline(fields, vs), ErrorCode::kInvalidInput,
            "row " + std::to_string(row) + " needs two columns");
    try {
      s.x.push_back(std::stod(xs));
      s.v.push_back(std::stod(vs));
    } catch (const std::exception&) {
      throw Error(ErrorCode::kInvalidInput, "row " + std::to_string(row) + " is not numeric");
    }
  }
  require(s.x.size() >= 3, ErrorCode::kInvalidInput, "potential CSV needs at least 3 rows");
  s.half_width = 0.5 * (s.x.back() - s.x.front());
  return s;
}

Sampled load_potential_csv(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), ErrorCode::kInvalidInput, "cannot open " + path);
  return read_potential_csv(in);
}

}  // namespace symscat
