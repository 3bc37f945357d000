#include "circfrechet/density_model.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "circfrechet/errors.hpp"
#include "circfrechet/rng.hpp"

namespace circfr {
namespace {

// I_0 via std::cyl_bessel_i.
double bessel_i0(double kappa) { return std::cyl_bessel_i(0.0, kappa); }

struct VonMisesComponent {
  double weight;
  double mu;
  double kappa;
  double norm;  // 1 / (2 pi I_0(kappa))
};

}  // namespace

DensityModel DensityModel::custom(std::string name, std::function<double(double)> pdf,
                                  std::function<double(double)> d1,
                                  std::function<double(double)> d2,
                                  std::function<double(Rng&)> draw) {
  DensityModel m;
  m.name_ = std::move(name);
  m.pdf_ = std::move(pdf);
  m.d1_ = std::move(d1);
  m.d2_ = std::move(d2);
  m.draw_ = std::move(draw);
  return m;
}

DensityModel DensityModel::uniform() {
  const double c = 1.0 / kTwoPi;
  return custom(
      "uniform", [c](double) { return c; }, [](double) { return 0.0; },
      [](double) { return 0.0; }, [](Rng& rng) { return rng.uniform(-kPi, kPi); });
}

DensityModel DensityModel::von_mises(double mu, double kappa) {
  return von_mises_mixture({1.0}, {mu}, {kappa});
}

DensityModel DensityModel::von_mises_mixture(std::vector<double> weights, std::vector<double> mus,
                                             std::vector<double> kappas) {
  if (weights.empty() || weights.size() != mus.size() || weights.size() != kappas.size()) {
    throw DomainError("mixture components must have matching non-empty weights/mus/kappas");
  }
  double wsum = 0.0;
  for (double w : weights) {
    if (w <= 0) throw DomainError("mixture weights must be positive");
    wsum += w;
  }
  std::vector<VonMisesComponent> comps;
  comps.reserve(weights.size());
  std::ostringstream label;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (kappas[i] < 0) throw DomainError("kappa must be non-negative");
    comps.push_back({weights[i] / wsum, canonical_angle(mus[i]), kappas[i],
                     1.0 / (kTwoPi * bessel_i0(kappas[i]))});
    if (i > 0) label << "+";
    label << weights[i] / wsum << "*vm:" << comps.back().mu << "," << kappas[i];
  }
  const std::string name = comps.size() == 1
                               ? "vm:" + std::to_string(comps[0].mu) + "," +
                                     std::to_string(comps[0].kappa)
                               : "mix:" + label.str();

  auto pdf = [comps](double theta) {
    double v = 0.0;
    for (const auto& c : comps) v += c.weight * c.norm * std::exp(c.kappa * std::cos(theta - c.mu));
    return v;
  };
  auto d1 = [comps](double theta) {
    double v = 0.0;
    for (const auto& c : comps) {
      const double t = theta - c.mu;
      v += c.weight * c.norm * std::exp(c.kappa * std::cos(t)) * (-c.kappa * std::sin(t));
    }
    return v;
  };
  auto d2 = [comps](double theta) {
    double v = 0.0;
    for (const auto& c : comps) {
      const double t = theta - c.mu;
      const double f = c.weight * c.norm * std::exp(c.kappa * std::cos(t));
      v += f * (c.kappa * c.kappa * std::sin(t) * std::sin(t) - c.kappa * std::cos(t));
    }
    return v;
  };
  auto draw = [comps](Rng& rng) {
    double u = rng.uniform01();
    for (const auto& c : comps) {
      if (u < c.weight || &c == &comps.back()) return draw_von_mises(c.mu, c.kappa, rng);
      u -= c.weight;
    }
    return draw_von_mises(comps.back().mu, comps.back().kappa, rng);
  };
  return custom(name, std::move(pdf), std::move(d1), std::move(d2), std::move(draw));
}

double DensityModel::draw(Rng& rng) const {
  if (!draw_) throw UnsupportedModelError("density model '" + name_ + "' has no sampler");
  return draw_(rng);
}

CircularSample DensityModel::sample(std::size_t n, std::uint64_t seed) const {
  if (n == 0) throw DomainError("sample size must be at least 1");
  Rng rng(seed);
  CircularSample out;
  out.seed = seed;
  out.angles.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.angles.push_back(canonical_angle(draw(rng)));
  return out;
}

DensityModel DensityModel::parse(const std::string& text) {
  auto parse_vm = [](const std::string& body, double& mu, double& kappa) {
    const auto comma = body.find(',');
    if (comma == std::string::npos) throw ParseError("expected 'vm:mu,kappa', got 'vm:" + body + "'");
    try {
      mu = std::stod(body.substr(0, comma));
      kappa = std::stod(body.substr(comma + 1));
    } catch (const std::exception&) {
      throw ParseError("non-numeric von Mises parameters in '" + body + "'");
    }
  };

  if (text == "uniform") return uniform();
  if (text.rfind("vm:", 0) == 0) {
    double mu, kappa;
    parse_vm(text.substr(3), mu, kappa);
    return von_mises(mu, kappa);
  }
  if (text.rfind("mix:", 0) == 0) {
    std::vector<double> ws, mus, ks;
    std::string rest = text.substr(4);
    std::stringstream ss(rest);
    std::string part;
    while (std::getline(ss, part, '+')) {
      const auto star = part.find("*vm:");
      if (star == std::string::npos) {
        throw ParseError("mixture component must look like 'w*vm:mu,kappa', got '" + part + "'");
      }
      double mu, kappa;
      try {
        ws.push_back(std::stod(part.substr(0, star)));
      } catch (const std::exception&) {
        throw ParseError("non-numeric mixture weight in '" + part + "'");
      }
      parse_vm(part.substr(star + 4), mu, kappa);
      mus.push_back(mu);
      ks.push_back(kappa);
    }
    return von_mises_mixture(std::move(ws), std::move(mus), std::move(ks));
  }
  throw ParseError("unknown density model '" + text + "'");
}

}  // namespace circfr
