#include <algorithm>
#include <cmath>
#include <limits>

#include "hyperkernel/errors.hpp"
#include "hyperkernel/verify.hpp"

namespace hyperkernel::verify {

namespace {

using kernels::Convention;
using kernels::SpectralParams;

constexpr double kInf = std::numeric_limits<double>::infinity();

template <class F>
double guarded(F&& f) {
  try {
    const double v = f();
    return std::isfinite(v) ? v : kInf;
  } catch (const DomainError&) {
    return kInf;
  } catch (const ConvergenceError&) {
    return kInf;
  }
}

std::vector<Convention> all_tuples() {
  std::vector<Convention> out;
  for (auto s : {kernels::SConvention::half_minus_i_lambda,
                 kernels::SConvention::one_minus_i_lambda_over_two}) {
    for (auto p : {kernels::PrefactorExponent::s, kernels::PrefactorExponent::s_plus_abs_k}) {
      for (auto a : {kernels::ArgumentVariant::cosh_sq_half_r, kernels::ArgumentVariant::cosh_sq_r}) {
        for (auto e : {kernels::ExponentSign::plus, kernels::ExponentSign::minus}) {
          out.push_back({s, p, a, e});
        }
      }
    }
  }
  return out;
}

std::vector<double> probe_ygrid(const ProbeSet& probes) {
  std::vector<double> ys;
  for (double r : probes.r) ys.push_back(kernels::RadialArg(r).y());
  return ys;
}

double integral_mismatch(const SpectralParams& sp, double r, const quad::QuadratureSpec& spec,
                         kernels::IntegralNormalization norm) {
  const kernels::RadialArg ra(r);
  const cplx closed = kernels::resolvent_radial(sp, ra);
  kernels::IntegralOptions opt;
  opt.normalization = norm;
  const cplx via = kernels::resolvent_via_integral(sp, ra, spec, opt);
  return std::abs(via - closed) / std::abs(closed);
}

// |slope - 1| of G against -(1/4pi) ln sinh^2(r/2) between r = 1e-5 and 1e-4.
double log_law_deviation(const SpectralParams& sp) {
  const double r1 = 1e-5, r2 = 1e-4;
  auto L = [](double r) {
    const double sh = std::sinh(0.5 * r);
    return -std::log(sh * sh) / (4.0 * kPi);
  };
  const cplx g1 = kernels::resolvent_radial(sp, kernels::RadialArg(r1));
  const cplx g2 = kernels::resolvent_radial(sp, kernels::RadialArg(r2));
  return std::abs((g1 - g2) / (L(r1) - L(r2)) - 1.0);
}

LocalFlag pick(std::string name, std::vector<std::pair<std::string, double>> cands) {
  LocalFlag f{std::move(name), std::move(cands), ""};
  const auto best = std::min_element(f.candidates.begin(), f.candidates.end(),
                                     [](const auto& x, const auto& y) { return x.second < y.second; });
  f.selected = best->first;
  return f;
}

std::string orientation_name(geom::PhaseOrientation o) {
  return o == geom::PhaseOrientation::conj_first ? "((1-conj(w)w')/(1-w conj(w')))^k"
                                                 : "((1-w conj(w'))/(1-conj(w)w'))^k";
}

}  // namespace

double phase_orientation_residual(double k, cplx lambda, const geom::DiscPoint& w,
                                  const geom::DiscPoint& w2, geom::PhaseOrientation orientation) {
  const SpectralParams sp(k, lambda);
  const auto G = [&](double dx, double dy) {
    const geom::DiscPoint z(w.value() + cplx(dx, dy));
    return geom::phase_factor(k, z, w2, orientation) *
           kernels::resolvent_radial(sp, kernels::RadialArg(geom::distance(z, w2)));
  };
  const double h = 1e-3;
  const cplx g0 = G(0.0, 0.0);
  const cplx xm2 = G(-2 * h, 0), xm1 = G(-h, 0), xp1 = G(h, 0), xp2 = G(2 * h, 0);
  const cplx ym2 = G(0, -2 * h), ym1 = G(0, -h), yp1 = G(0, h), yp2 = G(0, 2 * h);
  const cplx gx = (xm2 - 8.0 * xm1 + 8.0 * xp1 - xp2) / (12.0 * h);
  const cplx gy = (ym2 - 8.0 * ym1 + 8.0 * yp1 - yp2) / (12.0 * h);
  const cplx gxx = (-xm2 + 16.0 * xm1 - 30.0 * g0 + 16.0 * xp1 - xp2) / (12.0 * h * h);
  const cplx gyy = (-ym2 + 16.0 * ym1 - 30.0 * g0 + 16.0 * yp1 - yp2) / (12.0 * h * h);
  const cplx I(0.0, 1.0);
  const cplx d_w = 0.5 * (gx - I * gy);
  const cplx d_wbar = 0.5 * (gx + I * gy);
  const cplx wv = w.value();
  const double gap = w.conformal_gap();
  const cplx Lk = gap * gap * 0.25 * (gxx + gyy) + k * gap * wv * d_w -
                  k * gap * std::conj(wv) * d_wbar - k * k * std::norm(wv) * g0;
  const cplx D = Lk + (k * k + 0.25 + lambda * lambda) * g0;
  return std::abs(D) / std::abs(g0);
}

Json ConventionVerdict::to_json() const {
  Json j = Json::object();
  Json sel = Json::array();
  for (const auto& n : selected.names()) sel.push_back(n);
  j["selected"] = sel;
  j["winner_total"] = number_json(winner_total);
  j["runner_up_total"] = number_json(runner_up_total);
  j["separation"] = number_json(runner_up_total / winner_total);
  j["sane"] = sane;
  Json rows = Json::array();
  for (const auto& c : table) {
    Json row = Json::object();
    Json names = Json::array();
    for (const auto& n : c.convention.names()) names.push_back(n);
    row["convention"] = names;
    row["helmholtz"] = number_json(c.helmholtz);
    row["integral"] = number_json(c.integral);
    row["log_law"] = number_json(c.log_law);
    row["total"] = number_json(c.total);
    row["selected"] = c.selected;
    rows.push_back(row);
  }
  j["table"] = rows;
  Json flags = Json::array();
  for (const auto& f : local_flags) {
    Json fj = Json::object();
    fj["flag"] = f.name;
    Json cands = Json::array();
    for (const auto& [name, v] : f.candidates) {
      Json cj = Json::object();
      cj["candidate"] = name;
      cj["residual"] = number_json(v);
      cands.push_back(cj);
    }
    fj["candidates"] = cands;
    fj["selected"] = f.selected;
    flags.push_back(fj);
  }
  j["local_flags"] = flags;
  return j;
}

ConventionVerdict resolve_conventions(const quad::QuadratureSpec& spec, const ProbeSet& probes) {
  ConventionVerdict verdict;
  const std::vector<double> ys = probe_ygrid(probes);

  for (const Convention& conv : all_tuples()) {
    CandidateScore score;
    score.convention = conv;
    for (double k : probes.k) {
      for (cplx lambda : probes.lambda) {
        const SpectralParams sp(k, lambda, conv);
        score.helmholtz += guarded(
            [&] { return helmholtz_solution_residual(sp, Solution::outgoing, ys).residual; });
        score.log_law += guarded([&] { return log_law_deviation(sp); });
        for (double r : probes.r) {
          score.integral += guarded(
              [&] { return integral_mismatch(sp, r, spec, kernels::kResolvedNormalization); });
        }
      }
    }
    score.total = score.helmholtz + score.integral + score.log_law;
    verdict.table.push_back(score);
  }

  std::vector<std::size_t> order(verdict.table.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return verdict.table[x].total < verdict.table[y].total;
  });
  CandidateScore& winner = verdict.table[order[0]];
  winner.selected = true;
  verdict.selected = winner.convention;
  verdict.winner_total = winner.total;
  verdict.runner_up_total = verdict.table[order[1]].total;
  verdict.sane = winner.total <= kResolverSanity;

  // Regular solution: third parameter of the hypergeometric factor.
  {
    std::vector<std::pair<std::string, double>> cands;
    for (auto c3 : {RegularThirdParam::one, RegularThirdParam::two_abs_k_plus_one}) {
      double total = 0.0;
      for (double k : probes.k) {
        for (cplx lambda : probes.lambda) {
          const SpectralParams sp(k, lambda, verdict.selected);
          total += guarded(
              [&] { return helmholtz_solution_residual(sp, Solution::regular, ys, c3).residual; });
        }
      }
      cands.emplace_back(to_string(c3), total);
    }
    verdict.local_flags.push_back(pick("regular_third_parameter", cands));
  }

  // Phase orientation: the dressed kernel must solve the two-dimensional equation.
  {
    const geom::DiscPoint w(cplx(0.3, 0.1)), w2(cplx(-0.2, 0.25));
    std::vector<std::pair<std::string, double>> cands;
    for (auto o : {geom::PhaseOrientation::conj_first, geom::PhaseOrientation::conj_second}) {
      double total = 0.0;
      for (double k : probes.k) {
        for (cplx lambda : probes.lambda) {
          total += guarded([&] { return phase_orientation_residual(k, lambda, w, w2, o); });
        }
      }
      cands.emplace_back(orientation_name(o), total);
    }
    verdict.local_flags.push_back(pick("phase_orientation", cands));
  }

  // Normalization of the integral representation.
  {
    std::vector<std::pair<std::string, double>> cands;
    for (auto norm : {kernels::IntegralNormalization::half,
                      kernels::IntegralNormalization::inverse_two_i_lambda}) {
      double total = 0.0;
      for (double k : probes.k) {
        for (cplx lambda : probes.lambda) {
          const SpectralParams sp(k, lambda, verdict.selected);
          for (double r : probes.r) {
            total += guarded([&] { return integral_mismatch(sp, r, spec, norm); });
          }
        }
      }
      cands.emplace_back(kernels::to_string(norm), total);
    }
    verdict.local_flags.push_back(pick("integral_normalization", cands));
  }

  // Transform variable of the heat / resolvent Laplace relation.
  {
    quad::QuadratureSpec lspec = spec;
    lspec.tol = std::max(spec.tol, 1e-8);
    std::vector<std::pair<std::string, double>> cands;
    for (auto var : {LaplaceVariable::lambda_squared, LaplaceVariable::lambda}) {
      const double total =
          guarded([&] { return resolvent_heat_laplace_check(1.0, 0.8, 1.5, lspec, var).residual; });
      cands.emplace_back(to_string(var), total);
    }
    verdict.local_flags.push_back(pick("laplace_variable", cands));
  }
  return verdict;
}

}  // namespace hyperkernel::verify
