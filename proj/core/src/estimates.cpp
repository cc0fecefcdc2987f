#include "salt/estimates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>

#include "salt/errors.hpp"
#include "salt/fft.hpp"
#include "salt/format.hpp"
#include "salt/lie.hpp"
#include "salt/norms.hpp"
#include "salt/parallel.hpp"
#include "salt/solver.hpp"
#include "salt/spectral.hpp"

namespace salt {

double growth_exponent(const std::vector<double>& resolutions,
                       const std::vector<double>& ratios) {
  const double top = ratios.empty() ? 0.0 : *std::max_element(ratios.begin(), ratios.end());
  if (top < 1e-14) return 0.0;
  std::vector<double> r(ratios);
  for (double& v : r) v = std::max(v, 1e-300);
  return fit_loglog_slope(resolutions, r);
}

namespace {
bool all_finite(const std::vector<double>& v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}
}  // namespace

void finalize(EstimateReport& rep) {
  rep.exponent = growth_exponent(rep.resolutions, rep.ratios);
  rep.pass = all_finite(rep.ratios) && rep.exponent <= rep.threshold;
  if (!rep.secondary.empty()) {
    rep.secondary_exponent = growth_exponent(rep.resolutions, rep.secondary);
    if (rep.secondary_required) {
      rep.pass = rep.pass && all_finite(rep.secondary) &&
                 rep.secondary_exponent <= rep.threshold;
    }
  }
}

double Sides::ratio() const {
  if (lhs == 0.0) return 0.0;
  return lhs / rhs;
}

// Primitives -----------------------------------------------------------------

CancellationTerms cancellation_terms(double s, const NoiseBasis& basis,
                                     const SpectralField& f) {
  require_same_grid(basis.grid(), f.grid(), "cancellation_terms");
  CancellationTerms out;
  SpectralField second(f.grid());
  double energy = 0.0;
  for (const auto& xi : basis.xis()) {
    const auto Lf = lie_derivative(xi, f);
    second += lie_derivative(xi, Lf);
    energy += sobolev_inner(Lf, Lf, s);
  }
  out.first = sobolev_inner(second, f, s);
  out.q = out.first + energy;
  out.norm2 = sobolev_inner(f, f, s);
  return out;
}

Sides kato_ponce_sides(double s, const GridField& f, const GridField& g) {
  const auto F = to_spectral(f);
  const auto G = to_spectral(g);
  Sides out;
  out.lhs = sobolev_norm(ds_commutator(s, F, G), 0.0);
  out.rhs = gradient_sup(f) * sobolev_norm(G, s - 1.0) +
            sobolev_norm(F, s) * linf_norm(g);
  return out;
}

Sides te_commutator_sides(double eps, const GridField& g, const GridField& f) {
  const auto F = to_spectral(f);
  const auto G = to_spectral(g);
  const auto a = mollify_helmholtz(product(G, derivative(F, 0)), eps);
  const auto b = product(G, derivative(mollify_helmholtz(F, eps), 0));
  Sides out;
  out.lhs = sobolev_norm(a - b, 0.0);
  out.rhs = gradient_sup(g) * l2_norm(f);
  return out;
}

Sides a32_sides(const ModelOps& ops, const ModelState& X, double s) {
  double lhs = 2.0 * state_inner(ops.g_eps(X), X, s);
  for (std::size_t k = 0; k < ops.noise_count(); ++k) {
    const double n = state_norm(ops.h_eps(X, k), s);
    lhs += n * n;
  }
  const double x = state_norm(X, s);
  return {std::abs(lhs), (1.0 + v_norm(X)) * x * x};
}

Sides a31_sides(const ModelOps& ops, const ModelState& X, double s) {
  double lhs = 0.0;
  for (std::size_t k = 0; k < ops.noise_count(); ++k) {
    const double p = state_inner(ops.h_eps(X, k), X, s);
    lhs += p * p;
  }
  const double x = state_norm(X, s);
  return {lhs, x * x * x * x};
}

Sides b12_sides(const ModelOps& ops, const ModelState& X, const ModelState& Y,
                double s) {
  const double z = s - 2.0;
  const ModelState D = X - Y;
  double lhs = 2.0 * state_inner(ops.g(X) - ops.g(Y), D, z);
  for (std::size_t k = 0; k < ops.noise_count(); ++k) {
    const double n = state_norm(ops.h(X, k) - ops.h(Y, k), z);
    lhs += n * n;
  }
  const double x = state_norm(X, s);
  const double y = state_norm(Y, s);
  const double d = state_norm(D, z);
  return {std::abs(lhs), (1.0 + x * x + y * y) * d * d};
}

Sides dong_sides(const GridField& theta) {
  if (theta.grid().dim() != 1) throw UnsupportedError("dong_sides: 1D only");
  const auto Tx = derivative(to_spectral(theta), 0);
  const GridField tx = to_grid(Tx);
  Sides out;
  out.lhs = linf_norm(to_grid(hilbert_transform(Tx)));
  out.rhs = 1.0 + linf_norm(tx) * std::log(std::numbers::e + sobolev_norm(Tx, 1.0)) +
            sobolev_norm(Tx, 0.0);
  return out;
}

double mollifier_error(const SpectralField& u, double eps, double r) {
  return sobolev_norm(u - mollify_J(u, eps), r);
}

// Sweeps ---------------------------------------------------------------------

namespace {

std::vector<double> as_doubles(const std::vector<std::size_t>& v) {
  return {v.begin(), v.end()};
}

struct Pair {
  double primary = 0.0;
  double secondary = 0.0;
};

// Evaluates fn(resolution index, corpus index) over the whole ladder in
// parallel and takes the sup over the corpus at each resolution.
template <class Fn>
void sweep(EstimateReport& rep, std::size_t levels, std::size_t corpus,
           std::size_t workers, Fn fn) {
  const auto vals = parallel_map(levels * corpus, workers, [&](std::size_t t) {
    return fn(t / corpus, t % corpus);
  });
  rep.ratios.assign(levels, 0.0);
  rep.secondary.assign(levels, 0.0);
  for (std::size_t t = 0; t < vals.size(); ++t) {
    auto& p = rep.ratios[t / corpus];
    auto& q = rep.secondary[t / corpus];
    p = std::isnan(vals[t].primary) ? vals[t].primary : std::max(p, vals[t].primary);
    q = std::isnan(vals[t].secondary) ? vals[t].secondary
                                      : std::max(q, vals[t].secondary);
  }
}

TrigSpec critical(double s, std::uint64_t seed) {
  TrigSpec spec;
  spec.roughness = Roughness::Critical;
  spec.s = s;
  spec.seed = seed;
  return spec;
}

double model_s(ModelKind model, const LabConfig& lab) {
  switch (model) {
    case ModelKind::Sch2: return lab.s_sch2;
    case ModelKind::Ccf: return lab.s_ccf;
    case ModelKind::Sqg: return lab.s_sqg;
    case ModelKind::Linear: break;
  }
  throw UnsupportedError("estimate checks are defined for sch2, ccf and sqg");
}

Grid model_grid(ModelKind model, std::size_t n) {
  return Grid(model == ModelKind::Sqg ? 2 : 1, n);
}

NoiseBasis model_basis(ModelKind model, const Grid& grid, const LabConfig& lab,
                       double s) {
  return model == ModelKind::Sqg ? build_basis_sqg(grid, lab.K, lab.decay, s + 2.0)
                                 : build_basis_1d(grid, lab.K, lab.decay, s + 2.0);
}

// Corpus member i at critical roughness in the model's state space.
ModelState corpus_state(ModelKind model, const Grid& grid, double s,
                        std::uint64_t seed) {
  switch (model) {
    case ModelKind::Sch2: {
      auto u = random_trig(grid, critical(s, seed));
      auto eta = random_trig(grid, critical(s - 1.0, seed + 7919));
      return ModelState::sch2(std::move(u), std::move(eta));
    }
    case ModelKind::Ccf: return ModelState::ccf(random_trig(grid, critical(s, seed)));
    case ModelKind::Sqg: return ModelState::sqg(random_trig(grid, critical(s, seed)));
    case ModelKind::Linear: break;
  }
  throw UnsupportedError("corpus_state: unsupported model");
}

const std::vector<std::size_t>& ladder(ModelKind model, const LabConfig& lab) {
  return model == ModelKind::Sqg ? lab.resolutions_2d : lab.resolutions;
}

std::size_t corpus_count(ModelKind model, const LabConfig& lab) {
  return model == ModelKind::Sqg ? lab.corpus_size_2d : lab.corpus_size;
}

const std::vector<double>& eps_ladder(ModelKind model, const LabConfig& lab) {
  return model == ModelKind::Sqg ? lab.eps_list_2d : lab.eps_list;
}

}  // namespace

EstimateReport check_cancellation(const LabConfig& lab) {
  EstimateReport rep;
  rep.id = "cancellation";
  rep.threshold = lab.threshold;
  rep.resolutions = as_doubles(lab.resolutions);
  rep.secondary_label = "uncancelled";
  const double s = lab.s_scalar;
  sweep(rep, lab.resolutions.size(), lab.corpus_size, lab.workers,
        [&](std::size_t r, std::size_t i) {
          const Grid grid(1, lab.resolutions[r]);
          const auto basis = build_basis_1d(grid, lab.K, lab.decay, s + 2.0);
          const auto f = random_trig_spectral(grid, critical(s, lab.seed + i));
          const auto c = cancellation_terms(s, basis, f);
          return Pair{std::abs(c.q) / c.norm2, std::abs(c.first) / c.norm2};
        });
  finalize(rep);
  rep.note = "uncancelled exponent " + format_double(rep.secondary_exponent);
  return rep;
}

EstimateReport check_kato_ponce(const LabConfig& lab) {
  EstimateReport rep;
  rep.id = "kato_ponce";
  rep.threshold = lab.threshold;
  rep.resolutions = as_doubles(lab.resolutions);
  const double s = lab.s_scalar;
  sweep(rep, lab.resolutions.size(), lab.corpus_size, lab.workers,
        [&](std::size_t r, std::size_t i) {
          const Grid grid(1, lab.resolutions[r]);
          const auto f = random_trig(grid, critical(s, lab.seed + i));
          const auto g = random_trig(grid, critical(s, lab.seed + 1000 + i));
          return Pair{kato_ponce_sides(s, f, g).ratio(), 0.0};
        });
  rep.secondary.clear();
  finalize(rep);
  return rep;
}

EstimateReport check_te_commutator(const LabConfig& lab) {
  EstimateReport rep;
  rep.id = "te_commutator";
  rep.threshold = lab.threshold;
  rep.resolutions = as_doubles(lab.resolutions);
  sweep(rep, lab.resolutions.size(), lab.corpus_size, lab.workers,
        [&](std::size_t r, std::size_t i) {
          const Grid grid(1, lab.resolutions[r]);
          TrigSpec gs = critical(2.0, lab.seed + i);
          gs.roughness = Roughness::Smooth;
          const auto g = random_trig(grid, gs);
          const auto f = white_noise(grid, lab.seed + 5000 + i);
          double worst = 0.0;
          for (double eps : lab.eps_list) {
            worst = std::max(worst, te_commutator_sides(eps, g, f).ratio());
          }
          return Pair{worst, 0.0};
        });
  rep.secondary.clear();
  finalize(rep);
  return rep;
}

std::vector<MollifierRate> mollifier_rates(const LabConfig& lab) {
  const Grid grid(1, lab.mollifier_n);
  const double s = 4.0;
  std::vector<MollifierRate> out;
  for (double r : {2.0, 3.0}) {
    const auto slopes = parallel_map(lab.corpus_size, lab.workers, [&](std::size_t i) {
      const auto u = random_trig_spectral(grid, critical(s, lab.seed + i));
      std::vector<double> err;
      for (double eps : lab.eps_list) err.push_back(mollifier_error(u, eps, r));
      return fit_loglog_slope(lab.eps_list, err);
    });
    MollifierRate m;
    m.s = s;
    m.r = r;
    m.slope = *std::min_element(slopes.begin(), slopes.end());
    m.pass = m.slope >= (s - r) - 0.2;
    out.push_back(m);
  }
  return out;
}

EstimateReport check_mollifier(const LabConfig& lab) {
  EstimateReport rep;
  rep.id = "mollifier";
  rep.threshold = lab.threshold;
  for (double eps : lab.eps_list) rep.resolutions.push_back(1.0 / eps);
  const Grid grid(1, lab.mollifier_n);
  const double s = 4.0;
  const auto gains = parallel_map(lab.corpus_size, lab.workers, [&](std::size_t i) {
    const auto u = random_trig_spectral(grid, critical(s, lab.seed + i));
    const double us = sobolev_norm(u, s);
    std::vector<double> g;
    for (double eps : lab.eps_list) {
      const auto Ju = mollify_J(u, eps);
      double worst = 0.0;
      for (double r : {s + 1.0, s + 2.0}) {
        worst = std::max(worst, std::pow(eps, r - s) * sobolev_norm(Ju, r) / us);
      }
      g.push_back(worst);
    }
    return g;
  });
  rep.ratios.assign(lab.eps_list.size(), 0.0);
  for (const auto& g : gains) {
    for (std::size_t j = 0; j < g.size(); ++j) rep.ratios[j] = std::max(rep.ratios[j], g[j]);
  }
  finalize(rep);
  for (const auto& m : mollifier_rates(lab)) {
    rep.note += "rate(s=" + format_double(m.s) + ",r=" + format_double(m.r) +
                ") slope " + format_double(m.slope) + (m.pass ? " ok; " : " LOW; ");
    rep.pass = rep.pass && m.pass;
  }
  return rep;
}

EstimateReport check_A3(ModelKind model, const LabConfig& lab) {
  EstimateReport rep;
  rep.id = "a3_" + to_string(model);
  rep.threshold = lab.threshold;
  const auto& ns = ladder(model, lab);
  rep.resolutions = as_doubles(ns);
  rep.secondary_label = "A31";
  rep.secondary_required = true;
  const double s = model_s(model, lab);
  sweep(rep, ns.size(), corpus_count(model, lab), lab.workers,
        [&](std::size_t r, std::size_t i) {
          const Grid grid = model_grid(model, ns[r]);
          const auto basis = model_basis(model, grid, lab, s);
          const auto X = corpus_state(model, grid, s, lab.seed + i);
          Pair p;
          for (double eps : eps_ladder(model, lab)) {
            const ModelOps ops(model, basis, eps);
            p.primary = std::max(p.primary, a32_sides(ops, X, s).ratio());
            p.secondary = std::max(p.secondary, a31_sides(ops, X, s).ratio());
          }
          return p;
        });
  finalize(rep);
  rep.note = "A31 exponent " + format_double(rep.secondary_exponent);
  return rep;
}

EstimateReport check_B12(ModelKind model, const LabConfig& lab) {
  EstimateReport rep;
  rep.id = "b12_" + to_string(model);
  rep.threshold = lab.threshold;
  const auto& ns = ladder(model, lab);
  rep.resolutions = as_doubles(ns);
  const double s = model_s(model, lab);
  sweep(rep, ns.size(), corpus_count(model, lab), lab.workers,
        [&](std::size_t r, std::size_t i) {
          const Grid grid = model_grid(model, ns[r]);
          const ModelOps ops(model, model_basis(model, grid, lab, s), 0.5);
          const auto X = corpus_state(model, grid, s, lab.seed + i);
          const auto Y = corpus_state(model, grid, s, lab.seed + 3000 + i);
          return Pair{b12_sides(ops, X, Y, s).ratio(), 0.0};
        });
  rep.secondary.clear();
  finalize(rep);
  return rep;
}

EstimateReport check_dong(const LabConfig& lab) {
  EstimateReport rep;
  rep.id = "dong";
  rep.threshold = lab.threshold;
  const Grid grid(1, 256);
  for (int M = 1; M <= 64; ++M) {
    rep.resolutions.push_back(M);
    const auto theta =
        GridField::from_function(grid, [M](double x) { return std::cos(M * x); });
    rep.ratios.push_back(dong_sides(theta).ratio());
  }
  finalize(rep);
  double worst = 0.0;
  for (std::size_t i = 0; i < lab.corpus_size; ++i) {
    worst = std::max(worst,
                     dong_sides(random_trig(grid, critical(lab.s_ccf, lab.seed + i))).ratio());
  }
  rep.note = "corpus ratio " + format_double(worst);
  return rep;
}

const std::vector<std::string>& estimate_ids() {
  static const std::vector<std::string> ids{
      "cancellation", "kato_ponce", "te_commutator", "mollifier", "a3_sch2",
      "a3_ccf",       "a3_sqg",     "b12_sch2",      "b12_ccf",   "b12_sqg",
      "dong"};
  return ids;
}

std::vector<EstimateReport> run_estimate(const std::string& id, const LabConfig& lab) {
  if (id == "all") {
    std::vector<EstimateReport> out;
    for (const auto& one : estimate_ids()) {
      auto r = run_estimate(one, lab);
      out.insert(out.end(), r.begin(), r.end());
    }
    return out;
  }
  if (id == "cancellation") return {check_cancellation(lab)};
  if (id == "kato_ponce") return {check_kato_ponce(lab)};
  if (id == "te_commutator") return {check_te_commutator(lab)};
  if (id == "mollifier") return {check_mollifier(lab)};
  if (id == "a3_sch2") return {check_A3(ModelKind::Sch2, lab)};
  if (id == "a3_ccf") return {check_A3(ModelKind::Ccf, lab)};
  if (id == "a3_sqg") return {check_A3(ModelKind::Sqg, lab)};
  if (id == "b12_sch2") return {check_B12(ModelKind::Sch2, lab)};
  if (id == "b12_ccf") return {check_B12(ModelKind::Ccf, lab)};
  if (id == "b12_sqg") return {check_B12(ModelKind::Sqg, lab)};
  if (id == "dong") return {check_dong(lab)};
  std::string valid = "all";
  for (const auto& v : estimate_ids()) valid += ", " + v;
  throw ParameterError("unknown estimate id '" + id + "'; valid ids: " + valid);
}

void write_report(const EstimateReport& rep, std::ostream& out) {
  out << "id,resolution,ratio,secondary\n";
  for (std::size_t i = 0; i < rep.resolutions.size(); ++i) {
    out << rep.id << ',' << format_double(rep.resolutions[i]) << ','
        << format_double(rep.ratios[i]) << ','
        << (i < rep.secondary.size() ? format_double(rep.secondary[i]) : "") << '\n';
  }
}

void write_summary(const std::vector<EstimateReport>& reps, std::ostream& out) {
  out << "id,exponent,secondary_exponent,threshold,pass\n";
  for (const auto& r : reps) {
    out << r.id << ',' << format_double(r.exponent) << ','
        << (r.secondary.empty() ? "" : format_double(r.secondary_exponent)) << ','
        << format_double(r.threshold) << ',' << (r.pass ? "pass" : "FAIL") << '\n';
  }
}

}  // namespace salt
