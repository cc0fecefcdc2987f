#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "salt/corpus.hpp"
#include "salt/models.hpp"
#include "salt/noise.hpp"

namespace salt {

/// Measured ratios of an inequality's left side to its right-side functional.
struct EstimateReport {
  std::string id;
  /// Ladder variable: grid size N, or 1/ε, or mode M, depending on the check.
  std::vector<double> resolutions;
  /// Sup over corpus (and ε lists) at each ladder point.
  std::vector<double> ratios;
  /// Least-squares slope of log2 ratio against log2 resolution.
  double exponent = 0.0;
  double threshold = 0.1;
  bool pass = false;
  /// Optional second series on the same ladder (the uncancelled term, the
  /// A31 sum, ...) and its slope.
  std::string secondary_label;
  std::vector<double> secondary;
  double secondary_exponent = 0.0;
  /// When set, pass also requires the secondary series to be bounded.
  bool secondary_required = false;
  std::string note;
};

/// Slope of log ratio vs log resolution; 0 when every ratio is below 1e-14
/// (identically vanishing left side).
double growth_exponent(const std::vector<double>& resolutions,
                       const std::vector<double>& ratios);

/// Sets the exponents and pass (exponent <= threshold, all ratios finite,
/// and the same for the secondary series when it is required).
void finalize(EstimateReport& rep);

struct LabConfig {
  std::vector<std::size_t> resolutions{64, 128, 256, 512, 1024};
  std::vector<std::size_t> resolutions_2d{64, 128, 256, 512, 1024};
  std::size_t corpus_size = 4;
  std::uint64_t seed = 7;
  std::size_t K = 8;
  DecaySpec decay{};
  /// ε ladder 2^{-1} ... 2^{-8}.
  std::vector<double> eps_list{0.5, 0.25, 0.125, 0.0625, 0.03125, 0.015625,
                               0.0078125, 0.00390625};
  /// Smaller corpus and ε subset for the 2D model, whose grids are n² large.
  std::size_t corpus_size_2d = 2;
  std::vector<double> eps_list_2d{0.5, 0.125, 0.03125, 0.0078125};
  std::size_t workers = 1;
  double threshold = 0.1;
  /// Sobolev index used for each model's checks.
  double s_sch2 = 6.0;
  double s_ccf = 4.0;
  double s_sqg = 4.5;
  double s_scalar = 4.0;
  /// Grid for the mollifier-rate study (1D).
  std::size_t mollifier_n = 4096;

  friend bool operator==(const LabConfig&, const LabConfig&) = default;
};

// Single-field primitives ---------------------------------------------------

struct CancellationTerms {
  /// (D^s Σ L² f, D^s f) + Σ ‖D^s L f‖².
  double q = 0.0;
  /// (D^s Σ L² f, D^s f) alone.
  double first = 0.0;
  double norm2 = 0.0;
};
CancellationTerms cancellation_terms(double s, const NoiseBasis& basis,
                                     const SpectralField& f);

struct Sides {
  double lhs = 0.0;
  double rhs = 0.0;
  [[nodiscard]] double ratio() const;
};

/// ‖[D^s, f] g‖_{L²} against ‖∇f‖_∞ ‖D^{s-1} g‖_{L²} + ‖D^s f‖_{L²} ‖g‖_∞.
Sides kato_ponce_sides(double s, const GridField& f, const GridField& g);
/// ‖J̃_ε(g ∂x f) - g ∂x J̃_ε f‖_{L²} against ‖∇g‖_∞ ‖f‖_{L²} (1D).
Sides te_commutator_sides(double eps, const GridField& g, const GridField& f);
/// 2(g_ε(X), X)_X + Σ‖h_ε^k(X)‖²_X (absolute value) against (1+‖X‖_V)‖X‖²_X.
Sides a32_sides(const ModelOps& ops, const ModelState& X, double s);
/// Σ |(h_ε^k(X), X)_X|² against ‖X‖⁴_X.
Sides a31_sides(const ModelOps& ops, const ModelState& X, double s);
/// 2(g(X)-g(Y), X-Y)_Z + Σ‖h^k(X)-h^k(Y)‖²_Z (absolute value), Z at index
/// s-2, against (1+‖X‖²_X+‖Y‖²_X)‖X-Y‖²_Z.
Sides b12_sides(const ModelOps& ops, const ModelState& X, const ModelState& Y,
                double s);
/// ‖Hθ_x‖_∞ against 1 + ‖θ_x‖_∞ log(e + ‖θ_x‖_{H¹}) + ‖θ_x‖_{L²}.
Sides dong_sides(const GridField& theta);
/// ‖u - J_ε u‖_{H^r}.
double mollifier_error(const SpectralField& u, double eps, double r);

struct MollifierRate {
  double s = 0.0;
  double r = 0.0;
  /// Smallest fitted slope of log ‖u - J_ε u‖_{H^r} against log ε over the
  /// corpus.
  double slope = 0.0;
  bool pass = false;
};
/// (s, r) = (4, 2) and (4, 3); pass when slope >= s - r - 0.2.
std::vector<MollifierRate> mollifier_rates(const LabConfig& lab);

// Resolution sweeps ---------------------------------------------------------

EstimateReport check_cancellation(const LabConfig& lab);
EstimateReport check_kato_ponce(const LabConfig& lab);
EstimateReport check_te_commutator(const LabConfig& lab);
/// Rates of ‖u - J_ε u‖_{H^r} in ε for (s, r) = (4, 2) and (4, 3) on the
/// critical corpus, and the smoothing-gain ratio ε^{r-s}‖J_ε u‖_{H^r}/‖u‖_{H^s}
/// for r = s + 1, s + 2. The report's ratios are the gain ratios against 1/ε.
EstimateReport check_mollifier(const LabConfig& lab);
EstimateReport check_A3(ModelKind model, const LabConfig& lab);
EstimateReport check_B12(ModelKind model, const LabConfig& lab);
/// Single-mode sweep cos(Mx), M = 1..64 on a 256-point grid.
EstimateReport check_dong(const LabConfig& lab);

/// Identifiers accepted by run_estimate, in suite order.
const std::vector<std::string>& estimate_ids();
/// Runs one check by id, or every check for "all". Throws
/// ParameterError listing the valid ids for unknown input.
std::vector<EstimateReport> run_estimate(const std::string& id, const LabConfig& lab);

/// Columnar text: id,resolution,ratio,secondary.
void write_report(const EstimateReport& rep, std::ostream& out);
/// id,exponent,threshold,pass table.
void write_summary(const std::vector<EstimateReport>& reps, std::ostream& out);

}  // namespace salt
