#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "salt/grid.hpp"
#include "salt/lie.hpp"

namespace salt {

enum class DecayKind { Geometric, Polynomial };

std::string to_string(DecayKind kind);
DecayKind parse_decay_kind(const std::string& text);

/// Target H^{s_max} norms of the basis members.
///
/// Geometric: ‖ξ_k‖ = amplitude * param^k with 0 < param < 1.
/// Polynomial: ‖ξ_k‖ = amplitude * (k + 1)^{-param} with param > 1.
/// k is zero-based.
struct DecaySpec {
  DecayKind kind = DecayKind::Geometric;
  double param = 0.5;
  double amplitude = 1.0;

  [[nodiscard]] double target_norm(std::size_t k) const;
  /// Upper bound on Σ_{k >= K} target_norm(k); +inf for divergent settings.
  [[nodiscard]] double tail_bound(std::size_t K) const;

  friend bool operator==(const DecaySpec&, const DecaySpec&) = default;
};

/// Truncated family {ξ_k}_{k<K} with its decay metadata.
class NoiseBasis {
 public:
  NoiseBasis(Grid grid, std::vector<VectorField> xis, DecaySpec decay,
             double s_max);

  [[nodiscard]] const Grid& grid() const { return grid_; }
  [[nodiscard]] std::span<const VectorField> xis() const { return xis_; }
  [[nodiscard]] std::size_t size() const { return xis_.size(); }
  [[nodiscard]] bool empty() const { return xis_.empty(); }
  [[nodiscard]] const VectorField& operator[](std::size_t k) const {
    return xis_.at(k);
  }
  [[nodiscard]] const DecaySpec& decay() const { return decay_; }
  [[nodiscard]] double s_max() const { return s_max_; }

  /// Σ_{k<K} ‖ξ_k‖_{H^{s_max}} measured from the fields.
  [[nodiscard]] double partial_sum() const;
  /// Bound on the H^{s_max} mass of the discarded members k >= K.
  [[nodiscard]] double tail_bound() const { return decay_.tail_bound(size()); }
  /// Largest spectral divergence residual over the family.
  [[nodiscard]] double max_divergence() const;

 private:
  Grid grid_;
  std::vector<VectorField> xis_;
  DecaySpec decay_;
  double s_max_;
};

/// H^s norm of a vector field: sqrt(Σ_i ‖ξ_i‖²_{H^s}).
double vector_sobolev_norm(const VectorField& xi, double s);

/// 1D family ξ_k = a_k cos(m x) (k even) or a_k sin(m x) (k odd) with
/// m = k/2 + 1, scaled so that ‖ξ_k‖_{H^{s_max}} = decay.target_norm(k).
NoiseBasis build_basis_1d(const Grid& grid, std::size_t K,
                          const DecaySpec& decay, double s_max);

/// Divergence-free 2D family ξ_k = ∇^⊥ψ_k where ψ_k is the cosine (k even)
/// or sine (k odd) of the (k/2)-th wave vector in the order
/// (1,0), (0,1), (1,1), (1,-1), (2,0), ...; normalized as in 1D.
NoiseBasis build_basis_sqg(const Grid& grid, std::size_t K,
                           const DecaySpec& decay, double s_max);

/// Wave vectors used by build_basis_sqg, one per ± pair, in order.
std::vector<std::pair<int, int>> stream_wave_vectors(std::size_t count);

/// Independent Brownian increments for K scalar Wiener processes.
///
/// increments are stored row-major (n_steps rows, K columns).
struct BrownianPath {
  std::uint64_t seed = 0;
  double dt = 0.0;
  std::size_t n_steps = 0;
  std::size_t K = 0;
  std::vector<double> increments;

  [[nodiscard]] double increment(std::size_t step, std::size_t k) const {
    return increments[step * K + k];
  }
  [[nodiscard]] std::span<const double> step(std::size_t n) const {
    return std::span<const double>(increments).subspan(n * K, K);
  }
  /// W_k at time n * dt.
  [[nodiscard]] double value(std::size_t k, std::size_t n) const;
  /// Pairwise sums of consecutive increments: the same path at 2 dt.
  [[nodiscard]] BrownianPath coarsen() const;
};

/// Reproducible path: identical (seed, dt, n_steps, K) give bit-identical
/// increments.
///
/// Writing n_steps = n0 2^L with n0 odd, n0 increments of length dt 2^L are
/// drawn first and then refined L times by Brownian-bridge midpoint
/// splitting, each level from its own seeded stream. Halving dt while
/// doubling n_steps therefore refines the same path.
BrownianPath sample_path(std::uint64_t seed, double dt, std::size_t n_steps,
                         std::size_t K);

void write_path_csv(const BrownianPath& path, std::ostream& out);
BrownianPath read_path_csv(std::istream& in);
void write_path_binary(const BrownianPath& path, std::ostream& out);
BrownianPath read_path_binary(std::istream& in);

}  // namespace salt
