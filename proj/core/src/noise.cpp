#include "salt/noise.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <istream>
#include <limits>
#include <ostream>
#include <random>
#include <sstream>
#include <string>

#include "salt/errors.hpp"
#include "salt/fft.hpp"
#include "salt/format.hpp"
#include "salt/norms.hpp"
#include "salt/spectral.hpp"

namespace salt {

std::string to_string(DecayKind kind) {
  return kind == DecayKind::Geometric ? "geometric" : "polynomial";
}

DecayKind parse_decay_kind(const std::string& text) {
  if (text == "geometric") return DecayKind::Geometric;
  if (text == "polynomial") return DecayKind::Polynomial;
  throw ParameterError("unknown decay kind '" + text +
                       "' (expected geometric or polynomial)");
}

double DecaySpec::target_norm(std::size_t k) const {
  if (kind == DecayKind::Geometric) {
    return amplitude * std::pow(param, static_cast<double>(k));
  }
  return amplitude * std::pow(static_cast<double>(k + 1), -param);
}

double DecaySpec::tail_bound(std::size_t K) const {
  const double inf = std::numeric_limits<double>::infinity();
  if (!(amplitude >= 0.0)) return inf;
  if (kind == DecayKind::Geometric) {
    if (!(param > 0.0 && param < 1.0)) return inf;
    return amplitude * std::pow(param, static_cast<double>(K)) / (1.0 - param);
  }
  if (!(param > 1.0)) return inf;
  // Σ_{j >= K+1} j^{-p} <= (K+1)^{-p} + ∫_{K+1}^∞ x^{-p} dx
  const double a = static_cast<double>(K + 1);
  return amplitude * (std::pow(a, -param) + std::pow(a, 1.0 - param) / (param - 1.0));
}

NoiseBasis::NoiseBasis(Grid grid, std::vector<VectorField> xis,
                       DecaySpec decay, double s_max)
    : grid_(grid), xis_(std::move(xis)), decay_(decay), s_max_(s_max) {
  for (const auto& xi : xis_) require_same_grid(grid_, xi.grid(), "NoiseBasis");
}

double NoiseBasis::partial_sum() const {
  double acc = 0.0;
  for (const auto& xi : xis_) acc += vector_sobolev_norm(xi, s_max_);
  return acc;
}

double NoiseBasis::max_divergence() const {
  double worst = 0.0;
  for (const auto& xi : xis_) worst = std::max(worst, xi.divergence_residual());
  return worst;
}

double vector_sobolev_norm(const VectorField& xi, double s) {
  double acc = 0.0;
  for (const auto& c : xi.spectral()) {
    const double n = sobolev_norm(c, s);
    acc += n * n;
  }
  return std::sqrt(acc);
}

namespace {

void validate_decay(const DecaySpec& decay, std::size_t K) {
  const double tail = decay.tail_bound(K);
  if (!std::isfinite(tail) || !(decay.amplitude > 0.0)) {
    throw ParameterError(
        "noise basis: divergent configuration (" + to_string(decay.kind) +
        " decay, param " + format_double(decay.param) + ", amplitude " +
        format_double(decay.amplitude) +
        "): tail bound of Σ‖ξ_k‖ is " + format_double(tail));
  }
}

void require_resolved(const Grid& grid, int max_mode, const char* what) {
  if (max_mode > grid.dealias_cutoff()) {
    throw ParameterError(std::string(what) + ": basis needs wavenumber " +
                         std::to_string(max_mode) +
                         " which exceeds the dealiasing cutoff " +
                         std::to_string(grid.dealias_cutoff()));
  }
}

VectorField normalized(std::vector<SpectralField> comps, double target,
                       double s_max) {
  double n2 = 0.0;
  for (const auto& c : comps) {
    const double n = sobolev_norm(c, s_max);
    n2 += n * n;
  }
  const double scale = target / std::sqrt(n2);
  for (auto& c : comps) c *= scale;
  return VectorField::from_spectral(std::move(comps));
}

}  // namespace

NoiseBasis build_basis_1d(const Grid& grid, std::size_t K,
                          const DecaySpec& decay, double s_max) {
  if (grid.dim() != 1) throw UnsupportedError("build_basis_1d: 1D grid required");
  validate_decay(decay, K);
  std::vector<VectorField> xis;
  for (std::size_t k = 0; k < K; ++k) {
    const int m = static_cast<int>(k / 2 + 1);
    require_resolved(grid, m, "build_basis_1d");
    SpectralField F(grid);
    // cos(mx) = (e^{imx} + e^{-imx})/2, sin(mx) = (e^{imx} - e^{-imx})/(2i)
    F.set_mode(m, 0, k % 2 == 0 ? Complex(0.5, 0.0) : Complex(0.0, -0.5));
    xis.push_back(normalized({std::move(F)}, decay.target_norm(k), s_max));
  }
  return NoiseBasis(grid, std::move(xis), decay, s_max);
}

std::vector<std::pair<int, int>> stream_wave_vectors(std::size_t count) {
  std::vector<std::pair<int, int>> out;
  for (int r2 = 1; out.size() < count; ++r2) {
    // Half-plane representatives: m1 > 0, or m1 == 0 and m2 > 0.
    std::vector<std::pair<int, int>> shell;
    for (int m1 = 0; m1 * m1 <= r2; ++m1) {
      for (int m2 = -r2; m2 <= r2; ++m2) {
        if (m1 * m1 + m2 * m2 != r2) continue;
        if (m1 == 0 && m2 <= 0) continue;
        shell.emplace_back(m1, m2);
      }
    }
    std::sort(shell.begin(), shell.end(), [](auto a, auto b) {
      if (a.first != b.first) return a.first > b.first;
      return a.second > b.second;
    });
    for (auto v : shell) {
      if (out.size() < count) out.push_back(v);
    }
  }
  return out;
}

NoiseBasis build_basis_sqg(const Grid& grid, std::size_t K,
                           const DecaySpec& decay, double s_max) {
  if (grid.dim() != 2) throw UnsupportedError("build_basis_sqg: 2D grid required");
  validate_decay(decay, K);
  const auto vectors = stream_wave_vectors((K + 1) / 2);
  std::vector<VectorField> xis;
  for (std::size_t k = 0; k < K; ++k) {
    const auto [m1, m2] = vectors[k / 2];
    require_resolved(grid, std::max(std::abs(m1), std::abs(m2)),
                     "build_basis_sqg");
    SpectralField psi(grid);
    psi.set_mode(m1, m2, k % 2 == 0 ? Complex(0.5, 0.0) : Complex(0.0, -0.5));
    xis.push_back(normalized(perp_gradient(psi), decay.target_norm(k), s_max));
  }
  return NoiseBasis(grid, std::move(xis), decay, s_max);
}

// Brownian paths -----------------------------------------------------------

double BrownianPath::value(std::size_t k, std::size_t n) const {
  double w = 0.0;
  for (std::size_t i = 0; i < n; ++i) w += increment(i, k);
  return w;
}

BrownianPath BrownianPath::coarsen() const {
  if (n_steps % 2 != 0) {
    throw ParameterError("BrownianPath::coarsen: odd number of steps");
  }
  BrownianPath out{seed, 2.0 * dt, n_steps / 2, K, {}};
  out.increments.resize(out.n_steps * K);
  for (std::size_t n = 0; n < out.n_steps; ++n) {
    for (std::size_t k = 0; k < K; ++k) {
      out.increments[n * K + k] = increment(2 * n, k) + increment(2 * n + 1, k);
    }
  }
  return out;
}

namespace {

std::mt19937_64 stream_for(std::uint64_t seed, std::size_t k, std::size_t level) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed & 0xffffffffu),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(k),
                    static_cast<std::uint32_t>(level), 0x5a17u};
  return std::mt19937_64(seq);
}

}  // namespace

BrownianPath sample_path(std::uint64_t seed, double dt, std::size_t n_steps,
                         std::size_t K) {
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw ParameterError("sample_path: dt must be positive");
  }
  BrownianPath path{seed, dt, n_steps, K, {}};
  path.increments.assign(n_steps * K, 0.0);
  if (n_steps == 0 || K == 0) return path;

  std::size_t levels = 0;
  std::size_t root = n_steps;
  while (root % 2 == 0) {
    root /= 2;
    ++levels;
  }
  const double root_dt = std::ldexp(dt, static_cast<int>(levels));

  std::vector<double> current;
  std::vector<double> next;
  for (std::size_t k = 0; k < K; ++k) {
    auto gen = stream_for(seed, k, 0);
    std::normal_distribution<double> normal(0.0, 1.0);
    current.resize(root);
    const double root_sd = std::sqrt(root_dt);
    for (auto& w : current) w = root_sd * normal(gen);

    double h = root_dt;
    for (std::size_t level = 1; level <= levels; ++level) {
      auto lg = stream_for(seed, k, level);
      std::normal_distribution<double> z(0.0, 1.0);
      const double half_sd = 0.5 * std::sqrt(h);
      next.resize(current.size() * 2);
      for (std::size_t i = 0; i < current.size(); ++i) {
        const double bridge = half_sd * z(lg);
        next[2 * i] = 0.5 * current[i] + bridge;
        next[2 * i + 1] = 0.5 * current[i] - bridge;
      }
      current.swap(next);
      h *= 0.5;
    }
    for (std::size_t n = 0; n < n_steps; ++n) path.increments[n * K + k] = current[n];
  }
  return path;
}

void write_path_csv(const BrownianPath& path, std::ostream& out) {
  out << "# seed=" << path.seed << " dt=" << format_double(path.dt)
      << " n_steps=" << path.n_steps << " K=" << path.K << '\n';
  for (std::size_t k = 0; k < path.K; ++k) {
    out << (k == 0 ? "" : ",") << "dW_" << k;
  }
  out << '\n';
  for (std::size_t n = 0; n < path.n_steps; ++n) {
    for (std::size_t k = 0; k < path.K; ++k) {
      out << (k == 0 ? "" : ",") << format_double(path.increment(n, k));
    }
    out << '\n';
  }
}

BrownianPath read_path_csv(std::istream& in) {
  BrownianPath path;
  std::string line;
  if (!std::getline(in, line) || line.rfind("# ", 0) != 0) {
    throw ParameterError("path csv: missing '# seed=... dt=...' header");
  }
  std::istringstream meta(line.substr(2));
  std::string token;
  while (meta >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) continue;
    const auto key = token.substr(0, eq);
    const auto val = token.substr(eq + 1);
    if (key == "seed") path.seed = std::stoull(val);
    else if (key == "dt") path.dt = parse_double(val);
    else if (key == "n_steps") path.n_steps = std::stoull(val);
    else if (key == "K") path.K = std::stoull(val);
  }
  std::getline(in, line);  // column names
  path.increments.reserve(path.n_steps * path.K);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string cell;
    std::size_t cols = 0;
    while (std::getline(row, cell, ',')) {
      path.increments.push_back(parse_double(cell));
      ++cols;
    }
    if (cols != path.K) throw ParameterError("path csv: ragged row");
  }
  if (path.increments.size() != path.n_steps * path.K) {
    throw ParameterError("path csv: row count does not match n_steps");
  }
  return path;
}

namespace {
constexpr char kMagic[8] = {'S', 'A', 'L', 'T', 'P', 'A', 'T', 'H'};

template <typename T>
void put(std::ostream& out, T v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T get(std::istream& in) {
  T v{};
  in.read(reinterpret_cast<char*>(&v), sizeof(T));
  if (!in) throw ParameterError("path binary: truncated input");
  return v;
}
}  // namespace

void write_path_binary(const BrownianPath& path, std::ostream& out) {
  out.write(kMagic, sizeof(kMagic));
  put<std::uint64_t>(out, path.seed);
  put<double>(out, path.dt);
  put<std::uint64_t>(out, path.n_steps);
  put<std::uint64_t>(out, path.K);
  out.write(reinterpret_cast<const char*>(path.increments.data()),
            static_cast<std::streamsize>(path.increments.size() * sizeof(double)));
}

BrownianPath read_path_binary(std::istream& in) {
  char magic[8];
  in.read(magic, sizeof(magic));
  if (!in || std::memcmp(magic, kMagic, sizeof(magic)) != 0) {
    throw ParameterError("path binary: bad magic");
  }
  BrownianPath path;
  path.seed = get<std::uint64_t>(in);
  path.dt = get<double>(in);
  path.n_steps = get<std::uint64_t>(in);
  path.K = get<std::uint64_t>(in);
  path.increments.resize(path.n_steps * path.K);
  in.read(reinterpret_cast<char*>(path.increments.data()),
          static_cast<std::streamsize>(path.increments.size() * sizeof(double)));
  if (!in) throw ParameterError("path binary: truncated increments");
  return path;
}

}  // namespace salt
