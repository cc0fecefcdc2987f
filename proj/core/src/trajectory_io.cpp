#include "salt/trajectory_io.hpp"

#include <ostream>

#include "salt/fft.hpp"
#include "salt/format.hpp"

namespace salt {

std::vector<std::string> component_names(ModelKind kind) {
  switch (kind) {
    case ModelKind::Sch2: return {"u", "eta"};
    case ModelKind::Ccf:
    case ModelKind::Sqg: return {"theta"};
    case ModelKind::Linear: return {"x"};
  }
  return {};
}

void write_trajectory(const TrajectoryRecord& rec, std::ostream& out) {
  const auto names = component_names(rec.model);
  out << "step,t,Hs_norm,V_norm,cutoff_norm";
  for (const auto& n : names) out << ",mean_" << n;
  out << ",stopped,reason\n";
  for (std::size_t i = 0; i < rec.samples(); ++i) {
    const bool last = i + 1 == rec.samples();
    out << rec.steps[i] << ',' << format_double(rec.t[i]) << ','
        << format_double(rec.hs_norm[i]) << ',' << format_double(rec.v_norm[i])
        << ',' << format_double(rec.cutoff_norm[i]);
    for (double m : rec.means[i]) out << ',' << format_double(m);
    out << ',' << (last && rec.stopped ? 1 : 0) << ','
        << (last ? to_string(rec.reason) : std::string("running")) << '\n';
  }
}

void write_state_table(const ModelState& X, std::ostream& out) {
  const auto names = component_names(X.kind());
  out << "component,k1,k2,re,im\n";
  for (std::size_t c = 0; c < X.components().size(); ++c) {
    const auto F = to_spectral(X.components()[c]);
    const Grid& g = F.grid();
    for (std::size_t i = 0; i < F.size(); ++i) {
      const auto kv = g.wave_vector(i);
      out << names[c] << ',' << kv.k1 << ',' << kv.k2 << ','
          << format_double(F[i].real()) << ',' << format_double(F[i].imag()) << '\n';
    }
  }
}

}  // namespace salt
