#pragma once

#include <iosfwd>

#include "salt/models.hpp"
#include "salt/solver.hpp"

namespace salt {

/// Columnar text: a header row, then one row per sample with
/// step,t,Hs_norm,V_norm,cutoff_norm,mean_<component>...,stopped,reason.
/// stopped and reason describe the trajectory as of that row. Floats are
/// written in shortest round-trip form.
void write_trajectory(const TrajectoryRecord& rec, std::ostream& out);

/// Flat coefficient table of a state: component,k1,k2,re,im for every
/// stored Fourier coefficient.
void write_state_table(const ModelState& X, std::ostream& out);

/// Component names of a model in storage order ("u", "eta"; "theta"; "x").
std::vector<std::string> component_names(ModelKind kind);

}  // namespace salt
