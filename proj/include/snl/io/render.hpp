#pragma once

#include <map>
#include <string>
#include <vector>

#include "snl/constructions/state_set.hpp"
#include "snl/proof/replay.hpp"
#include "snl/verifier/triviality.hpp"

namespace snl {

/// Alpha (or psi, for identity-mixed sets) owning each basis label, laid out
/// with kept labels as rows and measured labels as columns. "." marks a label
/// no state touches, "*" a label shared by several.
std::string render_grid(const StateSet& s, const MeasuredSet& m);
std::string grid_csv(const StateSet& s, const MeasuredSet& m);

/// Stage number -> "B2 x1, B3 x1" style family summary of the alphas the
/// staged replay schedules at that stage.
std::map<int, std::string> stage_families(const StateSet& s);

/// Human-readable proof. With `annotate`, every staged block is followed by
/// the families it draws on and the lemma blocks name their inputs.
std::string render_trace(const ReplayResult& r, const StateSet& s, bool annotate = false);

std::string render_report(const StrongestReport& r, const StateSet& s);

}  // namespace snl
