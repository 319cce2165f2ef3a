#include "snl/io/render.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "snl/constructions/builders.hpp"

namespace snl {

namespace {

std::vector<std::vector<std::string>> grid_cells(const StateSet& s, const MeasuredSet& m) {
  std::vector<std::vector<std::string>> cells(m.kept_dim(),
                                              std::vector<std::string>(m.measured_dim(), "."));
  auto mark = [&](const Ket& k, std::size_t who) {
    for (const auto& t : k.terms()) {
      std::string& c = cells[m.kept_index(t.index)][m.measured_index(t.index)];
      c = c == "." ? std::to_string(who) : "*";
    }
  };
  if (s.mixing == Mixing::Fourier) {
    for (std::size_t j = 0; j < s.alphas.size(); ++j) mark(s.alphas[j].ket, j);
  } else {
    for (std::size_t j = 0; j < s.psis.size(); ++j) mark(s.psis[j], j);
  }
  return cells;
}

std::string clip(const std::vector<std::string>& items, std::size_t keep) {
  std::string out;
  for (std::size_t k = 0; k < items.size() && k < keep; ++k) {
    if (k) out += ", ";
    out += items[k];
  }
  if (items.size() > keep) out += ", ... (+" + std::to_string(items.size() - keep) + " more)";
  return out;
}

int stage_number(const std::string& stage) {
  auto pos = stage.rfind("Step ");
  if (pos == std::string::npos) return 0;
  return std::stoi(stage.substr(pos + 5));
}

}  // namespace

std::string render_grid(const StateSet& s, const MeasuredSet& m) {
  auto cells = grid_cells(s, m);
  std::size_t width = 1;
  for (std::size_t c = 0; c < m.measured_dim(); ++c) {
    width = std::max(width, m.measured_label(c).to_string().size());
  }
  for (const auto& row : cells) {
    for (const auto& c : row) width = std::max(width, c.size());
  }
  std::size_t lead = 4;
  for (std::size_t r = 0; r < m.kept_dim(); ++r) {
    lead = std::max(lead, m.kept_label(r).to_string().size());
  }
  std::ostringstream os;
  os << (s.mixing == Mixing::Fourier ? "alpha" : "psi") << " owner by (kept " << '{';
  for (std::size_t k = 0; k < m.kept().size(); ++k) os << (k ? "," : "") << m.kept()[k];
  os << "}, measured " << m.to_string() << "), " << m.kept_dim() << " x " << m.measured_dim()
     << "\n";
  os << std::setw(static_cast<int>(lead)) << "" << " |";
  for (std::size_t c = 0; c < m.measured_dim(); ++c) {
    os << ' ' << std::setw(static_cast<int>(width)) << m.measured_label(c).to_string();
  }
  os << "\n" << std::string(lead + 1, '-') << '+'
     << std::string((width + 1) * m.measured_dim(), '-') << "\n";
  for (std::size_t r = 0; r < m.kept_dim(); ++r) {
    os << std::setw(static_cast<int>(lead)) << m.kept_label(r).to_string() << " |";
    for (const auto& c : cells[r]) os << ' ' << std::setw(static_cast<int>(width)) << c;
    os << "\n";
  }
  return os.str();
}

std::string grid_csv(const StateSet& s, const MeasuredSet& m) {
  auto cells = grid_cells(s, m);
  std::ostringstream os;
  os << "kept";
  for (std::size_t c = 0; c < m.measured_dim(); ++c) os << ',' << m.measured_label(c).to_string();
  os << "\n";
  for (std::size_t r = 0; r < m.kept_dim(); ++r) {
    os << m.kept_label(r).to_string();
    for (const auto& c : cells[r]) os << ',' << c;
    os << "\n";
  }
  return os.str();
}

std::map<int, std::string> stage_families(const StateSet& s) {
  std::map<int, std::map<int, int>> counts;
  if (s.mixing == Mixing::Fourier) {
    for (std::size_t j = 1; j < s.alphas.size(); ++j) {
      ++counts[paper_stage(s.alphas[j].tag, s)][s.alphas[j].tag.family];
    }
  }
  std::map<int, std::string> out;
  for (const auto& [stage, fams] : counts) {
    std::string text;
    for (const auto& [f, n] : fams) {
      if (!text.empty()) text += ", ";
      text += "B" + std::to_string(f) + " x" + std::to_string(n);
    }
    out[stage] = text;
  }
  return out;
}

std::string render_trace(const ReplayResult& r, const StateSet& s, bool annotate) {
  std::ostringstream os;
  os << s.describe() << ", measured " << r.measured.to_string() << ", mode "
     << replay_mode_name(r.mode) << ": " << proof_verdict_name(r.verdict) << "\n";
  os << "zero off-diagonal entries " << r.zero_entries << "/" << r.off_diagonal_total
     << ", diagonal rank " << r.diagonal_rank << "/" << (r.dim ? r.dim - 1 : 0)
     << ", diagonal classes " << r.diagonal_classes;
  if (r.pivot >= 0) os << ", pivot a" << r.pivot;
  os << "\n";
  if (!r.note.empty()) os << "note: " << r.note << "\n";

  const auto families = annotate ? stage_families(s) : std::map<int, std::string>{};
  std::string current;
  std::size_t number = 0;
  for (const auto& step : r.trace.steps) {
    if (step.stage != current) {
      current = step.stage;
      os << "\n== " << current << " ==\n";
      if (annotate) {
        if (current == "Lemma 1") {
          os << "   [block zeros: psi_0 against the Fourier block]\n";
        } else if (current == "Lemma 2") {
          os << "   [block trivial over the Fourier block";
          if (r.pivot >= 0 && static_cast<std::size_t>(r.pivot) < s.alphas.size()) {
            os << ", pivot a" << r.pivot << " = " << s.alphas[r.pivot].tag.to_string();
          }
          os << "]\n";
        } else if (int k = stage_number(current); k > 0) {
          auto it = families.find(k);
          os << "   [Step " << k << ": "
             << (it == families.end() ? std::string("no alphas scheduled") : it->second) << "]\n";
        }
      }
    }
    os << std::setw(4) << ++number << ". " << step.rule << "\n";
    if (!step.consumed.empty()) os << "      uses:  " << clip(step.consumed, 6) << "\n";
    if (!step.produced.empty()) os << "      gives: " << clip(step.produced, 6) << "\n";
  }
  return os.str();
}

std::string render_report(const StrongestReport& r, const StateSet& s) {
  std::ostringstream os;
  os << s.describe() << " (" << s.dims.to_string() << "), " << s.size() << " states, lower bound "
     << lower_bound(s.dims) << "\n";
  if (!s.notice.empty()) os << "notice: " << s.notice << "\n";
  os << std::left << std::setw(12) << "measured" << std::right << std::setw(5) << "D"
     << std::setw(9) << "unknowns" << std::setw(6) << "null" << std::setw(6) << "herm"
     << std::setw(12) << "overlap" << std::setw(11) << "gap" << std::setw(7) << "method"
     << std::setw(14) << "verdict" << std::setw(10) << "seconds" << "\n";
  for (const auto& v : r.parties) {
    os << std::left << std::setw(12) << v.measured.to_string() << std::right << std::setw(5)
       << v.dim << std::setw(9) << v.dim * v.dim << std::setw(6) << v.nullspace_dim
       << std::setw(6) << v.hermitian_nullspace_dim << std::setw(12) << std::setprecision(10)
       << v.identity_overlap << std::setw(11) << std::setprecision(3) << v.spectral_gap
       << std::setw(7) << solver_method_name(v.method) << std::setw(14) << verdict_name(v.verdict)
       << std::setw(10) << std::fixed << std::setprecision(2) << v.wall_seconds
       << std::defaultfloat << "\n";
  }
  os << "overall: " << verdict_name(r.overall) << "\n";
  return os.str();
}

}  // namespace snl
