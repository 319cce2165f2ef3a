#include "snl/io/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "snl/constructions/builders.hpp"

namespace snl {

namespace {

Json number_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

std::string mixing_name(Mixing m) { return m == Mixing::Fourier ? "fourier" : "identity"; }

Mixing parse_mixing(const std::string& s) {
  if (s == "fourier") return Mixing::Fourier;
  if (s == "identity") return Mixing::Identity;
  throw ValidationError("unknown mixing '" + s + "'");
}

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.contains(key)) throw ValidationError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("field '") + key + "': " + e.what());
  }
}

bool same_ket(const Ket& a, const Ket& b) {
  if (!(a.dims() == b.dims()) || a.terms().size() != b.terms().size()) return false;
  for (std::size_t k = 0; k < a.terms().size(); ++k) {
    if (a.terms()[k].index != b.terms()[k].index ||
        !(a.terms()[k].amplitude == b.terms()[k].amplitude)) {
      return false;
    }
  }
  return true;
}

}  // namespace

void require_schema(const Json& j, const std::string& schema) {
  if (!j.is_object()) throw ValidationError("expected a JSON object");
  auto got = field<std::string>(j, "schema");
  if (got != schema) throw ValidationError("schema '" + got + "', expected '" + schema + "'");
  auto version = field<int>(j, "version");
  if (version != kSchemaVersion) {
    throw ValidationError("unsupported " + schema + " version " + std::to_string(version));
  }
}

Json to_json(const ExactScalar& v) {
  return Json{{"p", v.rational().get_num().get_str()},
              {"q", v.rational().get_den().get_str()},
              {"r", v.inv_sqrt_arg()},
              {"phase_order", v.phase_order()},
              {"phase_power", v.phase_power()}};
}

ExactScalar scalar_from_json(const Json& j) {
  Rational q;
  try {
    q = Rational(mpz_class(field<std::string>(j, "p")), mpz_class(field<std::string>(j, "q")));
  } catch (const std::invalid_argument&) {
    throw ValidationError("amplitude p/q is not an integer pair");
  }
  if (sgn(q.get_den()) == 0) throw ValidationError("amplitude has zero denominator");
  q.canonicalize();
  return ExactScalar(q, field<std::int64_t>(j, "r"), field<std::int64_t>(j, "phase_order"),
                     field<std::int64_t>(j, "phase_power"));
}

Json to_json(const Ket& k) {
  Json out = Json::array();
  for (const auto& t : k.terms()) {
    out.push_back(Json::array({decode(t.index, k.dims()).to_string(), to_json(t.amplitude)}));
  }
  return out;
}

Ket ket_from_json(const Json& j, const Dims& dims) {
  if (!j.is_array()) throw ValidationError("a ket is a list of [label, amplitude] pairs");
  std::vector<std::pair<BasisLabel, ExactScalar>> terms;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_string()) {
      throw ValidationError("a ket term is [label, amplitude]");
    }
    BasisLabel label = BasisLabel::parse(t[0].get<std::string>());
    validate_label(label, dims);
    terms.emplace_back(std::move(label), scalar_from_json(t[1]));
  }
  return Ket(dims, terms);
}

Json to_json(const StateSet& s) {
  Json out{{"schema", kStateSetSchema},
           {"version", kSchemaVersion},
           {"dims", s.dims.values()},
           {"construction", construction_name(s.construction)},
           {"params", s.params},
           {"notice", s.notice},
           {"mixing", mixing_name(s.mixing)}};
  Json alphas = Json::array();
  for (const auto& a : s.alphas) {
    alphas.push_back({{"tag", {{"family", a.tag.family}, {"params", a.tag.params}}},
                      {"name", a.tag.to_string()},
                      {"terms", to_json(a.ket)}});
  }
  out["alphas"] = std::move(alphas);
  Json psis = Json::array();
  for (const auto& p : s.psis) psis.push_back(to_json(p));
  out["psis"] = std::move(psis);
  return out;
}

StateSet stateset_from_json(const Json& j) {
  require_schema(j, kStateSetSchema);
  Dims dims(field<std::vector<int>>(j, "dims"));
  Construction c = j.contains("construction")
                       ? parse_construction(field<std::string>(j, "construction"))
                       : Construction::Custom;
  std::vector<int> params = j.contains("params") ? field<std::vector<int>>(j, "params")
                                                 : std::vector<int>{};
  std::string notice = j.contains("notice") ? field<std::string>(j, "notice") : std::string();

  std::vector<Alpha> alphas;
  if (j.contains("alphas")) {
    for (const auto& a : j.at("alphas")) {
      FamilyTag tag{c, 0, {}};
      if (a.contains("tag")) {
        tag.family = field<int>(a.at("tag"), "family");
        tag.params = field<std::vector<int>>(a.at("tag"), "params");
      }
      if (!a.contains("terms")) throw ValidationError("alpha without 'terms'");
      alphas.push_back({ket_from_json(a.at("terms"), dims), tag});
    }
  }
  std::vector<Ket> psis;
  if (j.contains("psis")) {
    for (const auto& p : j.at("psis")) psis.push_back(ket_from_json(p, dims));
  }
  Mixing mixing = j.contains("mixing") ? parse_mixing(field<std::string>(j, "mixing"))
                                       : (alphas.empty() ? Mixing::Identity : Mixing::Fourier);

  StateSet s;
  if (mixing == Mixing::Fourier) {
    if (alphas.empty()) throw ValidationError("fourier mixing needs 'alphas'");
    s = assemble_fourier_set(dims, std::move(alphas), c, std::move(params));
    if (!psis.empty()) {
      if (psis.size() != s.psis.size()) {
        throw ValidationError("'psis' has " + std::to_string(psis.size()) + " states, alphas give " +
                              std::to_string(s.psis.size()));
      }
      for (std::size_t i = 0; i < psis.size(); ++i) {
        if (!same_ket(psis[i], s.psis[i])) {
          throw ValidationError("psi_" + std::to_string(i) + " differs from the Fourier mix of the alphas");
        }
      }
    }
  } else {
    if (psis.empty()) throw ValidationError("identity mixing needs 'psis'");
    if (!alphas.empty()) throw ValidationError("identity mixing takes no 'alphas'");
    s.dims = dims;
    s.construction = c;
    s.params = std::move(params);
    s.mixing = Mixing::Identity;
    s.psis = std::move(psis);
  }
  s.notice = std::move(notice);
  return s;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write " + path.string());
  out << text;
  if (!out) throw ValidationError("write failed for " + path.string());
}

void save_stateset(const StateSet& s, const std::filesystem::path& path) {
  write_file(path, to_json(s).dump(1) + "\n");
}

StateSet load_stateset(const std::filesystem::path& path) {
  Json j;
  try {
    j = Json::parse(read_file(path));
  } catch (const Json::parse_error& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
  return stateset_from_json(j);
}

Json to_json(const TrivialityVerdict& v) {
  Json tail = Json::array();
  for (double x : v.singular_tail) tail.push_back(number_or_null(x));
  return Json{{"measured", v.measured.parties()},
              {"kept", v.measured.kept()},
              {"states", v.states},
              {"dim", v.dim},
              {"unknowns", v.dim * v.dim},
              {"nullspace_dim", v.nullspace_dim},
              {"hermitian_nullspace_dim", v.hermitian_nullspace_dim},
              {"identity_overlap", number_or_null(v.identity_overlap)},
              {"identity_residual", number_or_null(v.identity_residual)},
              {"spectral_gap", number_or_null(v.spectral_gap)},
              {"hermitian_gap", number_or_null(v.hermitian_gap)},
              {"sigma_max", number_or_null(v.sigma_max)},
              {"singular_tail", tail},
              {"method", solver_method_name(v.method)},
              {"verdict", verdict_name(v.verdict)},
              {"seconds",
               {{"assemble", v.assemble_seconds},
                {"solve", v.solve_seconds},
                {"hermitian", v.hermitian_seconds},
                {"wall", v.wall_seconds}}}};
}

Json to_json(const StrongestReport& r) {
  Json parties = Json::array();
  for (const auto& v : r.parties) parties.push_back(to_json(v));
  return Json{{"schema", kReportSchema},
              {"version", kSchemaVersion},
              {"set", r.set},
              {"dims", r.dims.values()},
              {"overall", verdict_name(r.overall)},
              {"complements", parties},
              {"wall_seconds", r.wall_seconds}};
}

Json to_json(const ProofTrace& t) {
  Json steps = Json::array();
  for (const auto& s : t.steps) {
    steps.push_back(
        {{"stage", s.stage}, {"rule", s.rule}, {"consumed", s.consumed}, {"produced", s.produced}});
  }
  return steps;
}

Json to_json(const ReplayResult& r, bool with_trace) {
  Json out{{"measured", r.measured.parties()},
           {"kept", r.measured.kept()},
           {"mode", replay_mode_name(r.mode)},
           {"verdict", proof_verdict_name(r.verdict)},
           {"dim", r.dim},
           {"zero_entries", r.zero_entries},
           {"off_diagonal_total", r.off_diagonal_total},
           {"diagonal_rank", r.diagonal_rank},
           {"diagonal_classes", r.diagonal_classes},
           {"pivot", r.pivot},
           {"note", r.note},
           {"steps", r.trace.steps.size()},
           {"wall_seconds", r.wall_seconds}};
  if (with_trace) out["trace"] = to_json(r.trace);
  return out;
}

}  // namespace snl
