#include "ttk/serialize.hpp"

#include <charconv>
#include <sstream>

#include "ttk/errors.hpp"

namespace ttk {

namespace {

template <typename T>
T get_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ValidationError(std::string("missing JSON key '") + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ValidationError(std::string("JSON key '") + key + "' has the wrong type");
  }
}

Json fibers_json(const Fibers& f) { return Json::array({f.a, f.b}); }

Fibers fibers_from(const Json& j) {
  const auto pair = get_field<std::vector<Int>>(j, "fibers");
  if (pair.size() != 2) throw ValidationError("fibers must have two entries");
  return {pair[0], pair[1]};
}

std::optional<Int> optional_int(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return get_field<Int>(j, key);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  parts.push_back(current);
  return parts;
}

Int parse_int(const std::string& text) {
  Int value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) throw ValidationError("malformed integer '" + text + "'");
  return value;
}

std::pair<std::string, std::string> split_assignment(const std::string& item) {
  const auto eq = item.find('=');
  if (eq == std::string::npos) throw ValidationError("expected name=value, got '" + item + "'");
  return {item.substr(0, eq), item.substr(eq + 1)};
}

}  // namespace

Json to_json(const TtkParams& k) {
  return Json{{"p", k.p}, {"q", k.q}, {"r", k.r}, {"m", k.m}, {"n", k.n}};
}

TtkParams params_from_json(const Json& j) {
  return {get_field<Int>(j, "p"), get_field<Int>(j, "q"), get_field<Int>(j, "r"),
          get_field<Int>(j, "m"), get_field<Int>(j, "n")};
}

Json to_json(const SfMatch& match) {
  Json j{{"type", match_name(match)}};
  if (const auto* h = std::get_if<HyperSf>(&match)) {
    j["fibers"] = fibers_json(h->fibers);
  } else if (const auto* mid = std::get_if<MiddleSf>(&match)) {
    j["beta_mid"] = mid->beta_mid;
    j["fibers"] = fibers_json(mid->fibers);
  } else if (const auto* e = std::get_if<EndSf>(&match)) {
    j["r_end"] = e->r_end;
    j["fibers"] = fibers_json(e->fibers);
  }
  return j;
}

SfMatch match_from_json(const Json& j) {
  const auto type = get_field<std::string>(j, "type");
  if (type == "primitive") return PrimitiveMatch{};
  if (type == "hyper") return HyperSf{fibers_from(j)};
  if (type == "middle") return MiddleSf{get_field<Int>(j, "beta_mid"), fibers_from(j)};
  if (type == "end") return EndSf{get_field<Int>(j, "r_end"), fibers_from(j)};
  throw ValidationError("unknown match type '" + type + "'");
}

Json to_json(const SfClassification& c) {
  Json matches = Json::array();
  for (const auto& m : c.matches) matches.push_back(to_json(m));
  const auto& n = c.normalized;
  return Json{{"normalized", {{"p", n.p}, {"q_hat", n.q_hat}, {"r_bar", n.r_bar}, {"q_hat_inv", n.q_hat_inv}}},
              {"primitive", c.is_primitive()},
              {"matches", matches}};
}

SfClassification classification_from_json(const Json& j) {
  SfClassification c;
  const Json& n = j.at("normalized");
  c.normalized = {get_field<Int>(n, "p"), get_field<Int>(n, "q_hat"), get_field<Int>(n, "r_bar"),
                  get_field<Int>(n, "q_hat_inv")};
  for (const auto& m : j.at("matches")) c.matches.push_back(match_from_json(m));
  return c;
}

Json to_json(const PsfReport& report) {
  const auto& f = report.flags;
  return Json{{"params", to_json(report.params)},
              {"inside", to_json(report.inside)},
              {"outside", to_json(report.outside)},
              {"slope", report.surface_slope},
              {"flags",
               {{"is_torus_degenerate", f.is_torus_degenerate},
                {"is_doubly_primitive", f.is_doubly_primitive},
                {"is_primitive_sf", f.is_primitive_sf},
                {"is_doubly_sf", f.is_doubly_sf}}}};
}

PsfReport psf_report_from_json(const Json& j) {
  PsfReport report;
  report.params = params_from_json(j.at("params"));
  report.inside = classification_from_json(j.at("inside"));
  report.outside = classification_from_json(j.at("outside"));
  report.surface_slope = get_field<Int>(j, "slope");
  const Json& f = j.at("flags");
  report.flags = {get_field<bool>(f, "is_torus_degenerate"), get_field<bool>(f, "is_doubly_primitive"),
                  get_field<bool>(f, "is_primitive_sf"), get_field<bool>(f, "is_doubly_sf")};
  return report;
}

Json mu_to_json(const MultiplicityResult& triple) {
  if (triple.is_connected_sum()) return "connected_sum";
  return Json::array({triple.mu[0], triple.mu[1], triple.mu[2]});
}

MultiplicityResult mu_from_json(const Json& j, Int slope) {
  MultiplicityResult result;
  result.slope = slope;
  if (j.is_string()) {
    if (j.get<std::string>() != "connected_sum") throw ValidationError("mu must be an array or \"connected_sum\"");
    result.kind = MultiplicityResult::Kind::ConnectedSum;
    return result;
  }
  if (!j.is_array() || j.size() != 3) throw ValidationError("mu must have three entries");
  for (std::size_t i = 0; i < 3; ++i) result.mu[i] = j[i].get<Int>();
  return result;
}

Json to_json(const NonTorusCertificate& cert) {
  return Json{{"delta", cert.delta ? Json(*cert.delta) : Json(nullptr)},
              {"chi", cert.chi ? Json(*cert.chi) : Json(nullptr)},
              {"moser_excluded", cert.moser_excluded},
              {"certified", cert.certified}};
}

NonTorusCertificate certificate_from_json(const Json& j) {
  NonTorusCertificate cert;
  cert.delta = optional_int(j, "delta");
  cert.chi = optional_int(j, "chi");
  cert.moser_excluded = get_field<bool>(j, "moser_excluded");
  cert.certified = get_field<bool>(j, "certified");
  return cert;
}

Json to_json(const KnotRecord& rec) {
  Json fparams = Json::object();
  for (const auto& fp : rec.family_params) fparams[fp.name] = fp.value;
  return Json{{"family", rec.family},
              {"family_params", fparams},
              {"p", rec.params.p},
              {"q", rec.params.q},
              {"r", rec.params.r},
              {"m", rec.params.m},
              {"n", rec.params.n},
              {"slope", rec.slope},
              {"mu", mu_to_json(rec.triple)},
              {"certificates", to_json(rec.certificate)}};
}

KnotRecord knot_record_from_json(const Json& j) {
  KnotRecord rec;
  rec.family = get_field<int>(j, "family");
  for (const auto& [name, value] : j.at("family_params").items()) {
    rec.family_params.push_back({name, value.get<Int>()});
  }
  rec.params = params_from_json(j);
  rec.slope = get_field<Int>(j, "slope");
  rec.triple = mu_from_json(j.at("mu"), rec.slope);
  rec.certificate = certificate_from_json(j.at("certificates"));
  return rec;
}

const std::vector<std::string>& tsv_columns() {
  static const std::vector<std::string> columns{"family", "family_params", "p", "q", "r", "m",
                                                "n", "slope", "mu", "certificates"};
  return columns;
}

std::string tsv_header() {
  std::string out;
  for (const auto& c : tsv_columns()) {
    if (!out.empty()) out += '\t';
    out += c;
  }
  return out;
}

std::string to_tsv_row(const KnotRecord& rec) {
  std::ostringstream out;
  out << rec.family << '\t';
  if (rec.family_params.empty()) out << '-';
  for (std::size_t i = 0; i < rec.family_params.size(); ++i) {
    out << (i ? ";" : "") << rec.family_params[i].name << '=' << rec.family_params[i].value;
  }
  const auto& k = rec.params;
  out << '\t' << k.p << '\t' << k.q << '\t' << k.r << '\t' << k.m << '\t' << k.n << '\t' << rec.slope << '\t';
  if (rec.triple.is_connected_sum()) {
    out << "connected_sum";
  } else {
    out << rec.triple.mu[0] << ',' << rec.triple.mu[1] << ',' << rec.triple.mu[2];
  }
  const auto& c = rec.certificate;
  out << "\tdelta=";
  if (c.delta) out << *c.delta; else out << "NA";
  out << ";chi=";
  if (c.chi) out << *c.chi; else out << "NA";
  out << ";moser_excluded=" << c.moser_excluded << ";certified=" << c.certified;
  return out.str();
}

KnotRecord knot_record_from_tsv(const std::string& row) {
  const auto cells = split(row, '\t');
  if (cells.size() != tsv_columns().size()) throw ValidationError("TSV row must have 10 columns");
  KnotRecord rec;
  rec.family = static_cast<int>(parse_int(cells[0]));
  if (cells[1] != "-") {
    for (const auto& item : split(cells[1], ';')) {
      auto [name, value] = split_assignment(item);
      rec.family_params.push_back({name, parse_int(value)});
    }
  }
  rec.params = {parse_int(cells[2]), parse_int(cells[3]), parse_int(cells[4]), parse_int(cells[5]),
                parse_int(cells[6])};
  rec.slope = parse_int(cells[7]);
  rec.triple.slope = rec.slope;
  if (cells[8] == "connected_sum") {
    rec.triple.kind = MultiplicityResult::Kind::ConnectedSum;
  } else {
    const auto mu = split(cells[8], ',');
    if (mu.size() != 3) throw ValidationError("mu must have three entries");
    for (std::size_t i = 0; i < 3; ++i) rec.triple.mu[i] = parse_int(mu[i]);
  }
  for (const auto& item : split(cells[9], ';')) {
    auto [name, value] = split_assignment(item);
    const std::optional<Int> v = value == "NA" ? std::nullopt : std::optional<Int>(parse_int(value));
    if (name == "delta") rec.certificate.delta = v;
    else if (name == "chi") rec.certificate.chi = v;
    else if (name == "moser_excluded") rec.certificate.moser_excluded = v.value_or(0) != 0;
    else if (name == "certified") rec.certificate.certified = v.value_or(0) != 0;
    else throw ValidationError("unknown certificate field '" + name + "'");
  }
  return rec;
}

std::string to_text(const KnotRecord& rec) {
  std::ostringstream out;
  out << "family " << rec.family;
  for (const auto& fp : rec.family_params) out << ' ' << fp.name << '=' << fp.value;
  out << " K(" << format_params(rec.params) << ") slope " << rec.slope << " mu ";
  if (rec.triple.is_connected_sum()) {
    out << "connected_sum";
  } else {
    out << '(' << rec.triple.mu[0] << ',' << rec.triple.mu[1] << ',' << rec.triple.mu[2] << ')';
  }
  out << (rec.certificate.certified ? " certified" : " uncertified");
  return out.str();
}

}  // namespace ttk
