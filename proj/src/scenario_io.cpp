#include "squant/scenario_io.hpp"

#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "squant/errors.hpp"
#include "squant/units.hpp"

namespace squant {

namespace {

using nlohmann::json;

constexpr double kDegToRad = std::numbers::pi / 180.0;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ValidationError(path, what);
}

const json& require(const json& j, const char* key, const std::string& path) {
  auto it = j.find(key);
  if (it == j.end()) fail(path + "/" + key, "missing required field");
  return *it;
}

double num(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  return j.get<double>();
}

double req_num(const json& j, const char* key, const std::string& path) {
  return num(require(j, key, path), path + "/" + key);
}

double opt_num(const json& j, const char* key, double fallback, const std::string& path) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return fallback;
  return num(*it, path + "/" + key);
}

int opt_int(const json& j, const char* key, int fallback, const std::string& path) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return fallback;
  if (!it->is_number_integer()) fail(path + "/" + key, "expected an integer");
  return it->get<int>();
}

std::string req_str(const json& j, const char* key, const std::string& path) {
  const json& v = require(j, key, path);
  if (!v.is_string()) fail(path + "/" + key, "expected a string");
  return v.get<std::string>();
}

Antenna parse_antenna(const json& j, const std::string& path) {
  Antenna a;
  if (j.is_null()) return a;
  if (!j.is_object()) fail(path, "expected an object");
  const std::string mode = j.value("mode", std::string("omni"));
  if (mode == "omni") {
    a.mode = AntennaMode::omni;
  } else if (mode == "sector") {
    a.mode = AntennaMode::sector;
    a.boresight_rad = opt_num(j, "boresight_deg", 0.0, path) * kDegToRad;
    a.beamwidth_rad = opt_num(j, "beamwidth_deg", 60.0, path) * kDegToRad;
    a.sidelobe_gain = opt_num(j, "sidelobe_gain", 0.0, path);
    if (a.beamwidth_rad <= 0.0) fail(path + "/beamwidth_deg", "beamwidth must be positive");
    if (a.sidelobe_gain < 0.0 || a.sidelobe_gain > 1.0)
      fail(path + "/sidelobe_gain", "sidelobe gain must be in [0, 1]");
  } else {
    fail(path + "/mode", "unknown antenna mode '" + mode + "'");
  }
  return a;
}

json antenna_to_json(const Antenna& a) {
  if (a.mode == AntennaMode::omni) return json{{"mode", "omni"}};
  return json{{"mode", "sector"},
              {"boresight_deg", a.boresight_rad / kDegToRad},
              {"beamwidth_deg", a.beamwidth_rad / kDegToRad},
              {"sidelobe_gain", a.sidelobe_gain}};
}

}  // namespace

Scenario scenario_from_json_text(const std::string& text, const std::string& path_for_errors) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError("", path_for_errors + ": " + e.what());
  }
  if (!root.is_object()) fail("", "scenario must be a JSON object");
  if (opt_int(root, "schema_version", -1, "") != 1)
    fail("/schema_version", "unsupported schema version (expected 1)");

  Scenario sc;
  if (auto it = root.find("bounds"); it != root.end()) {
    sc.bounds.p_max_w = dbm_to_watt(opt_num(*it, "p_max_dbm", 30.0, "/bounds"));
    sc.bounds.p_min_w = dbm_to_watt(opt_num(*it, "p_min_dbm", -200.0, "/bounds"));
  }
  if (auto it = root.find("propagation"); it != root.end()) {
    sc.prop.alpha = opt_num(*it, "alpha", 3.5, "/propagation");
    const std::string form = it->value("bound_form", std::string("inverse"));
    if (form == "inverse")
      sc.bound_form = BoundForm::inverse;
    else if (form == "attenuated")
      sc.bound_form = BoundForm::attenuated;
    else
      fail("/propagation/bound_form", "unknown bound form '" + form + "'");
  }
  if (auto it = root.find("ambient_noise_dbm"); it != root.end() && !it->is_null())
    sc.ambient_noise_w = dbm_to_watt(num(*it, "/ambient_noise_dbm"));

  if (auto it = root.find("grid"); it != root.end()) {
    sc.grid.side_m = opt_num(*it, "side_m", 100.0, "/grid");
    sc.grid.cols = opt_int(*it, "cols", 26, "/grid");
    sc.grid.rows = opt_int(*it, "rows", 26, "/grid");
    sc.grid.origin = {opt_num(*it, "origin_x_m", 0.0, "/grid"),
                      opt_num(*it, "origin_y_m", 0.0, "/grid")};
  }
  if (auto it = root.find("frame"); it != root.end()) {
    sc.frame.quanta = opt_int(*it, "quanta", 1, "/frame");
    sc.frame.quantum_s = opt_num(*it, "quantum_s", 10.0, "/frame");
    if (auto bit = it->find("bands"); bit != it->end()) {
      if (!bit->is_array() || bit->empty()) fail("/frame/bands", "expected a non-empty array");
      sc.frame.bands.clear();
      for (std::size_t i = 0; i < bit->size(); ++i) {
        const std::string bp = "/frame/bands/" + std::to_string(i);
        sc.frame.bands.push_back({opt_num((*bit)[i], "center_mhz", 600.0, bp) * 1e6,
                                  opt_num((*bit)[i], "width_mhz", 6.0, bp) * 1e6});
      }
    }
  }

  const double default_noise_dbm = opt_num(root, "default_receiver_noise_dbm", -106.0, "");

  if (auto it = root.find("networks"); it != root.end()) {
    if (!it->is_array()) fail("/networks", "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const json& nj = (*it)[i];
      const std::string np = "/networks/" + std::to_string(i);
      Network n;
      n.id = req_str(nj, "id", np);
      const std::string role = nj.value("role", std::string("secondary"));
      if (role == "primary")
        n.role = NetworkRole::primary;
      else if (role == "secondary")
        n.role = NetworkRole::secondary;
      else
        fail(np + "/role", "unknown role '" + role + "'");
      n.range_m = opt_num(nj, "range_m", 0.0, np);

      const json& tj = require(nj, "transmitter", np);
      const std::string tp = np + "/transmitter";
      n.transmitter.id = req_str(tj, "id", tp);
      n.transmitter.location = {req_num(tj, "x_m", tp), req_num(tj, "y_m", tp)};
      n.transmitter.tx_power_w = dbm_to_watt(req_num(tj, "tx_power_dbm", tp));
      if (auto ait = tj.find("antenna"); ait != tj.end())
        n.transmitter.antenna = parse_antenna(*ait, tp + "/antenna");

      if (auto rit = nj.find("receivers"); rit != nj.end()) {
        if (!rit->is_array()) fail(np + "/receivers", "expected an array");
        for (std::size_t k = 0; k < rit->size(); ++k) {
          const json& rj = (*rit)[k];
          const std::string rp = np + "/receivers/" + std::to_string(k);
          ReceiverSpec r;
          r.id = req_str(rj, "id", rp);
          r.location = {req_num(rj, "x_m", rp), req_num(rj, "y_m", rp)};
          r.beta_min = db_to_linear(opt_num(rj, "beta_min_db", 3.0, rp));
          r.noise_w = dbm_to_watt(opt_num(rj, "noise_dbm", default_noise_dbm, rp));
          r.served_by = rj.value("served_by", n.transmitter.id);
          if (auto ait = rj.find("antenna"); ait != rj.end())
            r.antenna = parse_antenna(*ait, rp + "/antenna");
          if (auto eit = rj.find("experienced_sinr_db"); eit != rj.end() && !eit->is_null())
            r.experienced_sinr = db_to_linear(num(*eit, rp + "/experienced_sinr_db"));
          n.receivers.push_back(std::move(r));
        }
      }
      if (auto bit = nj.find("bands"); bit != nj.end())
        for (const auto& b : *bit) n.bands.push_back(b.get<int>());
      if (auto qit = nj.find("quanta"); qit != nj.end())
        for (const auto& q : *qit) n.quanta.push_back(q.get<int>());
      sc.networks.push_back(std::move(n));
    }
  }

  sc.validate();
  return sc;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path, "cannot open for reading");
  std::stringstream ss;
  ss << in.rdbuf();
  return scenario_from_json_text(ss.str(), path);
}

std::string scenario_to_json_text(const Scenario& sc) {
  json root;
  root["schema_version"] = 1;
  root["bounds"] = {{"p_max_dbm", watt_to_dbm(sc.bounds.p_max_w)},
                    {"p_min_dbm", watt_to_dbm(sc.bounds.p_min_w)}};
  root["propagation"] = {
      {"alpha", sc.prop.alpha},
      {"bound_form", sc.bound_form == BoundForm::inverse ? "inverse" : "attenuated"}};
  if (sc.ambient_noise_w > 0.0) root["ambient_noise_dbm"] = watt_to_dbm(sc.ambient_noise_w);
  root["grid"] = {{"side_m", sc.grid.side_m},
                  {"cols", sc.grid.cols},
                  {"rows", sc.grid.rows},
                  {"origin_x_m", sc.grid.origin.x},
                  {"origin_y_m", sc.grid.origin.y}};
  json bands = json::array();
  for (const auto& b : sc.frame.bands)
    bands.push_back({{"center_mhz", b.center_hz / 1e6}, {"width_mhz", b.width_hz / 1e6}});
  root["frame"] = {{"bands", bands}, {"quanta", sc.frame.quanta}, {"quantum_s", sc.frame.quantum_s}};

  json nets = json::array();
  for (const auto& n : sc.networks) {
    json nj;
    nj["id"] = n.id;
    nj["role"] = n.role == NetworkRole::primary ? "primary" : "secondary";
    if (n.range_m > 0.0) nj["range_m"] = n.range_m;
    nj["transmitter"] = {{"id", n.transmitter.id},
                         {"x_m", n.transmitter.location.x},
                         {"y_m", n.transmitter.location.y},
                         {"tx_power_dbm", watt_to_dbm(n.transmitter.tx_power_w)},
                         {"antenna", antenna_to_json(n.transmitter.antenna)}};
    json rxs = json::array();
    for (const auto& r : n.receivers) {
      json rj = {{"id", r.id},
                 {"x_m", r.location.x},
                 {"y_m", r.location.y},
                 {"beta_min_db", linear_to_db(r.beta_min)},
                 {"noise_dbm", watt_to_dbm(r.noise_w)},
                 {"served_by", r.served_by},
                 {"antenna", antenna_to_json(r.antenna)}};
      if (r.experienced_sinr) rj["experienced_sinr_db"] = linear_to_db(*r.experienced_sinr);
      rxs.push_back(rj);
    }
    if (!rxs.empty()) nj["receivers"] = rxs;
    if (!n.bands.empty()) nj["bands"] = n.bands;
    if (!n.quanta.empty()) nj["quanta"] = n.quanta;
    nets.push_back(nj);
  }
  root["networks"] = nets;
  return root.dump(2) + "\n";
}

void save_scenario(const Scenario& sc, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError(path, "cannot open for writing");
  out << scenario_to_json_text(sc);
  if (!out) throw IoError(path, "write failed");
}

}  // namespace squant
