#include "pkit/report.hpp"

#include <nlohmann/json.hpp>

namespace pkit {

using ordered_json = nlohmann::ordered_json;

std::string Report::to_json() const {
  ordered_json j;
  j["schema"] = "pkit-report/1";
  j["command"] = command;
  j["verdict"] = verdict;
  j["exit_code"] = exit_code;
  j["engine"] = ordered_json{{"window", window}, {"cross_check", cross_check}};
  j["elapsed_ms"] = elapsed_ms;
  j["payload"] = ordered_json::parse(payload_json);
  return j.dump(2);
}

std::string Report::to_text() const {
  std::string out = command + ": " + verdict;
  ordered_json payload = ordered_json::parse(payload_json);
  if (!payload.empty()) out += "\n" + payload.dump(2);
  return out;
}

std::string witness_json(const SpacePresentation& s, const ConfigurationWitness& w) {
  ordered_json j;
  j["pattern"] = w.pattern;
  j["x"] = s.point_str(w.x_image);
  j["y"] = s.point_str(w.y_image);
  ordered_json zf;
  zf["part"] = s.parts()[w.z_family.part].name;
  zf["varying_coord"] = w.z_family.varying_coord;
  ordered_json fixed = ordered_json::array();
  for (int c = 0; c < s.parts()[w.z_family.part].arity; ++c)
    fixed.push_back(c == w.z_family.varying_coord
                        ? "n"
                        : w.z_family.fixed[static_cast<std::size_t>(c)].str());
  zf["coords"] = fixed;
  zf["start"] = w.z_family.start;
  zf["z0"] = s.point_str(w.z_family.at(0));
  j["z_family"] = zf;
  j["U"] = w.neighborhood.str(s);
  return j.dump();
}

std::string descriptor_json(const SpacePresentation& s, const SetDescriptor& d) {
  ordered_json j;
  j["set"] = d.str(s);
  j["clopen"] = d.is_clopen();
  j["open"] = d.is_open();
  j["closed"] = d.is_closed();
  return j.dump();
}

std::string validation_json(const ValidationReport& r) {
  ordered_json j;
  j["ok"] = r.ok;
  j["window"] = r.window;
  j["points"] = r.points;
  j["cross_checked"] = r.cross_checked;
  ordered_json fails = ordered_json::array();
  for (const auto& f : r.failures)
    fails.push_back(ordered_json{{"axiom", f.axiom}, {"detail", f.detail}});
  j["failures"] = fails;
  return j.dump();
}

}  // namespace pkit
