#include "qweave/session.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>

namespace qweave {

const QlanNetwork& Session::require_network() const {
  if (!network) {
    throw SessionError("no network in session; run 'build' first");
  }
  return *network;
}

const RecipeReport& Session::last_report() const {
  if (reports.empty()) {
    throw SessionError("no recipe report in session; run 'apply' first");
  }
  return reports.back();
}

Json session_to_json(const Session& session) {
  Json reports = Json::array();
  for (const RecipeReport& report : session.reports) {
    reports.push_back(report_to_json(report));
  }
  Json j;
  j["version"] = kSessionVersion;
  j["network"] = session.network ? network_to_json(*session.network)
                                 : Json(nullptr);
  j["reports"] = std::move(reports);
  return j;
}

Session session_from_json(const Json& j) {
  if (!j.contains("version") || j.at("version").get<int>() != kSessionVersion) {
    throw SessionError("unsupported session version");
  }
  Session session;
  if (!j.at("network").is_null()) {
    session.network = network_from_json(j.at("network"));
  }
  for (const Json& report : j.at("reports")) {
    session.reports.push_back(report_from_json(report));
  }
  return session;
}

std::string resolve_session_path(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("QW_SESSION"); env && *env) return env;
  return "qweave-session.json";
}

Session load_session(const std::string& path) {
  std::ifstream in(path);
  if (!in) return Session{};
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw SessionError("cannot parse session file " + path + ": " + e.what());
  }
  return session_from_json(j);
}

void save_session(const Session& session, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw SessionError("cannot write session file " + path);
  }
  out << session_to_json(session).dump(2) << '\n';
}

}  // namespace qweave
