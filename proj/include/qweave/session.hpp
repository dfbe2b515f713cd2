#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qweave/qlan.hpp"
#include "qweave/recipes.hpp"
#include "qweave/serialize.hpp"

namespace qweave {

inline constexpr int kSessionVersion = 1;

/// On-disk workflow state: the network and every recipe report produced
/// so far (the last one is "the result" for export/orbit/restrict).
struct Session {
  std::optional<QlanNetwork> network;
  std::vector<RecipeReport> reports;

  const QlanNetwork& require_network() const;
  const RecipeReport& last_report() const;
};

Json session_to_json(const Session& session);
Session session_from_json(const Json& j);

/// Resolution order: explicit path flag, QW_SESSION, ./qweave-session.json.
std::string resolve_session_path(const std::string& flag_value);

Session load_session(const std::string& path);       // missing file: empty
void save_session(const Session& session, const std::string& path);

}  // namespace qweave
