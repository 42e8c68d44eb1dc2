#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

#include "hahnroot/envelope.hpp"
#include "hahnroot/expand.hpp"

namespace hahnroot {

inline constexpr const char* kSchemaVersion = "hahnroot-json/1";

/// Reports shared by the command-line tool and the Python module. Every
/// report carries "schema", "verb", "p" and "poly".
nlohmann::json roots_report(const Poly& f, unsigned depth);
nlohmann::json addpol_report(const Poly& f);
nlohmann::json intersections_report(const Poly& f);
nlohmann::json bounds_report(const Poly& f, MaxExpMode mode);
nlohmann::json order_bound_report(const Poly& f);

/// {"schema": ..., "error": {"kind", "message", "position"}}.
nlohmann::json error_report(const std::string& kind, const std::string& message,
                            std::optional<std::size_t> position = std::nullopt);

/// Plain-text rendering of any of the reports above.
std::string render_text(const nlohmann::json& report);

MaxExpMode parse_mode(const std::string& mode);

}  // namespace hahnroot
