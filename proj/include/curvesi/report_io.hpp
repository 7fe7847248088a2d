#pragma once

#include <ostream>
#include <span>
#include <string>

#include "curvesi/search.hpp"
#include "json.hpp"

namespace curvesi {

inline nlohmann::ordered_json report_to_json(const EquivalenceClassReport& r) {
  nlohmann::ordered_json members = nlohmann::ordered_json::array();
  for (const auto& m : r.members) {
    nlohmann::ordered_json jm;
    jm["word"] = m.key.str();
    jm["si_torus"] = m.si_torus ? nlohmann::ordered_json(*m.si_torus) : nlohmann::ordered_json(nullptr);
    jm["si_pants"] = m.si_pants ? nlohmann::ordered_json(*m.si_pants) : nlohmann::ordered_json(nullptr);
    members.push_back(std::move(jm));
  }
  nlohmann::ordered_json j;
  j["polynomial"] = r.polynomial.str();
  j["sign_split"] = r.sign_split;
  j["members"] = std::move(members);
  j["si_differs_torus"] = r.si_differs_torus;
  j["si_differs_pants"] = r.si_differs_pants;
  return j;
}

/// Writes a JSON array, one report object per line.
inline void write_reports_json(std::ostream& out, std::span<const EquivalenceClassReport> reports) {
  out << "[";
  for (std::size_t i = 0; i < reports.size(); ++i) out << (i ? ",\n " : "\n ") << report_to_json(reports[i]).dump();
  out << (reports.empty() ? "]\n" : "\n]\n");
}

inline std::string optional_str(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : std::string(); }

inline void write_csv_header(std::ostream& out) { out << "word,length,si_torus,si_pants,fingerprint1,fingerprint2\n"; }

inline void write_csv_row(std::ostream& out, const ClassRecord& m) {
  out << m.key.str() << ',' << m.length << ',' << optional_str(m.si_torus) << ',' << optional_str(m.si_pants) << ','
      << m.fingerprint.first.str() << ',' << m.fingerprint.second.str() << '\n';
}

inline void write_members_csv(std::ostream& out, std::span<const EquivalenceClassReport> reports) {
  write_csv_header(out);
  for (const auto& r : reports)
    for (const auto& m : r.members) write_csv_row(out, m);
}

}  // namespace curvesi
