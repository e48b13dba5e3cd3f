#include "weakring/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "weakring/clean.hpp"
#include "weakring/structure.hpp"

namespace weakring {

namespace {

Json elements(const std::vector<Elem>& xs) {
  Json out = Json::array();
  for (Elem x : xs) out.push_back(x);
  return out;
}

Json conditions(const std::vector<Condition>& conds) {
  Json out = Json::object();
  for (const auto& c : conds) out[c.name] = c.value;
  return out;
}

std::string cell(const Json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_null()) return "";
  return value.dump();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string invocation_line(const Report& report) {
  std::string line = std::string(kToolName) + " " + std::string(kToolVersion);
  for (const auto& arg : report.invocation) line += " " + arg;
  return line;
}

std::string format_ms(double ms) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

}  // namespace

std::optional<Format> format_from_name(std::string_view name) {
  if (name == "text") return Format::text;
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  return std::nullopt;
}

std::vector<std::string> classification_columns(bool with_witnesses) {
  std::vector<std::string> cols = {"ring",
                                   "ideal",
                                   "members",
                                   "zero_ring",
                                   "i_clean",
                                   "weakly_clean",
                                   "uniquely_weakly_clean",
                                   "lifts_weakly",
                                   "lifts_uniquely_weakly",
                                   "lifts_centrally_weakly",
                                   "quotient_boolean",
                                   "quotient_semi_boolean",
                                   "ideal_idempotent_free",
                                   "ring_abelian"};
  if (with_witnesses) cols.push_back("witnesses");
  return cols;
}

Json classification_row(const Classification& row, const FiniteRing& ring, bool with_witnesses) {
  const auto& f = row.flags;
  Json out = Json::object();
  out["ring"] = row.ring;
  out["ideal"] = row.ideal;
  out["members"] = elements(row.ideal_members);
  out["zero_ring"] = row.zero_ring;
  out["i_clean"] = f.i_clean;
  out["weakly_clean"] = f.weakly_clean;
  out["uniquely_weakly_clean"] = f.uniquely_weakly_clean;
  out["lifts_weakly"] = f.lifts_weakly;
  out["lifts_uniquely_weakly"] = f.lifts_uniquely_weakly;
  out["lifts_centrally_weakly"] = f.lifts_centrally_weakly;
  out["quotient_boolean"] = f.quotient_boolean;
  out["quotient_semi_boolean"] = f.quotient_semi_boolean;
  out["ideal_idempotent_free"] = f.ideal_idempotent_free;
  out["ring_abelian"] = f.ring_abelian;
  if (with_witnesses) {
    Json all = Json::array();
    for (std::size_t x = 0; x < row.witnesses.size(); ++x) {
      Json entry = Json::object();
      entry["x"] = x;
      entry["label"] = ring.label(static_cast<Elem>(x));
      Json list = Json::array();
      for (const auto& w : row.witnesses[x]) {
        Json item = Json::object();
        item["e"] = w.idempotent;
        item["sign"] = w.sign == Sign::plus ? "+" : "-";
        item["w"] = w.residual;
        list.push_back(std::move(item));
      }
      entry["witnesses"] = std::move(list);
      all.push_back(std::move(entry));
    }
    out["witnesses"] = std::move(all);
  }
  return out;
}

std::vector<std::string> check_columns() {
  return {"check", "ring", "ideal", "verdict", "note", "conditions", "evidence", "evidence_ring"};
}

Json check_row(const CheckResult& result) {
  Json out = Json::object();
  out["check"] = check_info(result.id).name;
  out["ring"] = result.ring;
  out["ideal"] = result.ideal;
  out["verdict"] = to_string(result.verdict);
  out["note"] = result.note;
  out["conditions"] = conditions(result.conditions);
  out["evidence"] = elements(result.evidence);
  out["evidence_ring"] = result.evidence_ring;
  return out;
}

std::vector<std::string> hunt_columns() { return {"query", "ring", "ideal", "status"}; }

Json hunt_row(HuntQuery query, const HuntMatch& match) {
  Json out = Json::object();
  out["query"] = to_string(query);
  out["ring"] = match.ring;
  out["ideal"] = match.ideal;
  out["status"] = conditions(match.status);
  return out;
}

std::vector<std::string> show_columns() {
  return {"ring",      "order",       "zero_ring", "commutative", "labels",       "idempotents", "units",
          "nilpotents", "center",     "radical",   "quasi_regular", "ideals",    "boolean",     "semi_boolean",
          "abelian",   "local"};
}

Json show_row(const RingPtr& ring, const Limits& limits) {
  Json out = Json::object();
  out["ring"] = ring->describe();
  out["order"] = ring->order();
  out["zero_ring"] = ring->is_zero_ring();
  out["commutative"] = is_commutative(*ring);
  out["labels"] = ring->labels();
  out["idempotents"] = elements(idempotents(ring).members);
  out["units"] = elements(units(ring).members);
  out["nilpotents"] = elements(nilpotents(ring).members);
  out["center"] = elements(center(ring).members);
  out["radical"] = elements(jacobson_radical(ring).members());
  out["quasi_regular"] = elements(quasi_regular_elements(ring).members);
  if (ring->order() <= limits.max_ideal_enum_order) {
    Json ideals = Json::array();
    for (const auto& ideal : all_ideals(ring, limits)) ideals.push_back(ideal.describe());
    out["ideals"] = std::move(ideals);
  } else {
    out["ideals"] = nullptr;
  }
  out["boolean"] = is_boolean(*ring);
  out["semi_boolean"] = is_semi_boolean(*ring);
  out["abelian"] = is_abelian(ring);
  out["local"] = ring->is_zero_ring() ? Json(nullptr) : Json(is_local(ring));
  return out;
}

Json to_json(const Report& report) {
  Json out = Json::object();
  out["schema_version"] = kSchemaVersion;
  out["tool"] = kToolName;
  out["version"] = kToolVersion;
  out["command"] = report.command;
  out["invocation"] = report.invocation;
  out["rows"] = report.rows;
  out["summary"] = report.summary;
  Json footer = Json::object();
  footer["wall_time_ms"] = report.wall_time_ms ? Json(*report.wall_time_ms) : Json(nullptr);
  out["footer"] = std::move(footer);
  return out;
}

std::string render(const Report& report, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::json:
      os << to_json(report).dump(2) << "\n";
      break;

    case Format::csv: {
      for (std::size_t i = 0; i < report.columns.size(); ++i) os << (i ? "," : "") << report.columns[i];
      os << "\n";
      for (const auto& row : report.rows) {
        for (std::size_t i = 0; i < report.columns.size(); ++i) {
          os << (i ? "," : "") << csv_escape(cell(row.contains(report.columns[i]) ? row[report.columns[i]] : Json()));
        }
        os << "\n";
      }
      break;
    }

    case Format::text: {
      os << invocation_line(report) << "\n";
      if (report.rows.empty()) {
        os << "(no rows)\n";
      } else if (report.vertical) {
        std::size_t width = 0;
        for (const auto& c : report.columns) width = std::max(width, c.size());
        for (const auto& row : report.rows) {
          os << "\n";
          for (const auto& c : report.columns) {
            os << c << ":" << std::string(width - c.size() + 1, ' ') << cell(row.contains(c) ? row[c] : Json())
               << "\n";
          }
        }
      } else {
        std::vector<std::vector<std::string>> grid;
        grid.push_back(report.columns);
        for (const auto& row : report.rows) {
          std::vector<std::string> line;
          for (const auto& c : report.columns) line.push_back(cell(row.contains(c) ? row[c] : Json()));
          grid.push_back(std::move(line));
        }
        std::vector<std::size_t> widths(report.columns.size(), 0);
        for (const auto& line : grid) {
          for (std::size_t i = 0; i < line.size(); ++i) widths[i] = std::max(widths[i], line[i].size());
        }
        for (const auto& line : grid) {
          std::string out;
          for (std::size_t i = 0; i < line.size(); ++i) {
            out += line[i];
            if (i + 1 < line.size()) out += std::string(widths[i] - line[i].size() + 2, ' ');
          }
          os << out << "\n";
        }
      }
      os << "\n";
      for (const auto& [key, value] : report.summary.items()) os << key << ": " << cell(value) << "\n";
      os << "wall-time: " << (report.wall_time_ms ? format_ms(*report.wall_time_ms) + " ms" : "-") << "\n";
      break;
    }
  }
  return os.str();
}

}  // namespace weakring
