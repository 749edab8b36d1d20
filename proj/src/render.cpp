#include "grcat/render.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace grcat {

using nlohmann::ordered_json;

namespace {

std::string chain_line(const std::vector<Chain>& chain) {
  std::string out = "GR chain: ";
  for (std::size_t k = 0; k < chain.size(); ++k) {
    if (k > 0) out += " < ";
    out += chain[k].str();
  }
  return out;
}

ordered_json ids(const CategorySpec& spec, const std::vector<Index>& members) {
  ordered_json arr = ordered_json::array();
  for (Index i : members) arr.push_back(spec.id(i));
  return arr;
}

std::string joined(const CategorySpec& spec, const std::vector<Index>& members) {
  std::string out;
  for (Index i : members) {
    if (!out.empty()) out += ", ";
    out += spec.id(i);
  }
  return out;
}

}  // namespace

std::string render_measure_table(const CategorySpec& spec, const MeasureTable& table, Format f) {
  if (f == Format::json) {
    ordered_json j;
    j["objects"] = ordered_json::array();
    for (Index i = 0; i < spec.size(); ++i) {
      j["objects"].push_back(
          {{"object", spec.id(i)}, {"length", spec.theta(i)}, {"measure", table.measures[i].str()}});
    }
    j["gr_chain"] = ordered_json::array();
    for (std::size_t k = 0; k < table.gr_chain.size(); ++k) {
      j["gr_chain"].push_back(
          {{"measure", table.gr_chain[k].str()}, {"objects", ids(spec, table.blocks[k])}});
    }
    return j.dump(2) + "\n";
  }
  std::size_t width = std::string("object").size();
  for (const auto& ind : spec.indecomposables) width = std::max(width, ind.id.size());
  std::ostringstream os;
  os << std::left;
  os.width(static_cast<std::streamsize>(width + 2));
  os << "object";
  os << "length  GR measure\n";
  for (Index i = 0; i < spec.size(); ++i) {
    os.width(static_cast<std::streamsize>(width + 2));
    os << spec.id(i);
    os.width(8);
    os << spec.theta(i);
    os << table.measures[i].str() << "\n";
  }
  os << chain_line(table.gr_chain) << "\n";
  return os.str();
}

std::string render_validation(const CategorySpec& spec, const ValidationReport& report, Format f) {
  if (f == Format::json) {
    ordered_json j;
    j["name"] = spec.name;
    j["ok"] = report.ok();
    j["violations"] = ordered_json::array();
    for (const auto& v : report.violations) {
      j["violations"].push_back({{"rule", v.rule}, {"message", v.message}, {"witness", v.witness}});
    }
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  if (report.ok()) {
    os << spec.name << ": ok (" << spec.size() << " indecomposables, " << spec.inflations.size()
       << " inflations, " << spec.conflations.size() << " conflations)\n";
    return os.str();
  }
  os << spec.name << ": " << report.violations.size() << " violation(s)\n";
  for (const auto& v : report.violations) {
    os << "  [" << v.rule << "] " << v.message;
    if (!v.witness.empty()) os << " (witness: " << v.witness << ")";
    os << "\n";
  }
  return os.str();
}

std::string brauer_thrall_headline(const BrauerThrallSummary& s) {
  std::ostringstream os;
  os << s.indecomposables << (s.indecomposables == 1 ? " indecomposable" : " indecomposables")
     << "; max length " << s.max_theta << "; GR chain of length " << s.table.gr_chain.size()
     << "; " << (s.finite_type ? "finite type" : "not of finite type");
  if (s.models_infinite) os << "; window of an infinite-type category";
  return os.str();
}

std::string render_brauer_thrall(const CategorySpec& spec, const BrauerThrallSummary& s, Format f) {
  if (f == Format::json) {
    ordered_json j;
    j["name"] = spec.name;
    j["header"] = s.report.header;
    j["indecomposables"] = s.indecomposables;
    j["max_length"] = s.max_theta;
    j["gr_chain"] = ordered_json::array();
    for (std::size_t k = 0; k < s.table.gr_chain.size(); ++k) {
      j["gr_chain"].push_back(
          {{"measure", s.table.gr_chain[k].str()}, {"objects", ids(spec, s.table.blocks[k])}});
    }
    j["theta_inf"] = {{"members", ids(spec, s.theta_inf.members)},
                      {"semibrick", s.theta_inf.semibrick},
                      {"sms", to_string(s.theta_inf.sms)}};
    j["finite_type"] = s.finite_type;
    j["models_infinite"] = s.models_infinite;
    j["max_filtration_length"] =
        s.max_filtration_length ? ordered_json(*s.max_filtration_length) : ordered_json(nullptr);
    j["bounded_length_signature"] = s.bounded_length_signature;
    j["checks"] = ordered_json::parse(report_to_json(s.report))["checks"];
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "# " << s.report.header << "\n";
  os << brauer_thrall_headline(s) << "\n";
  os << chain_line(s.table.gr_chain) << "\n";
  os << "blocks:\n";
  for (std::size_t k = 0; k < s.table.gr_chain.size(); ++k) {
    os << "  " << s.table.gr_chain[k].str() << ": " << joined(spec, s.table.blocks[k]) << "\n";
  }
  os << "Theta_inf: " << joined(spec, s.theta_inf.members)
     << " (semibrick: " << (s.theta_inf.semibrick ? "true" : "false")
     << ", simple-minded system: " << to_string(s.theta_inf.sms) << ")\n";
  os << "max l_X over Theta_inf: ";
  if (s.max_filtration_length) {
    os << *s.max_filtration_length << "\n";
  } else {
    os << "unbounded in this instance (some object unreached)\n";
  }
  Report body = s.report;
  body.header.clear();
  os << report_to_table(body);
  return os.str();
}

}  // namespace grcat
