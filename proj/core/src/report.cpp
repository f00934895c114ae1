#include "ttw4d/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace ttw4d {

using nlohmann::ordered_json;

ReportFormat parse_format(const std::string& text) {
  if (text == "json") return ReportFormat::json;
  if (text == "csv") return ReportFormat::csv;
  throw std::invalid_argument("unknown report format: " + text);
}

namespace {

std::string decimal(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

ordered_json params_json(const SuiteReport& r) {
  ordered_json p;
  p["k"] = ordered_json::array();
  for (const auto& q : parse_rational_list(r.k)) p["k"].push_back(q.str());
  p["a"] = ordered_json::array();
  for (const auto& q : parse_rational_list(r.a)) p["a"].push_back(q.str());
  p["omega"] = r.omega;
  return p;
}

ordered_json to_json(const SuiteReport& r) {
  ordered_json j;
  j["suite"] = r.suite;
  j["params"] = params_json(r);
  j["conventions"] = r.conventions;
  j["cases"] = ordered_json::array();
  for (const auto& c : r.cases) {
    ordered_json cj;
    cj["identity"] = c.identity;
    cj["state"] = c.state;
    cj["point"] = c.point;
    cj["residual"] = c.residual;
    cj["pass"] = c.pass;
    cj["conventions"] = c.conventions;
    cj["diagnostic"] = c.diagnostic;
    j["cases"].push_back(std::move(cj));
  }
  j["max_residual"] = r.max_residual;
  j["pass"] = r.pass;
  j["wall_ms"] = r.wall_ms;
  return j;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "," : "") + parts[i];
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

const char* kCsvHeader = "suite,k,a,omega,identity,state,point,residual,pass,conventions,diagnostic";

void csv_rows(const SuiteReport& r, std::ostringstream& os) {
  for (const auto& c : r.cases)
    os << r.suite << ',' << csv_field(r.k) << ',' << csv_field(r.a) << ',' << r.omega << ','
       << csv_field(c.identity) << ',' << csv_field(c.state) << ',' << csv_field(c.point) << ','
       << decimal(c.residual) << ',' << (c.pass ? "true" : "false") << ','
       << csv_field(c.conventions) << ',' << (c.diagnostic ? "true" : "false") << '\n';
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        cur += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(std::move(cur));
  return out;
}

}  // namespace

std::string emit_report(const SuiteReport& r, ReportFormat format) {
  if (format == ReportFormat::json) return to_json(r).dump(2) + "\n";
  std::ostringstream os;
  os << kCsvHeader << '\n';
  csv_rows(r, os);
  return os.str();
}

std::string emit_reports(const std::vector<SuiteReport>& reports, ReportFormat format) {
  if (reports.size() == 1) return emit_report(reports.front(), format);
  if (format == ReportFormat::json) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    return arr.dump(2) + "\n";
  }
  std::ostringstream os;
  os << kCsvHeader << '\n';
  for (const auto& r : reports) csv_rows(r, os);
  return os.str();
}

SuiteReport parse_report_json(const std::string& text) {
  const ordered_json j = ordered_json::parse(text);
  SuiteReport r;
  r.suite = j.at("suite").get<std::string>();
  std::vector<std::string> k, a;
  for (const auto& x : j.at("params").at("k")) k.push_back(x.get<std::string>());
  for (const auto& x : j.at("params").at("a")) a.push_back(x.get<std::string>());
  r.k = join(k);
  r.a = join(a);
  r.omega = j.at("params").at("omega").get<std::string>();
  r.conventions = j.at("conventions").get<std::vector<std::string>>();
  for (const auto& cj : j.at("cases")) {
    CaseRecord c;
    c.identity = cj.at("identity").get<std::string>();
    c.state = cj.at("state").get<std::string>();
    c.point = cj.at("point").get<std::string>();
    c.residual = cj.at("residual").get<double>();
    c.pass = cj.at("pass").get<bool>();
    c.conventions = cj.at("conventions").get<std::string>();
    c.diagnostic = cj.at("diagnostic").get<bool>();
    r.cases.push_back(std::move(c));
  }
  r.max_residual = j.at("max_residual").get<double>();
  r.pass = j.at("pass").get<bool>();
  r.wall_ms = j.at("wall_ms").get<double>();
  return r;
}

std::vector<CaseRecord> parse_report_csv(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line) || line != kCsvHeader)
    throw std::invalid_argument("parse_report_csv: missing header");
  std::vector<CaseRecord> out;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto f = split_csv_line(line);
    if (f.size() != 11) throw std::invalid_argument("parse_report_csv: bad row: " + line);
    CaseRecord c;
    c.identity = f[4];
    c.state = f[5];
    c.point = f[6];
    c.residual = std::stod(f[7]);
    c.pass = f[8] == "true";
    c.conventions = f[9];
    c.diagnostic = f[10] == "true";
    out.push_back(std::move(c));
  }
  return out;
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open " + path + " for writing");
  os << bytes;
  if (!os) throw std::runtime_error("write failed: " + path);
}

}  // namespace ttw4d
