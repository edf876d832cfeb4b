#include "wirtwidth/census.hpp"

#include <atomic>
#include <condition_variable>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>

#include <boost/archive/iterators/base64_from_binary.hpp>
#include <boost/archive/iterators/binary_from_base64.hpp>
#include <boost/archive/iterators/transform_width.hpp>
#include <json.hpp>

#include "wirtwidth/coloring.hpp"
#include "wirtwidth/gauss.hpp"
#include "wirtwidth/lift.hpp"

namespace wirtwidth {

namespace {

const std::vector<std::string> kColumns = {"name",  "crossings", "strands",    "mu_upper", "mu_exact",
                                           "width_upper", "width_exact", "seeds_used", "nodes", "ms",
                                           "witness", "gauss", "status"};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        fields.back() += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.emplace_back();
    } else {
      fields.back() += ch;
    }
  }
  return fields;
}

std::string strip_cr(std::string s) {
  if (!s.empty() && s.back() == '\r') s.pop_back();
  return s;
}

struct InputRow {
  std::string name;
  std::string code;
  bool has_tab = true;
};

std::vector<InputRow> read_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CensusIoError("cannot read " + path.string());
  std::vector<InputRow> rows;
  std::string line;
  while (std::getline(in, line)) {
    line = strip_cr(line);
    if (line.find_first_not_of(" \t") == std::string::npos || line.front() == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos)
      rows.push_back({line, "", false});
    else
      rows.push_back({line.substr(0, tab), line.substr(tab + 1), true});
  }
  if (in.bad()) throw CensusIoError("error reading " + path.string());
  return rows;
}

bool is_exact_strategy(Strategy s, int crossings, int threshold) {
  return s == Strategy::Exact || (s == Strategy::Auto && crossings <= threshold);
}

nlohmann::json to_json(const CensusRecord& r, bool timing) {
  nlohmann::json j;
  j["name"] = r.name;
  j["gauss"] = r.gauss;
  j["status"] = r.status_text();
  if (r.status == RowStatus::Error) {
    j["detail"] = r.detail;
    return j;
  }
  j["crossings"] = r.crossings;
  j["strands"] = r.strands;
  j["mu_upper"] = r.report.mu_upper;
  j["mu_exact"] = r.report.mu_exact;
  j["width_upper"] = r.report.width_upper;
  j["width_exact"] = r.report.width_exact;
  j["seeds_used"] = r.report.seeds_used();
  j["nodes"] = r.report.nodes_explored;
  j["ms"] = timing ? r.report.elapsed.count() / 1000.0 : 0.0;
  j["witness"] = to_text(r.report.witness);
  return j;
}

}  // namespace

Strategy parse_strategy(std::string_view s) {
  if (s == "exact") return Strategy::Exact;
  if (s == "heuristic") return Strategy::Heuristic;
  if (s == "auto") return Strategy::Auto;
  throw std::invalid_argument("unknown strategy '" + std::string(s) + "'");
}

const char* to_string(Strategy s) noexcept {
  switch (s) {
    case Strategy::Exact: return "exact";
    case Strategy::Heuristic: return "heuristic";
    case Strategy::Auto: return "auto";
  }
  return "auto";
}

std::string CensusRecord::status_text() const {
  switch (status) {
    case RowStatus::Exact: return "exact";
    case RowStatus::HeuristicOnly: return "heuristic";
    case RowStatus::Error: return "error:" + error;
  }
  return "error:Unknown";
}

CensusRecord compute_record(const std::string& name, const std::string& code, const CensusOptions& options) {
  CensusRecord r;
  r.name = name;
  r.gauss = code;
  r.report.diagram_id = name;
  try {
    const GaussCode g = parse_gauss(code);
    r.gauss = serialize_gauss(g, " ");
    const Diagram d = build_diagram(g);
    r.crossings = d.n_crossings();
    r.strands = d.n_strands();
    if (is_exact_strategy(options.strategy, d.n_crossings(), options.auto_threshold))
      r.report = exact_width(d, options.exact_budget);
    else
      r.report = lazy_seed_heuristic(d, options.seeds, options.heuristic_budget);
    r.report.diagram_id = name;
    r.status = r.report.mu_exact && r.report.width_exact ? RowStatus::Exact : RowStatus::HeuristicOnly;
  } catch (const GaussError& e) {
    r.status = RowStatus::Error;
    r.error = to_string(e.code());
    r.detail = e.what();
  } catch (const std::exception& e) {
    r.status = RowStatus::Error;
    r.error = "Internal";
    r.detail = e.what();
  }
  return r;
}

std::string csv_header() {
  std::string h;
  for (const auto& c : kColumns) h += (h.empty() ? "" : ",") + c;
  return h;
}

std::string csv_row(const CensusRecord& r, bool timing) {
  std::ostringstream out;
  out << csv_field(r.name) << ',';
  if (r.status == RowStatus::Error) {
    out << ",,,,,,,,,,";
  } else {
    const WidthReport& w = r.report;
    out << r.crossings << ',' << r.strands << ',' << w.mu_upper << ',' << (w.mu_exact ? "true" : "false") << ','
        << w.width_upper << ',' << (w.width_exact ? "true" : "false") << ',' << w.seeds_used() << ','
        << w.nodes_explored << ',' << std::fixed << std::setprecision(3)
        << (timing ? w.elapsed.count() / 1000.0 : 0.0) << ',' << base64_encode(to_text(w.witness)) << ',';
  }
  out << csv_field(r.gauss) << ',' << csv_field(r.status_text());
  return out.str();
}

CensusSummary run_census(const std::filesystem::path& input, const std::filesystem::path& output,
                         const CensusOptions& options) {
  const std::vector<InputRow> rows = read_input(input);

  std::ofstream out(output);
  if (!out) throw CensusIoError("cannot write " + output.string());
  out << csv_header() << '\n';

  const std::size_t n = rows.size();
  std::vector<std::optional<CensusRecord>> done(n);
  std::mutex mu;
  std::condition_variable ready;
  std::atomic<std::size_t> next{0};

  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < n;) {
      CensusRecord rec;
      if (!rows[i].has_tab) {
        rec.name = rows[i].name;
        rec.error = "MalformedRow";
        rec.detail = "expected name<TAB>gauss code";
      } else {
        rec = compute_record(rows[i].name, rows[i].code, options);
      }
      {
        std::lock_guard lock(mu);
        done[i] = std::move(rec);
      }
      ready.notify_all();
    }
  };

  const int workers = std::max(1, options.workers);
  std::vector<std::jthread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(work);

  CensusSummary summary;
  nlohmann::json json_rows = nlohmann::json::array();
  for (std::size_t i = 0; i < n; ++i) {
    CensusRecord rec;
    {
      std::unique_lock lock(mu);
      ready.wait(lock, [&] { return done[i].has_value(); });
      rec = std::move(*done[i]);
      done[i].reset();
    }
    out << csv_row(rec, options.timing) << '\n';
    ++summary.rows;
    switch (rec.status) {
      case RowStatus::Exact: ++summary.exact; break;
      case RowStatus::HeuristicOnly: ++summary.heuristic_only; break;
      case RowStatus::Error: ++summary.errors; break;
    }
    if (rec.status != RowStatus::Error) {
      ++summary.by_width[rec.report.width_upper];
      if (rec.status == RowStatus::HeuristicOnly && rec.report.width_upper == 32) summary.stuck_at_32.push_back(rec.name);
    }
    if (options.json_path) json_rows.push_back(to_json(rec, options.timing));
  }
  pool.clear();

  out.flush();
  if (!out) throw CensusIoError("error writing " + output.string());

  if (options.json_path) {
    std::ofstream js(*options.json_path);
    if (!js) throw CensusIoError("cannot write " + options.json_path->string());
    nlohmann::json by_width = nlohmann::json::object();
    for (auto [w, c] : summary.by_width) by_width[std::to_string(w)] = c;
    nlohmann::json doc = {{"rows", json_rows},
                          {"summary",
                           {{"rows", summary.rows},
                            {"exact", summary.exact},
                            {"heuristic", summary.heuristic_only},
                            {"errors", summary.errors},
                            {"by_width", by_width},
                            {"stuck_at_32", summary.stuck_at_32}}}};
    js << doc.dump(2) << '\n';
    if (!js) throw CensusIoError("error writing " + options.json_path->string());
  }
  return summary;
}

std::vector<RowVerdict> verify_certificates(const std::filesystem::path& results) {
  std::ifstream in(results);
  if (!in) throw CensusIoError("cannot read " + results.string());
  std::string line;
  if (!std::getline(in, line) || strip_cr(line) != csv_header())
    throw CensusIoError(results.string() + ": missing or unexpected header");

  std::vector<RowVerdict> verdicts;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_cr(line);
    if (line.empty()) continue;
    const auto f = split_csv(line);
    RowVerdict v{line_no, f.empty() ? "" : f[0], false, ""};
    if (f.size() != kColumns.size()) {
      v.reason = "expected " + std::to_string(kColumns.size()) + " fields, found " + std::to_string(f.size());
      verdicts.push_back(v);
      continue;
    }
    if (f[12].starts_with("error:")) continue;

    try {
      const Diagram d = build_diagram(parse_gauss(f[11]));
      if (std::stoi(f[1]) != d.n_crossings() || std::stoi(f[2]) != d.n_strands())
        throw std::runtime_error("crossing or strand count mismatch");
      const long width = std::stol(f[5]);
      const int mu = std::stoi(f[3]);
      const int seeds = std::stoi(f[7]);

      const EventLog log = parse_event_log(base64_decode(f[10]));
      replay_and_verify(d, log);
      const long total = attached_sequence(d, log).total;
      if (total != width)
        throw std::runtime_error("width mismatch: recorded " + f[5] + ", witness total " + std::to_string(total));
      if (log.seed_count() != seeds) throw std::runtime_error("seeds_used mismatch");
      const long swept = sweep_width(build_profile(d, log));
      if (swept != total) throw std::runtime_error("lift sweep " + std::to_string(swept) + " != " + std::to_string(total));
      if (width < 2 || width % 2 != 0) throw std::runtime_error("width is not an even integer >= 2");
      if (mu < 1 || mu > seeds) throw std::runtime_error("mu_upper outside [1, seeds_used]");
      if (f[4] == "true") {
        const auto w = wirtinger_number(d, mu);
        if (!w || w->k != mu) throw std::runtime_error("mu_upper is not the Wirtinger number");
      }
      v.pass = true;
    } catch (const ColoringError& e) {
      v.reason = e.what();
    } catch (const std::exception& e) {
      v.reason = e.what();
    }
    verdicts.push_back(v);
  }
  return verdicts;
}

std::string base64_encode(std::string_view bytes) {
  using namespace boost::archive::iterators;
  using It = base64_from_binary<transform_width<std::string_view::const_iterator, 6, 8>>;
  std::string out(It(bytes.begin()), It(bytes.end()));
  out.append((3 - bytes.size() % 3) % 3, '=');
  return out;
}

std::string base64_decode(std::string_view text) {
  using namespace boost::archive::iterators;
  using It = transform_width<binary_from_base64<std::string::const_iterator>, 8, 6>;
  if (text.size() % 4 != 0) throw std::invalid_argument("base64 length is not a multiple of 4");
  std::string s(text);
  std::size_t pad = 0;
  while (!s.empty() && s.back() == '=' && pad < 2) {
    s.pop_back();
    ++pad;
  }
  if (s.find('=') != std::string::npos) throw std::invalid_argument("misplaced base64 padding");
  try {
    std::string out(It(s.begin()), It(s.end()));
    if (out.size() > s.size() * 6 / 8) out.resize(s.size() * 6 / 8);
    return out;
  } catch (const std::exception&) {
    throw std::invalid_argument("invalid base64 character");
  }
}

}  // namespace wirtwidth
