#include "tempcert/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace tempcert {

namespace {

using json = nlohmann::json;

json parse_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw parse_error("invalid JSON in " + path + ": " + e.what());
  }
  return j;
}

Complex read_complex_entry(const json& entry, const std::string& path) {
  if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
      !entry[1].is_number()) {
    throw parse_error("matrix entries must be [re,im] number pairs in " +
                      path);
  }
  return {entry[0].get<double>(), entry[1].get<double>()};
}

Matrix read_matrix(const json& flat, int rows, int cols,
                   const std::string& path) {
  if (!flat.is_array() ||
      flat.size() != static_cast<std::size_t>(rows) * cols) {
    throw parse_error("expected " + std::to_string(rows * cols) +
                      " row-major [re,im] entries in " + path);
  }
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      m(i, j) = read_complex_entry(flat[static_cast<std::size_t>(i) * cols + j],
                                   path);
    }
  }
  return m;
}

void append_matrix(std::string& out, const Matrix& m) {
  out += '[';
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (i != 0 || j != 0) out += ',';
      out += '[';
      out += format_sig17(std::real(m(i, j)));
      out += ',';
      out += format_sig17(std::imag(m(i, j)));
      out += ']';
    }
  }
  out += ']';
}

std::string csv_pair(int first, int second) {
  return std::to_string(first) + "-" + std::to_string(second);
}

struct SvgCanvas {
  std::string body;
  int width = 640;
  int height = 440;
  double x0 = 70, x1 = 600, y0 = 380, y1 = 40;  // plot frame in pixels

  double px(double t) const { return x0 + t * (x1 - x0); }
  double py(double t) const { return y0 + t * (y1 - y0); }

  void line(double xa, double ya, double xb, double yb,
            const std::string& style) {
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" "
                  "style=\"%s\"/>\n",
                  xa, ya, xb, yb, style.c_str());
    body += buf;
  }
  void circle(double x, double y, double r, const std::string& fill) {
    char buf[192];
    std::snprintf(buf, sizeof(buf),
                  "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"%.2f\" fill=\"%s\"/>\n",
                  x, y, r, fill.c_str());
    body += buf;
  }
  void text(double x, double y, const std::string& s,
            const std::string& extra = "") {
    char buf[320];
    std::snprintf(buf, sizeof(buf),
                  "<text x=\"%.2f\" y=\"%.2f\" font-family=\"sans-serif\" "
                  "font-size=\"12\" %s>%s</text>\n",
                  x, y, extra.c_str(), s.c_str());
    body += buf;
  }
  void frame() {
    line(x0, y0, x1, y0, "stroke:#333;stroke-width:1");
    line(x0, y0, x0, y1, "stroke:#333;stroke-width:1");
  }
  std::string render() const {
    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                      std::to_string(width) + "\" height=\"" +
                      std::to_string(height) + "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out += body;
    out += "</svg>\n";
    return out;
  }
};

std::string fmt_short(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4g", x);
  return buf;
}

}  // namespace

std::string format_sig17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

void save_quartet(const std::string& path, const Quartet& q) {
  std::string out = "{\"d\":" + std::to_string(q.d) +
                    ",\"D\":" + std::to_string(q.D) + ",\"observables\":[";
  for (int i = 1; i <= 4; ++i) {
    if (i > 1) out += ',';
    append_matrix(out, q.a(i).unitary);
  }
  out += "]}\n";
  write_text_file(path, out);
}

Quartet load_quartet(const std::string& path, const ToleranceConfig& tol) {
  const json j = parse_json_file(path);
  if (!j.is_object() || !j.contains("d") || !j.contains("D") ||
      !j.contains("observables")) {
    throw parse_error("quartet file " + path +
                      " must contain keys d, D, observables");
  }
  if (!j["d"].is_number_integer() || !j["D"].is_number_integer()) {
    throw parse_error("d and D must be integers in " + path);
  }
  const int d = j["d"].get<int>();
  const int D = j["D"].get<int>();
  if (d < 2 || D < d) {
    throw parse_error("need d >= 2 and D >= d in " + path);
  }
  const json& obs = j["observables"];
  if (!obs.is_array() || obs.size() != 4) {
    throw parse_error("observables must be an array of 4 matrices in " +
                      path);
  }
  Quartet q;
  q.d = d;
  q.D = D;
  for (int i = 0; i < 4; ++i) {
    Matrix u = read_matrix(obs[static_cast<std::size_t>(i)], D, D, path);
    try {
      q.obs[static_cast<std::size_t>(i)] =
          RootOfUnityObservable::from_unitary(u, d, tol);
    } catch (const validation_error& e) {
      throw parse_error("observable " + std::to_string(i + 1) + " in " +
                        path + " is invalid: " + e.what());
    }
  }
  q.validate(tol);
  return q;
}

PreparedState load_state(const std::string& spec, int D,
                         const ToleranceConfig& tol) {
  if (spec == "mixed") return PreparedState::maximally_mixed(D);
  const json j = parse_json_file(spec);
  if (!j.is_object() || !j.contains("D") || !j.contains("density")) {
    throw parse_error("state file " + spec +
                      " must contain keys D and density");
  }
  const int file_d = j["D"].is_number_integer() ? j["D"].get<int>() : -1;
  if (file_d != D) {
    throw parse_error("state dimension in " + spec + " is " +
                      std::to_string(file_d) + ", expected " +
                      std::to_string(D));
  }
  Matrix rho = read_matrix(j["density"], D, D, spec);
  try {
    return PreparedState::from_density(rho, tol);
  } catch (const validation_error& e) {
    throw parse_error("density matrix in " + spec + " is invalid: " +
                      e.what());
  }
}

std::string entropy_csv(const EntropyTable& table) {
  std::string out = "d,pair,entropy_bits,method\n";
  auto emit = [&out](const std::vector<EntropyRow>& rows,
                     const std::string& method) {
    for (const auto& r : rows) {
      out += std::to_string(r.d) + "," + csv_pair(r.first, r.second) + "," +
             format_sig17(r.entropy_bits) + "," + method + "\n";
    }
  };
  emit(table.closed_rows, "closed_form");
  emit(table.overlap_rows, "overlap");
  emit(table.extra_rows, "overlap");
  return out;
}

std::string robustness_csv(const std::vector<RobustnessSample>& samples) {
  std::string out =
      "d,delta,trial,epsilon,defect_a1,defect_a2,defect_pair34,defect_pair12,"
      "bound_tight,bound_loose,bound_sharp\n";
  for (const auto& s : samples) {
    const RobustnessReport& r = s.report;
    out += std::to_string(s.d) + "," + format_sig17(s.delta) + "," +
           std::to_string(s.trial) + "," + format_sig17(r.epsilon) + "," +
           format_sig17(r.defect_a1) + "," + format_sig17(r.defect_a2) + "," +
           format_sig17(r.defect_pair34) + "," +
           format_sig17(r.defect_pair12) + "," +
           format_sig17(r.bound_tight) + "," + format_sig17(r.bound_loose) +
           "," + format_sig17(r.bound_sharp) + "\n";
  }
  return out;
}

void write_entropy_csv(const std::string& path, const EntropyTable& table) {
  write_text_file(path, entropy_csv(table));
}

void write_robustness_csv(const std::string& path,
                          const std::vector<RobustnessSample>& samples) {
  write_text_file(path, robustness_csv(samples));
}

void write_entropy_svg(const std::string& path, const EntropyTable& table) {
  std::vector<std::pair<int, double>> points;
  for (const auto& r : table.closed_rows) {
    if (r.first == 1 && r.second == 2) points.push_back({r.d, r.entropy_bits});
  }
  std::sort(points.begin(), points.end());
  SvgCanvas svg;
  svg.frame();
  svg.text(250, 20, "Certified entropy vs outcome count");
  svg.text(300, 410, "d");
  svg.text(10, 210, "bits");
  if (!points.empty()) {
    const int dmin = points.front().first;
    const int dmax = std::max(points.back().first, dmin + 1);
    double hmax = 0.0;
    for (const auto& p : points) hmax = std::max(hmax, p.second);
    hmax = std::max(hmax, 1.0) * 1.1;
    auto tx = [&](int d) {
      return svg.px(static_cast<double>(d - dmin) / (dmax - dmin));
    };
    auto ty = [&](double h) { return svg.py(h / hmax); };
    for (int d = dmin; d <= dmax; ++d) {
      svg.line(tx(d), svg.y0, tx(d), svg.y0 + 4, "stroke:#333;stroke-width:1");
      svg.text(tx(d) - 4, svg.y0 + 18, std::to_string(d));
    }
    for (int g = 0; g <= 4; ++g) {
      const double h = hmax * g / 4.0;
      svg.line(svg.x0 - 4, ty(h), svg.x0, ty(h), "stroke:#333;stroke-width:1");
      svg.text(svg.x0 - 44, ty(h) + 4, fmt_short(h));
    }
    for (std::size_t i = 1; i < points.size(); ++i) {
      svg.line(tx(points[i - 1].first), ty(points[i - 1].second),
               tx(points[i].first), ty(points[i].second),
               "stroke:#1f77b4;stroke-width:2;stroke-dasharray:5,3");
    }
    for (const auto& p : points) {
      svg.circle(tx(p.first), ty(p.second), 3.5, "#1f77b4");
    }
  }
  write_text_file(path, svg.render());
}

void write_robustness_svg(const std::string& path,
                          const std::vector<RobustnessSample>& samples) {
  struct Pt {
    double bound, defect;
  };
  std::vector<Pt> pts;
  for (const auto& s : samples) {
    const RobustnessReport& r = s.report;
    pts.push_back({r.bound_tight, r.defect_a1});
    pts.push_back({r.bound_tight, r.defect_a2});
    pts.push_back({r.bound_loose, r.defect_pair34});
    pts.push_back({r.bound_loose, r.defect_pair12});
  }
  SvgCanvas svg;
  svg.frame();
  svg.text(200, 20, "Closeness defects vs violation-deficit bounds");
  svg.text(250, 410, "bound (log10)");
  svg.text(10, 210, "defect");
  double lo = 0.0, hi = 1.0;
  bool have = false;
  for (const auto& p : pts) {
    if (p.bound <= 0.0 || p.defect <= 0.0) continue;
    const double lb = std::log10(p.bound);
    const double ld = std::log10(p.defect);
    if (!have) {
      lo = std::min(lb, ld);
      hi = std::max(lb, ld);
      have = true;
    } else {
      lo = std::min(lo, std::min(lb, ld));
      hi = std::max(hi, std::max(lb, ld));
    }
  }
  if (!have) {
    lo = -4.0;
    hi = 1.0;
  }
  lo = std::floor(lo) - 0.2;
  hi = std::ceil(hi) + 0.2;
  auto tx = [&](double v) { return svg.px((std::log10(v) - lo) / (hi - lo)); };
  auto ty = [&](double v) { return svg.py((std::log10(v) - lo) / (hi - lo)); };
  for (int g = static_cast<int>(std::ceil(lo)); g <= hi; ++g) {
    const double v = std::pow(10.0, g);
    svg.line(tx(v), svg.y0, tx(v), svg.y0 + 4, "stroke:#333;stroke-width:1");
    svg.text(tx(v) - 12, svg.y0 + 18, "1e" + std::to_string(g));
    svg.line(svg.x0 - 4, ty(v), svg.x0, ty(v), "stroke:#333;stroke-width:1");
    svg.text(svg.x0 - 44, ty(v) + 4, "1e" + std::to_string(g));
  }
  svg.line(tx(std::pow(10.0, lo + 0.2)), ty(std::pow(10.0, lo + 0.2)),
           tx(std::pow(10.0, hi - 0.2)), ty(std::pow(10.0, hi - 0.2)),
           "stroke:#888;stroke-width:1;stroke-dasharray:4,4");
  svg.text(svg.x1 - 90, ty(std::pow(10.0, hi - 0.2)) - 8, "defect = bound",
           "fill=\"#888\"");
  for (const auto& p : pts) {
    if (p.bound <= 0.0 || p.defect <= 0.0) continue;
    svg.circle(tx(p.bound), ty(p.defect), 2.0, "#d62728");
  }
  write_text_file(path, svg.render());
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw validation_error("cannot write file: " + path);
  out << content;
  if (!out) throw validation_error("failed writing file: " + path);
}

}  // namespace tempcert
