#include "balfair/io.hpp"

#include <fstream>
#include <sstream>

#include "balfair/errors.hpp"

namespace balfair {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidArgument(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int int_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw InvalidArgument(std::string(what) + " must be an integer");
  return j.get<int>();
}

bool bool_from_json(const Json& j, const char* what) {
  if (!j.is_boolean()) throw InvalidArgument(std::string(what) + " must be a boolean");
  return j.get<bool>();
}

std::string bundle_text(const Bundle& b) {
  std::string s = "[";
  for (std::size_t t = 0; t < b.size(); ++t) s += (t ? "," : "") + std::to_string(b[t] + 1);
  return s + "]";
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InvalidArgument(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write " + path);
  out << text;
  if (!out) throw InvalidArgument("write failed: " + path);
}

Json rational_to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw InvalidArgument(e.what());
    }
  }
  throw InvalidArgument("rational must be a string \"p/q\" or an integer, got " + j.dump());
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(rational_to_json(v(i)));
  return out;
}

Vector vector_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidArgument("expected an array of rationals");
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(i) = rational_from_json(j[i]);
  return v;
}

Json instance_to_json(const Instance& inst) {
  Json rows = Json::array();
  for (int i = 0; i < inst.num_agents(); ++i) rows.push_back(vector_to_json(inst.row(i).transpose()));
  return Json{{"n", inst.num_agents()}, {"m", inst.num_goods()}, {"valuations", rows}};
}

Instance instance_from_json(const Json& j, bool allow_indivisible) {
  const int n = int_from_json(field(j, "n"), "n");
  const int m = int_from_json(field(j, "m"), "m");
  const Json& rows = field(j, "valuations");
  if (n < 1 || m < 1) throw InvalidArgument("n and m must be positive");
  if (!rows.is_array() || static_cast<int>(rows.size()) != n) {
    throw InvalidArgument("valuations must have n = " + std::to_string(n) + " rows");
  }
  Matrix v(n, m);
  for (int i = 0; i < n; ++i) {
    if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != m) {
      throw InvalidArgument("row " + std::to_string(i + 1) + " must have m = " + std::to_string(m) + " entries");
    }
    for (int jj = 0; jj < m; ++jj) v(i, jj) = rational_from_json(rows[i][jj]);
  }
  Instance inst(std::move(v));
  if (!allow_indivisible && !inst.divisible()) throw InvalidArgument("m must be divisible by n");
  return inst;
}

Json allocation_to_json(const Allocation& alloc) {
  Json out = Json::array();
  for (int i = 0; i < alloc.num_agents(); ++i) {
    Json b = Json::array();
    for (int g : alloc.bundle(i)) b.push_back(g + 1);
    out.push_back(b);
  }
  return out;
}

Allocation allocation_from_json(const Json& j) {
  const Json& a = j.is_object() ? field(j, "allocation") : j;
  if (!a.is_array()) throw InvalidArgument("allocation must be a list of bundles");
  std::vector<Bundle> bundles;
  for (const auto& b : a) {
    if (!b.is_array()) throw InvalidArgument("each bundle must be a list of good indices");
    Bundle bundle;
    for (const auto& g : b) {
      const int idx = int_from_json(g, "good index");
      if (idx < 1) throw InvalidArgument("good indices are 1-based");
      bundle.push_back(idx - 1);
    }
    bundles.push_back(std::move(bundle));
  }
  return Allocation(std::move(bundles));
}

Vector prices_from_json(const Json& j) {
  if (j.is_array()) return vector_from_json(j);
  if (j.is_object() && j.contains("prices")) return vector_from_json(j.at("prices"));
  if (j.is_object() && j.contains("certificate")) return vector_from_json(field(j.at("certificate"), "p"));
  throw InvalidArgument("prices must be a list or an object with \"prices\" or \"certificate\".\"p\"");
}

Json certificate_to_json(const Certificate& cert) {
  Json out{{"alpha", vector_to_json(cert.alpha)}};
  if (cert.gamma) out["gamma"] = rational_to_json(*cert.gamma);
  out["q"] = vector_to_json(cert.q);
  out["p"] = vector_to_json(cert.p);
  return out;
}

Certificate certificate_from_json(const Json& j) {
  Certificate c;
  c.alpha = vector_from_json(field(j, "alpha"));
  if (j.contains("gamma")) c.gamma = rational_from_json(j.at("gamma"));
  c.q = vector_from_json(field(j, "q"));
  c.p = vector_from_json(field(j, "p"));
  return c;
}

Json result_to_json(const ResultFile& result) {
  return Json{{"allocation", allocation_to_json(result.allocation)},
              {"certificate", certificate_to_json(result.certificate)},
              {"checks",
               {{"ef1", result.checks.ef1}, {"fpo", result.checks.fpo}, {"balanced", result.checks.balanced}}}};
}

ResultFile result_from_json(const Json& j) {
  ResultFile r{allocation_from_json(j), certificate_from_json(field(j, "certificate")), {}};
  const Json& checks = field(j, "checks");
  r.checks.ef1 = bool_from_json(field(checks, "ef1"), "ef1");
  r.checks.fpo = bool_from_json(field(checks, "fpo"), "fpo");
  r.checks.balanced = bool_from_json(field(checks, "balanced"), "balanced");
  return r;
}

Json reduce_map_to_json(const ReducedInstance& reduced) {
  Json dummies = Json::array();
  for (int d : reduced.dummies) dummies.push_back(d + 1);
  return Json{{"original_m", reduced.original_goods}, {"dummies", dummies}};
}

Json report_to_json(const EnumerationReport& report) {
  Json records = Json::array();
  for (std::size_t t = 0; t < report.records.size(); ++t) {
    const auto& r = report.records[t];
    records.push_back(Json{{"index", t + 1},
                           {"allocation", allocation_to_json(r.allocation)},
                           {"values", vector_to_json(r.values)},
                           {"ef1", r.ef1},
                           {"po", r.po},
                           {"fpo", r.fpo},
                           {"nash", rational_to_json(r.nash)},
                           {"utilitarian", rational_to_json(r.utilitarian)}});
  }
  return Json{{"count", report.records.size()}, {"records", records}};
}

std::string report_to_csv(const EnumerationReport& report) {
  std::ostringstream os;
  const int n = report.records.empty() ? 0 : report.records.front().allocation.num_agents();
  os << "index,allocation";
  for (int i = 1; i <= n; ++i) os << ",v_" << i;
  os << ",ef1,po,fpo,nash,utilitarian\n";
  for (std::size_t t = 0; t < report.records.size(); ++t) {
    const auto& r = report.records[t];
    os << t + 1 << ",\"[";
    for (int i = 0; i < n; ++i) os << (i ? "," : "") << bundle_text(r.allocation.bundle(i));
    os << "]\"";
    for (int i = 0; i < n; ++i) os << ',' << r.values(i);
    os << ',' << r.ef1 << ',' << r.po << ',' << r.fpo << ',' << r.nash << ',' << r.utilitarian << '\n';
  }
  return os.str();
}

}  // namespace balfair
