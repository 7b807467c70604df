#include "tlscond/report.hpp"

#include "tlscond/bounds.hpp"
#include "tlscond/errors.hpp"
#include "tlscond/matrix_io.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace tlscond {

ConditionReport compute_condition(const TlsProblem& p, const TlsSolution& sol,
                                  const ObservationMap& L, const ConditionOptions& opt) {
  ConditionReport rep;
  rep.method = opt.method;
  switch (opt.method) {
    case Method::closed:
      rep.K_abs = condition_closed(sol, p, L);
      break;
    case Method::svd:
      rep.K_abs = condition_svd(sol, L);
      break;
    case Method::power: {
      const PowerResult pr = power_condition(sol, p, L, opt.power);
      rep.K_abs = pr.value;
      rep.iterations = pr.iterations;
      rep.converged = pr.converged;
      break;
    }
    case Method::oracle:
      rep.K_abs = condition_oracle(sol, p, L);
      break;
  }
  if (opt.relative) {
    rep.K_rel = condition_relative(rep.K_abs, p, sol, L);
  }
  if (opt.bounds) {
    rep.bound_Kbar = upper_bound_kbar(sol, L);
    if (L.kind() == ObservationMap::Kind::identity) {
      rep.bound_kappa = kappa_vanhuffel(sol, p);
    }
  }
  return rep;
}

Format parse_format(const std::string& name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  throw ParseError("unknown format '" + name + "'");
}

namespace {

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  out += '"';
  for (char c : s) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\t':
        out += "\\t";
        break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
  return out;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) {
    return s;
  }
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string render(const Field& f, Format format) {
  struct Visitor {
    Format format;
    std::string operator()(std::monostate) const { return format == Format::json ? "null" : "n/a"; }
    std::string operator()(double v) const {
      if (!std::isfinite(v)) return (*this)(std::monostate{});
      return format_double(v);
    }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
    std::string operator()(const std::string& v) const {
      return format == Format::json ? json_escape(v) : csv_escape(v);
    }
  };
  return std::visit(Visitor{format}, f);
}

}  // namespace

void write_records(std::ostream& out, const std::vector<Record>& records, Format format) {
  if (format == Format::json) {
    out << "[\n";
    for (std::size_t i = 0; i < records.size(); ++i) {
      out << "  {";
      for (std::size_t j = 0; j < records[i].size(); ++j) {
        if (j != 0) out << ", ";
        out << json_escape(records[i][j].first) << ": " << render(records[i][j].second, format);
      }
      out << (i + 1 < records.size() ? "},\n" : "}\n");
    }
    out << "]\n";
    return;
  }
  if (records.empty()) {
    return;
  }
  for (std::size_t j = 0; j < records.front().size(); ++j) {
    if (j != 0) out << ',';
    out << csv_escape(records.front()[j].first);
  }
  out << '\n';
  for (const auto& rec : records) {
    for (std::size_t j = 0; j < rec.size(); ++j) {
      if (j != 0) out << ',';
      out << render(rec[j].second, format);
    }
    out << '\n';
  }
}

Record to_record(const ConditionReport& r) {
  auto opt_double = [](const std::optional<double>& v) -> Field {
    return v ? Field{*v} : Field{std::monostate{}};
  };
  Record rec;
  rec.emplace_back("method", std::string(to_string(r.method)));
  rec.emplace_back("K_abs", r.K_abs);
  rec.emplace_back("K_rel", opt_double(r.K_rel));
  rec.emplace_back("iterations", r.iterations ? Field{static_cast<std::int64_t>(*r.iterations)}
                                              : Field{std::monostate{}});
  rec.emplace_back("converged", r.converged ? Field{*r.converged} : Field{std::monostate{}});
  rec.emplace_back("bound_Kbar", opt_double(r.bound_Kbar));
  rec.emplace_back("bound_kappa", opt_double(r.bound_kappa));
  return rec;
}

}  // namespace tlscond
