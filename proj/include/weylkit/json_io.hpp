#ifndef WEYLKIT_JSON_IO_HPP
#define WEYLKIT_JSON_IO_HPP

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "weylkit/bergman_toeplitz.hpp"
#include "weylkit/errors.hpp"
#include "weylkit/operator_catalog.hpp"
#include "weylkit/spectral_sets.hpp"
#include "weylkit/weyl_checker.hpp"

namespace weylkit {

using Json = nlohmann::json;

// ---------------------------------------------------------------------------
// Text emission. Objects come out with keys in sorted order (nlohmann's default
// std::map storage) and doubles with 17 significant digits.

namespace detail {

inline std::string format_double(double v) {
  if (!std::isfinite(v)) throw InvalidInput("cannot serialise a non-finite number");
  if (v == 0.0) v = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline void emit_string(std::string& out, const std::string& s) {
  out += '"';
  for (unsigned char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (c < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += static_cast<char>(c);
        }
    }
  }
  out += '"';
}

inline bool is_scalar_array(const Json& j) {
  for (const auto& e : j)
    if (e.is_object() || e.is_array()) return false;
  return true;
}

inline void emit(std::string& out, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (j.type()) {
    case Json::value_t::null: out += "null"; break;
    case Json::value_t::boolean: out += j.get<bool>() ? "true" : "false"; break;
    case Json::value_t::number_integer: out += std::to_string(j.get<long long>()); break;
    case Json::value_t::number_unsigned: out += std::to_string(j.get<unsigned long long>()); break;
    case Json::value_t::number_float: out += format_double(j.get<double>()); break;
    case Json::value_t::string: emit_string(out, j.get<std::string>()); break;
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        break;
      }
      if (is_scalar_array(j)) {
        out += '[';
        bool first = true;
        for (const auto& e : j) {
          if (!first) out += ", ";
          first = false;
          emit(out, e, 0);
        }
        out += ']';
        break;
      }
      out += "[\n";
      bool first = true;
      for (const auto& e : j) {
        if (!first) out += ",\n";
        first = false;
        out += inner;
        emit(out, e, indent + 1);
      }
      out += "\n" + pad + "]";
      break;
    }
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        break;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += inner;
        emit_string(out, it.key());
        out += ": ";
        emit(out, it.value(), indent + 1);
      }
      out += "\n" + pad + "}";
      break;
    }
    default: throw InvalidInput("unsupported JSON value");
  }
}

}  // namespace detail

inline std::string to_text(const Json& j) {
  std::string out;
  detail::emit(out, j, 0);
  out += '\n';
  return out;
}

// ---------------------------------------------------------------------------
// Regions and pictures

inline Json point_json(Point p) { return Json::array({p.real(), p.imag()}); }

inline Json points_json(const std::vector<Point>& pts) {
  Json a = Json::array();
  for (auto p : pts) a.push_back(point_json(p));
  return a;
}

inline Point point_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw InvalidInput("point must be a [re, im] pair of numbers");
  const Point p(j[0].get<double>(), j[1].get<double>());
  if (!is_finite(p)) throw InvalidInput("point is not finite");
  return p;
}

inline std::vector<Point> points_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInput("expected an array of points");
  std::vector<Point> out;
  for (const auto& e : j) out.push_back(point_from_json(e));
  return out;
}

inline Json region_to_json(const Region& region) {
  return std::visit(
      Overloaded{
          [](const EmptySet&) { return Json{{"type", "points"}, {"points", Json::array()}}; },
          [](const FinitePoints& s) { return Json{{"type", "points"}, {"points", points_json(s.points)}}; },
          [](const SequenceWithLimits& s) {
            return Json{{"type", "seq"},          {"prefix", points_json(s.prefix)}, {"rule", s.rule_tag},
                        {"limits", points_json(s.limits)}, {"offset", point_json(s.offset)},
                        {"scale", point_json(s.scale)}};
          },
          [](const Circle& c) { return Json{{"type", "circle"}, {"center", point_json(c.center)}, {"radius", c.radius}}; },
          [](const Disk& d) {
            return Json{{"type", "disk"}, {"center", point_json(d.center)}, {"radius", d.radius}, {"closed", d.closed}};
          },
          [](const CurveRegion& c) {
            Json holes = Json::array();
            Json included = Json::array();
            for (const auto& h : c.holes()) {
              holes.push_back({{"id", h.component_id},
                               {"winding", h.winding},
                               {"representative", point_json(h.representative)},
                               {"cell_count", h.cell_count}});
              if (c.includes(h.component_id)) included.push_back(h.component_id);
            }
            return Json{{"type", "curve"},
                        {"samples", points_json(c.curve().samples())},
                        {"grid", c.grid},
                        {"holes", holes},
                        {"include_holes", included}};
          },
          [](const RegionUnion& u) {
            Json parts = Json::array();
            for (const auto& p : u.parts) parts.push_back(region_to_json(p));
            return Json{{"type", "union"}, {"parts", parts}};
          },
      },
      region.variant());
}

inline Region region_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string()) throw InvalidInput("region needs a \"type\"");
  const std::string type = j["type"].get<std::string>();
  auto field = [&](const char* key) -> const Json& {
    if (!j.contains(key)) throw InvalidInput(type + " region is missing \"" + key + "\"");
    return j[key];
  };
  auto number = [&](const char* key) {
    const Json& v = field(key);
    if (!v.is_number()) throw InvalidInput(std::string("\"") + key + "\" must be a number");
    return v.get<double>();
  };
  if (type == "points") {
    auto pts = points_from_json(field("points"));
    return pts.empty() ? Region::empty() : Region::points(std::move(pts));
  }
  if (type == "seq") {
    SequenceWithLimits s;
    s.prefix = points_from_json(field("prefix"));
    if (j.contains("rule")) s.rule_tag = j["rule"].get<std::string>();
    if (!s.rule_tag.empty() && s.rule_tag != "1/n") throw InvalidInput("unknown sequence rule '" + s.rule_tag + "'");
    if (j.contains("limits")) s.limits = points_from_json(j["limits"]);
    if (j.contains("offset")) s.offset = point_from_json(j["offset"]);
    if (j.contains("scale")) s.scale = point_from_json(j["scale"]);
    return Region(std::move(s));
  }
  if (type == "circle") return Region::circle(point_from_json(field("center")), number("radius"));
  if (type == "disk") {
    const bool closed = j.contains("closed") ? j["closed"].get<bool>() : true;
    return Region::disk(point_from_json(field("center")), number("radius"), closed);
  }
  if (type == "curve") {
    const int grid = j.contains("grid") ? j["grid"].get<int>() : kDefaultGrid;
    std::vector<int> ids;
    if (j.contains("include_holes")) ids = j["include_holes"].get<std::vector<int>>();
    CurveRegion c = CurveRegion::from_curve(Curve(points_from_json(field("samples"))), grid, [](int) { return false; });
    for (int id : ids) {
      if (!c.include_hole.contains(id)) throw InvalidInput("curve region names unknown hole " + std::to_string(id));
      c.include_hole[id] = true;
    }
    return Region(std::move(c));
  }
  if (type == "union") {
    std::vector<Region> parts;
    for (const auto& p : field("parts")) parts.push_back(region_from_json(p));
    return Region::union_of(std::move(parts));
  }
  throw InvalidInput("unknown region type '" + type + "'");
}

inline Json picture_to_json(const SpectralPicture& pic) {
  Json eigen = Json::array();
  for (const auto& e : pic.eigen) {
    Json alpha = e.alpha.infinite ? Json("inf") : Json(e.alpha.value);
    eigen.push_back({{"point", point_json(e.point)}, {"alpha", alpha}});
  }
  Json flags = Json::object();
  if (pic.flags.is_hypercyclic) flags["is_hypercyclic"] = *pic.flags.is_hypercyclic;
  if (pic.flags.is_supercyclic) flags["is_supercyclic"] = *pic.flags.is_supercyclic;
  if (pic.flags.is_hyponormal) flags["is_hyponormal"] = *pic.flags.is_hyponormal;
  return Json{{"label", pic.label},
              {"sigma", region_to_json(pic.sigma)},
              {"sigma_a", region_to_json(pic.sigma_a)},
              {"sigma_e", region_to_json(pic.sigma_e)},
              {"sigma_w", region_to_json(pic.sigma_w)},
              {"sigma_uw", region_to_json(pic.sigma_uw)},
              {"sigma_b", region_to_json(pic.sigma_b)},
              {"eigen", eigen},
              {"flags", flags}};
}

inline SpectralPicture picture_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidInput("picture must be a JSON object");
  SpectralPicture pic;
  if (j.contains("label")) pic.label = j["label"].get<std::string>();
  const std::pair<const char*, Region*> regions[] = {
      {"sigma", &pic.sigma},       {"sigma_a", &pic.sigma_a},   {"sigma_e", &pic.sigma_e},
      {"sigma_w", &pic.sigma_w},   {"sigma_uw", &pic.sigma_uw}, {"sigma_b", &pic.sigma_b},
  };
  for (const auto& [key, target] : regions) {
    if (!j.contains(key)) throw InvalidInput(std::string("picture is missing \"") + key + "\"");
    *target = region_from_json(j[key]);
  }
  if (j.contains("eigen")) {
    for (const auto& e : j["eigen"]) {
      if (!e.contains("point") || !e.contains("alpha")) throw InvalidInput("eigen entry needs \"point\" and \"alpha\"");
      EigenEntry entry{point_from_json(e["point"]), {}};
      const Json& a = e["alpha"];
      if (a.is_string() && a.get<std::string>() == "inf")
        entry.alpha = Multiplicity::inf();
      else if (a.is_number_integer())
        entry.alpha = Multiplicity::of(a.get<long long>());
      else
        throw InvalidInput("\"alpha\" must be an integer or \"inf\"");
      pic.eigen.push_back(entry);
    }
  }
  if (j.contains("flags")) {
    const Json& f = j["flags"];
    auto read = [&](const char* key, std::optional<bool>& target) {
      if (f.contains(key) && !f[key].is_null()) target = f[key].get<bool>();
    };
    read("is_hypercyclic", pic.flags.is_hypercyclic);
    read("is_supercyclic", pic.flags.is_supercyclic);
    read("is_hyponormal", pic.flags.is_hyponormal);
  }
  return pic;
}

// ---------------------------------------------------------------------------
// Reports

inline Json property_report_to_json(const PropertyReport& r) {
  Json witnesses = Json::object();
  for (const auto& [key, w] : r.witness) witnesses[key] = w ? point_json(*w) : Json(nullptr);
  return Json{{"weyl", r.weyl},
              {"browder", r.browder},
              {"property_w", r.property_w},
              {"uwe", r.uwe},
              {"ve", r.ve},
              {"we", r.we},
              {"a_weyl_note", r.a_weyl_note},
              {"r1_consistent", r.r1_consistent},
              {"witnesses", witnesses},
              {"consistency_violations", r.consistency_violations}};
}

inline Json hole_to_json(const Hole& h) {
  return Json{{"representative", point_json(h.representative)}, {"winding", h.winding}, {"cell_count", h.cell_count}};
}

inline Json stability_report_to_json(const StabilityReport& r) {
  Json holes = Json::array();
  for (const auto& h : r.holes) holes.push_back(hole_to_json(h));
  return Json{{"uwe", r.uwe},         {"weyl", r.weyl},         {"a_weyl", r.a_weyl},
              {"browder", r.browder}, {"a_browder", r.a_browder}, {"constant_on_boundary", r.constant_on_boundary},
              {"holes", holes}};
}

inline Json catalog_entry_to_json(const CatalogEntry& e) {
  Json j = picture_to_json(e.picture);
  j["verdicts"] = e.recorded_verdicts;
  j["notes"] = e.notes;
  return j;
}

// ---------------------------------------------------------------------------
// CSV

/// "re±imi" with 17 significant digits in each part.
inline std::string complex_cell(std::complex<double> z) {
  const double im = z.imag() == 0.0 ? 0.0 : z.imag();
  std::string s = detail::format_double(z.real());
  s += std::signbit(im) ? "-" : "+";
  s += detail::format_double(std::abs(im));
  s += 'i';
  return s;
}

inline std::string matrix_csv(const Eigen::MatrixXcd& m) {
  std::string out;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out += ',';
      out += complex_cell(m(i, j));
    }
    out += '\n';
  }
  return out;
}

inline std::string eigenvalues_csv(const std::vector<std::complex<double>>& values) {
  std::string out;
  for (auto v : values) out += detail::format_double(v.real()) + "," + detail::format_double(v.imag()) + "\n";
  return out;
}

}  // namespace weylkit

#endif  // WEYLKIT_JSON_IO_HPP
