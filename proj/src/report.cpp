#include "hahnroot/report.hpp"

#include <sstream>
#include <stdexcept>

#include "hahnroot/expr.hpp"

namespace hahnroot {

using nlohmann::json;

namespace {

json header(const char* verb, const Poly& f) {
  return {{"schema", kSchemaVersion}, {"verb", verb}, {"p", f.ctx()->p()}, {"poly", format_polynomial(f)}};
}

/// Small integers as numbers, anything larger as a decimal string.
json integer(const mpz_class& n) {
  if (n.fits_ulong_p()) return n.get_ui();
  return n.get_str();
}

json accumulation_json(const Accumulation& a) {
  json sols = json::array();
  for (const auto& s : a.solutions) sols.push_back({{"zeta", s.zeta.str()}, {"expands", s.expands}});
  return {{"r", exponent_str(a.r_star)},
          {"J", a.J},
          {"equation", a.equation.str("z")},
          {"solution_field", a.solution_field->description()},
          {"solutions", sols},
          {"detector", a.detector()}};
}

json point_json(const Breakpoint& b) {
  return {{"r", b.r ? json(exponent_str(*b.r)) : json("inf")}, {"J", b.J}};
}

}  // namespace

json roots_report(const Poly& f, unsigned depth) {
  const ExpansionTree tree = expand_roots(f, depth);
  json out = header("roots", f);
  out["depth"] = depth;
  out["field"] = tree.field->description();
  json branches = json::array();
  for (const auto& chain : terminal_chains(tree.root)) {
    const BranchNode& n = *chain.back();
    const json series = to_json(n.prefix());
    json b{{"terms", series["terms"]},
           {"precision", series["precision"]},
           {"text", n.prefix().str()},
           {"multiplicity", n.terminal_multiplicity()},
           {"status", to_string(n.status)},
           {"residual_valuation", n.residual_valuation ? json(exponent_str(*n.residual_valuation)) : json(nullptr)},
           {"accumulation", n.accumulation ? accumulation_json(*n.accumulation) : json(nullptr)}};
    branches.push_back(std::move(b));
  }
  out["branches"] = std::move(branches);
  return out;
}

json addpol_report(const Poly& f) {
  const AdditivePolynomial P = addpol(f);
  json out = header("addpol", f);
  out["addpol"] = format_polynomial(P.to_poly());
  json coeffs = json::array();
  for (const auto& [i, c] : P.coeffs()) {
    mpz_class d;
    mpz_ui_pow_ui(d.get_mpz_t(), P.p(), i);
    coeffs.push_back({{"i", i}, {"degree", integer(d)}, {"coeff", format_coefficient(c)}});
  }
  out["coefficients"] = std::move(coeffs);
  return out;
}

json intersections_report(const Poly& f) {
  const AdditivePolynomial P = addpol(f);
  json out = header("intersections", f);
  out["addpol"] = format_polynomial(P.to_poly());
  json lines = json::array();
  for (const auto& l : envelope_lines(P)) {
    lines.push_back({{"i", l.i}, {"intercept", exponent_str(l.intercept)}, {"slope", integer(l.slope)}});
  }
  out["lines"] = std::move(lines);
  json pts = json::array();
  for (const auto& b : intersection_points(P)) pts.push_back(point_json(b));
  out["points"] = std::move(pts);
  return out;
}

json bounds_report(const Poly& f, MaxExpMode mode) {
  const AdditivePolynomial P = addpol(f);
  const MaxExpBound chosen = maxexp(f, mode);
  const MaxExpBound sharp = maxexp_sharp(P);
  json out = header("bounds", f);
  out["maxram"] = integer(maxram(P));
  out["maxexp"] = {{"mode", mode == MaxExpMode::paper ? "paper" : "sharp"},
                   {"base", chosen.base.get_str()},
                   {"value", chosen.value ? json(chosen.value->get_str()) : json(nullptr)}};
  out["maxexp_sharp"] = sharp.value ? sharp.value->get_str() : sharp.base.get_str() + "!";
  out["maxexp_sharp_base"] = sharp.base.get_str();
  out["order_bound"] = order_type_bound(P).label;
  return out;
}

json order_bound_report(const Poly& f) {
  const OrderTypeBound b = order_type_bound(f);
  json out = header("order-bound", f);
  out["m"] = b.m;
  out["order_bound"] = b.label;
  return out;
}

json error_report(const std::string& kind, const std::string& message, std::optional<std::size_t> position) {
  return {{"schema", kSchemaVersion},
          {"error", {{"kind", kind}, {"message", message}, {"position", position ? json(*position) : json(nullptr)}}}};
}

MaxExpMode parse_mode(const std::string& mode) {
  if (mode == "paper") return MaxExpMode::paper;
  if (mode == "sharp") return MaxExpMode::sharp;
  throw std::invalid_argument("unknown mode '" + mode + "' (expected paper or sharp)");
}

std::string render_text(const json& r) {
  std::ostringstream os;
  if (r.contains("error")) {
    os << "error: " << r["error"]["message"].get<std::string>() << "\n";
    return os.str();
  }
  const std::string verb = r.at("verb");
  os << "f = " << r.at("poly").get<std::string>() << " over F_" << r.at("p").get<unsigned>() << "(t)\n";
  if (verb == "roots") {
    os << "field: " << r["field"].get<std::string>() << "\n";
    int k = 0;
    for (const auto& b : r["branches"]) {
      os << "branch " << ++k << " [x" << b["multiplicity"].get<unsigned>() << ", " << b["status"].get<std::string>()
         << "]: " << b["text"].get<std::string>() << "\n";
      if (!b["accumulation"].is_null()) {
        const auto& a = b["accumulation"];
        os << "  accumulates at " << a["r"].get<std::string>() << " (" << a["detector"].get<std::string>()
           << "), J = " << a["J"].dump() << ", " << a["equation"].get<std::string>() << " = 0 over "
           << a["solution_field"].get<std::string>() << "\n";
        for (const auto& s : a["solutions"]) {
          os << "    " << s["zeta"].get<std::string>() << (s["expands"].get<bool>() ? "  expands" : "") << "\n";
        }
      }
    }
  } else if (verb == "addpol") {
    os << "addpol: " << r["addpol"].get<std::string>() << "\n";
  } else if (verb == "intersections") {
    os << "addpol: " << r["addpol"].get<std::string>() << "\n";
    for (const auto& pt : r["points"]) {
      os << "point " << pt["r"].get<std::string>() << "  J = " << pt["J"].dump() << "\n";
    }
  } else if (verb == "bounds") {
    os << "maxram: " << r["maxram"].dump() << "\n";
    const auto& m = r["maxexp"];
    os << "maxexp (" << m["mode"].get<std::string>() << "): "
       << (m["value"].is_null() ? m["base"].get<std::string>() + "!" : m["value"].get<std::string>()) << "\n";
    os << "maxexp sharp: " << r["maxexp_sharp"].get<std::string>() << "\n";
    os << "order bound: " << r["order_bound"].get<std::string>() << "\n";
  } else if (verb == "order-bound") {
    os << "order bound: " << r["order_bound"].get<std::string>() << "\n";
  }
  return os.str();
}

}  // namespace hahnroot
