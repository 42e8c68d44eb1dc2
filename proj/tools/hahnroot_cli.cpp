// hahnroot: roots, additive multiples and bounds for f in F_p(t)[X].
#include <iostream>
#include <random>

#include "CLI11.hpp"
#include "hahnroot/corpus.hpp"
#include "hahnroot/expr.hpp"
#include "hahnroot/report.hpp"

using namespace hahnroot;
using nlohmann::json;

namespace {

struct Options {
  std::uint32_t p = 0;
  std::string poly;
  std::optional<std::uint64_t> seed;
  unsigned depth = 10;
  std::string format = "json";
  std::string mode = "sharp";
};

void emit(const json& report, const std::string& format, std::ostream& os) {
  if (format == "text") {
    os << render_text(report);
  } else {
    os << report.dump(2) << "\n";
  }
}

Poly input_polynomial(const Options& o) {
  if (!o.poly.empty()) return parse_polynomial(o.poly, o.p);
  if (!o.seed) throw std::invalid_argument("either --poly or --seed is required");
  if (!is_prime(o.p)) throw std::invalid_argument("p = " + std::to_string(o.p) + " is not prime");
  std::mt19937_64 rng(*o.seed);
  return random_polynomial(o.p, 4, rng);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hahn series expansion of roots of polynomials over F_p(t)"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--p", o.p, "characteristic")->required();
    sub->add_option("--poly", o.poly, "polynomial in X with coefficients in F_p(t), e.g. \"X^3 - X^2 - 1/t\"");
    sub->add_option("--seed", o.seed, "generate a random polynomial of degree <= 4 instead of --poly");
    sub->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  };
  auto* roots = app.add_subcommand("roots", "expand every root up to --depth terms");
  common(roots);
  roots->add_option("--depth", o.depth, "number of terms")->check(CLI::Range(1u, 100000u));
  auto* add = app.add_subcommand("addpol", "additive polynomial divisible by f");
  common(add);
  auto* inter = app.add_subcommand("intersections", "points of intersection of addpol(f)");
  common(inter);
  auto* bounds = app.add_subcommand("bounds", "maxram, maxexp and the order type bound");
  common(bounds);
  bounds->add_option("--mode", o.mode, "maxexp bound: paper or sharp")->check(CLI::IsMember({"paper", "sharp"}));
  auto* order = app.add_subcommand("order-bound", "order type bound omega^m");
  common(order);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    emit(error_report("usage", e.what()), o.format == "text" ? "text" : "json", std::cerr);
    return 2;
  }

  try {
    const Poly f = input_polynomial(o);
    json report;
    if (roots->parsed()) {
      report = roots_report(f, o.depth);
    } else if (add->parsed()) {
      report = addpol_report(f);
    } else if (inter->parsed()) {
      report = intersections_report(f);
    } else if (bounds->parsed()) {
      report = bounds_report(f, parse_mode(o.mode));
    } else {
      report = order_bound_report(f);
    }
    emit(report, o.format, std::cout);
    return 0;
  } catch (const ParseError& e) {
    emit(error_report("parse_error", e.what(), e.position()), o.format, std::cout);
  } catch (const std::invalid_argument& e) {
    emit(error_report("invalid_argument", e.what()), o.format, std::cout);
  } catch (const std::exception& e) {
    emit(error_report("error", e.what()), o.format, std::cout);
  }
  return 1;
}
