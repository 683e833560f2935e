#include "torsor/cli_app.hpp"

#include "torsor/multiquad.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>

namespace torsor::cli {

namespace {

using nlohmann::json;

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  if (!text.empty() && text.back() == ',') parts.emplace_back();
  return parts;
}

long parse_positive(const std::string& key, const std::string& value) {
  const Rational q = parse_rational(value);
  if (q.get_den() != 1 || q < 1 || !q.get_num().fits_slong_p()) {
    throw DomainError(key + " must be a positive integer, got '" + value + "'");
  }
  return q.get_num().get_si();
}

json pair_json(const DescentPair& d) {
  return json::array({to_string(d.first), to_string(d.second)});
}

json point_json(const CurvePoint& p) {
  if (p.is_identity()) return "O";
  return json::array({to_string(p.x()), to_string(p.y())});
}

json group_json(const DescentGroup& P) {
  json elements = json::array();
  for (const auto& d : P.elements()) elements.push_back(pair_json(d));
  return {{"elements", elements}, {"order", P.size()}, {"provenance", to_string(P.provenance())}};
}

std::string group_text(const DescentGroup& P) {
  std::string out = "{";
  for (std::size_t i = 0; i < P.size(); ++i) {
    if (i) out += ", ";
    out += to_string(P.elements()[i]);
  }
  return out + "} [" + to_string(P.provenance()) + ", order " + std::to_string(P.size()) + "]";
}

json curve_inputs(const Curve& c) {
  return json::array({"0", to_string(c.a()), to_string(c.b())});
}

json budgets_json(const Budgets& b) {
  return {{"height", b.height}, {"witness", b.witness}};
}

json witness_json(const std::optional<Witness>& w) {
  if (!w) return nullptr;
  json out = {{"kind", to_string(w->kind)}};
  if (w->a_value) out["A"] = to_string(*w->a_value);
  if (w->target) out["target"] = pair_json(*w->target);
  if (w->quaternion) {
    out["quaternion"] = json::array({to_string(w->quaternion->a), to_string(w->quaternion->b)});
  }
  if (w->shape) out["shape"] = to_string(*w->shape);
  return out;
}

std::string witness_text(const std::optional<Witness>& w) {
  if (!w) return "none";
  std::string out = to_string(w->kind);
  if (w->a_value) out += " A = " + to_string(*w->a_value);
  if (w->target) out += " onto " + to_string(*w->target);
  if (w->quaternion) {
    out += " via <" + to_string(w->quaternion->a) + ", " + to_string(w->quaternion->b) + ">";
  }
  if (w->shape) out += " shape " + to_string(*w->shape);
  return out;
}

void emit(std::ostream& out, const json& envelope) { out << envelope.dump(2) << '\n'; }

json envelope(const std::string& command, json inputs, json result, const std::string& confidence,
              const Budgets& budgets) {
  return {{"command", command},
          {"inputs", std::move(inputs)},
          {"result", std::move(result)},
          {"confidence", confidence},
          {"budgets", budgets_json(budgets)}};
}

struct Options {
  Budgets budgets;
  bool json = false;
  bool assert_complete = false;
  std::string curve = "0,1,-1";
  std::string torsor_class;
  std::vector<std::string> hilbert_args;
  bool all_places = false;
  std::string x;
  std::string y;
  long bound = 7;
};

void cmd_classify(const Options& o, std::ostream& out) {
  const Curve curve = parse_curve(o.curve);
  const DescentPair cls = parse_class(o.torsor_class);
  const DescentGroup P = search_descent_group(curve, o.budgets.height, o.assert_complete);
  const TorsorClass t{curve, cls.first, cls.second};
  const TorsorClassification r = classify(t, P, {o.budgets.witness});
  if (o.json) {
    json result = {{"period", r.period},
                   {"index", r.index},
                   {"generic_index", r.generic_index},
                   {"ed_conjectural", r.essential_dimension_conjectural},
                   {"class", pair_json(cls)},
                   {"descent_group", group_json(P)},
                   {"witness", witness_json(r.witness)}};
    emit(out, envelope("classify", {{"curve", curve_inputs(curve)}, {"class", o.torsor_class}},
                       result, to_string(r.confidence), o.budgets));
    return;
  }
  out << "curve          " << to_string(curve) << '\n'
      << "class (M, N)   " << to_string(cls) << '\n'
      << "descent group  " << group_text(P) << '\n'
      << "period         " << r.period << '\n'
      << "index          " << r.index << '\n'
      << "generic index  " << r.generic_index << '\n'
      << "ed (conj.)     " << r.essential_dimension_conjectural << '\n'
      << "confidence     " << to_string(r.confidence) << '\n'
      << "witness        " << witness_text(r.witness) << '\n';
}

void cmd_hilbert(const Options& o, std::ostream& out) {
  if (o.hilbert_args.size() < 2 || o.hilbert_args.size() > 3) {
    throw DomainError("hilbert expects: a b [place]");
  }
  const Rational a = parse_rational(o.hilbert_args[0]);
  const Rational b = parse_rational(o.hilbert_args[1]);
  if (sgn(a) == 0 || sgn(b) == 0) throw DomainError("hilbert symbol of zero");
  const SquareClass ca = SquareClass::of(a);
  const SquareClass cb = SquareClass::of(b);
  std::vector<Place> places;
  const bool all = o.all_places || o.hilbert_args.size() == 2;
  if (all) {
    places = candidate_places(ca, cb);
  } else {
    places.push_back(parse_place(o.hilbert_args[2]));
  }
  json symbols = json::array();
  int product = 1;
  for (const auto& v : places) {
    const int s = hilbert_symbol(ca, cb, v);
    product *= s;
    symbols.push_back({{"place", to_string(v)}, {"symbol", s}});
  }
  if (o.json) {
    json result = {{"symbols", symbols},
                   {"splits", quaternion_splits({ca, cb})}};
    if (all) result["product"] = product;
    json inputs = {{"a", to_string(a)}, {"b", to_string(b)}};
    inputs["places"] = all ? json("all") : json(o.hilbert_args[2]);
    emit(out, envelope("hilbert", inputs, result, "definite", o.budgets));
    return;
  }
  for (const auto& entry : symbols) {
    const int s = entry["symbol"].get<int>();
    out << "(" << to_string(a) << ", " << to_string(b) << ")_"
        << entry["place"].get<std::string>() << " = " << (s > 0 ? "+1" : "-1") << '\n';
  }
  if (all) out << "product        " << (product > 0 ? "+1" : "-1") << '\n';
}

void cmd_kummer(const Options& o, std::ostream& out) {
  const Curve curve = parse_curve(o.curve);
  std::vector<CurvePoint> points = bounded_point_search(curve, o.budgets.height);
  for (auto label : {TwoTorsionLabel::sigma, TwoTorsionLabel::tau, TwoTorsionLabel::omega}) {
    const CurvePoint p = curve.two_torsion(label);
    if (!std::binary_search(points.begin(), points.end(), p)) {
      points.insert(std::upper_bound(points.begin(), points.end(), p), p);
    }
  }
  const bool complete = o.assert_complete || mordell_weil_is_two_torsion(curve);
  const DescentGroup P = descent_group(
      curve, points, complete ? Provenance::complete : Provenance::search_bounded);
  const std::string confidence = complete ? to_string(Confidence::definite)
                                          : to_string(Confidence::conditional_on_descent_group);
  if (o.json) {
    json listed = json::array();
    for (const auto& p : points) {
      listed.push_back({{"point", point_json(p)}, {"image", pair_json(kummer_image(curve, p))}});
    }
    emit(out, envelope("kummer", {{"curve", curve_inputs(curve)}},
                       {{"points", listed}, {"descent_group", group_json(P)}}, confidence,
                       o.budgets));
    return;
  }
  out << "curve          " << to_string(curve) << '\n';
  for (const auto& p : points) {
    out << "  " << to_string(p) << "  ->  " << to_string(kummer_image(curve, p)) << '\n';
  }
  out << "descent group  " << group_text(P) << '\n';
}

void cmd_halve(const Options& o, std::ostream& out) {
  const Curve curve = parse_curve(o.curve);
  const Rational A = parse_rational(o.x);
  std::optional<Rational> y;
  if (!o.y.empty()) y = parse_rational(o.y);
  const HalvingResult h = halve_point(curve, A, y);
  json discriminants = json::array();
  for (const auto& d : h.ring->discriminants()) discriminants.push_back(to_string(d));
  json candidates = json::array();
  for (const auto& c : h.candidates) {
    const ExtPoint m = ExtPoint::affine(c.x, c.y);
    const bool on_curve = ext_on_curve(curve, m);
    const bool doubles = on_curve && ext_point_add(curve, m, m) == h.target;
    candidates.push_back({{"signs", c.signs},
                          {"x", to_string(c.x)},
                          {"y", to_string(c.y)},
                          {"on_curve", on_curve},
                          {"doubles_to_target", doubles}});
  }
  const json target = json::array({to_string(*h.target.x), to_string(*h.target.y)});
  if (o.json) {
    json inputs = {{"curve", curve_inputs(curve)}, {"x", to_string(A)}};
    if (y) inputs["y"] = to_string(*y);
    emit(out, envelope("halve", inputs,
                       {{"field", discriminants}, {"target", target}, {"candidates", candidates}},
                       "definite", o.budgets));
    return;
  }
  out << "curve          " << to_string(curve) << '\n' << "field          Q";
  for (std::size_t i = 0; i < discriminants.size(); ++i) {
    out << (i ? ", " : "(") << "sqrt(" << discriminants[i].get<std::string>() << ")";
  }
  out << (discriminants.empty() ? "" : ")") << "\n"
      << "target         (" << target[0].get<std::string>() << ", "
      << target[1].get<std::string>() << ")\n";
  for (const auto& c : candidates) {
    const auto signs = c["signs"];
    out << "  signs (" << signs[0].get<int>() << ", " << signs[1].get<int>() << ", "
        << signs[2].get<int>() << ")  x_m = " << c["x"].get<std::string>()
        << "  y_m = " << c["y"].get<std::string>()
        << (c["doubles_to_target"].get<bool>() ? "  [verified]" : "  [FAILED]") << '\n';
  }
}

void cmd_search(const Options& o, std::ostream& out) {
  const Curve curve = parse_curve(o.curve);
  const DescentGroup P = search_descent_group(curve, o.budgets.height, o.assert_complete);
  if (P.provenance() != Provenance::complete && !is_special_curve(curve)) {
    throw DomainError("search needs a complete descent group; pass --assert-complete");
  }
  const auto entries = search_examples(curve, P, o.bound);
  json listed = json::array();
  bool all_verified = true;
  for (const auto& e : entries) {
    const TorsorClassification again = classify({curve, e.pair.first, e.pair.second}, P, {0});
    const bool verified = again.period == e.classification.period &&
                          again.index == e.classification.index;
    all_verified = all_verified && verified;
    listed.push_back({{"class", pair_json(e.pair)},
                      {"period", e.classification.period},
                      {"index", e.classification.index},
                      {"verified", verified}});
  }
  if (o.json) {
    emit(out, envelope("search", {{"curve", curve_inputs(curve)}, {"bound", o.bound}},
                       {{"examples", listed}, {"count", entries.size()},
                        {"all_verified", all_verified}},
                       to_string(Confidence::definite), o.budgets));
    return;
  }
  out << "curve          " << to_string(curve) << '\n'
      << "bound          " << o.bound << '\n'
      << "period 2, index 4 classes: " << entries.size() << '\n';
  for (const auto& e : entries) out << "  " << to_string(e.pair) << '\n';
}

// Lets "-1" and "-1,7" through as values rather than option names.
std::vector<std::string> protect_negative_numbers(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (const auto& a : args) {
    const bool numeric = a.size() > 1 && a[0] == '-' && (std::isdigit(static_cast<unsigned char>(a[1])));
    out.push_back(numeric ? " " + a : a);
  }
  return out;
}

std::string unprotect(std::string s) {
  if (!s.empty() && s.front() == ' ') s.erase(0, 1);
  return s;
}

}  // namespace

Budgets apply_budget_override(Budgets base, const std::string& spec) {
  if (spec.empty()) return base;
  if (spec.find('=') == std::string::npos) {
    base.witness = parse_positive(kBudgetEnv, spec);
    return base;
  }
  for (const auto& item : split_commas(spec)) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw DomainError(std::string(kBudgetEnv) + ": malformed '" + item + "'");
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    if (key == "height") {
      base.height = parse_positive(key, value);
    } else if (key == "witness") {
      base.witness = parse_positive(key, value);
    } else {
      throw DomainError(std::string(kBudgetEnv) + ": unknown budget '" + key + "'");
    }
  }
  return base;
}

Curve parse_curve(const std::string& text) {
  const auto parts = split_commas(text);
  if (parts.size() != 3) throw DomainError("curve must be three roots '0,a,b', got '" + text + "'");
  if (sgn(parse_rational(parts[0])) != 0) {
    throw DomainError("first root must be 0; translate x so that one root sits at the origin");
  }
  return Curve(parse_rational(parts[1]), parse_rational(parts[2]));
}

DescentPair parse_class(const std::string& text) {
  const auto parts = split_commas(text);
  if (parts.size() != 2) throw DomainError("class must be 'M,N', got '" + text + "'");
  const Rational m = parse_rational(parts[0]);
  const Rational n = parse_rational(parts[1]);
  if (sgn(m) == 0 || sgn(n) == 0) throw DomainError("class entries must be nonzero");
  return {SquareClass::of(m), SquareClass::of(n)};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  try {
    if (const char* env = std::getenv(kBudgetEnv)) {
      o.budgets = apply_budget_override(o.budgets, env);
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }

  CLI::App app{"Period and index of torsors of y^2 = x(x-a)(x-b)", "torsor"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub, bool with_curve) {
    sub->add_flag("--json", o.json, "Machine-readable output");
    if (with_curve) {
      sub->add_option("--curve", o.curve, "Roots 0,a,b")->capture_default_str();
      sub->add_option("--height", o.budgets.height, "Height bound for the point search")
          ->check(CLI::PositiveNumber);
    }
  };

  auto* classify_cmd = app.add_subcommand("classify", "Period, index and ed of a class (M,N)");
  add_common(classify_cmd, true);
  classify_cmd->add_option("--class", o.torsor_class, "M,N")->required();
  classify_cmd->add_option("--budget", o.budgets.witness, "Witness search budget")
      ->check(CLI::NonNegativeNumber);
  classify_cmd->add_flag("--assert-complete", o.assert_complete,
                         "Treat the searched points as generating E(Q)");

  auto* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert symbols (a,b)_v");
  add_common(hilbert_cmd, false);
  hilbert_cmd->add_option("args", o.hilbert_args, "a b [place]")->required()->expected(2, 3);
  hilbert_cmd->add_flag("--all", o.all_places, "All candidate places and the product");

  auto* kummer_cmd = app.add_subcommand("kummer", "Points, Kummer images and the group P");
  add_common(kummer_cmd, true);
  kummer_cmd->add_flag("--assert-complete", o.assert_complete,
                       "Treat the searched points as generating E(Q)");

  auto* halve_cmd = app.add_subcommand("halve", "Halves of the point with x = A");
  add_common(halve_cmd, true);
  halve_cmd->add_option("--x", o.x, "x-coordinate A")->required();
  halve_cmd->add_option("--y", o.y, "rational y-coordinate, if the point is rational");

  auto* search_cmd = app.add_subcommand("search", "Classes with period 2 and index 4");
  add_common(search_cmd, true);
  search_cmd->add_option("--bound", o.bound, "Bound on |M|, |N|")->check(CLI::PositiveNumber);
  search_cmd->add_flag("--assert-complete", o.assert_complete,
                       "Treat the searched points as generating E(Q)");

  std::vector<std::string> reversed = protect_negative_numbers(args);
  std::reverse(reversed.begin(), reversed.end());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  o.curve = unprotect(o.curve);
  o.torsor_class = unprotect(o.torsor_class);
  o.x = unprotect(o.x);
  o.y = unprotect(o.y);
  for (auto& a : o.hilbert_args) a = unprotect(a);

  try {
    if (*classify_cmd) cmd_classify(o, out);
    if (*hilbert_cmd) cmd_hilbert(o, out);
    if (*kummer_cmd) cmd_kummer(o, out);
    if (*halve_cmd) cmd_halve(o, out);
    if (*search_cmd) cmd_search(o, out);
  } catch (const BudgetExceeded& e) {
    err << "budget exhausted: " << e.what() << '\n';
    return kExitBudget;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitOk;
}

}  // namespace torsor::cli
