#include "vca/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "vca/algebra.hpp"
#include "vca/covers.hpp"
#include "vca/instance.hpp"
#include "vca/structure.hpp"
#include "vca/verify.hpp"

namespace vca::cli {

namespace {

using nlohmann::json;

class UsageError : public Error {
public:
  using Error::Error;
};

WeightedMulticomplex load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open instance file '" + path + "'");
  return parse_instance(in);
}

CoverVector parse_vector(const std::string& text, std::size_t n) {
  std::vector<std::uint64_t> entries;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    const ExtendedNatural e = [&] {
      try {
        return parse_extended(token);
      } catch (const std::invalid_argument&) {
        throw UsageError("bad vector entry '" + token + "'");
      }
    }();
    if (e.is_infinite()) throw UsageError("cover vectors must be finite");
    entries.push_back(e.value());
  }
  if (entries.size() != n)
    throw DimensionError("vector has " + std::to_string(entries.size()) +
                         " entries, instance dimension is " + std::to_string(n));
  return CoverVector(std::move(entries));
}

json to_json(const CoverVector& b) { return json(std::vector<std::uint64_t>(b.begin(), b.end())); }

json to_json(const ExtendedNatural& e) {
  return e.is_infinite() ? json("inf") : json(e.value());
}

json to_json(const AlgebraMonomial& m) {
  return {{"exponents", to_json(m.exponents)}, {"degree", m.degree}};
}

std::string vec_str(const CoverVector& b) {
  std::ostringstream os;
  os << b;
  return os.str();
}

std::string show(const AlgebraMonomial& m) {
  std::ostringstream os;
  os << m.exponents << '@' << m.degree;
  return os.str();
}

std::string index_set(const std::vector<std::size_t>& idx) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "") << idx[i] + 1;
  return os.str() + '}';
}

std::string variables(const std::vector<std::size_t>& idx) {
  std::ostringstream os;
  for (std::size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "") << 'x' << idx[i] + 1;
  return os.str();
}

// ---- order ---------------------------------------------------------------

int cmd_order(const std::string& path, const std::string& vector, bool as_json, std::ostream& out) {
  const auto w = load(path);
  const CoverVector b = parse_vector(vector, w.dimension());
  const CoverDegree order = cover_order(w, b);
  if (as_json)
    out << json{{"vector", to_json(b)}, {"order", to_json(order)}}.dump() << '\n';
  else
    out << order << '\n';
  return kExitOk;
}

// ---- covers --------------------------------------------------------------

int cmd_covers(const std::string& path, std::uint64_t k, bool as_json, std::ostream& out) {
  const auto w = load(path);
  const auto set = minimal_covers(w, k);
  if (as_json) {
    json covers = json::array();
    for (const auto& b : set.covers) covers.push_back(to_json(b));
    out << json{{"degree", k}, {"covers", covers}}.dump() << '\n';
  } else {
    for (const auto& b : set.covers) out << b.join(" ") << '\n';
  }
  return kExitOk;
}

// ---- generators ----------------------------------------------------------

struct SplitCheck {
  AlgebraMonomial monomial;
  HighDegreeSplit index_count;
  bool index_count_holds;
  HighDegreeSplit weighted;
  bool weighted_holds;
};

struct SplitChecks {
  std::string note;
  std::optional<std::uint64_t> bound;
  Facet reduced;
  std::vector<SplitCheck> checks;
};

SplitChecks high_degree_splits(const WeightedMulticomplex& w, std::uint64_t horizon) {
  SplitChecks result;
  if (!w.single_facet()) {
    result.note = "split checks need a single maximal facet";
    return result;
  }
  const auto& row = w.rows().front();
  const auto dec = decompose_single_facet(row.facet, row.weight);
  if (dec.coordinates.positive_finite.empty()) {
    result.note = "split checks need a finite positive coordinate";
    return result;
  }
  result.reduced = dec.reduced_facet;
  const std::uint64_t bound = theorem16_bound(dec.reduced_facet, dec.weight);
  result.bound = bound;
  if (horizon <= bound) {
    result.note = "horizon does not exceed the generation bound; nothing to split";
    return result;
  }
  const std::uint64_t weights[] = {dec.weight};
  const WeightedMulticomplex reduced(gamma_of(dec.reduced_facet), weights);
  for (std::uint64_t k = bound + 1; k <= horizon; ++k) {
    for (const auto& b : minimal_covers(reduced, k).covers) {
      SplitCheck c{{b, k},
                   split_high_degree(dec.reduced_facet, dec.weight, b, k, SplitRule::kIndexCount),
                   false,
                   split_high_degree(dec.reduced_facet, dec.weight, b, k,
                                     SplitRule::kWeightedIndexSum),
                   false};
      c.index_count_holds = split_holds(dec.reduced_facet, dec.weight, b, k, c.index_count);
      c.weighted_holds = split_holds(dec.reduced_facet, dec.weight, b, k, c.weighted);
      result.checks.push_back(std::move(c));
    }
  }
  return result;
}

json split_json(const HighDegreeSplit& s, bool holds) {
  return {{"left", to_json(s.left)}, {"right", to_json(s.right)}, {"holds", holds}};
}

int cmd_generators(const std::string& path, std::uint64_t horizon, bool strict_split,
                   bool as_json, std::ostream& out) {
  const auto w = load(path);
  const auto report = algebra_generators(w, horizon);

  std::optional<SplitChecks> splits;
  bool split_failed = false;
  if (strict_split) {
    splits = high_degree_splits(w, horizon);
    for (const auto& c : splits->checks)
      split_failed = split_failed || !c.index_count_holds || !c.weighted_holds;
  }

  if (as_json) {
    json degrees = json::array();
    for (std::uint64_t k = 1; k <= horizon; ++k) {
      json covers = json::array(), fresh = json::array(), certs = json::array();
      for (const auto& c : report.classified) {
        if (c.monomial.degree != k) continue;
        covers.push_back(to_json(c.monomial.exponents));
        if (c.certificate)
          certs.push_back({{"exponents", to_json(c.monomial.exponents)},
                           {"left", to_json(c.certificate->left)},
                           {"right", to_json(c.certificate->right)}});
        else
          fresh.push_back(to_json(c.monomial.exponents));
      }
      degrees.push_back(
          {{"degree", k}, {"covers", covers}, {"new_generators", fresh}, {"certificates", certs}});
    }
    json doc{{"horizon", horizon},
             {"degrees", degrees},
             {"certified_bound",
              report.certified_bound ? json(*report.certified_bound) : json(nullptr)}};
    if (splits) {
      json checks = json::array();
      for (const auto& c : splits->checks)
        checks.push_back({{"exponents", to_json(c.monomial.exponents)},
                          {"degree", c.monomial.degree},
                          {"index_count_rule", split_json(c.index_count, c.index_count_holds)},
                          {"weighted_rule", split_json(c.weighted, c.weighted_holds)}});
      doc["split_checks"] = checks;
      if (!splits->note.empty()) doc["split_note"] = splits->note;
    }
    out << doc.dump(2) << '\n';
    return split_failed ? kExitVerificationFailed : kExitOk;
  }

  out << "degree  covers  new  new generators\n";
  for (std::uint64_t k = 1; k <= horizon; ++k) {
    std::size_t covers = 0;
    std::vector<std::string> fresh;
    for (const auto& c : report.classified) {
      if (c.monomial.degree != k) continue;
      ++covers;
      if (!c.certificate) fresh.push_back(vec_str(c.monomial.exponents));
    }
    out << std::setw(6) << k << "  " << std::setw(6) << covers << "  " << std::setw(3)
        << fresh.size() << "  ";
    if (fresh.empty()) out << '-';
    for (std::size_t i = 0; i < fresh.size(); ++i) out << (i ? " " : "") << fresh[i];
    out << '\n';
  }

  bool any_cert = false;
  for (const auto& c : report.classified) {
    if (!c.certificate) continue;
    if (!any_cert) out << "decomposable:\n";
    any_cert = true;
    out << "  " << std::left << std::setw(16) << show(c.monomial) << std::right << " = "
        << show(c.certificate->left) << " * " << show(c.certificate->right) << '\n';
  }

  out << "new generators: " << report.new_generators.size();
  if (const auto top = report.max_generator_degree()) out << " (max degree " << *top << ')';
  out << '\n';
  if (report.certified_bound)
    out << "certified finitely generated, bound=" << *report.certified_bound << '\n';
  else
    out << "no finite certificate within horizon\n";

  if (splits) {
    out << "high-degree splits";
    if (splits->bound) out << " of " << splits->reduced << " above bound " << *splits->bound;
    out << ":\n";
    if (!splits->note.empty()) out << "  " << splits->note << '\n';
    for (const auto& c : splits->checks) {
      out << "  " << std::left << std::setw(16) << show(c.monomial) << std::right
          << "  |I| rule: " << show(c.index_count.left) << " * " << show(c.index_count.right)
          << (c.index_count_holds ? " PASS" : " FAIL")
          << "  weighted rule: " << show(c.weighted.left) << " * " << show(c.weighted.right)
          << (c.weighted_holds ? " PASS" : " FAIL") << '\n';
    }
  }
  return split_failed ? kExitVerificationFailed : kExitOk;
}

// ---- decompose -----------------------------------------------------------

int cmd_decompose(const std::string& path, bool as_json, std::ostream& out) {
  const auto w = load(path);
  if (!w.single_facet()) throw UsageError("decompose needs an instance with one maximal facet");
  const auto& row = w.rows().front();
  const auto dec = decompose_single_facet(row.facet, row.weight);
  const auto& c = dec.coordinates;

  std::string kind, form;
  switch (dec.kind) {
    case DecompositionKind::kBaseRing:
      kind = "BaseRing";
      form = "S";
      break;
    case DecompositionKind::kFullPolynomialExtension: {
      std::vector<std::size_t> all(dec.dimension);
      for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
      kind = "S[t]";
      form = "S + t*(" + variables(all) + ")S[t]";
      break;
    }
    case DecompositionKind::kComposite: {
      kind = "Composite";
      std::vector<std::string> parts;
      if (!c.positive_finite.empty()) {
        std::string p = "A(G(" + dec.reduced_facet.to_string() + ")," + std::to_string(dec.weight) + ")";
        if (!c.zero.empty()) p += "[" + variables(c.zero) + "]";
        parts.push_back(p);
      }
      if (!c.infinite.empty()) parts.push_back("(" + variables(c.infinite) + ")S[t]");
      form = "S + t*(";
      for (std::size_t i = 0; i < parts.size(); ++i) form += (i ? " + " : "") + parts[i];
      form += ")";
      break;
    }
  }
  const auto bound = generation_bound(w);

  if (as_json) {
    auto idx = [](const std::vector<std::size_t>& v) {
      json a = json::array();
      for (auto i : v) a.push_back(i + 1);
      return a;
    };
    json reduced = json::array();
    for (const auto& e : dec.reduced_facet) reduced.push_back(to_json(e));
    out << json{{"facet", row.facet.to_string()},
                {"weight", row.weight},
                {"P", idx(c.positive_finite)},
                {"Z", idx(c.zero)},
                {"F", idx(c.infinite)},
                {"kind", kind},
                {"reduced_facet", reduced},
                {"form", form},
                {"certified_bound", bound ? json(*bound) : json(nullptr)}}
               .dump(2)
        << '\n';
    return kExitOk;
  }

  out << "facet " << row.facet << " weight " << row.weight << '\n';
  out << "P = " << index_set(c.positive_finite) << "  Z = " << index_set(c.zero)
      << "  F = " << index_set(c.infinite) << '\n';
  out << "kind: " << kind << '\n';
  if (dec.kind == DecompositionKind::kComposite && !c.positive_finite.empty())
    out << "reduced facet: " << dec.reduced_facet << " weight " << dec.weight << '\n';
  out << "form: " << form << '\n';
  if (bound)
    out << "generation bound: " << *bound << '\n';
  else
    out << "generation bound: none (each x_j t^k with j in F is a new generator)\n";
  return kExitOk;
}

// ---- verify --------------------------------------------------------------

int cmd_verify(const std::string& path, std::uint64_t horizon, std::uint64_t max_degree,
               std::ostream& out) {
  const auto w = load(path);
  bool ok = true;
  for (const auto& s : run_verification(w, horizon, max_degree)) {
    ok = ok && s.passed;
    out << (s.passed ? "PASS " : "FAIL ") << std::left << std::setw(13) << s.name << std::right
        << std::setw(8) << s.checks << " checks";
    if (!s.detail.empty()) out << "  " << s.detail;
    out << '\n';
  }
  return ok ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Vertex cover algebras of weighted simplicial multicomplexes", "vca"};
  app.require_subcommand(1);

  std::string path, vector;
  std::uint64_t k = 0, horizon = 0, max_degree = 0;
  bool as_json = false, strict_split = false;

  auto* order = app.add_subcommand("order", "cover order of a vector");
  order->add_option("file", path, "instance file (.vca)")->required();
  order->add_option("--vector", vector, "comma-separated exponents")->required();
  order->add_flag("--json", as_json, "machine-readable output");

  auto* covers = app.add_subcommand("covers", "minimal k-vertex covers");
  covers->add_option("file", path, "instance file (.vca)")->required();
  covers->add_option("-k", k, "cover order")->required();
  covers->add_flag("--json", as_json, "machine-readable output");

  auto* generators = app.add_subcommand("generators", "algebra generators up to a horizon");
  generators->add_option("file", path, "instance file (.vca)")->required();
  generators->add_option("--horizon", horizon, "largest t-degree")->required()->check(
      CLI::PositiveNumber);
  generators->add_flag("--strict-paper-split", strict_split,
                       "also split high-degree covers with k'' = |I| and report failures");
  generators->add_flag("--json", as_json, "machine-readable output");

  auto* decompose = app.add_subcommand("decompose", "structure of a single-facet algebra");
  decompose->add_option("file", path, "instance file (.vca)")->required();
  decompose->add_flag("--json", as_json, "machine-readable output");

  auto* verify = app.add_subcommand("verify", "run the invariant suites on an instance");
  verify->add_option("file", path, "instance file (.vca)")->required();
  verify->add_option("--horizon", horizon, "largest t-degree")->required()->check(
      CLI::PositiveNumber);
  verify->add_option("--max-degree", max_degree, "largest total degree scanned")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*order) return cmd_order(path, vector, as_json, out);
    if (*covers) return cmd_covers(path, k, as_json, out);
    if (*generators) return cmd_generators(path, horizon, strict_split, as_json, out);
    if (*decompose) return cmd_decompose(path, as_json, out);
    if (*verify) return cmd_verify(path, horizon, max_degree, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace vca::cli
