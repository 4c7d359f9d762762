#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <ostream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "rectlift/dimension.hpp"
#include "rectlift/lift.hpp"
#include "rectlift/nabla.hpp"
#include "rectlift/perm.hpp"
#include "rectlift/polytope.hpp"
#include "rectlift/rectsets.hpp"
#include "rectlift/verify.hpp"
#include "rectlift/weight.hpp"

namespace rectlift::cli {

namespace {

using json = nlohmann::ordered_json;

json roots_json(const RootSubset& s) {
  json arr = json::array();
  for (const PosRoot& a : s) arr.push_back(to_string(a));
  return arr;
}

json checks_json(const VerificationReport& rep) {
  json c;
  c["ideal"] = rep.ideal;
  c["inversion"] = rep.inversion;
  c["order_iso"] = rep.order_iso;
  c["commutative"] = rep.commutative;
  c["pairing"] = rep.pairing;
  c["dimension"] = rep.dimension;
  c["weight"] = rep.weight;
  return c;
}

json dims_json(const VerificationReport& rep) {
  json d;
  d["demazure"] = rep.dim_demazure;
  d["polytope"] = rep.dim_polytope;
  d["lift_demazure"] = rep.dim_lift_demazure;
  d["lift_polytope"] = rep.dim_lift_polytope;
  return d;
}

json lift_fields(const LiftResult& lr) {
  json o;
  o["tau"] = to_string(lr.tau);
  o["lambda"] = lr.lambda.coeffs();
  o["tau_tilde"] = to_string(lr.tau_tilde);
  o["lambda_tilde"] = lr.lambda_tilde.coeffs();
  o["ideal"] = roots_json(lr.dmap.image().members());
  o["mu"] = lr.mu.coeffs();
  return o;
}

/* tsv rendering: one "path<TAB>value" line per leaf, arrays of scalars kept
 * inline so root lists and weights stay one value */
void flatten_tsv(const json& v, const std::string& path, std::ostream& out) {
  if (v.is_object()) {
    for (const auto& [key, val] : v.items())
      flatten_tsv(val, path.empty() ? key : path + "." + key, out);
  } else if (v.is_array() &&
             std::any_of(v.begin(), v.end(), [](const json& x) { return x.is_structured(); })) {
    size_t t = 0;
    for (const auto& val : v) flatten_tsv(val, path + "." + std::to_string(t++), out);
  } else if (v.is_string()) {
    out << path << '\t' << v.get<std::string>() << '\n';
  } else {
    out << path << '\t' << v.dump() << '\n';
  }
}

void emit(const json& doc, const std::string& format, std::ostream& out) {
  if (format == "tsv")
    flatten_tsv(doc, "", out);
  else
    out << doc.dump() << '\n';
}

PermClass parse_class(const std::string& text) {
  if (text == "rectangular") return PermClass::rectangular;
  if (text == "triangular") return PermClass::triangular;
  throw std::invalid_argument("bad --class '" + text + "', expected rectangular or triangular");
}

struct SweepCase {
  Permutation tau;
  Weight lambda;
};

std::vector<SweepCase> sweep_cases(int n, int max_coeff) {
  std::vector<SweepCase> cases;
  std::vector<Permutation> taus = enumerate_class(n, PermClass::rectangular);
  int rank = n - 1;
  std::vector<long long> c(static_cast<size_t>(rank), 0);
  for (;;) {
    for (const Permutation& tau : taus) cases.push_back({tau, Weight(c)});
    int t = rank - 1;
    while (t >= 0 && c[static_cast<size_t>(t)] == max_coeff) c[static_cast<size_t>(t--)] = 0;
    if (t < 0) break;
    ++c[static_cast<size_t>(t)];
  }
  return cases;
}

int do_verify_sweep(int n, int max_coeff, int jobs, const std::string& format,
                    std::ostream& out) {
  if (n < 2) throw std::invalid_argument("--sweep needs --n >= 2");
  if (max_coeff < 0) throw std::invalid_argument("--max-coeff must be >= 0");
  std::vector<SweepCase> cases = sweep_cases(n, max_coeff);

  std::vector<char> failed(cases.size(), 0);
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      size_t t = next.fetch_add(1);
      if (t >= cases.size()) return;
      failed[t] = !verify_lift(cases[t].tau, cases[t].lambda).pass();
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  json failures = json::array();
  for (size_t t = 0; t < cases.size(); ++t)
    if (failed[t]) {
      json f;
      f["tau"] = to_string(cases[t].tau);
      f["lambda"] = cases[t].lambda.coeffs();
      failures.push_back(f);
    }

  json doc;
  doc["schema"] = 1;
  doc["n"] = n;
  doc["max_coeff"] = max_coeff;
  doc["cases"] = cases.size();
  doc["failures"] = failures;
  doc["pass"] = failures.empty();
  emit(doc, format, out);
  return failures.empty() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact calculator for rectangular permutations, their lifts, and Demazure "
               "dimensions"};
  app.require_subcommand(1);
  int exit_code = 0;

  std::string format = "json";
  int jobs = 1;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "tsv"}))
        ->capture_default_str();
    cmd->add_option("--jobs", jobs, "worker threads for sweeps")->check(CLI::PositiveNumber);
  };

  /* classify */
  std::string perm_text;
  auto* classify = app.add_subcommand("classify", "pattern classes of a permutation");
  classify->add_option("perm", perm_text, "one-line notation or s-word")->required();
  add_common(classify);
  classify->callback([&] {
    Permutation p = parse_permutation(perm_text);
    bool rect = is_rectangular(p);
    json doc;
    doc["schema"] = 1;
    doc["perm"] = to_string(p);
    doc["rectangular"] = rect;
    doc["triangular"] = is_triangular(p);
    doc["irreducible"] = rect ? json(is_irreducible(inversion_set(p))) : json(nullptr);
    emit(doc, format, out);
  });

  /* lift */
  std::string lambda_text;
  auto* lift_cmd = app.add_subcommand("lift", "lift a rectangular permutation and weight");
  lift_cmd->add_option("perm", perm_text, "one-line notation or s-word")->required();
  lift_cmd->add_option("--lambda", lambda_text, "fundamental coefficients c1,...,cn")->required();
  add_common(lift_cmd);
  lift_cmd->callback([&] {
    Permutation p = parse_permutation(perm_text);
    Weight lambda = parse_weight(lambda_text);
    VerificationReport rep = verify_lift(p, lambda);

    json doc;
    doc["schema"] = 1;
    RootSubset inv = inversion_set(p);
    if (inv.rank() >= 1 && inv.contains(highest_root(inv.rank()))) {
      doc.update(lift_fields(lift(p, lambda)));
    } else {
      doc["tau"] = to_string(p);
      doc["lambda"] = lambda.coeffs();
      json comps = json::array();
      for (const ComponentLift& part : lift_general(p, lambda)) {
        json c;
        c["interval"] = {part.interval.first, part.interval.second};
        c.update(lift_fields(part.result));
        comps.push_back(c);
      }
      doc["components"] = comps;
    }
    doc["checks"] = checks_json(rep);
    emit(doc, format, out);
    if (!rep.pass()) exit_code = 1;
  });

  /* verify */
  bool sweep = false;
  int sweep_n = 0, max_coeff = 1;
  auto* verify_cmd = app.add_subcommand("verify", "check every promised property of the lift");
  verify_cmd->add_option("perm", perm_text, "one-line notation or s-word");
  verify_cmd->add_option("--lambda", lambda_text, "fundamental coefficients c1,...,cn");
  verify_cmd->add_flag("--sweep", sweep, "verify all rectangular elements of S_n");
  verify_cmd->add_option("--n", sweep_n, "sweep degree");
  verify_cmd->add_option("--max-coeff", max_coeff, "sweep coefficient cap")
      ->capture_default_str();
  add_common(verify_cmd);
  verify_cmd->callback([&] {
    if (sweep) {
      exit_code = do_verify_sweep(sweep_n, max_coeff, jobs, format, out);
      return;
    }
    if (perm_text.empty() || lambda_text.empty())
      throw CLI::ValidationError("verify", "either pass <perm> with --lambda, or --sweep --n=N");
    Permutation p = parse_permutation(perm_text);
    Weight lambda = parse_weight(lambda_text);
    VerificationReport rep = verify_lift(p, lambda);
    json doc;
    doc["schema"] = 1;
    doc["tau"] = to_string(p);
    doc["lambda"] = lambda.coeffs();
    doc["checks"] = checks_json(rep);
    doc["dims"] = dims_json(rep);
    doc["pass"] = rep.pass();
    emit(doc, format, out);
    if (!rep.pass()) exit_code = 1;
  });

  /* count */
  std::string class_text;
  int count_n = 0;
  auto* count_cmd = app.add_subcommand("count", "census of a pattern class");
  count_cmd->add_option("--class", class_text, "rectangular or triangular")->required();
  count_cmd->add_option("--n", count_n, "degree")->required();
  add_common(count_cmd);
  count_cmd->callback([&] {
    json doc;
    doc["schema"] = 1;
    doc["class"] = class_text;
    doc["n"] = count_n;
    doc["count"] = census(count_n, parse_class(class_text));
    emit(doc, format, out);
  });

  /* enumerate */
  auto* enum_cmd = app.add_subcommand("enumerate", "list a pattern class, one per line");
  enum_cmd->add_option("--class", class_text, "rectangular or triangular")->required();
  enum_cmd->add_option("--n", count_n, "degree")->required();
  add_common(enum_cmd);
  enum_cmd->callback([&] {
    for (const Permutation& p : enumerate_class(count_n, parse_class(class_text)))
      out << to_string(p) << '\n';
  });

  /* dim */
  std::string oracle = "both";
  auto* dim_cmd = app.add_subcommand("dim", "Demazure module dimension");
  dim_cmd->add_option("perm", perm_text, "one-line notation or s-word")->required();
  dim_cmd->add_option("--lambda", lambda_text, "fundamental coefficients c1,...,cn")->required();
  dim_cmd->add_option("--oracle", oracle, "which computation to run")
      ->check(CLI::IsMember({"both", "demazure", "polytope"}))
      ->capture_default_str();
  add_common(dim_cmd);
  dim_cmd->callback([&] {
    Permutation p = parse_permutation(perm_text);
    Weight lambda = parse_weight(lambda_text);
    json doc;
    doc["schema"] = 1;
    if (oracle == "demazure") {
      doc["demazure"] = demazure_dim(p, lambda);
    } else if (oracle == "polytope") {
      doc["polytope"] = polytope_count(inversion_set(p), lambda);
    } else {
      DimReport rep = dims_agree(p, lambda);
      doc["demazure"] = rep.demazure;
      doc["polytope"] = rep.polytope;
      if (rep.lifted_known) doc["lifted"] = rep.lifted;
      doc["equal"] = rep.equal;
      if (!rep.equal) exit_code = 1;
    }
    emit(doc, format, out);
  });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
  return exit_code;
}

}  // namespace rectlift::cli
