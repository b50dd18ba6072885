// gf: command-line front end.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "gf/congruence.hpp"
#include "gf/groupoid.hpp"
#include "gf/io.hpp"
#include "gf/presented.hpp"
#include "gf/spectrum.hpp"
#include "gf/verify.hpp"

namespace {

  using gf::json;

  void print(json const& j, std::string const& format) {
    if (format == "json") {
      std::cout << j.dump(2) << "\n";
      return;
    }
    for (auto const& [key, value] : j.items()) {
      std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
                << "\n";
    }
  }

  gf::FiniteInverseSemigroup const& finite(gf::Instance const& instance) {
    if (!instance.semigroup) {
      throw gf::Error(instance.name + " is a presented semigroup; this command needs a finite one");
    }
    return *instance.semigroup;
  }

  // Named congruences plus identity, full, least_clifford, least_commutative.
  gf::Congruence resolve(gf::Instance const& instance, std::string const& name) {
    for (auto const& c : gf::standard_congruences(instance)) {
      if (c.name == name) {
        return c.congruence;
      }
    }
    return gf::find_congruence(instance, name);
  }

  int cmd_inspect(std::string const& file, std::string const& format) {
    auto const instance = gf::load_instance(file);
    json       out      = {{"name", instance.name}};
    if (instance.presented) {
      auto const& p = *instance.presented;
      if (p.kind == gf::PresentedSpec::Kind::fcis) {
        out["kind"]       = "fcis";
        out["alphabet"]   = p.alphabet;
        out["characters"] = gf::fcis_characters(p.rank).size();
      } else {
        out["kind"]        = "cuntz";
        out["n"]           = p.rank;
        out["homs_to_two"] = gf::cuntz_homs_to_two(p.rank);
      }
      print(out, format);
      return 0;
    }
    auto const& S = *instance.semigroup;
    out["order"]            = S.size();
    out["idempotents"]      = S.idempotents().size();
    out["is_clifford"]      = gf::is_clifford(S);
    out["is_commutative"]   = gf::is_commutative(S);
    out["is_group"]         = gf::is_group(S);
    out["zero"]             = S.zero() ? json(S.name(*S.zero())) : json(nullptr);
    out["one"]              = S.one() ? json(S.name(*S.one())) : json(nullptr);
    out["characters"]       = gf::enumerate_characters(S).size();
    out["fixed_characters"] = gf::fixed_characters(S).size();
    out["homs_to_two"]      = gf::homs_to_two(S).size();
    print(out, format);
    return 0;
  }

  int cmd_congruence(std::string const& file,
                     std::string const& which,
                     bool               emit_quotient,
                     std::string const& format) {
    auto const  instance = gf::load_instance(file);
    auto const& S        = finite(instance);
    std::optional<gf::Congruence> nu;
    if (which == "least-clifford") {
      nu = gf::least_clifford(S);
    } else if (which == "least-abelian" || which == "least-commutative") {
      nu = gf::least_commutative(S);
    } else if (which == "max-group") {
      nu = gf::nu_min(S, gf::IdempotentCongruence::full(S));
    } else if (which.rfind("from-pairs:", 0) == 0) {
      nu = gf::find_congruence(instance, which.substr(11));
    } else {
      throw gf::UnknownCongruenceName(
          "unknown congruence '" + which
          + "' (least-clifford, least-abelian, max-group, from-pairs:<name>)");
    }
    json out             = gf::partition_to_json(S, *nu);
    out["name"]          = instance.name;
    out["which"]         = which;
    auto const Q         = gf::quotient(S, *nu);
    out["quotient_order"] = Q.semigroup.size();
    if (emit_quotient) {
      out["quotient"] = gf::semigroup_to_json(Q.semigroup);
    }
    print(out, format);
    return 0;
  }

  int cmd_groupoid(std::string const& file,
                   std::string const& restriction,
                   std::string const& quotient,
                   bool               emit,
                   std::string const& format) {
    auto const  instance = gf::load_instance(file);
    auto const& S        = finite(instance);
    auto const  U        = gf::universal_groupoid(S);

    gf::Restriction R{U.groupoid, {}};
    for (gf::arrow_id a = 0; a < U.groupoid.size(); ++a) {
      R.to_parent.push_back(a);
    }
    gf::CharacterSet F = gf::enumerate_characters(S);
    if (restriction == "fix") {
      R = gf::g_fix(U.groupoid);
      F = gf::fixed_characters(S);
    } else if (restriction.rfind("rho:", 0) == 0) {
      auto const nu = resolve(instance, restriction.substr(4));
      F             = gf::set_from_rho(S, gf::restrict_to_idempotents(S, nu));
      std::vector<gf::arrow_id> units;
      for (auto e : F) {
        units.push_back(U.unit_of[e]);
      }
      std::sort(units.begin(), units.end());
      R = gf::restrict(U.groupoid, units);
    } else if (!restriction.empty()) {
      throw gf::Error("--restrict expects fix or rho:<name>");
    }

    gf::FiniteGroupoid G = R.groupoid;
    if (quotient.rfind("kernel:", 0) == 0) {
      auto const                nu = resolve(instance, quotient.substr(7));
      std::vector<gf::arrow_id> local(U.groupoid.size(), gf::undefined);
      for (gf::arrow_id a = 0; a < R.to_parent.size(); ++a) {
        local[R.to_parent[a]] = a;
      }
      std::vector<gf::arrow_id> germs;
      for (auto n : gf::kernel(S, nu)) {
        for (auto e : F) {
          if (gf::natural_order_leq(S, e, S.domain_idempotent(n))) {
            germs.push_back(local[U.arrow_of(n, e)]);
          }
        }
      }
      G = gf::quotient_groupoid(R.groupoid, gf::generated_subgroupoid(R.groupoid, germs)).groupoid;
    } else if (!quotient.empty()) {
      throw gf::Error("--quotient expects kernel:<name>");
    }

    json isotropy = json::array();
    for (auto x : G.units()) {
      isotropy.push_back(gf::isotropy_group(G, x).groupoid.size());
    }
    json orbit_sizes = json::array();
    for (auto const& o : gf::orbits(G)) {
      std::size_t units = 0;
      for (auto a : o) {
        units += G.is_unit(a) ? 1 : 0;
      }
      orbit_sizes.push_back(units);
    }
    json out = {{"name", instance.name},
                {"arrows", G.size()},
                {"units", G.units().size()},
                {"fixed_units", gf::fixed_units(G).size()},
                {"orbit_sizes", orbit_sizes},
                {"isotropy_orders", isotropy},
                {"is_group_bundle", gf::is_group_bundle(G)}};
    if (emit) {
      out["groupoid"] = gf::groupoid_to_json(G);
    }
    print(out, format);
    return 0;
  }

  int cmd_verify(std::string const& path,
                 std::string const& theorem,
                 std::size_t        budget,
                 std::uint64_t      seed,
                 std::string const& format) {
    namespace fs   = std::filesystem;
    auto instances = gf::load_corpus(path);

    gf::RunOptions options;
    options.budget = budget;
    options.seed   = seed;
    // FCIS words are checked against the small Clifford semigroups of the
    // corpus the file lives in.
    auto targets = fs::is_directory(path) ? instances : gf::load_corpus(fs::path(path).parent_path());
    for (auto const& t : targets) {
      if (t.semigroup && t.semigroup->size() <= 6 && gf::is_clifford(*t.semigroup)) {
        options.fcis_targets.push_back(*t.semigroup);
      }
    }

    json        reports  = json::array();
    bool        all_good = true;
    std::size_t count    = 0;
    for (auto const& instance : instances) {
      for (auto const& r : gf::run_theorem(instance, theorem, options)) {
        all_good = all_good && r.verified();
        ++count;
        if (format == "json") {
          reports.push_back(gf::report_to_json(r));
        } else {
          std::cout << gf::report_to_text(r) << "\n";
        }
      }
    }
    if (format == "json") {
      std::cout << reports.dump(2) << "\n";
    } else {
      std::cout << count << " report(s), " << (all_good ? "all verified" : "NOT all verified")
                << "\n";
    }
    return all_good ? 0 : 1;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite inverse semigroups and their universal groupoids"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  std::size_t budget = gf::default_search_budget;
  auto*       budget_opt
      = app.add_option("--budget", budget, "Isomorphism search node budget (default: GF_BUDGET or 10^7)");
  std::uint64_t seed = 0;
  app.add_option("--seed", seed, "Seed for sampled words")->capture_default_str();
  bool emit_quotient = false, emit_groupoid = false;
  app.add_flag("--emit-quotient", emit_quotient, "Include the quotient Cayley table");
  app.add_flag("--emit-groupoid", emit_groupoid, "Include the full groupoid");

  std::string file, which, restriction, quotient, theorem = "all";

  auto* inspect = app.add_subcommand("inspect", "Summarise a corpus file");
  inspect->add_option("file", file)->required();

  auto* congruence = app.add_subcommand("congruence", "Compute a congruence and its quotient");
  congruence->add_option("file", file)->required();
  congruence->add_option("--which", which,
                         "least-clifford | least-abelian | max-group | from-pairs:<name>")
      ->required();

  auto* groupoid = app.add_subcommand("groupoid", "Build the universal groupoid");
  groupoid->add_option("file", file)->required();
  groupoid->add_option("--restrict", restriction, "fix | rho:<name>");
  groupoid->add_option("--quotient", quotient, "kernel:<name>");

  auto* verify = app.add_subcommand("verify", "Check the isomorphism theorems");
  verify->add_option("path", file, "Corpus file or directory")->required();
  verify->add_option("--theorem", theorem)
      ->check(CLI::IsMember({"main", "min-restriction", "clifford", "abelianization",
                             "clifford-structure", "fixed-points", "correspondence", "all"}))
      ->capture_default_str();

  // Options given after the subcommand name are accepted too.
  for (auto* sub : {inspect, congruence, groupoid, verify}) {
    sub->fallthrough();
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (budget_opt->count() == 0) {
      budget = gf::search_budget_from_env();
    }
    if (*inspect) {
      return cmd_inspect(file, format);
    }
    if (*congruence) {
      return cmd_congruence(file, which, emit_quotient, format);
    }
    if (*groupoid) {
      return cmd_groupoid(file, restriction, quotient, emit_groupoid, format);
    }
    return cmd_verify(file, theorem, budget, seed, format);
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
