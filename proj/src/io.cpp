#include "gf/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "gf/presented.hpp"

namespace gf {

  namespace {
    [[noreturn]] void fail(std::string const& origin, std::string const& field,
                           std::string const& what) {
      throw ParseError(origin + ": field '" + field + "': " + what);
    }

    json const& field(json const& j, std::string const& origin, std::string const& key) {
      if (!j.is_object() || !j.contains(key)) {
        fail(origin, key, "missing");
      }
      return j.at(key);
    }

    template <typename T>
    T get(json const& j, std::string const& origin, std::string const& path) {
      try {
        return j.get<T>();
      } catch (json::exception const& e) {
        fail(origin, path, e.what());
      }
    }

    std::vector<PartialBijection> parse_generators(json const&        j,
                                                   std::size_t        degree,
                                                   std::string const& origin) {
      if (!j.is_array() || j.empty()) {
        fail(origin, "generators", "expected a nonempty array");
      }
      std::vector<PartialBijection> out;
      for (std::size_t g = 0; g < j.size(); ++g) {
        std::string const path   = "generators[" + std::to_string(g) + "]";
        auto const        images = get<std::vector<long long>>(j[g], origin, path);
        if (images.size() != degree) {
          fail(origin, path, "expected " + std::to_string(degree) + " images");
        }
        std::vector<std::size_t> im;
        for (long long v : images) {
          if (v < -1 || v >= static_cast<long long>(degree)) {
            fail(origin, path, "image " + std::to_string(v) + " out of range");
          }
          im.push_back(v == -1 ? undefined : static_cast<std::size_t>(v));
        }
        try {
          out.emplace_back(std::move(im));
        } catch (Error const& e) {
          fail(origin, path, e.what());
        }
      }
      return out;
    }

    FiniteInverseSemigroup parse_table(json const& j, std::string const& origin) {
      auto const names = get<std::vector<std::string>>(field(j, origin, "elements"), origin,
                                                        "elements");
      auto const raw = get<std::vector<std::vector<long long>>>(field(j, origin, "table"),
                                                                origin, "table");
      std::size_t const n = names.size();
      if (raw.size() != n) {
        fail(origin, "table", "expected " + std::to_string(n) + " rows");
      }
      std::vector<std::vector<element_id>> table(n);
      for (std::size_t s = 0; s < n; ++s) {
        if (raw[s].size() != n) {
          fail(origin, "table[" + std::to_string(s) + "]",
               "expected " + std::to_string(n) + " entries");
        }
        for (long long v : raw[s]) {
          if (v < 0 || v >= static_cast<long long>(n)) {
            fail(origin, "table[" + std::to_string(s) + "]",
                 "entry " + std::to_string(v) + " out of range");
          }
          table[s].push_back(static_cast<element_id>(v));
        }
      }
      std::optional<std::vector<element_id>> inverse;
      if (j.contains("inverse")) {
        auto const inv = get<std::vector<long long>>(j.at("inverse"), origin, "inverse");
        if (inv.size() != n) {
          fail(origin, "inverse", "expected " + std::to_string(n) + " entries");
        }
        inverse.emplace();
        for (long long v : inv) {
          if (v < 0 || v >= static_cast<long long>(n)) {
            fail(origin, "inverse", "entry " + std::to_string(v) + " out of range");
          }
          inverse->push_back(static_cast<element_id>(v));
        }
      }
      return FiniteInverseSemigroup(names, table, inverse);
    }
  }  // namespace

  Instance parse_instance(json const& j, std::string const& origin) {
    Instance out;
    out.name               = get<std::string>(field(j, origin, "name"), origin, "name");
    std::string const kind = get<std::string>(field(j, origin, "kind"), origin, "kind");
    if (kind == "table") {
      out.semigroup = parse_table(j, origin);
    } else if (kind == "partial_bijections") {
      auto const degree = get<std::size_t>(field(j, origin, "degree"), origin, "degree");
      out.semigroup     = generate_from_partial_bijections(
          parse_generators(field(j, origin, "generators"), degree, origin));
    } else if (kind == "presented") {
      auto const which = get<std::string>(field(j, origin, "presented"), origin, "presented");
      if (which == "fcis") {
        auto const alphabet
            = get<std::string>(field(j, origin, "alphabet"), origin, "alphabet");
        if (alphabet.empty() || alphabet.size() > max_alphabet) {
          fail(origin, "alphabet", "expected 1 to " + std::to_string(max_alphabet) + " letters");
        }
        out.presented = PresentedSpec{PresentedSpec::Kind::fcis, alphabet.size(), alphabet};
      } else if (which == "cuntz") {
        auto const n = get<std::size_t>(field(j, origin, "n"), origin, "n");
        if (n == 0) {
          fail(origin, "n", "expected n >= 1");
        }
        out.presented = PresentedSpec{PresentedSpec::Kind::cuntz, n, ""};
      } else {
        fail(origin, "presented", "unknown presentation '" + which + "'");
      }
    } else {
      fail(origin, "kind", "unknown kind '" + kind + "'");
    }

    if (j.contains("congruences")) {
      if (!out.semigroup) {
        fail(origin, "congruences", "only finite semigroups carry congruences");
      }
      auto const& S  = *out.semigroup;
      auto const& cs = j.at("congruences");
      if (!cs.is_object()) {
        fail(origin, "congruences", "expected an object");
      }
      for (auto const& [name, pairs] : cs.items()) {
        std::string const path = "congruences." + name;
        auto const raw = get<std::vector<std::pair<std::string, std::string>>>(pairs, origin, path);
        PairList   list;
        for (auto const& [a, b] : raw) {
          try {
            list.emplace_back(S.index_of(a), S.index_of(b));
          } catch (std::out_of_range const&) {
            fail(origin, path, "unknown element in pair (" + a + ", " + b + ")");
          }
        }
        out.congruences.push_back({name, close(S, list)});
      }
    }
    return out;
  }

  Instance load_instance(std::filesystem::path const& file) {
    std::ifstream in(file);
    if (!in) {
      throw ParseError(file.string() + ": cannot open");
    }
    json j;
    try {
      j = json::parse(in);
    } catch (json::parse_error const& e) {
      throw ParseError(file.string() + ": " + e.what());
    }
    return parse_instance(j, file.string());
  }

  std::vector<Instance> load_corpus(std::filesystem::path const& path) {
    if (!std::filesystem::is_directory(path)) {
      return {load_instance(path)};
    }
    std::vector<std::filesystem::path> files;
    for (auto const& entry : std::filesystem::directory_iterator(path)) {
      if (entry.is_regular_file() && entry.path().extension() == ".json") {
        files.push_back(entry.path());
      }
    }
    std::sort(files.begin(), files.end());
    std::vector<Instance> out;
    for (auto const& f : files) {
      out.push_back(load_instance(f));
    }
    return out;
  }

  Congruence const& find_congruence(Instance const& instance, std::string const& name) {
    for (auto const& c : instance.congruences) {
      if (c.name == name) {
        return c.congruence;
      }
    }
    throw UnknownCongruenceName("no congruence named '" + name + "' in " + instance.name);
  }

  json semigroup_to_json(FiniteInverseSemigroup const& S) {
    json table = json::array();
    for (element_id s = 0; s < S.size(); ++s) {
      json row = json::array();
      for (element_id t = 0; t < S.size(); ++t) {
        row.push_back(S.product(s, t));
      }
      table.push_back(std::move(row));
    }
    json out = {{"elements", S.names()}, {"table", table}, {"inverse", S.inverses()}};
    out["zero"] = S.zero() ? json(S.name(*S.zero())) : json(nullptr);
    out["one"]  = S.one() ? json(S.name(*S.one())) : json(nullptr);
    return out;
  }

  json partition_to_json(FiniteInverseSemigroup const& S, Congruence const& c) {
    json classes = json::array();
    for (auto const& cls : c.classes()) {
      json names = json::array();
      for (element_id s : cls) {
        names.push_back(S.name(s));
      }
      classes.push_back(std::move(names));
    }
    return {{"classes", classes}, {"number_of_classes", c.number_of_classes()}};
  }

  json groupoid_to_json(FiniteGroupoid const& G) {
    json arrows  = json::array();
    json compose = json::array();
    for (arrow_id a = 0; a < G.size(); ++a) {
      arrows.push_back({{"label", G.label(a)},
                        {"unit", G.is_unit(a)},
                        {"source", G.source(a)},
                        {"range", G.range(a)},
                        {"inverse", G.inverse(a)}});
      for (arrow_id b = 0; b < G.size(); ++b) {
        if (arrow_id ab = G.compose(a, b); ab != undefined) {
          compose.push_back({a, b, ab});
        }
      }
    }
    return {{"arrows", arrows}, {"compose", compose}};
  }

  FiniteGroupoid groupoid_from_json(json const& j) {
    std::string const origin = "<groupoid>";
    auto const&       arrows = field(j, origin, "arrows");
    std::size_t const m      = arrows.size();
    std::vector<std::string> labels;
    std::vector<arrow_id>    source, range, inverse, compose(m * m, undefined);
    for (std::size_t a = 0; a < m; ++a) {
      std::string const path = "arrows[" + std::to_string(a) + "]";
      labels.push_back(get<std::string>(field(arrows[a], origin, "label"), origin, path));
      source.push_back(get<arrow_id>(field(arrows[a], origin, "source"), origin, path));
      range.push_back(get<arrow_id>(field(arrows[a], origin, "range"), origin, path));
      inverse.push_back(get<arrow_id>(field(arrows[a], origin, "inverse"), origin, path));
    }
    for (auto const& t : field(j, origin, "compose")) {
      auto const abc = get<std::vector<arrow_id>>(t, origin, "compose");
      if (abc.size() != 3 || abc[0] >= m || abc[1] >= m) {
        fail(origin, "compose", "expected [a, b, ab] with arrows in range");
      }
      compose[abc[0] * m + abc[1]] = abc[2];
    }
    return FiniteGroupoid(std::move(labels), std::move(source), std::move(range),
                          std::move(compose), std::move(inverse));
  }

  json report_to_json(TheoremReport const& r) {
    json out = {{"theorem", r.theorem},
                {"semigroup", r.semigroup},
                {"congruence", r.congruence},
                {"verdict", to_string(r.verdict)},
                {"checks", r.checks},
                {"notes", r.notes},
                {"search_nodes", r.nodes},
                {"wall_time_ms", r.wall_time_ms}};
    out["certificate"] = r.certificate ? json(*r.certificate) : json(nullptr);
    out["refutation"]  = r.refutation.empty() ? json(nullptr) : json(r.refutation);
    return out;
  }

  std::string report_to_text(TheoremReport const& r) {
    std::ostringstream os;
    os << to_string(r.verdict) << "  " << r.theorem << "  " << r.semigroup;
    if (!r.congruence.empty()) {
      os << "  [" << r.congruence << "]";
    }
    if (!r.refutation.empty()) {
      os << "\n    " << r.refutation;
    }
    for (auto const& n : r.notes) {
      os << "\n    note: " << n;
    }
    return os.str();
  }

}  // namespace gf
