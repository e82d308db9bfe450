#include "jordan/cli/app.hpp"

#include <chrono>
#include <filesystem>
#include <iomanip>
#include <ostream>

#include "CLI11.hpp"
#include "jordan/catalog/catalog.hpp"
#include "jordan/classify/classify.hpp"
#include "jordan/cli/cache.hpp"
#include "jordan/errors.hpp"
#include "jordan/group/io.hpp"
#include "jordan/numfield/mq_element.hpp"

namespace jordan::cli {

namespace {

constexpr int kWitnessHeight = 3;

template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "error: " << e.annotated() << "\n";
    return kExitParse;
  } catch (const UnsupportedField& e) {
    err << "error: unsupported field: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << " (raise it with --cap)\n";
    return kExitCap;
  } catch (const InvalidSpec& e) {
    err << "error: invalid group: " << e.what() << "\n";
    return kExitParse;
  } catch (const ZeroInput& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUnsupported;
  }
}

std::string yes(bool b) { return b ? "yes" : "no"; }

struct ResolvedGroup {
  std::string label;
  GroupPtr group;
};

ResolvedGroup resolve_group(const std::string& text, std::size_t cap) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (text.ends_with(".perm") || fs::is_regular_file(text, ec)) {
    PermFile file = read_perm_file(text);
    std::vector<GroupElement> gens(file.generators.begin(), file.generators.end());
    if (gens.empty()) gens.push_back(GroupElement(Permutation::identity(file.degree)));
    return {"perm:" + fs::path(text).filename().string(), FiniteGroup::closure(std::move(gens), cap)};
  }
  SpecPtr spec = parse_group_spec(text);
  return {to_string(*spec), build(*spec, cap)};
}

JordanCertificate certificate_for(const ResolvedGroup& g, CertificateCache& cache, bool& hit) {
  const std::string key = group_fingerprint(g.label, *g.group);
  if (auto cached = cache.lookup(key, g.group)) {
    hit = true;
    return *cached;
  }
  hit = false;
  JordanCertificate cert = jordan_constant(g.group);
  cache.store(key, cert);
  return cert;
}

std::string predicate_line(const FieldPredicates& p) {
  return "sqrt5=" + std::string(p.has_sqrt5 ? "true" : "false") +
         " sqrt-7=" + (p.has_sqrt_minus7 ? "true" : "false") + " omega=" + (p.has_omega ? "true" : "false") +
         " minus_one_sum_two_squares=" + (p.minus_one_sum_two_squares ? "true" : "false") +
         " formally_real=" + (p.formally_real ? "true" : "false");
}

// How sqrt(m) is obtained from the generators, e.g. "sqrt(-7)*sqrt(5)".
std::string membership_evidence(const FieldDescriptor& k, std::int64_t m) {
  if (!k.is_exact()) return contains_sqrt(k, m) ? "fixed" : "absent";
  if (!contains_sqrt(k, m)) return "absent";
  return "sqrt(" + std::to_string(m) + ") = " + sqrt_element(k, m)->to_string();
}

}  // namespace

int cmd_classify(const CliConfig& config, const std::string& field, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const FieldDescriptor k = parse_field(field);
    if (config.verbosity > 0)
      for (const auto& w : k.warnings) err << "warning: " << w << "\n";
    const Classification c = jordan_cr2(k);
    if (config.json) {
      nlohmann::json j = {{"field", k.to_string()},
                          {"value", c.value},
                          {"predicates", predicates_to_json(c.predicates)},
                          {"j_dp", bound_to_json(c.dp)},
                          {"conic_bundle_cap", bound_to_json(c.cap)},
                          {"trace", trace_to_json(c.trace)},
                          {"warnings", k.warnings}};
      out << j.dump(2) << "\n";
    } else {
      out << "field: " << k.to_string() << "\n";
      out << "J(Cr2(K)) = " << c.value << "\n";
      out << "predicates: " << predicate_line(c.predicates) << "\n";
      out << "trace:\n";
      for (const auto& r : c.trace) {
        out << "  [" << r.statement << "] " << r.conclusion << "\n";
        out << "      rule: " << r.quote << "\n";
        if (!r.inputs.empty()) {
          out << "      from: ";
          for (std::size_t i = 0; i < r.inputs.size(); ++i)
            out << (i ? "; " : "") << r.inputs[i].first << ": " << r.inputs[i].second;
          out << "\n";
        }
      }
    }
    return int(kExitOk);
  });
}

int cmd_jconst(const CliConfig& config, const std::string& group, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ResolvedGroup g = resolve_group(group, config.element_cap);
    CertificateCache cache(config.use_cache ? config.cache_path : "");
    if (config.verbosity > 0 && config.use_cache && !cache.enabled())
      err << "note: cache unavailable (locked or unwritable); computing without it\n";
    bool hit = false;
    const auto start = std::chrono::steady_clock::now();
    const JordanCertificate cert = certificate_for(g, cache, hit);
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (config.verbosity > 0) {
      err << "cache: " << (cache.enabled() ? (hit ? "hit" : "miss") : "off");
      if (cache.discarded()) err << " (" << cache.discarded() << " corrupt entries discarded)";
      err << ", " << std::fixed << std::setprecision(1) << ms << " ms\n";
    }
    if (config.json) {
      out << nlohmann::json{{"group", g.label}, {"certificate", certificate_to_json(cert)}}.dump(2) << "\n";
    } else {
      out << "group: " << g.label << "\n";
      out << "order: " << cert.group_order << "\n";
      out << "jordan constant: " << cert.constant << "\n";
      out << "witness: order " << cert.witness.order() << ", index " << cert.witness.index() << ", generators";
      const auto gens = cert.witness.generator_elements();
      if (gens.empty()) out << " (trivial)";
      for (std::size_t i = 0; i < gens.size(); ++i) out << (i ? ", " : " ") << gens[i].to_string();
      out << "\n";
      out << "checks: abelian " << yes(cert.checks.witness_is_abelian) << ", normal "
          << yes(cert.checks.witness_is_normal) << ", index " << yes(cert.checks.index_equals_constant)
          << ", exhaustive " << yes(cert.checks.search_was_exhaustive) << "\n";
    }
    return int(kExitOk);
  });
}

int cmd_predicates(const CliConfig& config, const std::string& field, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const FieldDescriptor k = parse_field(field);
    if (config.verbosity > 0)
      for (const auto& w : k.warnings) err << "warning: " << w << "\n";
    const FieldPredicates p = field_predicates(k);

    nlohmann::json classes = nlohmann::json::array();
    for (std::int64_t d : k.generators) classes.push_back({{"generator", d}, {"class", two_adic_class(d).to_string()}});
    const auto witness = witness_search(k, kWitnessHeight);
    if (witness && !p.minus_one_sum_two_squares)
      throw std::logic_error("witness found although the predicate is false");

    nlohmann::json evidence = {{"sqrt5", membership_evidence(k, 5)},
                               {"sqrt-7", membership_evidence(k, -7)},
                               {"sqrt-3", membership_evidence(k, -3)}};
    if (k.is_exact()) {
      evidence["two_adic_classes"] = classes;
      evidence["two_adic_subgroup_order"] = two_adic_subgroup_order(k);
    }
    if (witness)
      evidence["witness"] = {{"a", witness->a.to_string()}, {"b", witness->b.to_string()}, {"source", witness->source}};

    if (config.json) {
      out << nlohmann::json{{"field", k.to_string()}, {"predicates", predicates_to_json(p)}, {"evidence", evidence}}
                 .dump(2)
          << "\n";
    } else {
      out << "field: " << k.to_string() << "\n";
      out << "has_sqrt5: " << (p.has_sqrt5 ? "true" : "false") << "  (" << evidence["sqrt5"].get<std::string>()
          << ")\n";
      out << "has_sqrt_minus7: " << (p.has_sqrt_minus7 ? "true" : "false") << "  ("
          << evidence["sqrt-7"].get<std::string>() << ")\n";
      out << "has_omega: " << (p.has_omega ? "true" : "false") << "  (" << evidence["sqrt-3"].get<std::string>()
          << ")\n";
      out << "minus_one_sum_two_squares: " << (p.minus_one_sum_two_squares ? "true" : "false") << "\n";
      out << "formally_real: " << (p.formally_real ? "true" : "false") << "\n";
      if (k.is_exact()) {
        out << "2-adic classes:";
        for (std::int64_t d : k.generators) out << " " << d << "->" << two_adic_class(d).to_string();
        out << "; subgroup order " << two_adic_subgroup_order(k) << "\n";
      }
      if (witness)
        out << "witness: a = " << witness->a.to_string() << ", b = " << witness->b.to_string() << "  ["
            << witness->source << "]\n";
    }
    return int(kExitOk);
  });
}

int cmd_verify(const CliConfig& config, std::ostream& out, std::ostream& err, VerifyOptions options) {
  return guarded(err, [&] {
    options.seed = config.seed;
    CertificateCache cache(config.use_cache ? config.cache_path : "");
    if (!options.jordan) {
      options.jordan = [&](const std::string& spec) {
        SpecPtr s = parse_group_spec(spec);
        ResolvedGroup g{to_string(*s), build(*s, config.element_cap)};
        bool hit = false;
        return certificate_for(g, cache, hit);
      };
    }
    const auto rows = run_verify_suite(options);
    std::size_t failed = 0;
    for (const auto& r : rows) failed += !r.pass;

    if (config.json) {
      nlohmann::json j = nlohmann::json::array();
      for (const auto& r : rows)
        j.push_back({{"id", r.id}, {"claim", r.claim}, {"expected", r.expected}, {"actual", r.actual}, {"pass", r.pass}});
      out << nlohmann::json{{"rows", j}, {"passed", rows.size() - failed}, {"failed", failed}, {"ok", failed == 0}}
                 .dump(2)
          << "\n";
    } else {
      std::size_t width = 0;
      for (const auto& r : rows) width = std::max(width, r.id.size());
      for (const auto& r : rows) {
        out << (r.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(width)) << r.id << "  "
            << r.actual;
        if (!r.pass) out << "  (expected " << r.expected << ")";
        out << "\n";
        if (config.verbosity > 0 || !r.pass) out << "      " << r.claim << "\n";
      }
      out << rows.size() - failed << " passed, " << failed << " failed\n";
    }
    for (const auto& r : rows)
      if (!r.pass) err << "verify failed: " << r.id << ": " << r.claim << "\n";
    return failed == 0 ? int(kExitOk) : int(kExitVerifyFailed);
  });
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Jordan constants of finite groups and of plane Cremona groups"};
  app.require_subcommand(1);

  CliConfig config;
  bool no_cache = false;
  app.add_flag("--json", config.json, "Emit JSON");
  app.add_option("--cache", config.cache_path, "Certificate cache file")->capture_default_str();
  app.add_flag("--no-cache", no_cache, "Do not read or write the cache");
  app.add_option("--cap", config.element_cap, "Element cap for group closures")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--seed", config.seed, "Seed for randomized checks")->capture_default_str();
  app.add_flag("-v", config.verbosity, "More output (repeatable)");

  std::string field, group;
  auto* classify = app.add_subcommand("classify", "J(Cr2(K)) for a field K");
  classify->add_option("field", field, "Q, R, C or Q(sqrt(d),...)")->required();
  auto* jconst = app.add_subcommand("jconst", "Jordan constant of a finite group");
  jconst->add_option("group", group, "Group spec (S4, A5wr2, S4xC5, ...) or .perm file")->required();
  auto* predicates = app.add_subcommand("predicates", "Field predicates with evidence");
  predicates->add_option("field", field, "Q, R, C or Q(sqrt(d),...)")->required();
  auto* verify = app.add_subcommand("verify", "Run the reproduction suite");
  for (auto* sub : {classify, jconst, predicates, verify}) sub->fallthrough();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    if (!app.get_subcommands().empty()) err << app.get_subcommands().front()->help();
    return kExitParse;
  }
  if (no_cache) config.use_cache = false;

  if (classify->parsed()) return cmd_classify(config, field, out, err);
  if (jconst->parsed()) return cmd_jconst(config, group, out, err);
  if (predicates->parsed()) return cmd_predicates(config, field, out, err);
  return cmd_verify(config, out, err);
}

}  // namespace jordan::cli
