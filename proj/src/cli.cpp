#include "belted/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "belted/belts.hpp"
#include "belted/betti.hpp"
#include "belted/builders.hpp"
#include "belted/canonical.hpp"
#include "belted/generator.hpp"
#include "belted/io.hpp"
#include "belted/quasitoric.hpp"
#include "belted/transform.hpp"

namespace belted::cli {

using nlohmann::json;

namespace {

// Bad input or an unmet precondition: exit 1.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool has_prefix(const std::string& s, std::string_view prefix) { return s.rfind(prefix, 0) == 0; }

int parse_count(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError("bad " + what + ": " + text);
}

json f_json(const Polytope& p) {
  auto f = p.f_vector();
  return json::array({f.f0, f.f1, f.f2});
}

json p_json(const Polytope& p) {
  json out = json::object();
  for (auto [k, n] : p.p_vector().counts) out[std::to_string(k)] = n;
  return out;
}

json belts_json(const std::vector<Belt>& belts) {
  json out = json::array();
  for (const auto& b : belts) out.push_back(b.facets);
  return out;
}

std::string digest_hex(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

struct Context {
  std::vector<std::string> args;
  int threads = 0;
  bool report = false;
  std::string digest_source;  // bytes hashed into the report's input digest
  std::string failure;        // set when the payload is printed but the run fails
};

Polytope load_for(Context& ctx, const std::string& input) {
  Polytope p = load(input);
  ctx.digest_source = io::to_json(p);
  return p;
}

json cmd_validate(Context& ctx, const std::string& input) {
  std::vector<Cycle> facets;
  std::string source = read_source(input);
  if (source.empty() || has_prefix(source, std::string(io::kPlanarCodeHeader))) {
    facets = load(input).facets();
  } else {
    facets = io::parse_json_facets(source);
  }
  ctx.digest_source = source.empty() ? io::to_json(Polytope(facets)) : source;
  auto report = validate(facets);
  json checks = json::array();
  for (const auto& c : report.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  json out{{"valid", report.ok()}, {"checks", checks}};
  if (!report.ok()) {
    const auto* f = report.first_failure();
    ctx.failure = "validation failed at " + f->name + ": " + f->detail;
    return out;
  }
  out["f"] = f_json(Polytope(facets));
  return out;
}

json cmd_invariants(Context& ctx, const std::string& input) {
  auto p = load_for(ctx, input);
  auto nerve = NerveComplex::of(p);
  json belts = json::object();
  for (int k = 3; k <= 5; ++k) belts[std::to_string(k)] = k_belts(p, k).size();
  return {
      {"f", f_json(p)},
      {"p", p_json(p)},
      {"hexagon_balance", p.p_vector().satisfies_hexagon_balance()},
      {"flag", is_flag(p)},
      {"chiral", is_combinatorially_chiral(p)},
      {"canonical", canonical_code(p, true).hex()},
      {"h", h_vector(nerve, 3)},
      {"belt_counts", belts},
      {"class", to_string(classify(p).kind)},
  };
}

json cmd_belts(Context& ctx, const std::string& input, std::vector<int> ks) {
  auto p = load_for(ctx, input);
  if (ks.empty()) ks = {3, 4, 5};
  json counts = json::object(), lists = json::object();
  for (int k : ks) {
    if (k < 3) throw UsageError("belt length must be at least 3");
    auto b = k_belts(p, k);
    counts[std::to_string(k)] = b.size();
    lists[std::to_string(k)] = belts_json(b);
  }
  return {{"counts", counts}, {"belts", lists}};
}

json cmd_classify(Context& ctx, const std::string& input) {
  auto p = load_for(ctx, input);
  auto c = classify(p);
  json out{{"class", to_string(c.kind)}, {"in_family", c.in_family()}, {"detail", c.detail}, {"flag", is_flag(p)}};
  if (c.kind == ClassKind::SingularHept) out["vacuous_pentagon_clause"] = c.vacuous_pentagon_clause;
  if (c.kind == ClassKind::Fullerene) {
    auto fb = five_belt_structure(p);
    out["five_belts"] = fb.count;
    out["d_k"] = fb.dk_index ? json(*fb.dk_index) : json(nullptr);
  }
  return out;
}

json cmd_betti(Context& ctx, const std::string& input, const std::string& mode, const std::vector<std::string>& checks,
               bool graded, bool per_omega) {
  BettiOptions opts;
  opts.threads = ctx.threads;
  if (mode == "full") {
    opts.mode = BettiMode::Full;
  } else if (mode == "shortcuts") {
    opts.mode = BettiMode::Shortcuts;
  } else if (has_prefix(mode, "j")) {
    opts.mode = BettiMode::UpToJ;
    opts.j_max = parse_count(mode.substr(1), "mode");
  } else {
    throw UsageError("unknown betti mode: " + mode);
  }

  std::optional<NerveComplex> nerve;
  int n = 3;
  BettiTable table;
  if (has_prefix(input, "polygon:")) {
    int k = parse_count(input.substr(8), "polygon size");
    if (k < 3) throw UsageError("polygon needs at least 3 sides");
    if (opts.mode == BettiMode::Shortcuts) throw UsageError("shortcuts need a 3-polytope");
    nerve = NerveComplex::polygon(k);
    n = 2;
    ctx.digest_source = input;
    table = betti_bigraded(*nerve, n, opts);
  } else {
    auto p = load_for(ctx, input);
    if (opts.mode == BettiMode::Full && p.facet_count() > kFullSweepLimit)
      throw UsageError("full sweep supports at most " + std::to_string(kFullSweepLimit) + " facets");
    nerve = NerveComplex::of(p);
    table = opts.mode == BettiMode::Shortcuts ? betti_bigraded(p, opts) : betti_bigraded(*nerve, n, opts);
  }

  json out = json::object();
  for (auto [key, r] : table.ranks) out[betti_key(key.first, key.second)] = r;
  if (opts.mode != BettiMode::Shortcuts) out["torsion_free"] = table.torsion_free();
  if (graded) {
    if (opts.mode != BettiMode::Full) throw UsageError("--graded needs --mode full");
    out["graded"] = table.graded_ranks();
  }
  if (per_omega) {
    if (opts.mode == BettiMode::Shortcuts) throw UsageError("--per-omega needs a sweep mode");
    json list = json::array();
    for (const auto& ob : table.per_omega) {
      std::vector<int> facets;
      for (int i = 0; i < table.m; ++i)
        if (ob.omega >> i & 1) facets.push_back(i);
      json ranks = json::object(), torsion = json::object();
      for (auto [i, r] : ob.rank) ranks[std::to_string(i)] = r;
      for (const auto& [i, t] : ob.torsion) {
        json ts = json::array();
        for (const auto& d : t) ts.push_back(d.get_str());
        torsion[std::to_string(i)] = ts;
      }
      json entry{{"omega", facets}, {"ranks", ranks}};
      if (!torsion.empty()) entry["torsion"] = torsion;
      list.push_back(entry);
    }
    out["per_omega"] = list;
  }
  if (!checks.empty()) {
    if (opts.mode != BettiMode::Full) throw UsageError("--check needs --mode full");
    json c = json::object();
    for (const auto& name : checks) {
      bool ok;
      if (name == "duality") ok = poincare_check(table);
      else if (name == "identity") ok = poly_identity_check(*nerve, table);
      else throw UsageError("unknown check: " + name);
      if (!ok) throw IdentityViolation("betti check failed: " + name);
      c[name] = ok;
    }
    out["checks"] = c;
  }
  return out;
}

json cmd_transform(Context& ctx, const std::string& input, const std::string& op, const std::vector<int>& cut,
                   const std::vector<int>& pair) {
  auto p = load_for(ctx, input);
  Polytope q = p;
  json out = json::object();
  if (op == "chamfer") {
    q = chamfer(p);
  } else if (op == "leapfrog") {
    q = leapfrog(p);
  } else if (op == "truncate") {
    if (cut.size() != 3) throw UsageError("truncate needs --cut facet,start,s");
    TruncationSpec spec{cut[0], cut[1], cut[2]};
    auto sig = signature(p, spec);
    q = sk_truncate(p, spec);
    out["signature"] = {{"s", sig.s}, {"k", sig.k}, {"m1", sig.m1}, {"m2", sig.m2}};
  } else if (op == "straighten") {
    if (pair.size() != 2) throw UsageError("straighten needs --pair i,j");
    auto r = straighten(p, pair[0], pair[1]);
    if (!r.ok()) throw UsageError("straighten: obstruction " + to_string(r.obstruction));
    q = *r.polytope;
    out["loses_flagness"] = r.loses_flagness;
  } else {
    throw UsageError("unknown operation: " + op);
  }
  out["f"] = f_json(q);
  out["p"] = p_json(q);
  out["facets"] = q.facets();
  return out;
}

json cmd_generate(Context& ctx, int p6_max, bool chiral, const std::string& emit_dir) {
  if (p6_max < 0) throw UsageError("--p6-max must be non-negative");
  GeneratorOptions opts;
  opts.chiral = chiral;
  opts.threads = ctx.threads;
  auto cat = generate(p6_max, opts);
  ctx.digest_source = "generate:" + std::to_string(p6_max);
  auto keyed = [](const std::map<int, long>& m) {
    json o = json::object();
    for (auto [k, v] : m) o[std::to_string(k)] = v;
    return o;
  };
  json out{{"counts", keyed(cat.reported())},
           {"counts_mirror_identified", keyed(cat.counts)},
           {"counts_enantiomers", keyed(cat.chiral_counts)},
           {"level_sizes", keyed(cat.level_sizes)},
           {"truncations_applied", cat.truncations_applied}};
  if (!emit_dir.empty()) {
    std::filesystem::create_directories(emit_dir);
    json files = json::array();
    for (const auto& [p6, list] : cat.fullerenes) {
      if (list.empty()) continue;
      std::string name = "p6_" + std::to_string(p6) + ".planar_code";
      std::ofstream f(std::filesystem::path(emit_dir) / name, std::ios::binary);
      if (!f) throw UsageError("cannot write to " + emit_dir);
      f << io::kPlanarCodeHeader;
      for (const auto& p : list) f << io::to_planar_code(p).substr(io::kPlanarCodeHeader.size());
      files.push_back(name);
    }
    out["files"] = files;
  }
  return out;
}

json cmd_quasitoric(Context& ctx, const std::string& input, std::vector<std::string> emit) {
  auto p = load_for(ctx, input);
  if (emit.empty()) emit = {"lambda", "sr", "ranks", "chern"};
  auto cm = char_matrix(p);
  json out = json::object();
  for (const auto& what : emit) {
    if (what == "lambda") {
      json rows = json::array();
      for (Eigen::Index r = 0; r < cm.lambda.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < cm.lambda.cols(); ++c) row.push_back(cm.lambda(r, c).get_si());
        rows.push_back(row);
      }
      out["lambda"] = rows;
      out["coloring"] = cm.coloring;
    } else if (what == "sr") {
      json rel = json::array();
      for (Mask s : presentation(p, cm).sr_relations) rel.push_back(monomial_text(s));
      out["sr"] = rel;
    } else if (what == "ranks") {
      auto r = cohomology_ranks(presentation(p, cm));
      long m = p.facet_count();
      if (r != std::vector<long>{1, m - 3, m - 3, 1, 0}) throw IdentityViolation("quasitoric ranks differ from (1, m-3, m-3, 1)");
      r.pop_back();
      out["ranks"] = r;
    } else if (what == "chern") {
      auto cc = char_class_presentation(p, cm);
      json coeff = json::array();
      for (const auto& c : cc.c1) coeff.push_back(c.get_si());
      out["c1"] = cc.c1_text;
      out["c1_coefficients"] = coeff;
      out["chern"] = cc.chern_text;
      out["pontryagin"] = cc.pontryagin_text;
    } else {
      throw UsageError("unknown --emit value: " + what);
    }
  }
  return out;
}

std::string cmd_export(Context& ctx, const std::string& input, const std::string& format) {
  auto p = load_for(ctx, input);
  if (format == "json") return io::to_json(p) + "\n";
  if (format == "dot") return io::to_dot(p);
  if (format == "planar_code") {
    if (ctx.report) throw UsageError("--report cannot wrap binary planar_code output");
    return io::to_planar_code(p);
  }
  throw UsageError("unknown export format: " + format);
}

}  // namespace

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string read_source(const std::string& input) {
  static const char* builtins[] = {"simplex", "tetrahedron", "cube", "dodecahedron", "barrel", "c60"};
  for (const char* b : builtins)
    if (input == b) return {};
  if (has_prefix(input, "d_k:") || has_prefix(input, "prism:")) return {};
  std::ostringstream buf;
  if (input == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream f(input, std::ios::binary);
    if (!f) throw UsageError("cannot open " + input);
    buf << f.rdbuf();
  }
  return buf.str();
}

Polytope load(const std::string& input) {
  if (input == "simplex" || input == "tetrahedron") return build::simplex();
  if (input == "cube") return build::cube();
  if (input == "dodecahedron") return build::dodecahedron();
  if (input == "barrel") return build::barrel();
  if (input == "c60") return build::c60();
  if (has_prefix(input, "d_k:")) {
    int k = parse_count(input.substr(4), "d_k index");
    if (k < 0) throw UsageError("d_k index must be non-negative");
    return build::d_k(k);
  }
  if (has_prefix(input, "prism:")) {
    int k = parse_count(input.substr(6), "prism size");
    if (k < 3) throw UsageError("prism needs k >= 3");
    return build::prism(k);
  }
  return io::parse_auto(read_source(input));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Combinatorics of simple 3-polytopes and fullerenes", "belted"};
  app.set_version_flag("--version", BELTED_VERSION);
  app.require_subcommand(1);
  app.fallthrough();

  Context ctx;
  ctx.args = args;
  app.add_option("--threads", ctx.threads, "Worker threads for betti/generate (0: all cores)")->check(CLI::NonNegativeNumber);
  app.add_flag("--report", ctx.report, "Wrap the result with command, input digest, version and timing");

  std::string input, mode = "full", op, format = "json", emit_dir;
  std::vector<int> ks, cut, pair;
  std::vector<std::string> checks, emit;
  bool graded = false, per_omega = false, chiral = false;
  int p6_max = 0;

  auto with_input = [&](CLI::App* sub) {
    sub->add_option("input", input, "Built-in name, file (JSON or planar_code) or - for stdin")->required();
    return sub;
  };
  auto* validate_cmd = with_input(app.add_subcommand("validate", "Run every structural check"));
  auto* invariants_cmd = with_input(app.add_subcommand("invariants", "f-, p-, h-vectors, flagness, chirality, canonical code"));
  auto* belts_cmd = with_input(app.add_subcommand("belts", "List k-belts"));
  belts_cmd->add_option("--k", ks, "Belt lengths (default 3,4,5)")->delimiter(',');
  auto* classify_cmd = with_input(app.add_subcommand("classify", "Singular fullerene family membership"));
  auto* betti_cmd = with_input(app.add_subcommand("betti", "Bigraded Betti numbers of the moment-angle complex"));
  betti_cmd->add_option("--mode", mode, "full | shortcuts | j<k>");
  betti_cmd->add_option("--check", checks, "duality,identity (full mode)")->delimiter(',');
  betti_cmd->add_flag("--graded", graded, "Also emit total ranks per degree (full mode)");
  betti_cmd->add_flag("--per-omega", per_omega, "Also emit the nonzero ranks of every ω");
  auto* transform_cmd = with_input(app.add_subcommand("transform", "Apply a transformation"));
  transform_cmd->add_option("--op", op, "chamfer | leapfrog | truncate | straighten")->required();
  transform_cmd->add_option("--cut", cut, "truncate: facet,start,s")->delimiter(',');
  transform_cmd->add_option("--pair", pair, "straighten: i,j")->delimiter(',');
  auto* generate_cmd = app.add_subcommand("generate", "Enumerate fullerenes by number of hexagons");
  generate_cmd->add_option("--p6-max", p6_max, "Largest number of hexagons")->required();
  generate_cmd->add_flag("--chiral", chiral, "Count enantiomers separately");
  generate_cmd->add_option("--emit-dir", emit_dir, "Write one planar_code file per p6");
  auto* quasitoric_cmd = with_input(app.add_subcommand("quasitoric", "Characteristic matrix and cohomology presentation"));
  quasitoric_cmd->add_option("--emit", emit, "lambda,sr,ranks,chern (default all)")->delimiter(',');
  auto* export_cmd = with_input(app.add_subcommand("export", "Write the polytope in another format"));
  export_cmd->add_option("--format", format, "json | dot | planar_code");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  auto start = std::chrono::steady_clock::now();
  try {
    json result;
    if (export_cmd->parsed()) {
      std::string text = cmd_export(ctx, input, format);
      if (!ctx.report) {
        out << text;
        return 0;
      }
      result = text;
    } else if (validate_cmd->parsed()) {
      result = cmd_validate(ctx, input);
    } else if (invariants_cmd->parsed()) {
      result = cmd_invariants(ctx, input);
    } else if (belts_cmd->parsed()) {
      result = cmd_belts(ctx, input, ks);
    } else if (classify_cmd->parsed()) {
      result = cmd_classify(ctx, input);
    } else if (betti_cmd->parsed()) {
      result = cmd_betti(ctx, input, mode, checks, graded, per_omega);
    } else if (transform_cmd->parsed()) {
      result = cmd_transform(ctx, input, op, cut, pair);
    } else if (generate_cmd->parsed()) {
      result = cmd_generate(ctx, p6_max, chiral, emit_dir);
    } else if (quasitoric_cmd->parsed()) {
      result = cmd_quasitoric(ctx, input, emit);
    }

    if (ctx.report) {
      double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      result = json{{"command", ctx.args},
                    {"input_digest", digest_hex(fnv1a(ctx.digest_source))},
                    {"result", result},
                    {"timing_ms", ms},
                    {"version", BELTED_VERSION}};
    }
    out << result.dump() << "\n";
    if (!ctx.failure.empty()) {
      err << "error: " << ctx.failure << "\n";
      return 1;
    }
    return 0;
  } catch (const IdentityViolation& e) {
    err << "identity violation: " << e.what() << "\n";
    return 2;
  } catch (const PolytopeError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace belted::cli
