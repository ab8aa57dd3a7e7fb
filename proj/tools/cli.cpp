#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "cubescheme/classgen.hpp"
#include "cubescheme/closure.hpp"
#include "cubescheme/cls_io.hpp"
#include "cubescheme/compression.hpp"
#include "cubescheme/parallel.hpp"
#include "cubescheme/serialize.hpp"
#include "cubescheme/spc.hpp"
#include "cubescheme/vc_analysis.hpp"

namespace cubescheme::cli {

namespace {

constexpr int kRoundTripGuard = 12;

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

// Sends an artifact to `path`, or to `out` when no path was given.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty())
    out << text;
  else
    write_text(path, text);
}

std::string commented(const std::string& text) {
  std::ostringstream out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out << "# " << line << '\n';
  return out.str();
}

std::vector<int> parse_order(const std::string& text) {
  std::vector<int> order;
  std::istringstream in(text);
  for (std::string cell; std::getline(in, cell, ',');) {
    try {
      order.push_back(std::stoi(cell));
    } catch (const std::exception&) {
      throw PreconditionError("bad ordering entry '" + cell + "'");
    }
  }
  return order;
}

std::string fixed(double v, int digits) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(digits) << v;
  return out.str();
}

// ------------------------------------------------------------------ options

struct Common {
  bool json = false;
};

struct AnalyzeOpts {
  std::string input;
};

struct ClosureOpts {
  std::string input, output, origin;
  bool min_origin = false, force = false;
};

struct KcubeOpts {
  std::string input;
  int k = -1;
  bool force = false;
};

struct SpcOpts {
  std::string input, output, order;
  bool random_order = false;
  std::uint64_t seed = 0;
};

struct SchemeOpts {
  std::string input, output, method = "ccc";
};

struct VerifyOpts {
  std::string cls, scheme;
  int k = -1;
};

struct RoundtripOpts {
  std::string input;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  bool force = false;
};

struct GenerateOpts {
  std::string family = "full_cube", config, points, output;
  int n = 3, d = 1;
  double density = 0.1;
  std::uint64_t seed = 0;
};

struct BenchOpts {
  std::string output;
  std::uint64_t seed = 1;
  std::size_t count = 300;
  int n_max = 12, d_max = 3;
  bool no_timing = false, bounds_only = false;
};

// ----------------------------------------------------------------- commands

int cmd_analyze(const AnalyzeOpts& o, const Common& g, std::ostream& out) {
  const auto report = classify(read_cls_file(o.input));
  out << (g.json ? to_json(report).dump(2) + "\n" : to_text(report));
  return kExitOk;
}

int cmd_closure(const ClosureOpts& o, const Common& g, std::ostream& out) {
  const ConceptClass c = read_cls_file(o.input);
  const Vertex origin = o.origin.empty() ? Vertex(c.dim(), 0) : Vertex::parse(o.origin);
  if (origin.dim() != c.dim()) throw DimensionMismatch("origin length differs from n");
  const ConceptClass closed = reorient(intersection_closure(reorient(c, origin)), origin);
  const int vc = vc_dimension(closed);
  std::optional<MinClosureVc> best;
  if (o.min_origin) best = min_closure_vc_bruteforce(c, o.force);

  if (g.json) {
    Json j;
    j["origin"] = origin.str();
    j["size"] = closed.size();
    j["vc_dimension"] = vc;
    if (best) j["min_origin"] = Json{{"vc_dimension", best->vc_dimension}, {"origin", best->origin.str()}};
    if (o.output.empty()) j["class"] = class_to_json(closed);
    out << j.dump(2) << '\n';
    if (!o.output.empty()) write_cls_file(o.output, closed);
    return kExitOk;
  }
  std::ostringstream summary;
  summary << "origin=" << origin.str() << "\nsize=" << closed.size() << "\nvc_dimension=" << vc << '\n';
  if (best) summary << "min_vc=" << best->vc_dimension << "\nmin_origin=" << best->origin.str() << '\n';
  if (o.output.empty()) {
    out << commented(summary.str()) << format_cls(closed);
  } else {
    write_cls_file(o.output, closed);
    out << summary.str();
  }
  return kExitOk;
}

int cmd_kcube(const KcubeOpts& o, const Common& g, std::ostream& out) {
  const ConceptClass c = read_cls_file(o.input);
  const int k = o.k >= 0 ? o.k : min_k_close(c, o.force);
  const auto cert = k_close_condition(c, k, o.force);
  if (!cert) {
    out << (g.json ? Json{{"k", k}, {"satisfied", false}}.dump(2) + "\n" : "k=" + std::to_string(k) + "\nsatisfied=false\n");
    return kExitVerification;
  }
  if (!verify_k_close_certificate(c, *cert)) throw VerificationError("certificate failed its own check");
  if (g.json) {
    out << to_json(*cert).dump(2) << '\n';
  } else {
    out << "k=" << cert->k << "\nv=" << cert->centre.str() << '\n';
    for (const auto& cube : cert->cubes) out << "cube " << cube.colours().str() << ' ' << cube.str() << '\n';
  }
  return kExitOk;
}

int cmd_spc(const SpcOpts& o, const Common& g, std::ostream& out) {
  const ConceptClass c = read_cls_file(o.input);
  CoordinateOrdering ord = CoordinateOrdering::identity(c.dim());
  if (o.random_order)
    ord = CoordinateOrdering::shuffled(c.dim(), o.seed);
  else if (!o.order.empty())
    ord = CoordinateOrdering(parse_order(o.order));
  if (ord.size() != c.dim()) throw DimensionMismatch("ordering length differs from n");

  const ConceptClass star = shortest_path_closure(c, ord);
  const auto report = verify_embedding(c, star);
  if (!o.output.empty()) write_cls_file(o.output, star);
  if (g.json) {
    Json j;
    j["ordering"] = ord.order();
    j["report"] = to_json(report);
    if (o.output.empty()) j["class"] = class_to_json(star);
    out << j.dump(2) << '\n';
  } else {
    const std::string summary = "ordering=" + ord.str() + "\n" + to_text(report);
    out << (o.output.empty() ? commented(summary) + format_cls(star) : summary);
  }
  return report.ok() ? kExitOk : kExitVerification;
}

int cmd_scheme(const SchemeOpts& o, std::ostream& out, std::ostream& err) {
  const ConceptClass c = read_cls_file(o.input);
  RepresentationMap map;
  if (o.method == "peel") {
    auto peeled = corner_peel(c);
    if (!peeled) throw Failure("corner peeling got stuck");
    map = std::move(*peeled);
  } else {
    try {
      map = build_scheme(c);
    } catch (const NoCccChain& e) {
      err << "stuck class:\n" << format_cls(e.stuck());
      throw;
    }
  }
  emit(o.output, scheme_to_json(map, map.size_bound()).dump(2) + "\n", out);
  return kExitOk;
}

int cmd_verify(const VerifyOpts& o, const Common& g, std::ostream& out) {
  const ConceptClass c = read_cls_file(o.cls);
  const auto doc = parse_scheme(read_text(o.scheme));
  if (doc.map.dim() != c.dim()) throw DimensionMismatch("scheme and class dimensions differ");
  const int k = o.k >= 0 ? o.k : doc.k;
  const auto check = verify_scheme(c, doc.map, k);
  if (g.json) {
    Json j{{"valid", check.valid}, {"k", k}, {"entries", doc.map.size()}};
    if (!check.valid) j["failure"] = check.failure;
    out << j.dump(2) << '\n';
  } else if (check.valid) {
    out << "valid k=" << k << " entries=" << doc.map.size() << '\n';
  } else {
    out << "invalid: " << check.failure << '\n';
  }
  return check.valid ? kExitOk : kExitVerification;
}

int cmd_roundtrip(const RoundtripOpts& o, const Common& g, std::ostream& out) {
  const ConceptClass c = read_cls_file(o.input);
  std::vector<CoordSet> domains;
  if (o.samples > 0) {
    std::mt19937_64 rng(o.seed);
    for (std::size_t i = 0; i < o.samples; ++i) domains.emplace_back(rng() & low_mask(c.dim()));
  } else {
    if (c.dim() > kRoundTripGuard && !o.force)
      throw GuardError("roundtrip over all domains refuses n > " + std::to_string(kRoundTripGuard) +
                       " without --force (or use --samples)");
    domains = all_domains(c.dim());
  }
  SchemeCache cache;
  const auto summary = roundtrip_check(c, domains, cache);
  if (g.json) {
    Json j{{"domains", summary.domains},
           {"labellings", summary.labellings},
           {"failures", summary.failures},
           {"max_rep_size", summary.max_rep_size}};
    if (summary.failures) j["first_failure"] = summary.first_failure;
    out << j.dump(2) << '\n';
  } else {
    out << "domains=" << summary.domains << "\nlabellings=" << summary.labellings << "\nfailures=" << summary.failures
        << "\nmax_rep_size=" << summary.max_rep_size << '\n';
    if (summary.failures) out << "first_failure: " << summary.first_failure << '\n';
  }
  return summary.failures == 0 ? kExitOk : kExitVerification;
}

int cmd_generate(const GenerateOpts& o, const CLI::App& sub, const Common& g, std::ostream& out) {
  GenSpec spec;
  if (!o.config.empty()) {
    try {
      spec = genspec_from_json(Json::parse(read_text(o.config)));
    } catch (const Json::parse_error& e) {
      throw ParseError(std::string("config: ") + e.what(), 0);
    }
  }
  if (sub.count("--family")) spec.family = family_from_string(o.family);
  if (sub.count("--n")) spec.n = o.n;
  if (sub.count("--d")) spec.d = o.d;
  if (sub.count("--density")) spec.density = o.density;
  if (sub.count("--seed")) spec.seed = o.seed;
  if (!o.points.empty()) spec.points = parse_points_csv(read_text(o.points));
  if (spec.family == Family::hyperrectangle) spec.n = static_cast<int>(spec.points.size());

  const ConceptClass c = generate(spec);
  if (g.json) {
    Json j{{"spec", to_json(spec)}, {"class", class_to_json(c)}};
    emit(o.output, j.dump(2) + "\n", out);
  } else {
    emit(o.output, commented("spec=" + to_json(spec).dump()) + format_cls(c), out);
  }
  return kExitOk;
}

std::string bound_table() {
  std::ostringstream out;
  out << "d,sauer(11d;d),projection_bound,cube_size\n";
  for (int d = 1; d <= 3; ++d)
    out << d << ',' << sauer_bound(11 * d, d) << ',' << projection_size_bound(d) << ',' << projection_cube_size(d)
        << '\n';
  return out.str();
}

int cmd_bench(const BenchOpts& o, std::ostream& out, std::ostream& err) {
  if (o.bounds_only) {
    out << bound_table();
    return kExitOk;
  }
  const auto instances = intersection_closed_sweep(o.seed, o.count, 3, o.n_max, o.d_max);
  struct Row {
    EmbeddingReport report;
    double seconds = 0;
  };
  std::vector<Row> rows(instances.size());
  parallel_for(instances.size(), [&](std::size_t i) {
    const auto& inst = instances[i];
    const auto start = std::chrono::steady_clock::now();
    const auto star = shortest_path_closure(inst.cls, CoordinateOrdering::identity(inst.cls.dim()));
    const auto stop = std::chrono::steady_clock::now();
    rows[i].report = verify_embedding(inst.cls, star);
    rows[i].seconds = o.no_timing ? 0.0 : std::chrono::duration<double>(stop - start).count();
  });

  std::ostringstream csv;
  csv << "family,n,d,|C|,|C*|,d*,ratio,seconds\n";
  double max_ratio = 0;
  std::size_t violations = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i].report;
    csv << to_string(instances[i].spec.family) << ',' << r.n << ',' << r.d << ',' << r.size << ',' << r.size_star << ','
        << r.d_star << ',' << fixed(r.ratio(), 4) << ',' << fixed(rows[i].seconds, 6) << '\n';
    if (r.d >= 1) max_ratio = std::max(max_ratio, r.ratio());
    if (!r.ok()) ++violations;
  }
  std::ostringstream summary;
  summary << "instances=" << rows.size() << "\nmax_ratio=" << fixed(max_ratio, 4) << "\nviolations=" << violations
          << '\n'
          << bound_table();
  emit(o.output, csv.str(), out);
  (o.output.empty() ? err : out) << summary.str();
  return violations == 0 ? kExitOk : kExitVerification;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Concept classes in the binary cube: closures, embeddings and compression schemes", "cubescheme"};
  app.require_subcommand(1);
  app.fallthrough();
  Common g;
  app.add_flag("--json", g.json, "Machine-readable output");

  AnalyzeOpts analyze;
  auto* a = app.add_subcommand("analyze", "VC dimension, shattered sets, cube types, extremality");
  a->add_option("class", analyze.input, ".cls file")->required()->check(CLI::ExistingFile);

  ClosureOpts closure;
  auto* cl = app.add_subcommand("closure", "Intersection closure, optionally minimised over origins");
  cl->add_option("class", closure.input, ".cls file")->required()->check(CLI::ExistingFile);
  cl->add_option("--origin", closure.origin, "Origin bitstring (default all zeros)");
  cl->add_flag("--min-origin", closure.min_origin, "Search all origins for the least closure VC dimension");
  cl->add_flag("--force", closure.force, "Allow origin sweeps above n=16");
  cl->add_option("-o,--output", closure.output, "Write the closure to this .cls file");

  KcubeOpts kcube;
  auto* kc = app.add_subcommand("kcube", "Least k with a k-close cube certificate");
  kc->add_option("class", kcube.input, ".cls file")->required()->check(CLI::ExistingFile);
  kc->add_option("--k", kcube.k, "Test this k instead of searching")->check(CLI::NonNegativeNumber);
  kc->add_flag("--force", kcube.force, "Allow centre sweeps above n=16");

  SpcOpts spc;
  auto* sp = app.add_subcommand("spc", "Shortest-path closure of an intersection-closed class");
  sp->add_option("class", spc.input, ".cls file")->required()->check(CLI::ExistingFile);
  auto* order_opt = sp->add_option("--order", spc.order, "Coordinate ordering, e.g. 3,1,2");
  sp->add_flag("--random-order", spc.random_order, "Shuffle the ordering with --seed")->excludes(order_opt);
  sp->add_option("--seed", spc.seed, "Seed for --random-order");
  sp->add_option("-o,--output", spc.output, "Write the embedding to this .cls file");

  SchemeOpts scheme;
  auto* sc = app.add_subcommand("scheme", "Build an unlabelled compression scheme (JSON)");
  sc->alias("compress-scheme");
  sc->add_option("class", scheme.input, ".cls file")->required()->check(CLI::ExistingFile);
  sc->add_option("--method", scheme.method, "ccc or peel")->check(CLI::IsMember({"ccc", "peel"}));
  sc->add_option("-o,--output", scheme.output, "Write the scheme to this file");

  VerifyOpts verify;
  auto* ve = app.add_subcommand("verify", "Check a scheme file against a class file");
  ve->add_option("class", verify.cls, ".cls file")->required()->check(CLI::ExistingFile);
  ve->add_option("scheme", verify.scheme, "scheme JSON file")->required()->check(CLI::ExistingFile);
  ve->add_option("--k", verify.k, "Size bound (default: the file's k)")->check(CLI::NonNegativeNumber);

  RoundtripOpts roundtrip;
  auto* rt = app.add_subcommand("roundtrip", "Compress and reconstruct every realised labelling");
  rt->add_option("class", roundtrip.input, ".cls file")->required()->check(CLI::ExistingFile);
  rt->add_option("--samples", roundtrip.samples, "Random domains instead of all 2^n");
  rt->add_option("--seed", roundtrip.seed, "Seed for --samples");
  rt->add_flag("--force", roundtrip.force, "Allow all domains above n=12");

  GenerateOpts gen;
  auto* ge = app.add_subcommand("generate", "Write a generated class");
  ge->add_option("--family", gen.family, "Family tag");
  ge->add_option("--n", gen.n, "Dimension");
  ge->add_option("--d", gen.d, "VC parameter");
  ge->add_option("--density", gen.density, "Generator density");
  ge->add_option("--seed", gen.seed, "Seed");
  ge->add_option("--points", gen.points, "CSV of integer points (hyperrectangle)")->check(CLI::ExistingFile);
  ge->add_option("--config", gen.config, "JSON GenSpec; flags override its fields")->check(CLI::ExistingFile);
  ge->add_option("-o,--output", gen.output, "Output file");

  BenchOpts bench;
  auto* be = app.add_subcommand("bench", "Closure-growth sweep over intersection-closed classes (CSV)");
  be->add_option("--seed", bench.seed, "Sweep seed");
  be->add_option("--count", bench.count, "Number of instances");
  be->add_option("--n-max", bench.n_max, "Largest n")->check(CLI::Range(3, 16));
  be->add_option("--d-max", bench.d_max, "Largest VC dimension")->check(CLI::Range(1, 5));
  be->add_flag("--no-timing", bench.no_timing, "Write 0 seconds so output is byte-reproducible");
  be->add_flag("--bounds", bench.bounds_only, "Only print the projection bound table");
  be->add_option("-o,--output", bench.output, "CSV file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (a->parsed()) return cmd_analyze(analyze, g, out);
    if (cl->parsed()) return cmd_closure(closure, g, out);
    if (kc->parsed()) return cmd_kcube(kcube, g, out);
    if (sp->parsed()) return cmd_spc(spc, g, out);
    if (sc->parsed()) return cmd_scheme(scheme, out, err);
    if (ve->parsed()) return cmd_verify(verify, g, out);
    if (rt->parsed()) return cmd_roundtrip(roundtrip, g, out);
    if (ge->parsed()) return cmd_generate(gen, *ge, g, out);
    if (be->parsed()) return cmd_bench(bench, out, err);
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << '\n';
    return kExitVerification;
  } catch (const NoCccChain& e) {
    err << e.what() << '\n';
    return kExitVerification;
  } catch (const Failure& e) {
    err << e.what() << '\n';
    return kExitVerification;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const GuardError& e) {
    err << "refused: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace cubescheme::cli
