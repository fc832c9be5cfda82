// filiso: exact computations with filtered isocrystals at the GL_n level.
// Subcommands read and write the JSON instance format; campaigns are seeded
// and reproduce byte-identically.  Exit codes: 0 verified, 1 property
// violation (violating instance embedded in the report), 2 usage or model
// error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "filiso/fargues.hpp"
#include "filiso/generate.hpp"
#include "filiso/json_io.hpp"
#include "filiso/lattice_dynamics.hpp"
#include "filiso/mazur.hpp"
#include "filiso/version.hpp"

using namespace filiso;

namespace {

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MathError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw MathError("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

void emit(const json& j, const std::string& out_path) {
  std::string text = j.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw MathError("cannot write " + out_path);
    out << text;
  }
}

json campaign_header(const std::string& command, std::uint64_t seed, long trials) {
  return json{{"command", command},
              {"seed", seed},
              {"trials", trials},
              {"library_version", kVersion}};
}

TypeVector parse_type(const std::string& csv) {
  std::vector<Rat> entries;
  std::string token;
  for (char c : csv + ",") {
    if (c == ',') {
      if (!token.empty()) entries.push_back(rat_parse(token));
      token.clear();
    } else if (!isspace(static_cast<unsigned char>(c))) {
      token += c;
    }
  }
  return TypeVector(std::move(entries));
}

int cmd_gen(long dim, long p, std::uint64_t seed, const std::string& hodge_type,
            bool admissible, const std::string& out) {
  Rng rng(seed);
  Int prime(p);
  InstanceDoc doc;
  if (admissible) {
    FilteredIsocrystal fi = random_admissible(rng, dim, prime);
    doc = doc_of(fi);
  } else {
    Isocrystal iso = random_split_isocrystal(rng, dim, prime);
    TypeVector mu = hodge_type.empty() ? hodge_type_above_newton(rng, iso)
                                       : parse_type(hodge_type);
    if (mu.size() != dim) throw MathError("hodge type length must equal dim");
    doc = doc_of(FilteredIsocrystal(iso, random_flag_of_type(rng, mu)));
  }
  doc.lattice = Mat::identity(dim);
  emit(instance_to_json(doc), out);
  return 0;
}

int cmd_newton(const std::string& path, const std::string& out) {
  InstanceDoc doc = instance_from_json(load_json(path));
  Isocrystal iso = instance_iso(doc);
  NewtonData nd = newton(iso);
  json j{{"instance_hash", json_hash(instance_to_json(doc))},
         {"slopes", typevec_to_json(nd.slopes)}};
  if (nd.fil) {
    j["newton_fil"] = filtration_to_json(*nd.fil);
    j["newton_fil_opposed"] = filtration_to_json(*nd.fil_opposed);
  }
  emit(j, out);
  return 0;
}

int cmd_check_wa(const std::string& path, const std::string& out) {
  InstanceDoc doc = instance_from_json(load_json(path));
  FilteredIsocrystal fi = instance_filtered(doc);
  json j = verdict_to_json(is_weakly_admissible(fi));
  j["instance_hash"] = json_hash(instance_to_json(doc));
  emit(j, out);
  return 0;
}

int cmd_hn(const std::string& path, const std::string& out) {
  InstanceDoc doc = instance_from_json(load_json(path));
  HnResult r = hn_with_pieces(instance_filtered(doc));
  json j = hn_to_json(r);
  j["instance_hash"] = json_hash(instance_to_json(doc));
  emit(j, out);
  return 0;
}

int cmd_fargues(const std::string& path, const std::string& out) {
  InstanceDoc doc = instance_from_json(load_json(path));
  FarguesResult r = fargues_filtration(instance_filtered(doc));
  json j = fargues_to_json(r);
  j["instance_hash"] = json_hash(instance_to_json(doc));
  emit(j, out);
  return 0;
}

int cmd_relpos(const std::string& path, const std::string& out) {
  json j = load_json(path);
  Int p(j.at("p").get<long>());
  Lattice l1(mat_from_json(j.at("l1")), p);
  Lattice l2(mat_from_json(j.at("l2")), p);
  json result{{"relative_position", relative_position(l1, l2)}};
  emit(result, out);
  return 0;
}

int cmd_probe(const std::string& path, long steps, long radius,
              const std::string& out) {
  InstanceDoc doc = instance_from_json(load_json(path));
  FilteredIsocrystal fi = instance_filtered(doc);
  Lattice start = instance_lattice(doc);
  if (radius <= 0) radius = default_radius_bound(fi);
  OrbitReport rep = orbit_probe(fi, start, steps, radius);
  json j = orbit_to_json(rep);
  j["instance_hash"] = json_hash(instance_to_json(doc));
  emit(j, out);
  return 0;
}

int cmd_mazur_fuzz(long trials, std::uint64_t seed, long dim_min, long dim_max,
                   const std::string& out) {
  Rng rng(seed);
  json report = campaign_header("mazur-fuzz", seed, trials);
  json failures = json::array();
  long violations = 0;
  for (long t = 0; t < trials; ++t) {
    Rng trial = rng.fork(static_cast<std::uint64_t>(t));
    Int p = random_prime(trial);
    long n = trial.range(dim_min, dim_max);
    Isocrystal iso = random_split_isocrystal(trial, n, p);
    Lattice l = random_lattice(trial, n, p);
    MazurOutcome outcome = mazur_check(iso, l);
    bool sums = outcome.mu.sum() == outcome.nu.sum();
    if (!outcome.ok || !sums) {
      ++violations;
      InstanceDoc doc;
      doc.p = p;
      doc.phi = iso.phi();
      doc.split = iso.split();
      doc.lattice = l.basis();
      failures.push_back(json{{"trial", t},
                              {"instance", instance_to_json(doc)},
                              {"mu", typevec_to_json(outcome.mu)},
                              {"nu", typevec_to_json(outcome.nu)}});
    }
  }
  report["violations"] = violations;
  report["failures"] = std::move(failures);
  emit(report, out);
  return violations == 0 ? 0 : 1;
}

int cmd_totaro_fuzz(long trials, std::uint64_t seed, const std::string& out) {
  Rng rng(seed);
  json report = campaign_header("totaro-fuzz", seed, trials);
  json failures = json::array();
  long violations = 0, skipped = 0;
  for (long t = 0; t < trials; ++t) {
    Rng trial = rng.fork(static_cast<std::uint64_t>(t));
    Int p = random_prime(trial);
    FilteredIsocrystal a = random_admissible(trial, trial.range(1, 3), p);
    FilteredIsocrystal b = random_admissible(trial, trial.range(1, 3), p);
    TensorIso prod = tensor_isocrystal(a.iso(), b.iso());
    if (prod.collision) {
      ++skipped;
      continue;
    }
    FilteredIsocrystal fi(prod.iso, tensor_filtration(a.hodge(), b.hodge()));
    if (!is_weakly_admissible(fi).admissible) {
      ++violations;
      failures.push_back(json{{"trial", t},
                              {"a", instance_to_json(doc_of(a))},
                              {"b", instance_to_json(doc_of(b))}});
    }
  }
  report["violations"] = violations;
  report["skipped_collisions"] = skipped;
  report["failures"] = std::move(failures);
  emit(report, out);
  return violations == 0 ? 0 : 1;
}

int cmd_fargues_tensor_fuzz(long trials, std::uint64_t seed,
                            const std::string& out) {
  Rng rng(seed);
  json report = campaign_header("fargues-tensor-fuzz", seed, trials);
  json failures = json::array();
  long violations = 0, skipped = 0;
  for (long t = 0; t < trials; ++t) {
    Rng trial = rng.fork(static_cast<std::uint64_t>(t));
    Int p = random_prime(trial);
    FilteredIsocrystal a = random_admissible(trial, trial.range(1, 3), p);
    FilteredIsocrystal b = random_admissible(trial, trial.range(1, 3), p);
    TensorVerdict v = fargues_tensor_check(a, b);
    if (v == TensorVerdict::skipped_collision) {
      ++skipped;
      continue;
    }
    if (v == TensorVerdict::mismatch) {
      ++violations;
      failures.push_back(json{{"trial", t},
                              {"a", instance_to_json(doc_of(a))},
                              {"b", instance_to_json(doc_of(b))}});
    }
  }
  report["violations"] = violations;
  report["skipped_collisions"] = skipped;
  report["failures"] = std::move(failures);
  emit(report, out);
  return violations == 0 ? 0 : 1;
}

int cmd_identity_suite(long trials, std::uint64_t seed, const std::string& out) {
  Rng rng(seed);
  json report = campaign_header("identity-suite", seed, trials);
  json failures = json::array();
  long violations = 0;
  for (long t = 0; t < trials; ++t) {
    Rng trial = rng.fork(static_cast<std::uint64_t>(t));
    Int p = random_prime(trial);
    long n = trial.range(2, 4);
    FilteredIsocrystal fi = random_filtered(trial, n, p);
    NewtonData nd = newton(fi.iso());
    bool ok = true;

    // scalar product: the two formulas agree both ways
    Filtration f1 = random_filtration(trial, n);
    Filtration f2 = random_filtration(trial, n);
    ok = ok && scalar_product(f1, f2) == scalar_product_via_graded(f1, f2);
    ok = ok && scalar_product(f1, f2) == scalar_product_via_graded(f2, f1);

    // Newton polygon matches eigenvalue valuations
    std::vector<Rat> expect = fi.iso().line_slopes();
    std::sort(expect.begin(), expect.end(), std::greater<Rat>());
    ok = ok && nd.slopes.entries == expect;

    // cancellation and the admissibility equivalence on a sampled xi
    Filtration xi = random_stable_xi(trial, fi);
    ok = ok && scalar_product(nd.filtration(), xi) +
                       scalar_product(nd.filtration_opposed(), xi) ==
                   0;
    bool wa = is_weakly_admissible(fi).admissible;
    ScalarPair sp = check_scalar_inequalities(fi, xi, true);
    if (wa) ok = ok && sp.hodge_side <= sp.newton_side;

    // HN identity and triviality
    HnIdentity id = verify_hn_identity(fi);
    ok = ok && id.holds;
    ok = ok && ((hn_filtration(fi) == Filtration::trivial(n)) == wa);

    // tensor scalar identity on small factors
    Filtration g1 = random_filtration(trial, 2);
    Filtration g2 = random_filtration(trial, 2);
    Filtration h1 = random_filtration(trial, 2);
    Filtration h2 = random_filtration(trial, 2);
    Rat lhs = scalar_product(tensor_filtration(g1, g2), tensor_filtration(h1, h2));
    Rat rhs = scalar_product(g1, h1) * Rat(2) + scalar_product(g2, h2) * Rat(2) +
              g1.degree() * h2.degree() + h1.degree() * g2.degree();
    ok = ok && lhs == rhs;

    if (!ok) {
      ++violations;
      failures.push_back(json{{"trial", t}, {"instance", instance_to_json(doc_of(fi))}});
    }
  }
  report["violations"] = violations;
  report["failures"] = std::move(failures);
  emit(report, out);
  return violations == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact filtered-isocrystal computations (GL_n, k = F_p)"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  std::string path, out;
  long dim = 2, p = 2, trials = 100, steps = kDefaultOrbitSteps, radius = 0;
  long dim_min = 2, dim_max = 4;
  std::uint64_t seed = 17;
  std::string hodge_type;
  bool admissible = false;

  auto* gen = app.add_subcommand("gen", "random instance to JSON");
  gen->add_option("--dim", dim)->check(CLI::Range(1l, 9l));
  gen->add_option("--p", p);
  gen->add_option("--seed", seed);
  gen->add_option("--hodge-type", hodge_type, "comma separated weights");
  gen->add_flag("--admissible", admissible, "rejection-sample a wa instance");
  gen->add_option("--out", out);

  auto* newton_cmd = app.add_subcommand("newton", "slopes and Newton filtrations");
  newton_cmd->add_option("file", path)->required();
  newton_cmd->add_option("--out", out);

  auto* checkwa = app.add_subcommand("check-wa", "weak admissibility verdict");
  checkwa->add_option("file", path)->required();
  checkwa->add_option("--out", out);

  auto* hn = app.add_subcommand("hn", "Harder-Narasimhan filtration");
  hn->add_option("file", path)->required();
  hn->add_option("--out", out);

  auto* fargues = app.add_subcommand("fargues", "Fargues filtration");
  fargues->add_option("file", path)->required();
  fargues->add_option("--out", out);

  auto* relpos = app.add_subcommand("relpos", "relative position of two lattices");
  relpos->add_option("file", path)->required();
  relpos->add_option("--out", out);

  auto* probe = app.add_subcommand("laffaille-probe", "orbit probe of alpha");
  probe->add_option("file", path)->required();
  probe->add_option("--steps", steps);
  probe->add_option("--radius", radius);
  probe->add_option("--out", out);

  auto* mazur = app.add_subcommand("mazur-fuzz", "Mazur inequality campaign");
  mazur->add_option("--trials", trials);
  mazur->add_option("--seed", seed);
  mazur->add_option("--dim-min", dim_min);
  mazur->add_option("--dim-max", dim_max);
  mazur->add_option("--out", out);

  auto* totaro = app.add_subcommand("totaro-fuzz", "tensor closure campaign");
  totaro->add_option("--trials", trials);
  totaro->add_option("--seed", seed);
  totaro->add_option("--out", out);

  auto* ftf = app.add_subcommand("fargues-tensor-fuzz",
                                 "Fargues tensor compatibility campaign");
  ftf->add_option("--trials", trials);
  ftf->add_option("--seed", seed);
  ftf->add_option("--out", out);

  auto* ids = app.add_subcommand("identity-suite",
                                 "every exact identity on a random corpus");
  ids->add_option("--trials", trials);
  ids->add_option("--seed", seed);
  ids->add_option("--out", out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return cmd_gen(dim, p, seed, hodge_type, admissible, out);
    if (newton_cmd->parsed()) return cmd_newton(path, out);
    if (checkwa->parsed()) return cmd_check_wa(path, out);
    if (hn->parsed()) return cmd_hn(path, out);
    if (fargues->parsed()) return cmd_fargues(path, out);
    if (relpos->parsed()) return cmd_relpos(path, out);
    if (probe->parsed()) return cmd_probe(path, steps, radius, out);
    if (mazur->parsed()) return cmd_mazur_fuzz(trials, seed, dim_min, dim_max, out);
    if (totaro->parsed()) return cmd_totaro_fuzz(trials, seed, out);
    if (ftf->parsed()) return cmd_fargues_tensor_fuzz(trials, seed, out);
    if (ids->parsed()) return cmd_identity_suite(trials, seed, out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
