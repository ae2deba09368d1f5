// pmskit: command-line front end. JSON reports go to stdout, a one-line
// human summary to stderr. Exit 0 on success, 1 on an axiom or structural
// failure, 2 on usage or schema errors.

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pmskit/convolution.hpp"
#include "pmskit/io.hpp"
#include "pmskit/monoid.hpp"
#include "pmskit/random.hpp"
#include "pmskit/sibley.hpp"

namespace {

using namespace pmskit;
using io::Json;

enum Exit { kOk = 0, kViolation = 1, kUsage = 2 };

int emit(const Json& out, bool ok, const std::string& summary) {
  std::cout << out.dump(2) << '\n';
  std::cerr << summary << '\n';
  return ok ? kOk : kViolation;
}

int emit_report(Json out, const Report& r, const std::string& what) {
  out["report"] = io::encode(r);
  std::string summary = what + ": " + (r.passed() ? "ok" : std::to_string(r.violations.size()) + " violation(s)");
  if (!r.passed()) summary += ", first " + r.violations.front().axiom;
  return emit(out, r.passed(), summary);
}

const ProbGroup& require_group(const io::SpaceFile& f, const std::string& path) {
  if (!f.group) throw io::SchemaError(path + ": missing field \"group\"");
  return *f.group;
}

int cmd_validate(const std::string& path) {
  const io::SpaceFile f = io::decode_space(io::load_json(path), path);
  Report r = validate_space(f.space);
  if (f.group) r.merge(validate_invariant_group(*f.group));
  Json out;
  out["command"] = "validate";
  out["points"] = f.space.size();
  out["tf"] = tag_of(f.space.tf());
  out["group"] = f.group.has_value();
  return emit_report(std::move(out), r, "validate " + path);
}

int cmd_conv(const std::string& tag, const std::string& fpath, const std::string& lpath, const std::string& kernel) {
  TriangleFn tf;
  try {
    tf = triangle_from_tag(tag);
  } catch (const DomainError& e) {
    throw io::SchemaError(std::string("--tf: ") + e.what());
  }
  const DistFn f = io::decode_dist_fn(io::load_json(fpath), fpath);
  const DistFn l = io::decode_dist_fn(io::load_json(lpath), lpath);
  DistFn r;
  if (tf.kind == TriangleFn::Kind::SupConv) {
    r = sup_conv(tf.tnorm, f, l, kernel == "naive" ? ConvKernel::Naive : ConvKernel::Frontier);
  } else {
    r = inf_conv_dual(tf.tnorm, f, l);
  }
  return emit(io::encode(r), true, "conv " + tag + ": " + std::to_string(r.size()) + " jump(s)");
}

int cmd_levy(const std::string& fpath, const std::string& lpath, const std::string& tol_text) {
  Rational eps;
  try {
    eps = parse_rational(tol_text);
  } catch (const DomainError& e) {
    throw io::SchemaError(std::string("--tol: ") + e.what());
  }
  if (eps <= 0 || eps > 1) throw io::SchemaError("--tol: must lie in (0, 1]");
  const DistFn f = io::decode_dist_fn(io::load_json(fpath), fpath);
  const DistFn l = io::decode_dist_fn(io::load_json(lpath), lpath);
  const SibleyBracket b = sibley_bracket(f, l, WeakTolerance(eps));
  Json out;
  out["distance"] = io::encode(b.upper);
  out["lower"] = io::encode(b.lower);
  out["upper"] = io::encode(b.upper);
  out["tol"] = io::encode(eps);
  return emit(out, true, "levy: d_S in [" + to_string(b.lower) + ", " + to_string(b.upper) + "]");
}

// The map's own "space" field, when present, must agree with the one given.
void check_embedded_space(const io::MapFile& m, const io::SpaceFile& s, const std::string& path) {
  if (m.space && !(m.space->space == s.space)) throw io::SchemaError(path + ".space: differs from the space argument");
}

int cmd_lipcheck(const std::string& spath, const std::string& mpath) {
  const io::SpaceFile s = io::load_space(spath);
  const io::MapFile m = io::load_map_file(mpath);
  check_embedded_space(m, s, mpath);
  const LipMap f = io::decode_total_map(m.values, s.space, mpath + ".values");
  Json out;
  out["command"] = "lipcheck";
  return emit_report(std::move(out), is_one_lipschitz(s.space, f), "lipcheck " + mpath);
}

int cmd_extend(const std::string& spath, const std::string& mpath) {
  const io::SpaceFile s = io::load_space(spath);
  const io::MapFile m = io::load_map_file(mpath);
  check_embedded_space(m, s, mpath);
  const PartialMap partial = io::decode_values(m.values, s.space, mpath + ".values");
  const LipMap ext = mcshane_extend(s.space, partial);
  Json out;
  out["values"] = io::encode_map(s.space, ext);
  return emit(out, true, "extend: " + std::to_string(partial.size()) + " -> " + std::to_string(ext.size()) + " point(s)");
}

int cmd_units(const std::string& gpath, std::size_t candidates) {
  const io::SpaceFile file = io::load_space(gpath);
  const ProbGroup& g = require_group(file, gpath);
  require_sup_continuous(g.space().tf(), "units");
  const std::uint64_t seed = seed_from_env(0x5eed);
  Rng rng(seed);
  const std::vector<LipMap> family = unit_candidate_family(rng, g, candidates);
  const PiFinite pi = pi_finite(g);
  Json rows = Json::array();
  std::size_t units = 0;
  bool agree = true;
  for (std::size_t k = 0; k < family.size(); ++k) {
    const std::optional<LipMap> fast = is_unit(g, family[k]);
    const std::optional<LipMap> slow = inverse_bruteforce_oracle(g, family[k], family);
    const bool same = fast.has_value() == slow.has_value() && (!fast || *fast == *slow);
    agree = agree && same;
    if (fast) ++units;
    Json row;
    row["index"] = k;
    const auto x = pi.find(family[k]);
    row["delta"] = x ? Json(g.space().label(*x)) : Json(nullptr);
    row["unit"] = fast.has_value();
    row["oracle"] = slow.has_value();
    row["values"] = io::encode_map(g.space(), family[k]);
    if (fast) row["inverse"] = io::encode_map(g.space(), *fast);
    rows.push_back(std::move(row));
  }
  Json out;
  out["seed"] = seed;
  out["candidates"] = family.size();
  out["units"] = units;
  out["agree"] = agree;
  out["family"] = std::move(rows);
  return emit(out, agree,
              "units: " + std::to_string(units) + " of " + std::to_string(family.size()) + " candidate(s) invertible" +
                  (agree ? "" : ", oracle disagrees"));
}

int cmd_transport(const std::string& apath, const std::string& bpath, const std::string& ipath) {
  const io::SpaceFile fa = io::load_space(apath);
  const io::SpaceFile fb = io::load_space(bpath);
  const ProbGroup& a = require_group(fa, apath);
  const ProbGroup& b = require_group(fb, bpath);
  const IsoWitness iso = io::decode_iso(io::load_json(ipath), a, b);
  const Report r = verify_isometric_iso(a, b, iso);
  Json out;
  out["command"] = "transport";
  if (r.passed()) out["phi"] = io::encode_phi_table(a, b, transport_iso(a, b, iso));
  return emit_report(std::move(out), r, "transport " + ipath);
}

int cmd_recover(const std::string& apath, const std::string& bpath, const std::string& ppath) {
  const io::SpaceFile fa = io::load_space(apath);
  const io::SpaceFile fb = io::load_space(bpath);
  const ProbGroup& a = require_group(fa, apath);
  const ProbGroup& b = require_group(fb, bpath);
  const MonoidIsoOracle phi = io::decode_phi_table(io::load_json(ppath), a, b);
  try {
    const IsoWitness iso = recover_iso(a, b, phi);
    return emit(io::encode(a, b, iso), true, "recover: isometric isomorphism recovered");
  } catch (const StructuralError& e) {
    Json out;
    out["error"] = "structural";
    out["message"] = e.what();
    return emit(out, false, std::string("recover: ") + e.what());
  }
}

int cmd_bench(const std::vector<std::size_t>& sizes, const std::string& tag, std::size_t reps) {
  TNorm t;
  try {
    t = tnorm_from_tag(tag);
  } catch (const DomainError& e) {
    throw io::SchemaError(std::string("--tnorm: ") + e.what());
  }
  const std::uint64_t seed = seed_from_env(0xbe7c);
  Rng rng(seed);
  Json rows = Json::array();
  bool ok = true;
  std::ostringstream summary;
  summary << "bench " << tag << ':';
  for (std::size_t n : sizes) {
    const long den = static_cast<long>(4 * n);
    const DistFn f = random_dist_fn_exact(rng, n, den, den);
    const DistFn l = random_dist_fn_exact(rng, n, den, den);
    const bool equal = sup_conv_naive(t, f, l) == sup_conv_frontier(t, f, l);
    ok = ok && equal;
    auto best = [&](auto&& kernel) {
      double ms = 0;
      for (std::size_t r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        const DistFn out = kernel(t, f, l);
        const double dt = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        if (r == 0 || dt < ms) ms = dt;
      }
      return ms;
    };
    const double naive = best(sup_conv_naive);
    const double frontier = best(sup_conv_frontier);
    Json row;
    row["jumps"] = n;
    row["equal"] = equal;
    row["naive_ms"] = naive;
    row["frontier_ms"] = frontier;
    row["ratio"] = naive > 0 ? frontier / naive : 0.0;
    rows.push_back(std::move(row));
    summary << ' ' << n << ":" << (equal ? "" : "MISMATCH,") << frontier << "ms/" << naive << "ms";
  }
  Json out;
  out["tnorm"] = tag;
  out["seed"] = seed;
  out["reps"] = reps;
  out["sizes"] = std::move(rows);
  return emit(out, ok, summary.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Probabilistic metric spaces over exact rational step distributions"};
  app.require_subcommand(1);

  std::string a, b, c, tf_tag, kernel = "frontier", tol = "1/1048576", tnorm = "product";
  std::size_t candidates = 12, reps = 3;
  std::vector<std::size_t> sizes{64, 256, 1024};

  auto* validate = app.add_subcommand("validate", "Check a space or group file");
  validate->add_option("file", a)->required()->check(CLI::ExistingFile);

  auto* conv = app.add_subcommand("conv", "Convolve two distribution files");
  conv->add_option("--tf", tf_tag, "sup:<tnorm> or infdual:<tnorm>")->required();
  conv->add_option("--kernel", kernel)->check(CLI::IsMember({"naive", "frontier"}));
  conv->add_option("F", a)->required()->check(CLI::ExistingFile);
  conv->add_option("L", b)->required()->check(CLI::ExistingFile);

  auto* levy = app.add_subcommand("levy", "Sibley distance between two distribution files");
  levy->add_option("F", a)->required()->check(CLI::ExistingFile);
  levy->add_option("L", b)->required()->check(CLI::ExistingFile);
  levy->add_option("--tol", tol, "bisection tolerance p/q");

  auto* lipcheck = app.add_subcommand("lipcheck", "Check a map for the 1-Lipschitz property");
  lipcheck->add_option("space", a)->required()->check(CLI::ExistingFile);
  lipcheck->add_option("map", b)->required()->check(CLI::ExistingFile);

  auto* extend = app.add_subcommand("extend", "Extend a partial 1-Lipschitz map to the whole space");
  extend->add_option("space", a)->required()->check(CLI::ExistingFile);
  extend->add_option("map", b)->required()->check(CLI::ExistingFile);

  auto* units = app.add_subcommand("units", "Search a candidate family for units of the Lipschitz monoid");
  units->add_option("group", a)->required()->check(CLI::ExistingFile);
  units->add_option("--candidates", candidates, "non-delta candidates to generate");

  auto* transport = app.add_subcommand("transport", "Transport an isometric isomorphism to the monoids");
  transport->add_option("G", a)->required()->check(CLI::ExistingFile);
  transport->add_option("G2", b)->required()->check(CLI::ExistingFile);
  transport->add_option("iso", c)->required()->check(CLI::ExistingFile);

  auto* recover = app.add_subcommand("recover", "Recover a group isomorphism from a monoid map table");
  recover->add_option("G", a)->required()->check(CLI::ExistingFile);
  recover->add_option("G2", b)->required()->check(CLI::ExistingFile);
  recover->add_option("phi", c)->required()->check(CLI::ExistingFile);

  auto* bench = app.add_subcommand("bench", "Time naive and frontier sup-convolution");
  bench->add_option("--sizes", sizes)->delimiter(',')->check(CLI::PositiveNumber);
  bench->add_option("--tnorm", tnorm);
  bench->add_option("--reps", reps)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*validate) return cmd_validate(a);
    if (*conv) return cmd_conv(tf_tag, a, b, kernel);
    if (*levy) return cmd_levy(a, b, tol);
    if (*lipcheck) return cmd_lipcheck(a, b);
    if (*extend) return cmd_extend(a, b);
    if (*units) return cmd_units(a, candidates);
    if (*transport) return cmd_transport(a, b, c);
    if (*recover) return cmd_recover(a, b, c);
    if (*bench) return cmd_bench(sizes, tnorm, reps);
  } catch (const io::SchemaError& e) {
    std::cerr << "schema error: " << e.what() << '\n';
    return kUsage;
  } catch (const AxiomError& e) {
    Json out;
    out["error"] = "axiom";
    out["message"] = e.what();
    out["report"] = io::encode(e.report());
    return emit(out, false, e.what());
  } catch (const DomainError& e) {
    Json out;
    out["error"] = "domain";
    out["message"] = e.what();
    return emit(out, false, e.what());
  }
  return kUsage;
}
