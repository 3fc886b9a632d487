// Command-line front end.  Every verb reads JSON files, runs one exact
// computation, and prints one JSON report to standard output.  Exit codes:
// 0 success, 1 parse or I/O trouble, 2 domain errors (degenerate tensor,
// bad format, non-member hyperplane, ...), 3 internal invariant failures.

#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "steiner/steiner.hpp"

namespace {

using steiner::BigRat;
using steiner::BoundaryFormat;
using steiner::BoundaryTensor;
using steiner::Field;
using steiner::Hyperplane;
using steiner::Json;
using steiner::ParseError;
using steiner::SteinerBundle;

struct CommonOpts {
  std::string field_spec = "rational";
  std::uint64_t seed = 0;
};

Field parse_field(const std::string& spec) {
  if (spec == "rational") return Field::rationals();
  if (spec.rfind("fp:", 0) == 0) {
    const std::string digits = spec.substr(3);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("--field fp:<prime> needs a decimal prime, got '" + spec + "'");
    return Field::prime(std::stoull(digits));
  }
  throw ParseError("--field must be 'rational' or 'fp:<prime>', got '" + spec + "'");
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

BoundaryTensor load_tensor(const std::string& path, const Field& f) {
  return steiner::tensor_of_json(load_json(path), f);
}

SteinerBundle load_bundle(const std::string& path, const Field& f) {
  return steiner::bundle_of_json(load_json(path), f);
}

std::vector<BigRat> parse_rat_list(const std::string& csv) {
  std::vector<BigRat> out;
  std::stringstream ss(csv);
  std::string part;
  while (std::getline(ss, part, ',')) out.push_back(steiner::parse_rational(part));
  if (out.empty()) throw ParseError("empty coefficient list '" + csv + "'");
  return out;
}

std::vector<std::size_t> parse_size_list(const std::string& csv) {
  std::vector<std::size_t> out;
  for (const BigRat& q : parse_rat_list(csv)) {
    if (boost::multiprecision::denominator(q) != 1 || q < 0)
      throw ParseError("expected nonnegative integers in '" + csv + "'");
    out.push_back(static_cast<std::size_t>(boost::multiprecision::numerator(q)));
  }
  return out;
}

void emit(const Json& j) { std::cout << steiner::json_text(j); }

// Certificate with the modular fast path: a zero residue is only reported
// as degenerate after the rational computation confirms it.
Json certificate_report(const Json& jtensor, const Field& f) {
  BoundaryTensor a = steiner::tensor_of_json(jtensor, f);
  steiner::Scalar cert = steiner::hyperdet_certificate(a);
  Json j;
  j["dims"] = a.format().dims;
  j["field"] = f.is_rational() ? "rational" : "fp:" + std::to_string(f.p);
  j["certificate"] = cert.str();
  bool nonzero = !cert.is_zero();
  if (!f.is_rational() && cert.is_zero()) {
    BoundaryTensor aq = steiner::tensor_of_json(jtensor, Field::rationals());
    steiner::Scalar exact = steiner::hyperdet_certificate(aq);
    nonzero = !exact.is_zero();
    j["reverified"] = true;
    j["certificate_rational"] = exact.str();
  }
  j["nonzero"] = nonzero;
  return j;
}

int dispatch(const std::string& verb, const CommonOpts& common,
             const std::vector<std::string>& paths, CLI::App* sub) {
  Field f = parse_field(common.field_spec);

  if (verb == "hyperdet") {
    emit(certificate_report(load_json(paths[0]), f));
    return 0;
  }

  if (verb == "check") {
    Json jt = load_json(paths[0]);
    Json j = certificate_report(jt, f);
    bool route_minors = sub->get_option("--route")->as<std::string>() != "certificate";
    if (route_minors) {
      BoundaryTensor aq = steiner::tensor_of_json(jt, Field::rationals());
      bool minors = steiner::nondegenerate_by_minors(aq);
      j["minors"] = minors;
      j["agree"] = (minors == j["nonzero"].get<bool>());
    }
    emit(j);
    return 0;
  }

  if (verb == "unstable") {
    emit(steiner::json_of_unstable(steiner::unstable_scheme(load_bundle(paths[0], f), common.seed)));
    return 0;
  }

  if (verb == "classify") {
    emit(steiner::json_of_classification(steiner::classify(load_bundle(paths[0], f), common.seed)));
    return 0;
  }

  if (verb == "invariant") {
    emit(steiner::json_of_invariant(steiner::w_invariant(load_bundle(paths[0], f), common.seed),
                                    common.seed));
    return 0;
  }

  if (verb == "segre") {
    emit(steiner::json_of_segre(steiner::segre_intersection(load_bundle(paths[0], f), common.seed)));
    return 0;
  }

  if (verb == "member") {
    SteinerBundle s = load_bundle(paths[0], f);
    Hyperplane h = Hyperplane::of(parse_rat_list(sub->get_option("--hyperplane")->as<std::string>()));
    emit(steiner::json_of_membership(steiner::is_member(s, h)));
    return 0;
  }

  if (verb == "sections") {
    SteinerBundle s = load_bundle(paths[0], f);
    Json j;
    j["dims"] = s.tensor().format().dims;
    auto* tw = sub->get_option("--twist");
    Json rows = Json::array();
    if (tw->count() > 0) {
      unsigned t = tw->as<unsigned>();
      rows.push_back({{"twist", t}, {"dimension", steiner::sections_dim(s, t)}});
    } else {
      for (unsigned t = 0; t <= s.k(); ++t)
        rows.push_back({{"twist", t}, {"dimension", steiner::sections_dim(s, t)}});
    }
    j["sections"] = std::move(rows);
    emit(j);
    return 0;
  }

  if (verb == "elm") {
    SteinerBundle s = load_bundle(paths[0], f);
    Hyperplane h = Hyperplane::of(parse_rat_list(sub->get_option("--hyperplane")->as<std::string>()));
    steiner::ElmReport rep = steiner::elementary_transform(s, h);
    Json j;
    j["membership"] = steiner::json_of_membership(rep.membership);
    j["result"] = steiner::json_of_bundle(rep.result);
    emit(j);
    return 0;
  }

  if (verb == "gale") {
    emit(steiner::json_of_tensor(steiner::gale_permute(load_tensor(paths[0], f))));
    return 0;
  }

  if (verb == "normalform") {
    emit(steiner::json_of_tensor(steiner::column_normal_form(load_tensor(paths[0], f))));
    return 0;
  }

  if (verb == "stab") {
    emit(steiner::json_of_stabilizer(steiner::stabilizer_algebra(load_tensor(paths[0], f))));
    return 0;
  }

  if (verb == "iso") {
    emit(steiner::json_of_iso(
        steiner::iso_test(load_tensor(paths[0], f), load_tensor(paths[1], f))));
    return 0;
  }

  if (verb == "tomthumb") {
    BoundaryFormat fmt =
        steiner::validate_format(parse_size_list(sub->get_option("--dims")->as<std::string>()));
    emit(steiner::json_of_paths(fmt, steiner::path_slice_totals(fmt)));
    return 0;
  }

  if (verb == "weights") {
    BigRat scale = steiner::parse_rational(sub->get_option("--scale")->as<std::string>());
    Json j;
    if (!paths.empty()) {
      BoundaryTensor a = load_tensor(paths[0], f);
      steiner::WeightVector wv = steiner::canonical_weights(a.format(), scale);
      j = steiner::json_of_weights(wv);
      auto [lo, hi] = steiner::weight_range(a, wv);
      j["range"] = Json{{"min", steiner::rational_str(lo)}, {"max", steiner::rational_str(hi)}};
    } else {
      BoundaryFormat fmt =
          steiner::validate_format(parse_size_list(sub->get_option("--dims")->as<std::string>()));
      j = steiner::json_of_weights(steiner::canonical_weights(fmt, scale));
    }
    emit(j);
    return 0;
  }

  if (verb == "modulidim") {
    long long n = sub->get_option("--n")->as<long long>();
    long long k = sub->get_option("--k")->as<long long>();
    long long i = sub->get_option("--i")->as<long long>();
    Json j;
    j["n"] = n;
    j["k"] = k;
    j["i"] = i;
    j["dimension"] = steiner::moduli_dimension(n, k, i);
    emit(j);
    return 0;
  }

  throw ParseError("unknown verb '" + verb + "'");
}

int run_make(const std::string& kind, const CommonOpts& common, CLI::App* sub) {
  Field f = parse_field(common.field_spec);

  if (kind == "schwarzenberger") {
    std::size_t n = sub->get_option("--n")->as<std::size_t>();
    std::size_t k = sub->get_option("--k")->as<std::size_t>();
    emit(steiner::json_of_bundle(steiner::schwarzenberger(n, k, f)));
    return 0;
  }

  if (kind == "logarithmic") {
    Json jh = load_json(sub->get_option("--hyperplanes")->as<std::string>());
    emit(steiner::json_of_bundle(steiner::logarithmic(steiner::hyperplanes_of_json(jh), f)));
    return 0;
  }

  BoundaryFormat fmt =
      steiner::validate_format(parse_size_list(sub->get_option("--dims")->as<std::string>()));

  if (kind == "identity") {
    emit(steiner::json_of_tensor(steiner::make_identity(fmt, f)));
    return 0;
  }

  if (kind == "random") {
    long long lo = sub->get_option("--lo")->as<long long>();
    long long hi = sub->get_option("--hi")->as<long long>();
    Json j = steiner::json_of_tensor(steiner::random_tensor(fmt, common.seed, lo, hi, f));
    j["seed"] = common.seed;
    emit(j);
    return 0;
  }

  if (kind == "degenerate") {
    std::vector<std::size_t> beta = parse_size_list(sub->get_option("--beta")->as<std::string>());
    Json j = steiner::json_of_tensor(
        steiner::degenerate_pattern_tensor(fmt, beta, common.seed, f));
    j["seed"] = common.seed;
    emit(j);
    return 0;
  }

  throw ParseError("unknown make kind '" + kind + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with boundary-format tensors and their bundles"};
  app.require_subcommand(1);

  CommonOpts common;
  app.add_option("--field", common.field_spec,
                 "Coefficient field: 'rational' (default) or 'fp:<prime>'. Zero "
                 "certificates found modulo p are re-verified over the rationals.");
  app.add_option("--seed", common.seed, "PRNG seed (SplitMix64); echoed in reports");

  struct Spec {
    const char* name;
    const char* help;
    int files;
  };
  const Spec specs[] = {
      {"check", "Nondegeneracy by certificate and by the minor ideal", 1},
      {"hyperdet", "Nondegeneracy certificate alone", 1},
      {"unstable", "Scheme of unstable hyperplanes", 1},
      {"member", "Membership of one hyperplane in the unstable scheme", 1},
      {"sections", "Kernel-bundle section dimensions by twist", 1},
      {"elm", "Elementary transformation at an unstable hyperplane", 1},
      {"gale", "Exchange the two small factors", 1},
      {"stab", "Stabilizer algebra dimension and type", 1},
      {"iso", "Bundle isomorphism test for two tensors", 2},
      {"invariant", "Length of the unstable scheme", 1},
      {"classify", "Unstable scheme plus bundle classification", 1},
      {"segre", "Rank-one slices in large-factor coordinates", 1},
      {"tomthumb", "Admissible path counts and slice totals", 0},
      {"weights", "Canonical one-parameter weights, optionally with a tensor's range", 0},
      {"modulidim", "Dimension of the incidence family", 0},
      {"normalform", "Column echelon normal form of the slice span", 1},
  };

  std::vector<std::string> files;
  for (const Spec& spec : specs) {
    CLI::App* sub = app.add_subcommand(spec.name, spec.help);
    sub->fallthrough();
    if (spec.files > 0)
      sub->add_option("files", files, "input JSON file(s)")
          ->expected(spec.files)
          ->check(CLI::ExistingFile);
    if (std::string(spec.name) == "member" || std::string(spec.name) == "elm")
      sub->add_option("--hyperplane", "comma-separated rational coefficients")->required();
    if (std::string(spec.name) == "sections")
      sub->add_option("--twist", "single twist to evaluate (default: all of 0..k)");
    if (std::string(spec.name) == "tomthumb")
      sub->add_option("--dims", "format sides, comma-separated")->required();
    if (std::string(spec.name) == "weights") {
      sub->add_option("files", files, "tensor JSON")->expected(0, 1)->check(CLI::ExistingFile);
      sub->add_option("--dims", "format sides, comma-separated");
      sub->add_option("--scale", "weight scale N (rational)")->default_val("1");
    }
    if (std::string(spec.name) == "check")
      sub->add_option("--route", "both (default) or certificate")
          ->default_val("both")
          ->check(CLI::IsMember({"both", "certificate"}));
    if (std::string(spec.name) == "modulidim") {
      sub->add_option("--n", "base projective dimension")->required();
      sub->add_option("--k", "bundle quotient rank")->required();
      sub->add_option("--i", "hyperplanes on a common curve")->required();
    }
  }

  CLI::App* make = app.add_subcommand("make", "Construct tensors and bundles");
  make->require_subcommand(1);
  make->fallthrough();
  CLI::App* mk_schw = make->add_subcommand("schwarzenberger", "Binary-form multiplication bundle");
  mk_schw->add_option("--n", "base projective dimension")->required();
  mk_schw->add_option("--k", "quotient rank")->required();
  CLI::App* mk_log = make->add_subcommand("logarithmic", "Bundle of a hyperplane arrangement");
  mk_log->add_option("--hyperplanes", "JSON file with the arrangement")
      ->required()
      ->check(CLI::ExistingFile);
  CLI::App* mk_id = make->add_subcommand("identity", "Identity tensor of a format");
  mk_id->add_option("--dims", "format sides, comma-separated")->required();
  CLI::App* mk_rand = make->add_subcommand("random", "Seeded dense random tensor");
  mk_rand->add_option("--dims", "format sides, comma-separated")->required();
  mk_rand->add_option("--lo", "smallest entry")->default_val(-9);
  mk_rand->add_option("--hi", "largest entry")->default_val(9);
  CLI::App* mk_degen = make->add_subcommand("degenerate", "Seeded corner-pattern degenerate tensor");
  mk_degen->add_option("--dims", "format sides, comma-separated")->required();
  mk_degen->add_option("--beta", "pattern depth per small factor, comma-separated")->required();
  for (CLI::App* kind : {mk_schw, mk_log, mk_id, mk_rand, mk_degen}) kind->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    if (sub->get_name() == "make") {
      CLI::App* kind = sub->get_subcommands().front();
      return run_make(kind->get_name(), common, kind);
    }
    return dispatch(sub->get_name(), common, files, sub);
  } catch (const steiner::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const steiner::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const steiner::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
