#include <CLI11.hpp>
#include <openssl/evp.h>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "hopfgal/hopfgal.hpp"

namespace {

using hopfgal::io::json;

enum Exit { ok = 0, violation = 1, invalid = 2 };

struct Job {
  std::string command;
  std::string example;
  std::string input;
  std::string subspace;
  std::string ideals;
  std::string subrings;
  std::string field_flag;
  std::string out;
  bool enumerate = false;
  unsigned long p = 0;
  std::uint64_t cap = hopfgal::default_enumeration_cap;
  std::uint32_t degree = 4;
  std::uint32_t window = 5;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw hopfgal::ParseError("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
  std::ostringstream s;
  for (unsigned int i = 0; i < len; ++i) s << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  return s.str();
}

std::vector<std::string> input_paths(const Job& job) {
  std::vector<std::string> paths;
  for (const auto* p : {&job.input, &job.subspace, &job.ideals, &job.subrings})
    if (!p->empty()) paths.push_back(*p);
  return paths;
}

/// Hash over the job options and the bytes of every input file, in a fixed order.
std::string input_hash(const Job& job) {
  std::ostringstream s;
  s << job.command << '\n' << job.example << '\n' << job.field_flag << '\n' << job.enumerate << ' ' << job.p << ' ' << job.cap << ' ' << job.degree << ' ' << job.window << '\n';
  for (const auto& path : input_paths(job)) {
    try {
      s << slurp(path) << '\n';
    } catch (const hopfgal::ParseError&) {
      s << "unreadable " << path << '\n';
    }
  }
  return sha256_hex(s.str());
}

template <hopfgal::ExactField F>
std::vector<hopfgal::Subspace<F>> load_subspaces(const std::string& path, const F& f, std::size_t ambient) {
  auto v = hopfgal::io::subspaces_from_json(hopfgal::io::read_file(path), f);
  for (const auto& s : v)
    if (s.ambient_dim() != ambient)
      throw hopfgal::ParseError(path + ": subspace of ambient dimension " + std::to_string(s.ambient_dim()) + " in an algebra of dimension " + std::to_string(ambient));
  return v;
}

template <hopfgal::ExactField F>
int galois_job(const Job& job, const hopfgal::LeftBialgebroid<F>& b, json& result) {
  using namespace hopfgal;
  HopfData<F> h(b);
  std::vector<Subspace<F>> ideals, subrings;
  if (job.enumerate) {
    if constexpr (std::is_same_v<F, PrimeField>) {
      auto counts = enumerate_lattices(b, ideals, subrings, job.cap);
      result["enumeration"] = {{"p", b.field().modulus()}, {"subspaces", counts.subspaces}, {"ideals", counts.ideals}, {"subrings", counts.subrings}};
    } else {
      throw InvalidArgument("enumeration needs a prime field; pass --p or --field gf:p");
    }
  } else {
    if (job.ideals.empty() && job.subrings.empty()) throw InvalidArgument("pass --ideals/--subrings or --enumerate");
    if (!job.ideals.empty()) ideals = load_subspaces(job.ideals, b.field(), b.dim());
    if (!job.subrings.empty()) subrings = load_subspaces(job.subrings, b.field(), b.dim());
  }
  GaloisReport<F> rep;
  if (job.command == "connection") {
    rep = check_connection(h, ideals, subrings);
  } else {
    rep = verify_bijection(h, ideals, subrings);
    check_comparison_maps(h, rep);
  }
  result["report"] = io::to_json(rep);
  if (!rep.inputs_valid()) return Exit::invalid;
  return rep.ok() ? Exit::ok : Exit::violation;
}

template <hopfgal::ExactField F>
int run_with_field(const Job& job, const F& f, json& result) {
  using namespace hopfgal;
  if (job.command == "example") {
    if (job.example == "sl2") {
      auto r = rewrite::sl2_case_study(f, job.degree);
      result["report"] = io::to_json(r);
      return r.ok() ? Exit::ok : Exit::violation;
    }
    if (job.window == 0) throw InvalidArgument("--window must be at least 1");
    auto r = rewrite::laurent_case_study(f, job.window);
    result["report"] = io::to_json(r);
    return r.ok() ? Exit::ok : Exit::violation;
  }

  const auto raw = io::read_file(job.input);
  if (job.command == "validate") {
    auto b = io::bialgebroid_from_json(raw, f);
    auto rep = validate_bialgebroid(b);
    result["report"] = io::to_json(rep);
    return rep.ok() ? Exit::ok : Exit::violation;
  }

  auto b = io::load_bialgebroid(raw, f);
  result["dims"] = {{"H", b.dim()}, {"A", b.base_dim()}};

  if (job.command == "phi" || job.command == "psi") {
    json list = json::array();
    for (const auto& s : load_subspaces(job.subspace, f, b.dim())) {
      if (job.command == "phi")
        list.push_back({{"subring", io::to_json(s)}, {"phi", io::to_json(phi(b, s))}});
      else
        list.push_back({{"ideal", io::to_json(s)}, {"psi", io::to_json(psi(b, s))}});
    }
    result["report"] = {{"results", std::move(list)}};
    return Exit::ok;
  }

  if (job.command == "hopf-check") {
    auto beta = beta_map(b);
    json r{{"beta_shape", beta.shape()}, {"beta_rank", rank(beta)}};
    try {
      HopfData<F> h(b);
      auto t = check_translation_map(h);
      r["left_hopf"] = true;
      r["distinguished_dim"] = h.distinguished().dim();
      r["translation_map"] = io::to_json(t);
      result["report"] = std::move(r);
      return t.ok() ? Exit::ok : Exit::violation;
    } catch (const NotLeftHopf& e) {
      r["left_hopf"] = false;
      r["detail"] = e.what();
      result["report"] = std::move(r);
      return Exit::violation;
    }
  }

  return galois_job(job, b, result);
}

int run(const Job& job, json& result) {
  using namespace hopfgal;
  std::optional<io::FieldSpec> flag;
  if (!job.field_flag.empty()) flag = io::parse_field_flag(job.field_flag);
  if (job.p) {
    if (!is_prime(job.p)) throw ParseError("--p must be prime");
    if (flag && *flag != io::FieldSpec{job.p}) throw ParseError("--p and --field disagree");
    flag = io::FieldSpec{job.p};
  }
  io::FieldSpec spec;
  if (job.command == "example") {
    spec = flag.value_or(io::FieldSpec{});
  } else {
    const auto raw = io::read_file(job.input);
    if (!raw.is_object() || !raw.contains("field")) throw ParseError(job.input + ": missing field descriptor");
    spec = io::resolve_field(io::field_spec_from_json(raw["field"]), flag);
  }
  result["field"] = spec.name();
  if (spec.rational()) return run_with_field(job, RationalField{}, result);
  return run_with_field(job, PrimeField(spec.p), result);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of Galois correspondences for finite-dimensional Hopf algebroids"};
  app.require_subcommand(1);
  Job job;
  std::string field_help = "override the file's field: q or gf:p";

  auto common = [&](CLI::App* sub) {
    sub->add_option("--field", job.field_flag, field_help);
    sub->add_option("--out", job.out, "write the report here instead of stdout");
  };
  auto with_input = [&](CLI::App* sub) {
    sub->add_option("file", job.input, "algebroid JSON file");
  };

  auto* validate = app.add_subcommand("validate", "check every bialgebroid axiom");
  with_input(validate);
  validate->get_option("file")->required();
  common(validate);

  for (const char* name : {"phi", "psi"}) {
    auto* sub = app.add_subcommand(name, std::string(name) == "phi" ? "B -> H B^+" : "I -> coinvariants of H/I");
    with_input(sub);
    sub->get_option("file")->required();
    sub->add_option("--subspace", job.subspace, "subspace file")->required();
    common(sub);
  }

  auto* hopf = app.add_subcommand("hopf-check", "invert the canonical map and test the translation map");
  with_input(hopf);
  hopf->get_option("file")->required();
  common(hopf);

  auto* connection = app.add_subcommand("connection", "Galois connection laws on given ideals and subrings");
  with_input(connection);
  connection->get_option("file")->required();
  connection->add_option("--ideals", job.ideals, "left ideal coideals");
  connection->add_option("--subrings", job.subrings, "right comodule subrings");
  connection->add_flag("--enumerate", job.enumerate, "use every object of the lattice over GF(p)");
  connection->add_option("--p", job.p, "prime for enumeration");
  connection->add_option("--cap", job.cap, "maximal p^dim for enumeration");
  common(connection);

  auto* bijection = app.add_subcommand("bijection", "filter by hypotheses and check Phi, Psi are inverse");
  with_input(bijection);
  bijection->add_option("--input", job.input, "algebroid JSON file");
  bijection->add_option("--ideals", job.ideals, "left ideal coideals");
  bijection->add_option("--subrings", job.subrings, "right comodule subrings");
  bijection->add_flag("--enumerate", job.enumerate, "use every object of the lattice over GF(p)");
  bijection->add_option("--p", job.p, "prime for enumeration");
  bijection->add_option("--cap", job.cap, "maximal p^dim for enumeration");
  common(bijection);

  auto* enumerate = app.add_subcommand("enumerate-verify", "enumerate over GF(p) and run every check");
  with_input(enumerate);
  enumerate->get_option("file")->required();
  enumerate->add_option("--p", job.p, "prime for enumeration");
  enumerate->add_option("--cap", job.cap, "maximal p^dim for enumeration");
  common(enumerate);

  auto* example = app.add_subcommand("example", "built-in case studies");
  example->require_subcommand(1);
  auto* sl2 = example->add_subcommand("sl2", "equalizer of the two maps out of O(SL_2)");
  sl2->add_option("--degree", job.degree, "degree bound")->check(CLI::NonNegativeNumber);
  common(sl2);
  auto* laurent = example->add_subcommand("laurent", "k[X] inside k[X, X^-1]");
  laurent->add_option("--window", job.window, "exponent window");
  common(laurent);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? Exit::ok : Exit::invalid;
  }

  for (auto* sub : app.get_subcommands()) job.command = sub->get_name();
  if (job.command == "example") job.example = sl2->parsed() ? "sl2" : "laurent";
  if (job.command == "enumerate-verify") job.enumerate = true;
  if (job.command != "example" && job.input.empty()) {
    std::cerr << "error: an algebroid file is required\n";
    return Exit::invalid;
  }

  json result{{"command", job.example.empty() ? job.command : job.command + " " + job.example}};
  int code = Exit::invalid;
  try {
    result["input_sha256"] = input_hash(job);
    result["inputs"] = input_paths(job);
    code = run(job, result);
  } catch (const hopfgal::ContractViolation& e) {
    result["error"] = {{"kind", "violation"}, {"message", e.what()}};
    code = Exit::violation;
  } catch (const hopfgal::Error& e) {
    result["error"] = {{"kind", "invalid input"}, {"message", e.what()}};
    code = Exit::invalid;
  } catch (const std::exception& e) {
    result["error"] = {{"kind", "invalid input"}, {"message", e.what()}};
    code = Exit::invalid;
  }
  result["exit_code"] = code;
  if (result.contains("error")) std::cerr << "error: " << result["error"]["message"].get<std::string>() << "\n";

  const auto text = result.dump(2) + "\n";
  if (job.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(job.out, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << job.out << "\n";
      return Exit::invalid;
    }
    out << text;
  }
  return code;
}
