#include "hassett/cli.hpp"

#include <cstdlib>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hassett/conditions.hpp"
#include "hassett/errors.hpp"
#include "hassett/family.hpp"
#include "hassett/lattice.hpp"
#include "hassett/motive.hpp"
#include "hassett/serialize.hpp"

namespace hassett::cli {

namespace {

using nlohmann::json;

int exit_code_for(const error& e) {
  const std::string& code = e.code();
  if (code == "witness-invalid" || code == "positivity-failure" ||
      code == "invalid-k3-disc") {
    return kExitDomainFailure;
  }
  return kExitInvalidInput;
}

json envelope(const std::string& command) {
  return json{{"schema_version", kSchemaVersion}, {"command", command}};
}

void emit_json(std::ostream& out, json env) { out << env.dump(2) << "\n"; }

std::string opt_str(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return "";
  std::ostringstream os;
  os << j.at(key);
  return os.str();
}

std::string csv_field(const json& row, const std::string& path) {
  // path like "bulles.f"; empty string when any component is null/absent.
  const json* cur = &row;
  std::size_t start = 0;
  while (true) {
    std::size_t dot = path.find('.', start);
    std::string key = path.substr(start, dot - start);
    if (!cur->contains(key) || cur->at(key).is_null()) return "";
    cur = &cur->at(key);
    if (dot == std::string::npos) break;
    start = dot + 1;
  }
  if (cur->is_boolean()) return cur->get<bool>() ? "true" : "false";
  if (cur->is_string()) return cur->get<std::string>();
  std::ostringstream os;
  os << *cur;
  return os.str();
}

const std::vector<std::string> kProfileCsvColumns = {
    "d",           "residue_mod_6",
    "admissible",  "has_associated_k3",
    "fano_hilb2.n", "bulles.f",
    "bulles.g",    "bulles.n",
    "addington.certificate.n", "addington.certificate.a",
    "llsvs.certificate.n",     "llsvs.certificate.a",
    "tail.m",      "tail.offset",
    "contains_plane_divisor",  "c14_member_rational"};

std::string csv_header(const std::vector<std::string>& columns) {
  std::string h;
  for (const auto& c : columns) {
    if (!h.empty()) h += ",";
    std::string name = c;
    for (char& ch : name)
      if (ch == '.') ch = '_';
    h += name;
  }
  return h;
}

std::string csv_row(const json& row, const std::vector<std::string>& columns) {
  std::string line;
  for (const auto& c : columns) {
    if (!line.empty()) line += ",";
    line += csv_field(row, c);
  }
  return line;
}

void print_profile_table(std::ostream& out, const json& p) {
  out << "d:                     " << p.at("d") << "\n"
      << "residue mod 6:         " << p.at("residue_mod_6") << "\n"
      << "admissible:            " << csv_field(p, "admissible") << "\n"
      << "associated K3:         " << csv_field(p, "has_associated_k3") << "\n"
      << "fano = hilb^2(K3):     " << (p.at("fano_hilb2").is_null() ? "none" : "n=" + csv_field(p, "fano_hilb2.n")) << "\n"
      << "bulles (***):          "
      << (p.at("bulles").is_null()
              ? "none"
              : "(f=" + csv_field(p, "bulles.f") + ", g=" + csv_field(p, "bulles.g") +
                    ", n=" + csv_field(p, "bulles.n") + ")")
      << "\n"
      << "addington:             "
      << (p.at("addington").at("certificate").is_null()
              ? "bound-exhausted (a <= " + opt_str(p.at("addington"), "a_bound") + ")"
              : "(n=" + csv_field(p, "addington.certificate.n") +
                    ", a=" + csv_field(p, "addington.certificate.a") + ")")
      << "\n"
      << "llsvs (***'):          "
      << (p.at("llsvs").at("certificate").is_null()
              ? "bound-exhausted (a <= " + opt_str(p.at("llsvs"), "a_bound") + ")"
              : "(n=" + csv_field(p, "llsvs.certificate.n") +
                    ", a=" + csv_field(p, "llsvs.certificate.a") + ")")
      << "\n"
      << "tail:                  "
      << (p.at("tail").is_null()
              ? "none"
              : "(m=" + csv_field(p, "tail.m") + ", offset=" + csv_field(p, "tail.offset") + ")")
      << "\n"
      << "contains plane (d=8):  " << csv_field(p, "contains_plane_divisor") << "\n"
      << "C14 member, rational:  " << csv_field(p, "c14_member_rational") << "\n";
}

void print_trace_table(std::ostream& out, const json& trace) {
  int i = 1;
  for (const auto& step : trace) {
    out << "  " << i++ << ". [" << step.at("anchor").get<std::string>() << "] "
        << step.at("statement").get<std::string>() << "\n";
  }
}

struct Options {
  std::string format = "json";
  std::int64_t a_bound = conditions::kDefaultABound;
};

int fail(std::ostream& out, std::ostream& err, const Options& opts,
         const std::string& command, const error& e) {
  if (opts.format == "json") {
    json env = envelope(command);
    env["errors"] = json::array({{{"code", e.code()}, {"message", e.what()}}});
    emit_json(out, env);
  } else {
    err << "error [" << e.code() << "]: " << e.what() << "\n";
  }
  return exit_code_for(e);
}

int cmd_check(std::ostream& out, const Options& opts, std::int64_t d) {
  if (!conditions::is_admissible(d)) throw not_admissible(d);
  auto p = conditions::profile(d, opts.a_bound);
  json jp = p;
  if (opts.format == "json") {
    json env = envelope("check");
    env["result"] = jp;
    emit_json(out, env);
  } else if (opts.format == "csv") {
    out << csv_header(kProfileCsvColumns) << "\n" << csv_row(jp, kProfileCsvColumns) << "\n";
  } else {
    print_profile_table(out, jp);
  }
  return kExitOk;
}

int cmd_enumerate(std::ostream& out, const Options& opts, std::int64_t min,
                  std::int64_t max, const conditions::ProfileFilter& filter) {
  if (min < 1 || min > max) throw invalid_range("need 1 <= min <= max");
  if (max > 10'000'000) throw invalid_range("max is capped at 10^7");

  if (opts.format == "json") {
    auto profiles = conditions::enumerate_profiles(min, max, filter, opts.a_bound);
    json env = envelope("enumerate");
    env["result"] = json{{"min", min}, {"max", max}, {"profiles", profiles}};
    emit_json(out, env);
    return kExitOk;
  }

  // table / csv stream one row per admissible match
  if (opts.format == "csv") out << csv_header(kProfileCsvColumns) << "\n";
  const std::vector<std::string> table_cols = {
      "d", "has_associated_k3", "fano_hilb2.n", "bulles.f", "bulles.g",
      "bulles.n", "addington.certificate.a", "llsvs.certificate.a", "tail.m"};
  if (opts.format == "table") {
    out << "d\tk3\tfano_n\tbulles(f,g,n)\taddington\tllsvs\ttail_m\n";
  }
  for (std::int64_t d = std::max<std::int64_t>(min, 8); d <= max; ++d) {
    if (!conditions::is_admissible(d)) continue;
    auto p = conditions::profile(d, opts.a_bound);
    if (!conditions::matches(p, filter)) continue;
    json jp = p;
    if (opts.format == "csv") {
      out << csv_row(jp, kProfileCsvColumns) << "\n";
    } else {
      out << d << "\t" << csv_field(jp, "has_associated_k3") << "\t"
          << csv_field(jp, "fano_hilb2.n") << "\t"
          << (jp.at("bulles").is_null()
                  ? "-"
                  : csv_field(jp, "bulles.f") + "," + csv_field(jp, "bulles.g") + "," +
                        csv_field(jp, "bulles.n"))
          << "\t" << csv_field(jp, "addington.certificate.a") << "\t"
          << csv_field(jp, "llsvs.certificate.a") << "\t" << csv_field(jp, "tail.m")
          << "\n";
    }
  }
  return kExitOk;
}

int cmd_witness(std::ostream& out, const Options& opts, std::int64_t d,
                std::int64_t k3_disc) {
  auto w = family::build_witness(d, k3_disc);
  auto trace = family::verify_witness(w);
  if (opts.format == "json") {
    json env = envelope("witness");
    env["result"] = json{{"witness", w}, {"trace", trace}};
    emit_json(out, env);
  } else if (opts.format == "csv") {
    out << "target_d,k3_disc,tail_discs,all_discs\n" << w.target_d << "," << w.k3_disc << ",";
    for (std::size_t i = 0; i < w.tail_discs.size(); ++i)
      out << (i ? ";" : "") << w.tail_discs[i];
    out << ",";
    for (std::size_t i = 0; i < w.all_discs.size(); ++i)
      out << (i ? ";" : "") << w.all_discs[i];
    out << "\n";
  } else {
    out << "target d:  " << w.target_d << "\nk3 disc:   " << w.k3_disc << "\ndiscs:     ";
    for (std::size_t i = 0; i < w.all_discs.size(); ++i)
      out << (i ? ", " : "") << w.all_discs[i];
    out << "\nverification trace:\n";
    print_trace_table(out, json(trace));
  }
  return kExitOk;
}

int cmd_classify(std::ostream& out, const Options& opts, std::int64_t d,
                 const std::string& witness_mode, std::int64_t k3_disc) {
  if (witness_mode != "auto" && witness_mode != "none")
    throw invalid_input("--witness must be auto or none");
  auto p = conditions::profile(d, opts.a_bound);
  if (!p.admissible) throw not_admissible(d);
  std::optional<family::FamilyWitness> witness;
  if (witness_mode == "auto") witness = family::build_witness(d, k3_disc);
  auto classification = motive::classify(p, witness);
  auto fano = motive::fano_status(p, classification.status);
  auto llsvs = motive::llsvs_status(p, classification.status);

  if (opts.format == "json") {
    json env = envelope("classify");
    json result = {{"d", d},
                   {"status", classification.status},
                   {"trace", classification.trace},
                   {"fano", fano},
                   {"llsvs", llsvs}};
    if (witness) result["witness"] = *witness;
    env["result"] = result;
    emit_json(out, env);
  } else if (opts.format == "csv") {
    json js = classification.status, jf = fano, jl = llsvs;
    out << "d,finite_dimensional,abelian_type,fano_relation,llsvs_relation\n"
        << d << "," << csv_field(js, "finite_dimensional") << ","
        << csv_field(js, "abelian_type") << "," << csv_field(jf, "relation") << ","
        << csv_field(jl, "relation") << "\n";
  } else {
    json js = classification.status;
    out << "d:                  " << d << "\n"
        << "finite dimensional: " << csv_field(js, "finite_dimensional") << "\n"
        << "abelian type:       " << csv_field(js, "abelian_type") << "\n"
        << "F(X):               " << motive::relation_tag(fano.relation) << "\n"
        << "L(X):               " << motive::relation_tag(llsvs.relation) << "\n"
        << "derivation:\n";
    print_trace_table(out, json(classification.trace));
  }
  return kExitOk;
}

int cmd_lattice(std::ostream& out, const Options& opts,
                const std::vector<std::int64_t>& discs) {
  auto gram = lattice::simultaneous_gram(discs);
  std::vector<std::int64_t> sub;
  for (int i = 1; i < gram.rank(); ++i)
    sub.push_back(lattice::sublattice_discriminant(gram, i));
  bool pd = lattice::is_positive_definite(gram);

  if (opts.format == "json") {
    json env = envelope("lattice");
    env["result"] = json{{"gram", gram},
                         {"rank", gram.rank()},
                         {"sublattice_discriminants", sub},
                         {"positive_definite", pd}};
    emit_json(out, env);
  } else if (opts.format == "csv") {
    out << "i,j,value\n";
    for (int i = 0; i < gram.rank(); ++i)
      for (int j = 0; j < gram.rank(); ++j)
        out << i << "," << j << "," << gram.entries[i][j] << "\n";
  } else {
    out << "rank " << gram.rank() << " Gram matrix:\n";
    for (const auto& row : gram.entries) {
      out << "  [";
      for (std::size_t j = 0; j < row.size(); ++j) out << (j ? ", " : "") << row[j];
      out << "]\n";
    }
    out << "sublattice discriminants: ";
    for (std::size_t i = 0; i < sub.size(); ++i) out << (i ? ", " : "") << sub[i];
    out << "\npositive definite: " << (pd ? "true" : "false") << "\n";
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Arithmetic of special cubic fourfolds: discriminant conditions, "
               "lattice realizations, family witnesses, motive classification"};
  app.require_subcommand(1);

  Options opts;
  if (const char* env = std::getenv("HASSETT_LAB_A_BOUND")) {
    try {
      opts.a_bound = std::stoll(env);
    } catch (const std::exception&) {
      err << "error [invalid-input]: HASSETT_LAB_A_BOUND is not an integer\n";
      return kExitInvalidInput;
    }
  }
  app.add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--a-bound", opts.a_bound, "Bound on a for Pell-type searches")
      ->check(CLI::PositiveNumber);

  std::int64_t d = 0, min = 0, max = 0, k3_disc = 14;
  std::string witness_mode = "auto";
  std::vector<std::int64_t> discs;
  conditions::ProfileFilter filter;

  // allow the global flags to appear after the subcommand too
  app.fallthrough();

  auto* check = app.add_subcommand("check", "Full condition profile of one discriminant");
  check->add_option("d", d, "discriminant")->required();

  auto* enumerate = app.add_subcommand("enumerate", "Profiles over a discriminant range");
  enumerate->add_option("min", min)->required();
  enumerate->add_option("max", max)->required();
  enumerate->add_flag("--k3", filter.k3, "require an associated K3 surface");
  enumerate->add_flag("--fano", filter.fano, "require d = 2(n^2+n+1)");
  enumerate->add_flag("--bulles", filter.bulles, "require condition (***)");
  enumerate->add_flag("--addington", filter.addington, "require d*a^2 = 2n^2+2n+2");
  enumerate->add_flag("--llsvs", filter.llsvs, "require condition (***')");
  enumerate->add_flag("--tail", filter.tail, "require d = 6m^2 or 6m^2+2");

  auto* witness = app.add_subcommand("witness", "Build and verify a 19-discriminant family witness");
  witness->add_option("d", d, "target discriminant")->required();
  witness->add_option("--k3-disc", k3_disc, "K3-linked discriminant slot")
      ->capture_default_str();

  auto* classify = app.add_subcommand("classify", "Motive classification with derivation trace");
  classify->add_option("d", d, "discriminant")->required();
  classify->add_option("--witness", witness_mode, "auto|none")->capture_default_str();
  classify->add_option("--k3-disc", k3_disc, "K3-linked slot for the auto witness")
      ->capture_default_str();

  auto* lattice_cmd = app.add_subcommand("lattice", "Simultaneous Gram realization of labellings");
  lattice_cmd->add_option("--discs", discs, "comma separated discriminants")
      ->required()
      ->delimiter(',');

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help
      out << app.help() << "\n";
      return kExitOk;
    }
    err << "error [invalid-input]: " << e.what() << "\n";
    return kExitInvalidInput;
  }

  std::string command = app.get_subcommands().front()->get_name();
  try {
    if (check->parsed()) return cmd_check(out, opts, d);
    if (enumerate->parsed()) return cmd_enumerate(out, opts, min, max, filter);
    if (witness->parsed()) return cmd_witness(out, opts, d, k3_disc);
    if (classify->parsed()) return cmd_classify(out, opts, d, witness_mode, k3_disc);
    if (lattice_cmd->parsed()) return cmd_lattice(out, opts, discs);
  } catch (const error& e) {
    return fail(out, err, opts, command, e);
  }
  return kExitInvalidInput;
}

}  // namespace hassett::cli
