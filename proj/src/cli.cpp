#include "isofam/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "isofam/conjecture.hpp"
#include "isofam/counting.hpp"
#include "isofam/families.hpp"
#include "isofam/io.hpp"
#include "isofam/noncrossing.hpp"
#include "isofam/verify.hpp"

namespace isofam::cli {

namespace {

using nlohmann::json;

// Raised for bad user input discovered after argument parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void require_even(int D, int min = 0) {
  if (D < min || D % 2 != 0) {
    throw UsageError("--D must be an even integer >= " + std::to_string(min) + ", got " +
                     std::to_string(D));
  }
}

std::string subspace_text(const gf2::Subspace& s) {
  if (s.is_zero()) return "0";
  std::string out;
  for (gf2::Word r : s.rows()) {
    if (!out.empty()) out += '+';
    out += "F(";
    bool first = true;
    for (int i = 1; i <= s.ambient_dim(); ++i) {
      if (((r >> (i - 1)) & 1u) == 0) continue;
      if (!first) out += '+';
      first = false;
      out += "e" + std::to_string(i);
    }
    out += ')';
  }
  return out;
}

std::string arcs_text(const noncrossing::ArcSequence& seq) {
  if (seq.empty()) return "{}";
  std::string out = "{";
  for (std::size_t k = 0; k < seq.arcs().size(); ++k) {
    const auto& arc = seq.arcs()[k];
    if (k) out += ", ";
    out += "e_{" + std::to_string(arc.a) + "," + std::to_string(arc.b) + "}";
  }
  return out + "}";
}

oracle::OracleBudget budget_from_env() {
  oracle::OracleBudget budget;
  auto read = [](const char* name, int& into) {
    if (const char* v = std::getenv(name)) {
      try {
        into = std::stoi(v);
      } catch (const std::exception&) {
        throw UsageError(std::string(name) + " must be an integer, got \"" + v + "\"");
      }
    }
  };
  read("ISOFAM_ORACLE_MAX_DIM", budget.max_ambient_dim);
  read("ISOFAM_ORACLE_MAX_ODD_DIM", budget.max_odd_side_dim);
  read("ISOFAM_ORACLE_MAX_ARCS", budget.max_arcs);
  return budget;
}

struct EnumerateArgs {
  std::string kind;
  int D = 0;
  std::optional<int> grade;
  std::string format = "text";
};

int do_enumerate(const EnumerateArgs& a, std::ostream& out) {
  require_even(a.D);
  if (a.kind == "z") {
    std::vector<noncrossing::ArcSequence> members;
    for (auto& s : noncrossing::enumerate_Z(a.D)) {
      if (!a.grade || s.size() == *a.grade) members.push_back(std::move(s));
    }
    if (a.format == "json") {
      json j = io::to_json(members, a.D);
      j["kind"] = a.kind;
      out << j.dump() << '\n';
    } else if (a.format == "csv") {
      out << "index,s,arcs\n";
      for (std::size_t k = 0; k < members.size(); ++k) {
        out << k << ',' << members[k].size() << ",\"" << io::to_json(members[k]).dump() << "\"\n";
      }
    } else {
      for (const auto& s : members) out << arcs_text(s) << '\n';
    }
    return kExitOk;
  }

  std::vector<gf2::Subspace> all;
  if (a.kind == "c") {
    all = noncrossing::build_C(a.D).members;
  } else {
    auto t = families::build_families(a.D);
    if (a.kind == "f0") {
      all = std::move(t.f0);
    } else if (a.kind == "f1") {
      all = std::move(t.f1);
    } else {
      all = std::move(t.f0_lagrangian);
    }
  }
  std::vector<gf2::Subspace> members;
  for (auto& e : all) {
    if (!a.grade || e.dim() == *a.grade) members.push_back(std::move(e));
  }
  if (a.format == "json") {
    json list = json::array();
    for (const auto& e : members) list.push_back(io::to_json(e));
    out << json{{"D", a.D}, {"kind", a.kind}, {"members", std::move(list)}}.dump() << '\n';
  } else if (a.format == "csv") {
    out << "index,dim,basis\n";
    for (std::size_t k = 0; k < members.size(); ++k) {
      out << k << ',' << members[k].dim() << ',' << io::subspace_csv_field(members[k]) << '\n';
    }
  } else {
    for (const auto& e : members) out << subspace_text(e) << '\n';
  }
  return kExitOk;
}

int do_verify(int D_min, int D_max, bool use_oracle, std::ostream& out) {
  require_even(D_min, 2);
  require_even(D_max, 2);
  if (D_max < D_min) throw UsageError("--D-max must be >= --D-min");
  verify::VerifyOptions options{D_min, D_max, use_oracle, budget_from_env()};
  const auto report = verify::run(options);

  counting::write_csv_header(out);
  for (const auto& c : report.counts) counting::write_csv(out, c);
  out << "\nD,check,examined,result\n";
  for (const auto& c : report.checks) {
    out << c.D << ',' << c.name << ',' << c.examined << ',' << (c.pass ? "PASS" : "FAIL") << '\n';
  }
  for (const auto& c : report.counts) {
    for (const auto& row : c.rows) {
      if (!row.pass()) {
        out << "\nFAIL D=" << c.D << ' ' << row.label << ": observed " << row.observed
            << ", expected " << row.expected << '\n';
        return kExitFailed;
      }
    }
  }
  for (const auto& c : report.checks) {
    if (!c.pass) {
      out << "\nFAIL D=" << c.D << ' ' << c.name << ": " << c.counterexample << '\n';
      return kExitFailed;
    }
  }
  out << "\nALL PASS\n";
  return kExitOk;
}

int do_map(const std::string& op, int D, const std::string& input, std::ostream& out) {
  require_even(D);
  json j;
  try {
    j = json::parse(input);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("--input is not valid JSON: ") + e.what());
  }
  try {
    if (op == "theta") {
      out << io::to_json(noncrossing::theta(io::arcs_from_json(j, D))).dump() << '\n';
    } else if (op == "decompose") {
      const auto dec = noncrossing::decompose(io::arcs_from_json(j, D));
      out << json{{"i", dec.i}, {"previous", io::to_json(dec.previous)}}.dump() << '\n';
    } else {
      const gf2::Subspace e = io::subspace_from_json(j, D);
      if (e.ambient_dim() != D) {
        throw UsageError("input subspace has D = " + std::to_string(e.ambient_dim()) +
                         ", expected " + std::to_string(D));
      }
      if (op == "theta-inv") {
        const noncrossing::ThetaMap map(D);
        out << io::to_json(noncrossing::theta_inverse(map, e)).dump() << '\n';
      } else if (op == "xi" || op == "xi-inv") {
        const auto t = families::build_families(D);
        if (op == "xi") {
          out << io::to_json(families::xi(t, e)).dump() << '\n';
        } else {
          if (!t.in_f0_sub(e)) {
            throw UsageError(gf2::to_string(e) + " is not in F0_<D/2(V_" + std::to_string(D) + ")");
          }
          out << io::to_json(families::xi_inverse(families::XiMap(t), e)).dump() << '\n';
        }
      } else if (op == "lagrangian") {
        out << io::to_json(noncrossing::to_lagrangian(noncrossing::build_C(D), e)).dump() << '\n';
      } else {
        out << io::to_json(noncrossing::from_lagrangian(families::build_families(D), e)).dump()
            << '\n';
      }
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  } catch (const std::out_of_range& e) {
    throw UsageError(e.what());
  }
  return kExitOk;
}

int do_match(const std::string& path, std::ostream& out, std::ostream& err) {
  conjecture::SuppliedFamily fam;
  try {
    fam = conjecture::load_family(path);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  if (fam.d > conjecture::kMaxRank) {
    throw UsageError("d = " + std::to_string(fam.d) + " exceeds the exhaustive search bound " +
                     std::to_string(conjecture::kMaxRank));
  }
  const auto result = conjecture::gl_match(fam);
  out << conjecture::to_json(result).dump() << '\n';
  if (!result.found) {
    err << "no match: " << result.reason << '\n';
    return kExitFailed;
  }
  return kExitOk;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << text;
}

int do_export(int D, const std::string& dir, std::ostream& out) {
  require_even(D, 2);
  const std::filesystem::path root(dir);
  std::filesystem::create_directories(root);
  const auto t = families::build_families(D);
  const auto c = noncrossing::build_C(D);
  const auto z = noncrossing::enumerate_Z(D);
  const std::string tag = "_D" + std::to_string(D);

  write_file(root / ("families" + tag + ".json"), io::to_json(t).dump(1) + "\n");
  write_file(root / ("c" + tag + ".json"), io::to_json(c).dump(1) + "\n");
  write_file(root / ("z" + tag + ".json"), io::to_json(z, D).dump(1) + "\n");

  std::string fam_csv = "family,dim,basis\n";
  for (const auto& e : t.f0) fam_csv += "f0," + std::to_string(e.dim()) + "," + io::subspace_csv_field(e) + "\n";
  for (const auto& e : t.f1) fam_csv += "f1," + std::to_string(e.dim()) + "," + io::subspace_csv_field(e) + "\n";
  write_file(root / ("families" + tag + ".csv"), fam_csv);

  std::string c_csv = "dim,basis,arcs\n";
  const noncrossing::ThetaMap theta(D);
  for (const auto& e : c.members) {
    c_csv += std::to_string(e.dim()) + "," + io::subspace_csv_field(e) + ",\"" +
             io::to_json(noncrossing::theta_inverse(theta, e)).dump() + "\"\n";
  }
  write_file(root / ("c" + tag + ".csv"), c_csv);

  std::ostringstream counts;
  counting::write_csv_header(counts);
  counting::write_csv(counts, counting::verify_counts(D));
  write_file(root / ("counts" + tag + ".csv"), counts.str());

  out << "wrote 6 files to " << root.string() << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Isotropic subspace families over F_2 and noncrossing arc sets"};
  app.name("isofam");
  app.require_subcommand(1);

  EnumerateArgs en;
  int grade = -1;
  auto* enumerate = app.add_subcommand("enumerate", "print one family in canonical order");
  enumerate->add_option("--kind", en.kind, "f0 | f1 | f0-lagrangian | c | z")
      ->required()
      ->check(CLI::IsMember({"f0", "f1", "f0-lagrangian", "c", "z"}));
  enumerate->add_option("--D", en.D, "even ambient dimension")->required();
  enumerate->add_option("--grade", grade, "keep only members of this dimension / arc count");
  enumerate->add_option("--format", en.format, "json | csv | text")
      ->check(CLI::IsMember({"json", "csv", "text"}));

  int D_min = 2, D_max = 0;
  bool use_oracle = false;
  auto* verify_cmd = app.add_subcommand("verify", "run the invariant suite over a range of D");
  verify_cmd->add_option("--D-min", D_min, "smallest even D (default 2)");
  verify_cmd->add_option("--D-max", D_max, "largest even D")->required();
  verify_cmd->add_flag("--oracle", use_oracle, "add brute-force cross-checks within budget");

  std::string op, input;
  int map_D = 0;
  auto* map = app.add_subcommand("map", "apply one bijection to one element");
  map->add_option("--op", op)
      ->required()
      ->check(CLI::IsMember(
          {"theta", "theta-inv", "xi", "xi-inv", "lagrangian", "unlagrangian", "decompose"}));
  map->add_option("--D", map_D)->required();
  map->add_option("--input", input, "JSON subspace or list of [a, b] arcs")->required();

  std::string family_path;
  auto* match = app.add_subcommand("match", "search GL(d, 2) for a map onto C(V^1_2d)");
  match->add_option("--family", family_path, "JSON {\"d\": int, \"subgroups\": [[...]]}")
      ->required();

  int export_D = 0;
  std::string out_dir;
  auto* exp = app.add_subcommand("export", "write all tables for one D as JSON and CSV");
  exp->add_option("--D", export_D)->required();
  exp->add_option("--out", out_dir)->required();

  std::vector<std::string> argv_storage{"isofam"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*enumerate) {
      if (grade >= 0) en.grade = grade;
      return do_enumerate(en, out);
    }
    if (*verify_cmd) return do_verify(D_min, D_max, use_oracle, out);
    if (*map) return do_map(op, map_D, input, out);
    if (*match) return do_match(family_path, out, err);
    return do_export(export_D, out_dir, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailed;
  }
}

}  // namespace isofam::cli
