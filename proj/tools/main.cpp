// Command-line front end: builds biorthogonal systems from a JSON config,
// embeds vectors as truncated power series, evaluates images with certified
// tail bounds, runs the full certificate suite, and prints continuity tables.
//
// Exit codes: 0 success, 1 failed certificate (verify), 2 usage error,
// 3 computation or configuration error.

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <holembed/holembed.hpp>

namespace {

using holembed::Json;

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw holembed::InvalidParameter("cannot open " + path);
  try {
    Json j;
    in >> j;
    return j;
  } catch (const std::exception& e) {
    throw holembed::InvalidParameter("cannot parse " + path + ": " + e.what());
  }
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw holembed::InvalidParameter("cannot open " + path + " for writing");
  out << text;
}

std::string trimmed(const std::string& text) {
  const auto first = text.find_first_not_of(" \t");
  if (first == std::string::npos) return "";
  const auto last = text.find_last_not_of(" \t");
  return text.substr(first, last - first + 1);
}

/// "re,im" (both canonical rationals) or a lone "re".
holembed::ComplexRational parse_complex_arg(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return {holembed::parse_rational(trimmed(text)), 0};
  return {holembed::parse_rational(trimmed(text.substr(0, comma))),
          holembed::parse_rational(trimmed(text.substr(comma + 1)))};
}

std::size_t parse_stage_number(const std::string& text) {
  const std::string t = trimmed(text);
  if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
    throw holembed::InvalidParameter("bad stage \"" + text + "\"");
  return static_cast<std::size_t>(std::stoull(t));
}

/// Comma list ("4,8,12") and/or inclusive ranges ("4..12").
std::vector<std::size_t> parse_stages(const std::string& text) {
  std::vector<std::size_t> stages;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const std::string piece =
        text.substr(start, comma == std::string::npos ? comma : comma - start);
    const auto dots = piece.find("..");
    if (dots == std::string::npos) {
      stages.push_back(parse_stage_number(piece));
    } else {
      const std::size_t lo = parse_stage_number(piece.substr(0, dots));
      const std::size_t hi = parse_stage_number(piece.substr(dots + 2));
      if (hi < lo) throw holembed::InvalidParameter("bad stage range \"" + piece + "\"");
      for (std::size_t s = lo; s <= hi; ++s) stages.push_back(s);
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (stages.empty()) throw holembed::InvalidParameter("empty stage list");
  return stages;
}

struct SharedArgs {
  std::string config_path;
  std::string out_path;
  std::uint64_t seed = 0;
  std::size_t stage = 0;
  CLI::Option* seed_opt = nullptr;
  CLI::Option* stage_opt = nullptr;
};

void add_shared(CLI::App* cmd, SharedArgs& args, bool config_required) {
  auto* config = cmd->add_option("--config", args.config_path, "run configuration JSON file");
  if (config_required) config->required();
  cmd->add_option("--out", args.out_path, "output file (default: stdout)");
  args.seed_opt =
      cmd->add_option("--seed", args.seed, "override the generating-family seed from the config");
  args.stage_opt = cmd->add_option("--stage", args.stage, "override the stage from the config");
}

holembed::RunConfig load_config(const SharedArgs& args) {
  holembed::RunConfig cfg = holembed::config_from_json(read_json_file(args.config_path));
  if (args.seed_opt->count() > 0) cfg.family.seed = args.seed;
  if (args.stage_opt->count() > 0) cfg.stage = args.stage;
  holembed::validate_config(cfg);
  return cfg;
}

holembed::BiorthogonalSystem build_system(const holembed::RunConfig& cfg) {
  const holembed::DenseFamilyPair fam = holembed::generate_dense_family(
      cfg.family.kind, cfg.family.seed, cfg.stage, cfg.family.bound);
  return holembed::normalize(holembed::biorthogonalize(fam, cfg.stage), cfg.space);
}

int cli_main(int argc, char** argv) {
  CLI::App app{
      "Exact biorthogonal systems on graded sequence spaces and certified "
      "truncated power-series embeddings"};
  app.require_subcommand(1);

  SharedArgs build_args, embed_args, eval_args, verify_args, table_args;
  std::string x_path, system_path, disc_radius, image_path, z_text, k_text, stages_text;
  std::string table_format = "csv";
  std::vector<std::string> k_override;

  CLI::App* cmd_build =
      app.add_subcommand("build", "construct a biorthogonal system and emit it as JSON");
  add_shared(cmd_build, build_args, true);

  CLI::App* cmd_embed =
      app.add_subcommand("embed", "embed a vector (JSON) as a truncated power series");
  add_shared(cmd_embed, embed_args, true);
  cmd_embed->add_option("--x", x_path, "vector JSON file")->required();
  cmd_embed->add_option("--system", system_path,
                        "use a previously built system JSON instead of rebuilding");
  cmd_embed->add_option("--disc", disc_radius,
                        "declare an open-disc target domain of this rational radius");

  CLI::App* cmd_eval =
      app.add_subcommand("eval", "evaluate an embedded image at a point with a tail bound");
  add_shared(cmd_eval, eval_args, false);
  cmd_eval->add_option("--image", image_path, "embedded image JSON file")->required();
  cmd_eval->add_option("--z", z_text, "evaluation point, \"re,im\" rationals")->required();
  cmd_eval->add_option("--k", k_text, "compact radius certifying the tail, |z|_1 <= k")
      ->required();

  CLI::App* cmd_verify =
      app.add_subcommand("verify", "run the full certificate suite and emit the report");
  add_shared(cmd_verify, verify_args, true);

  CLI::App* cmd_table =
      app.add_subcommand("table", "continuity-constant table over radii and stages");
  add_shared(cmd_table, table_args, true);
  cmd_table->add_option("--stages", stages_text,
                        "stage list, e.g. \"4..12\" or \"4,8,16\" (default: config stage)");
  cmd_table->add_option("--k", k_override, "radius (repeatable; default: config k_list)");
  cmd_table->add_option("--format", table_format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);

    if (*cmd_build) {
      const holembed::RunConfig cfg = load_config(build_args);
      write_output(build_args.out_path, holembed::canonical_dump(to_json(build_system(cfg))));
      return 0;
    }

    if (*cmd_embed) {
      const holembed::RunConfig cfg = load_config(embed_args);
      const holembed::BiorthogonalSystem sys =
          system_path.empty() ? build_system(cfg)
                              : holembed::system_from_json(read_json_file(system_path));
      const holembed::WeightSequence weights = holembed::build_weights(cfg.weights, sys.stage);
      const holembed::SparseVector x =
          holembed::sparse_vector_from_json(read_json_file(x_path));
      const holembed::Domain domain = disc_radius.empty()
                                          ? holembed::Domain::plane()
                                          : holembed::Domain::disc(
                                                holembed::parse_rational(disc_radius));
      const holembed::EmbeddedImage image = holembed::embed(x, sys, weights, domain);
      write_output(embed_args.out_path, holembed::canonical_dump(to_json(image)));
      return 0;
    }

    if (*cmd_eval) {
      const holembed::EmbeddedImage image =
          holembed::image_from_json(read_json_file(image_path));
      const holembed::ComplexRational z = parse_complex_arg(z_text);
      const holembed::Rational k = holembed::parse_rational(trimmed(k_text));
      const holembed::Evaluation ev = holembed::eval_at(image, z, k);
      const Json out{{"z", to_json(z)},
                     {"k", holembed::format_rational(k)},
                     {"value", to_json(ev.value)},
                     {"value_re_dec17", holembed::decimal17(ev.value.re)},
                     {"value_im_dec17", holembed::decimal17(ev.value.im)},
                     {"tail", holembed::format_rational(ev.tail)},
                     {"tail_dec17", holembed::decimal17(ev.tail)}};
      write_output(eval_args.out_path, holembed::canonical_dump(out));
      return 0;
    }

    if (*cmd_verify) {
      const holembed::RunConfig cfg = load_config(verify_args);
      const holembed::CertificateReport report = holembed::run_suite(cfg);
      write_output(verify_args.out_path, holembed::canonical_dump(to_json(report)));
      return report.all_pass() ? 0 : 1;
    }

    if (*cmd_table) {
      const holembed::RunConfig cfg = load_config(table_args);
      std::vector<std::size_t> stages =
          stages_text.empty() ? std::vector<std::size_t>{cfg.stage} : parse_stages(stages_text);
      std::vector<holembed::Rational> k_list = cfg.verification.k_list;
      if (!k_override.empty()) {
        k_list.clear();
        for (const auto& k : k_override) k_list.push_back(holembed::parse_rational(trimmed(k)));
      }
      std::size_t window = 1;
      for (std::size_t s : stages) window = s > window ? s : window;
      const holembed::WeightSequence weights = holembed::build_weights(cfg.weights, window);
      const auto rows = holembed::continuity_table(weights, k_list, stages);
      if (table_format == "csv") {
        write_output(table_args.out_path, holembed::continuity_csv(rows));
      } else {
        Json out = Json::array();
        for (const auto& row : rows) out.push_back(to_json(row));
        write_output(table_args.out_path, holembed::canonical_dump(out));
      }
      return 0;
    }

    return 2;  // unreachable: require_subcommand
  } catch (const CLI::Success& e) {
    return app.exit(e);  // --help and friends: prints and exits 0
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace

int main(int argc, char** argv) { return cli_main(argc, argv); }
