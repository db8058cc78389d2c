#include "lsv/cli.hpp"

#include "lsv/demazure.hpp"
#include "lsv/json_io.hpp"
#include "lsv/ktheory.hpp"
#include "lsv/largeschubert.hpp"
#include "lsv/verify.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

namespace lsv {

namespace {

struct RunConfig {
  std::string type_label;
  std::string lambda_text;
  std::string mu_text;
  std::string nu_text;
  std::string word_text;
  Coord box = 2;
  int n_max = 4;
  std::string cache_dir;
  std::string out_path;
};

WeylGroup load_group(const RunConfig& cfg) {
  RootSystem rs = RootSystem::build(cfg.type_label);
  if (cfg.cache_dir.empty()) return WeylGroup(std::move(rs));
  std::filesystem::path path =
      std::filesystem::path(cfg.cache_dir) / ("weyl_" + rs.label() + ".json");
  if (std::filesystem::exists(path)) {
    std::ifstream in(path);
    Json j = Json::parse(in);
    return weyl_group_from_json(j);
  }
  WeylGroup wg{rs};
  std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  out << weyl_group_to_json(wg).dump(2) << '\n';
  return wg;
}

void emit(const Json& j, const RunConfig& cfg, std::ostream& out) {
  if (cfg.out_path.empty()) {
    out << j.dump(2) << '\n';
    return;
  }
  std::ofstream file(cfg.out_path);
  if (!file) throw std::invalid_argument("cannot open output path " + cfg.out_path);
  file << j.dump(2) << '\n';
}

int emit_verdict(const char* battery, const RunConfig& cfg, const BatteryResult& res,
                 std::ostream& out) {
  Json j{{"battery", battery},
         {"type", cfg.type_label},
         {"ok", res.ok},
         {"checked", res.checked},
         {"counterexamples", res.counterexamples}};
  emit(j, cfg, out);
  return res.ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact characters, filtrations and equivariant K-theory classes "
               "for Schubert varieties in the canonical group compactification"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--cache-dir", cfg.cache_dir, "cache directory for generated Weyl groups");
  app.add_option("--out", cfg.out_path, "write JSON output to this path instead of stdout");

  auto add_type = [&cfg](CLI::App* cmd) {
    cmd->add_option("--type", cfg.type_label, "root system token, e.g. A2")->required();
  };

  std::function<int()> action;

  auto* roots = app.add_subcommand("roots", "Cartan data and positive roots");
  add_type(roots);
  roots->callback([&] {
    action = [&] {
      emit(root_system_to_json(RootSystem::build(cfg.type_label)), cfg, out);
      return 0;
    };
  });

  auto* weyl = app.add_subcommand("weyl", "generated Weyl group with Bruhat order");
  add_type(weyl);
  weyl->callback([&] {
    action = [&] {
      emit(weyl_group_to_json(load_group(cfg)), cfg, out);
      return 0;
    };
  });

  auto* chr = app.add_subcommand("char", "characters and bi-characters");
  chr->require_subcommand(1);
  struct CharCmd {
    const char* name;
    const char* help;
    bool wants_word;
    bool wants_lambda;
    bool wants_nu;
  };
  for (CharCmd cmd_def :
       {CharCmd{"demazure", "D_w(e^lambda) along the given word", true, true, false},
        CharCmd{"p", "ch P(nu)", false, false, true},
        CharCmd{"q", "ch Q(nu)", false, false, true},
        CharCmd{"m", "ch M(lambda), lambda dominant", false, true, false},
        CharCmd{"z", "chi(Z(w), lambda)", true, true, false},
        CharCmd{"c", "c_lambda = chi(Z, lambda)", false, true, false},
        CharCmd{"xw", "graded character of H^0(X(w), lambda)", true, true, false}}) {
    auto* cmd = chr->add_subcommand(cmd_def.name, cmd_def.help);
    add_type(cmd);
    if (cmd_def.wants_word) cmd->add_option("--w", cfg.word_text, "word, 1-based generators");
    if (cmd_def.wants_lambda) {
      const char* flag = std::string_view(cmd_def.name) == "m" ? "--lambda,--mu" : "--lambda";
      cmd->add_option(flag, cfg.lambda_text, "weight, csv")->required();
    }
    if (cmd_def.wants_nu) cmd->add_option("--nu", cfg.nu_text, "weight, csv")->required();
    std::string name = cmd_def.name;
    cmd->callback([&, name] {
      action = [&, name] {
        WeylGroup wg = load_group(cfg);
        const int r = wg.root_system().rank();
        if (name == "demazure") {
          auto word = parse_word_csv(cfg.word_text, r);
          Vec lambda = parse_weight_csv(cfg.lambda_text, r);
          emit(character_to_json(
                   demazure_op_word(wg.root_system(), word, Character::monomial(lambda))),
               cfg, out);
        } else if (name == "p" || name == "q") {
          Vec nu = parse_weight_csv(cfg.nu_text, r);
          emit(character_to_json(name == "p" ? ch_P(wg, nu) : ch_Q(wg, nu)), cfg, out);
        } else if (name == "m") {
          Vec mu = parse_weight_csv(cfg.lambda_text, r);
          emit(bicharacter_to_json(m_char(wg, mu), r), cfg, out);
        } else if (name == "z") {
          int w = wg.element_from_word(parse_word_csv(cfg.word_text, r));
          Vec lambda = parse_weight_csv(cfg.lambda_text, r);
          emit(bicharacter_to_json(z_euler(wg, w, lambda), r), cfg, out);
        } else if (name == "c") {
          Vec lambda = parse_weight_csv(cfg.lambda_text, r);
          emit(bicharacter_to_json(c_char(wg, lambda), r), cfg, out);
        } else {
          int w = wg.element_from_word(parse_word_csv(cfg.word_text, r));
          Vec lambda = parse_weight_csv(cfg.lambda_text, r);
          emit(bicharacter_to_json(xw_char(wg, w, lambda), r), cfg, out);
        }
        return 0;
      };
    });
  }

  auto* layers = app.add_subcommand("layers", "filtration layers");
  layers->require_subcommand(1);
  auto* fil = layers->add_subcommand("fil", "vanishing-order layers of H^0(X(w), lambda)");
  add_type(fil);
  fil->add_option("--w", cfg.word_text, "word, 1-based generators");
  fil->add_option("--lambda", cfg.lambda_text, "weight, csv")->required();
  fil->add_option("--nmax", cfg.n_max, "accepted for symmetry with vdk; unused");
  fil->callback([&] {
    action = [&] {
      WeylGroup wg = load_group(cfg);
      const int r = wg.root_system().rank();
      int w = wg.element_from_word(parse_word_csv(cfg.word_text, r));
      Vec lambda = parse_weight_csv(cfg.lambda_text, r);
      Json j = Json::array();
      for (const auto& [n, mu] : fil_layers(wg, w, lambda)) {
        j.push_back(Json{{"n", n},
                         {"mu", weight_to_json(mu)},
                         {"char", bicharacter_to_json(z_euler(wg, w, mu), r)}});
      }
      emit(j, cfg, out);
      return 0;
    };
  });
  auto* vdk = layers->add_subcommand("vdk", "pole-order layers of k[B~] in the coset of lambda");
  add_type(vdk);
  vdk->add_option("--lambda", cfg.lambda_text, "weight, csv")->required();
  vdk->add_option("--nmax", cfg.n_max, "largest pole order");
  vdk->callback([&] {
    action = [&] {
      RootSystem rs = RootSystem::build(cfg.type_label);
      Vec lambda = parse_weight_csv(cfg.lambda_text, rs.rank());
      emit(layers_to_json(vdk_layers(rs, lambda, cfg.n_max)), cfg, out);
      return 0;
    };
  });

  auto* verify = app.add_subcommand("verify", "identity batteries (exit 0 iff all hold)");
  verify->require_subcommand(1);
  for (const char* name : {"recip", "sep", "vdk", "cells", "mobius", "braid",
                           "dual-basis", "diag-pairing"}) {
    auto* cmd = verify->add_subcommand(name, "");
    add_type(cmd);
    cmd->add_option("--box", cfg.box, "box radius for weight batteries");
    if (std::string(name) == "vdk") cmd->add_option("--nmax", cfg.n_max, "largest pole order");
    std::string battery = name;
    cmd->callback([&, battery] {
      action = [&, battery] {
        WeylGroup wg = load_group(cfg);
        BatteryResult res;
        if (battery == "recip") res = battery_recip(wg, cfg.box);
        else if (battery == "sep") res = battery_sep(wg, cfg.box);
        else if (battery == "vdk") res = battery_vdk(wg, cfg.box, cfg.n_max);
        else if (battery == "cells") res = battery_cells(wg, cfg.box);
        else if (battery == "mobius") res = battery_mobius(wg);
        else if (battery == "braid") res = battery_braid(wg, cfg.box);
        else if (battery == "dual-basis") res = battery_dual_basis(wg);
        else res = battery_diag_pairing(wg, cfg.box);
        return emit_verdict(battery.c_str(), cfg, res, out);
      };
    });
  }

  auto* kth = app.add_subcommand("ktheory", "equivariant K-theory of G/B");
  kth->require_subcommand(1);
  auto* diag = kth->add_subcommand("diag", "diagonal class coefficients on [S(x)] x [S^-(y)]");
  add_type(diag);
  diag->callback([&] {
    action = [&] {
      WeylGroup wg = load_group(cfg);
      emit(diag_class_to_json(wg, diag_class(wg)), cfg, out);
      return 0;
    };
  });
  auto* dual = kth->add_subcommand("dual-basis", "pairing matrix of [S(y)] against [S^-(x)]^0");
  add_type(dual);
  dual->callback([&] {
    action = [&] {
      WeylGroup wg = load_group(cfg);
      BatteryResult res = battery_dual_basis(wg);
      return emit_verdict("dual-basis", cfg, res, out);
    };
  });

  // Let --cache-dir / --out be written after the subcommand as well.
  std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
    for (CLI::App* sub : a->get_subcommands({})) {
      sub->fallthrough();
      enable_fallthrough(sub);
    }
  };
  enable_fallthrough(&app);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help() << std::flush;
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  }

  try {
    return action ? action() : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace lsv
