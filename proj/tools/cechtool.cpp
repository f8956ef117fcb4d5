// Command-line front end. Talks to the engine only through the C API.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "cech/cech.h"

namespace {

struct Flags {
  std::string input = "-";
  std::optional<int> max_degree;
  std::optional<std::uint64_t> budget;
  bool verify = false;
};

std::optional<std::string> slurp(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int report(cech_result* result) {
  const int status = cech_result_status(result);
  if (status == CECH_OK) {
    std::cout << cech_result_json(result) << '\n';
  } else {
    std::cerr << "cechtool: " << cech_result_message(result) << '\n';
  }
  cech_result_free(result);
  return status;
}

std::string describe(const std::string& command) {
  static const std::map<std::string, std::string> text = {
      {"cohomology", "H^p of a nerve with coefficients in a group"},
      {"connecting", "image of a cocycle under the connecting map of a short exact sequence"},
      {"les", "long exact cohomology sequence with per-position exactness"},
      {"tower", "classes c2, c3, ... along a chain of band sequences"},
      {"spectral", "E_r terms of a filtered coefficient sum and their closed forms"},
      {"gerbe-lift", "lifting obstruction of a transition cocycle through a central extension"},
      {"validate", "check a single input object"},
  };
  auto it = text.find(command);
  return it == text.end() ? command : it->second;
}

void add_flags(CLI::App* app, Flags& f, bool envelope) {
  app->add_option("--input,-i", f.input, "JSON input file ('-' for stdin)");
  if (envelope) return;
  app->add_option("--max-degree", f.max_degree, "Highest cohomological degree");
  app->add_option("--budget", f.budget, "Search / table-check budget")->check(CLI::PositiveNumber);
  app->add_flag("--verify", f.verify, "Re-run the invariant checks on this instance");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Čech cohomology, connecting maps, towers, spectral terms and lifting gerbes.\n"
               "With a subcommand the input is that command's payload; without one it is a\n"
               "request {\"command\", \"payload\", \"options\"}."};
  app.set_version_flag("--version", std::string(cech_version()));
  Flags top;
  add_flags(&app, top, true);

  Flags sub;
  std::string chosen;
  for (const char* const* name = cech_commands(); *name; ++name) {
    CLI::App* cmd = app.add_subcommand(*name, describe(*name));
    add_flags(cmd, sub, false);
    cmd->callback([&chosen, cmd] { chosen = cmd->get_name(); });
  }
  app.require_subcommand(0, 1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : CECH_INVALID;
  }

  const Flags& flags = chosen.empty() ? top : sub;
  auto text = slurp(flags.input);
  if (!text) {
    std::cerr << "cechtool: cannot read " << flags.input << '\n';
    return CECH_INVALID;
  }

  if (chosen.empty()) return report(cech_execute_json(text->c_str()));

  cech_request* request = cech_request_new(chosen.c_str());
  cech_request_set_payload(request, text->c_str());
  if (flags.max_degree) cech_request_set_max_degree(request, *flags.max_degree);
  if (flags.budget) cech_request_set_budget(request, *flags.budget);
  cech_request_set_verify(request, flags.verify ? 1 : 0);
  const int status = report(cech_execute(request));
  cech_request_free(request);
  return status;
}
