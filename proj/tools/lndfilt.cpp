// lndfilt: one-shot subcommands chained with `then`, or a script file.

#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "session.hpp"

namespace {

using namespace lndfilt::cli;

struct Runner {
  Session session;
  GlobalOptions opts;
  bool color = false;
  int code = kOk;

  // false when execution must stop.
  bool emit(const Report& rep, bool quiet_if_ok = false) {
    if (!(quiet_if_ok && rep.exit_code == kOk)) {
      if (opts.json) std::cout << rep.to_json().dump() << "\n";
      else std::cout << render_text(rep, color);
    }
    if (rep.exit_code == kNegative) {
      if (code == kOk) code = kNegative;
      return true;
    }
    if (rep.exit_code != kOk) {
      code = rep.exit_code;
      return false;
    }
    return true;
  }
};

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

void run_script(Runner& r, std::istream& in) {
  std::string raw;
  for (std::size_t line = 1; std::getline(in, raw); ++line) {
    std::string text = trim(raw.substr(0, raw.find('#')));
    if (text.empty()) continue;
    auto sp = text.find_first_of(" \t");
    std::string word = text.substr(0, sp);
    if (Session::is_declaration(word)) {
      if (!r.emit(r.session.declare_line(word, sp == std::string::npos ? "" : trim(text.substr(sp)), line), true)) {
        return;
      }
      continue;
    }
    std::vector<std::string> args;
    try {
      args = CLI::detail::split_up(text);
      CLI::detail::remove_quotes(args);
    } catch (const std::exception& e) {
      Report rep;
      rep.command = text;
      rep.exit_code = kParse;
      rep.status = "parse-error";
      rep.result = Json{{"error", "line " + std::to_string(line) + ": " + e.what()}};
      r.emit(rep);
      return;
    }
    if (!r.emit(r.session.run(args))) return;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app("Exact computations with locally nilpotent derivations and their degree filtrations.\n"
               "Subcommands: deg, lnd-check, filtration, gr, family, search, auto, iso, selftest.\n"
               "Chain subcommands with `then`; scripts hold one declaration or subcommand per line.",
               "lndfilt");
  GlobalOptions opts;
  std::string script;
  app.add_option("--nilp-bound", opts.nilp_bound, "iteration bound for nilpotency certificates")->capture_default_str();
  app.add_option("--degree-bound", opts.degree_bound, "highest filtration layer checked")->capture_default_str();
  app.add_option("--gb-budget", opts.gb_budget, "reduction-step budget for Groebner computations")
      ->capture_default_str();
  app.add_flag("--json", opts.json, "one JSON report per line");
  app.add_option("--script", script, "script file, '-' for stdin");
  app.prefix_command();
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }
  auto rest = app.remaining();
  if (script.empty() && rest.empty()) {
    std::cerr << app.help();
    return kUsage;
  }

  Runner r{Session(opts), opts, isatty(fileno(stdout)) && std::getenv("NO_COLOR") == nullptr};
  if (!script.empty()) {
    if (script == "-") {
      run_script(r, std::cin);
    } else {
      std::ifstream in(script);
      if (!in) {
        std::cerr << "cannot open " << script << "\n";
        return kUsage;
      }
      run_script(r, in);
    }
    if (r.code != kOk && r.code != kNegative) return r.code;
  }
  if (rest.empty()) return r.code;
  std::vector<std::string> cmd;
  for (std::size_t k = 0; k <= rest.size(); ++k) {
    if (k == rest.size() || rest[k] == "then") {
      if (cmd.empty()) {
        Report rep;
        rep.command = "then";
        rep.exit_code = kUsage;
        rep.status = "usage";
        rep.result = Json{{"error", "empty subcommand around 'then'"}};
        r.emit(rep);
        return kUsage;
      }
      if (!r.emit(r.session.run(cmd))) break;
      cmd.clear();
    } else {
      cmd.push_back(rest[k]);
    }
  }
  return r.code;
}
