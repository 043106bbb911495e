// Copyright 2026 <authors>
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gth/gth_c.h"

namespace {

struct Verb {
  const char* name;
  const char* help;
  const char* args;
};

const Verb kVerbs[] = {
    {"classify", "group-theoretical data classes up to equivalence", "group"},
    {"h2", "Schur multiplier H^2(G, k^x)", "group"},
    {"subgroups", "subgroups up to conjugation", "group"},
    {"factorizations", "factorizations G = F Gamma up to automorphism", "group"},
    {"hopf", "bicrossed product: '<group> <F gens> <Gamma gens>' or 'A18 <e>'", "spec"},
    {"rack", "rack by name ('D n', 'Q q,b', 'T', 'O j^n') or 'catalog'", "name"},
    {"verify-paper", "check the classification against the expected-value file", ""},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Group-theoretical Hopf algebra classification"};
  app.set_version_flag("--version", gth_version());
  app.require_subcommand(1, 1);

  bool json = false, markdown = false, all = false, stamp = false;
  std::vector<std::string> only;
  int threads = 0;
  app.add_flag("--json", json, "JSON output");
  app.add_flag("--markdown", markdown, "markdown table output");
  app.add_flag("--all", all, "include trivial data (classify), structure constants (hopf --json)");
  app.add_option("--only", only, "verify-paper: run only the named suite(s)");
  app.add_option("--threads", threads, "worker threads (default: GTH_THREADS or 1)")->check(CLI::NonNegativeNumber);
  app.add_flag("--stamp", stamp, "add a generation timestamp");

  std::vector<std::vector<std::string>> positional(std::size(kVerbs));
  std::vector<CLI::App*> subs;
  for (size_t i = 0; i < std::size(kVerbs); ++i) {
    CLI::App* sub = app.add_subcommand(kVerbs[i].name, kVerbs[i].help)->fallthrough();
    if (*kVerbs[i].args) sub->add_option(kVerbs[i].args, positional[i], "arguments")->required();
    subs.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  size_t verb = 0;
  while (!subs[verb]->parsed()) ++verb;
  std::vector<const char*> args, only_c;
  for (const auto& a : positional[verb]) args.push_back(a.c_str());
  for (const auto& o : only) only_c.push_back(o.c_str());
  unsigned flags = (json ? GTH_FLAG_JSON : 0u) | (markdown ? GTH_FLAG_MARKDOWN : 0u) |
                   (all ? GTH_FLAG_ALL : 0u) | (stamp ? GTH_FLAG_STAMP : 0u);

  gth_result* res = nullptr;
  gth_status s = gth_run(kVerbs[verb].name, args.data(), static_cast<int>(args.size()), flags, only_c.data(),
                         static_cast<int>(only_c.size()), threads, &res);
  std::fputs(gth_result_output(res), stdout);
  if (s != GTH_OK && s != GTH_MISMATCH) {
    std::cerr << "error (" << gth_status_name(s) << "): " << gth_result_error(res) << "\n";
    if (s == GTH_E_PARSE || s == GTH_E_ARGUMENT) std::cerr << "\n" << subs[verb]->help();
  }
  gth_result_free(res);
  return gth_exit_code(s);
}
