#include "mstsens/replay.hpp"

#include <istream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

namespace mstsens {

int run_replay(std::istream& in, std::ostream& out, std::ostream& err,
               const sf_options& opt, bool print_comparisons) {
  std::optional<split_findmin> sf;
  std::string line;
  int lineno = 0;
  auto bad = [&](const std::string& what) {
    err << "replay error at line " << lineno << ": " << what << '\n';
    return 1;
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string cmd;
    if (!(ls >> cmd)) continue;
    if (cmd == "c") continue;
    try {
      if (cmd == "init") {
        long long n;
        if (!(ls >> n) || n < 1) return bad("expected `init <n>`");
        if (sf) return bad("structure already initialized");
        sf.emplace(std::vector<sf_key>(std::size_t(n)), opt);
      } else if (cmd == "dk" || cmd == "split" || cmd == "fm") {
        if (!sf) return bad("command before init");
        long long e;
        if (!(ls >> e) || e < 1 || e > sf->size())
          return bad("element out of range");
        if (cmd == "dk") {
          long long w;
          if (!(ls >> w)) return bad("expected `dk <e> <w>`");
          sf->decreasekey(int(e - 1), sf_key::finite(w));
        } else if (cmd == "split") {
          sf->split(int(e - 1));
        } else {
          sf_findmin_result r = sf->findmin(int(e - 1));
          if (r.k.inf)
            out << "inf\n";
          else
            out << r.k.value << '\n';
        }
      } else {
        return bad("unknown command `" + cmd + "`");
      }
    } catch (const std::exception& ex) {
      return bad(ex.what());
    }
  }
  if (print_comparisons && sf)
    out << "comparisons " << sf->comparisons().total << '\n';
  return 0;
}

}  // namespace mstsens
