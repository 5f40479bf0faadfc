#pragma once

// Complete graph families produced by nauty's geng, built alongside the tests.

#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include "bracekit/graph6.hpp"

namespace test_corpus {

inline std::vector<std::string> geng_lines(const std::vector<std::string>& args) {
  std::string cmd = BRACEKIT_GENG_PATH;
  for (const auto& a : args) cmd += " " + a;
  cmd += " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("cannot run " + cmd);
  std::vector<std::string> out;
  char buf[256];
  std::string line;
  while (std::fgets(buf, sizeof buf, pipe)) {
    line += buf;
    if (!line.empty() && line.back() == '\n') {
      line.pop_back();
      out.push_back(line);
      line.clear();
    }
  }
  if (pclose(pipe) != 0) throw std::runtime_error("geng failed: " + cmd);
  return out;
}

inline std::vector<bracekit::Graph> geng(const std::vector<std::string>& args) {
  std::vector<bracekit::Graph> out;
  for (const auto& s : geng_lines(args)) out.push_back(bracekit::graph6_decode(s));
  return out;
}

// Connected bipartite graphs on n vertices with minimum degree at least d.
inline std::vector<bracekit::Graph> bipartite_min_degree(int n, int d) {
  return geng({"-cbq", "-d" + std::to_string(d), std::to_string(n)});
}

}  // namespace test_corpus
