#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli/cli.hpp"

namespace golden {

namespace fs = std::filesystem;

struct Case {
  std::string name;
  int code = 0;
  std::vector<std::string> args;
  std::string stdin_file;
};

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

inline std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string::npos) return {};
  return s.substr(first, s.find_last_not_of(" \t") - first + 1);
}

inline std::string slurp(const fs::path& path) {
  std::ifstream file(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

// cases.txt lines: name | exit code | arguments | optional stdin file. "@/" expands to inputs/.
inline std::vector<Case> load_cases(const fs::path& dir) {
  const auto expand = [&](const std::string& word) {
    return word.rfind("@/", 0) == 0 ? (dir / "inputs" / word.substr(2)).string() : word;
  };
  std::vector<Case> cases;
  std::ifstream file(dir / "cases.txt");
  std::string line;
  while (std::getline(file, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::stringstream split(line);
    std::string field;
    while (std::getline(split, field, '|')) fields.push_back(trim(field));
    fields.resize(4);
    Case c;
    c.name = fields[0];
    c.code = std::stoi(fields[1]);
    std::istringstream words(fields[2]);
    std::string w;
    while (words >> w) c.args.push_back(expand(w));
    if (!fields[3].empty()) c.stdin_file = expand(fields[3]);
    cases.push_back(std::move(c));
  }
  return cases;
}

inline fs::path expected_path(const fs::path& dir, const Case& c) { return dir / "expected" / (c.name + ".json"); }

inline Result invoke(const std::vector<std::string>& args, const std::string& input) {
  std::istringstream in(input);
  std::ostringstream out, err;
  Result r;
  r.code = bifree::cli::run(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

inline Result invoke(const Case& c) { return invoke(c.args, c.stdin_file.empty() ? std::string{} : slurp(c.stdin_file)); }

}  // namespace golden
