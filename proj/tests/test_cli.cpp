// Copyright 2026 The Stabsim Authors
//
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

#include "stabsim/cli.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

using namespace stabsim;

namespace {

namespace fs = std::filesystem;

struct TempDir {
  TempDir() {
    path = fs::temp_directory_path() /
           ("stabsim_test_" + std::to_string(std::rand()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  fs::path path;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("sample writes deterministic measurement-free circuits") {
  TempDir dir;
  const fs::path a = dir.path / "a.circ";
  const fs::path b = dir.path / "b.circ";
  std::ostringstream err;
  REQUIRE(cmd_sample(4, 11, a.string(), err) == kExitOk);
  REQUIRE(cmd_sample(4, 11, b.string(), err) == kExitOk);

  const std::string text = slurp(a);
  CHECK(text == slurp(b));
  CHECK(text.rfind("qubits 4\n", 0) == 0);

  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    CHECK(line.rfind("m ", 0) != 0);
    CHECK(line != "m");
  }

  const fs::path c = dir.path / "c.circ";
  REQUIRE(cmd_sample(4, 12, c.string(), err) == kExitOk);
  CHECK(text != slurp(c));
}

TEST_CASE("sample rejects bad destinations and arguments") {
  std::ostringstream err;
  CHECK(cmd_sample(0, 1, "x.circ", err) == kExitUsage);
  CHECK(cmd_sample(2, 1, "/nonexistent_dir_zz/x.circ", err) == kExitIo);
}

TEST_CASE("run executes a Bell circuit with perfectly correlated shots") {
  TempDir dir;
  const fs::path file = dir.path / "bell.circ";
  {
    std::ofstream out(file);
    out << "qubits 2\nh 0\ncx 0 1\nm 0\nm 1\n";
  }
  std::ostringstream out;
  std::ostringstream err;
  REQUIRE(cmd_run(file.string(), 5, 200, out, err) == kExitOk);

  std::istringstream lines(out.str());
  std::string line;
  int shots = 0;
  bool saw00 = false;
  bool saw11 = false;
  while (std::getline(lines, line)) {
    if (line == "stabilizers:") {
      break;
    }
    REQUIRE((line == "00" || line == "11"));
    saw00 = saw00 || line == "00";
    saw11 = saw11 || line == "11";
    ++shots;
  }
  CHECK(shots == 200);
  CHECK(saw00);
  CHECK(saw11);
}

TEST_CASE("run prints stabilizers for measurement-free circuits") {
  TempDir dir;
  const fs::path file = dir.path / "plus.circ";
  {
    std::ofstream out(file);
    out << "qubits 1\nh 0\n";
  }
  std::ostringstream out;
  std::ostringstream err;
  REQUIRE(cmd_run(file.string(), 0, 1, out, err) == kExitOk);
  CHECK(out.str() == "\nstabilizers:\n  +X\n");
}

TEST_CASE("run surfaces parse errors with line numbers") {
  TempDir dir;
  const fs::path file = dir.path / "bad.circ";
  {
    std::ofstream out(file);
    out << "qubits 2\nh 0\nbogus 1\n";
  }
  std::ostringstream out;
  std::ostringstream err;
  CHECK(cmd_run(file.string(), 0, 1, out, err) == kExitFailure);
  CHECK(err.str().find("line 3") != std::string::npos);

  CHECK(cmd_run((dir.path / "missing.circ").string(), 0, 1, out, err) ==
        kExitIo);
}

TEST_CASE("verify passes on small sizes and rejects over-cap requests") {
  std::ostringstream out;
  std::ostringstream err;
  CHECK(cmd_verify(2, 10, 1, out, err) == kExitOk);
  CHECK(out.str().find("PASS") != std::string::npos);

  std::ostringstream out2;
  std::ostringstream err2;
  CHECK(cmd_verify(20, 10, 1, out2, err2) == kExitFailure);
  CHECK(err2.str().find("capped") != std::string::npos);
}
