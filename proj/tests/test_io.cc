// test_io.cc
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

#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "linrep/io.hh"
#include "test_support.hh"

using namespace linrep;
using namespace linrep::testing;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

const char* kMinimalDoc = R"({
  "field": "Q",
  "q": 2,
  "dim": 1,
  "u": ["1"],
  "matrices": [[["1"]], [["1"]]],
  "w": ["1"]
})";

}  // namespace

TEST_SUITE("io") {

TEST_CASE("parse a document") {
  const RepresentationDocument doc = parse_document(kMinimalDoc);
  CHECK(doc.rep == constant_one_1d());
  CHECK(!doc.name);
  CHECK(!doc.description);
}

TEST_CASE("fixture files load to the expected representations") {
  const std::string dir = fixtures_dir();
  CHECK(load_document(dir + "/ex-constant-1d.json").rep == constant_one_1d());
  CHECK(load_document(dir + "/ex-constant-2d.json").rep == constant_one_2d());
  CHECK(load_document(dir + "/ex-sum-of-digits.json").rep == sum_of_digits());
  CHECK(load_document(dir + "/ex-ternary-ones.json").rep == ternary_ones());
  CHECK(load_document(dir + "/ex-zero-0d.json").rep.dimension() == 0);

  const LinearRepresentation gone = load_document(dir + "/ex-gone-wrong.json").rep;
  CHECK(gone == ends_in_zero());
  CHECK(gone.matrix(0) == Matrix{{1, 1}, {0, 0}});
}

TEST_CASE("saving a loaded fixture is byte-stable") {
  for (const char* name :
       {"ex-constant-1d.json", "ex-constant-2d.json", "ex-gone-wrong.json",
        "ex-sum-of-digits.json", "ex-ternary-ones.json", "ex-zero-0d.json"}) {
    CAPTURE(name);
    const std::string path = fixtures_dir() + "/" + name;
    const std::string original = slurp(path);
    const RepresentationDocument doc = parse_document(original);
    CHECK(format_document(doc) == original);
  }
}

TEST_CASE("round-trip is exact") {
  std::mt19937 rng(113);
  for (int i = 0; i < 40; ++i) {
    const unsigned q = 2 + i % 3;
    RepresentationDocument doc{random_rep(rng, q, i % 5, -20, 20), std::nullopt,
                               std::nullopt};
    if (i % 3 == 0) doc.name = "random #" + std::to_string(i);
    if (i % 4 == 0) doc.description = "entries in [-20, 20]";
    const RepresentationDocument loaded = parse_document(format_document(doc));
    CHECK(loaded.rep == doc.rep);
    CHECK(loaded.name == doc.name);
    CHECK(loaded.description == doc.description);
    // Canonical form: a second save is byte-identical.
    CHECK(format_document(loaded) == format_document(doc));
  }
}

TEST_CASE("dim 0 documents are legal") {
  const RepresentationDocument doc = parse_document(R"({
    "field": "Q", "q": 2, "dim": 0,
    "u": [], "matrices": [[], []], "w": []
  })");
  CHECK(doc.rep.dimension() == 0);
  CHECK(doc.rep.alphabet_size() == 2);
}

TEST_CASE("non-canonical rationals are accepted and canonicalised") {
  const RepresentationDocument doc = parse_document(R"({
    "field": "Q", "q": 2, "dim": 1,
    "u": ["2/4"], "matrices": [[["6/3"]], [["0/5"]]], "w": ["-7/1"]
  })");
  CHECK(doc.rep.entry().at(0) == Rational(Integer(1), Integer(2)));
  CHECK(doc.rep.matrix(0).at(0, 0) == Rational(2));
  CHECK(doc.rep.matrix(1).at(0, 0) == Rational(0));
  CHECK(doc.rep.exit().at(0) == Rational(-7));
}

TEST_CASE("parse errors name the offending field") {
  const auto message_of = [](const std::string& text) -> std::string {
    try {
      parse_document(text);
    } catch (const ParseError& e) {
      return e.what();
    }
    return "";
  };

  // Shape mismatch on u.
  CHECK(message_of(R"({"field":"Q","q":2,"dim":2,
        "u":["1","0","0"],
        "matrices":[[["1","0"],["0","1"]],[["1","0"],["0","1"]]],
        "w":["1","0"]})") == "u: expected 2 entries, got 3");

  CHECK(message_of(R"({"field":"Q","q":1,"dim":0,"u":[],"matrices":[[]],"w":[]})") ==
        "q: expected an integer >= 2");
  CHECK(message_of(R"({"q":2,"dim":0,"u":[],"matrices":[[],[]],"w":[]})") ==
        "field: missing");
  CHECK(message_of(R"({"field":"R","q":2,"dim":0,"u":[],"matrices":[[],[]],"w":[]})") ==
        "field: expected \"Q\"");
  CHECK(message_of(R"({"field":"Q","q":2,"dim":1,"u":["x"],
        "matrices":[[["1"]],[["1"]]],"w":["1"]})") ==
        "u[0]: malformed rational \"x\"");
  CHECK(message_of(R"({"field":"Q","q":2,"dim":1,"u":["1"],
        "matrices":[[["1"]],[["1/0"]]],"w":["1"]})") ==
        "matrices[1][0][0]: zero denominator");
  CHECK(message_of(R"({"field":"Q","q":2,"dim":1,"u":["1"],
        "matrices":[[["1"]]],"w":["1"]})") ==
        "matrices: expected 2 matrices, got 1");
  CHECK(message_of(R"({"field":"Q","q":2,"dim":1,"u":["0.5"],
        "matrices":[[["1"]],[["1"]]],"w":["1"]})") ==
        "u[0]: malformed rational \"0.5\"");
  CHECK(message_of(R"({"field":"Q","q":2,"dim":1,"u":[0.5],
        "matrices":[[["1"]],[["1"]]],"w":["1"]})") ==
        "u[0]: expected a string");
  CHECK(message_of(R"({"field":"Q","q":2,"dim":1,"u":["1"],
        "matrices":[[["1"]],[["1"]]],"w":["1"],"extra":1})") ==
        "unexpected key \"extra\"");
  CHECK(message_of("[1,2]") == "document: expected a JSON object");
  CHECK(message_of("{").substr(0, 12) == "invalid JSON");
}

TEST_CASE("load failures mention the path") {
  try {
    load_document("/nonexistent/rep.json");
    FAIL("expected an exception");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find("/nonexistent/rep.json") != std::string::npos);
  }
}

}  // TEST_SUITE
