// Copyright 2026 The dspecies Authors.
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


#include "doctest.h"
#include "json.hpp"

#include <algorithm>

#include "dspecies/error.hpp"
#include "dspecies/io.hpp"

using namespace dsp;
using nlohmann::json;

TEST_SUITE("io") {

TEST_CASE("structure formats") {
  const Structure s = parse_structure(*sets(), R"({"elements":["x","y","z"]})");
  CHECK(s.size() == 3);
  CHECK(s.carrier.is_discrete());

  const Structure p = parse_structure(*posets(), R"({"elements":["a","b","c"],"leq":[["a","b"],["b","c"]]})");
  CHECK(p.carrier.is_chain());
  CHECK(p.carrier.leq(0, 2));

  const Structure f = parse_structure(*forests(), R"({"nodes":["leaf","root"],"parent":{"leaf":"root","root":null}})");
  CHECK(f.carrier.less(f.carrier.index_of("leaf"), f.carrier.index_of("root")));

  const Structure g = parse_structure(*graphs(), R"({"vertices":["a","b"],"edges":[["a","b"],["a","b"],["a","a"]]})");
  CHECK(g.decoration.cells == std::vector<int>{1, 2, 2, 0});

  const Structure d = parse_structure(*acyclic_digraphs(), R"({"vertices":["a","b","c"],"edges":[["a","b"],["b","c"]]})");
  CHECK(d.carrier.leq(0, 2));
  CHECK(d.decoration.cells[0 * 3 + 2] == 0);

  const Structure q = parse_structure(*double_posets(), R"({"elements":["a","b"],"leq":[["a","b"]],"leq2":[["b","a"]]})");
  CHECK(q.decoration.cells == std::vector<int>{1, 0, 1, 1});

  const Structure l = parse_structure(*linear_orders(), R"({"elements":["a","b"],"leq":[["b","a"]]})");
  CHECK(l.carrier.less(1, 0));
}

TEST_CASE("parse and validation errors") {
  CHECK_THROWS_AS(parse_structure(*sets(), "{not json"), ParseError);
  CHECK_THROWS_AS(parse_structure(*sets(), "[1,2]"), ParseError);
  CHECK_THROWS_AS(parse_structure(*sets(), R"({"items":[]})"), ParseError);
  CHECK_THROWS_AS(parse_structure(*sets(), R"({"elements":[1]})"), ParseError);
  CHECK_THROWS_AS(parse_structure(*sets(), R"({"elements":["a","b"],"leq":[["a","b"]]})"), ValidationError);
  CHECK_THROWS_AS(parse_structure(*posets(), R"({"elements":["a","b"],"leq":[["a","b"],["b","a"]]})"),
                  ValidationError);
  CHECK_THROWS_AS(parse_structure(*posets(), R"({"elements":["a"],"leq":[["a","zz"]]})"), ValidationError);
  CHECK_THROWS_AS(parse_structure(*forests(), R"({"nodes":["a","b"],"parent":{"a":"b","b":"a"}})"),
                  ValidationError);
  CHECK_THROWS_AS(parse_structure(*forests(), R"({"nodes":["a"],"parent":{"a":3}})"), ParseError);
  CHECK_THROWS_AS(parse_structure(*acyclic_digraphs(), R"({"vertices":["a"],"edges":[["a","a"]]})"), ValidationError);
  CHECK_THROWS_AS(parse_structure(*linear_orders(), R"({"elements":["a","b"]})"), ValidationError);
  CHECK_THROWS_AS(read_structure_file(*sets(), "/nonexistent/structure.json"), ParseError);
}

TEST_CASE("tensor and module serialisation") {
  const Coalgebra c(sets());
  const Structure s = parse_structure(*sets(), R"({"elements":["x","y"]})");
  const json t = json::parse(to_json(c, c.coproduct(s)));
  REQUIRE(t["terms"].size() == 3);
  std::vector<std::string> coeffs;
  for (const auto& term : t["terms"]) coeffs.push_back(term["coeff"]);
  std::sort(coeffs.begin(), coeffs.end());
  CHECK(coeffs == std::vector<std::string>{"1/1", "1/1", "2/1"});
  CHECK(t["basis"].size() == 3);
  CHECK(t["basis"][c.unit()] == "{}");

  const json m = json::parse(to_json(c, c.antipode(c.key(s))));
  REQUIRE(m["terms"].size() == 1);
  CHECK(m["terms"][0]["coeff"] == "1/1");
  CHECK(rational_string(mpq_class(-6, 4)) == "-3/2");
  CHECK(rational_string(0) == "0/1");
}

TEST_CASE("basis tables") {
  CHECK(parse_table_format("csv") == TableFormat::kCsv);
  CHECK_THROWS_AS(parse_table_format("xml"), InvalidArgument);

  const json sets_table = json::parse(basis_table(Coalgebra(sets()), 4, TableFormat::kJson));
  CHECK(sets_table["counts"] == json::array({1, 1, 1, 1, 1}));
  REQUIRE(sets_table["rows"].size() == 5);
  // Row n carries the binomial row of n.
  for (const auto& row : sets_table["rows"]) {
    const int n = row["size"];
    std::vector<std::string> coeffs;
    for (const auto& term : row["coproduct"]) coeffs.push_back(term["coeff"]);
    CHECK(static_cast<int>(coeffs.size()) == n + 1);
    long binom = 1;
    std::vector<std::string> expected;
    for (int k = 0; k <= n; ++k) {
      expected.push_back(std::to_string(binom) + "/1");
      binom = binom * (n - k) / (k + 1);
    }
    std::sort(coeffs.begin(), coeffs.end());
    std::sort(expected.begin(), expected.end());
    CHECK(coeffs == expected);
  }

  const json forest_table = json::parse(basis_table(Coalgebra(forests()), 3, TableFormat::kJson));
  CHECK(forest_table["counts"] == json::array({1, 1, 2, 4}));
  const json poset_table = json::parse(basis_table(Coalgebra(posets()), 3, TableFormat::kJson));
  CHECK(poset_table["counts"] == json::array({1, 1, 2, 5}));

  const std::string csv = basis_table(Coalgebra(posets()), 2, TableFormat::kCsv);
  CHECK(csv.rfind("grade,count\n0,1\n1,1\n2,2\n\nsize,key,description,coproduct\n", 0) == 0);
  CHECK(csv.find("\"{a,b|b<a}\"") != std::string::npos);
  CHECK(basis_table(Coalgebra(posets()), 3, TableFormat::kCsv) == basis_table(Coalgebra(posets()), 3, TableFormat::kCsv));
  CHECK_THROWS_AS(basis_table(Coalgebra(sets()), -1, TableFormat::kCsv), InvalidArgument);
}

}
