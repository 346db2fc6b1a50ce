#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <qorder/classify.hpp>
#include <qorder/freeness.hpp>
#include <qorder/unit_literal.hpp>
#include <qorder/units.hpp>

#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

using namespace qorder;
using nlohmann::ordered_json;

namespace {

struct CmdResult {
  int code;
  std::string out;
};

CmdResult run_cli(const std::string& args) {
  std::string cmd = std::string(QORDER_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

ordered_json load_schema(const std::string& name) {
  std::ifstream in(std::string(QORDER_SCHEMA_DIR) + "/" + name);
  REQUIRE(in.good());
  return ordered_json::parse(in);
}

/*
 * Minimal structural validator covering the subset of JSON Schema the shipped
 * documents use: type (possibly a union), enum, required, properties,
 * additionalProperties: false, items, minItems/maxItems, oneOf, and $ref to
 * #/definitions/* or to a sibling schema file.
 */
bool validates(const ordered_json& doc, const ordered_json& schema,
               const ordered_json& root);

bool type_matches(const ordered_json& doc, const std::string& t) {
  if (t == "object") return doc.is_object();
  if (t == "array") return doc.is_array();
  if (t == "string") return doc.is_string();
  if (t == "integer") return doc.is_number_integer();
  if (t == "number") return doc.is_number();
  if (t == "boolean") return doc.is_boolean();
  if (t == "null") return doc.is_null();
  return false;
}

bool validates(const ordered_json& doc, const ordered_json& schema,
               const ordered_json& root) {
  if (schema.contains("$ref")) {
    std::string ref = schema["$ref"];
    if (ref.rfind("#/definitions/", 0) == 0) {
      return validates(doc, root["definitions"][ref.substr(14)], root);
    }
    ordered_json other = load_schema(ref);
    return validates(doc, other, other);
  }
  if (schema.contains("oneOf")) {
    int hits = 0;
    for (const auto& branch : schema["oneOf"])
      if (validates(doc, branch, root)) ++hits;
    return hits == 1;
  }
  if (schema.contains("enum")) {
    for (const auto& v : schema["enum"])
      if (doc == v) return true;
    return false;
  }
  if (schema.contains("type")) {
    const auto& t = schema["type"];
    bool ok = false;
    if (t.is_array()) {
      for (const auto& alt : t) ok = ok || type_matches(doc, alt);
    } else {
      ok = type_matches(doc, t);
    }
    if (!ok) return false;
  }
  if (doc.is_object()) {
    if (schema.contains("required"))
      for (const auto& key : schema["required"])
        if (!doc.contains(std::string(key))) return false;
    const ordered_json props =
        schema.contains("properties") ? schema["properties"] : ordered_json::object();
    if (schema.contains("additionalProperties") &&
        schema["additionalProperties"] == false)
      for (const auto& [key, value] : doc.items())
        if (!props.contains(key)) return false;
    for (const auto& [key, sub] : props.items())
      if (doc.contains(key) && !validates(doc[key], sub, root)) return false;
  }
  if (doc.is_array()) {
    if (schema.contains("minItems") && doc.size() < schema["minItems"]) return false;
    if (schema.contains("maxItems") && doc.size() > schema["maxItems"]) return false;
    if (schema.contains("items"))
      for (const auto& item : doc)
        if (!validates(item, schema["items"], root)) return false;
  }
  return true;
}

bool validates_file(const ordered_json& doc, const std::string& schema_name) {
  ordered_json schema = load_schema(schema_name);
  return validates(doc, schema, schema);
}

}  // namespace

TEST_CASE("cli: classify emits the module verdict document byte for byte") {
  CmdResult r = run_cli("classify --d 7 --group K8 --json");
  CHECK(r.code == 0);
  HyperbolicVerdict v = classify(SquareFreeD(Int(7)), GroupSpec::parse("K8"));
  CHECK(r.out == verdict_json(v).dump(2) + "\n");
  CHECK(validates_file(ordered_json::parse(r.out), "verdict.schema.json"));

  for (const char* args : {"classify --d 3 --group A[6] --json",
                           "classify --d -2 --group C3 --json",
                           "classify --d 5 --group C5 --json"}) {
    CmdResult c = run_cli(args);
    CHECK(c.code == 0);
    CHECK(validates_file(ordered_json::parse(c.out), "verdict.schema.json"));
  }
}

TEST_CASE("cli: unit constructions match the library and validate") {
  CmdResult gauss = run_cli("gauss-unit --d 7 --m 6 --norm -1 --json");
  CHECK(gauss.code == 0);
  UnitRecord rec = gauss_unit(SquareFreeD(Int(7)), Int(6), -1);
  CHECK(gauss.out == unit_record_json(rec).dump(2) + "\n");
  CHECK(validates_file(ordered_json::parse(gauss.out), "unit_record.schema.json"));

  for (const char* args :
       {"pell-unit --d 7 --sign lower --json", "two-unit --d 23 --json",
        "three-unit --d 7 --json", "two-unit --d 7 --p 8 --m -3 --xi j --psi 1 --json"}) {
    CmdResult r = run_cli(args);
    CHECK(r.code == 0);
    CHECK(validates_file(ordered_json::parse(r.out), "unit_record.schema.json"));
  }

  CmdResult sunits = run_cli("s-units --d 7 --json");
  CHECK(sunits.code == 0);
  ordered_json arr = ordered_json::parse(sunits.out);
  REQUIRE(arr.is_array());
  CHECK(arr.size() == 2);
  for (const auto& item : arr)
    CHECK(validates_file(item, "unit_record.schema.json"));
}

TEST_CASE("cli: text output re-parses to the constructed unit") {
  SquareFreeD d7{Int(7)};
  struct Case {
    const char* args;
    Quaternion expected;
  };
  std::vector<Case> cases = {
      {"gauss-unit --d 7 --m 6 --norm -1", gauss_unit(d7, Int(6), -1).unit},
      {"pell-unit --d 7", pell_unit(d7, fundamental_pell(Int(7)), PellSign::Upper).unit},
      {"two-unit --d 7", two_unit(d7, fundamental_pell(Int(7)),
                                  BasisPair{Basis::I, Basis::One}).unit},
      {"three-unit --d 7",
       pell_three_unit(d7, Int(8), Int(4),
                       BasisTriple{Basis::One, Basis::I, Basis::J}).unit}};
  for (const Case& c : cases) {
    CmdResult r = run_cli(c.args);
    CHECK(r.code == 0);
    std::string first = r.out.substr(0, r.out.find('\n'));
    CHECK(parse_unit(first, d7) == c.expected);
  }

  CmdResult z = run_cli("zero-divisor --d 10 --json");
  ordered_json doc = ordered_json::parse(z.out);
  CHECK(validates_file(doc, "zero_divisor.schema.json"));
  Quaternion elt = parse_unit(doc["element"], SquareFreeD(Int(10)));
  CHECK(elt.norm().is_zero());
}

TEST_CASE("cli: verify output lines") {
  CmdResult ok = run_cli("verify --d 7 --unit 6s+15i+5j+1k");
  CHECK(ok.code == 0);
  CHECK(ok.out == "unit of H(R), norm -1, support {1,i,j,k}, infinite order\n");

  CmdResult js = run_cli("verify --d 7 --unit 6s+15i+5j+1k --json");
  CHECK(js.code == 0);
  ordered_json doc = ordered_json::parse(js.out);
  CHECK(validates_file(doc, "verify.schema.json"));
  CHECK(doc["torsion"]["kind"] == "infinite");

  CmdResult bad = run_cli("verify --d 7 --unit 1+1i --json");
  CHECK(bad.code == 1);
  ordered_json rej = ordered_json::parse(bad.out);
  CHECK(validates_file(rej, "verify.schema.json"));
  CHECK(rej["is_unit"] == false);
  CHECK(rej["eta"] == "2");
}

TEST_CASE("cli: torsion and fundamental-unit documents validate") {
  CmdResult fin = run_cli("torsion --d 1 --unit 1i --json");
  CHECK(fin.code == 0);
  ordered_json fdoc = ordered_json::parse(fin.out);
  CHECK(validates_file(fdoc, "torsion.schema.json"));
  CHECK(fdoc["kind"] == "finite");
  CHECK(fdoc["order"] == 4);

  CmdResult inf = run_cli("torsion --d 7 --unit 3s+8i --json");
  CHECK(ordered_json::parse(inf.out)["kind"] == "infinite");

  CmdResult f2 = run_cli("fundamental-unit --d 2 --json");
  ordered_json f2doc = ordered_json::parse(f2.out);
  CHECK(validates_file(f2doc, "pell_solution.schema.json"));
  CHECK(f2doc["negative"]["x"] == 1);
  CmdResult f7 = run_cli("fundamental-unit --d 7 --json");
  ordered_json f7doc = ordered_json::parse(f7.out);
  CHECK(validates_file(f7doc, "pell_solution.schema.json"));
  CHECK(f7doc["x"] == 8);
  CHECK(f7doc["negative"].is_null());
}

TEST_CASE("cli: freeness commands") {
  std::string pair = "free-pair --d 7 --u 3s+8i --v 3s+8j --max-m 64 --json";
  CmdResult a = run_cli(pair);
  CHECK(a.code == 0);
  ordered_json cert = ordered_json::parse(a.out);
  CHECK(validates_file(cert, "certificate.schema.json"));
  CHECK(cert["m"] == 1);
  CHECK(cert["generators"].size() == 2);
  CHECK(cert["circles"].size() == 4);
  CHECK(cert["cross_check"]["relations_found"] == 0);
  CHECK(cert["conjugation"] == ordered_json({{1, 1}, {1, 2}}));

  CmdResult b = run_cli(pair);
  CHECK(a.out == b.out);  // deterministic bytes

  CmdResult family = run_cli(
      "free-family --d 7 --unit 3s+8i --unit 3s+8j --unit 3s+8k --json");
  CHECK(family.code == 0);
  ordered_json fam = ordered_json::parse(family.out);
  CHECK(validates_file(fam, "certificate.schema.json"));
  CHECK(fam["circles"].size() == 6);

  CmdResult dup = run_cli("free-pair --d 7 --u 3s+8i --v 3s+8i --max-m 4 --json");
  CHECK(dup.code == 1);
  ordered_json nf = ordered_json::parse(dup.out);
  CHECK(validates_file(nf, "certificate.schema.json"));
  CHECK(nf["found"] == false);

  CmdResult rel = run_cli("relation-check --d 1 --unit 1i --max-len 4 --json");
  CHECK(rel.code == 0);
  ordered_json rdoc = ordered_json::parse(rel.out);
  CHECK(validates_file(rdoc, "relation.schema.json"));
  CHECK(rdoc["relation"] == "aaaa");

  CmdResult none = run_cli("relation-check --d 7 --unit 3s+8i --unit 3s+8j --max-len 6 --json");
  CHECK(none.code == 0);
  ordered_json ndoc = ordered_json::parse(none.out);
  CHECK(validates_file(ndoc, "relation.schema.json"));
  CHECK(ndoc["relation"].is_null());
}

TEST_CASE("cli: table over a small range") {
  CmdResult r = run_cli("table --d-min -2 --d-max 2 --json");
  CHECK(r.code == 0);
  ordered_json rows = ordered_json::parse(r.out);
  REQUIRE(rows.is_array());
  CHECK(rows.size() == 30);  // d in {-2, 1, 2} x 10 catalog groups
  for (const auto& row : rows)
    CHECK(validates_file(row, "verdict.schema.json"));
}

TEST_CASE("cli: exit codes") {
  CHECK(run_cli("bogus-command").code == 2);
  CHECK(run_cli("classify --d 7").code == 2);        // missing --group
  CHECK(run_cli("classify --d 7 --group K8 --what").code == 2);
  CHECK(run_cli("gauss-unit --d 7 --m 4 --norm -1").code == 1);  // not representable
  CHECK(run_cli("gauss-unit --d 5 --m 2 --norm 1").code == 1);   // wrong field class
  CHECK(run_cli("classify --d 12 --group C2").code == 1);        // not square-free
  CHECK(run_cli("verify --d 7 --unit ++3s").code == 1);          // malformed literal
  CHECK(run_cli("zero-divisor --d 7").code == 1);                // division ring
  CHECK(run_cli("--seed 7 s-units --d 7").code == 0);            // global no-op flag
}
