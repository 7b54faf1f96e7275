#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "permcoh/permcoh.hpp"

namespace {

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw permcoh::Error("cannot open " + path);
    ss << in.rdbuf();
  }
  return ss.str();
}

// Splits "path#name" into the script path and a morphism binding name.
std::pair<std::string, std::string> split_ref(const std::string& ref) {
  auto pos = ref.rfind('#');
  if (pos == std::string::npos || pos + 1 == ref.size())
    throw permcoh::Error("expected <file#morphism>, got " + ref);
  return {ref.substr(0, pos), ref.substr(pos + 1)};
}

const permcoh::Term& find_morphism(const permcoh::Script& script, const std::string& name) {
  auto it = script.morphisms.find(name);
  if (it == script.morphisms.end())
    throw permcoh::Error("script binds no morphism named " + name);
  return it->second;
}

int run_check(const std::string& file, bool json) {
  permcoh::Script script = permcoh::parse_script(read_input(file));
  permcoh::Report report = permcoh::run_script(script);
  std::cout << permcoh::emit_report(report, json ? permcoh::ReportFormat::Json
                                                 : permcoh::ReportFormat::Text);
  if (json) std::cout << "\n";
  return report.exit_status;
}

int run_parity(const std::string& gen, const std::string& ref, bool json) {
  auto [file, name] = split_ref(ref);
  permcoh::Script script = permcoh::parse_script(read_input(file));
  const permcoh::Term& t = find_morphism(script, name);
  permcoh::require_well_typed(t);
  permcoh::Parity p = permcoh::a_parity(t, gen);
  if (json) {
    nlohmann::ordered_json doc;
    doc["generator"] = gen;
    doc["morphism"] = name;
    doc["parity"] = permcoh::to_string(p);
    std::cout << doc.dump() << "\n";
  } else {
    std::cout << permcoh::to_string(p) << "\n";
  }
  return 0;
}

int run_perm(const std::string& gen, const std::string& ref, bool json) {
  auto [file, name] = split_ref(ref);
  permcoh::Script script = permcoh::parse_script(read_input(file));
  const permcoh::Term& t = find_morphism(script, name);
  permcoh::require_well_typed(t);
  const auto& reg = *script.registry;
  if (reg.invertible(reg.index_of(gen)))
    throw permcoh::Error("perm needs a plain generator; " + gen + " is invertible");
  permcoh::Permutation p = permcoh::a_permutation(t, gen);
  if (json) {
    nlohmann::ordered_json doc;
    doc["generator"] = gen;
    doc["morphism"] = name;
    auto arr = nlohmann::ordered_json::array();
    for (int v : p.images()) arr.push_back(v + 1);
    doc["perm"] = std::move(arr);
    std::cout << doc.dump() << "\n";
  } else {
    std::cout << p.str() << "\n";
  }
  return 0;
}

int run_fmt(const std::string& file) {
  permcoh::Script script = permcoh::parse_script(read_input(file));
  std::cout << permcoh::render_script(script);
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"equality checker for formal morphisms in free permutative categories"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "emit JSON instead of text");

  std::string check_file;
  auto* check = app.add_subcommand("check", "run a script and report its checks");
  check->add_option("file", check_file, "script file, or - for stdin")->required();

  std::string parity_gen, parity_ref;
  auto* parity = app.add_subcommand("parity", "print the parity of a bound morphism");
  parity->add_option("--gen", parity_gen, "invertible generator")->required();
  parity->add_option("ref", parity_ref, "<file#morphism>")->required();

  std::string perm_gen, perm_ref;
  auto* perm = app.add_subcommand("perm", "print the permutation of a bound morphism");
  perm->add_option("--gen", perm_gen, "plain generator")->required();
  perm->add_option("ref", perm_ref, "<file#morphism>")->required();

  std::string fmt_file;
  auto* fmt = app.add_subcommand("fmt", "reprint a script in canonical form");
  fmt->add_option("file", fmt_file, "script file, or - for stdin")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return run_check(check_file, json);
    if (parity->parsed()) return run_parity(parity_gen, parity_ref, json);
    if (perm->parsed()) return run_perm(perm_gen, perm_ref, json);
    if (fmt->parsed()) return run_fmt(fmt_file);
  } catch (const permcoh::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const permcoh::TypeCheckError& e) {
    std::cerr << "type error: " << e.what() << "\n";
    return 2;
  } catch (const permcoh::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
