#include "nsatz/ideal_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "nsatz/parse.hpp"

namespace nsatz {

IdealFile parse_ideal_file(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw SyntaxError(std::string("invalid JSON: ") + e.what(), 0);
  }
  if (!j.is_object()) throw SyntaxError("ideal file must be a JSON object", 0);
  for (const auto& [key, value] : j.items())
    if (key != "vars" && key != "gens" && key != "order")
      throw SyntaxError("unknown ideal file key '" + key + "'", 0);
  if (!j.contains("vars") || !j["vars"].is_array())
    throw SyntaxError("ideal file needs a \"vars\" array", 0);
  if (!j.contains("gens") || !j["gens"].is_array())
    throw SyntaxError("ideal file needs a \"gens\" array", 0);

  IdealFile file;
  for (const auto& v : j["vars"]) {
    if (!v.is_string()) throw SyntaxError("\"vars\" entries must be strings", 0);
    std::string name = v.get<std::string>();
    if (!valid_variable_name(name))
      throw SyntaxError("invalid variable name '" + name + "'", 0);
    for (const auto& seen : file.vars)
      if (seen == name) throw SyntaxError("duplicate variable '" + name + "'", 0);
    file.vars.push_back(std::move(name));
  }
  for (const auto& g : j["gens"]) {
    if (!g.is_string()) throw SyntaxError("\"gens\" entries must be strings", 0);
    file.gens.push_back(g.get<std::string>());
  }
  if (j.contains("order")) {
    if (!j["order"].is_string()) throw SyntaxError("\"order\" must be a string", 0);
    std::string order = j["order"].get<std::string>();
    if (order != "lex" && order != "grlex" && order != "grevlex")
      throw SyntaxError("unknown order '" + order + "' (expected lex, grlex or grevlex)", 0);
    file.order = std::move(order);
  }
  return file;
}

IdealFile read_ideal_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SyntaxError("cannot open ideal file '" + path + "'", 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_ideal_file(buf.str());
  } catch (const SyntaxError& e) {
    throw SyntaxError(std::string(e.what()) + " [" + path + "]", e.position());
  }
}

MonomialOrder order_by_name(const std::string& name, std::vector<Variable> sequence) {
  if (name == "lex") return MonomialOrder::lex(std::move(sequence));
  if (name == "grlex") return MonomialOrder::grlex(std::move(sequence));
  if (name == "grevlex") return MonomialOrder::grevlex(std::move(sequence));
  throw SyntaxError("unknown order '" + name + "' (expected lex, grlex or grevlex)", 0);
}

Ideal load_ideal(const IdealFile& file) {
  std::vector<Variable> sequence;
  sequence.reserve(file.vars.size());
  for (const auto& name : file.vars) sequence.emplace_back(name);
  VarSet vars(sequence);
  MonomialOrder order = order_by_name(file.order.value_or("grevlex"), sequence);
  std::vector<Polynomial> gens;
  gens.reserve(file.gens.size());
  for (const auto& text : file.gens) gens.push_back(parse_poly(text, vars));
  return Ideal(std::move(gens), std::move(vars), std::move(order));
}

}  // namespace nsatz
