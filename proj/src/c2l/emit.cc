// Copyright 2026 The C-RASP Tools Authors
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

#include "crasp/c2l/emit.h"

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "crasp/lustre/text.h"
#include "nlohmann/json.hpp"

namespace crasp::c2l {

using nlohmann::ordered_json;

std::string EmitLustre(const TranslationUnit& unit) {
  std::string out = absl::StrCat("-- ", ToString(unit.kind), " check");
  for (const ProgramInfo& p : unit.programs) absl::StrAppend(&out, " ", p.name);
  absl::StrAppend(&out, "\n-- codes:");
  const Alphabet& a = unit.codec.alphabet();
  for (Symbol s = 0; s < a.size(); ++s) {
    absl::StrAppend(&out, " ", a.name(s), "=", unit.codec.Code(s));
  }
  absl::StrAppend(&out, " eos=", unit.codec.eos(),
                  " eternity=", unit.codec.eternity(), "\n\n");
  absl::StrAppend(&out, lustre::PrintNode(unit.node));
  return out;
}

std::string EmitSidecar(const TranslationUnit& unit) {
  ordered_json j;
  j["format"] = "crasp-lustre-sidecar";
  j["version"] = 1;
  j["kind"] = ToString(unit.kind);
  j["node"] = unit.node.name;
  j["input"] = unit.node.input;
  j["property"] = unit.node.property_name;
  ordered_json codes = ordered_json::array();
  const Alphabet& a = unit.codec.alphabet();
  for (Symbol s = 0; s < a.size(); ++s) {
    codes.push_back({{"symbol", a.name(s)}, {"code", unit.codec.Code(s)}});
  }
  j["codec"] = {{"symbols", codes},
                {"eos", unit.codec.eos()},
                {"eternity", unit.codec.eternity()}};
  j["guard"] = {{"valid", unit.valid}, {"valid_so_far", unit.valid_so_far}};
  ordered_json programs = ordered_json::array();
  for (const ProgramInfo& p : unit.programs) {
    ordered_json rules = ordered_json::object();
    for (const auto& [rule, var] : p.rule_vars) rules[rule] = var;
    programs.push_back({{"name", p.name},
                        {"acceptor_rule", p.acceptor_rule},
                        {"acceptor_var", p.acceptor_var},
                        {"rules", rules}});
  }
  j["programs"] = programs;
  return j.dump(2) + "\n";
}

absl::StatusOr<Sidecar> ParseSidecar(std::string_view text) {
  try {
    nlohmann::json j = nlohmann::json::parse(text);
    if (j.at("format") != "crasp-lustre-sidecar") {
      return absl::InvalidArgumentError("not a crasp-lustre sidecar");
    }
    Sidecar s;
    s.kind = j.at("kind").get<std::string>();
    s.node = j.at("node").get<std::string>();
    s.input = j.at("input").get<std::string>();
    s.property = j.at("property").get<std::string>();
    const nlohmann::json& codec = j.at("codec");
    std::vector<std::string> symbols;
    for (const nlohmann::json& e : codec.at("symbols")) {
      if (e.at("code").get<int64_t>() != static_cast<int64_t>(symbols.size())) {
        return absl::InvalidArgumentError("codec codes must be 0..n-1 in order");
      }
      symbols.push_back(e.at("symbol").get<std::string>());
    }
    absl::StatusOr<Alphabet> a = Alphabet::Create(symbols);
    if (!a.ok()) return a.status();
    s.codec = SymbolCodec(*a);
    if (codec.at("eos").get<int64_t>() != s.codec.eos() ||
        codec.at("eternity").get<int64_t>() != s.codec.eternity()) {
      return absl::InvalidArgumentError("unexpected eos/eternity codes");
    }
    for (const nlohmann::json& p : j.at("programs")) {
      ProgramInfo info;
      info.name = p.at("name").get<std::string>();
      info.acceptor_rule = p.at("acceptor_rule").get<std::string>();
      info.acceptor_var = p.at("acceptor_var").get<std::string>();
      info.rule_vars =
          p.at("rules").get<std::map<std::string, std::string>>();
      s.programs.push_back(std::move(info));
    }
    return s;
  } catch (const nlohmann::json::exception& e) {
    return absl::InvalidArgumentError(
        absl::StrCat("sidecar: ", std::string(e.what())));
  }
}

}  // namespace crasp::c2l
