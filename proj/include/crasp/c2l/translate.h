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

#ifndef CRASP_C2L_TRANSLATE_H_
#define CRASP_C2L_TRANSLATE_H_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "crasp/core/ast.h"
#include "crasp/lustre/ast.h"

namespace crasp::c2l {

// Integer codes for the alphabet plus the two padding symbols. Letters get
// 0..n-1 in declaration order, then eos = n and eternity = n + 1.
class SymbolCodec {
 public:
  SymbolCodec() = default;
  explicit SymbolCodec(const Alphabet& alphabet);

  const Alphabet& alphabet() const { return alphabet_; }
  int64_t Code(Symbol s) const { return s; }
  std::optional<int64_t> CodeOf(const std::string& symbol) const;
  int64_t eos() const { return alphabet_.size(); }
  int64_t eternity() const { return alphabet_.size() + 1; }
  // Letter for a code, or nullopt for eos, eternity and unknown codes.
  std::optional<Symbol> Decode(int64_t code) const;

 private:
  Alphabet alphabet_;
};

// a_1 .. a_n eos eternity ..., truncated to `total` >= |w| + 1 values.
absl::StatusOr<std::vector<int64_t>> EncodeWord(const SymbolCodec& codec,
                                                const Word& w, int total);

// Inverse of EncodeWord on an input stream: letters up to the first eos.
// Fails if a code is not a letter before the first eos, or if the stream has
// no eos.
absl::StatusOr<Word> DecodeStream(const SymbolCodec& codec,
                                  std::span<const int64_t> stream);

// Allocates Lustre identifiers, avoiding keywords and earlier names.
class NameRegistry {
 public:
  NameRegistry();
  std::string Fresh(const std::string& base);
  bool Taken(const std::string& name) const { return taken_.count(name) > 0; }

 private:
  std::set<std::string> taken_;
};

// Validity guard equations over the input variable:
//   B_I    := I in Sigma' and (not (I = eternity) -> (not pre(I in {eos,
//             eternity}) or I = eternity))
//   B_Ihat := B_I -> (B_I and pre(B_Ihat))
struct InputGuard {
  std::string valid;          // B_I
  std::string valid_so_far;   // B_Ihat
  std::vector<lustre::VarDecl> locals;
  std::vector<lustre::Equation> equations;
};
InputGuard BuildInputGuard(const SymbolCodec& codec, const std::string& input,
                           NameRegistry& names);

struct TranslateOptions {
  // Windows #[rs,re] unfold into re nested pre; larger re is refused.
  int max_window_end = 64;
  // Prepended to every generated name.
  std::string prefix;
  std::string input = "I";
};

// Equations for one program. Only the input variable is shared with other
// fragments built from the same registry.
struct Fragment {
  std::vector<lustre::VarDecl> locals;
  std::vector<lustre::Equation> equations;
  std::map<std::string, std::string> rule_vars;  // C-RASP rule -> variable
  std::string acceptor;                          // variable of the last rule
};

absl::StatusOr<Fragment> TranslateProgram(const Program& p,
                                          const SymbolCodec& codec,
                                          const TranslateOptions& options,
                                          NameRegistry& names);

enum class CheckKind { kInclusion, kEquality, kUniversality, kEmptiness };

std::string ToString(CheckKind kind);
absl::StatusOr<CheckKind> ParseCheckKind(std::string_view text);
bool IsBinary(CheckKind kind);

// The check expression over acceptor variables `v1` (and `v2` for binary
// kinds); pre(v) is read at the eos position.
lustre::Expr BuildCheck(CheckKind kind, const SymbolCodec& codec,
                        const std::string& input,
                        const std::string& valid_so_far, const std::string& v1,
                        const std::string& v2 = "");

struct ProgramInfo {
  std::string name;
  std::string acceptor_rule;
  std::string acceptor_var;
  std::map<std::string, std::string> rule_vars;
};

// A complete node for one query: guard, one or two translated programs and
// the check. Acceptor variables are the node outputs.
struct TranslationUnit {
  CheckKind kind;
  SymbolCodec codec;
  lustre::Node node;
  std::string valid;
  std::string valid_so_far;
  std::vector<ProgramInfo> programs;
};

// `second` is required for inclusion and equality and must be absent
// otherwise. The programs must have the same symbol set; the second
// program's letters are coded by name.
absl::StatusOr<TranslationUnit> BuildUnit(CheckKind kind, const Program& first,
                                          const Program* second,
                                          const TranslateOptions& options = {});

}  // namespace crasp::c2l

#endif  // CRASP_C2L_TRANSLATE_H_
