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

#ifndef CRASP_LUSTRE_TEXT_H_
#define CRASP_LUSTRE_TEXT_H_

#include <string>
#include <string_view>

#include "absl/status/statusor.h"
#include "crasp/lustre/ast.h"

namespace crasp::lustre {

// Kind 2 compatible Lustre text. The check, when present, is emitted as
//   --%PROPERTY "<property_name>" <expr>;
// followed by --%MAIN; inside the node body. Output is deterministic:
// locals and equations keep their order in the node.
std::string PrintNode(const Node& node);
std::string PrintExpr(const Expr& e);

// Reads back the single-node fragment produced by PrintNode, plus
// multi-name declarations ("var a, b : int;"), "--" and "(* *)" comments
// and a bare "check <expr>;" statement. Sorts of variables come from the
// declarations.
absl::StatusOr<Node> ParseNode(std::string_view text);

}  // namespace crasp::lustre

#endif  // CRASP_LUSTRE_TEXT_H_
