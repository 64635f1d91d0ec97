#pragma once

#include <string>
#include <vector>

#include "tq/model.hpp"

namespace tq {

struct Diagnostic {
    int line = 0;  // 1-based; 0 when the location is the file as a whole
    int col = 0;
    std::string message;
};

// A parsed and resolved model file: parameter references in rules are
// already substituted, explicit gram entries are Hermitian-filled.
struct ModelConfig {
    std::vector<std::string> generators;
    std::map<std::string, Rational> params;
    std::map<std::pair<int, int>, NcPoly> rules;
    GramKind gram_kind = GramKind::bargmann;
    std::map<MonoPair, Scalar, MonoPairLess> gram_entries;
    int degree = 8;
    int dmax = 2;

    bool operator==(const ModelConfig&) const = default;
};

struct ParseResult {
    ModelConfig config;
    std::vector<Diagnostic> diagnostics;

    bool ok() const { return diagnostics.empty(); }
};

// Total: always returns, with diagnostics carrying line/column on any
// failure. run_confluence controls whether the straightening rules are also
// checked for confluence as part of validation; the `check` command turns
// that off so it can report the overlap witness itself.
ParseResult parse_model(const std::string& text, bool run_confluence = true);

// Canonical text form. parse_model(render_model(c)) reproduces c exactly.
std::string render_model(const ModelConfig& config);

// Presentation + gram data + truncation settings, ready for the operator
// layer. The config must have parsed clean.
Model build_model(const ModelConfig& config);

// Symbol expression for `quantize`: juxtaposed generator letters with an
// optional * suffix, in anti-Wick shape (every plain letter before every
// starred one). Appends diagnostics and returns zero on failure.
SymbolElem parse_symbol_expr(const std::string& text, const ModelConfig& config,
                             std::vector<Diagnostic>& diags);

}  // namespace tq
