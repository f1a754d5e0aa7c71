#pragma once

#include <string>

#include "pmd/ingest.hpp"

namespace pmd {

// Module document: UTF-8 JSON with keys field_char (optional prime, default
// from PMD_FIELD_CHAR or 32003), poset (shape descriptor), dims (element id ->
// dimension, omitted ids are zero), maps (cover "src->dst" -> row-major
// entries, required whenever both endpoint dimensions are positive). Unknown
// keys are rejected; entries are reduced mod p on load; the parsed module must
// pass validate.
PersistenceModule parse_module(const std::string& text);
std::string serialize_module(const PersistenceModule& M);

// Spec document for `pmd gen intervals`: {"poset": ..., "carriers":
// [{"carrier": [...], "multiplicity": k}, ...], "scramble": bool}.
GeneratorSpec parse_interval_spec(const std::string& text);

// Spec document for `pmd gen sublevel|interlevel`: {"samples": [...]} plus
// "thresholds" (sublevel) or "s_grid"/"t_grid" (interlevel). Rationals are
// JSON integers or strings like "-7/2".
SampledFunction parse_function_spec(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

} // namespace pmd
