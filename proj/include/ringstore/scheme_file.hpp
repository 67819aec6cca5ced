#pragma once

// Line-oriented text format for schemes:
//
//   RINGSTORE v1
//   n=<int> alpha=<int> M=<int> q=<prime>
//   G=
//   <M rows of n*alpha space-separated integers in [0, q)>
//
// Every line ends with LF; no trailing spaces.

#include <filesystem>
#include <string>
#include <string_view>

#include "ringstore/scheme.hpp"

namespace ringstore {

std::string scheme_serialize(const Scheme& s);

// Throws ParseError (message starts with "line L, column C:") for malformed
// text, including a non-prime q, and InvariantViolation when the matrix does
// not describe a valid scheme.
Scheme scheme_parse(std::string_view text);

Scheme read_scheme_file(const std::filesystem::path& path);
void write_scheme_file(const std::filesystem::path& path, const Scheme& s);

}  // namespace ringstore
