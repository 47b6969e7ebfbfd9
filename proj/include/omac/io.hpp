/*
 * Copyright 2026 the omac authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */
#ifndef OMAC_IO_HPP
#define OMAC_IO_HPP

#include <optional>
#include <string>

#include "omac/model.hpp"
#include "omac/oks.hpp"

namespace omac {

/// Versioned instance files (version 1). Kinds: omac_additive, omac_xos, oks.
/// All rationals are reduced "p/q" strings; loading a canonical file and
/// saving it again is a byte-identical round trip.
struct LoadedFile {
  std::string kind;
  std::optional<Instance> instance;  // omac_additive / omac_xos
  std::optional<OksInstance> oks;
};

std::string instance_to_json(const Instance& inst);
std::string oks_to_json(const OksInstance& oks);

void save_instance(const Instance& inst, const std::string& path);
void save_oks_instance(const OksInstance& oks, const std::string& path);

/// Parses either kind; throws std::runtime_error with the offending path,
/// field, and reason on schema violations (unknown kind, version mismatch,
/// malformed rationals, clause-length mismatch).
LoadedFile load_file(const std::string& path);
LoadedFile parse_file(const std::string& text, const std::string& origin = "<string>");

/// Loads and requires an OMAC instance (exits with an error for oks files).
Instance load_instance(const std::string& path);

}  // namespace omac

#endif  // OMAC_IO_HPP
