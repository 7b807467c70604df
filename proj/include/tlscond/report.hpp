#pragma once

#include "tlscond/condition.hpp"
#include "tlscond/iterative.hpp"
#include "tlscond/tls_solver.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace tlscond {

struct ConditionOptions {
  Method method = Method::svd;
  PowerSettings power;
  bool relative = false;
  bool bounds = true;
};

/// Computes K(L, A, b) with the chosen method, optionally its relative variant
/// and the K-bar / kappa upper bounds (kappa only for L = I).
ConditionReport compute_condition(const TlsProblem& p, const TlsSolution& sol,
                                  const ObservationMap& L, const ConditionOptions& opt = {});

// Flat report records rendered as JSON objects or CSV rows.
using Field = std::variant<std::monostate, double, std::int64_t, bool, std::string>;
using Record = std::vector<std::pair<std::string, Field>>;

enum class Format { json, csv };

Format parse_format(const std::string& name);

/// JSON: an array with one object per record. CSV: header from the first
/// record's keys, one line per record. Doubles use 17 significant digits;
/// null and non-finite numbers become JSON null / CSV "n/a".
void write_records(std::ostream& out, const std::vector<Record>& records, Format format);

Record to_record(const ConditionReport& r);

}  // namespace tlscond
