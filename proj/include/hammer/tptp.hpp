// TPTP FOF serialization, the matching reader for our own dialect, and SZS
// result parsing.
#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "hammer/fol.hpp"

namespace hammer {

// Deterministic TPTP FOF emission. Identifier mangling: first letter
// lowercased, characters outside [A-Za-z0-9_] replaced by '_', leading
// underscores stripped; collisions (including with the reserved p/t/ap)
// resolved by appending _2, _3, ... in first-come order. Labels are emitted
// verbatim, single-quoted when not already a TPTP lower word.
std::string to_tptp(const Problem& p);

// Reads back files produced by to_tptp (and hand-written tests in the same
// dialect). Not a general TPTP parser.
Problem tptp_read(const std::string& text);

enum class AtpStatus { Theorem, CounterSatisfiable, Timeout, GaveUp, Error };

struct AtpResult {
  AtpStatus status = AtpStatus::Error;
  std::vector<std::string> used_axioms;  // nonempty only for Theorem
  std::chrono::milliseconds wall_time{0};
  std::string detail;  // raw output or error description
};

std::string status_name(AtpStatus s);

// Recognizes "SZS status ..." lines and recovers cited axiom labels from
// fof(label, axiom, ...) lines and file(..., label) terms in proof output.
AtpResult parse_szs(const std::string& output);

}  // namespace hammer
