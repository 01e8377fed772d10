#pragma once

#include <string>
#include <variant>
#include <vector>

#include "mbqc/angle.hpp"
#include "mbqc/dep_expr.hpp"
#include "mbqc/geometry.hpp"

namespace mbqc {

// One-way pattern commands, stored in execution order (first executed first).
// The paper's right-to-left operator products must be reversed on entry.

struct Prepare {
  std::string qubit;  // fresh qubit in |+>
};
struct Entangle {
  std::string a, b;  // CZ
};
struct MeasureXY {
  std::string qubit;
  Angle angle;   // default measurement angle
  DepExpr sign;  // flips the sign of the angle
  DepExpr pi;    // adds pi to the angle
};
struct MeasureYZ {
  std::string qubit;
  Angle angle;
  DepExpr sign;
  DepExpr pi;
};
struct MeasureZ {
  std::string qubit;
};
struct CorrectX {
  std::string qubit;
  DepExpr dep;
};
struct CorrectZ {
  std::string qubit;
  DepExpr dep;
};
struct Shift {
  std::string qubit;  // toggles the result bit s[qubit]
  DepExpr dep;
};
struct TraceOut {
  std::string qubit;
};

using Command = std::variant<Prepare, Entangle, MeasureXY, MeasureYZ, MeasureZ,
                             CorrectX, CorrectZ, Shift, TraceOut>;

struct MeasurementPattern {
  std::vector<Command> commands;

  MeasurementPattern() = default;
  explicit MeasurementPattern(std::vector<Command> cmds) : commands(std::move(cmds)) {}

  void push(Command c) { commands.push_back(std::move(c)); }
  void append(const MeasurementPattern& p) {
    commands.insert(commands.end(), p.commands.begin(), p.commands.end());
  }
  std::size_t size() const { return commands.size(); }
};

struct Diagnostic {
  std::size_t index;  // offending command position
  std::string rule;

  std::string str() const { return "command " + std::to_string(index) + ": " + rule; }
};

// Well-formedness per the type-composition discipline: a qubit is prepared at
// most once, never operated on after its measurement/trace-out, never
// prepared after prior use; dependencies (and Shift targets) may only
// reference result bits of measurements earlier in the list.
std::vector<Diagnostic> validate_pattern(const MeasurementPattern& p);

// prepare* entangle* (measure|shift)* correct*
bool is_standard_form(const MeasurementPattern& p);

// Geometry underlying the pattern: vertices = qubits touched, edges = parity
// of Entangle commands, I = qubits never prepared, O = qubits never
// measured/traced out, planes from the measurement command kinds.
// Throws InvalidPattern if validation fails.
Geometry pattern_geometry(const MeasurementPattern& p);

std::string command_str(const Command& c);

}  // namespace mbqc
